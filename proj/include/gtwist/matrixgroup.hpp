#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "gtwist/cyclotomic.hpp"
#include "gtwist/errors.hpp"
#include "gtwist/report.hpp"

namespace gtwist {

// 2x2 matrix over the cyclotomic scalars.
struct Mat2 {
    Cyc a, b, c, d;  // row-major: [a b; c d]

    static Mat2 identity() { return {Cyc(1), Cyc(0), Cyc(0), Cyc(1)}; }
    static Mat2 scalar(const Cyc& s) { return {s, Cyc(0), Cyc(0), s}; }
    static Mat2 diag(const Cyc& x, const Cyc& y) { return {x, Cyc(0), Cyc(0), y}; }
    static Mat2 antidiag(const Cyc& x, const Cyc& y) { return {Cyc(0), x, y, Cyc(0)}; }

    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c,
                c * o.b + d * o.d};
    }
    Mat2 operator-() const { return {-a, -b, -c, -d}; }

    Cyc det() const { return a * d - b * c; }

    Mat2 inverse() const {
        Cyc dt = det();
        if (dt.is_zero()) throw InputError("singular matrix in group file");
        Cyc i = dt.inverse();
        return {d * i, -(b * i), -(c * i), a * i};
    }

    bool operator==(const Mat2& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }
    bool operator<(const Mat2& o) const {
        if (!(a == o.a)) return a < o.a;
        if (!(b == o.b)) return b < o.b;
        if (!(c == o.c)) return c < o.c;
        return d < o.d;
    }

    bool is_diagonal() const { return b.is_zero() && c.is_zero(); }
    bool is_antidiagonal() const { return a.is_zero() && d.is_zero(); }

    std::string to_string() const {
        return "[" + a.to_string() + " " + b.to_string() + "; " + c.to_string() + " " +
               d.to_string() + "]";
    }
};

// Finite list of matrices; closure under product and inverse is verified,
// not assumed.
class MatrixGroup {
public:
    MatrixGroup() = default;
    explicit MatrixGroup(std::vector<Mat2> elems) : elems_(std::move(elems)) {}

    const std::vector<Mat2>& elements() const { return elems_; }
    std::size_t size() const { return elems_.size(); }

    int index_of(const Mat2& m) const {
        for (std::size_t i = 0; i < elems_.size(); ++i)
            if (elems_[i] == m) return static_cast<int>(i);
        return -1;
    }

    // Throws ValidationError with a witness pair when the list is not a
    // group (missing product or inverse, missing identity, duplicates).
    void validate() const {
        if (elems_.empty()) throw ValidationError("empty matrix list", "-");
        for (std::size_t i = 0; i < elems_.size(); ++i)
            for (std::size_t j = i + 1; j < elems_.size(); ++j)
                if (elems_[i] == elems_[j])
                    throw ValidationError("duplicate matrix in list",
                                          elems_[i].to_string());
        if (index_of(Mat2::identity()) < 0)
            throw ValidationError("matrix list has no identity", "I");
        for (const auto& m : elems_) {
            for (const auto& k : elems_) {
                if (index_of(m * k) < 0)
                    throw ValidationError("matrix list not closed under product",
                                          m.to_string() + " * " + k.to_string());
            }
            if (index_of(m.inverse()) < 0)
                throw ValidationError("matrix list not closed under inverse",
                                      m.to_string());
        }
    }

    std::size_t element_order(const Mat2& m) const {
        Mat2 p = m;
        for (std::size_t k = 1; k <= elems_.size(); ++k) {
            if (p == Mat2::identity()) return k;
            p = p * m;
        }
        throw std::logic_error("element order exceeds group size");
    }

private:
    std::vector<Mat2> elems_;
};

// The twisting automorphism of GL(2) on points, x = [a b; c d] |->
// [a q^{-1}b; q c d].
inline Mat2 twisting_automorphism(const Mat2& m, const Cyc& q) {
    Cyc qi = q.inverse();
    return {m.a, qi * m.b, q * m.c, m.d};
}

struct AdmissibilityReport {
    Report report;
    bool admissible = false;
    bool criterion_full = false;  // {x : Gamma.x in scalar-coset of x} == H
    bool twist_commutative = false;
};

// q-admissibility of a finite subgroup H of GL(2): the scalar subgroup
// generated by q is contained in H and H is stable under the twisting
// automorphism.  Also evaluates the coset criterion deciding whether the
// twisted function algebra O(H^{t,alpha}) is commutative (Gamma cyclic).
inline AdmissibilityReport check_admissible(const MatrixGroup& h, const Cyc& q) {
    h.validate();
    AdmissibilityReport out;
    out.report.title = "admissibility";

    long n = q.root_of_unity_order();
    if (n == 0) throw InputError("q must be a root of unity");

    // (a) scalar subgroup generated by q inside H.
    bool scalars_ok = true;
    std::string scalar_witness;
    std::vector<Cyc> qpowers;
    {
        Cyc p(1);
        for (long k = 0; k < n; ++k) {
            qpowers.push_back(p);
            if (h.index_of(Mat2::scalar(p)) < 0 && scalars_ok) {
                scalars_ok = false;
                scalar_witness = "missing scalar " + p.to_string();
            }
            p = p * q;
        }
    }
    out.report.add("scalar-subgroup-contained", scalars_ok, scalar_witness);

    // (b) stability under the twisting automorphism.
    bool stable = true;
    std::string stable_witness;
    for (const auto& m : h.elements()) {
        if (h.index_of(twisting_automorphism(m, q)) < 0) {
            stable = false;
            stable_witness = m.to_string();
            break;
        }
    }
    out.report.add("alpha-stable", stable, stable_witness);
    out.admissible = scalars_ok && stable;

    // (c) coset criterion: for every x in H and every power of the
    // automorphism, alpha^k(x) must be a q-power scalar multiple of x.
    bool full = true;
    std::string criterion_witness;
    for (const auto& m : h.elements()) {
        Mat2 cur = m;
        for (long k = 1; k < n; ++k) {
            cur = twisting_automorphism(cur, q);
            bool in_coset = false;
            for (const auto& z : qpowers) {
                if (cur == Mat2{z * m.a, z * m.b, z * m.c, z * m.d}) {
                    in_coset = true;
                    break;
                }
            }
            if (!in_coset) {
                full = false;
                criterion_witness = m.to_string();
                break;
            }
        }
        if (!full) break;
    }
    out.criterion_full = full;
    out.twist_commutative = full;
    out.report.add("coset-criterion-set-is-all", full, criterion_witness);
    out.report.add("twisted-algebra-commutative", out.twist_commutative,
                   full ? "" : "noncommutative witness " + criterion_witness);
    return out;
}

// Named gallery groups.
inline MatrixGroup group_pm_identity() {
    return MatrixGroup({Mat2::identity(), -Mat2::identity()});
}

inline MatrixGroup group_scalar_cyclic(long n) {
    std::vector<Mat2> e;
    for (long k = 0; k < n; ++k) e.push_back(Mat2::scalar(Cyc::root_of_unity(k, n)));
    return MatrixGroup(std::move(e));
}

inline MatrixGroup group_diag_cyclic(long n) {
    std::vector<Mat2> e;
    for (long k = 0; k < n; ++k)
        e.push_back(Mat2::diag(Cyc::root_of_unity(k, n), Cyc::root_of_unity(-k, n)));
    return MatrixGroup(std::move(e));
}

inline MatrixGroup group_quaternion8() {
    Cyc i = Cyc::root_of_unity(1, 4);
    std::vector<Mat2> e;
    Mat2 I = Mat2::identity();
    Mat2 mi = Mat2::diag(i, -i);
    Mat2 mj = Mat2::antidiag(Cyc(1), Cyc(-1));
    Mat2 mk = Mat2::antidiag(i, i);
    for (const Mat2& m : {I, mi, mj, mk}) {
        e.push_back(m);
        e.push_back(-m);
    }
    return MatrixGroup(std::move(e));
}

// Binary dihedral group of order 16: Q8 extended by diag(zeta_8,
// zeta_8^{-1}).
inline MatrixGroup group_binary_dihedral16() {
    std::vector<Mat2> e;
    for (long k = 0; k < 8; ++k) {
        Cyc z = Cyc::root_of_unity(k, 8);
        Cyc zi = Cyc::root_of_unity(-k, 8);
        e.push_back(Mat2::diag(z, zi));
        // j * diag(z, z^{-1}) with j = [0 1; -1 0].
        e.push_back(Mat2{Cyc(0), zi, -z, Cyc(0)});
    }
    return MatrixGroup(std::move(e));
}

}  // namespace gtwist
