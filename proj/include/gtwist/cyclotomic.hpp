#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "gtwist/rational.hpp"

namespace gtwist {

namespace detail {

// Dense integer-coefficient polynomials used only for the cyclotomic
// modulus computation.
using ZPoly = std::vector<Rat>;  // rational coeffs, exact division below

inline ZPoly zp_trim(ZPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

inline ZPoly zp_xn_minus_1(long n) {
    ZPoly p(static_cast<std::size_t>(n) + 1, Rat(0));
    p[0] = -1;
    p[static_cast<std::size_t>(n)] = 1;
    return p;
}

// Exact polynomial division (remainder must be zero).
inline ZPoly zp_div_exact(ZPoly num, const ZPoly& den) {
    if (den.empty()) throw std::logic_error("polynomial division by zero");
    ZPoly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Rat(0));
    while (num.size() >= den.size()) {
        Rat lead = num.back() / den.back();
        std::size_t shift = num.size() - den.size();
        q[shift] = lead;
        for (std::size_t i = 0; i < den.size(); ++i)
            num[shift + i] -= lead * den[i];
        num = zp_trim(std::move(num));
        if (num.empty()) break;
        if (num.size() < den.size())
            throw std::logic_error("inexact polynomial division");
    }
    return zp_trim(std::move(q));
}

// Remainder of num modulo the monic polynomial mod.
inline ZPoly zp_rem(ZPoly num, const ZPoly& mod) {
    while (num.size() >= mod.size()) {
        Rat lead = num.back();  // mod is monic
        std::size_t shift = num.size() - mod.size();
        for (std::size_t i = 0; i < mod.size(); ++i)
            num[shift + i] -= lead * mod[i];
        num = zp_trim(std::move(num));
    }
    return num;
}

inline ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

inline long euler_phi(long n) {
    long result = n, m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

// N-th cyclotomic polynomial as a monic polynomial, via the recursive
// quotient (X^N - 1) / prod_{d|N, d<N} Phi_d.  Cached per conductor.
inline const ZPoly& cyclotomic_poly(long n) {
    static std::map<long, ZPoly> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    std::function<ZPoly(long)> compute = [&](long m) -> ZPoly {
        auto hit = cache.find(m);
        if (hit != cache.end()) return hit->second;
        ZPoly num = zp_xn_minus_1(m);
        for (long d = 1; d < m; ++d) {
            if (m % d == 0) num = zp_div_exact(std::move(num), compute(d));
        }
        cache[m] = num;
        return num;
    };
    compute(n);
    return cache[n];
}

// Gaussian elimination solve A x = b over the rationals; A given by
// columns.  Returns empty optional-like flag via bool; x in out.
inline bool solve_columns(const std::vector<std::vector<Rat>>& cols,
                          std::vector<Rat> rhs, std::vector<Rat>& out) {
    std::size_t rows = rhs.size(), ncols = cols.size();
    std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(ncols + 1, Rat(0)));
    for (std::size_t j = 0; j < ncols; ++j)
        for (std::size_t i = 0; i < rows && i < cols[j].size(); ++i)
            m[i][j] = cols[j][i];
    for (std::size_t i = 0; i < rows; ++i) m[i][ncols] = rhs[i];

    std::vector<long> pivot_col(rows, -1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && m[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[r]);
        Rat inv = Rat(1) / m[r][c];
        for (std::size_t j = c; j <= ncols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i != r && m[i][c] != 0) {
                Rat f = m[i][c];
                for (std::size_t j = c; j <= ncols; ++j) m[i][j] -= f * m[r][j];
            }
        }
        pivot_col[r] = static_cast<long>(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (m[i][ncols] != 0) return false;  // inconsistent
    out.assign(ncols, Rat(0));
    for (std::size_t i = 0; i < r; ++i)
        out[static_cast<std::size_t>(pivot_col[i])] = m[i][ncols];
    return true;
}

}  // namespace detail

// Exact element of a cyclotomic field Q(zeta_N), stored as coordinates in
// the power basis 1, zeta, ..., zeta^{phi(N)-1} modulo Phi_N.  The
// representation is canonical: the conductor is always reduced to the
// smallest N' | N containing the element, so equality is structural.
class Cyc {
public:
    Cyc() : conductor_(1), coeffs_(1, Rat(0)) {}
    Cyc(const Rat& r) : conductor_(1), coeffs_(1, r) {}
    Cyc(long n) : conductor_(1), coeffs_(1, Rat(n)) {}

    // zeta_N^k, reduced to canonical form.
    static Cyc root_of_unity(long k, long n) {
        if (n < 1) throw std::invalid_argument("conductor must be >= 1");
        k %= n;
        if (k < 0) k += n;
        detail::ZPoly p(static_cast<std::size_t>(k) + 1, Rat(0));
        p[static_cast<std::size_t>(k)] = 1;
        Cyc c;
        c.conductor_ = n;
        c.coeffs_ = reduce_mod_phi(std::move(p), n);
        c.minimize();
        return c;
    }

    static Cyc from_power_basis(long n, std::vector<Rat> coeffs) {
        if (n < 1) throw std::invalid_argument("conductor must be >= 1");
        Cyc c;
        c.conductor_ = n;
        c.coeffs_ = reduce_mod_phi(detail::zp_trim(std::move(coeffs)), n);
        c.minimize();
        return c;
    }

    long conductor() const { return conductor_; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (c != 0) return false;
        return true;
    }
    bool is_one() const { return *this == Cyc(1); }

    bool is_rational() const { return conductor_ == 1; }
    Rat rational_part() const {
        if (!is_rational()) throw std::domain_error("not a rational value");
        return coeffs_[0];
    }

    friend Cyc operator+(const Cyc& a, const Cyc& b) {
        auto [pa, pb, n] = align(a, b);
        for (std::size_t i = 0; i < pb.size(); ++i) pa[i] += pb[i];
        return from_reduced(n, std::move(pa));
    }
    friend Cyc operator-(const Cyc& a, const Cyc& b) {
        auto [pa, pb, n] = align(a, b);
        for (std::size_t i = 0; i < pb.size(); ++i) pa[i] -= pb[i];
        return from_reduced(n, std::move(pa));
    }
    Cyc operator-() const {
        Cyc r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }
    friend Cyc operator*(const Cyc& a, const Cyc& b) {
        auto [pa, pb, n] = align(a, b);
        auto prod = detail::zp_mul(detail::zp_trim(std::move(pa)),
                                   detail::zp_trim(std::move(pb)));
        return from_reduced(n, reduce_mod_phi(std::move(prod), n));
    }

    Cyc inverse() const {
        if (is_zero()) throw std::domain_error("division by zero");
        if (conductor_ == 1) {
            Cyc r;
            r.coeffs_[0] = Rat(1) / coeffs_[0];
            return r;
        }
        // Extended Euclid over Q[X] against Phi_N.
        detail::ZPoly r0 = detail::cyclotomic_poly(conductor_);
        detail::ZPoly r1 = detail::zp_trim(coeffs_);
        detail::ZPoly s0{}, s1{Rat(1)};
        while (!r1.empty() && r1.size() > 1) {
            auto [q, rem] = divmod(r0, r1);
            auto s2 = sub(s0, detail::zp_mul(q, s1));
            r0 = std::move(r1);
            r1 = std::move(rem);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        if (r1.empty()) throw std::logic_error("noninvertible cyclotomic element");
        Rat inv = Rat(1) / r1[0];
        for (auto& c : s1) c *= inv;
        Cyc out;
        out.conductor_ = conductor_;
        out.coeffs_ = reduce_mod_phi(std::move(s1), conductor_);
        out.minimize();
        return out;
    }

    friend Cyc operator/(const Cyc& a, const Cyc& b) { return a * b.inverse(); }

    Cyc pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        Cyc result(1), base = *this;
        while (e > 0) {
            if (e & 1) result = result * base;
            base = base * base;
            e >>= 1;
        }
        return result;
    }

    // Multiplicative order when this is a root of unity; 0 otherwise.
    long root_of_unity_order(long bound = 512) const {
        Cyc p = *this;
        for (long k = 1; k <= bound; ++k) {
            if (p.is_one()) return k;
            p = p * *this;
        }
        return 0;
    }

    bool operator==(const Cyc& o) const {
        return conductor_ == o.conductor_ && coeffs_ == o.coeffs_;
    }
    bool operator!=(const Cyc& o) const { return !(*this == o); }

    // Deterministic total order (conductor, then coordinates).
    bool operator<(const Cyc& o) const {
        if (conductor_ != o.conductor_) return conductor_ < o.conductor_;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            int c = cmp(coeffs_[i], o.coeffs_[i]);
            if (c != 0) return c < 0;
        }
        return false;
    }

    std::complex<double> to_complex() const {
        std::complex<double> z(0, 0);
        double two_pi = 6.283185307179586476925286766559;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            double c = coeffs_[i].get_d();
            double arg = two_pi * static_cast<double>(i) / static_cast<double>(conductor_);
            z += c * std::complex<double>(std::cos(arg), std::sin(arg));
        }
        return z;
    }

    std::string to_string() const {
        if (conductor_ == 1) return rat_to_string(coeffs_[0]);
        std::ostringstream os;
        os << "cyc(" << conductor_ << ";";
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (i) os << ",";
            os << rat_to_string(coeffs_[i]);
        }
        os << ")";
        return os.str();
    }

private:
    static std::vector<Rat> reduce_mod_phi(detail::ZPoly p, long n) {
        const auto& phi = detail::cyclotomic_poly(n);
        p = detail::zp_rem(std::move(p), phi);
        p.resize(phi.size() - 1, Rat(0));
        return p;
    }

    static Cyc from_reduced(long n, std::vector<Rat> coeffs) {
        Cyc c;
        c.conductor_ = n;
        c.coeffs_ = std::move(coeffs);
        c.minimize();
        return c;
    }

    // Embed both operands into Q(zeta_lcm) in reduced power-basis form.
    static std::tuple<std::vector<Rat>, std::vector<Rat>, long> align(const Cyc& a,
                                                                      const Cyc& b) {
        long n = std::lcm(a.conductor_, b.conductor_);
        return {a.embedded(n), b.embedded(n), n};
    }

    std::vector<Rat> embedded(long n) const {
        if (n == conductor_) return coeffs_;
        long step = n / conductor_;
        detail::ZPoly p(static_cast<std::size_t>((coeffs_.size() - 1) * step) + 1, Rat(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            p[i * static_cast<std::size_t>(step)] = coeffs_[i];
        return reduce_mod_phi(std::move(p), n);
    }

    // Reduce the conductor to the smallest divisor whose cyclotomic field
    // contains the element.
    void minimize() {
        if (conductor_ == 1) return;
        for (long d = 1; d < conductor_; ++d) {
            if (conductor_ % d != 0) continue;
            long step = conductor_ / d;
            long phid = detail::euler_phi(d);
            std::vector<std::vector<Rat>> cols;
            cols.reserve(static_cast<std::size_t>(phid));
            for (long j = 0; j < phid; ++j) {
                detail::ZPoly p(static_cast<std::size_t>(j * step) + 1, Rat(0));
                p[static_cast<std::size_t>(j * step)] = 1;
                cols.push_back(reduce_mod_phi(std::move(p), conductor_));
            }
            std::vector<Rat> sol;
            if (detail::solve_columns(cols, coeffs_, sol)) {
                conductor_ = d;
                coeffs_ = std::move(sol);
                coeffs_.resize(static_cast<std::size_t>(phid), Rat(0));
                return;
            }
        }
    }

    static std::pair<detail::ZPoly, detail::ZPoly> divmod(const detail::ZPoly& num,
                                                          const detail::ZPoly& den) {
        detail::ZPoly r = num;
        detail::ZPoly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0,
                        Rat(0));
        while (r.size() >= den.size() && !r.empty()) {
            Rat lead = r.back() / den.back();
            std::size_t shift = r.size() - den.size();
            q[shift] = lead;
            for (std::size_t i = 0; i < den.size(); ++i) r[shift + i] -= lead * den[i];
            r = detail::zp_trim(std::move(r));
        }
        return {detail::zp_trim(std::move(q)), std::move(r)};
    }

    static detail::ZPoly sub(const detail::ZPoly& a, const detail::ZPoly& b) {
        detail::ZPoly r(std::max(a.size(), b.size()), Rat(0));
        for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
        for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
        return detail::zp_trim(std::move(r));
    }

    friend struct CycParser;

    long conductor_;
    std::vector<Rat> coeffs_;
};

inline Cyc cyc_make(long k, long n) { return Cyc::root_of_unity(k, n); }

}  // namespace gtwist
