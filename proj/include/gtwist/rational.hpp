#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gtwist {

// Arbitrary-precision rational, the coefficient type inside cyclotomic
// scalars.  Thin alias over GMP; always kept canonical.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline std::string rat_to_string(const Rat& r) {
    return r.get_str();
}

// Parses "a", "-a" or "a/b".  Throws std::invalid_argument on junk.
inline Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    for (char c : s) {
        if (!(c == '-' || c == '/' || (c >= '0' && c <= '9')))
            throw std::invalid_argument("bad rational literal: " + s);
    }
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

// Dense univariate polynomial over the rationals, indexed by degree.
// Trailing zero coefficients are stripped so the representation is unique.
class RationalPoly {
public:
    RationalPoly() = default;
    explicit RationalPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static RationalPoly constant(const Rat& r) {
        return RationalPoly(std::vector<Rat>{r});
    }

    const std::vector<Rat>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }

    void set_coeff(std::size_t i, const Rat& v) {
        if (i >= c_.size()) c_.resize(i + 1, Rat(0));
        c_[i] = v;
        trim();
    }

    RationalPoly operator+(const RationalPoly& o) const {
        std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
        return RationalPoly(std::move(r));
    }

    RationalPoly operator-(const RationalPoly& o) const {
        std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
        return RationalPoly(std::move(r));
    }

    RationalPoly operator*(const RationalPoly& o) const {
        if (is_zero() || o.is_zero()) return RationalPoly();
        std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        return RationalPoly(std::move(r));
    }

    bool operator==(const RationalPoly& o) const { return c_ == o.c_; }

    RationalPoly truncated(std::size_t max_degree) const {
        std::vector<Rat> r(c_.begin(),
                           c_.begin() + std::min(c_.size(), max_degree + 1));
        return RationalPoly(std::move(r));
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rat> c_;
};

}  // namespace gtwist
