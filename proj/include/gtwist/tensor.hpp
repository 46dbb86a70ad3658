#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "gtwist/presentation.hpp"

namespace gtwist {

// Leg-wise product used when multiplying tensors; defaults to the plain
// presentation product but may be a twisted product.
using MulFn = std::function<Element(const Element&, const Element&)>;

inline MulFn plain_mul(const Presentation& p) {
    return [&p](const Element& a, const Element& b) { return p.multiply(a, b); };
}

// Sparse element of a two-fold tensor product; each leg a normal-form word.
class Tensor2 {
public:
    using Key = std::pair<Word, Word>;
    using Terms = std::map<Key, Cyc>;

    Tensor2() = default;

    static Tensor2 simple(Word a, Word b, Cyc c = Cyc(1)) {
        Tensor2 t;
        t.add_term(std::move(a), std::move(b), std::move(c));
        return t;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(Word a, Word b, const Cyc& c) {
        if (c.is_zero()) return;
        Key k{std::move(a), std::move(b)};
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(std::move(k), c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Tensor2 operator+(const Tensor2& o) const {
        Tensor2 r = *this;
        for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, c);
        return r;
    }
    Tensor2 operator-(const Tensor2& o) const {
        Tensor2 r = *this;
        for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, -c);
        return r;
    }
    Tensor2 scaled(const Cyc& c) const {
        Tensor2 r;
        for (const auto& [k, v] : terms_) r.add_term(k.first, k.second, v * c);
        return r;
    }

    bool operator==(const Tensor2& o) const { return terms_ == o.terms_; }
    bool operator!=(const Tensor2& o) const { return !(*this == o); }

    // Componentwise product, each leg reduced by the supplied product map.
    static Tensor2 multiply(const Tensor2& s, const Tensor2& t, const MulFn& mul_a,
                            const MulFn& mul_b) {
        Tensor2 out;
        for (const auto& [ks, cs] : s.terms_) {
            for (const auto& [kt, ct] : t.terms_) {
                Element a = mul_a(Element::monomial(ks.first), Element::monomial(kt.first));
                Element b = mul_b(Element::monomial(ks.second), Element::monomial(kt.second));
                Cyc c = cs * ct;
                for (const auto& [wa, ca] : a.terms())
                    for (const auto& [wb, cb] : b.terms())
                        out.add_term(wa, wb, c * ca * cb);
            }
        }
        return out;
    }

    // Reduce both legs to normal form under the given presentations.
    Tensor2 reduced(const Presentation& pa, const Presentation& pb) const {
        Tensor2 out;
        for (const auto& [k, c] : terms_) {
            Element a = pa.normal_form(k.first);
            Element b = pb.normal_form(k.second);
            for (const auto& [wa, ca] : a.terms())
                for (const auto& [wb, cb] : b.terms()) out.add_term(wa, wb, c * ca * cb);
        }
        return out;
    }

private:
    Terms terms_;
};

// Three-fold analogue, used only by coassociativity checks.
class Tensor3 {
public:
    using Key = std::tuple<Word, Word, Word>;
    using Terms = std::map<Key, Cyc>;

    const Terms& terms() const { return terms_; }

    void add_term(Word a, Word b, Word c, const Cyc& v) {
        if (v.is_zero()) return;
        Key k{std::move(a), std::move(b), std::move(c)};
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(std::move(k), v);
        } else {
            it->second = it->second + v;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    bool operator==(const Tensor3& o) const { return terms_ == o.terms_; }
    bool operator!=(const Tensor3& o) const { return !(*this == o); }

private:
    Terms terms_;
};

}  // namespace gtwist
