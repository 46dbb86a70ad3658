#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gtwist/cyclotomic.hpp"

namespace gtwist {

// Word in the free monoid on generator indices; the empty word is the unit.
using Word = std::vector<int>;

// Graded-lexicographic order: first by length, then lexicographically by
// generator index (the file listing order fixes the precedence).
struct DeglexLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

inline Word word_concat(const Word& a, const Word& b) {
    Word r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

// Sparse linear combination of words with exact cyclotomic coefficients.
// Zero coefficients are never stored.
class Element {
public:
    using Terms = std::map<Word, Cyc, DeglexLess>;

    Element() = default;

    static Element zero() { return Element(); }
    static Element unit() { return monomial(Word{}, Cyc(1)); }
    static Element monomial(Word w, Cyc c = Cyc(1)) {
        Element e;
        if (!c.is_zero()) e.terms_.emplace(std::move(w), std::move(c));
        return e;
    }
    static Element scalar(const Cyc& c) { return monomial(Word{}, c); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(const Word& w, const Cyc& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(w, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Element operator+(const Element& o) const {
        Element r = *this;
        for (const auto& [w, c] : o.terms_) r.add_term(w, c);
        return r;
    }
    Element operator-(const Element& o) const {
        Element r = *this;
        for (const auto& [w, c] : o.terms_) r.add_term(w, -c);
        return r;
    }
    Element operator-() const {
        Element r;
        for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
        return r;
    }
    Element scaled(const Cyc& c) const {
        Element r;
        if (c.is_zero()) return r;
        for (const auto& [w, k] : terms_) r.terms_.emplace(w, k * c);
        return r;
    }

    bool operator==(const Element& o) const { return terms_ == o.terms_; }
    bool operator!=(const Element& o) const { return !(*this == o); }

    // Largest word in the monomial order (requires nonzero element).
    const Word& leading_word() const {
        if (terms_.empty()) throw std::domain_error("leading term of zero");
        return terms_.rbegin()->first;
    }
    const Cyc& leading_coeff() const {
        if (terms_.empty()) throw std::domain_error("leading term of zero");
        return terms_.rbegin()->second;
    }

private:
    Terms terms_;
};

}  // namespace gtwist
