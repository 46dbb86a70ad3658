#pragma once

#include <map>
#include <string>
#include <vector>

#include "gtwist/grading.hpp"
#include "gtwist/tau.hpp"
#include "gtwist/tensor.hpp"

namespace gtwist {

// Hopf structure on a graded presentation: coproduct, counit and antipode
// given on generators, extended (anti)multiplicatively.  The generator
// degree assignment plays the role of the cocentral homomorphism p,
// p(a) = eps(a) g for a of degree g.
struct HopfPresentation {
    Presentation base;
    std::vector<Tensor2> coproduct;  // per generator, element of A (x) A
    std::vector<Cyc> counit;         // per generator
    std::vector<Element> antipode;   // per generator

    const GradingGroup& group() const { return base.group(); }

    Tensor2 delta_word(const Word& w) const {
        Tensor2 acc = Tensor2::simple(Word{}, Word{});
        MulFn m = plain_mul(base);
        for (int gi : w)
            acc = Tensor2::multiply(acc, coproduct[static_cast<std::size_t>(gi)], m, m);
        return acc;
    }

    Tensor2 delta(const Element& e) const {
        Tensor2 out;
        for (const auto& [w, c] : e.terms()) out = out + delta_word(w).scaled(c);
        return out;
    }

    Cyc counit_word(const Word& w) const {
        Cyc c(1);
        for (int gi : w) c = c * counit[static_cast<std::size_t>(gi)];
        return c;
    }

    Cyc counit_of(const Element& e) const {
        Cyc acc(0);
        for (const auto& [w, c] : e.terms()) acc = acc + c * counit_word(w);
        return acc;
    }

    // Anti-multiplicative extension of the antipode.
    Element antipode_word(const Word& w) const {
        Element acc = Element::unit();
        for (auto it = w.rbegin(); it != w.rend(); ++it)
            acc = base.multiply(acc, antipode[static_cast<std::size_t>(*it)]);
        return acc;
    }

    Element antipode_of(const Element& e) const {
        Element out;
        for (const auto& [w, c] : e.terms()) out = out + antipode_word(w).scaled(c);
        return out;
    }

    void validate(std::size_t confluence_length = 6) const {
        base.validate(confluence_length);
        if (coproduct.size() != base.num_generators() ||
            counit.size() != base.num_generators() ||
            antipode.size() != base.num_generators())
            throw InputError("hopf structure tables incomplete");
        // Cocentrality: both legs of Delta(x) homogeneous of deg x.
        for (std::size_t i = 0; i < base.num_generators(); ++i) {
            const GroupVec& d = base.generators()[i].degree;
            for (const auto& [k, c] : coproduct[i].terms()) {
                if (base.word_degree(k.first) != d || base.word_degree(k.second) != d)
                    throw ValidationError("coproduct is not cocentral for the grading",
                                          base.generators()[i].name);
            }
            GroupVec ad;
            if (!base.is_homogeneous(antipode[i], &ad) ||
                (!antipode[i].is_zero() && ad != base.group().neg(d)))
                throw ValidationError("antipode does not map degree g to degree -g",
                                      base.generators()[i].name);
        }
        // Delta, eps, S well-defined on relations.
        for (const auto& r : base.rules()) {
            Tensor2 dl = delta_word(r.lhs).reduced(base, base);
            Tensor2 dr = delta(r.rhs).reduced(base, base);
            if (dl != dr)
                throw ValidationError("coproduct not well-defined on relation",
                                      base.word_to_string(r.lhs));
            if (counit_word(r.lhs) != counit_of(r.rhs))
                throw ValidationError("counit not well-defined on relation",
                                      base.word_to_string(r.lhs));
            Element sl = base.normal_form(antipode_word(r.lhs));
            Element sr = base.normal_form(antipode_of(r.rhs));
            if (sl != sr)
                throw ValidationError("antipode not well-defined on relation",
                                      base.word_to_string(r.lhs));
        }
    }
};

// Bounded verification of the Hopf axioms; returns a report rather than
// throwing, so corrupted inputs can be diagnosed with a witness.
inline Report check_hopf_axioms(const HopfPresentation& h, std::size_t word_bound = 4) {
    Report rep;
    rep.title = "hopf-axioms";
    const Presentation& p = h.base;
    MulFn m = plain_mul(p);

    // Coassociativity on generators.
    {
        bool ok = true;
        std::string wit;
        for (std::size_t i = 0; i < p.num_generators() && ok; ++i) {
            Tensor3 left, right;
            for (const auto& [k, c] : h.coproduct[i].terms()) {
                Tensor2 d1 = h.delta_word(k.first).reduced(p, p);
                for (const auto& [k1, c1] : d1.terms())
                    left.add_term(k1.first, k1.second, k.second, c * c1);
                Tensor2 d2 = h.delta_word(k.second).reduced(p, p);
                for (const auto& [k2, c2] : d2.terms())
                    right.add_term(k.first, k2.first, k2.second, c * c2);
            }
            if (left != right) {
                ok = false;
                wit = p.generators()[i].name;
            }
        }
        rep.add("coassociativity", ok, wit);
    }

    // Delta and eps are algebra maps on the defining relations.
    {
        bool ok = true;
        std::string wit;
        for (const auto& r : p.rules()) {
            if (h.delta_word(r.lhs).reduced(p, p) != h.delta(r.rhs).reduced(p, p) ||
                h.counit_word(r.lhs) != h.counit_of(r.rhs)) {
                ok = false;
                wit = p.word_to_string(r.lhs);
                break;
            }
        }
        rep.add("coproduct-algebra-map", ok, wit);
    }

    // Counit laws on all words up to the bound.
    {
        bool ok = true;
        std::string wit;
        for (const auto& w : p.normal_words(word_bound)) {
            Tensor2 d = h.delta_word(w).reduced(p, p);
            Element left, right;
            for (const auto& [k, c] : d.terms()) {
                left.add_term(k.second, c * h.counit_word(k.first));
                right.add_term(k.first, c * h.counit_word(k.second));
            }
            Element nf = p.normal_form(w);
            if (p.normal_form(left) != nf || p.normal_form(right) != nf) {
                ok = false;
                wit = p.word_to_string(w);
                break;
            }
        }
        rep.add("counit-laws", ok, wit);
    }

    // Antipode convolution law on generators and on length-2 words.
    {
        bool ok = true;
        std::string wit;
        std::vector<Word> test_words;
        for (std::size_t i = 0; i < p.num_generators(); ++i)
            test_words.push_back(Word{static_cast<int>(i)});
        for (std::size_t i = 0; i < p.num_generators(); ++i)
            for (std::size_t j = 0; j < p.num_generators(); ++j)
                test_words.push_back(Word{static_cast<int>(i), static_cast<int>(j)});
        for (const auto& w : test_words) {
            Tensor2 d = h.delta_word(w).reduced(p, p);
            Element left, right;
            for (const auto& [k, c] : d.terms()) {
                left = left +
                       p.multiply(h.antipode_word(k.first), Element::monomial(k.second))
                           .scaled(c);
                right = right +
                        p.multiply(Element::monomial(k.first), h.antipode_word(k.second))
                            .scaled(c);
            }
            Element expected = Element::scalar(h.counit_word(w));
            if (p.normal_form(left) != expected || p.normal_form(right) != expected) {
                ok = false;
                wit = p.word_to_string(w);
                break;
            }
        }
        rep.add("antipode-law", ok, wit);
    }

    // Kernel of p: A_g^+ is covered by A_g A_e^+ degreewise (finite
    // grading groups only; skipped otherwise).
    if (p.group().is_finite()) {
        bool ok = true;
        std::string wit;
        auto words = p.normal_words(word_bound);
        std::map<GroupVec, std::vector<Word>> by_degree;
        for (const auto& w : words) by_degree[p.word_degree(w)].push_back(w);
        std::map<Word, std::size_t, DeglexLess> index;
        std::size_t k = 0;
        for (const auto& w : words) index[w] = k++;
        auto e_it = by_degree.find(p.group().zero());
        for (const auto& [g, gw] : by_degree) {
            if (g == p.group().zero()) continue;
            std::vector<std::vector<Cyc>> span_rows;
            if (e_it != by_degree.end()) {
                for (const auto& u : gw) {
                    for (const auto& v : e_it->second) {
                        if (u.size() + v.size() > word_bound) continue;
                        // u (v - eps(v) 1) spans A_g A_e^+.
                        Element prod = p.normal_form(word_concat(u, v)) -
                                       p.normal_form(u).scaled(h.counit_word(v));
                        span_rows.push_back(detail::coords_on(prod, index));
                    }
                }
            }
            // Targets: w - eps(w) w0 for a fixed degree-g word w0 with
            // nonzero counit (exists by strongness of Hopf gradings).
            const Word* w0 = nullptr;
            for (const auto& w : gw)
                if (!h.counit_word(w).is_zero()) { w0 = &w; break; }
            for (const auto& w : gw) {
                if (w.size() + 1 > word_bound) continue;
                Element target = Element::monomial(w);
                if (w0 && !h.counit_word(w).is_zero())
                    target = target - Element::monomial(*w0).scaled(
                                          h.counit_word(w) * h.counit_word(*w0).inverse());
                if (target.is_zero()) continue;
                if (!in_row_span(span_rows, detail::coords_on(target, index))) {
                    ok = false;
                    wit = "A_(" + p.group().to_string(g) + ")^+ misses " +
                          p.word_to_string(w);
                    break;
                }
            }
            if (!ok) break;
        }
        rep.add("kernel-p-coverage", ok, wit);
    }

    return rep;
}

// Invariant cocentral action (p, alpha): a genuine action by Hopf algebra
// automorphisms preserving every homogeneous component.
struct InvariantCocentralAction {
    HopfPresentation hopf;
    TauMaps action;

    void validate() const {
        if (!action.is_genuine_action())
            throw ValidationError("cocentral action must be a genuine action", "tau flag");
        action.validate(hopf.base);
        // Coalgebra map on generators.
        const Presentation& p = hopf.base;
        MulFn m = plain_mul(p);
        for (const auto& g : p.group().elements()) {
            for (std::size_t i = 0; i < p.num_generators(); ++i) {
                Element ax = action.apply(p, g, Element::monomial(Word{(int)i}));
                // Delta(alpha(x)) vs (alpha (x) alpha) Delta(x).
                Tensor2 lhs = hopf.delta(ax).reduced(p, p);
                Tensor2 rhs;
                for (const auto& [k, c] : hopf.coproduct[i].terms()) {
                    Element a1 = action.apply(p, g, Element::monomial(k.first));
                    Element a2 = action.apply(p, g, Element::monomial(k.second));
                    for (const auto& [w1, c1] : a1.terms())
                        for (const auto& [w2, c2] : a2.terms())
                            rhs.add_term(w1, w2, c * c1 * c2);
                }
                if (lhs != rhs.reduced(p, p))
                    throw ValidationError("action is not a coalgebra map",
                                          p.generators()[i].name + " at g=" +
                                              p.group().to_string(g));
                if (hopf.counit_of(ax) != hopf.counit[i])
                    throw ValidationError("action does not preserve the counit",
                                          p.generators()[i].name);
            }
        }
    }
};

namespace detail {

inline Element expand_or_throw(const Presentation& p, const TauMaps& tau,
                               const Element& target, const std::string& what) {
    Element out;
    if (!expand_in_twisted_basis(p, tau, target, out))
        throw ValidationError("twisted basis expansion failed", what);
    return out;
}

}  // namespace detail

// Graded twisting A^{t,alpha}: same generators, degrees, coproduct and
// counit; product rules rewritten so that normal-form multiplication in the
// output agrees with the twisted product a .alpha b = a alpha_g(b) under
// the identification sum a_g |-> sum a_g (x) g; antipode becomes
// alpha_{g^{-1}} S on degree g.
inline HopfPresentation graded_twist(const InvariantCocentralAction& x,
                                     std::size_t confluence_length = 6) {
    x.validate();
    const Presentation& p = x.hopf.base;
    const TauMaps& tau = x.action;

    std::vector<Rule> new_rules;
    for (const auto& r : p.rules()) {
        Element twisted_value = tau_eval_word(p, tau, r.lhs);
        Element rhs = detail::expand_or_throw(p, tau, twisted_value,
                                              "rule " + p.word_to_string(r.lhs));
        // The expansion may mention the leading word itself with
        // coefficient zero only; it must not reappear.
        for (const auto& [w, c] : rhs.terms())
            if (w == r.lhs)
                throw ValidationError("twisted rule is not decreasing",
                                      p.word_to_string(r.lhs));
        new_rules.push_back({r.lhs, rhs});
    }

    Presentation twisted_base(p.group(), p.generators(), new_rules);
    twisted_base.set_reduction_budget(p.reduction_budget());
    twisted_base.validate(confluence_length);

    HopfPresentation out;
    out.base = std::move(twisted_base);
    out.coproduct = x.hopf.coproduct;
    out.counit = x.hopf.counit;
    out.antipode.resize(p.num_generators());
    for (std::size_t i = 0; i < p.num_generators(); ++i) {
        GroupVec gi = p.generators()[i].degree;
        Element s = x.hopf.antipode[i];
        Element twisted_s = tau.apply(p, p.group().neg(gi), s);
        out.antipode[i] = detail::expand_or_throw(
            p, tau, p.normal_form(twisted_s), "antipode of " + p.generators()[i].name);
    }
    out.validate(confluence_length);
    return out;
}

// Gamma-graded, alpha-stable ideal of a Hopf presentation, given by a
// finite list of homogeneous generators.
struct GradedHopfIdeal {
    std::vector<Element> generators;

    // Homogeneity plus alpha-stability of the generating set.  Stability
    // is checked by bounded-degree linear algebra: alpha_g(v) must lie in
    // the span of u * v_j * w over normal words with the length budget.
    void validate(const HopfPresentation& h, const TauMaps& action,
                  std::size_t length_bound = 6) const {
        const Presentation& p = h.base;
        for (const auto& v : generators) {
            GroupVec d;
            if (!p.is_homogeneous(p.normal_form(v), &d))
                throw ValidationError("ideal generator is not homogeneous",
                                      p.element_to_string(v));
        }
        auto words = p.normal_words(length_bound);
        std::map<Word, std::size_t, DeglexLess> index;
        std::size_t k = 0;
        for (const auto& w : words) index[w] = k++;
        std::vector<std::vector<Cyc>> span_rows;
        for (const auto& v : generators) {
            Element nv = p.normal_form(v);
            std::size_t vlen = 0;
            for (const auto& [w, c] : nv.terms()) vlen = std::max(vlen, w.size());
            for (const auto& u : words) {
                for (const auto& w : words) {
                    if (u.size() + vlen + w.size() > length_bound) continue;
                    Element prod = p.multiply(
                        p.multiply(Element::monomial(u), nv), Element::monomial(w));
                    span_rows.push_back(detail::coords_on(prod, index));
                }
            }
        }
        for (const auto& g : p.group().elements()) {
            for (const auto& v : generators) {
                Element av = p.normal_form(action.apply(p, g, p.normal_form(v)));
                if (!in_row_span(span_rows, detail::coords_on(av, index)))
                    throw ValidationError("ideal is not stable under the action",
                                          p.element_to_string(v) + " at g=" +
                                              p.group().to_string(g));
            }
        }
    }
};

// j(I): the same generating elements re-expressed in the twisted basis.
inline GradedHopfIdeal twist_ideal(const InvariantCocentralAction& x,
                                   const GradedHopfIdeal& ideal,
                                   std::size_t length_bound = 6) {
    ideal.validate(x.hopf, x.action, length_bound);
    const Presentation& p = x.hopf.base;
    GradedHopfIdeal out;
    for (const auto& v : ideal.generators) {
        out.generators.push_back(detail::expand_or_throw(
            p, x.action, p.normal_form(v), "ideal generator"));
    }
    return out;
}

// Multiplication table of a bounded filtration chart of the quotient of
// (pres, optionally twisted by tau) by the two-sided ideal generated by
// gens.  Products are expressed on the canonical RREF representatives.
// Used to verify that quotienting commutes with twisting.
class QuotientChart {
public:
    QuotientChart(const Presentation& p, const TauMaps* tau,
                  const std::vector<Element>& ideal_gens, std::size_t length_bound)
        : p_(p), tau_(tau), bound_(length_bound) {
        words_ = p.normal_words(bound_);
        std::size_t k = 0;
        for (const auto& w : words_) index_[w] = k++;
        // Ideal subspace within the filtration: spans of u * gen * w,
        // where the products are taken in the (possibly twisted) algebra.
        for (const auto& v : ideal_gens) {
            Element nv = reduce(v);
            std::size_t vlen = 0;
            for (const auto& [w, c] : nv.terms()) vlen = std::max(vlen, w.size());
            for (const auto& u : words_) {
                for (const auto& w : words_) {
                    if (u.size() + vlen + w.size() > bound_) continue;
                    Element prod =
                        mul(mul(Element::monomial(u), nv), Element::monomial(w));
                    ideal_rows_.push_back(detail::coords_on(prod, index_));
                }
            }
        }
        CycMatrix m(ideal_rows_.size(), index_.size());
        for (std::size_t i = 0; i < ideal_rows_.size(); ++i)
            for (std::size_t j = 0; j < index_.size(); ++j) m.at(i, j) = ideal_rows_[i][j];
        pivots_ = m.rref();
        rref_ = std::move(m);
    }

    // Canonical representative of the class of e.
    std::vector<Cyc> project(const Element& e) const {
        std::vector<Cyc> v = detail::coords_on(reduce(e), index_);
        for (std::size_t pi = 0; pi < pivots_.size(); ++pi) {
            std::size_t c = pivots_[pi];
            if (v[c].is_zero()) continue;
            Cyc f = v[c];
            for (std::size_t j = 0; j < index_.size(); ++j)
                v[j] = v[j] - f * rref_.at(pi, j);
        }
        return v;
    }

    std::vector<Cyc> product_class(const Word& u, const Word& v) const {
        return project(mul(Element::monomial(u), Element::monomial(v)));
    }

    Element mul(const Element& a, const Element& b) const {
        if (tau_) return tau_twist_multiply(p_, *tau_, a, b);
        return p_.multiply(a, b);
    }

    std::size_t dim() const { return index_.size() - pivots_.size(); }

private:
    Element reduce(const Element& e) const { return p_.normal_form(e); }

    const Presentation& p_;
    const TauMaps* tau_;
    std::size_t bound_;
    std::vector<Word> words_;
    std::map<Word, std::size_t, DeglexLess> index_;
    std::vector<std::vector<Cyc>> ideal_rows_;
    std::vector<std::size_t> pivots_;
    CycMatrix rref_;
};

// Structure constants of (A/I)^{t,abar} against A^{t,alpha}/j(I) on all
// word pairs within the bound.  The first quotient is computed in the
// underlying-space chart (twisted product modulo I), the second one from
// the twisted presentation modulo the re-expressed generators.
inline Report check_quotient_twist_commutes(const InvariantCocentralAction& x,
                                            const GradedHopfIdeal& ideal,
                                            std::size_t word_bound = 4) {
    Report rep;
    rep.title = "quotient-twist";
    const Presentation& p = x.hopf.base;
    HopfPresentation twisted = graded_twist(x);
    GradedHopfIdeal jideal = twist_ideal(x, ideal, word_bound + 2);

    QuotientChart lhs(p, &x.action, ideal.generators, word_bound);
    QuotientChart rhs(twisted.base, nullptr, jideal.generators, word_bound);

    bool dims_ok = lhs.dim() == rhs.dim();
    rep.add("quotient-dimensions-match", dims_ok,
            std::to_string(lhs.dim()) + " vs " + std::to_string(rhs.dim()));

    bool ok = true;
    std::string wit;
    auto words = p.normal_words(word_bound / 2 == 0 ? 1 : word_bound / 2);
    for (const auto& u : words) {
        for (const auto& v : words) {
            if (u.size() + v.size() > word_bound) continue;
            // In the underlying-space chart the class of a twisted normal
            // word w is the class of tau_eval(w); compare through it.
            Element uu = tau_eval_word(p, x.action, u);
            Element vv = tau_eval_word(p, x.action, v);
            std::vector<Cyc> left = lhs.project(tau_twist_multiply(p, x.action, uu, vv));
            std::vector<Cyc> right_t = rhs.product_class(u, v);
            // Move the right-hand class into the underlying chart.
            Element rclass;
            auto rwords = twisted.base.normal_words(word_bound);
            std::size_t idx = 0;
            for (const auto& w : rwords) {
                if (!right_t[idx].is_zero())
                    rclass = rclass + tau_eval_word(p, x.action, w).scaled(right_t[idx]);
                ++idx;
            }
            std::vector<Cyc> right = lhs.project(rclass);
            if (left != right) {
                ok = false;
                wit = p.word_to_string(u) + " * " + p.word_to_string(v);
                break;
            }
        }
        if (!ok) break;
    }
    rep.add("structure-constants-agree", ok, wit);
    return rep;
}

}  // namespace gtwist
