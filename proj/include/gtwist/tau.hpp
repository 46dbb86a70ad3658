#pragma once

#include <map>
#include <string>
#include <vector>

#include "gtwist/linalg.hpp"
#include "gtwist/presentation.hpp"
#include "gtwist/report.hpp"

namespace gtwist {

// Family of degree-preserving linear maps tau_g, one per group element,
// each given by images of the generators and extended multiplicatively to
// words.  With the twisted-cocycle law
//     tau_g(a tau_h(b)) = tau_g(a) tau_{gh}(b),   a of degree h,
// the twisted product a .tau b = sum_g a_g tau_g(b) is associative.  A
// genuine action (each tau_g an algebra automorphism, tau_g tau_h =
// tau_{gh}) is the special case used by every construction in this
// library's gallery.
class TauMaps {
public:
    TauMaps() = default;
    TauMaps(GradingGroup group, std::map<GroupVec, std::vector<Element>> images,
            bool genuine_action = true)
        : group_(std::move(group)), images_(std::move(images)), action_(genuine_action) {}

    static TauMaps trivial(const GradingGroup& g) { return TauMaps(g, {}, true); }

    const GradingGroup& group() const { return group_; }
    bool is_genuine_action() const { return action_; }
    const std::map<GroupVec, std::vector<Element>>& images() const { return images_; }

    Element generator_image(const GroupVec& g, int gen, const Presentation& p) const {
        auto it = images_.find(g);
        if (it == images_.end()) return Element::monomial(Word{gen});
        return it->second[static_cast<std::size_t>(gen)];
    }

    // Multiplicative extension of tau_g to an element.
    Element apply(const Presentation& p, const GroupVec& g, const Element& e) const {
        auto it = images_.find(group_.reduce(g));
        if (it == images_.end()) return e;  // identity (covers tau_e)
        const auto& img = it->second;
        Element out;
        for (const auto& [w, c] : e.terms()) {
            Element acc = Element::scalar(c);
            for (int gi : w) acc = p.multiply(acc, img[static_cast<std::size_t>(gi)]);
            out = out + acc;
        }
        return out;
    }

    void check(const Presentation& p, Report& rep) const {
        const std::string t = "tau";
        // tau_e = identity.
        {
            bool ok = true;
            std::string wit;
            auto it = images_.find(group_.zero());
            if (it != images_.end()) {
                for (std::size_t i = 0; i < p.num_generators(); ++i) {
                    if (it->second[i] != Element::monomial(Word{static_cast<int>(i)})) {
                        ok = false;
                        wit = p.generators()[i].name;
                        break;
                    }
                }
            }
            rep.add(t + ":identity-at-e", ok, wit);
        }
        // Degree preservation of generator images.
        {
            bool ok = true;
            std::string wit;
            for (const auto& [g, img] : images_) {
                for (std::size_t i = 0; i < img.size() && ok; ++i) {
                    GroupVec d;
                    if (!p.is_homogeneous(img[i], &d) ||
                        (!img[i].is_zero() && d != p.generators()[i].degree)) {
                        ok = false;
                        wit = p.generators()[i].name + " at g=" + group_.to_string(g);
                    }
                }
            }
            rep.add(t + ":degree-preserving", ok, wit);
        }
        // Twisted cocycle law on generator pairs.
        {
            bool ok = true;
            std::string wit;
            for (const auto& g : group_.elements()) {
                for (std::size_t a = 0; a < p.num_generators() && ok; ++a) {
                    GroupVec h = p.generators()[a].degree;
                    for (std::size_t b = 0; b < p.num_generators() && ok; ++b) {
                        Element tb = apply(p, h, Element::monomial(Word{(int)b}));
                        Element lhs = apply(p, g,
                                            p.multiply(Element::monomial(Word{(int)a}), tb));
                        Element rhs = p.multiply(
                            apply(p, g, Element::monomial(Word{(int)a})),
                            apply(p, group_.add(g, h), Element::monomial(Word{(int)b})));
                        if (lhs != rhs) {
                            ok = false;
                            wit = p.generators()[a].name + "," + p.generators()[b].name +
                                  " at g=" + group_.to_string(g);
                        }
                    }
                }
            }
            rep.add(t + ":cocycle-law", ok, wit);
        }
        if (action_) {
            // Algebra map on relations.
            bool ok = true;
            std::string wit;
            for (const auto& g : group_.elements()) {
                for (const auto& r : p.rules()) {
                    Element l = apply(p, g, p.normal_form(Element::monomial(r.lhs)));
                    Element rr = apply(p, g, r.rhs);
                    if (p.normal_form(l) != p.normal_form(rr)) {
                        ok = false;
                        wit = p.word_to_string(r.lhs) + " at g=" + group_.to_string(g);
                        break;
                    }
                }
                if (!ok) break;
            }
            rep.add(t + ":algebra-map-on-relations", ok, wit);
            // Homomorphism property on generators.
            ok = true;
            wit.clear();
            for (const auto& g : group_.elements()) {
                for (const auto& h : group_.elements()) {
                    for (std::size_t i = 0; i < p.num_generators(); ++i) {
                        Element two = apply(p, g, apply(p, h, Element::monomial(Word{(int)i})));
                        Element one =
                            apply(p, group_.add(g, h), Element::monomial(Word{(int)i}));
                        if (two != one) {
                            ok = false;
                            wit = p.generators()[i].name + " at g=" + group_.to_string(g) +
                                  " h=" + group_.to_string(h);
                        }
                    }
                }
            }
            rep.add(t + ":group-homomorphism", ok, wit);
        }
    }

    void validate(const Presentation& p) const {
        Report rep;
        check(p, rep);
        for (const auto& it : rep.items)
            if (!it.pass) throw ValidationError("tau data failed " + it.name, it.detail);
    }

    // Pointwise inverse family g |-> tau_g^{-1}.  Supported when every
    // generator image lies in the span of the generators.
    TauMaps inverse(const Presentation& p) const {
        std::map<GroupVec, std::vector<Element>> inv;
        std::size_t n = p.num_generators();
        for (const auto& [g, img] : images_) {
            CycMatrix m(n, n);
            for (std::size_t j = 0; j < n; ++j) {
                for (const auto& [w, c] : img[j].terms()) {
                    if (w.size() != 1)
                        throw InputError(
                            "tau inverse requires generator-span images");
                    m.at(static_cast<std::size_t>(w[0]), j) = c;
                }
            }
            std::vector<Element> cols(n);
            for (std::size_t j = 0; j < n; ++j) {
                std::vector<Cyc> e(n, Cyc(0)), x;
                e[j] = Cyc(1);
                if (!m.solve(e, x))
                    throw InputError("tau map is not invertible on generators");
                Element img_j;
                for (std::size_t i = 0; i < n; ++i)
                    img_j.add_term(Word{static_cast<int>(i)}, x[i]);
                cols[j] = img_j;
            }
            inv[g] = std::move(cols);
        }
        return TauMaps(group_, std::move(inv), action_);
    }

private:
    GradingGroup group_;
    std::map<GroupVec, std::vector<Element>> images_;
    bool action_ = true;
};

// Twisted product a .tau b = sum_g a_g tau_g(b).
inline Element tau_twist_multiply(const Presentation& p, const TauMaps& tau,
                                  const Element& a, const Element& b) {
    Element out;
    for (const auto& [g, ag] : p.homogeneous_parts(a))
        out = out + p.multiply(ag, tau.apply(p, g, b));
    return out;
}

// Evaluation of a free word as an iterated twisted product:
//   U(x1 x2 ... xk) = x1 tau_{g1}(x2) tau_{g1 g2}(x3) ...
// This realizes the identification between words of the twisted
// presentation and elements of the original algebra.
inline Element tau_eval_word(const Presentation& p, const TauMaps& tau, const Word& w) {
    Element acc = Element::unit();
    GroupVec g = p.group().zero();
    for (int gi : w) {
        Element img = tau.apply(p, g, Element::monomial(Word{gi}));
        acc = p.multiply(acc, img);
        g = p.group().add(g, p.generators()[static_cast<std::size_t>(gi)].degree);
    }
    return acc;
}

inline Element tau_eval(const Presentation& p, const TauMaps& tau, const Element& e) {
    Element out;
    for (const auto& [w, c] : e.terms())
        out = out + tau_eval_word(p, tau, w).scaled(c);
    return out;
}

// Inverse of tau_eval on the span of normal words: writes target as a
// combination of U(w) over normal words w of matching degree and length.
// Returns false when no such expansion exists (the twisting data does not
// produce a basis-compatible identification).
inline bool expand_in_twisted_basis(const Presentation& p, const TauMaps& tau,
                                    const Element& target, Element& out) {
    out = Element();
    for (const auto& [deg, comp] : p.homogeneous_parts(target)) {
        std::size_t max_len = 0;
        for (const auto& [w, c] : comp.terms()) max_len = std::max(max_len, w.size());
        std::vector<Word> candidates;
        for (const auto& w : p.normal_words(max_len))
            if (p.word_degree(w) == deg) candidates.push_back(w);
        // Coordinates live on the union of normal words seen in any U(w).
        std::map<Word, std::size_t, DeglexLess> coord;
        std::vector<Element> images;
        for (const auto& w : candidates) {
            Element u = tau_eval_word(p, tau, w);
            for (const auto& [m, c] : u.terms())
                coord.emplace(m, 0);
            images.push_back(std::move(u));
        }
        for (const auto& [m, c] : comp.terms()) coord.emplace(m, 0);
        std::size_t idx = 0;
        for (auto& [m, i] : coord) i = idx++;
        CycMatrix mat(coord.size(), candidates.size());
        for (std::size_t j = 0; j < candidates.size(); ++j)
            for (const auto& [m, c] : images[j].terms())
                mat.at(coord.at(m), j) = c;
        std::vector<Cyc> rhs(coord.size(), Cyc(0)), sol;
        for (const auto& [m, c] : comp.terms()) rhs[coord.at(m)] = c;
        if (!mat.solve(rhs, sol)) return false;
        for (std::size_t j = 0; j < candidates.size(); ++j)
            out.add_term(candidates[j], sol[j]);
    }
    return true;
}

}  // namespace gtwist
