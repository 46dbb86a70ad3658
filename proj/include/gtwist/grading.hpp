#pragma once

#include <map>
#include <string>
#include <vector>

#include "gtwist/linalg.hpp"
#include "gtwist/presentation.hpp"
#include "gtwist/report.hpp"

namespace gtwist {

namespace detail {

// Coordinates of an element on a fixed list of normal words.
inline std::vector<Cyc> coords_on(const Element& e,
                                  const std::map<Word, std::size_t, DeglexLess>& index) {
    std::vector<Cyc> v(index.size(), Cyc(0));
    for (const auto& [w, c] : e.terms()) {
        auto it = index.find(w);
        if (it == index.end()) throw std::logic_error("coordinate outside basis");
        v[it->second] = c;
    }
    return v;
}

}  // namespace detail

// Checks that the grading is strong, A_g A_h = A_{gh}, degreewise up to the
// given word length: products of normal monomials of degrees g and h must
// span every normal monomial of degree g+h within the length bound.
inline Report check_strong_grading(const Presentation& p, std::size_t degree_bound) {
    Report rep;
    rep.title = "strong-grading";
    if (!p.group().is_finite())
        throw InputError("strong grading check needs a finite grading group");

    auto words = p.normal_words(degree_bound);
    std::map<GroupVec, std::vector<Word>> by_degree;
    for (const auto& w : words) by_degree[p.word_degree(w)].push_back(w);

    std::map<Word, std::size_t, DeglexLess> index;
    std::size_t k = 0;
    for (const auto& w : words) index[w] = k++;

    // Surjectivity of the degree map first: strongness is hopeless (and
    // reported with the right witness) when a component is empty.
    bool surj = true;
    std::string surj_witness;
    auto elements = p.group().elements();
    for (const auto& g : elements) {
        auto it = by_degree.find(g);
        if (it == by_degree.end() || it->second.empty()) {
            surj = false;
            surj_witness = "no monomials of degree " + p.group().to_string(g);
            break;
        }
    }
    rep.add("degree-map-surjective", surj, surj_witness);

    bool all_ok = true;
    std::string witness;
    for (const auto& g : elements) {
        for (const auto& h : elements) {
            GroupVec gh = p.group().add(g, h);
            const auto tgt_it = by_degree.find(gh);
            if (tgt_it == by_degree.end() || tgt_it->second.empty()) continue;
            std::vector<std::vector<Cyc>> span_rows;
            auto gi = by_degree.find(g);
            auto hi = by_degree.find(h);
            if (gi != by_degree.end() && hi != by_degree.end()) {
                for (const auto& u : gi->second) {
                    for (const auto& v : hi->second) {
                        if (u.size() + v.size() > degree_bound) continue;
                        Element prod = p.normal_form(word_concat(u, v));
                        span_rows.push_back(detail::coords_on(prod, index));
                    }
                }
            }
            for (const auto& t : tgt_it->second) {
                std::vector<Cyc> tv(index.size(), Cyc(0));
                tv[index.at(t)] = Cyc(1);
                if (!in_row_span(span_rows, tv)) {
                    all_ok = false;
                    witness = "A_(" + p.group().to_string(g) + ") A_(" +
                              p.group().to_string(h) + ") misses " + p.word_to_string(t);
                    break;
                }
            }
            if (!all_ok) break;
        }
        if (!all_ok) break;
    }
    rep.add("products-span-components", all_ok, witness);
    return rep;
}

}  // namespace gtwist
