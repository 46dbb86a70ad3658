#pragma once

#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gtwist/element.hpp"
#include "gtwist/errors.hpp"
#include "gtwist/group.hpp"

namespace gtwist {

struct Generator {
    std::string name;
    GroupVec degree;
};

// Rewrite rule: leading word -> strictly smaller element of the same degree.
struct Rule {
    Word lhs;
    Element rhs;
};

// Finitely presented algebra over the cyclotomic scalars with a grading by
// a finitely generated abelian group.  The rule set must be deglex
// decreasing and (checked, not completed) locally confluent, so that
// normal forms are unique and multiplication is associative.
class Presentation {
public:
    Presentation() = default;
    Presentation(GradingGroup group, std::vector<Generator> gens, std::vector<Rule> rules)
        : group_(std::move(group)), gens_(std::move(gens)), rules_(std::move(rules)) {}

    const GradingGroup& group() const { return group_; }
    const std::vector<Generator>& generators() const { return gens_; }
    const std::vector<Rule>& rules() const { return rules_; }

    std::size_t num_generators() const { return gens_.size(); }

    int generator_index(const std::string& name) const {
        for (std::size_t i = 0; i < gens_.size(); ++i)
            if (gens_[i].name == name) return static_cast<int>(i);
        return -1;
    }

    GroupVec word_degree(const Word& w) const {
        GroupVec d = group_.zero();
        for (int i : w) {
            if (i < 0 || i >= static_cast<int>(gens_.size()))
                throw InputError("generator index out of range");
            d = group_.add(d, gens_[static_cast<std::size_t>(i)].degree);
        }
        return d;
    }

    bool is_homogeneous(const Element& e, GroupVec* degree_out = nullptr) const {
        std::optional<GroupVec> deg;
        for (const auto& [w, c] : e.terms()) {
            GroupVec d = word_degree(w);
            if (!deg) {
                deg = d;
            } else if (*deg != d) {
                return false;
            }
        }
        if (deg && degree_out) *degree_out = *deg;
        return true;
    }

    // Validates rule shape (deglex-decreasing, degree-homogeneous) and
    // local confluence of all rule overlaps up to the given word length.
    void validate(std::size_t confluence_length = 6) const {
        DeglexLess less;
        for (const auto& r : rules_) {
            if (r.lhs.empty())
                throw ValidationError("rule with empty left-hand side", "1");
            GroupVec dl = word_degree(r.lhs);
            for (const auto& [w, c] : r.rhs.terms()) {
                if (!less(w, r.lhs))
                    throw ValidationError("rule is not deglex-decreasing",
                                          word_to_string(r.lhs) + " -> " + word_to_string(w));
                if (word_degree(w) != dl)
                    throw ValidationError(
                        "rule right-hand side is not homogeneous of the rule degree",
                        word_to_string(r.lhs) + " -> " + word_to_string(w));
            }
        }
        // No two rules may share a leading word.
        std::set<Word> lhs_seen;
        for (const auto& r : rules_) {
            if (!lhs_seen.insert(r.lhs).second)
                throw ValidationError("duplicate rule left-hand side", word_to_string(r.lhs));
        }
        auto witness = confluence_witness(confluence_length);
        if (witness)
            throw ValidationError("rule set is not locally confluent", *witness);
    }

    // Returns a description of the first unresolved overlap ambiguity, or
    // nullopt when every ambiguity up to the length bound resolves.
    std::optional<std::string> confluence_witness(std::size_t max_len = 6) const {
        for (std::size_t i = 0; i < rules_.size(); ++i) {
            for (std::size_t j = 0; j < rules_.size(); ++j) {
                const Word& a = rules_[i].lhs;
                const Word& b = rules_[j].lhs;
                // Overlaps: a suffix of a equals a prefix of b.
                for (std::size_t k = 1; k < a.size() && k <= b.size(); ++k) {
                    bool match = true;
                    for (std::size_t t = 0; t < k; ++t)
                        if (a[a.size() - k + t] != b[t]) { match = false; break; }
                    if (!match) continue;
                    Word w(a.begin(), a.end());
                    w.insert(w.end(), b.begin() + static_cast<long>(k), b.end());
                    if (w.size() > max_len) continue;
                    Element via_a = apply_rule_at(w, i, 0);
                    Element via_b = apply_rule_at(w, j, a.size() - k);
                    if (normal_form(via_a) != normal_form(via_b))
                        return word_to_string(w);
                }
                // Containment: b occurs strictly inside a.
                if (i != j && b.size() < a.size()) {
                    for (std::size_t pos = 0; pos + b.size() <= a.size(); ++pos) {
                        bool match = true;
                        for (std::size_t t = 0; t < b.size(); ++t)
                            if (a[pos + t] != b[t]) { match = false; break; }
                        if (!match) continue;
                        if (a.size() > max_len) continue;
                        Element via_a = apply_rule_at(a, i, 0);
                        Element via_b = apply_rule_at(a, j, pos);
                        if (normal_form(via_a) != normal_form(via_b))
                            return word_to_string(a);
                    }
                }
            }
        }
        return std::nullopt;
    }

    // Fully reduces a linear combination of words.  Throws
    // ReductionBudgetError when the step budget is exhausted.
    Element normal_form(const Element& e) const {
        Element out;
        long budget = reduction_budget_;
        for (const auto& [w, c] : e.terms()) out = out + reduce_word(w, c, budget);
        return out;
    }

    Element normal_form(const Word& w) const {
        long budget = reduction_budget_;
        return reduce_word(w, Cyc(1), budget);
    }

    Element multiply(const Element& a, const Element& b) const {
        Element out;
        long budget = reduction_budget_;
        for (const auto& [wa, ca] : a.terms())
            for (const auto& [wb, cb] : b.terms())
                out = out + reduce_word(word_concat(wa, wb), ca * cb, budget);
        return out;
    }

    Element homogeneous_part(const Element& a, const GroupVec& g) const {
        Element out;
        for (const auto& [w, c] : a.terms())
            if (word_degree(w) == g) out.add_term(w, c);
        return out;
    }

    // Partition of an element into homogeneous components, keyed by degree.
    std::map<GroupVec, Element> homogeneous_parts(const Element& a) const {
        std::map<GroupVec, Element> parts;
        for (const auto& [w, c] : a.terms()) parts[word_degree(w)].add_term(w, c);
        return parts;
    }

    bool is_normal_word(const Word& w) const { return !find_redex(w).has_value(); }

    // All irreducible words of length <= max_len, in deglex order.
    std::vector<Word> normal_words(std::size_t max_len) const {
        std::vector<Word> out{Word{}};
        std::vector<Word> frontier{Word{}};
        for (std::size_t len = 1; len <= max_len; ++len) {
            std::vector<Word> next;
            for (const auto& w : frontier) {
                for (int g = 0; g < static_cast<int>(gens_.size()); ++g) {
                    Word ext = w;
                    ext.push_back(g);
                    // Only the new suffix can create a redex.
                    if (suffix_redex_free(ext)) next.push_back(ext);
                }
            }
            out.insert(out.end(), next.begin(), next.end());
            frontier = std::move(next);
        }
        return out;
    }

    long reduction_budget() const { return reduction_budget_; }
    void set_reduction_budget(long b) { reduction_budget_ = b; }

    std::string word_to_string(const Word& w) const {
        if (w.empty()) return "1";
        std::ostringstream os;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) os << ".";
            os << gens_[static_cast<std::size_t>(w[i])].name;
        }
        return os.str();
    }

    std::string element_to_string(const Element& e) const;

    bool same_rules(const Presentation& o) const {
        if (rules_.size() != o.rules_.size()) return false;
        std::map<Word, Element> mine, theirs;
        for (const auto& r : rules_) mine[r.lhs] = r.rhs;
        for (const auto& r : o.rules_) theirs[r.lhs] = r.rhs;
        return mine == theirs;
    }

private:
    std::optional<std::pair<std::size_t, std::size_t>> find_redex(const Word& w) const {
        // Leftmost, then longest-rule-first would also work; any strategy
        // yields the same normal form once confluence holds.
        for (std::size_t pos = 0; pos < w.size(); ++pos) {
            for (std::size_t ri = 0; ri < rules_.size(); ++ri) {
                const Word& l = rules_[ri].lhs;
                if (pos + l.size() > w.size()) continue;
                bool match = true;
                for (std::size_t t = 0; t < l.size(); ++t)
                    if (w[pos + t] != l[t]) { match = false; break; }
                if (match) return std::make_pair(ri, pos);
            }
        }
        return std::nullopt;
    }

    bool suffix_redex_free(const Word& w) const {
        for (const auto& r : rules_) {
            if (r.lhs.size() > w.size()) continue;
            std::size_t pos = w.size() - r.lhs.size();
            bool match = true;
            for (std::size_t t = 0; t < r.lhs.size(); ++t)
                if (w[pos + t] != r.lhs[t]) { match = false; break; }
            if (match) return false;
        }
        return true;
    }

    Element apply_rule_at(const Word& w, std::size_t ri, std::size_t pos) const {
        const Rule& r = rules_[ri];
        Word prefix(w.begin(), w.begin() + static_cast<long>(pos));
        Word suffix(w.begin() + static_cast<long>(pos + r.lhs.size()), w.end());
        Element out;
        for (const auto& [m, c] : r.rhs.terms())
            out.add_term(word_concat(word_concat(prefix, m), suffix), c);
        return out;
    }

    Element reduce_word(const Word& w, const Cyc& coeff, long& budget) const {
        Element out;
        // Worklist of unreduced (word, coefficient) pairs.
        std::vector<std::pair<Word, Cyc>> work{{w, coeff}};
        while (!work.empty()) {
            auto [cur, c] = std::move(work.back());
            work.pop_back();
            if (c.is_zero()) continue;
            auto redex = find_redex(cur);
            if (!redex) {
                out.add_term(cur, c);
                continue;
            }
            if (--budget < 0)
                throw ReductionBudgetError(
                    "rewriting step budget exceeded (non-admissible rule set?)");
            Element replaced = apply_rule_at(cur, redex->first, redex->second);
            for (const auto& [m, k] : replaced.terms()) work.emplace_back(m, k * c);
        }
        return out;
    }

    GradingGroup group_;
    std::vector<Generator> gens_;
    std::vector<Rule> rules_;
    long reduction_budget_ = 2000000;
};

inline std::string Presentation::element_to_string(const Element& e) const {
    if (e.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // Leading (deglex-largest) terms first.
    for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) {
        const Word& w = it->first;
        Cyc c = it->second;
        std::string sign = " + ";
        if (c.is_rational() && c.rational_part() < 0) {
            sign = " - ";
            c = -c;
        }
        if (first) {
            if (sign == " - ") os << "-";
            first = false;
        } else {
            os << sign;
        }
        if (w.empty()) {
            os << c.to_string();
        } else if (c.is_one()) {
            os << word_to_string(w);
        } else {
            os << c.to_string() << "*" << word_to_string(w);
        }
    }
    return os.str();
}

}  // namespace gtwist
