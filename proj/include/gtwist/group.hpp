#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gtwist {

// Element of a finitely generated abelian group given by component vector;
// the moduli live in the owning GradingGroup (0 meaning an infinite cyclic
// factor).
using GroupVec = std::vector<long>;

class GradingGroup {
public:
    GradingGroup() = default;
    explicit GradingGroup(std::vector<long> orders) : orders_(std::move(orders)) {
        for (long o : orders_)
            if (o < 0) throw std::invalid_argument("negative cyclic order");
    }

    std::size_t rank() const { return orders_.size(); }
    const std::vector<long>& orders() const { return orders_; }

    bool is_finite() const {
        for (long o : orders_)
            if (o == 0) return false;
        return true;
    }

    long size() const {
        long n = 1;
        for (long o : orders_) {
            if (o == 0) throw std::domain_error("infinite grading group");
            n *= o;
        }
        return n;
    }

    GroupVec zero() const { return GroupVec(orders_.size(), 0); }

    GroupVec reduce(GroupVec v) const {
        if (v.size() != orders_.size())
            throw std::invalid_argument("group element rank mismatch");
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (orders_[i] > 0) {
                v[i] %= orders_[i];
                if (v[i] < 0) v[i] += orders_[i];
            }
        }
        return v;
    }

    GroupVec add(const GroupVec& a, const GroupVec& b) const {
        GroupVec r(a);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
        return reduce(std::move(r));
    }

    GroupVec neg(const GroupVec& a) const {
        GroupVec r(a);
        for (auto& x : r) x = -x;
        return reduce(std::move(r));
    }

    std::vector<GroupVec> elements() const {
        if (!is_finite()) throw std::domain_error("infinite grading group");
        std::vector<GroupVec> out;
        GroupVec cur = zero();
        out.push_back(cur);
        while (true) {
            std::size_t i = 0;
            while (i < cur.size()) {
                if (++cur[i] < orders_[i]) break;
                cur[i] = 0;
                ++i;
            }
            if (i == cur.size()) break;
            out.push_back(cur);
        }
        return out;
    }

    std::string to_string(const GroupVec& v) const {
        std::ostringstream os;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) os << ",";
            os << v[i];
        }
        return os.str();
    }

    bool operator==(const GradingGroup& o) const { return orders_ == o.orders_; }

private:
    std::vector<long> orders_;
};

}  // namespace gtwist
