#pragma once

#include <cstddef>
#include <vector>

#include "gtwist/cyclotomic.hpp"

namespace gtwist {

// Dense exact matrix over the cyclotomic scalars.  Row-major.
class CycMatrix {
public:
    CycMatrix() : rows_(0), cols_(0) {}
    CycMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Cyc(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Cyc& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Cyc& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const CycMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    CycMatrix multiply(const CycMatrix& o) const {
        CycMatrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Cyc& a = at(i, k);
                if (a.is_zero()) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    const Cyc& b = o.at(k, j);
                    if (b.is_zero()) continue;
                    r.at(i, j) = r.at(i, j) + a * b;
                }
            }
        return r;
    }

    static CycMatrix identity(std::size_t n) {
        CycMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Cyc(1);
        return m;
    }

    // In-place reduced row echelon form; returns pivot column indices.
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t sel = r;
            while (sel < rows_ && at(sel, c).is_zero()) ++sel;
            if (sel == rows_) continue;
            swap_rows(sel, r);
            Cyc inv = at(r, c).inverse();
            for (std::size_t j = c; j < cols_; ++j) at(r, j) = at(r, j) * inv;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r || at(i, c).is_zero()) continue;
                Cyc f = at(i, c);
                for (std::size_t j = c; j < cols_; ++j)
                    at(i, j) = at(i, j) - f * at(r, j);
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    std::size_t rank() const {
        CycMatrix tmp = *this;
        return tmp.rref().size();
    }

    // Canonical basis of the right kernel (rows of the returned matrix),
    // derived from the RREF so results are deterministic.
    std::vector<std::vector<Cyc>> kernel_basis() const {
        CycMatrix tmp = *this;
        auto pivots = tmp.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (auto p : pivots) is_pivot[p] = true;
        std::vector<std::vector<Cyc>> basis;
        for (std::size_t fc = 0; fc < cols_; ++fc) {
            if (is_pivot[fc]) continue;
            std::vector<Cyc> v(cols_, Cyc(0));
            v[fc] = Cyc(1);
            for (std::size_t pi = 0; pi < pivots.size(); ++pi)
                v[pivots[pi]] = -tmp.at(pi, fc);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    // Solves M x = rhs.  Returns false when inconsistent.
    bool solve(const std::vector<Cyc>& rhs, std::vector<Cyc>& out) const {
        CycMatrix aug(rows_, cols_ + 1);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
            aug.at(i, cols_) = rhs[i];
        }
        auto pivots = aug.rref();
        for (auto p : pivots)
            if (p == cols_) return false;
        out.assign(cols_, Cyc(0));
        for (std::size_t pi = 0; pi < pivots.size(); ++pi)
            out[pivots[pi]] = aug.at(pi, cols_);
        // Solution valid only if free columns can stay zero; verify.
        for (std::size_t i = 0; i < rows_; ++i) {
            Cyc acc(0);
            for (std::size_t j = 0; j < cols_; ++j) acc = acc + at(i, j) * out[j];
            if (acc != rhs[i]) return false;
        }
        return true;
    }

private:
    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
    }

    std::size_t rows_, cols_;
    std::vector<Cyc> data_;
};

// Span membership: is target in the row span of the given vectors?
inline bool in_row_span(const std::vector<std::vector<Cyc>>& rows,
                        const std::vector<Cyc>& target) {
    if (rows.empty()) {
        for (const auto& c : target)
            if (!c.is_zero()) return false;
        return true;
    }
    std::size_t n = target.size();
    CycMatrix m(rows.size(), n);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
    std::size_t base_rank = m.rank();
    CycMatrix ext(rows.size() + 1, n);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) ext.at(i, j) = rows[i][j];
    for (std::size_t j = 0; j < n; ++j) ext.at(rows.size(), j) = target[j];
    return ext.rank() == base_rank;
}

}  // namespace gtwist
