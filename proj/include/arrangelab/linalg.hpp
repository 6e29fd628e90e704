#ifndef ARRANGELAB_LINALG_HPP
#define ARRANGELAB_LINALG_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "arrangelab/numeric.hpp"

namespace arrangelab {

using RatVec = std::vector<Rational>;

/// Dense matrix over the rationals with exact Gauss-Jordan elimination.
class RatMatrix {
  public:
    RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static RatMatrix from_rows(const std::vector<RatVec>& rows, std::size_t cols) {
        RatMatrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < cols; ++j)
                m.at(i, j) = rows[i][j];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    // In-place reduced row echelon form; returns the pivot columns.
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t row = 0;
        for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
            std::size_t sel = row;
            while (sel < rows_ && at(sel, col) == 0)
                ++sel;
            if (sel == rows_)
                continue;
            if (sel != row)
                for (std::size_t j = 0; j < cols_; ++j)
                    std::swap(at(sel, j), at(row, j));
            Rational inv = Rational(1) / at(row, col);
            for (std::size_t j = col; j < cols_; ++j)
                at(row, j) *= inv;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == row || at(i, col) == 0)
                    continue;
                Rational f = at(i, col);
                for (std::size_t j = col; j < cols_; ++j)
                    at(i, j) -= f * at(row, j);
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    std::size_t rank() const {
        RatMatrix copy = *this;
        return copy.rref().size();
    }

    // Basis of the right null space {x : Ax = 0}, canonical from the RREF.
    std::vector<RatVec> null_space() const {
        RatMatrix copy = *this;
        auto pivots = copy.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (auto c : pivots)
            is_pivot[c] = true;
        std::vector<RatVec> basis;
        for (std::size_t freec = 0; freec < cols_; ++freec) {
            if (is_pivot[freec])
                continue;
            RatVec v(cols_, 0);
            v[freec] = 1;
            for (std::size_t r = 0; r < pivots.size(); ++r)
                v[pivots[r]] = -copy.at(r, freec);
            basis.push_back(std::move(v));
        }
        return basis;
    }

  private:
    std::size_t rows_, cols_;
    std::vector<Rational> a_;
};

inline std::size_t rank_of_rows(const std::vector<RatVec>& rows, std::size_t cols) {
    return RatMatrix::from_rows(rows, cols).rank();
}

// Row spans compared by rank(A) = rank(B) = rank(A cup B).
inline bool same_row_span(const std::vector<RatVec>& a, const std::vector<RatVec>& b, std::size_t cols) {
    std::vector<RatVec> joint = a;
    joint.insert(joint.end(), b.begin(), b.end());
    std::size_t rj = rank_of_rows(joint, cols);
    return rank_of_rows(a, cols) == rj && rank_of_rows(b, cols) == rj;
}

// ---------------------------------------------------------------------------
// Sparse online echelon form.  Rows are kept fully Jordan-reduced, so the
// pivot set and the reduction of any vector are canonical for the row span.
// ---------------------------------------------------------------------------

struct SparseVec {
    std::vector<std::pair<int, Rational>> e; // ascending index, nonzero values

    bool empty() const { return e.empty(); }
    int pivot() const { return e.front().first; }

    void axpy(const Rational& c, const SparseVec& o) { // *this += c * o
        if (c == 0)
            return;
        std::vector<std::pair<int, Rational>> out;
        out.reserve(e.size() + o.e.size());
        std::size_t i = 0, j = 0;
        while (i < e.size() || j < o.e.size()) {
            if (j == o.e.size() || (i < e.size() && e[i].first < o.e[j].first)) {
                out.push_back(e[i++]);
            } else if (i == e.size() || o.e[j].first < e[i].first) {
                out.emplace_back(o.e[j].first, c * o.e[j].second);
                ++j;
            } else {
                Rational v = e[i].second + c * o.e[j].second;
                if (v != 0)
                    out.emplace_back(e[i].first, std::move(v));
                ++i;
                ++j;
            }
        }
        e = std::move(out);
    }

    void scale(const Rational& c) {
        for (auto& [i, v] : e)
            v *= c;
    }
};

class SparseEchelon {
  public:
    // Reduce v against the pivot rows.  Rows are Jordan-reduced, so each
    // subtraction removes one pivot coordinate and introduces none.
    SparseVec reduce(SparseVec v) const {
        while (true) {
            const SparseVec* row = nullptr;
            Rational c;
            for (const auto& [i, val] : v.e) {
                auto it = rows_.find(i);
                if (it != rows_.end()) {
                    row = &it->second;
                    c = val;
                    break;
                }
            }
            if (!row)
                return v;
            v.axpy(-c, *row);
        }
    }

    // Insert v's reduction as a new pivot row; returns false when dependent.
    bool add(const SparseVec& v) {
        SparseVec r = reduce(v);
        if (r.empty())
            return false;
        Rational inv = Rational(1) / r.e.front().second;
        r.scale(inv);
        int piv = r.pivot();
        // Jordan step: clear the new pivot from existing rows.
        for (auto& [p, row] : rows_) {
            Rational c = 0;
            for (auto& [i, val] : row.e)
                if (i == piv) {
                    c = val;
                    break;
                }
            if (c != 0)
                row.axpy(-c, r);
        }
        rows_.emplace(piv, std::move(r));
        return true;
    }

    std::size_t rank() const { return rows_.size(); }
    bool has_pivot(int idx) const { return rows_.count(idx) != 0; }
    const std::map<int, SparseVec>& rows() const { return rows_; }

  private:
    std::map<int, SparseVec> rows_;
};

} // namespace arrangelab

#endif
