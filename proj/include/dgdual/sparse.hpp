#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "dgdual/error.hpp"
#include "dgdual/field.hpp"

namespace dgdual {

// Sparse vector: (index, value) pairs sorted by index, no zeros.
template <class K>
using SparseVec = std::vector<std::pair<int, K>>;

template <class K>
SparseVec<K> normalize_sparse_vec(SparseVec<K> v) {
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVec<K> out;
    for (auto& [i, x] : v) {
        if (!out.empty() && out.back().first == i)
            out.back().second += x;
        else
            out.emplace_back(i, x);
        if (!out.empty() && out.back().second.is_zero()) out.pop_back();
    }
    return out;
}

// a += c*b
template <class K>
void axpy(SparseVec<K>& a, const K& c, const SparseVec<K>& b) {
    if (c.is_zero() || b.empty()) return;
    SparseVec<K> out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, c * b[j].second);
            ++j;
        } else {
            K s = a[i].second + c * b[j].second;
            if (!s.is_zero()) out.emplace_back(a[i].first, s);
            ++i, ++j;
        }
    }
    a = std::move(out);
}

// Exact sparse matrix in canonicalized triplet form: entries sorted
// column-major, deduplicated, no stored zeros. Immutable after construction.
template <class K>
class SparseMatrix {
public:
    struct Entry {
        int row, col;
        K val;
    };

    SparseMatrix() = default;
    SparseMatrix(int rows, int cols, std::vector<Entry> entries = {})
        : rows_(rows), cols_(cols) {
        require(rows >= 0 && cols >= 0, ErrorCode::ShapeMismatch, "negative matrix shape");
        std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
            return a.col != b.col ? a.col < b.col : a.row < b.row;
        });
        for (auto& e : entries) {
            require(e.row >= 0 && e.row < rows && e.col >= 0 && e.col < cols,
                    ErrorCode::ShapeMismatch,
                    "entry (" + std::to_string(e.row) + "," + std::to_string(e.col) +
                        ") out of bounds for " + std::to_string(rows) + "x" + std::to_string(cols));
            if (!entries_.empty() && entries_.back().col == e.col && entries_.back().row == e.row)
                entries_.back().val += e.val;
            else
                entries_.push_back(e);
            if (!entries_.empty() && entries_.back().val.is_zero()) entries_.pop_back();
        }
    }

    static SparseMatrix zero(int rows, int cols) { return SparseMatrix(rows, cols); }
    static SparseMatrix identity(int n) {
        std::vector<Entry> e;
        for (int i = 0; i < n; ++i) e.push_back({i, i, K(1)});
        return SparseMatrix(n, n, std::move(e));
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const std::vector<Entry>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }

    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.entries_.size() != b.entries_.size())
            return false;
        for (size_t i = 0; i < a.entries_.size(); ++i) {
            const auto& x = a.entries_[i];
            const auto& y = b.entries_[i];
            if (x.row != y.row || x.col != y.col || !(x.val == y.val)) return false;
        }
        return true;
    }

    SparseMatrix transpose() const {
        std::vector<Entry> e;
        e.reserve(entries_.size());
        for (const auto& x : entries_) e.push_back({x.col, x.row, x.val});
        return SparseMatrix(cols_, rows_, std::move(e));
    }

    SparseMatrix scaled(const K& c) const {
        std::vector<Entry> e;
        if (!c.is_zero())
            for (const auto& x : entries_) e.push_back({x.row, x.col, c * x.val});
        return SparseMatrix(rows_, cols_, std::move(e));
    }

    friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
        require(a.rows_ == b.rows_ && a.cols_ == b.cols_, ErrorCode::ShapeMismatch, "sum shapes");
        std::vector<Entry> e(a.entries_);
        e.insert(e.end(), b.entries_.begin(), b.entries_.end());
        return SparseMatrix(a.rows_, a.cols_, std::move(e));
    }

    friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
        require(a.cols_ == b.rows_, ErrorCode::ShapeMismatch,
                "product shapes " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                    " * " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
        // column j of a*b = a * (column j of b)
        std::vector<Entry> out;
        std::vector<SparseVec<K>> acols = a.columns();
        size_t i = 0;
        while (i < b.entries_.size()) {
            int j = b.entries_[i].col;
            SparseVec<K> col;
            for (; i < b.entries_.size() && b.entries_[i].col == j; ++i)
                axpy(col, b.entries_[i].val, acols[b.entries_[i].row]);
            for (auto& [r, v] : col) out.push_back({r, j, v});
        }
        return SparseMatrix(a.rows_, b.cols_, std::move(out));
    }

    SparseVec<K> apply(const SparseVec<K>& x) const {
        SparseVec<K> out;
        auto cols = columns();
        for (const auto& [i, v] : x) {
            require(i >= 0 && i < cols_, ErrorCode::ShapeMismatch, "vector index out of range");
            axpy(out, v, cols[i]);
        }
        return out;
    }

    std::vector<SparseVec<K>> columns() const {
        std::vector<SparseVec<K>> cols(cols_);
        for (const auto& e : entries_) cols[e.col].emplace_back(e.row, e.val);
        return cols;
    }
    std::vector<SparseVec<K>> row_list() const {
        std::vector<SparseVec<K>> rows(rows_);
        for (const auto& e : entries_) rows[e.row].emplace_back(e.col, e.val);
        for (auto& r : rows)
            std::sort(r.begin(), r.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
        return rows;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Entry> entries_;
};

namespace detail {

using IntRow = std::vector<std::pair<int, BigInt>>;

inline void int_row_reduce_content(IntRow& r) {
    if (r.empty()) return;
    BigInt g = 0;
    for (auto& [i, v] : r) g = boost::multiprecision::gcd(g, v);
    if (r.front().second < 0) g = -g;
    if (g != 1)
        for (auto& [i, v] : r) v /= g;
}

// Fraction-free (Bareiss-style) row echelon over the integers: rows are
// combined by cross-multiplication, then normalized by their content, so no
// rational arithmetic happens during elimination. Pivot choice: leftmost
// column, then sparsest row, then first; this keeps runs reproducible.
struct IntEchelon {
    size_t rank = 0;
    std::vector<int> pivot_cols;
    std::vector<IntRow> rows; // echelon rows, row i leads at pivot_cols[i]
};

inline IntEchelon int_echelon(std::vector<IntRow> rows) {
    IntEchelon out;
    for (auto& r : rows) int_row_reduce_content(r);
    std::vector<bool> used(rows.size(), false);
    while (true) {
        int best = -1, best_col = -1;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (used[i] || rows[i].empty()) continue;
            int c = rows[i].front().first;
            if (best < 0 || c < best_col ||
                (c == best_col && rows[i].size() < rows[best].size())) {
                best = static_cast<int>(i);
                best_col = c;
            }
        }
        if (best < 0) break;
        used[best] = true;
        const IntRow piv = rows[best];
        const BigInt& p = piv.front().second;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (used[i] || rows[i].empty() || rows[i].front().first != best_col) continue;
            BigInt l = rows[i].front().second;
            // row_i := p*row_i - l*piv  (exact, kills column best_col)
            IntRow merged;
            size_t a = 0, b = 0;
            while (a < rows[i].size() || b < piv.size()) {
                if (b == piv.size() ||
                    (a < rows[i].size() && rows[i][a].first < piv[b].first)) {
                    merged.emplace_back(rows[i][a].first, p * rows[i][a].second);
                    ++a;
                } else if (a == rows[i].size() || piv[b].first < rows[i][a].first) {
                    merged.emplace_back(piv[b].first, -l * piv[b].second);
                    ++b;
                } else {
                    BigInt s = p * rows[i][a].second - l * piv[b].second;
                    if (s != 0) merged.emplace_back(rows[i][a].first, s);
                    ++a, ++b;
                }
            }
            int_row_reduce_content(merged);
            rows[i] = std::move(merged);
        }
        out.pivot_cols.push_back(best_col);
        out.rows.push_back(piv);
        ++out.rank;
    }
    // sort echelon rows by pivot column
    std::vector<size_t> order(out.rows.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return out.pivot_cols[a] < out.pivot_cols[b]; });
    IntEchelon sorted;
    sorted.rank = out.rank;
    for (size_t i : order) {
        sorted.pivot_cols.push_back(out.pivot_cols[i]);
        sorted.rows.push_back(std::move(out.rows[i]));
    }
    return sorted;
}

inline std::vector<IntRow> rat_rows_to_int(const std::vector<SparseVec<Rat>>& rows) {
    std::vector<IntRow> out(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) {
        BigInt l = 1;
        for (const auto& [j, v] : rows[i]) l = boost::multiprecision::lcm(l, v.denominator());
        for (const auto& [j, v] : rows[i])
            out[i].emplace_back(j, v.numerator() * (l / v.denominator()));
    }
    return out;
}

template <class K>
struct Echelon {
    size_t rank = 0;
    std::vector<int> pivot_cols;           // ascending
    std::vector<SparseVec<K>> rows;        // row i leads at pivot_cols[i]
};

// Plain field elimination (used over prime fields).
template <class K>
Echelon<K> field_echelon(std::vector<SparseVec<K>> rows) {
    Echelon<K> out;
    std::vector<bool> used(rows.size(), false);
    while (true) {
        int best = -1, best_col = -1;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (used[i] || rows[i].empty()) continue;
            int c = rows[i].front().first;
            if (best < 0 || c < best_col ||
                (c == best_col && rows[i].size() < rows[best].size())) {
                best = static_cast<int>(i);
                best_col = c;
            }
        }
        if (best < 0) break;
        used[best] = true;
        const SparseVec<K> piv = rows[best];
        K pinv = piv.front().second.inverse();
        for (size_t i = 0; i < rows.size(); ++i) {
            if (used[i] || rows[i].empty() || rows[i].front().first != best_col) continue;
            K c = -(rows[i].front().second * pinv);
            axpy(rows[i], c, piv);
        }
        out.pivot_cols.push_back(best_col);
        out.rows.push_back(piv);
        ++out.rank;
    }
    std::vector<size_t> order(out.rows.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return out.pivot_cols[a] < out.pivot_cols[b]; });
    Echelon<K> sorted;
    sorted.rank = out.rank;
    for (size_t i : order) {
        sorted.pivot_cols.push_back(out.pivot_cols[i]);
        sorted.rows.push_back(std::move(out.rows[i]));
    }
    return sorted;
}

template <class K>
Echelon<K> echelon(const SparseMatrix<K>& m) {
    return field_echelon<K>(m.row_list());
}

template <>
inline Echelon<Rat> echelon(const SparseMatrix<Rat>& m) {
    IntEchelon ie = int_echelon(rat_rows_to_int(m.row_list()));
    Echelon<Rat> out;
    out.rank = ie.rank;
    out.pivot_cols = std::move(ie.pivot_cols);
    out.rows.resize(ie.rows.size());
    for (size_t i = 0; i < ie.rows.size(); ++i)
        for (auto& [j, v] : ie.rows[i]) out.rows[i].emplace_back(j, Rat(BigRational(v)));
    return out;
}

} // namespace detail

template <class K>
size_t rank(const SparseMatrix<K>& m) {
    return detail::echelon(m).rank;
}

// Basis of the null space {v : m v = 0}. One vector per free column, in
// ascending free-column order, normalized so the free coordinate is 1.
template <class K>
std::vector<SparseVec<K>> kernel_basis(const SparseMatrix<K>& m) {
    auto ech = detail::echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : ech.pivot_cols) is_pivot[c] = true;

    std::vector<SparseVec<K>> basis;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::map<int, K> x;
        x[f] = K(1);
        // back-substitute pivot rows in reverse
        for (size_t ri = ech.rows.size(); ri-- > 0;) {
            const auto& row = ech.rows[ri];
            int pc = ech.pivot_cols[ri];
            K s(0);
            for (const auto& [j, v] : row) {
                if (j == pc) continue;
                auto it = x.find(j);
                if (it != x.end()) s += v * it->second;
            }
            if (!s.is_zero()) x[pc] = -(s / row.front().second);
        }
        SparseVec<K> vec;
        for (auto& [j, v] : x)
            if (!v.is_zero()) vec.emplace_back(j, v);
        basis.push_back(std::move(vec));
    }
    return basis;
}

// dim ker(d_out) - rank(d_in) for a composable pair with d_out . d_in = 0.
template <class K>
size_t homology_dim(const SparseMatrix<K>& d_in, const SparseMatrix<K>& d_out) {
    require(d_in.rows() == d_out.cols(), ErrorCode::ShapeMismatch,
            "homology pair: d_in is " + std::to_string(d_in.rows()) + "x" +
                std::to_string(d_in.cols()) + ", d_out is " + std::to_string(d_out.rows()) +
                "x" + std::to_string(d_out.cols()));
    require((d_out * d_in).is_zero(), ErrorCode::CompositionNonzero,
            "d_out . d_in != 0 on a homology pair");
    size_t cycles = d_out.cols() - rank(d_out);
    size_t boundaries = rank(d_in);
    require(boundaries <= cycles, ErrorCode::Internal, "rank bookkeeping broke");
    return cycles - boundaries;
}

} // namespace dgdual
