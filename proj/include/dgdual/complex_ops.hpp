#pragma once

#include <string>
#include <vector>

#include "dgdual/graded.hpp"

namespace dgdual {

// Global sign conventions, used by every module:
//   - symmetry          u (x) v  ->  (-1)^{|u||v|} v (x) u
//   - tensor Leibniz    d(u (x) v) = du (x) v + (-1)^{|u|} u (x) dv
//   - maps              (f (x) g)(u (x) v) = (-1)^{|g||u|} f(u) (x) g(v)
//   - shift by n        multiplies the differential by (-1)^n
//   - linear dual       blocks are negated transposes (see dual() below)

inline std::string tensor_label(const std::string& a, const std::string& b) {
    return a + "⊗" + b; // (x)
}

// (x (x) y)_d = sum over a+b=d of x_a (x) y_b, restricted to the window.
// Basis order at degree d: ascending a, then x-basis order, then y-basis order.
template <class K>
ChainComplex<K> tensor(const ChainComplex<K>& x, const ChainComplex<K>& y,
                       const TruncationWindow& w) {
    ComplexBuilder<K> b;
    auto xs = x.space().support();
    auto ys = y.space().support();
    for (int d = w.deg_lo; d <= w.deg_hi; ++d)
        for (int a : xs)
            for (int bb : ys) {
                if (a + bb != d) continue;
                for (const auto& lu : x.space().labels(a))
                    for (const auto& lv : y.space().labels(bb))
                        b.add_basis(d, tensor_label(lu, lv));
            }
    // d(u (x) v) = du (x) v + (-1)^{|u|} u (x) dv
    for (int a : xs) {
        auto xcols = x.diff_block(a).columns();
        for (int bb : ys) {
            if (!w.contains(a + bb)) continue;
            auto ycols = y.diff_block(bb).columns();
            K sgn = (a % 2 == 0) ? K(1) : K(-1);
            for (int ui = 0; ui < x.dim(a); ++ui) {
                const auto& lu = x.space().labels(a)[ui];
                for (int vi = 0; vi < y.dim(bb); ++vi) {
                    const auto& lv = y.space().labels(bb)[vi];
                    std::string from = tensor_label(lu, lv);
                    if (w.contains(a - 1 + bb))
                        for (const auto& [r, c] : xcols[ui])
                            b.add_diff(from, tensor_label(x.space().labels(a - 1)[r], lv), c);
                    if (w.contains(a + bb - 1))
                        for (const auto& [r, c] : ycols[vi])
                            b.add_diff(from, tensor_label(lu, y.space().labels(bb - 1)[r]),
                                       sgn * c);
                }
            }
        }
    }
    return b.build();
}

// (x[n])_d = x_{d-n}; labels are kept, the differential picks up (-1)^n.
template <class K>
ChainComplex<K> shift(const ChainComplex<K>& x, int n) {
    ComplexBuilder<K> b;
    for (int d : x.space().support())
        for (const auto& l : x.space().labels(d)) b.add_basis(d + n, l);
    K sgn = (n % 2 == 0) ? K(1) : K(-1);
    for (int d : x.space().support()) {
        const auto& blk = x.diff_block(d);
        for (const auto& e : blk.entries())
            b.add_diff(x.space().labels(d)[e.col], x.space().labels(d - 1)[e.row], sgn * e.val);
    }
    return b.build();
}

inline std::string dual_label(const std::string& l) {
    static const std::string mark = "∨"; // "v" for the dual basis vector
    if (l.size() >= mark.size() && l.compare(l.size() - mark.size(), mark.size(), mark) == 0)
        return l.substr(0, l.size() - mark.size());
    return l + mark;
}

// Linear dual: (x^v)_d = (x_{-d})^v with differential the negated transpose,
//   block at dual degree e  =  - (block of x at degree 1-e)^T.
// With this convention dual(dual(x)) == x on the nose (labels toggle a
// trailing dual mark), which is the involution the rest of the code relies
// on. Homology satisfies dim H_d(x^v) = dim H_{-d}(x) either way.
template <class K>
ChainComplex<K> dual(const ChainComplex<K>& x) {
    ComplexBuilder<K> b;
    for (int d : x.space().support())
        for (const auto& l : x.space().labels(d)) b.add_basis(-d, dual_label(l));
    for (int d : x.space().support()) {
        // x block at degree d contributes to the dual block at degree 1-d.
        const auto& blk = x.diff_block(d); // x_d -> x_{d-1}
        for (const auto& e : blk.entries())
            b.add_diff(dual_label(x.space().labels(d - 1)[e.row]),
                       dual_label(x.space().labels(d)[e.col]), -e.val);
    }
    return b.build();
}

// Direct sum; label prefixes keep the two copies distinguishable.
template <class K>
ChainComplex<K> direct_sum(const ChainComplex<K>& x, const ChainComplex<K>& y,
                           const std::string& px, const std::string& py) {
    ComplexBuilder<K> b;
    for (int d : x.space().support())
        for (const auto& l : x.space().labels(d)) b.add_basis(d, px + l);
    for (int d : y.space().support())
        for (const auto& l : y.space().labels(d)) b.add_basis(d, py + l);
    for (int d : x.space().support())
        for (const auto& e : x.diff_block(d).entries())
            b.add_diff(px + x.space().labels(d)[e.col], px + x.space().labels(d - 1)[e.row], e.val);
    for (int d : y.space().support())
        for (const auto& e : y.diff_block(d).entries())
            b.add_diff(py + y.space().labels(d)[e.col], py + y.space().labels(d - 1)[e.row], e.val);
    return b.build();
}

// Coordinate subcomplex spanned by the given labels; the differential must
// not leave the span.
template <class K>
ChainComplex<K> subcomplex(const ChainComplex<K>& x, const std::vector<std::string>& labels) {
    ComplexBuilder<K> b;
    std::unordered_map<std::string, bool> keep;
    for (const auto& l : labels) keep[l] = true;
    for (int d : x.space().support())
        for (const auto& l : x.space().labels(d))
            if (keep.count(l)) b.add_basis(d, l);
    for (int d : x.space().support()) {
        const auto& ls = x.space().labels(d);
        for (const auto& e : x.diff_block(d).entries()) {
            const auto& from = ls[e.col];
            const auto& to = x.space().labels(d - 1)[e.row];
            if (!keep.count(from)) continue;
            require(keep.count(to) > 0, ErrorCode::ValidationError,
                    "span of given labels is not d-stable: d(" + from + ") meets " + to);
            b.add_diff(from, to, e.val);
        }
    }
    return b.build();
}

namespace detail {

// Reduction data for a degreewise subspace W of a complex: row echelon of
// the spanning vectors per degree.
template <class K>
struct SubspaceReducer {
    std::map<int, Echelon<K>> ech;
    std::map<int, std::vector<bool>> is_pivot;

    void set(int degree, const std::vector<SparseVec<K>>& vectors, int ambient_dim) {
        Echelon<K> e = field_echelon<K>(vectors);
        std::vector<bool> piv(ambient_dim, false);
        for (int c : e.pivot_cols) piv[c] = true;
        ech[degree] = std::move(e);
        is_pivot[degree] = std::move(piv);
    }

    // v modulo W at this degree (pivot coordinates eliminated).
    SparseVec<K> reduce(int degree, SparseVec<K> v) const {
        auto it = ech.find(degree);
        if (it == ech.end()) return v;
        const auto& e = it->second;
        for (size_t r = 0; r < e.rows.size(); ++r) {
            int pc = e.pivot_cols[r];
            K coeff(0);
            for (const auto& [j, val] : v)
                if (j == pc) { coeff = val; break; }
            if (!coeff.is_zero()) axpy(v, -(coeff / e.rows[r].front().second), e.rows[r]);
        }
        return v;
    }

    bool pivot(int degree, int coord) const {
        auto it = is_pivot.find(degree);
        return it != is_pivot.end() && it->second[coord];
    }
};

} // namespace detail

// Quotient of x by the d-stable graded subspace spanned degreewise by
// `spans`. The quotient basis consists of the coordinates that are not
// pivots of the span; their original labels are kept.
template <class K>
ChainComplex<K> quotient_complex(const ChainComplex<K>& x,
                                 const std::map<int, std::vector<SparseVec<K>>>& spans) {
    detail::SubspaceReducer<K> red;
    for (auto& [d, vecs] : spans) red.set(d, vecs, x.dim(d));

    // d-stability: d(W_d) must land in W_{d-1}
    for (auto& [d, vecs] : spans)
        for (const auto& v : vecs) {
            auto dv = red.reduce(d - 1, x.apply_diff(d, v));
            require(dv.empty(), ErrorCode::ValidationError,
                    "quotient span is not d-stable at degree " + std::to_string(d));
        }

    ComplexBuilder<K> b;
    for (int d : x.space().support()) {
        const auto& ls = x.space().labels(d);
        for (int i = 0; i < static_cast<int>(ls.size()); ++i)
            if (!red.pivot(d, i)) b.add_basis(d, ls[i]);
    }
    for (int d : x.space().support()) {
        const auto& ls = x.space().labels(d);
        const auto& tls = x.space().labels(d - 1);
        for (int i = 0; i < static_cast<int>(ls.size()); ++i) {
            if (red.pivot(d, i)) continue;
            auto dv = red.reduce(d - 1, x.diff_block(d).columns()[i]);
            for (const auto& [r, c] : dv) {
                require(!red.pivot(d - 1, r), ErrorCode::Internal, "reduction left a pivot");
                b.add_diff(ls[i], tls[r], c);
            }
        }
    }
    return b.build();
}

} // namespace dgdual
