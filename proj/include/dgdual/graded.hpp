#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "dgdual/error.hpp"
#include "dgdual/sparse.hpp"

namespace dgdual {

// Degree range and weight cap inside which the infinite complexes (bar,
// cyclic bar, free algebras) are finitized.
struct TruncationWindow {
    int deg_lo = 0;
    int deg_hi = 0;
    int weight_cap = 0;

    TruncationWindow() = default;
    TruncationWindow(int lo, int hi, int cap) : deg_lo(lo), deg_hi(hi), weight_cap(cap) {
        require(lo <= hi, ErrorCode::ValidationError, "window with deg_lo > deg_hi");
        require(cap >= 0, ErrorCode::ValidationError, "negative weight cap");
    }

    bool contains(int d) const { return deg_lo <= d && d <= deg_hi; }
    // Hull closed under negation; duality pipelines compare degree d with -d.
    TruncationWindow symmetric_hull() const {
        int m = std::max(std::abs(deg_lo), std::abs(deg_hi));
        return {-m, m, weight_cap};
    }
};

// Finite-type Z-graded vector space with ordered string basis labels,
// unique across the whole space.
class GradedSpace {
public:
    void add_basis(int degree, const std::string& label) {
        require(index_.find(label) == index_.end(), ErrorCode::ValidationError,
                "duplicate basis label '" + label + "'");
        index_[label] = {degree, static_cast<int>(degrees_[degree].size())};
        degrees_[degree].push_back(label);
    }

    int dim(int degree) const {
        auto it = degrees_.find(degree);
        return it == degrees_.end() ? 0 : static_cast<int>(it->second.size());
    }
    size_t total_dim() const { return index_.size(); }
    const std::vector<std::string>& labels(int degree) const {
        static const std::vector<std::string> none;
        auto it = degrees_.find(degree);
        return it == degrees_.end() ? none : it->second;
    }
    std::vector<int> support() const {
        std::vector<int> out;
        for (auto& [d, ls] : degrees_)
            if (!ls.empty()) out.push_back(d);
        return out;
    }
    int min_degree() const { return degrees_.empty() ? 0 : degrees_.begin()->first; }
    int max_degree() const { return degrees_.empty() ? 0 : degrees_.rbegin()->first; }

    bool has_label(const std::string& label) const { return index_.count(label) > 0; }
    // (degree, position within degree)
    std::pair<int, int> locate(const std::string& label) const {
        auto it = index_.find(label);
        require(it != index_.end(), ErrorCode::ValidationError, "unknown label '" + label + "'");
        return it->second;
    }
    int degree_of(const std::string& label) const { return locate(label).first; }

private:
    std::map<int, std::vector<std::string>> degrees_;
    std::unordered_map<std::string, std::pair<int, int>> index_;
};

// Degree-homogeneous linear map of graded spaces, one sparse block per
// source degree.
template <class K>
struct GradedMap {
    int shift = 0;
    std::map<int, SparseMatrix<K>> blocks; // source degree -> matrix into degree+shift

    const SparseMatrix<K>& block_or_zero(int d, int rows, int cols) const {
        auto it = blocks.find(d);
        if (it != blocks.end()) {
            require(it->second.rows() == rows && it->second.cols() == cols,
                    ErrorCode::ShapeMismatch, "graded map block shape at degree " + std::to_string(d));
            return it->second;
        }
        static thread_local std::map<std::pair<int, int>, SparseMatrix<K>> zeros;
        auto& z = zeros[{rows, cols}];
        if (z.rows() != rows || z.cols() != cols) z = SparseMatrix<K>::zero(rows, cols);
        return z;
    }

    void validate_shapes(const GradedSpace& src, const GradedSpace& tgt) const {
        for (auto& [d, m] : blocks) {
            require(m.cols() == src.dim(d) && m.rows() == tgt.dim(d + shift),
                    ErrorCode::ShapeMismatch,
                    "block at degree " + std::to_string(d) + " is " + std::to_string(m.rows()) +
                        "x" + std::to_string(m.cols()) + ", expected " +
                        std::to_string(tgt.dim(d + shift)) + "x" + std::to_string(src.dim(d)));
        }
    }
};

struct HomologyRow {
    size_t dim = 0;
    bool reliable = true;
};
using HomologyTable = std::map<int, HomologyRow>;

// Chain complex: graded space with a square-zero differential of degree -1.
template <class K>
class ChainComplex {
public:
    ChainComplex() = default;
    ChainComplex(GradedSpace space, GradedMap<K> diff)
        : space_(std::move(space)), diff_(std::move(diff)) {
        require(diff_.shift == -1, ErrorCode::ValidationError, "differential must have shift -1");
        diff_.validate_shapes(space_, space_);
        for (auto d : space_.support()) {
            auto dd = diff_block(d - 1) * diff_block(d);
            require(dd.is_zero(), ErrorCode::CompositionNonzero,
                    "d.d != 0 out of degree " + std::to_string(d));
        }
    }

    const GradedSpace& space() const { return space_; }
    int dim(int d) const { return space_.dim(d); }
    size_t total_dim() const { return space_.total_dim(); }

    // d_d : C_d -> C_{d-1}
    const SparseMatrix<K>& diff_block(int d) const {
        return diff_.block_or_zero(d, space_.dim(d - 1), space_.dim(d));
    }
    SparseVec<K> apply_diff(int d, const SparseVec<K>& v) const {
        return diff_block(d).apply(v);
    }

    // Per-degree homology dimensions inside the window. A boundary row is
    // unreliable when basis at the window edge may have been truncated away.
    HomologyTable homology(const TruncationWindow& w) const {
        HomologyTable out;
        bool lo_safe = space_.total_dim() == 0 || space_.min_degree() > w.deg_lo;
        bool hi_safe = space_.total_dim() == 0 || space_.max_degree() < w.deg_hi;
        for (int d = w.deg_lo; d <= w.deg_hi; ++d) {
            HomologyRow row;
            row.dim = homology_dim(diff_block(d + 1), diff_block(d));
            row.reliable = (d > w.deg_lo || lo_safe) && (d < w.deg_hi || hi_safe);
            if (row.dim > 0 || space_.dim(d) > 0) out[d] = row;
        }
        return out;
    }

    long long euler_characteristic() const {
        long long chi = 0;
        for (int d : space_.support()) chi += (d % 2 == 0 ? 1 : -1) * space_.dim(d);
        return chi;
    }

private:
    GradedSpace space_;
    GradedMap<K> diff_;
};

// Incremental construction of a complex from labeled basis + differential
// entries; shapes and d.d = 0 are validated at build().
template <class K>
class ComplexBuilder {
public:
    void add_basis(int degree, const std::string& label) { space_.add_basis(degree, label); }
    bool has_label(const std::string& label) const { return space_.has_label(label); }

    void add_diff(const std::string& from, const std::string& to, const K& coeff) {
        if (coeff.is_zero()) return;
        auto [fd, fi] = space_.locate(from);
        auto [td, ti] = space_.locate(to);
        require(td == fd - 1, ErrorCode::ValidationError,
                "differential entry " + from + " -> " + to + " is not of degree -1");
        triplets_[fd].push_back({ti, fi, coeff});
    }

    const GradedSpace& space() const { return space_; }

    ChainComplex<K> build() {
        GradedMap<K> diff;
        diff.shift = -1;
        for (auto& [d, tr] : triplets_)
            diff.blocks.emplace(d, SparseMatrix<K>(space_.dim(d - 1), space_.dim(d), std::move(tr)));
        triplets_.clear();
        return ChainComplex<K>(std::move(space_), std::move(diff));
    }

private:
    GradedSpace space_;
    std::map<int, std::vector<typename SparseMatrix<K>::Entry>> triplets_;
};

} // namespace dgdual
