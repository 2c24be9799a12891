#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "dgdual/sparse.hpp"

using namespace dgdual;

namespace {

template <class K>
SparseMatrix<K> from_dense(const std::vector<std::vector<long long>>& rows) {
    std::vector<typename SparseMatrix<K>::Entry> e;
    int nr = static_cast<int>(rows.size());
    int nc = nr ? static_cast<int>(rows[0].size()) : 0;
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j)
            if (rows[i][j] != 0) e.push_back({i, j, K(rows[i][j])});
    return SparseMatrix<K>(nr, nc, std::move(e));
}

// independent oracle: dense Gaussian elimination over the rationals
size_t dense_rank_oracle(std::vector<std::vector<Rat>> m) {
    size_t rank = 0;
    size_t nr = m.size(), nc = nr ? m[0].size() : 0;
    size_t row = 0;
    for (size_t col = 0; col < nc && row < nr; ++col) {
        size_t piv = row;
        while (piv < nr && m[piv][col].is_zero()) ++piv;
        if (piv == nr) continue;
        std::swap(m[piv], m[row]);
        for (size_t i = 0; i < nr; ++i) {
            if (i == row || m[i][col].is_zero()) continue;
            Rat f = m[i][col] / m[row][col];
            for (size_t j = col; j < nc; ++j) m[i][j] -= f * m[row][j];
        }
        ++row, ++rank;
    }
    return rank;
}

std::vector<std::vector<Rat>> random_dense(std::mt19937& rng, int nr, int nc) {
    std::uniform_int_distribution<int> val(-3, 3);
    std::vector<std::vector<Rat>> m(nr, std::vector<Rat>(nc, Rat(0)));
    for (auto& r : m)
        for (auto& x : r) x = Rat(val(rng));
    return m;
}

template <class K>
SparseMatrix<K> to_sparse(const std::vector<std::vector<Rat>>& m) {
    std::vector<typename SparseMatrix<K>::Entry> e;
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[i].size(); ++j)
            if (!m[i][j].is_zero())
                e.push_back({static_cast<int>(i), static_cast<int>(j), m[i][j]});
    return SparseMatrix<K>(static_cast<int>(m.size()),
                           m.empty() ? 0 : static_cast<int>(m[0].size()), std::move(e));
}

} // namespace

TEST_CASE("scalar arithmetic") {
    CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
    CHECK((Rat(2, 4)).str() == "1/2");
    CHECK(Rat(-4, 2).str() == "-2");
    CHECK(parse_scalar<Rat>("-7/3") == Rat(-7, 3));
    CHECK_THROWS_AS(parse_scalar<Rat>("1.5"), Error);

    Fp::set_modulus(7);
    CHECK(Fp(10) == Fp(3));
    CHECK(Fp(3) * Fp(5) == Fp(1));
    CHECK(Fp(3).inverse() == Fp(5));
    CHECK(parse_scalar<Fp>("1/2") == Fp(4));
    CHECK_THROWS_AS(Fp::set_modulus(6), Error);
    Fp::set_modulus(7);
}

TEST_CASE("rank basics") {
    CHECK(rank(SparseMatrix<Rat>::zero(3, 3)) == 0);
    CHECK(rank(SparseMatrix<Rat>::identity(4)) == 4);
    CHECK(rank(from_dense<Rat>({{1, 2}, {2, 4}})) == 1);

    Fp::set_modulus(5);
    CHECK(rank(from_dense<Fp>({{1, 2}, {2, 4}})) == 1);
    // 2x2 with determinant 5: invertible over Q, singular mod 5
    auto m = from_dense<Rat>({{1, 2}, {3, 11}});
    auto mp = from_dense<Fp>({{1, 2}, {3, 11}});
    CHECK(rank(m) == 2);
    CHECK(rank(mp) == 1);
}

TEST_CASE("kernel basics") {
    CHECK(kernel_basis(SparseMatrix<Rat>::identity(2)).empty());
    CHECK(kernel_basis(SparseMatrix<Rat>::zero(1, 3)).size() == 3);

    auto m = from_dense<Rat>({{1, 1, 0}, {0, 0, 1}});
    auto kb = kernel_basis(m);
    REQUIRE(kb.size() == 1);
    // proportional to (1,-1,0)
    REQUIRE(kb[0].size() == 2);
    CHECK(kb[0][0].first == 0);
    CHECK(kb[0][1].first == 1);
    CHECK(kb[0][0].second == -kb[0][1].second);
    for (const auto& v : kb) CHECK(m.apply(v).empty());
}

TEST_CASE("homology_dim examples") {
    // 0 -> V -> 0 with dim V = 5
    CHECK(homology_dim(SparseMatrix<Rat>::zero(5, 0), SparseMatrix<Rat>::zero(0, 5)) == 5);
    // acyclic: d_in identity
    CHECK(homology_dim(SparseMatrix<Rat>::identity(3), SparseMatrix<Rat>::zero(0, 3)) == 0);
    // exact pair Q -> Q^2 -> Q
    auto d_in = from_dense<Rat>({{1}, {0}});
    auto d_out = from_dense<Rat>({{0, 1}});
    CHECK(homology_dim(d_in, d_out) == 0);

    CHECK_THROWS_AS(homology_dim(from_dense<Rat>({{1}}), from_dense<Rat>({{1}})), Error);
}

TEST_CASE("rank-nullity and transpose rank on random matrices") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 40; ++trial) {
        int nr = 1 + static_cast<int>(rng() % 6);
        int nc = 1 + static_cast<int>(rng() % 6);
        auto dense = random_dense(rng, nr, nc);
        auto m = to_sparse<Rat>(dense);
        size_t r = rank(m);
        CHECK(r == dense_rank_oracle(dense));
        CHECK(r == rank(m.transpose()));
        CHECK(r + kernel_basis(m).size() == static_cast<size_t>(m.cols()));
        for (const auto& v : kernel_basis(m)) CHECK(m.apply(v).empty());
    }
}

TEST_CASE("homology_dim invariant under basis change") {
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> val(-2, 2);
    for (int trial = 0; trial < 25; ++trial) {
        // build a composable pair: d_out (a x b), d_in = kernel-valued (b x c)
        int a = 1 + static_cast<int>(rng() % 3);
        int b = 2 + static_cast<int>(rng() % 3);
        auto d_out = to_sparse<Rat>(random_dense(rng, a, b));
        auto kb = kernel_basis(d_out);
        if (kb.empty()) continue;
        // d_in columns = random combinations of kernel vectors
        int c = 1 + static_cast<int>(rng() % 3);
        std::vector<SparseMatrix<Rat>::Entry> ent;
        for (int j = 0; j < c; ++j) {
            SparseVec<Rat> col;
            for (const auto& kv : kb) axpy(col, Rat(val(rng)), kv);
            for (auto& [i, x] : col) ent.push_back({i, j, x});
        }
        SparseMatrix<Rat> d_in(b, c, ent);
        size_t h = homology_dim(d_in, d_out);

        // random invertible row/col basis changes (unitriangular, hence invertible)
        auto unitri = [&](int n) {
            std::vector<SparseMatrix<Rat>::Entry> e;
            for (int i = 0; i < n; ++i) e.push_back({i, i, Rat(1)});
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (int v = val(rng); v != 0) e.push_back({i, j, Rat(v)});
            return SparseMatrix<Rat>(n, n, e);
        };
        auto P = unitri(a), Q = unitri(b), R = unitri(c);
        CHECK(homology_dim(Q * d_in * R, P * d_out * Q) == h);
    }
}
