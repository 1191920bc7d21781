#include <doctest.h>

#include <random>

#include "qhx/chain.hpp"
#include "qhx/families.hpp"
#include "qhx/multipath.hpp"
#include "qhx/snf.hpp"

using namespace qhx;

namespace {

SparseIntMat from_dense(const std::vector<std::vector<int>>& rows) {
    SparseIntMat m(static_cast<int>(rows.size()),
                   rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c)
            if (rows[r][c]) m.set(static_cast<int>(r), static_cast<int>(c), rows[r][c]);
    return m;
}

std::vector<BigInt> factors(const SparseIntMat& m) {
    return smith_normal_form(m).invariant_factors;
}

// Random unimodular row/column operations: adds, swaps, sign flips.
void scramble(SparseIntMat& m, std::mt19937_64& rng, int ops) {
    auto pick = [&](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };
    for (int s = 0; s < ops; ++s) {
        if (m.rows() == 0 || m.cols() == 0) return;
        int kind = pick(4);
        if (kind == 0) {  // row add
            int a = pick(m.rows()), b = pick(m.rows());
            if (a == b) continue;
            int q = pick(5) - 2;
            for (const auto& [c, v] : m.row(b)) m.add(a, c, q * v);
        } else if (kind == 1) {  // column add
            int a = pick(m.cols()), b = pick(m.cols());
            if (a == b) continue;
            BigInt q = pick(5) - 2;
            for (int r = 0; r < m.rows(); ++r) {
                BigInt v = m.get(r, b);
                if (v != 0) m.add(r, a, q * v);
            }
        } else if (kind == 2) {  // row swap
            int a = pick(m.rows()), b = pick(m.rows());
            auto ra = m.row(a), rb = m.row(b);
            for (const auto& [c, v] : ra) m.set(a, c, 0);
            for (const auto& [c, v] : rb) m.set(b, c, 0);
            for (const auto& [c, v] : ra) m.set(b, c, v);
            for (const auto& [c, v] : rb) m.set(a, c, v);
        } else {  // row negate
            int a = pick(m.rows());
            auto ra = m.row(a);
            for (const auto& [c, v] : ra) m.set(a, c, -v);
        }
    }
}

}  // namespace

TEST_CASE("invariant factors of small matrices") {
    CHECK(factors(from_dense({{2, 4}, {6, 8}})) == std::vector<BigInt>{2, 4});
    CHECK(factors(from_dense({{1, 0}, {0, 1}})) == std::vector<BigInt>{1, 1});
    CHECK(factors(from_dense({{0, 0}, {0, 0}})).empty());
    CHECK(factors(from_dense({{6}})) == std::vector<BigInt>{6});
    CHECK(factors(from_dense({{4, 0}, {0, 6}})) == std::vector<BigInt>{2, 12});
    CHECK(factors(from_dense({{2, 0}, {0, 3}})) == std::vector<BigInt>{1, 6});
    CHECK(factors(SparseIntMat(0, 5)).empty());
    CHECK(factors(SparseIntMat(5, 0)).empty());
}

TEST_CASE("identity matrices") {
    for (int n : {1, 3, 7}) {
        SparseIntMat m(n, n);
        for (int i = 0; i < n; ++i) m.set(i, i, 1);
        SmithResult s = smith_normal_form(m);
        CHECK(s.rank == n);
        CHECK(s.invariant_factors == std::vector<BigInt>(n, 1));
    }
}

TEST_CASE("boundary of the triangle has rank 2 with unit factors") {
    SimplicialComplex tri = multipath_complex(family_P(3));  // boundary of the 2-simplex
    ChainComplexZ cc = chain_complex(tri, false);
    SmithResult s = smith_normal_form(*cc.boundary(1));
    CHECK(s.rank == 2);
    CHECK(s.invariant_factors == std::vector<BigInt>{1, 1});
}

TEST_CASE("factors are invariant under unimodular scrambles") {
    std::mt19937_64 rng(52001);
    std::vector<std::vector<std::vector<int>>> seeds = {
        {{2, 4}, {6, 8}},
        {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}},
        {{12, 0, 0}, {0, 30, 0}, {0, 0, 0}},
        {{3, 1, 0, 2}, {0, 5, 0, 0}},
        {{2, 0}, {0, 2}},
    };
    for (const auto& seed : seeds) {
        SparseIntMat base = from_dense(seed);
        std::vector<BigInt> expected = factors(base);
        for (int t = 0; t < 20; ++t) {
            SparseIntMat m = base;
            scramble(m, rng, 25);
            CHECK(factors(m) == expected);
        }
    }
}

TEST_CASE("scrambled diagonal recovers the planted factors, dense path included") {
    std::mt19937_64 rng(52002);
    // 60x60 with full fill after scrambling exercises the dense fallback.
    for (int n : {12, 60}) {
        SparseIntMat m(n, n);
        std::vector<BigInt> planted;
        for (int i = 0; i < n / 2; ++i) {
            BigInt d = (i % 3 == 0) ? 1 : (i % 3 == 1 ? 2 : 6);
            m.set(i, i, d);
            planted.push_back(d);
        }
        std::sort(planted.begin(), planted.end());
        scramble(m, rng, 6 * n);
        SmithResult s = smith_normal_form(m);
        CHECK(s.invariant_factors == planted);
    }
}

TEST_CASE("divisibility chain always holds") {
    std::mt19937_64 rng(52003);
    for (int t = 0; t < 200; ++t) {
        int r = std::uniform_int_distribution<int>(1, 6)(rng);
        int c = std::uniform_int_distribution<int>(1, 6)(rng);
        SparseIntMat m(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) {
                int v = std::uniform_int_distribution<int>(-9, 9)(rng);
                if (v) m.set(i, j, v);
            }
        SmithResult s = smith_normal_form(m);
        for (std::size_t i = 0; i + 1 < s.invariant_factors.size(); ++i) {
            CHECK(s.invariant_factors[i] > 0);
            CHECK(s.invariant_factors[i + 1] % s.invariant_factors[i] == 0);
        }
    }
}

TEST_CASE("transpose preserves the factors") {
    std::mt19937_64 rng(52004);
    for (int t = 0; t < 100; ++t) {
        int r = std::uniform_int_distribution<int>(1, 5)(rng);
        int c = std::uniform_int_distribution<int>(1, 5)(rng);
        SparseIntMat m(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) {
                int v = std::uniform_int_distribution<int>(-6, 6)(rng);
                if (v) m.set(i, j, v);
            }
        CHECK(factors(m) == factors(m.transposed()));
    }
}
