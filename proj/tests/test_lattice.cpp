#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "expoweyl/lattice.hpp"
#include "test_util.hpp"

using namespace expoweyl;

namespace {

long long euclid_gcd_oracle(LatticeVector v) {
    long long g = 0;
    for (long long x : v) {
        x = x < 0 ? -x : x;
        while (x != 0) {
            long long r = g % x;
            g = x;
            x = r;
        }
    }
    return g;
}

UnimodularMatrix rand_unimodular(testutil::Rng& rng, std::size_t n, int steps = 8) {
    auto M = UnimodularMatrix::identity(n);
    for (int s = 0; s < steps; ++s) {
        auto E = UnimodularMatrix::identity(n).rows();
        std::size_t i = testutil::rand_int(rng, 0, n - 1);
        std::size_t j = testutil::rand_int(rng, 0, n - 1);
        if (i == j) {
            E[i][i] = -1; // reflection
        } else {
            E[i][j] = testutil::rand_int(rng, -2, 2); // shear
        }
        M = M * UnimodularMatrix(std::move(E));
    }
    return M;
}

} // namespace

TEST_CASE("content") {
    CHECK(content({4, 6}) == 2);
    CHECK(content({0, 0}) == 0);
    CHECK(content({3, 5, 7}) == euclid_gcd_oracle({3, 5, 7}));
    CHECK(content({3, 5, 7}) == 1);
}

TEST_CASE("is_primitive") {
    CHECK(is_primitive({1, 1}));
    CHECK_FALSE(is_primitive({2, 4}));
    CHECK(euclid_gcd_oracle({6, 10, 15}) == 1);
    CHECK(is_primitive({6, 10, 15}));
}

TEST_CASE("complete_to_basis basics") {
    CHECK(complete_to_basis({1, 0}) == UnimodularMatrix::identity(2));
    auto M = complete_to_basis({2, 3});
    CHECK(M(0, 0) == 2);
    CHECK(M(1, 0) == 3);
    long long d = M.det();
    CHECK((d == 1 || d == -1));
    auto S = complete_to_basis({0, 1});
    CHECK(apply_matrix(S, {1, 0}) == LatticeVector{0, 1});
}

TEST_CASE("complete_to_basis rejects non-primitive input") {
    CHECK_THROWS_AS(complete_to_basis({2, 4}), std::invalid_argument);
    CHECK_THROWS_AS(complete_to_basis({0, 0}), std::invalid_argument);
}

TEST_CASE("apply_matrix") {
    auto I = UnimodularMatrix::identity(2);
    CHECK(apply_matrix(I, {5, -2}) == LatticeVector{5, -2});
    UnimodularMatrix swap({{0, 1}, {1, 0}});
    CHECK(apply_matrix(swap, {1, 2}) == LatticeVector{2, 1});
    UnimodularMatrix M({{1, 0}, {1, -1}});
    CHECK(apply_matrix(M, {1, 1}) == LatticeVector{1, 0});
}

TEST_CASE("content is a GL(r,Z)-orbit invariant") {
    testutil::Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        auto M = rand_unimodular(rng, 3);
        auto v = testutil::rand_vec(rng, 3, -10, 10);
        CHECK(content(apply_matrix(M, v)) == content(v));
    }
}

TEST_CASE("complete_to_basis over all primitive vectors in [-10,10]^2") {
    for (long long a = -10; a <= 10; ++a)
        for (long long b = -10; b <= 10; ++b) {
            LatticeVector v{a, b};
            if (!is_primitive(v)) continue;
            auto M = complete_to_basis(v);
            CHECK(apply_matrix(M, {1, 0}) == v);
            long long d = M.det();
            CHECK((d == 1 || d == -1));
        }
}

TEST_CASE("equal nonzero content vectors are connected by a unimodular matrix") {
    testutil::Rng rng(21);
    for (int i = 0; i < 100; ++i) {
        auto v = testutil::rand_vec(rng, 2, -6, 6);
        auto w = testutil::rand_vec(rng, 2, -6, 6);
        long long cv = content(v);
        if (cv == 0 || cv != content(w)) continue;
        LatticeVector pv{v[0] / cv, v[1] / cv}, pw{w[0] / cv, w[1] / cv};
        auto M = complete_to_basis(pw) * complete_to_basis(pv).inverse();
        CHECK(apply_matrix(M, v) == w);
    }
}

TEST_CASE("matrix inverse") {
    testutil::Rng rng(3);
    for (int i = 0; i < 50; ++i) {
        auto M = rand_unimodular(rng, 3);
        CHECK(M * M.inverse() == UnimodularMatrix::identity(3));
        CHECK(M.inverse() * M == UnimodularMatrix::identity(3));
    }
}

TEST_CASE("non-unimodular matrix rejected") {
    CHECK_THROWS_AS(UnimodularMatrix({{2, 0}, {0, 1}}), std::invalid_argument);
}
