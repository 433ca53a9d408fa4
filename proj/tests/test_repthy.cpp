#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "expoweyl/repthy.hpp"
#include "test_util.hpp"

using namespace expoweyl;

namespace {

RingConfigPtr lambda_cfg() { return make_default_config(); }

RingConfigPtr sqrt2_embedded_cfg() {
    return make_ring_config({{"sqrt2", {Rational(-2), Rational(0), Rational(1)}}}, {},
                            {"1", "sqrt2"}, {1, 0}, Variant::constant, {});
}

RingConfigPtr sqrt2_scalar_cfg() {
    return make_ring_config({{"sqrt2", {Rational(-2), Rational(0), Rational(1)}}}, {}, {"1"},
                            {1}, Variant::constant, {});
}

// brute force: multiplicities of each generator bounded by `cap`
long long brute_multisets(const std::vector<LatticeVector>& gens, const LatticeVector& n,
                          long long cap) {
    std::vector<long long> k(gens.size(), 0);
    long long count = 0;
    for (;;) {
        LatticeVector s(n.size(), 0);
        for (std::size_t i = 0; i < gens.size(); ++i)
            for (std::size_t m = 0; m < s.size(); ++m) s[m] += k[i] * gens[i][m];
        if (s == n) ++count;
        std::size_t i = 0;
        while (i < k.size() && k[i] == cap) k[i++] = 0;
        if (i == k.size()) break;
        ++k[i];
    }
    return count;
}

} // namespace

TEST_CASE("weight dims over a single lowering generator are all one") {
    NegativePart neg(std::vector<LatticeVector>{{-1}});
    for (long long n = 0; n <= 20; ++n) CHECK(verma_weight_dim(neg, {-n}) == 1);
    CHECK(verma_weight_dim(neg, {-7}) == 1);
    CHECK(verma_weight_dim(neg, {1}) == 0);
}

TEST_CASE("weight dims with generators -1, -2 count partitions into parts 1 and 2") {
    NegativePart neg(std::vector<LatticeVector>{{-1}, {-2}});
    // (1,1,1,1), (1,1,2), (2,2)
    CHECK(verma_weight_dim(neg, {-4}) == 3);
    CHECK(verma_weight_dim(neg, {0}) == 1);
    for (long long n = 0; n <= 20; ++n)
        CHECK(verma_weight_dim(neg, {-n}) == n / 2 + 1);
}

TEST_CASE("weight dims agree with brute-force enumeration") {
    std::vector<LatticeVector> g1{{-1}, {-2}, {-3}};
    NegativePart n1(g1);
    for (long long n = 0; n <= 12; ++n)
        CHECK(verma_weight_dim(n1, {-n}) == brute_multisets(g1, {-n}, 12));

    std::vector<LatticeVector> g2{{-1, 0}, {-1, 1}, {0, -1}};
    NegativePart n2(g2);
    for (long long a = 0; a <= 5; ++a)
        for (long long b = -5; b <= 5; ++b)
            CHECK(verma_weight_dim(n2, {-a, b}) == brute_multisets(g2, {-a, b}, 10));
}

TEST_CASE("ordered tuple counts") {
    NegativePart neg(std::vector<LatticeVector>{{-1}, {-2}});
    // f(n) = f(n-1) + f(n-2): compositions into parts 1 and 2
    std::vector<long long> fib{1, 1};
    for (int n = 2; n <= 15; ++n) fib.push_back(fib[n - 1] + fib[n - 2]);
    for (long long n = 0; n <= 15; ++n)
        CHECK(verma_weight_dim(neg, {-n}, true) == fib[static_cast<std::size_t>(n)]);
    // ordered >= unordered always
    NegativePart neg2(std::vector<LatticeVector>{{-1, 0}, {0, -1}});
    CHECK(verma_weight_dim(neg2, {-2, -2}, true) == 6);
    CHECK(verma_weight_dim(neg2, {-2, -2}) == 1);
}

TEST_CASE("negative part validation") {
    CHECK_THROWS_AS(NegativePart(std::vector<LatticeVector>{}), std::invalid_argument);
    CHECK_THROWS_AS(NegativePart(std::vector<LatticeVector>{{-1}, {-1, 0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(NegativePart(std::vector<LatticeVector>{{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(NegativePart(std::vector<LatticeVector>{{1, -1}}), std::invalid_argument);
    CHECK_THROWS_AS(NegativePart(std::vector<LatticeVector>{{0, -1}, {2, -5}}),
                    std::invalid_argument);
    CHECK_NOTHROW(NegativePart(std::vector<LatticeVector>{{-1, 7}, {0, -1}}));
}

TEST_CASE("degree operator eigenvalues on the rank-1 module") {
    auto cfg = lambda_cfg();
    auto lambda = FieldScalar::symbol(cfg->table, "lambda");
    CHECK(verma_action_rank1(lambda, 0) == lambda);
    CHECK(verma_action_rank1(lambda, 3) ==
          lambda - FieldScalar(cfg->table, Rational(3)));
    CHECK(verma_action_rank1(FieldScalar(cfg->table, Rational(5)), 5).is_zero());
    // formal lambda separates all depths
    for (long long i = 0; i <= 8; ++i)
        for (long long j = i + 1; j <= 8; ++j)
            CHECK(verma_action_rank1(lambda, i) != verma_action_rank1(lambda, j));
    CHECK_THROWS_AS(verma_action_rank1(lambda, -1), std::invalid_argument);
}

TEST_CASE("euler characters of the two-term resolution") {
    auto cfg = make_default_config();
    auto w = [&](long long m) { return FieldScalar(cfg->table, Rational(m)); };

    auto ch1 = bgg_character(cfg->table, 1, 6);
    CHECK(ch1.dim(w(1)) == 1);
    CHECK(ch1.dim(w(0)) == 1);
    CHECK(ch1.dim(w(-1)) == 1);
    CHECK(ch1.dim(w(-2)) == 1);
    CHECK(ch1.dim(w(-3)) == 0);
    CHECK(ch1.total() == 4);

    auto ch0 = bgg_character(cfg->table, 0, 4);
    CHECK(ch0.dim(w(0)) == 1);
    CHECK(ch0.dim(w(-1)) == 1);
    CHECK(ch0.total() == 2);

    for (long long n = 0; n <= 10; ++n) {
        auto ch = bgg_character(cfg->table, n, static_cast<int>(2 * n + 4));
        CHECK(ch.total() == 2 * n + 2);
        for (const auto& [weight, dim] : ch.entries()) CHECK(dim >= 0);
    }
    CHECK_THROWS_AS(bgg_character(cfg->table, -1, 4), std::invalid_argument);
    CHECK_THROWS_AS(bgg_character(cfg->table, 2, 0), std::invalid_argument);
}

TEST_CASE("duality negates weights") {
    auto cfg = make_default_config();
    auto w = [&](long long m) { return FieldScalar(cfg->table, Rational(m)); };
    Character ch;
    ch.add(w(1), 1);
    ch.add(w(0), 1);
    auto dual = duality_on_characters(ch);
    CHECK(dual.dim(w(-1)) == 1);
    CHECK(dual.dim(w(0)) == 1);
    CHECK(dual.dim(w(1)) == 0);
    CHECK(dual.total() == ch.total());
    CHECK(duality_on_characters(dual) == ch);

    for (long long n = 0; n <= 6; ++n) {
        auto c = bgg_character(cfg->table, n, static_cast<int>(2 * n + 4));
        CHECK(duality_on_characters(duality_on_characters(c)) == c);
        CHECK(duality_on_characters(c).total() == c.total());
    }
}

TEST_CASE("support classification") {
    auto cfg = lambda_cfg();
    CHECK(classify_support(cfg, FieldScalar::symbol(cfg->table, "lambda")) ==
          SupportType::dense);
    CHECK(classify_support(cfg, FieldScalar(cfg->table, Rational(0))) ==
          SupportType::discrete);
    CHECK(classify_support(cfg, FieldScalar(cfg->table, Rational(7, 3))) ==
          SupportType::discrete);

    auto emb = sqrt2_embedded_cfg();
    CHECK(classify_support(emb, FieldScalar::symbol(emb->table, "sqrt2")) ==
          SupportType::discrete);

    auto sc = sqrt2_scalar_cfg();
    CHECK(classify_support(sc, FieldScalar::symbol(sc->table, "sqrt2")) ==
          SupportType::dense);
    CHECK(classify_support(sc, FieldScalar(sc->table, Rational(2))) ==
          SupportType::discrete);
}

TEST_CASE("discrete weight module action") {
    auto cfg = lambda_cfg();
    auto q = FieldScalar::symbol(cfg->table, "lambda");
    auto one = FieldScalar(cfg->table, Rational(1));

    auto [w0, e0] = discrete_module_action(0, 0, q);
    CHECK(w0.is_zero());
    CHECK(e0 == one);

    auto [w1, e1] = discrete_module_action(2, 1, q);
    CHECK(w1 == FieldScalar(cfg->table, Rational(3)));
    CHECK(e1 == q * q * q);

    for (long long n = 0; n <= 5; ++n) {
        auto [w, e] = discrete_module_action(n, 0, one);
        CHECK(w == FieldScalar(cfg->table, Rational(n)));
        CHECK(e == one);
    }
    CHECK_THROWS_AS(discrete_module_action(1, 1, FieldScalar(cfg->table, Rational(0))),
                    std::invalid_argument);
}
