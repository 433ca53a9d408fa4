#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"

using namespace expoweyl;

namespace {

// rank-2 basis {1, sqrt2}, p = (1, 0), constant variant
RingConfigPtr quad_config(Variant variant = Variant::constant) {
    return make_ring_config({{"sqrt2", {Rational(-2), Rational(0), Rational(1)}}}, {},
                            {"1", "sqrt2"}, {1, 0}, variant,
                            DeformationConfig{QMode::classical, 0});
}

// rank-1 dynamic config with p = (3), matching the worked y-derivative
RingConfigPtr dynamic_p3_config() {
    return make_ring_config({}, {}, {"1"}, {3}, Variant::dynamic,
                            DeformationConfig{QMode::classical, 0});
}

} // namespace

TEST_CASE("exponential addition law") {
    auto cfg = quad_config();
    auto e1 = ExpoPoly::e_power(cfg, {1, 0});   // e^{x}
    auto es = ExpoPoly::e_power(cfg, {0, 1});   // e^{sqrt2 x}
    CHECK(e1 * es == ExpoPoly::e_power(cfg, {1, 1}));
}

TEST_CASE("power inverses cancel") {
    auto cfg = quad_config();
    auto a = ExpoPoly::x_power(cfg, {0, 1});
    auto b = ExpoPoly::x_power(cfg, {0, -1});
    CHECK(a * b == ExpoPoly::one(cfg));
}

TEST_CASE("(1+x)(1-x) = 1-x^2 against expansion oracle") {
    auto cfg = quad_config();
    auto one = ExpoPoly::one(cfg);
    auto x = ExpoPoly::x_power(cfg, {1, 0});
    auto lhs = (one + x) * (one - x);
    auto rhs = one - x * x;
    CHECK(lhs == rhs);
    CHECK(lhs.terms().size() == 2);
}

TEST_CASE("y times y inverse is 1") {
    auto cfg = quad_config();
    CHECK(ExpoPoly::y_power(cfg, 1) * ExpoPoly::y_power(cfg, -1) == ExpoPoly::one(cfg));
}

TEST_CASE("units are exactly the single monomials") {
    auto cfg = quad_config();
    auto y = ExpoPoly::y_power(cfg, 1);
    auto xs = ExpoPoly::x_power(cfg, {0, 1});
    CHECK(is_unit(y * xs.scaled(FieldScalar(cfg->table, 5))));
    auto one = ExpoPoly::one(cfg);
    auto x = ExpoPoly::x_power(cfg, {1, 0});
    CHECK_FALSE(is_unit(one + x));
    CHECK_FALSE(is_unit(ExpoPoly(cfg)));
}

TEST_CASE("is_unit is multiplicative") {
    auto cfg = quad_config();
    testutil::Rng rng(31);
    for (int i = 0; i < 100; ++i) {
        auto f = testutil::rand_expopoly(rng, cfg);
        auto g = testutil::rand_expopoly(rng, cfg);
        if (f.is_zero() || g.is_zero()) continue;
        CHECK(is_unit(f * g) == (is_unit(f) && is_unit(g)));
    }
}

TEST_CASE("delta on generators") {
    auto cfg = quad_config();
    auto x = ExpoPoly::x_power(cfg, {1, 0});
    CHECK(delta(x) == ExpoPoly::one(cfg));
    auto es = ExpoPoly::e_power(cfg, {0, 1});
    FieldScalar s2 = FieldScalar::symbol(cfg->table, "sqrt2");
    CHECK(delta(es) == es.scaled(s2));
}

TEST_CASE("delta of y, dynamic variant with p=3") {
    auto cfg = dynamic_p3_config();
    auto y = ExpoPoly::y_power(cfg, 1);
    FieldScalar t = cfg->t_scalar();
    // delta(y) = y (3 x^2 + t x^3) e^{t x}
    ExpoPoly expected(cfg);
    expected.add_term(ExpoMonomial{1, {0, 1}, {2}}, FieldScalar(cfg->table, 3));
    expected.add_term(ExpoMonomial{1, {0, 1}, {3}}, t);
    CHECK(delta(y) == expected);
}

TEST_CASE("delta of y, constant variant") {
    auto cfg = quad_config(); // p = (1,0) i.e. p^ = 1
    auto y = ExpoPoly::y_power(cfg, 1);
    // delta(y) = tau x^{p-1} y = tau y
    CHECK(delta(y) == y.scaled(cfg->tau_scalar()));
}

TEST_CASE("Leibniz rule on random pairs") {
    auto cfg = quad_config();
    testutil::Rng rng(77);
    for (int i = 0; i < 300; ++i) {
        auto f = testutil::rand_expopoly(rng, cfg);
        auto g = testutil::rand_expopoly(rng, cfg);
        CHECK(delta(f * g) == delta(f) * g + f * delta(g));
    }
}

TEST_CASE("Leibniz rule, dynamic variant") {
    auto cfg = dynamic_p3_config();
    testutil::Rng rng(78);
    for (int i = 0; i < 100; ++i) {
        auto f = testutil::rand_expopoly(rng, cfg);
        auto g = testutil::rand_expopoly(rng, cfg);
        CHECK(delta(f * g) == delta(f) * g + f * delta(g));
    }
}

TEST_CASE("ring ops commutative and associative") {
    auto cfg = quad_config();
    testutil::Rng rng(55);
    for (int i = 0; i < 100; ++i) {
        auto f = testutil::rand_expopoly(rng, cfg);
        auto g = testutil::rand_expopoly(rng, cfg);
        auto h = testutil::rand_expopoly(rng, cfg);
        CHECK(f * g == g * f);
        CHECK((f * g) * h == f * (g * h));
        CHECK((f + g) + h == f + (g + h));
    }
}

TEST_CASE("multidegree") {
    auto cfg = quad_config();
    // y^a e^{b x} x^c: (a+b, c)
    ExpoMonomial m{2, {3, 0}, {5, 0}};
    auto [et, xp] = multidegree(*cfg, m);
    CHECK(et == 5);
    CHECK(xp == LatticeVector{5, 0});
    ExpoMonomial one{0, {0, 0}, {0, 0}};
    CHECK(multidegree(*cfg, one).first == 0);
    // e^{sqrt2 x} x^{1+sqrt2}
    ExpoMonomial mm{0, {0, 1}, {1, 1}};
    auto [et2, xp2] = multidegree(*cfg, mm);
    CHECK(et2 == 1);
    CHECK(xp2 == LatticeVector{1, 1});
}

TEST_CASE("config mismatch is an error") {
    auto c1 = quad_config();
    auto c2 = quad_config();
    auto f = ExpoPoly::one(c1);
    auto g = ExpoPoly::one(c2);
    CHECK_THROWS_AS(f + g, std::invalid_argument);
}
