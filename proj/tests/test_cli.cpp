#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "expoweyl/config.hpp"
#include "expoweyl/parser.hpp"
#include "expoweyl/printer.hpp"
#include "test_util.hpp"

using namespace expoweyl;

namespace {

RingConfigPtr sqrt2_cfg() {
    return make_ring_config({{"sqrt2", {Rational(-2), Rational(0), Rational(1)}}}, {},
                            {"1", "sqrt2"}, {1, 0}, Variant::constant, {});
}

struct RunResult {
    int status = -1;
    std::string output;
};

// runs a shell command, capturing stdout (+ stderr if redirected by caller)
RunResult run(const std::string& cmd) {
    RunResult r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.output.append(buf, got);
    int rc = pclose(p);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

std::string cli_bin() {
    const char* bin = std::getenv("EXPOWEYL_BIN");
    REQUIRE(bin != nullptr);
    return bin;
}

std::string golden_dir() {
    const char* dir = std::getenv("EXPOWEYL_GOLDEN_DIR");
    REQUIRE(dir != nullptr);
    return dir;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("parser worked examples") {
    auto cfg = make_default_config();
    auto one = WeylElement::one(cfg);
    CHECK(parse_element(cfg, "D*X(1) - X(1)*D") == one);
    CHECK(parse_element(cfg, "[D, X(1)]") == one);
    CHECK(parse_element(cfg, " 2 * X(1) ^ 3 ") ==
          WeylElement::from_poly(ExpoPoly::x_power(cfg, {3}).scaled(cfg->scalar(2))));
    CHECK(parse_element(cfg, "1/2 + 1/2") == one);
    CHECK(parse_element(cfg, "-X(1) + X(1)").is_zero());
    CHECK(parse_element(cfg, "X(1)^-2") ==
          WeylElement::from_poly(ExpoPoly::x_power(cfg, {-2})));
    CHECK(parse_element(cfg, "Y*D^2") ==
          weyl_mul(WeylElement::from_poly(ExpoPoly::y_power(cfg, 1)),
                   WeylElement::d_power(cfg, 2)));
    CHECK(parse_element(cfg, "q") ==
          WeylElement::scalar(cfg, FieldScalar::symbol(cfg->table, "q")));

    auto cfg2 = sqrt2_cfg();
    auto b = parse_element(cfg2, "[D, E(0,1)]");
    CHECK(b == WeylElement::from_poly(ExpoPoly::e_power(cfg2, {0, 1})
                                          .scaled(FieldScalar::symbol(cfg2->table, "sqrt2"))));
}

TEST_CASE("parser error positions") {
    auto cfg = make_default_config();
    CHECK_THROWS_WITH_AS(parse_element(cfg, "X(1"), "syntax error: expected ')' at column 4",
                         ParseError);
    try {
        parse_element(cfg, "X(1");
        FAIL("no throw");
    } catch (const ParseError& e) {
        CHECK(e.column() == 4);
    }
    CHECK_THROWS_AS(parse_element(cfg, ""), ParseError);
    CHECK_THROWS_AS(parse_element(cfg, "X(1) +"), ParseError);
    CHECK_THROWS_AS(parse_element(cfg, "X(1,2)"), ParseError);   // arity
    CHECK_THROWS_AS(parse_element(cfg, "frob"), ParseError);     // unknown symbol
    CHECK_THROWS_AS(parse_element(cfg, "(X(1)"), ParseError);
    CHECK_THROWS_AS(parse_element(cfg, "[D, X(1)"), ParseError);
    CHECK_THROWS_AS(parse_element(cfg, "X(1) X(2)"), ParseError);
    CHECK_THROWS_AS(parse_element(cfg, "(X(1)+1)^-1"), ParseError); // non-unit inverse
    CHECK_THROWS_AS(parse_element(cfg, "D^-1"), ParseError);
}

TEST_CASE("printer worked examples") {
    auto cfg = make_default_config();
    CHECK(print_canonical(WeylElement(cfg)) == "0");
    CHECK(print_canonical(WeylElement::one(cfg)) == "1");
    auto xd1 = parse_element(cfg, "X(1)*D + 1");
    CHECK(print_canonical(xd1) == "X(1)*D + 1");
    CHECK(print_canonical(parse_element(cfg, "2*Y^2*E(1)*X(-1) - 1/2")) ==
          "2*Y^2*E(1)*X(-1) - 1/2");
    CHECK(print_scalar(FieldScalar(cfg->table, Rational(-7, 2))) == "-7/2");
    CHECK(print_scalar(FieldScalar::symbol(cfg->table, "q")) == "q");
}

TEST_CASE("round-trip through print and parse") {
    testutil::Rng rng(71);
    for (QMode mode : {QMode::classical, QMode::generic}) {
        auto cfg = make_default_config(mode);
        for (int i = 0; i < 100; ++i) {
            auto v = testutil::rand_weyl(rng, cfg, 3, 3);
            CHECK(parse_element(cfg, print_canonical(v)) == v);
        }
    }
    // symbolic coefficients, including denominators
    auto cfg = sqrt2_cfg();
    for (int i = 0; i < 100; ++i) {
        WeylElement v(cfg);
        v.add_part(static_cast<int>(testutil::rand_int(rng, 0, 2)),
                   ExpoPoly::monomial(cfg, testutil::rand_monomial(rng, *cfg),
                                      testutil::rand_nonzero_scalar(rng, cfg->table, true)));
        CHECK(parse_element(cfg, print_canonical(v)) == v);
    }
}

TEST_CASE("session config loading") {
    auto dir = golden_dir();
    auto sc = load_session_config(dir + "/session_sqrt2.ini");
    CHECK(sc.embed == std::vector<std::string>{"1", "sqrt2"});
    CHECK(sc.p == LatticeVector{1, 0});
    CHECK(sc.ring()->rank() == 2);

    auto gal = load_session_config(dir + "/session_galois.ini");
    CHECK(gal.galois_layer == "sqrt2");
    CHECK(gal.ring()->rank() == 1);

    auto parts = load_session_config(dir + "/session_parts12.ini");
    CHECK(parts.neg_gens == std::vector<LatticeVector>{{-1}, {-2}});

    CHECK_THROWS_AS(load_session_config("/nonexistent.ini"), ConfigError);
    std::string bad = "/tmp/expoweyl_bad_cfg.ini";
    std::ofstream(bad) << "[lattice]\nembed = sqrt2, 1\n";
    CHECK_THROWS_AS(load_session_config(bad), ConfigError);
    std::ofstream(bad) << "[lattice]\nnot a key value line\n";
    try {
        load_session_config(bad);
        FAIL("no throw");
    } catch (const ConfigError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("exit codes and diagnostics") {
    std::string bin = cli_bin();
    auto ok = run(bin + " normal-form --expr 'D*X(1)' 2>/dev/null");
    CHECK(ok.status == 0);

    auto usage = run(bin + " bogus-subcommand 2>&1 >/dev/null");
    CHECK(usage.status == 2);
    CHECK(usage.output.rfind("error: usage: ", 0) == 0);
    CHECK(usage.output.find('\n') == usage.output.size() - 1);

    auto conf = run(bin + " --config /nonexistent.ini normal-form --expr 1 2>&1 >/dev/null");
    CHECK(conf.status == 3);
    CHECK(conf.output.rfind("error: config: ", 0) == 0);
    CHECK(conf.output.find('\n') == conf.output.size() - 1);

    auto op = run(bin + " normal-form --expr 'X(1' 2>&1 >/dev/null");
    CHECK(op.status == 4);
    CHECK(op.output.rfind("error: operation: ", 0) == 0);
    CHECK(op.output.find('\n') == op.output.size() - 1);
}

TEST_CASE("subcommand outputs match golden files") {
    std::string bin = cli_bin();
    std::string dir = golden_dir();
    const std::pair<const char*, std::string> cases[] = {
        {"normal_form_classical", "normal-form --expr 'D*X(1) - X(1)*D'"},
        {"normal_form_generic", "normal-form --expr 'D*X(1)' --q-mode generic"},
        {"bracket_sqrt2", "--config " + dir + "/session_sqrt2.ini bracket --lhs D --rhs 'E(0,1)'"},
        {"iso_yes", "iso --p1 1,1 --p2 1,0"},
        {"iso_no", "iso --p1 2,0 --p2 1,0"},
        {"aut_apply", "aut-apply --torus 1,2,1 --matrix '1,0,0;0,0,1;0,1,0' --expr 'X(1)+E(1)+Y'"},
        {"galois_fix",
         "--config " + dir + "/session_galois.ini galois-fix --expr 'sqrt2*X(1) + Y + X(2)'"},
        {"center_root3", "center --degree 3 --q-mode root:3"},
        {"ideal_xd1", "ideal --gen 'X(1)*D + 1' --bound 4 --q-mode generic"},
        {"verma_dims_parts12", "--config " + dir + "/session_parts12.ini verma-dims --depth 8"},
        {"bgg_char_n2", "bgg-char --n 2"},
        {"classify_dense", "classify-support --chi lambda"},
        {"classify_discrete", "classify-support --chi 2"},
        {"trace_obstruction", "trace-obstruction --n 5"},
    };
    for (const auto& [name, args] : cases) {
        CAPTURE(name);
        auto r = run(bin + " " + args + " 2>/dev/null");
        CHECK(r.status == 0);
        CHECK(r.output == slurp(dir + "/" + name + ".json"));
    }
}
