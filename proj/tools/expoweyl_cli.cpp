#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>

#include "expoweyl/config.hpp"
#include "expoweyl/parser.hpp"
#include "expoweyl/printer.hpp"
#include "expoweyl/repthy.hpp"
#include "expoweyl/ringmaps.hpp"

using json = nlohmann::ordered_json;
using namespace expoweyl;

namespace {

// exit statuses: 0 ok, 2 usage, 3 malformed config, 4 operation error
constexpr int kExitUsage = 2;
constexpr int kExitConfig = 3;
constexpr int kExitOperation = 4;

struct Options {
    std::string config_path;
    std::string q_mode;
};

SessionConfig session_for(const Options& opt) {
    SessionConfig sc =
        opt.config_path.empty() ? default_session_config() : load_session_config(opt.config_path);
    if (!opt.q_mode.empty()) sc.deform = parse_q_mode(opt.q_mode);
    return sc;
}

void emit(const json& report) { std::cout << report.dump(2) << "\n"; }

ExpoPoly poly_part(const WeylElement& v, const char* what) {
    for (const auto& [k, f] : v.parts())
        if (k != 0) throw std::invalid_argument(std::string(what) + ": expression must be D-free");
    return v.part(0);
}

FieldScalar scalar_part(const WeylElement& v, const RingConfigPtr& cfg, const char* what) {
    ExpoPoly f = poly_part(v, what);
    if (f.is_zero()) return FieldScalar(cfg->table, 0);
    if (!f.is_scalar()) throw std::invalid_argument(std::string(what) + ": expression must be a scalar");
    return f.scalar_value();
}

LatticeVector parse_vec_arg(const std::string& s, const char* what) {
    LatticeVector v;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t next = s.find(',', pos);
        if (next == std::string::npos) next = s.size();
        try {
            v.push_back(std::stoll(s.substr(pos, next - pos)));
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string(what) + ": malformed coordinate list '" + s + "'");
        }
        pos = next + 1;
    }
    return v;
}

std::vector<std::vector<long long>> parse_matrix_arg(const std::string& s) {
    std::vector<std::vector<long long>> rows;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t next = s.find(';', pos);
        if (next == std::string::npos) next = s.size();
        rows.push_back(parse_vec_arg(s.substr(pos, next - pos), "matrix"));
        pos = next + 1;
    }
    return rows;
}

json matrix_json(const UnimodularMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symbolic calculator for expolynomial rings, their Ore "
                 "extensions, and derivation Lie algebras"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--config", opt.config_path, "session config file (INI)")
        ->envname("EXPOWEYL_CONFIG");

    std::string expr, lhs, rhs, p1, p2, torus, matrix, chi, gen, weight;
    long long n = 0;
    int degree = 3, bound = 4, depth = -1;
    bool ordered = false;

    auto* c_nf = app.add_subcommand("normal-form", "normal form of an expression");
    c_nf->add_option("--expr", expr)->required();
    c_nf->add_option("--q-mode", opt.q_mode);

    auto* c_br = app.add_subcommand("bracket", "commutator of two expressions");
    c_br->add_option("--lhs", lhs)->required();
    c_br->add_option("--rhs", rhs)->required();
    c_br->add_option("--q-mode", opt.q_mode);

    auto* c_iso = app.add_subcommand("iso", "decide isomorphism of the algebras at p1, p2");
    c_iso->add_option("--p1", p1)->required();
    c_iso->add_option("--p2", p2)->required();

    auto* c_aut = app.add_subcommand("aut-apply", "apply a lattice automorphism");
    c_aut->add_option("--torus", torus)->required();
    c_aut->add_option("--matrix", matrix)->required();
    c_aut->add_option("--expr", expr)->required();

    auto* c_gal = app.add_subcommand("galois-fix", "project onto the Galois-fixed subalgebra");
    c_gal->add_option("--expr", expr)->required();

    auto* c_cen = app.add_subcommand("center", "basis of the center up to a size bound");
    c_cen->add_option("--degree", degree);
    c_cen->add_option("--q-mode", opt.q_mode);

    auto* c_idl = app.add_subcommand("ideal", "two-sided ideal saturation");
    c_idl->add_option("--gen", gen)->required();
    c_idl->add_option("--bound", bound);
    c_idl->add_option("--q-mode", opt.q_mode);

    auto* c_vd = app.add_subcommand("verma-dims", "weight space dimensions");
    c_vd->add_option("--weight", weight);
    c_vd->add_option("--depth", depth);
    c_vd->add_flag("--ordered", ordered);

    auto* c_bgg = app.add_subcommand("bgg-char", "Euler character of the two-term resolution");
    c_bgg->add_option("--n", n)->required();
    c_bgg->add_option("--depth", depth);

    auto* c_cs = app.add_subcommand("classify-support", "dense or discrete weight support");
    c_cs->add_option("--chi", chi)->required();

    auto* c_tr = app.add_subcommand("trace-obstruction", "finite-dimensional trace certificate");
    c_tr->add_option("--n", n)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::string msg = e.what();
        if (auto nl = msg.find('\n'); nl != std::string::npos) msg.resize(nl);
        std::cerr << "error: usage: " << msg << "\n";
        return kExitUsage;
    }

    try {
        SessionConfig sc = session_for(opt);
        RingConfigPtr cfg = sc.ring();
        json out;

        if (*c_nf) {
            WeylElement v = parse_element(cfg, expr);
            out = {{"command", "normal-form"}, {"input", expr},
                   {"normal_form", print_canonical(v)}};
        } else if (*c_br) {
            WeylElement a = parse_element(cfg, lhs);
            WeylElement b = parse_element(cfg, rhs);
            out = {{"command", "bracket"},
                   {"lhs", lhs},
                   {"rhs", rhs},
                   {"bracket", print_canonical(commutator(a, b))}};
        } else if (*c_iso) {
            IsoVerdict v = iso_decide(parse_vec_arg(p1, "p1"), parse_vec_arg(p2, "p2"));
            out = {{"command", "iso"}, {"isomorphic", v.isomorphic}};
            if (v.witness) out["witness"] = matrix_json(*v.witness);
        } else if (*c_aut) {
            std::vector<FieldScalar> t;
            std::size_t pos = 0;
            const std::string& ts = torus;
            while (pos <= ts.size()) {
                std::size_t next = ts.find(',', pos);
                if (next == std::string::npos) next = ts.size();
                t.emplace_back(cfg->table, Rational(ts.substr(pos, next - pos)));
                pos = next + 1;
            }
            RingAutomorphism g(std::move(t), UnimodularMatrix(parse_matrix_arg(matrix)));
            ExpoPoly f = poly_part(parse_element(cfg, expr), "aut-apply");
            out = {{"command", "aut-apply"},
                   {"input", expr},
                   {"image", print_canonical(apply_automorphism(g, f))}};
        } else if (*c_gal) {
            if (sc.galois_layer.empty())
                throw std::invalid_argument("galois-fix: no [galois] layer configured");
            GaloisAction sigma(cfg->table, sc.galois_layer);
            WeylElement v = parse_element(cfg, expr);
            out = {{"command", "galois-fix"},
                   {"layer", sc.galois_layer},
                   {"input", expr},
                   {"projection", print_canonical(reynolds_project(sigma, v))}};
        } else if (*c_cen) {
            json basis = json::array();
            for (const auto& z : center_up_to_degree(cfg, degree))
                basis.push_back(print_canonical(z));
            out = {{"command", "center"}, {"degree", degree}, {"basis", std::move(basis)}};
        } else if (*c_idl) {
            WeylElement g = parse_element(cfg, gen);
            SaturationReport rep = ideal_saturate(g, bound);
            out = {{"command", "ideal"},
                   {"generator", gen},
                   {"bound", bound},
                   {"contains_one", rep.contains_one},
                   {"profile", rep.profile}};
        } else if (*c_vd) {
            NegativePart neg(sc.neg_gens);
            out = {{"command", "verma-dims"}, {"ordered", ordered}};
            if (!weight.empty()) {
                LatticeVector w = parse_vec_arg(weight, "weight");
                out["weight"] = w;
                out["dim"] = verma_weight_dim(neg, w, ordered);
            } else {
                if (depth < 0)
                    throw std::invalid_argument("verma-dims: need --weight or --depth");
                if (sc.neg_gens[0].size() != 1)
                    throw std::invalid_argument(
                        "verma-dims: --depth needs one-dimensional generators");
                json dims = json::array();
                for (long long k = 0; k <= depth; ++k)
                    dims.push_back(verma_weight_dim(neg, {-k}, ordered));
                out["depth"] = depth;
                out["dims"] = std::move(dims);
            }
        } else if (*c_bgg) {
            int d = depth >= 0 ? depth : static_cast<int>(2 * n + 4);
            Character ch = bgg_character(cfg->table, n, d);
            json entries = json::array();
            for (const auto& [w, dim] : ch.entries())
                entries.push_back({{"weight", print_scalar(w)}, {"dim", dim}});
            out = {{"command", "bgg-char"}, {"n", n}, {"depth", d},
                   {"total", ch.total()}, {"entries", std::move(entries)}};
        } else if (*c_cs) {
            FieldScalar v = scalar_part(parse_element(cfg, chi), cfg, "classify-support");
            out = {{"command", "classify-support"},
                   {"chi", chi},
                   {"support",
                    classify_support(cfg, v) == SupportType::dense ? "dense" : "discrete"}};
        } else if (*c_tr) {
            ObstructionReport rep = trace_obstruction(cfg, n);
            out = {{"command", "trace-obstruction"},
                   {"dimension", rep.dimension},
                   {"lhs", print_scalar(rep.lhs)},
                   {"rhs", print_scalar(rep.rhs)},
                   {"obstructed", rep.lhs != rep.rhs}};
        }

        emit(out);
        return 0;
    } catch (const ConfigError& e) {
        std::cerr << "error: config: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: operation: " << e.what() << "\n";
        return kExitOperation;
    }
}
