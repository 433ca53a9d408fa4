#include "expoweyl/weylalg.hpp"

#include <functional>

#include "expoweyl/linalg.hpp"

namespace expoweyl {

WeylElement WeylElement::from_poly(ExpoPoly f, int d_deg) {
    if (d_deg < 0) throw std::invalid_argument("WeylElement: negative d-degree");
    WeylElement r(f.config());
    r.add_part(d_deg, f);
    return r;
}

WeylElement WeylElement::scalar(RingConfigPtr cfg, const FieldScalar& c) {
    return from_poly(ExpoPoly::scalar(cfg, c));
}

WeylElement WeylElement::d_power(RingConfigPtr cfg, int k) {
    return from_poly(ExpoPoly::one(cfg), k);
}

ExpoPoly WeylElement::part(int k) const {
    auto it = parts_.find(k);
    return it == parts_.end() ? ExpoPoly(cfg_) : it->second;
}

void WeylElement::add_part(int k, const ExpoPoly& f) {
    if (f.is_zero()) return;
    if (!cfg_) cfg_ = f.config();
    if (cfg_ != f.config()) throw std::invalid_argument("WeylElement: config mismatch");
    auto it = parts_.find(k);
    if (it == parts_.end()) {
        parts_.emplace(k, f);
    } else {
        it->second += f;
        if (it->second.is_zero()) parts_.erase(it);
    }
}

WeylElement WeylElement::operator-() const {
    WeylElement r(cfg_);
    for (const auto& [k, f] : parts_) r.parts_.emplace(k, -f);
    return r;
}

WeylElement WeylElement::operator+(const WeylElement& o) const {
    if (cfg_ != o.cfg_) throw std::invalid_argument("WeylElement: config mismatch");
    WeylElement r(*this);
    for (const auto& [k, f] : o.parts_) r.add_part(k, f);
    return r;
}

WeylElement WeylElement::operator-(const WeylElement& o) const {
    if (cfg_ != o.cfg_) throw std::invalid_argument("WeylElement: config mismatch");
    WeylElement r(*this);
    for (const auto& [k, f] : o.parts_) r.add_part(k, -f);
    return r;
}

WeylElement WeylElement::operator*(const WeylElement& o) const { return weyl_mul(*this, o); }

WeylElement WeylElement::scaled(const FieldScalar& c) const {
    WeylElement r(cfg_);
    if (c.is_zero()) return r;
    for (const auto& [k, f] : parts_) r.add_part(k, f.scaled(c));
    return r;
}

FieldScalar twist_factor(const RingConfig& cfg, const ExpoMonomial& m) {
    FieldScalar r(cfg.table, 1);
    if (m.y_pow != 0) r *= cfg.q_y_value().pow(m.y_pow);
    for (std::size_t i = 0; i < m.e_part.size(); ++i)
        if (m.e_part[i] != 0) r *= cfg.q_e_value(i).pow(m.e_part[i]);
    for (std::size_t i = 0; i < m.x_part.size(); ++i)
        if (m.x_part[i] != 0) r *= cfg.q_coord_value(i).pow(m.x_part[i]);
    return r;
}

ExpoPoly sigma_twist(const ExpoPoly& f) {
    const auto& cfg = f.config();
    if (cfg->deform.mode == QMode::classical) return f;
    ExpoPoly r(cfg);
    for (const auto& [m, c] : f.terms()) r.add_term(m, c * twist_factor(*cfg, m));
    return r;
}

ExpoPoly delta_q(const ExpoPoly& f) {
    const auto& cfg = f.config();
    if (cfg->deform.mode == QMode::classical) return delta(f);
    ExpoPoly r(cfg);
    const FieldScalar qm1 = cfg->q_value() - FieldScalar(cfg->table, 1);
    for (const auto& [m, c] : f.terms()) {
        FieldScalar num = twist_factor(*cfg, m) - FieldScalar(cfg->table, 1);
        if (num.is_zero()) continue;
        ExpoMonomial n = m;
        n.x_part[0] -= 1;
        r.add_term(n, c * num / qm1);
    }
    return r;
}

namespace {

// d^i * f rewritten as sum_k w[k] * d^k via d*g = sigma(g)*d + delta_q(g)
std::map<int, ExpoPoly> push_d_through(int i, const ExpoPoly& f) {
    std::map<int, ExpoPoly> w{{0, f}};
    for (int s = 0; s < i; ++s) {
        std::map<int, ExpoPoly> next;
        auto add = [&next](int k, const ExpoPoly& g) {
            if (g.is_zero()) return;
            auto it = next.find(k);
            if (it == next.end()) {
                next.emplace(k, g);
            } else {
                it->second += g;
                if (it->second.is_zero()) next.erase(it);
            }
        };
        for (const auto& [k, g] : w) {
            add(k + 1, sigma_twist(g));
            add(k, delta_q(g));
        }
        w = std::move(next);
    }
    return w;
}

} // namespace

WeylElement weyl_mul(const WeylElement& a, const WeylElement& b) {
    if (a.config() != b.config() && a.config() && b.config())
        throw std::invalid_argument("weyl_mul: config mismatch");
    WeylElement r(a.config() ? a.config() : b.config());
    for (const auto& [i, fa] : a.parts())
        for (const auto& [j, fb] : b.parts()) {
            auto w = push_d_through(i, fb);
            for (const auto& [k, g] : w) r.add_part(k + j, fa * g);
        }
    return r;
}

WeylElement commutator(const WeylElement& a, const WeylElement& b) {
    return weyl_mul(a, b) - weyl_mul(b, a);
}

ObstructionReport trace_obstruction(const RingConfigPtr& cfg, long long n) {
    if (n < 1) throw std::invalid_argument("trace_obstruction: dimension must be >= 1");
    return {n, FieldScalar(cfg->table, 0), FieldScalar(cfg->table, Rational(n))};
}

WeylElement token_element(const RingConfigPtr& cfg, const GenToken& tok) {
    switch (tok.kind) {
    case GenToken::Kind::x_power:
        return WeylElement::from_poly(ExpoPoly::x_power(cfg, tok.coords));
    case GenToken::Kind::e_power:
        return WeylElement::from_poly(ExpoPoly::e_power(cfg, tok.coords));
    case GenToken::Kind::y_power:
        return WeylElement::from_poly(ExpoPoly::y_power(cfg, tok.power));
    case GenToken::Kind::d:
        return WeylElement::d_power(cfg, 1);
    case GenToken::Kind::scalar:
        return WeylElement::scalar(cfg, tok.value);
    }
    throw std::logic_error("unreachable");
}

WeylElement normal_form(const RingConfigPtr& cfg, const std::vector<GenToken>& word) {
    WeylElement r = WeylElement::one(cfg);
    for (const auto& tok : word) r = weyl_mul(r, token_element(cfg, tok));
    return r;
}

namespace {

FieldScalar evaluate_character(const ExpoPoly& f, const CharacterData& chi) {
    const auto& cfg = f.config();
    if (chi.x_values.size() != cfg->x_dim() || chi.e_values.size() != cfg->e_dim())
        throw std::invalid_argument("character: dimension mismatch");
    FieldScalar r(cfg->table, 0);
    for (const auto& [m, c] : f.terms()) {
        FieldScalar v = c;
        if (m.y_pow != 0) v *= chi.y_value.pow(m.y_pow);
        for (std::size_t i = 0; i < cfg->e_dim(); ++i)
            if (m.e_part[i] != 0) v *= chi.e_values[i].pow(m.e_part[i]);
        for (std::size_t i = 0; i < cfg->x_dim(); ++i)
            if (m.x_part[i] != 0) v *= chi.x_values[i].pow(m.x_part[i]);
        r += v;
    }
    return r;
}

// rewrite a normal-form element as sum_j d^j * h_j (coefficients on the right)
std::map<int, ExpoPoly> anti_normal_form(const WeylElement& a) {
    std::map<int, ExpoPoly> acc;
    auto add = [&acc](int k, const ExpoPoly& g) {
        if (g.is_zero()) return;
        auto it = acc.find(k);
        if (it == acc.end()) {
            acc.emplace(k, g);
        } else {
            it->second += g;
            if (it->second.is_zero()) acc.erase(it);
        }
    };
    for (const auto& [deg, f] : a.parts()) {
        // f * d^deg: repeatedly use h*d = d*h - delta(h)
        std::map<int, ExpoPoly> cur{{0, f}};
        for (int s = 0; s < deg; ++s) {
            std::map<int, ExpoPoly> next;
            for (const auto& [j, h] : cur) {
                auto it = next.find(j + 1);
                if (it == next.end())
                    next.emplace(j + 1, h);
                else
                    it->second += h;
                auto dh = delta(h);
                if (!dh.is_zero()) {
                    auto jt = next.find(j);
                    if (jt == next.end())
                        next.emplace(j, -dh);
                    else {
                        jt->second -= dh;
                        if (jt->second.is_zero()) next.erase(jt);
                    }
                }
            }
            cur = std::move(next);
        }
        for (const auto& [j, h] : cur) add(j, h);
    }
    return acc;
}

} // namespace

std::map<int, FieldScalar> induced_module_apply(const WeylElement& a,
                                                const std::map<int, FieldScalar>& v,
                                                const CharacterData& chi) {
    const auto& cfg = a.config();
    if (cfg->deform.mode != QMode::classical)
        throw std::domain_error("induced_module_apply: defined at q = 1 only");
    std::map<int, FieldScalar> out;
    for (const auto& [k, coeff] : v) {
        if (k < 0) throw std::invalid_argument("induced_module_apply: negative basis index");
        if (coeff.is_zero()) continue;
        auto anti = anti_normal_form(weyl_mul(a, WeylElement::d_power(cfg, k)));
        for (const auto& [j, h] : anti) {
            FieldScalar val = evaluate_character(h, chi) * coeff;
            if (val.is_zero()) continue;
            auto it = out.find(j);
            if (it == out.end()) {
                out.emplace(j, val);
            } else {
                it->second += val;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    return out;
}

long long monomial_size(int d_deg, const ExpoMonomial& m) {
    long long s = d_deg + (m.y_pow < 0 ? -m.y_pow : m.y_pow);
    for (long long e : m.e_part) s += e < 0 ? -e : e;
    for (long long x : m.x_part) s += x < 0 ? -x : x;
    return s;
}

namespace {

struct ExtMonomial {
    int d_deg = 0;
    ExpoMonomial mon;
    auto operator<=>(const ExtMonomial&) const = default;
};

// all (d-degree, monomial) pairs with size <= D, in a fixed order
std::vector<ExtMonomial> bounded_monomials(const RingConfig& cfg, int D) {
    std::vector<ExtMonomial> out;
    const std::size_t e_dim = cfg.e_dim(), x_dim = cfg.x_dim();
    std::function<void(std::size_t, long long, ExtMonomial&)> rec =
        [&](std::size_t coord, long long budget, ExtMonomial& cur) {
            const std::size_t total = 1 + e_dim + x_dim;
            if (coord == total) {
                out.push_back(cur);
                return;
            }
            auto set = [&](long long val) {
                if (coord == 0)
                    cur.mon.y_pow = val;
                else if (coord <= e_dim)
                    cur.mon.e_part[coord - 1] = val;
                else
                    cur.mon.x_part[coord - 1 - e_dim] = val;
            };
            for (long long v = -budget; v <= budget; ++v) {
                set(v);
                rec(coord + 1, budget - (v < 0 ? -v : v), cur);
            }
            set(0);
        };
    for (int d = 0; d <= D; ++d) {
        ExtMonomial cur;
        cur.d_deg = d;
        cur.mon.e_part.assign(e_dim, 0);
        cur.mon.x_part.assign(x_dim, 0);
        rec(0, D - d, cur);
    }
    return out;
}

std::vector<WeylElement> commuting_generators(const RingConfigPtr& cfg, bool with_inverses) {
    std::vector<WeylElement> gens;
    LatticeVector e1(cfg->x_dim(), 0);
    e1[0] = 1;
    gens.push_back(WeylElement::from_poly(ExpoPoly::x_power(cfg, e1)));
    if (with_inverses) gens.push_back(WeylElement::from_poly(ExpoPoly::x_power(cfg, lattice_neg(e1))));
    gens.push_back(WeylElement::d_power(cfg, 1));
    for (std::size_t i = 0; i < cfg->e_dim(); ++i) {
        LatticeVector b(cfg->e_dim(), 0);
        b[i] = 1;
        gens.push_back(WeylElement::from_poly(
            ExpoPoly::monomial(cfg, ExpoMonomial{0, b, LatticeVector(cfg->x_dim(), 0)},
                               FieldScalar(cfg->table, 1))));
        if (with_inverses)
            gens.push_back(WeylElement::from_poly(
                ExpoPoly::monomial(cfg, ExpoMonomial{0, lattice_neg(b), LatticeVector(cfg->x_dim(), 0)},
                                   FieldScalar(cfg->table, 1))));
    }
    gens.push_back(WeylElement::from_poly(ExpoPoly::y_power(cfg, 1)));
    if (with_inverses) gens.push_back(WeylElement::from_poly(ExpoPoly::y_power(cfg, -1)));
    return gens;
}

WeylElement basis_element(const RingConfigPtr& cfg, const ExtMonomial& em) {
    return WeylElement::from_poly(ExpoPoly::monomial(cfg, em.mon, FieldScalar(cfg->table, 1)),
                                  em.d_deg);
}

} // namespace

std::vector<WeylElement> center_up_to_degree(const RingConfigPtr& cfg, int D) {
    if (D < 1) throw std::invalid_argument("center_up_to_degree: D must be >= 1");
    auto mons = bounded_monomials(*cfg, D);
    std::map<ExtMonomial, std::size_t> col;
    for (std::size_t j = 0; j < mons.size(); ++j) col.emplace(mons[j], j);

    std::vector<SparseRow> rows;
    for (const auto& g : commuting_generators(cfg, false)) {
        // one equation per (generator, result monomial)
        std::map<ExtMonomial, SparseRow> eqs;
        for (std::size_t j = 0; j < mons.size(); ++j) {
            auto com = commutator(g, basis_element(cfg, mons[j]));
            for (const auto& [deg, f] : com.parts())
                for (const auto& [m, c] : f.terms()) eqs[{deg, m}][j] = c;
        }
        for (auto& [key, row] : eqs) rows.push_back(std::move(row));
    }

    auto kernel = nullspace(rows, mons.size(), cfg->table);
    std::vector<WeylElement> basis;
    for (const auto& vec : kernel) {
        WeylElement c(cfg);
        for (std::size_t j = 0; j < vec.size(); ++j)
            if (!vec[j].is_zero())
                c.add_part(mons[j].d_deg,
                           ExpoPoly::monomial(cfg, mons[j].mon, vec[j]));
        basis.push_back(std::move(c));
    }
    return basis;
}

SaturationReport ideal_saturate(const WeylElement& gen, int D) {
    if (gen.is_zero()) throw std::invalid_argument("ideal_saturate: zero generator");
    if (D < 1) throw std::invalid_argument("ideal_saturate: D must be >= 1");
    const auto& cfg = gen.config();
    auto mons = bounded_monomials(*cfg, D);
    std::map<ExtMonomial, std::size_t> col;
    for (std::size_t j = 0; j < mons.size(); ++j) col.emplace(mons[j], j);

    // an element becomes a row only if every monomial fits within the bound
    auto to_row = [&](const WeylElement& a) -> std::pair<bool, SparseRow> {
        SparseRow row;
        for (const auto& [deg, f] : a.parts())
            for (const auto& [m, c] : f.terms()) {
                auto it = col.find({deg, m});
                if (it == col.end()) return {false, {}};
                row[it->second] = c;
            }
        return {true, std::move(row)};
    };

    SaturationReport report;
    RowReducer red;
    auto [ok, row0] = to_row(gen);
    if (!ok) throw std::invalid_argument("ideal_saturate: generator exceeds the size bound");
    red.insert(std::move(row0));
    report.profile.push_back(red.rank());

    auto mults = commuting_generators(cfg, true);
    std::vector<WeylElement> frontier{gen};
    while (!frontier.empty()) {
        std::vector<WeylElement> next;
        for (const auto& e : frontier)
            for (const auto& m : mults)
                for (const auto& p : {weyl_mul(m, e), weyl_mul(e, m)}) {
                    auto [fits, row] = to_row(p);
                    if (!fits) continue;
                    if (red.insert(std::move(row))) next.push_back(p);
                }
        if (next.empty()) break;
        report.profile.push_back(red.rank());
        frontier = std::move(next);
    }

    SparseRow one_row;
    ExtMonomial unit;
    unit.mon.e_part.assign(cfg->e_dim(), 0);
    unit.mon.x_part.assign(cfg->x_dim(), 0);
    one_row[col.at(unit)] = FieldScalar(cfg->table, 1);
    report.contains_one = red.contains(one_row);
    return report;
}

} // namespace expoweyl
