#include "expoweyl/expolyring.hpp"

#include <algorithm>

namespace expoweyl {

namespace {

// integer polynomial division, exact (low-to-high coefficients)
std::vector<Rational> poly_div_exact(std::vector<Rational> num, const std::vector<Rational>& den) {
    std::vector<Rational> q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Rational(0));
    while (num.size() >= den.size() && !num.empty()) {
        while (!num.empty() && num.back() == 0) num.pop_back();
        if (num.size() < den.size()) break;
        Rational c = num.back() / den.back();
        std::size_t shift = num.size() - den.size();
        q[shift] = c;
        for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
    }
    for (const auto& r : num)
        if (r != 0) throw std::logic_error("poly_div_exact: inexact");
    return q;
}

std::vector<Rational> cyclotomic(int n) {
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    std::vector<Rational> num(n + 1, Rational(0));
    num[0] = -1;
    num[n] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0) num = poly_div_exact(std::move(num), cyclotomic(d));
    return num;
}

} // namespace

FieldScalar RingConfig::q_value() const {
    switch (deform.mode) {
    case QMode::classical:
        return FieldScalar(table, 1);
    case QMode::generic:
        return FieldScalar::symbol(table, sym_q);
    case QMode::root_of_unity:
        if (deform.root_order == 1) return FieldScalar(table, 1);
        if (deform.root_order == 2) return FieldScalar(table, -1);
        return FieldScalar::symbol(table, sym_q);
    }
    throw std::logic_error("unreachable");
}

FieldScalar RingConfig::q_coord_value(std::size_t i) const {
    if (i == 0) return q_value();
    if (deform.mode == QMode::classical || i >= basis.rank)
        throw std::invalid_argument("q_coord_value: no twist symbol for coordinate");
    return FieldScalar::symbol(table, sym_qcoord[i - 1]);
}

FieldScalar RingConfig::q_e_value(std::size_t i) const {
    if (deform.mode == QMode::classical || i >= e_dim())
        throw std::invalid_argument("q_e_value: no twist symbol for coordinate");
    return FieldScalar::symbol(table, sym_qe[i]);
}

FieldScalar RingConfig::q_y_value() const {
    if (deform.mode == QMode::classical)
        throw std::invalid_argument("q_y_value: no twist symbol in classical mode");
    return FieldScalar::symbol(table, sym_qy);
}

RingConfigPtr make_ring_config(std::vector<SymbolSpec> algebraic_symbols,
                               std::vector<std::string> extra_transcendentals,
                               std::vector<std::string> embed_names, LatticeVector p,
                               Variant variant, DeformationConfig deform) {
    auto cfg = std::make_shared<RingConfig>();
    const std::size_t rank = embed_names.size();
    if (rank == 0) throw std::invalid_argument("make_ring_config: empty basis");
    if (p.size() != rank) throw std::invalid_argument("make_ring_config: p has wrong dimension");
    if (lattice_is_zero(p)) throw std::invalid_argument("make_ring_config: p must be nonzero");

    std::vector<SymbolSpec> specs = std::move(algebraic_symbols);
    if (deform.mode == QMode::root_of_unity) {
        if (deform.root_order < 1)
            throw std::invalid_argument("make_ring_config: root order must be >= 1");
        if (deform.root_order == 1) deform.mode = QMode::classical; // q = 1
        if (deform.root_order >= 3)
            specs.push_back({"omega", cyclotomic(deform.root_order)});
    }
    std::size_t omega_idx = specs.empty() ? RingConfig::npos : specs.size() - 1;
    bool have_omega = deform.mode == QMode::root_of_unity && deform.root_order >= 3;

    auto add_trans = [&specs](const std::string& n) {
        specs.push_back({n, {}});
        return specs.size() - 1;
    };
    std::size_t i_t = add_trans("t");
    std::size_t i_tau = add_trans("tau");
    std::size_t i_q = add_trans("q");
    std::size_t i_lambda = add_trans("lambda");
    std::vector<std::size_t> qcoord;
    for (std::size_t i = 1; i < rank; ++i) qcoord.push_back(add_trans("q_" + std::to_string(i)));
    const std::size_t e_dim = rank + (variant == Variant::dynamic ? 1 : 0);
    std::vector<std::size_t> qe;
    for (std::size_t i = 0; i < e_dim; ++i) qe.push_back(add_trans("qe_" + std::to_string(i)));
    std::size_t i_qy = add_trans("qy");
    for (const auto& n : extra_transcendentals) add_trans(n);

    auto table = std::make_shared<const SymbolTable>(std::move(specs));
    cfg->table = table;
    cfg->sym_t = i_t;
    cfg->sym_tau = i_tau;
    cfg->sym_q = have_omega ? omega_idx : i_q;
    cfg->sym_lambda = i_lambda;
    cfg->sym_qcoord = std::move(qcoord);
    cfg->sym_qe = std::move(qe);
    cfg->sym_qy = i_qy;

    std::vector<FieldScalar> embed;
    for (const auto& name : embed_names) {
        if (name == "1" || name.empty())
            embed.push_back(FieldScalar(table, 1));
        else
            embed.push_back(FieldScalar::symbol(table, name));
    }
    cfg->basis = LatticeBasis(rank, std::move(embed));
    cfg->p = std::move(p);
    cfg->variant = variant;
    cfg->deform = deform;
    return cfg;
}

RingConfigPtr make_default_config(QMode mode, int root_order, Variant variant) {
    return make_ring_config({}, {}, {"1"}, {1}, variant, DeformationConfig{mode, root_order});
}

ExpoPoly ExpoPoly::scalar(RingConfigPtr cfg, const FieldScalar& c) {
    ExpoPoly r(cfg);
    ExpoMonomial m{0, LatticeVector(cfg->e_dim(), 0), LatticeVector(cfg->x_dim(), 0)};
    r.add_term(m, c);
    return r;
}

ExpoPoly ExpoPoly::monomial(RingConfigPtr cfg, ExpoMonomial m, FieldScalar c) {
    if (m.e_part.size() != cfg->e_dim() || m.x_part.size() != cfg->x_dim())
        throw std::invalid_argument("ExpoPoly: monomial dimensions do not match config");
    ExpoPoly r(cfg);
    r.add_term(m, c);
    return r;
}

ExpoPoly ExpoPoly::x_power(RingConfigPtr cfg, const LatticeVector& alpha) {
    if (alpha.size() != cfg->x_dim())
        throw std::invalid_argument("ExpoPoly: x exponent has wrong dimension");
    ExpoMonomial m{0, LatticeVector(cfg->e_dim(), 0), alpha};
    return monomial(cfg, m, FieldScalar(cfg->table, 1));
}

ExpoPoly ExpoPoly::e_power(RingConfigPtr cfg, const LatticeVector& alpha) {
    LatticeVector e = alpha;
    if (e.size() == cfg->rank() && cfg->variant == Variant::dynamic) e.push_back(0);
    if (e.size() != cfg->e_dim())
        throw std::invalid_argument("ExpoPoly: e exponent has wrong dimension");
    ExpoMonomial m{0, e, LatticeVector(cfg->x_dim(), 0)};
    return monomial(cfg, m, FieldScalar(cfg->table, 1));
}

ExpoPoly ExpoPoly::y_power(RingConfigPtr cfg, long long k) {
    ExpoMonomial m{k, LatticeVector(cfg->e_dim(), 0), LatticeVector(cfg->x_dim(), 0)};
    return monomial(cfg, m, FieldScalar(cfg->table, 1));
}

bool ExpoPoly::is_scalar() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const auto& m = terms_.begin()->first;
    return m.y_pow == 0 && lattice_is_zero(m.e_part) && lattice_is_zero(m.x_part);
}

FieldScalar ExpoPoly::scalar_value() const {
    if (terms_.empty()) return FieldScalar(cfg_->table, 0);
    if (!is_scalar()) throw std::domain_error("ExpoPoly: not a scalar");
    return terms_.begin()->second;
}

void ExpoPoly::add_term(const ExpoMonomial& m, const FieldScalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ExpoPoly ExpoPoly::operator-() const {
    ExpoPoly r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

ExpoPoly ExpoPoly::operator+(const ExpoPoly& o) const {
    if (cfg_ != o.cfg_) throw std::invalid_argument("ExpoPoly: config mismatch");
    ExpoPoly r(*this);
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

ExpoPoly ExpoPoly::operator-(const ExpoPoly& o) const {
    if (cfg_ != o.cfg_) throw std::invalid_argument("ExpoPoly: config mismatch");
    ExpoPoly r(*this);
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

ExpoPoly ExpoPoly::operator*(const ExpoPoly& o) const {
    if (cfg_ != o.cfg_) throw std::invalid_argument("ExpoPoly: config mismatch");
    ExpoPoly r(cfg_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            ExpoMonomial m{ma.y_pow + mb.y_pow, lattice_add(ma.e_part, mb.e_part),
                           lattice_add(ma.x_part, mb.x_part)};
            r.add_term(m, ca * cb);
        }
    return r;
}

ExpoPoly ExpoPoly::scaled(const FieldScalar& c) const {
    ExpoPoly r(cfg_);
    if (c.is_zero()) return r;
    for (const auto& [m, cc] : terms_) r.terms_.emplace(m, cc * c);
    return r;
}

bool is_unit(const ExpoPoly& f) { return f.terms().size() == 1; }

ExpoPoly delta(const ExpoPoly& f) {
    const auto& cfg = f.config();
    ExpoPoly r(cfg);
    const std::size_t rank = cfg->rank();
    const FieldScalar p_embed = cfg->basis.embedding(cfg->p);
    for (const auto& [m, c] : f.terms()) {
        // x-part: delta(x^a) = embed(a) x^{a - e1}
        FieldScalar xa = cfg->basis.embedding(m.x_part);
        if (!xa.is_zero()) {
            ExpoMonomial n = m;
            n.x_part[0] -= 1;
            r.add_term(n, c * xa);
        }
        // e-part over A: delta(e^{ax}) = embed(a) e^{ax}
        FieldScalar ea(cfg->table, 0);
        for (std::size_t i = 0; i < rank; ++i)
            if (m.e_part[i] != 0)
                ea += cfg->basis.embed[i] * FieldScalar(cfg->table, Rational(m.e_part[i]));
        if (!ea.is_zero()) r.add_term(m, c * ea);
        // dynamic t-coordinate: delta(e^{k t x}) = k t e^{k t x}
        if (cfg->variant == Variant::dynamic && m.e_part[rank] != 0)
            r.add_term(m, c * cfg->t_scalar() * FieldScalar(cfg->table, Rational(m.e_part[rank])));
        // y-part
        if (m.y_pow != 0) {
            FieldScalar k = FieldScalar(cfg->table, Rational(m.y_pow));
            if (cfg->variant == Variant::constant) {
                // delta(y^m) = m tau p^ x^{p-1} y^m
                ExpoMonomial n = m;
                for (std::size_t i = 0; i < rank; ++i) n.x_part[i] += cfg->p[i];
                n.x_part[0] -= 1;
                r.add_term(n, c * k * cfg->tau_scalar() * p_embed);
            } else {
                // delta(y^m) = m y^m (p^ x^{p-1} + t x^p) e^{t x}
                ExpoMonomial n = m;
                for (std::size_t i = 0; i < rank; ++i) n.x_part[i] += cfg->p[i];
                n.e_part[rank] += 1;
                ExpoMonomial n1 = n;
                n1.x_part[0] -= 1;
                r.add_term(n1, c * k * p_embed);
                r.add_term(n, c * k * cfg->t_scalar());
            }
        }
    }
    return r;
}

std::pair<long long, LatticeVector> multidegree(const RingConfig& cfg, const ExpoMonomial& m) {
    long long e_total = m.y_pow;
    for (long long e : m.e_part) e_total += e;
    (void)cfg;
    return {e_total, m.x_part};
}

} // namespace expoweyl
