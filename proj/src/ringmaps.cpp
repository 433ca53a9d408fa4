#include "expoweyl/ringmaps.hpp"

namespace expoweyl {

namespace {

LatticeVector flatten(const RingConfig& cfg, const ExpoMonomial& m) {
    LatticeVector v;
    v.reserve(cfg.exponent_dim());
    v.push_back(m.y_pow);
    v.insert(v.end(), m.e_part.begin(), m.e_part.end());
    v.insert(v.end(), m.x_part.begin(), m.x_part.end());
    return v;
}

ExpoMonomial unflatten(const RingConfig& cfg, const LatticeVector& v) {
    ExpoMonomial m;
    m.y_pow = v[0];
    m.e_part.assign(v.begin() + 1, v.begin() + 1 + cfg.e_dim());
    m.x_part.assign(v.begin() + 1 + cfg.e_dim(), v.end());
    return m;
}

} // namespace

RingAutomorphism::RingAutomorphism(std::vector<FieldScalar> t, UnimodularMatrix m)
    : torus(std::move(t)), matrix(std::move(m)) {
    if (torus.size() != matrix.size())
        throw std::invalid_argument("RingAutomorphism: torus/matrix size mismatch");
    for (const auto& c : torus)
        if (c.is_zero()) throw std::invalid_argument("RingAutomorphism: torus entry is zero");
}

RingAutomorphism RingAutomorphism::identity(const RingConfigPtr& cfg) {
    std::size_t n = cfg->exponent_dim();
    return RingAutomorphism(std::vector<FieldScalar>(n, FieldScalar(cfg->table, 1)),
                            UnimodularMatrix::identity(n));
}

RingAutomorphism RingAutomorphism::pure_torus(std::vector<FieldScalar> t) {
    std::size_t n = t.size();
    return RingAutomorphism(std::move(t), UnimodularMatrix::identity(n));
}

RingAutomorphism RingAutomorphism::pure_matrix(const RingConfigPtr& cfg, UnimodularMatrix m) {
    std::vector<FieldScalar> torus(m.size(), FieldScalar(cfg->table, 1));
    return RingAutomorphism(std::move(torus), std::move(m));
}

ExpoPoly apply_automorphism(const RingAutomorphism& g, const ExpoPoly& f) {
    const auto& cfg = *f.config();
    if (g.size() != cfg.exponent_dim())
        throw std::invalid_argument("apply_automorphism: size mismatch");
    ExpoPoly r(f.config());
    for (const auto& [m, c] : f.terms()) {
        LatticeVector w = apply_matrix(g.matrix, flatten(cfg, m));
        FieldScalar scale = c;
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i] != 0) scale *= g.torus[i].pow(w[i]);
        r.add_term(unflatten(cfg, w), scale);
    }
    return r;
}

RingAutomorphism compose(const RingAutomorphism& g, const RingAutomorphism& h) {
    if (g.size() != h.size()) throw std::invalid_argument("compose: size mismatch");
    const std::size_t n = g.size();
    // factor bookkeeping: with u = M_g M_h v and w = M_h v, the composite
    // picks up prod tg_i^{u_i} * prod th_j^{w_j}; rewriting w through M_g^{-1}
    // folds the h-torus into exponent coordinates of u
    UnimodularMatrix gi = g.matrix.inverse();
    std::vector<FieldScalar> torus;
    torus.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        FieldScalar c = g.torus[i];
        for (std::size_t j = 0; j < n; ++j)
            if (gi(j, i) != 0) c *= h.torus[j].pow(gi(j, i));
        torus.push_back(c);
    }
    return RingAutomorphism(std::move(torus), g.matrix * h.matrix);
}

RingAutomorphism inverse(const RingAutomorphism& g) {
    const std::size_t n = g.size();
    std::vector<FieldScalar> torus;
    torus.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        FieldScalar c(g.torus[0].table(), Rational(1));
        for (std::size_t i = 0; i < n; ++i)
            if (g.matrix(i, j) != 0) c *= g.torus[i].pow(-g.matrix(i, j));
        torus.push_back(c);
    }
    return RingAutomorphism(std::move(torus), g.matrix.inverse());
}

FieldScalar torus_on_exponentials(const std::vector<FieldScalar>& lambda,
                                  const LatticeVector& alpha) {
    if (lambda.size() != alpha.size())
        throw std::invalid_argument("torus_on_exponentials: size mismatch");
    if (lambda.empty()) throw std::invalid_argument("torus_on_exponentials: empty torus");
    FieldScalar r(lambda[0].table(), Rational(1));
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (lambda[i].is_zero())
            throw std::invalid_argument("torus_on_exponentials: zero entry");
        if (alpha[i] != 0) r *= lambda[i].pow(alpha[i]);
    }
    return r;
}

IsoVerdict iso_decide(const LatticeVector& p1, const LatticeVector& p2) {
    if (lattice_is_zero(p1) || lattice_is_zero(p2))
        throw std::invalid_argument("iso_decide: zero vector");
    if (p1.size() != p2.size()) throw std::invalid_argument("iso_decide: dimension mismatch");
    const long long c1 = content(p1), c2 = content(p2);
    if (p1.size() == 1) {
        // GL(1,Z) = {+-1}
        if (c1 != c2) return {};
        long long s = (p1[0] == p2[0]) ? 1 : -1;
        return {true, UnimodularMatrix(std::vector<std::vector<long long>>{{s}})};
    }
    if (c1 != c2) return {};
    LatticeVector u1 = p1, u2 = p2;
    for (auto& x : u1) x /= c1;
    for (auto& x : u2) x /= c2;
    UnimodularMatrix M1 = complete_to_basis(u1), M2 = complete_to_basis(u2);
    // M1 e1 = u1, so (M2 M1^{-1}) p1 = c1 * M2 e1 = p2
    return {true, M2 * M1.inverse()};
}

LatticeVector canonical_orbit_rep(const LatticeVector& v) {
    if (lattice_is_zero(v)) throw std::invalid_argument("canonical_orbit_rep: zero vector");
    LatticeVector r(v.size(), 0);
    r[0] = content(v);
    return r;
}

GaloisAction::GaloisAction(SymbolTablePtr tab, std::size_t layer) : layer_index(layer) {
    const auto& spec = tab->at(layer);
    if (!spec.algebraic() || spec.degree() != 2)
        throw std::invalid_argument("GaloisAction: layer must be quadratic algebraic");
}

GaloisAction::GaloisAction(const SymbolTablePtr& tab, const std::string& name)
    : GaloisAction(tab, tab->index_of(name)) {}

FieldScalar galois_apply(const GaloisAction& sigma, const FieldScalar& c) {
    return c.conjugated(sigma.layer_index);
}

ExpoPoly galois_apply(const GaloisAction& sigma, const ExpoPoly& f) {
    ExpoPoly r(f.config());
    for (const auto& [m, c] : f.terms()) r.add_term(m, galois_apply(sigma, c));
    return r;
}

WeylElement galois_apply(const GaloisAction& sigma, const WeylElement& a) {
    WeylElement r(a.config());
    for (const auto& [k, f] : a.parts()) r.add_part(k, galois_apply(sigma, f));
    return r;
}

WeylElement reynolds_project(const GaloisAction& sigma, const WeylElement& a) {
    if (a.is_zero()) return a;
    FieldScalar half(a.config()->table, Rational(1, 2));
    return (a + galois_apply(sigma, a)).scaled(half);
}

} // namespace expoweyl
