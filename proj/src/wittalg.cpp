#include "expoweyl/wittalg.hpp"

namespace expoweyl {

namespace {

// delta-eigenvalue of e^{alpha x}: the embedding of alpha, with the dynamic
// coordinate contributing t per unit
FieldScalar e_eigenvalue(const RingConfig& cfg, const LatticeVector& alpha) {
    FieldScalar r(cfg.table, Rational(0));
    for (std::size_t i = 0; i < cfg.rank(); ++i)
        if (alpha[i] != 0) r += cfg.basis.embed[i] * FieldScalar(cfg.table, Rational(alpha[i]));
    if (cfg.variant == Variant::dynamic && alpha[cfg.rank()] != 0)
        r += cfg.t_scalar() * FieldScalar(cfg.table, Rational(alpha[cfg.rank()]));
    return r;
}

} // namespace

WittElement WittElement::from_poly(ExpoPoly f) {
    for (const auto& [m, c] : f.terms())
        if (m.y_pow != 0)
            throw std::invalid_argument("WittElement: coefficient must be y-free");
    return WittElement(std::move(f));
}

WittElement WittElement::basis(const RingConfigPtr& cfg, const LatticeVector& alpha,
                               const LatticeVector& beta) {
    return from_poly(ExpoPoly::e_power(cfg, alpha) * ExpoPoly::x_power(cfg, beta));
}

WittElement WittElement::d(const RingConfigPtr& cfg) { return WittElement(ExpoPoly::one(cfg)); }

WittElement witt_bracket(const WittElement& a, const WittElement& b) {
    const ExpoPoly& f = a.coeff();
    const ExpoPoly& g = b.coeff();
    return WittElement::from_poly(f * delta(g) - g * delta(f));
}

WittElement structure_constants(const RingConfigPtr& cfg, const LatticeVector& alpha,
                                const LatticeVector& beta, const LatticeVector& gamma,
                                const LatticeVector& delta_) {
    if (alpha.size() != cfg->e_dim() || gamma.size() != cfg->e_dim() ||
        beta.size() != cfg->x_dim() || delta_.size() != cfg->x_dim())
        throw std::invalid_argument("structure_constants: dimension mismatch");
    ExpoPoly r(cfg);
    LatticeVector e_sum = lattice_add(alpha, gamma);
    LatticeVector x_sum = lattice_add(beta, delta_);
    FieldScalar c1 = e_eigenvalue(*cfg, gamma) - e_eigenvalue(*cfg, alpha);
    if (!c1.is_zero()) r.add_term(ExpoMonomial{0, e_sum, x_sum}, c1);
    FieldScalar c2 = cfg->basis.embedding(delta_) - cfg->basis.embedding(beta);
    if (!c2.is_zero()) {
        LatticeVector x_down = x_sum;
        x_down[0] -= 1;
        r.add_term(ExpoMonomial{0, e_sum, x_down}, c2);
    }
    return WittElement::from_poly(std::move(r));
}

WittElement jacobi_defect(const WittElement& a, const WittElement& b, const WittElement& c) {
    return witt_bracket(a, witt_bracket(b, c)) + witt_bracket(b, witt_bracket(c, a)) +
           witt_bracket(c, witt_bracket(a, b));
}

} // namespace expoweyl
