#pragma once

#include "expoweyl/expolyring.hpp"

namespace expoweyl {

/// Element f * d of the Witt-type Lie algebra: the coefficient f lives in the
/// y-free part of R (basis e^{alpha x} x^beta d).
class WittElement {
public:
    WittElement() = default;
    explicit WittElement(RingConfigPtr cfg) : coeff_(std::move(cfg)) {}

    /// wraps f * d; rejects any monomial with a y-power
    static WittElement from_poly(ExpoPoly f);
    /// e^{alpha x} x^beta d
    static WittElement basis(const RingConfigPtr& cfg, const LatticeVector& alpha,
                             const LatticeVector& beta);
    static WittElement d(const RingConfigPtr& cfg);

    const ExpoPoly& coeff() const { return coeff_; }
    const RingConfigPtr& config() const { return coeff_.config(); }
    bool is_zero() const { return coeff_.is_zero(); }

    WittElement operator-() const { return WittElement(-coeff_); }
    WittElement operator+(const WittElement& o) const { return WittElement(coeff_ + o.coeff_); }
    WittElement operator-(const WittElement& o) const { return WittElement(coeff_ - o.coeff_); }
    WittElement scaled(const FieldScalar& c) const { return WittElement(coeff_.scaled(c)); }
    bool operator==(const WittElement& o) const { return coeff_ == o.coeff_; }
    bool operator!=(const WittElement& o) const { return !(*this == o); }

private:
    explicit WittElement(ExpoPoly f) : coeff_(std::move(f)) {}
    ExpoPoly coeff_;
};

/// [f d, g d] = (f delta(g) - g delta(f)) d
WittElement witt_bracket(const WittElement& a, const WittElement& b);

/// closed form of the bracket on basis elements:
/// [e^{ax}x^b d, e^{cx}x^e d] = e^{(a+c)x}((c^-a^)x^{b+e} + (e^-b^)x^{b+e-1}) d
WittElement structure_constants(const RingConfigPtr& cfg, const LatticeVector& alpha,
                                const LatticeVector& beta, const LatticeVector& gamma,
                                const LatticeVector& delta_);

/// [a,[b,c]] + [b,[c,a]] + [c,[a,b]]
WittElement jacobi_defect(const WittElement& a, const WittElement& b, const WittElement& c);

} // namespace expoweyl
