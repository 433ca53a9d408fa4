#pragma once

#include <optional>

#include "expoweyl/weylalg.hpp"

namespace expoweyl {

/// Element of the automorphism group (F^x)^n |x GL(n,Z) acting on the
/// exponent lattice of R, n = exponent_dim. A monomial with exponent vector v
/// maps to (prod_i torus_i^{(Mv)_i}) * monomial(Mv).
struct RingAutomorphism {
    std::vector<FieldScalar> torus;
    UnimodularMatrix matrix;

    RingAutomorphism(std::vector<FieldScalar> t, UnimodularMatrix m);
    static RingAutomorphism identity(const RingConfigPtr& cfg);
    static RingAutomorphism pure_torus(std::vector<FieldScalar> t);
    static RingAutomorphism pure_matrix(const RingConfigPtr& cfg, UnimodularMatrix m);

    std::size_t size() const { return matrix.size(); }
};

ExpoPoly apply_automorphism(const RingAutomorphism& g, const ExpoPoly& f);

/// apply(compose(g,h), f) = apply(g, apply(h, f))
RingAutomorphism compose(const RingAutomorphism& g, const RingAutomorphism& h);
RingAutomorphism inverse(const RingAutomorphism& g);

/// scaling factor of e^{alpha x} under the torus (lambda_1, ..., lambda_r)
FieldScalar torus_on_exponentials(const std::vector<FieldScalar>& lambda,
                                  const LatticeVector& alpha);

struct IsoVerdict {
    bool isomorphic = false;
    std::optional<UnimodularMatrix> witness; // maps p1 to +-p2 when isomorphic
};

/// Isomorphism decision for the algebras attached to p1, p2: for rank >= 2 the
/// GL(r,Z) orbit of a nonzero vector is classified by its content, and the
/// witness is assembled from basis completions of the primitivizations; for
/// rank 1 only p1 = +-p2 works.
IsoVerdict iso_decide(const LatticeVector& p1, const LatticeVector& p2);

/// content(v) * e1, the canonical orbit representative (rank >= 2)
LatticeVector canonical_orbit_rep(const LatticeVector& v);

/// Order-2 Galois action on scalar coefficients: conjugation of one quadratic
/// algebraic layer, extended coefficientwise to Weyl elements. This is an
/// algebra map exactly when the lattice embedding of A lies in the fixed
/// field (so all structure constants are conjugation-invariant).
struct GaloisAction {
    std::size_t layer_index = 0;

    GaloisAction(SymbolTablePtr tab, std::size_t layer);
    GaloisAction(const SymbolTablePtr& tab, const std::string& name);
};

FieldScalar galois_apply(const GaloisAction& sigma, const FieldScalar& c);
ExpoPoly galois_apply(const GaloisAction& sigma, const ExpoPoly& f);
WeylElement galois_apply(const GaloisAction& sigma, const WeylElement& a);

/// averaging projector (a + sigma(a))/2 onto the fixed subalgebra
WeylElement reynolds_project(const GaloisAction& sigma, const WeylElement& a);

} // namespace expoweyl
