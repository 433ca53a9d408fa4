#pragma once

#include "expoweyl/expolyring.hpp"

namespace expoweyl {

/// Element of the Ore extension R[d; sigma, delta_q]: a finite sum
/// sum_k parts[k] * d^k in normal form (all d-powers on the right).
class WeylElement {
public:
    using PartMap = std::map<int, ExpoPoly>;

    WeylElement() = default;
    explicit WeylElement(RingConfigPtr cfg) : cfg_(std::move(cfg)) {}

    static WeylElement from_poly(ExpoPoly f, int d_deg = 0);
    static WeylElement scalar(RingConfigPtr cfg, const FieldScalar& c);
    static WeylElement one(RingConfigPtr cfg) {
        return scalar(cfg, FieldScalar(cfg->table, 1));
    }
    static WeylElement d_power(RingConfigPtr cfg, int k);

    const RingConfigPtr& config() const { return cfg_; }
    const PartMap& parts() const { return parts_; }
    bool is_zero() const { return parts_.empty(); }
    /// coefficient of d^k (zero polynomial if absent)
    ExpoPoly part(int k) const;

    WeylElement operator-() const;
    WeylElement operator+(const WeylElement& o) const;
    WeylElement operator-(const WeylElement& o) const;
    WeylElement operator*(const WeylElement& o) const;
    WeylElement& operator+=(const WeylElement& o) { return *this = *this + o; }
    WeylElement& operator-=(const WeylElement& o) { return *this = *this - o; }
    WeylElement& operator*=(const WeylElement& o) { return *this = *this * o; }
    bool operator==(const WeylElement& o) const { return parts_ == o.parts_; }
    bool operator!=(const WeylElement& o) const { return !(*this == o); }

    WeylElement scaled(const FieldScalar& c) const;

    void add_part(int k, const ExpoPoly& f);

private:
    RingConfigPtr cfg_;
    PartMap parts_;
};

/// The Ore twist: a formal character of the exponent lattice. Each monomial
/// is scaled by q^{x_0} * prod q_i^{x_i} * prod qe_i^{e_i} * qy^{y_pow},
/// so that d*x = q*x*d + 1 extends associatively to the whole ring.
/// Identity in classical mode.
ExpoPoly sigma_twist(const ExpoPoly& f);

/// twist factor of a single monomial under sigma
FieldScalar twist_factor(const RingConfig& cfg, const ExpoMonomial& m);

/// The sigma-derivation pairing with sigma_twist:
/// delta_q(m) = (Q(m) - 1)/(q - 1) * m * x^{-1} (Jackson-type difference
/// quotient); in classical mode the plain derivation d/dx of expolyring.
ExpoPoly delta_q(const ExpoPoly& f);

WeylElement weyl_mul(const WeylElement& a, const WeylElement& b);
WeylElement commutator(const WeylElement& a, const WeylElement& b);

/// Trace certificate that no n-dimensional module can satisfy [d, x] = 1:
/// the commutator has trace lhs = 0 while the identity has trace rhs = n.
struct ObstructionReport {
    long long dimension = 0;
    FieldScalar lhs, rhs;
};
ObstructionReport trace_obstruction(const RingConfigPtr& cfg, long long n);

/// Generator token of a raw (unordered) word in the algebra.
struct GenToken {
    enum class Kind { x_power, e_power, y_power, d, scalar };
    Kind kind = Kind::d;
    LatticeVector coords;   // x_power / e_power
    long long power = 1;    // y_power
    FieldScalar value;      // scalar

    static GenToken x(LatticeVector alpha) { return {Kind::x_power, std::move(alpha), 0, {}}; }
    static GenToken e(LatticeVector alpha) { return {Kind::e_power, std::move(alpha), 0, {}}; }
    static GenToken y(long long k) { return {Kind::y_power, {}, k, {}}; }
    static GenToken d() { return {Kind::d, {}, 0, {}}; }
    static GenToken c(FieldScalar v) { return {Kind::scalar, {}, 0, std::move(v)}; }
};

/// the single token as a (normally ordered) element
WeylElement token_element(const RingConfigPtr& cfg, const GenToken& tok);

/// normal ordering of a raw word: fold the tokens through the Ore product
WeylElement normal_form(const RingConfigPtr& cfg, const std::vector<GenToken>& word);

/// Character data for the induced module A (x) F_chi: one scalar per
/// x-basis coordinate, one per e-coordinate, and one for y.
struct CharacterData {
    std::vector<FieldScalar> x_values;
    std::vector<FieldScalar> e_values;
    FieldScalar y_value;
};

/// Action of a on a vector sum_k v[k] * (d^k (x) 1), classical mode only.
std::map<int, FieldScalar> induced_module_apply(const WeylElement& a,
                                                const std::map<int, FieldScalar>& v,
                                                const CharacterData& chi);

/// l1-style size of a monomial at d-degree d_deg, used to bound searches
long long monomial_size(int d_deg, const ExpoMonomial& m);

/// Basis of the space of elements supported on monomials of size <= D that
/// commute with x, d, every basis exponential, and y.
std::vector<WeylElement> center_up_to_degree(const RingConfigPtr& cfg, int D);

struct SaturationReport {
    bool contains_one = false;
    std::vector<std::size_t> profile; // span dimension after each closure pass
};

/// Closes the span of gen under left/right multiplication by the generator
/// families, keeping only products supported within size <= D, until stable.
SaturationReport ideal_saturate(const WeylElement& gen, int D);

} // namespace expoweyl
