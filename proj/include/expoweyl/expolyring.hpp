#pragma once

#include <memory>

#include "expoweyl/lattice.hpp"

namespace expoweyl {

/// Choice of the central invertible generator y: a constant exponential
/// prefactor (tau, standing for e^t) or a genuine e^{tx} lattice coordinate.
enum class Variant { constant, dynamic };

enum class QMode { classical, generic, root_of_unity };

struct DeformationConfig {
    QMode mode = QMode::classical;
    int root_order = 0; // N >= 2 when mode == root_of_unity
};

/// Shared configuration for the commutative ring R and everything on top of
/// it: the lattice basis of A, the vector p defining y, the variant, and the
/// deformation mode with the symbols backing it.
struct RingConfig {
    SymbolTablePtr table;
    LatticeBasis basis;
    LatticeVector p;
    Variant variant = Variant::constant;
    DeformationConfig deform;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t sym_t = npos;      // transcendental t
    std::size_t sym_tau = npos;    // tau = e^t
    std::size_t sym_q = npos;      // deformation parameter (q or the root-of-unity symbol)
    std::size_t sym_lambda = npos; // generic weight
    std::vector<std::size_t> sym_qcoord; // q-twist symbol per x-coordinate >= 1
    std::vector<std::size_t> sym_qe;     // q-twist symbol per e-coordinate
    std::size_t sym_qy = npos;           // q-twist symbol for y

    std::size_t rank() const { return basis.rank; }
    std::size_t e_dim() const { return basis.rank + (variant == Variant::dynamic ? 1 : 0); }
    std::size_t x_dim() const { return basis.rank; }
    /// dimension of the full monomial exponent lattice (y, e-part, x-part)
    std::size_t exponent_dim() const { return 1 + e_dim() + x_dim(); }

    FieldScalar scalar(const Rational& c) const { return FieldScalar(table, c); }
    FieldScalar t_scalar() const { return FieldScalar::symbol(table, sym_t); }
    FieldScalar tau_scalar() const { return FieldScalar::symbol(table, sym_tau); }
    FieldScalar lambda_scalar() const { return FieldScalar::symbol(table, sym_lambda); }

    /// the deformation parameter as a scalar (1 / q / -1 / omega)
    FieldScalar q_value() const;
    /// twist factor symbol for x-coordinate i (coordinate 0 is q itself)
    FieldScalar q_coord_value(std::size_t i) const;
    /// twist factor symbol for e-coordinate i
    FieldScalar q_e_value(std::size_t i) const;
    /// twist factor symbol for y
    FieldScalar q_y_value() const;
};

using RingConfigPtr = std::shared_ptr<const RingConfig>;

/// Builds a config with the standard symbols (t, tau, q, lambda, per-coordinate
/// twist symbols, the root-of-unity symbol when needed) plus the given
/// algebraic and extra transcendental symbols.
RingConfigPtr make_ring_config(std::vector<SymbolSpec> algebraic_symbols,
                               std::vector<std::string> extra_transcendentals,
                               std::vector<std::string> embed_names, // "" or "1" => rational literal
                               LatticeVector p, Variant variant, DeformationConfig deform);

/// Convenience: rank-1 A = Z, p = (1).
RingConfigPtr make_default_config(QMode mode = QMode::classical, int root_order = 0,
                                  Variant variant = Variant::constant);

/// Exponent record of a monomial y^{y_pow} e^{e_part . x} x^{x_part}.
struct ExpoMonomial {
    long long y_pow = 0;
    LatticeVector e_part;
    LatticeVector x_part;

    auto operator<=>(const ExpoMonomial&) const = default;
};

/// Element of the commutative expolynomial ring R: a finite scalar
/// combination of exponent records.
class ExpoPoly {
public:
    using TermMap = std::map<ExpoMonomial, FieldScalar>;

    ExpoPoly() = default;
    explicit ExpoPoly(RingConfigPtr cfg) : cfg_(std::move(cfg)) {}

    static ExpoPoly scalar(RingConfigPtr cfg, const FieldScalar& c);
    static ExpoPoly one(RingConfigPtr cfg) { return scalar(cfg, FieldScalar(cfg->table, 1)); }
    static ExpoPoly monomial(RingConfigPtr cfg, ExpoMonomial m, FieldScalar c);
    static ExpoPoly x_power(RingConfigPtr cfg, const LatticeVector& alpha);
    static ExpoPoly e_power(RingConfigPtr cfg, const LatticeVector& alpha);
    static ExpoPoly y_power(RingConfigPtr cfg, long long k);

    const RingConfigPtr& config() const { return cfg_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_scalar() const;
    FieldScalar scalar_value() const; // throws unless scalar

    ExpoPoly operator-() const;
    ExpoPoly operator+(const ExpoPoly& o) const;
    ExpoPoly operator-(const ExpoPoly& o) const;
    ExpoPoly operator*(const ExpoPoly& o) const;
    ExpoPoly& operator+=(const ExpoPoly& o) { return *this = *this + o; }
    ExpoPoly& operator-=(const ExpoPoly& o) { return *this = *this - o; }
    ExpoPoly& operator*=(const ExpoPoly& o) { return *this = *this * o; }
    bool operator==(const ExpoPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const ExpoPoly& o) const { return !(*this == o); }

    ExpoPoly scaled(const FieldScalar& c) const;

    void add_term(const ExpoMonomial& m, const FieldScalar& c);

private:
    RingConfigPtr cfg_;
    TermMap terms_;
};

/// true iff f is a single monomial with nonzero coefficient
bool is_unit(const ExpoPoly& f);

/// the derivation d/dx of R (classical, q = 1)
ExpoPoly delta(const ExpoPoly& f);

/// the bidegree of a monomial: (y_pow + sum of e-part, x-part);
/// the partial-degree d_pow is carried through unchanged
std::pair<long long, LatticeVector> multidegree(const RingConfig& cfg, const ExpoMonomial& m);

} // namespace expoweyl
