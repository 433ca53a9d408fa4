#pragma once

#include <utility>

#include "expoweyl/expolyring.hpp"

namespace expoweyl {

/// Weight-space dimension table: finite support map weight -> dim > 0.
/// Weights are exact scalars compared by field equality, so entries live in an
/// association list rather than an ordered map.
class Character {
public:
    using Entry = std::pair<FieldScalar, long long>;

    void add(const FieldScalar& weight, long long dim);
    long long dim(const FieldScalar& weight) const;
    const std::vector<Entry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    long long total() const;

    /// equality as weight->dim maps (order-insensitive)
    bool operator==(const Character& o) const;
    bool operator!=(const Character& o) const { return !(*this == o); }

private:
    std::vector<Entry> entries_;
};

/// Generator set of the negative part of the triangular decomposition. Each
/// generator must be lexicographically negative: its first nonzero coordinate
/// is negative.
struct NegativePart {
    std::vector<LatticeVector> gens;

    explicit NegativePart(std::vector<LatticeVector> g);
};

/// Number of multisets over neg.gens summing to n (Kostant-style partition
/// count); with ordered = true, the number of ordered tuples instead.
long long verma_weight_dim(const NegativePart& neg, const LatticeVector& n,
                           bool ordered = false);

/// eigenvalue of the degree operator on the basis vector x^n (x) 1: lambda - n
FieldScalar verma_action_rank1(const FieldScalar& lambda, long long n);

/// Euler character of the rank-1 two-term resolution: ch D(n) - ch D(-n-2)
/// evaluated on the weights n - k for k = 0..depth.
Character bgg_character(const SymbolTablePtr& tab, long long n, int depth);

/// weight negation mu -> -mu (longest Weyl element of the rank-1 example)
Character duality_on_characters(const Character& ch);

enum class SupportType { dense, discrete };

/// A weight-support is discrete exactly when chi(x) lies in the subfield
/// generated by the lattice embedding; any symbol outside it makes the
/// x-spectrum Zariski-dense.
SupportType classify_support(const RingConfigPtr& cfg, const FieldScalar& chi_x);

/// (x-eigenvalue, e^x-eigenvalue) on the basis vector v_{n+k} of the discrete
/// weight module attached to the character value q_char
std::pair<FieldScalar, FieldScalar> discrete_module_action(long long n, long long k,
                                                           const FieldScalar& q_char);

} // namespace expoweyl
