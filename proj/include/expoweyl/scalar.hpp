#pragma once

#include "expoweyl/mpoly.hpp"

namespace expoweyl {

/// Element of the coefficient field: a reduced fraction of multivariate
/// polynomials over Q in the configured algebraic and transcendental symbols.
class FieldScalar {
public:
    FieldScalar() = default;
    explicit FieldScalar(SymbolTablePtr tab, const Rational& c = Rational(0));
    explicit FieldScalar(MPoly num);
    FieldScalar(MPoly num, MPoly den);

    static FieldScalar symbol(SymbolTablePtr tab, const std::string& name);
    static FieldScalar symbol(SymbolTablePtr tab, std::size_t index);

    const SymbolTablePtr& table() const { return num_.table(); }
    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
    Rational as_rational() const;
    bool uses_symbol(std::size_t index) const {
        return num_.uses_symbol(index) || den_.uses_symbol(index);
    }

    FieldScalar operator-() const;
    FieldScalar operator+(const FieldScalar& o) const;
    FieldScalar operator-(const FieldScalar& o) const;
    FieldScalar operator*(const FieldScalar& o) const;
    FieldScalar operator/(const FieldScalar& o) const; // throws on division by zero
    FieldScalar& operator+=(const FieldScalar& o) { return *this = *this + o; }
    FieldScalar& operator-=(const FieldScalar& o) { return *this = *this - o; }
    FieldScalar& operator*=(const FieldScalar& o) { return *this = *this * o; }
    FieldScalar& operator/=(const FieldScalar& o) { return *this = *this / o; }

    FieldScalar inverse() const;
    FieldScalar pow(long long e) const;

    bool operator==(const FieldScalar& o) const;
    bool operator!=(const FieldScalar& o) const { return !(*this == o); }

    /// coefficient-wise Galois conjugation on the quadratic layer named by
    /// `layer_index` (a degree-2 algebraic symbol): theta -> -b - theta
    FieldScalar conjugated(std::size_t layer_index) const;

private:
    MPoly num_, den_; // den nonzero; reduced; den lex-leading coefficient 1
    void normalize();
};

} // namespace expoweyl
