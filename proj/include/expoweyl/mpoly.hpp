#pragma once

#include <map>
#include <vector>

#include "expoweyl/symbols.hpp"

namespace expoweyl {

/// Multivariate polynomial over Q in the symbols of a SymbolTable.
/// Exponents are non-negative; powers of algebraic symbols are kept reduced
/// below the degree of their minimal polynomial.
class MPoly {
public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, Rational>;

    MPoly() = default;
    explicit MPoly(SymbolTablePtr tab, const Rational& c = Rational(0));
    static MPoly symbol(SymbolTablePtr tab, std::size_t index, int power = 1);

    const SymbolTablePtr& table() const { return tab_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const; // a rational (no symbols)
    Rational constant_value() const;
    /// true when only algebraic symbols occur (an element of the number-field layer K)
    bool is_algebraic_only() const;
    bool uses_symbol(std::size_t index) const;

    MPoly operator-() const;
    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
    MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
    bool operator==(const MPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    MPoly scaled(const Rational& c) const;

    int degree_in(std::size_t var) const;
    /// coefficient of var^k, as a polynomial not involving var
    MPoly coeff_in(std::size_t var, int k) const;

    /// substitute symbol `var` by the polynomial `value`
    MPoly substitute(std::size_t var, const MPoly& value) const;

    /// exact division; throws if `d` does not divide exactly
    static MPoly exact_div(const MPoly& n, const MPoly& d);
    /// gcd over the transcendental variables with number-field coefficients;
    /// normalized so the lex-leading coefficient is 1
    static MPoly gcd(const MPoly& a, const MPoly& b);
    /// multiplicative inverse of a nonzero element of the algebraic layer K
    MPoly algebraic_inverse() const;

    /// lex-leading coefficient over transcendental variables (a K element);
    /// for a K element, the element itself
    MPoly lex_leading_transcendental_coeff() const;

    void add_term(const Exponents& e, const Rational& c); // reduces + drops zeros

private:
    SymbolTablePtr tab_;
    TermMap terms_;

    void reduce_algebraic();
    friend class FieldScalar;
};

} // namespace expoweyl
