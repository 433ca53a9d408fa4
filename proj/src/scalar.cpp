#include "expoweyl/scalar.hpp"

#include <limits>

namespace expoweyl {

namespace {

// common transcendental monomial factor of p, as per-variable exponents
void min_exponents(const MPoly& p, std::vector<int>& m) {
    const auto& tab = *p.table();
    for (const auto& [e, c] : p.terms())
        for (std::size_t i = 0; i < tab.size(); ++i)
            if (!tab.at(i).algebraic()) m[i] = std::min(m[i], e[i]);
}

MPoly shift_down(const MPoly& p, const std::vector<int>& m) {
    MPoly r(p.table());
    for (const auto& [e, c] : p.terms()) {
        MPoly::Exponents ne = e;
        for (std::size_t i = 0; i < ne.size(); ++i) ne[i] -= m[i];
        r.add_term(ne, c);
    }
    return r;
}

} // namespace

FieldScalar::FieldScalar(SymbolTablePtr tab, const Rational& c)
    : num_(tab, c), den_(tab, Rational(1)) {}

FieldScalar::FieldScalar(MPoly num) : num_(std::move(num)), den_(num_.table(), Rational(1)) {}

FieldScalar::FieldScalar(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("FieldScalar: zero denominator");
    normalize();
}

FieldScalar FieldScalar::symbol(SymbolTablePtr tab, const std::string& name) {
    return symbol(tab, tab->index_of(name));
}

FieldScalar FieldScalar::symbol(SymbolTablePtr tab, std::size_t index) {
    return FieldScalar(MPoly::symbol(tab, index));
}

bool FieldScalar::is_one() const { return num_ == den_; }

Rational FieldScalar::as_rational() const {
    if (!is_rational()) throw std::domain_error("FieldScalar: not rational");
    return num_.constant_value() / den_.constant_value();
}

void FieldScalar::normalize() {
    if (num_.is_zero()) {
        den_ = MPoly(num_.table(), Rational(1));
        return;
    }
    if (den_.is_constant()) {
        Rational c = den_.constant_value();
        if (c != 1) {
            num_ = num_.scaled(Rational(1) / c);
            den_ = MPoly(num_.table(), Rational(1));
        }
        return;
    }
    // peel off the shared monomial factor before the polynomial gcd
    std::vector<int> m(num_.table()->size(), std::numeric_limits<int>::max());
    min_exponents(num_, m);
    std::vector<int> md(num_.table()->size(), std::numeric_limits<int>::max());
    min_exponents(den_, md);
    bool shift = false;
    for (std::size_t i = 0; i < m.size(); ++i) {
        m[i] = std::min(m[i], md[i]);
        if (m[i] == std::numeric_limits<int>::max()) m[i] = 0;
        if (m[i] > 0) shift = true;
    }
    if (shift) {
        num_ = shift_down(num_, m);
        den_ = shift_down(den_, m);
    }
    MPoly g = MPoly::gcd(num_, den_);
    if (!g.is_constant() || g.constant_value() != 1) {
        num_ = MPoly::exact_div(num_, g);
        den_ = MPoly::exact_div(den_, g);
    }
    MPoly lc = den_.lex_leading_transcendental_coeff();
    if (!(lc.is_constant() && lc.constant_value() == 1)) {
        MPoly inv = lc.algebraic_inverse();
        num_ *= inv;
        den_ *= inv;
    }
}

FieldScalar FieldScalar::operator-() const {
    FieldScalar r(*this);
    r.num_ = -r.num_;
    return r;
}

FieldScalar FieldScalar::operator+(const FieldScalar& o) const {
    if (den_ == o.den_) return FieldScalar(num_ + o.num_, den_);
    return FieldScalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

FieldScalar FieldScalar::operator-(const FieldScalar& o) const {
    if (den_ == o.den_) return FieldScalar(num_ - o.num_, den_);
    return FieldScalar(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

FieldScalar FieldScalar::operator*(const FieldScalar& o) const {
    return FieldScalar(num_ * o.num_, den_ * o.den_);
}

FieldScalar FieldScalar::operator/(const FieldScalar& o) const {
    if (o.is_zero()) throw std::domain_error("FieldScalar: division by zero");
    return FieldScalar(num_ * o.den_, den_ * o.num_);
}

FieldScalar FieldScalar::inverse() const {
    if (is_zero()) throw std::domain_error("FieldScalar: inverse of zero");
    return FieldScalar(den_, num_);
}

FieldScalar FieldScalar::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    FieldScalar r(table(), Rational(1));
    FieldScalar base(*this);
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

bool FieldScalar::operator==(const FieldScalar& o) const {
    // cross multiplication: exact regardless of residual common factors
    return num_ * o.den_ == o.num_ * den_;
}

FieldScalar FieldScalar::conjugated(std::size_t layer_index) const {
    const auto& spec = table()->at(layer_index);
    if (!spec.algebraic() || spec.degree() != 2)
        throw std::invalid_argument("conjugation requires a quadratic algebraic layer");
    // theta satisfies theta^2 + b theta + c = 0; the conjugate root is -b - theta
    MPoly repl = MPoly(table(), -spec.min_poly[1]) - MPoly::symbol(table(), layer_index);
    return FieldScalar(num_.substitute(layer_index, repl), den_.substitute(layer_index, repl));
}

} // namespace expoweyl
