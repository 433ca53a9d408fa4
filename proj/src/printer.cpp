#include "expoweyl/printer.hpp"

#include <sstream>

namespace expoweyl {

namespace {

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

// one monomial of an MPoly, without sign; coeff is assumed positive
std::string mpoly_term_str(const SymbolTable& tab, const MPoly::Exponents& e,
                           const Rational& coeff) {
    std::vector<std::string> pieces;
    if (coeff != 1) pieces.push_back(rational_str(coeff));
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        std::string p = tab.at(i).name;
        if (e[i] != 1) p += "^" + std::to_string(e[i]);
        pieces.push_back(std::move(p));
    }
    if (pieces.empty()) return "1";
    std::string out = pieces[0];
    for (std::size_t i = 1; i < pieces.size(); ++i) out += "*" + pieces[i];
    return out;
}

// sum form, leading term first, no outer parentheses
std::string mpoly_str(const MPoly& p) {
    if (p.is_zero()) return "0";
    const auto& tab = *p.table();
    std::string out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const bool neg = it->second < 0;
        Rational mag = neg ? Rational(-it->second) : it->second;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        out += mpoly_term_str(tab, it->first, mag);
    }
    return out;
}

bool mpoly_is_single_term(const MPoly& p) { return p.terms().size() == 1; }

// true when the leading coefficient of the numerator is negative; the
// denominator is kept monic by normalization
bool scalar_is_negative(const FieldScalar& s) {
    if (s.is_zero()) return false;
    return s.num().terms().rbegin()->second < 0;
}

std::string wrap(const std::string& s, bool needed) {
    return needed ? "(" + s + ")" : s;
}

// product-factor form of a nonnegative scalar
std::string scalar_factor_str(const FieldScalar& s) {
    std::string out = wrap(mpoly_str(s.num()), !mpoly_is_single_term(s.num()));
    if (!s.den().is_constant() || s.den().constant_value() != 1) {
        out += "*" + wrap(mpoly_str(s.den()), !mpoly_is_single_term(s.den())) + "^-1";
    }
    return out;
}

std::string coords_str(const LatticeVector& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    return out + ")";
}

std::string power_piece(const std::string& name, long long k) {
    if (k == 1) return name;
    return name + "^" + std::to_string(k);
}

// one normal-form term c * y^a e^{alpha x} x^beta d^k, without the sign of c
std::string term_str(const FieldScalar& mag, const ExpoMonomial& m, int d_deg) {
    std::vector<std::string> pieces;
    const bool coeff_is_one = mag == FieldScalar(mag.table(), 1);
    if (m.y_pow != 0) pieces.push_back(power_piece("Y", m.y_pow));
    if (!lattice_is_zero(m.e_part)) pieces.push_back("E" + coords_str(m.e_part));
    if (!lattice_is_zero(m.x_part)) pieces.push_back("X" + coords_str(m.x_part));
    if (d_deg != 0) pieces.push_back(power_piece("D", d_deg));
    if (!coeff_is_one || pieces.empty())
        pieces.insert(pieces.begin(), scalar_factor_str(mag));
    std::string out = pieces[0];
    for (std::size_t i = 1; i < pieces.size(); ++i) out += "*" + pieces[i];
    return out;
}

} // namespace

std::string print_scalar(const FieldScalar& s) {
    if (s.is_zero()) return "0";
    if (scalar_is_negative(s)) return "-" + scalar_factor_str(-s);
    return scalar_factor_str(s);
}

std::string print_canonical(const WeylElement& a) {
    if (a.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto pit = a.parts().rbegin(); pit != a.parts().rend(); ++pit) {
        for (auto tit = pit->second.terms().rbegin(); tit != pit->second.terms().rend(); ++tit) {
            const bool neg = scalar_is_negative(tit->second);
            FieldScalar mag = neg ? -tit->second : tit->second;
            if (first) {
                if (neg) out += "-";
                first = false;
            } else {
                out += neg ? " - " : " + ";
            }
            out += term_str(mag, tit->first, pit->first);
        }
    }
    return out;
}

std::string print_canonical(const ExpoPoly& f) {
    return print_canonical(WeylElement::from_poly(f));
}

std::string print_canonical(const WittElement& w) {
    return print_canonical(WeylElement::from_poly(w.coeff(), 1));
}

} // namespace expoweyl
