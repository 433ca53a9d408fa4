#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "expoweyl/rational.hpp"

namespace expoweyl {

/// A symbol adjoined to the rationals. An algebraic symbol carries a monic
/// minimal polynomial (coefficients low-to-high, leading 1 implicit in the
/// last entry); a transcendental symbol has an empty min_poly.
struct SymbolSpec {
    std::string name;
    std::vector<Rational> min_poly; // empty => transcendental; else monic, degree = size()-1

    bool algebraic() const { return !min_poly.empty(); }
    int degree() const { return static_cast<int>(min_poly.size()) - 1; }
};

/// Immutable ordered table of coefficient-field symbols. Algebraic symbols
/// are kept reduced below their min_poly degree everywhere downstream.
class SymbolTable {
public:
    explicit SymbolTable(std::vector<SymbolSpec> specs) : specs_(std::move(specs)) {
        for (std::size_t i = 0; i < specs_.size(); ++i) {
            const auto& s = specs_[i];
            if (s.name.empty())
                throw std::invalid_argument("symbol with empty name");
            if (s.algebraic()) {
                if (s.degree() < 1)
                    throw std::invalid_argument("min_poly of '" + s.name + "' must have degree >= 1");
                if (s.min_poly.back() != 1)
                    throw std::invalid_argument("min_poly of '" + s.name + "' must be monic");
                if (s.degree() == 2) {
                    // irreducibility check for quadratics: no rational root of
                    // X^2 + b X + c, i.e. b^2 - 4c is not a rational square
                    Rational b = s.min_poly[1], c = s.min_poly[0];
                    Rational disc = b * b - 4 * c;
                    if (is_rational_square(disc))
                        throw std::invalid_argument("min_poly of '" + s.name + "' is reducible over Q");
                }
            }
            if (!index_.emplace(s.name, i).second)
                throw std::invalid_argument("duplicate symbol '" + s.name + "'");
        }
    }

    std::size_t size() const { return specs_.size(); }
    const SymbolSpec& at(std::size_t i) const { return specs_.at(i); }

    bool contains(const std::string& name) const { return index_.count(name) != 0; }
    std::size_t index_of(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end())
            throw std::invalid_argument("unknown symbol '" + name + "'");
        return it->second;
    }

    static bool is_rational_square(const Rational& r) {
        if (r < 0) return false;
        BigInt n = numerator(r), d = denominator(r);
        BigInt sn = boost::multiprecision::sqrt(n), sd = boost::multiprecision::sqrt(d);
        return sn * sn == n && sd * sd == d;
    }

private:
    std::vector<SymbolSpec> specs_;
    std::map<std::string, std::size_t> index_;
};

using SymbolTablePtr = std::shared_ptr<const SymbolTable>;

} // namespace expoweyl
