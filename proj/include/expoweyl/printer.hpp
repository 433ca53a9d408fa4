#pragma once

#include <string>

#include "expoweyl/weylalg.hpp"
#include "expoweyl/wittalg.hpp"

namespace expoweyl {

/// Deterministic text form of a scalar, reparseable as a product factor.
/// Symbolic denominators come out as "(den)^-1" factors.
std::string print_scalar(const FieldScalar& s);

/// Canonical text form: d-degree descending, then monomials in descending
/// lexicographic order. parse_element of the output normalizes back to the
/// argument.
std::string print_canonical(const WeylElement& a);
std::string print_canonical(const ExpoPoly& f);
std::string print_canonical(const WittElement& w);

} // namespace expoweyl
