#pragma once

#include <stdexcept>
#include <string>

#include "expoweyl/weylalg.hpp"

namespace expoweyl {

/// Diagnostic with a 1-based column into the input line.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t col)
        : std::runtime_error(msg + " at column " + std::to_string(col)), column_(col) {}

    std::size_t column() const { return column_; }

private:
    std::size_t column_;
};

/// Recursive-descent parser for the surface grammar
///   expr   := '-'? term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' int)?
///   atom   := rational | symbol | 'X(' coords ')' | 'E(' coords ')' | 'Y'
///           | 'D' | '[' expr ',' expr ']' | '(' expr ')'
/// evaluated directly into a normal form. Negative powers require a unit
/// (single invertible monomial at d-degree 0).
WeylElement parse_element(const RingConfigPtr& cfg, const std::string& text);

} // namespace expoweyl
