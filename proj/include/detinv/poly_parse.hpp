#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "detinv/field.hpp"
#include "detinv/polynomial.hpp"

namespace detinv {

/// Malformed polynomial text. `position` is the 0-based offset of the
/// offending character.
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t position, const std::string& what)
      : std::invalid_argument("parse error at position " + std::to_string(position) + ": " + what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// How variable names map to indices. `x7` is variable 6. `x_{i}_{j}` (braces
/// optional) is the matrix entry (i, j) and maps to (i-1)*cols + (j-1); it
/// needs cols > 0.
struct VariableLayout {
  std::size_t nvars = 0;
  std::size_t cols = 0;
};

/// Grammar (whitespace-insensitive):
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ['^' integer]
///   atom   := integer | variable | '(' expr ')'
SparsePoly<IntegerRing> parse_polynomial(std::string_view text, const VariableLayout& layout);

/// Splits on top-level commas, newlines and semicolons, then parses each
/// piece. Blank pieces and lines starting with '#' are skipped.
std::vector<SparsePoly<IntegerRing>> parse_polynomial_list(std::string_view text, const VariableLayout& layout);

/// Largest flat variable index used (x7 -> 7), 0 if none. Matrix-style
/// names need an explicit layout and are not counted.
std::size_t infer_variable_count(std::string_view text);

/// Reduces integer coefficients into a field.
template <class Field>
SparsePoly<Field> to_field(const Field& field, const SparsePoly<IntegerRing>& p) {
  return p.map_coefficients(field, [&](const mpz_class& c) { return field.from_integer(c); });
}

}  // namespace detinv
