#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spbw/algebra.hpp"

namespace spbw {

// expr := term (('+'|'-') term)*; term := factor ('*' factor)*;
// factor := '-' factor | atom ('^' nat)?; atom := literal | var | '(' expr ')'.
// A minus sign directly in front of a literal folds into the literal.
struct ExprNode {
  enum class Kind { Literal, Var, Add, Sub, Mul, Pow, Neg };
  Kind kind = Kind::Literal;
  Element value;            // Literal
  std::size_t var = 0;      // Var, 0-based
  std::uint32_t power = 0;  // Pow
  std::vector<ExprNode> kids;

  bool operator==(const ExprNode& o) const = default;
};

// n = 0 parses ring elements only (no x-variables).
ExprNode parse_expr(const Ring& ring, std::size_t n, const std::string& text);
std::string render_expr(const Ring& ring, const ExprNode& e);

Element evaluate_element(const Ring& ring, const ExprNode& e);
SkewPoly evaluate(const SkewExtension& a, const ExprNode& e);

Element parse_element(const Ring& ring, const std::string& text);
SkewPoly parse_poly(const SkewExtension& a, const std::string& text);

}  // namespace spbw
