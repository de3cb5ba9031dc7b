// Text grammar for polynomials and map tuples, plus canonical rendering.
//
// Grammar (LL(1), explicit '*', no juxtaposition):
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := '-' factor | atom
//   atom   := INT ('/' INT)? ('^' INT)?
//           | VAR ('^' INT)?
//           | '(' expr ')' ('^' INT)?
// Variables are x0..x9; '#' starts a comment to end of line.
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cremona/maps.hpp"
#include "cremona/poly.hpp"

namespace cremona {

struct Expr {
  enum class Kind { Literal, Variable, Sum, Difference, Product, Power, Negate };
  Kind kind = Kind::Literal;
  Rational literal;          // Literal
  int variable = 0;          // Variable
  long exponent = 0;         // Power
  std::vector<Expr> operands;
};

// Parse a complete expression; throws ParseError with line/column and the
// expected-token set on malformed input. Never crashes on arbitrary bytes.
Expr parse_expr(std::string_view text);

// Lower to a polynomial of the given ring; total on trees whose variables
// fit the ring.
Poly lower(const Expr& e, int ring_vars);

Poly parse_poly(std::string_view text, int ring_vars);

// "[expr : expr : ... : expr]"
std::vector<Poly> parse_map_tuple(std::string_view text, int ring_vars);

std::string render(const Poly& p);
std::string render(const MapRep& m);
std::string render(const BirationalMap& m);

}  // namespace cremona
