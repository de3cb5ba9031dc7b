#include "cremona/parse.hpp"

#include <sstream>

#include "lexer.hpp"

namespace cremona {

namespace detail {
namespace {

constexpr long kMaxExponent = 4096;

long exponent_after_caret(Lexer& lex) {
  Token t = lex.expect(Tok::Int, "a nonnegative integer exponent");
  Integer e(t.text);
  if (e > kMaxExponent)
    throw ParseError("exponent exceeds the supported bound " + std::to_string(kMaxExponent),
                     t.line, t.column);
  return e.get_si();
}

Expr make_power(Expr base, long e) {
  Expr p;
  p.kind = Expr::Kind::Power;
  p.exponent = e;
  p.operands.push_back(std::move(base));
  return p;
}

Expr parse_atom(Lexer& lex) {
  switch (lex.peek().kind) {
    case Tok::Int: {
      Token num = lex.take();
      Expr e;
      e.kind = Expr::Kind::Literal;
      Integer n(num.text);
      if (lex.peek().kind == Tok::Slash) {
        lex.take();
        Token den = lex.expect(Tok::Int, "a denominator");
        Integer d(den.text);
        if (d == 0) throw ParseError("zero denominator", den.line, den.column);
        e.literal = Rational(n, d);
        e.literal.canonicalize();
      } else {
        e.literal = Rational(n);
      }
      if (lex.peek().kind == Tok::Caret) {
        lex.take();
        return make_power(std::move(e), exponent_after_caret(lex));
      }
      return e;
    }
    case Tok::Var: {
      Token v = lex.take();
      Expr e;
      e.kind = Expr::Kind::Variable;
      e.variable = v.text[1] - '0';
      if (lex.peek().kind == Tok::Caret) {
        lex.take();
        return make_power(std::move(e), exponent_after_caret(lex));
      }
      return e;
    }
    case Tok::LParen: {
      lex.take();
      Expr inner = parse_expression(lex);
      lex.expect(Tok::RParen, "')'");
      if (lex.peek().kind == Tok::Caret) {
        lex.take();
        return make_power(std::move(inner), exponent_after_caret(lex));
      }
      return inner;
    }
    default:
      lex.fail("an integer, a variable x0..x9, or '('");
  }
}

Expr parse_factor(Lexer& lex) {
  if (lex.peek().kind == Tok::Minus) {
    lex.take();
    Expr e;
    e.kind = Expr::Kind::Negate;
    e.operands.push_back(parse_factor(lex));
    return e;
  }
  return parse_atom(lex);
}

Expr parse_term(Lexer& lex) {
  Expr left = parse_factor(lex);
  while (lex.peek().kind == Tok::Star) {
    lex.take();
    Expr e;
    e.kind = Expr::Kind::Product;
    e.operands.push_back(std::move(left));
    e.operands.push_back(parse_factor(lex));
    left = std::move(e);
  }
  return left;
}

}  // namespace

Expr parse_expression(Lexer& lex) {
  Expr left = parse_term(lex);
  for (;;) {
    Tok k = lex.peek().kind;
    if (k != Tok::Plus && k != Tok::Minus) break;
    lex.take();
    Expr e;
    e.kind = (k == Tok::Plus) ? Expr::Kind::Sum : Expr::Kind::Difference;
    e.operands.push_back(std::move(left));
    e.operands.push_back(parse_term(lex));
    left = std::move(e);
  }
  return left;
}

}  // namespace detail

Expr parse_expr(std::string_view text) {
  detail::Lexer lex(text);
  Expr e = detail::parse_expression(lex);
  if (lex.peek().kind != detail::Tok::End) lex.fail("'+', '-', '*', '^' or end of input");
  return e;
}

Poly lower(const Expr& e, int ring_vars) {
  switch (e.kind) {
    case Expr::Kind::Literal:
      return Poly::constant(ring_vars, e.literal);
    case Expr::Kind::Variable:
      if (e.variable >= ring_vars)
        throw Error("variable x" + std::to_string(e.variable) + " outside the declared ring of " +
                    std::to_string(ring_vars) + " variables");
      return Poly::variable(ring_vars, e.variable, Rational(1));
    case Expr::Kind::Sum:
      return lower(e.operands[0], ring_vars) + lower(e.operands[1], ring_vars);
    case Expr::Kind::Difference:
      return lower(e.operands[0], ring_vars) - lower(e.operands[1], ring_vars);
    case Expr::Kind::Product:
      return lower(e.operands[0], ring_vars) * lower(e.operands[1], ring_vars);
    case Expr::Kind::Power:
      return lower(e.operands[0], ring_vars).pow(e.exponent);
    case Expr::Kind::Negate:
      return -lower(e.operands[0], ring_vars);
  }
  throw Error("malformed expression tree");
}

Poly parse_poly(std::string_view text, int ring_vars) {
  return lower(parse_expr(text), ring_vars);
}

std::vector<Poly> parse_map_tuple(std::string_view text, int ring_vars) {
  detail::Lexer lex(text);
  lex.expect(detail::Tok::LBracket, "'['");
  std::vector<Poly> out;
  out.push_back(lower(detail::parse_expression(lex), ring_vars));
  while (lex.peek().kind == detail::Tok::Colon) {
    lex.take();
    out.push_back(lower(detail::parse_expression(lex), ring_vars));
  }
  lex.expect(detail::Tok::RBracket, "']' or ':'");
  if (lex.peek().kind != detail::Tok::End) lex.fail("end of input");
  return out;
}

std::string render(const Poly& p) { return p.to_string(); }
std::string render(const MapRep& m) { return m.to_string(); }

std::string render(const BirationalMap& m) {
  std::ostringstream os;
  os << "forward:  " << m.forward().to_string() << "\n";
  os << "inverse:  " << m.inverse().to_string() << "\n";
  os << "cofactor fwd: " << m.cofactor_fwd().to_string() << "\n";
  os << "cofactor bwd: " << m.cofactor_bwd().to_string();
  return os.str();
}

}  // namespace cremona
