// Small construction helpers shared by the test suites.
#pragma once

#include <random>
#include <vector>

#include "cremona/poly.hpp"

namespace testsupport {

using cremona::Monomial;
using cremona::Poly;
using cremona::Rational;

inline Poly mono(int nvars, std::vector<int> exps, long num = 1, long den = 1) {
  return Poly::term(nvars, Monomial(std::move(exps)), Rational(num, den));
}

inline Poly var(int nvars, int i) { return Poly::variable(nvars, i, Rational(1)); }

inline Poly constant(int nvars, long c) { return Poly::constant(nvars, Rational(c)); }

// Random sparse polynomial with small integer coefficients.
inline Poly random_poly(std::mt19937_64& rng, int nvars, int max_deg, int max_terms) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<int> nterms(1, max_terms);
  Poly p(nvars);
  int t = nterms(rng);
  for (int i = 0; i < t; ++i) {
    Monomial m(nvars);
    int budget = deg(rng);
    std::uniform_int_distribution<int> pick(0, nvars - 1);
    for (int j = 0; j < budget; ++j) ++m[pick(rng)];
    p.add_term(m, Rational(coeff(rng)));
  }
  return p;
}

// Random homogeneous polynomial of exact degree d (possibly zero).
inline Poly random_form(std::mt19937_64& rng, int nvars, int d, int max_terms) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> pick(0, nvars - 1);
  Poly p(nvars);
  int t = nterms(rng);
  for (int i = 0; i < t; ++i) {
    Monomial m(nvars);
    for (int j = 0; j < d; ++j) ++m[pick(rng)];
    p.add_term(m, Rational(coeff(rng)));
  }
  return p;
}

}  // namespace testsupport
