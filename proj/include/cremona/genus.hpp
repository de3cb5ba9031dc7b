// Geometric genus of plane curves by blowup resolution, and the genus
// decision procedure for cones in P^3.
//
// The genus of a squarefree curve of degree d with rational (possibly
// infinitely near) singular points is (d-1)(d-2)/2 minus the sum of
// m(m-1)/2 over all infinitely-near points of multiplicity m. Singular
// points outside the rationals raise NonRationalSingularityError instead of
// extending the coefficient field.
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cremona/cone.hpp"
#include "cremona/point.hpp"

namespace cremona {

// Local model of a curve at a singular point: the chart variable set to one
// and the point translated to the origin.
struct AffineCurve {
  Poly poly;  // two variables
  int chart = 2;
  Rational shift_u;
  Rational shift_v;
};

AffineCurve affine_model(const Poly& curve, const Point& p);

// Minimal total degree of the terms: the multiplicity at the origin.
int origin_multiplicity(const Poly& local);

struct ResolutionNode {
  std::pair<Rational, Rational> point;  // chart coordinates of the center
  bool second_chart = false;            // reached as the chart-2-only point
  int multiplicity = 0;                 // always >= 2
  std::vector<ResolutionNode> children;
};

struct ResolutionTree {
  ResolutionNode root;
  int delta() const;
  std::vector<int> multiplicity_sequence() const;  // preorder
};

struct BlowupResult {
  Poly chart1;                         // f(x, x t) / x^m in variables (x, t)
  Poly chart2;                         // f(s y, y) / y^m in variables (s, y)
  std::vector<Rational> chart1_meets;  // t-values where the strict transform meets x = 0
  bool chart2_origin_meets = false;    // tangent direction at infinity of chart 1
};

// One blowup of the origin; m must be the exact multiplicity (>= 2).
BlowupResult blowup_once(const AffineCurve& curve, int m);

// Complete tree of infinitely-near points of multiplicity >= 2 over (p, m).
ResolutionTree resolve(const Poly& curve, const Point& p, int m);

// All rational singular points of a squarefree plane curve, with their
// multiplicities, by resultant elimination and rational-root extraction.
std::vector<std::pair<Point, int>> singular_points(const Poly& curve);

struct SingularityReport {
  Point point;
  int multiplicity;
  ResolutionTree tree;
  int delta;
};

struct GenusReport {
  Poly curve;
  int degree = 0;
  int arithmetic_genus = 0;
  std::vector<SingularityReport> singularities;
  int delta_total = 0;
  int genus = 0;
  std::string to_string() const;
};

// Geometric genus of a squarefree homogeneous curve in three variables,
// asserted irreducible by the caller. Raises NegativeGenusError when the
// count drops below zero (the assertion was wrong).
GenusReport geometric_genus(const Poly& curve);

// Hyperplane section x3 = a0 x0 + a1 x1 + a2 x2 with small random integer
// coefficients, redrawn until squarefree of full degree (at most 20 tries).
Poly general_section(const Poly& surface, std::uint64_t seed);
Poly general_section(const ConeWitness& cone, std::uint64_t seed);

struct DecisionReport {
  bool equivalent = false;
  GenusReport first;
  GenusReport second;
  std::string to_string() const;
};

// Cones in P^3 are Cremona equivalent exactly when general sections have
// equal geometric genus; genus zero means equivalent to a plane.
DecisionReport decide_cone_equivalence_p3(const ConeWitness& s1, const ConeWitness& s2,
                                          std::uint64_t seed);

}  // namespace cremona
