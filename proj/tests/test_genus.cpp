#include <doctest.h>

#include "cremona/genus.hpp"
#include "support/builders.hpp"

using namespace cremona;
using testsupport::mono;
using testsupport::var;

namespace {

Poly smooth_conic() { return var(3, 0) * var(3, 1) - var(3, 2) * var(3, 2); }
Poly nodal_cubic() { return mono(3, {0, 2, 1}) - mono(3, {3, 0, 0}) - mono(3, {2, 0, 1}); }
Poly cuspidal_cubic() { return mono(3, {0, 2, 1}) - mono(3, {3, 0, 0}); }
Poly smooth_cubic() { return mono(3, {3, 0, 0}) + mono(3, {0, 3, 0}) + mono(3, {0, 0, 3}); }
Poly smooth_quartic() { return mono(3, {4, 0, 0}) + mono(3, {0, 4, 0}) + mono(3, {0, 0, 4}); }

// x1^2 x2^2 + x0^2 x2^2 + x0^2 x1^2 - 2 x0 x1 x2 (x0 + x1 + x2)
Poly three_point_quartic() {
  Poly q = mono(3, {0, 2, 2}) + mono(3, {2, 0, 2}) + mono(3, {2, 2, 0});
  Poly corr = mono(3, {1, 1, 1}, 2) * (var(3, 0) + var(3, 1) + var(3, 2));
  return q - corr;
}

}  // namespace

TEST_CASE("singular point scan") {
  auto nodal = singular_points(nodal_cubic());
  REQUIRE(nodal.size() == 1);
  CHECK(nodal[0].first == Point::coordinate_point(3, 2));
  CHECK(nodal[0].second == 2);

  CHECK(singular_points(smooth_cubic()).empty());
  CHECK(singular_points(smooth_conic()).empty());

  auto triangle = singular_points(var(3, 0) * var(3, 1) * var(3, 2));
  REQUIRE(triangle.size() == 3);
  for (const auto& [p, m] : triangle) CHECK(m == 2);

  auto quartic = singular_points(three_point_quartic());
  REQUIRE(quartic.size() == 3);
  CHECK(quartic[0].first == Point::coordinate_point(3, 2));  // sorted canonically
  for (const auto& [p, m] : quartic) CHECK(m == 2);

  CHECK_THROWS_AS(singular_points(smooth_conic() * smooth_conic()), Error);
}

TEST_CASE("non-rational singular points are reported, not guessed") {
  // three lines meeting pairwise in [0:1:0] and the irrational pair
  // [+-sqrt(2):0:1]
  Poly s = var(3, 1) * (var(3, 0) * var(3, 0) - mono(3, {0, 0, 2}, 2));
  CHECK_THROWS_AS(singular_points(s), NonRationalSingularityError);
  try {
    singular_points(s);
  } catch (const NonRationalSingularityError& e) {
    CHECK(e.residual_degree == 2);
  }
}

TEST_CASE("blowup of classical double points") {
  // node: x1^2 - x0^2 - x0^3 at the origin
  AffineCurve node{mono(2, {0, 2}) - mono(2, {2, 0}) - mono(2, {3, 0}), 2, Rational(0), Rational(0)};
  BlowupResult rb = blowup_once(node, 2);
  CHECK(rb.chart1 == mono(2, {0, 2}) - testsupport::constant(2, 1) - var(2, 0));
  REQUIRE(rb.chart1_meets.size() == 2);
  CHECK_FALSE(rb.chart2_origin_meets);

  // cusp: x1^2 - x0^3
  AffineCurve cusp{mono(2, {0, 2}) - mono(2, {3, 0}), 2, Rational(0), Rational(0)};
  BlowupResult rc = blowup_once(cusp, 2);
  CHECK(rc.chart1 == mono(2, {0, 2}) - var(2, 0));
  REQUIRE(rc.chart1_meets.size() == 1);
  CHECK(rc.chart1_meets[0] == Rational(0));

  // smooth origin is a precondition violation
  AffineCurve smooth{var(2, 1) - mono(2, {2, 0}), 2, Rational(0), Rational(0)};
  CHECK_THROWS_AS(blowup_once(smooth, 1), Error);
}

TEST_CASE("resolution trees of the standard singularities") {
  ResolutionTree node = resolve(nodal_cubic(), Point::coordinate_point(3, 2), 2);
  CHECK(node.multiplicity_sequence() == std::vector<int>{2});
  CHECK(node.delta() == 1);

  ResolutionTree cusp = resolve(cuspidal_cubic(), Point::coordinate_point(3, 2), 2);
  CHECK(cusp.multiplicity_sequence() == std::vector<int>{2});
  CHECK(cusp.delta() == 1);

  // tacnode: x1^2 x2^2 - x0^4 = (x1 x2 - x0^2)(x1 x2 + x0^2)
  Poly tac = mono(3, {0, 2, 2}) - mono(3, {4, 0, 0});
  ResolutionTree tt = resolve(tac, Point::coordinate_point(3, 2), 2);
  CHECK(tt.multiplicity_sequence() == std::vector<int>{2, 2});
  CHECK(tt.delta() == 2);
}

TEST_CASE("genus corpus") {
  CHECK(geometric_genus(smooth_conic()).genus == 0);
  CHECK(geometric_genus(nodal_cubic()).genus == 0);
  CHECK(geometric_genus(cuspidal_cubic()).genus == 0);
  CHECK(geometric_genus(smooth_cubic()).genus == 1);
  CHECK(geometric_genus(three_point_quartic()).genus == 0);
  CHECK(geometric_genus(smooth_quartic()).genus == 3);

  GenusReport r = geometric_genus(three_point_quartic());
  CHECK(r.arithmetic_genus == 3);
  CHECK(r.delta_total == 3);
  REQUIRE(r.singularities.size() == 3);
  for (const auto& s : r.singularities) {
    CHECK(s.multiplicity == 2);
    CHECK(s.delta == 1);
  }
}

TEST_CASE("genus report text is stable") {
  std::string text = geometric_genus(nodal_cubic()).to_string();
  CHECK(text ==
        "curve: -x0^3 - x0^2*x2 + x1^2*x2\n"
        "degree: 3\n"
        "arithmetic genus: 1\n"
        "singular points: 1\n"
        "  [0:0:1] multiplicity 2 delta 1 sequence (2)\n"
        "delta total: 1\n"
        "geometric genus: 0");
}

TEST_CASE("negative genus signals reducible input") {
  // conic plus a transverse line: two nodes on a cubic
  Poly s = var(3, 2) * smooth_conic();
  CHECK_THROWS_AS(geometric_genus(s), NegativeGenusError);
}

TEST_CASE("delta never exceeds the arithmetic genus on accepted input") {
  for (const Poly& c : {smooth_conic(), nodal_cubic(), cuspidal_cubic(), smooth_cubic(),
                        three_point_quartic(), smooth_quartic()}) {
    GenusReport r = geometric_genus(c);
    CHECK(r.delta_total <= r.arithmetic_genus);
    CHECK(r.genus >= 0);
  }
}

TEST_CASE("genus is invariant under linear changes of coordinates") {
  BirationalMap a = linear_map({{Rational(1), Rational(2), Rational(0)},
                                {Rational(0), Rational(1), Rational(-1)},
                                {Rational(1), Rational(0), Rational(1)}});
  for (const Poly& c : {nodal_cubic(), smooth_cubic(), three_point_quartic()}) {
    Poly moved = pushforward(a, c);
    CHECK(geometric_genus(moved).genus == geometric_genus(c).genus);
  }
}

TEST_CASE("genus is invariant under quadratic pushforward") {
  BirationalMap sigma = standard_quadratic(2);

  // nodal cubic through sigma and through a composite
  Poly image = pushforward(sigma, nodal_cubic());
  CHECK(geometric_genus(image).genus == 0);

  BirationalMap shear = linear_map({{Rational(1), Rational(1), Rational(0)},
                                    {Rational(0), Rational(1), Rational(0)},
                                    {Rational(0), Rational(0), Rational(1)}});
  BirationalMap comp = compose(shear, sigma);
  Poly image2 = pushforward(comp, nodal_cubic());
  CHECK(geometric_genus(image2).genus == 0);

  // a smooth cubic that avoids the fundamental points and meets every
  // contracted line in rational points, so the image resolves over Q
  Poly friendly = (var(3, 0) + var(3, 1) + var(3, 2)) *
                      (var(3, 0) + var(3, 1).scaled(Rational(2)) + var(3, 2).scaled(Rational(3))) *
                      (var(3, 0) + var(3, 1).scaled(Rational(3)) + var(3, 2).scaled(Rational(2))) +
                  mono(3, {1, 1, 1});
  REQUIRE(singular_points(friendly).empty());
  Poly image3 = pushforward(sigma, friendly);
  CHECK(geometric_genus(image3).genus == 1);
}

TEST_CASE("general sections of cones reproduce the base") {
  ConeWitness cone = ConeWitness::over(nodal_cubic());
  Poly section = general_section(cone, 7);
  CHECK(section == nodal_cubic());  // the base never involves x3
  CHECK(geometric_genus(section).genus == 0);

  Poly quadric = mono(4, {1, 0, 0, 1}) - mono(4, {0, 1, 1, 0});
  Poly qsec = general_section(quadric, 11);
  CHECK(qsec.degree() == 2);
  CHECK(geometric_genus(qsec).genus == 0);

  Poly doubled = mono(4, {0, 0, 0, 2}) * mono(4, {1, 0, 0, 0});
  CHECK_THROWS_AS(general_section(doubled, 1), Error);
}

TEST_CASE("decision procedure for cones in P^3") {
  ConeWitness nodal_cone = ConeWitness::over(nodal_cubic());
  ConeWitness plane = ConeWitness::over(var(3, 0) + var(3, 1) + var(3, 2));
  ConeWitness smooth_cone = ConeWitness::over(smooth_cubic());

  DecisionReport r1 = decide_cone_equivalence_p3(nodal_cone, plane, 7);
  CHECK(r1.equivalent);
  CHECK(r1.first.genus == 0);
  CHECK(r1.second.genus == 0);

  DecisionReport r2 = decide_cone_equivalence_p3(smooth_cone, plane, 7);
  CHECK_FALSE(r2.equivalent);
  CHECK(r2.first.genus == 1);

  // reflexive and symmetric
  CHECK(decide_cone_equivalence_p3(smooth_cone, smooth_cone, 3).equivalent);
  CHECK(decide_cone_equivalence_p3(plane, nodal_cone, 9).equivalent);
  CHECK_FALSE(decide_cone_equivalence_p3(plane, smooth_cone, 9).equivalent);

  // transitive on a genus-zero triple
  ConeWitness cusp_cone = ConeWitness::over(cuspidal_cubic());
  CHECK(decide_cone_equivalence_p3(nodal_cone, cusp_cone, 5).equivalent);
  CHECK(decide_cone_equivalence_p3(cusp_cone, plane, 5).equivalent);
  CHECK(decide_cone_equivalence_p3(nodal_cone, plane, 5).equivalent);
}
