#include <doctest.h>

#include <random>

#include "cremona/maps.hpp"
#include "support/builders.hpp"

using namespace cremona;
using testsupport::mono;
using testsupport::random_form;
using testsupport::var;

namespace {

Matrix shear() { return {{Rational(1), Rational(1), Rational(0)},
                         {Rational(0), Rational(1), Rational(0)},
                         {Rational(0), Rational(0), Rational(1)}}; }

Poly product_of_vars(int nvars) {
  Poly t = Poly::constant(nvars, Rational(1));
  for (int i = 0; i < nvars; ++i) t = t * var(nvars, i);
  return t;
}

BirationalMap random_generator(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coin(0, 2);
  std::uniform_int_distribution<int> entry(-3, 3);
  if (coin(rng) == 0) return standard_quadratic(2);
  for (;;) {
    Matrix m(3, std::vector<Rational>(3));
    for (auto& row : m)
      for (auto& x : row) x = entry(rng);
    try {
      return linear_map(m);
    } catch (const SingularMatrixError&) {
    }
  }
}

BirationalMap random_composite(std::mt19937_64& rng, int length) {
  BirationalMap m = random_generator(rng);
  for (int i = 1; i < length; ++i) m = compose(m, random_generator(rng));
  return m;
}

}  // namespace

TEST_CASE("normalize strips content and checks grading") {
  std::vector<Poly> tuple = {mono(3, {2, 1, 1}), mono(3, {1, 2, 1}), mono(3, {1, 1, 2})};
  MapRep m = MapRep::normalize(tuple);
  CHECK(m.degree() == 1);
  CHECK(m.components()[0] == var(3, 0));

  MapRep sigma = MapRep::normalize({mono(3, {0, 1, 1}), mono(3, {1, 0, 1}), mono(3, {1, 1, 0})});
  CHECK(sigma.degree() == 2);

  // zero entry is fine as long as the tuple is not identically zero
  MapRep degen = MapRep::normalize({mono(3, {2, 0, 0}), mono(3, {1, 1, 0}), Poly(3)});
  CHECK(degen.degree() == 1);
  CHECK(degen.components()[2].is_zero());

  CHECK_THROWS_AS(MapRep::normalize({var(3, 0) + Poly::constant(3, Rational(1)), var(3, 1), var(3, 2)}),
                  Error);
  CHECK_THROWS_AS(MapRep::normalize({var(3, 0) * var(3, 0), var(3, 1), var(3, 2)}), Error);
  CHECK_THROWS_AS(MapRep::normalize({Poly(3), Poly(3), Poly(3)}), Error);
}

TEST_CASE("verification of the standard involution") {
  BirationalMap sigma = standard_quadratic(2);
  VerifyResult r = verify_birational_pair(sigma.forward(), sigma.inverse());
  CHECK(r.ok);
  CHECK(r.cofactor == product_of_vars(3));
  CHECK(sigma.cofactor_fwd() == product_of_vars(3));

  VerifyResult id = verify_birational_pair(MapRep::identity(2), MapRep::identity(2));
  CHECK(id.ok);
  CHECK(id.cofactor == Poly::constant(3, Rational(1)));

  VerifyResult bad = verify_birational_pair(sigma.forward(), MapRep::identity(2));
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.residual.size() == 3);
  CHECK(bad.residual[0] == mono(3, {0, 1, 1}));
  CHECK(bad.residual[1] == mono(3, {1, 0, 1}));
  CHECK(bad.residual[2] == mono(3, {1, 1, 0}));
}

TEST_CASE("standard quadratic in P^3") {
  BirationalMap s3 = standard_quadratic(3);
  Poly q = product_of_vars(4);
  CHECK(s3.cofactor_fwd() == q * q);
  CHECK(s3.exceptional_fwd().size() == 4);
}

TEST_CASE("exceptional bookkeeping of the involution") {
  BirationalMap sigma = standard_quadratic(2);
  REQUIRE(sigma.exceptional_fwd().size() == 3);
  for (int i = 0; i < 3; ++i) CHECK(sigma.exceptional_fwd()[static_cast<std::size_t>(i)] == var(3, i));
  for (const auto& q : sigma.exceptional_fwd()) CHECK(try_div(sigma.cofactor_fwd(), q).has_value());
}

TEST_CASE("composition") {
  BirationalMap sigma = standard_quadratic(2);
  BirationalMap twice = compose(sigma, sigma);
  CHECK(proportional(twice.forward(), MapRep::identity(2)));
  CHECK(twice.cofactor_fwd().is_constant());

  BirationalMap id = BirationalMap::verified(MapRep::identity(2), MapRep::identity(2));
  BirationalMap same = compose(id, sigma);
  CHECK(proportional(same.forward(), sigma.forward()));

  BirationalMap a = linear_map(shear());
  BirationalMap mixed = compose(a, sigma);
  CHECK(mixed.forward().degree() == 2);
  CHECK(mixed.cofactor_fwd().degree() == 3);
}

TEST_CASE("composition is associative up to projective equality") {
  std::mt19937_64 rng(314159);
  for (int i = 0; i < 8; ++i) {
    BirationalMap f = random_generator(rng);
    BirationalMap g = random_generator(rng);
    BirationalMap h = random_generator(rng);
    BirationalMap left = compose(compose(f, g), h);
    BirationalMap right = compose(f, compose(g, h));
    CHECK(proportional(left.forward(), right.forward()));
  }
}

TEST_CASE("linear maps") {
  Matrix id3 = {{Rational(1), Rational(0), Rational(0)},
                {Rational(0), Rational(1), Rational(0)},
                {Rational(0), Rational(0), Rational(1)}};
  BirationalMap ident = linear_map(id3);
  CHECK(proportional(ident.forward(), MapRep::identity(2)));

  Matrix swap01 = {{Rational(0), Rational(1), Rational(0)},
                   {Rational(1), Rational(0), Rational(0)},
                   {Rational(0), Rational(0), Rational(1)}};
  BirationalMap sw = linear_map(swap01);
  CHECK(proportional(sw.forward(), sw.inverse()));

  BirationalMap sh = linear_map(shear());
  CHECK(sh.forward().components()[0] == var(3, 0) + var(3, 1));
  CHECK(sh.inverse().components()[0] == var(3, 0) - var(3, 1));
  CHECK(sh.inverse().components()[1] == var(3, 1));

  Matrix singular = {{Rational(1), Rational(1), Rational(0)},
                     {Rational(2), Rational(2), Rational(0)},
                     {Rational(0), Rational(0), Rational(1)}};
  CHECK_THROWS_AS(linear_map(singular), SingularMatrixError);
}

TEST_CASE("pushforward of plane curves under the involution") {
  BirationalMap sigma = standard_quadratic(2);

  Poly conic = var(3, 0) * var(3, 1) + var(3, 1) * var(3, 2) + var(3, 0) * var(3, 2);
  Poly line = var(3, 0) + var(3, 1) + var(3, 2);
  CHECK(pushforward(sigma, conic) == line);

  Poly conic2 = var(3, 0) * var(3, 1) - var(3, 2) * var(3, 2);
  CHECK(proportional(pushforward(sigma, conic2), conic2));

  BirationalMap id = BirationalMap::verified(MapRep::identity(2), MapRep::identity(2));
  CHECK(proportional(pushforward(id, conic), conic));

  // coordinate lines are contracted by the involution
  CHECK_THROWS_AS(pushforward(sigma, var(3, 0)), HypersurfaceContractedError);
}

TEST_CASE("pushforward functoriality, round-trip and degree bound") {
  std::mt19937_64 rng(271828);
  int done = 0;
  for (int iter = 0; iter < 80 && done < 25; ++iter) {
    BirationalMap f = random_composite(rng, 2);
    BirationalMap g = random_composite(rng, 1);
    BirationalMap fg = compose(f, g);
    std::uniform_int_distribution<int> degd(1, 3);
    Poly s = random_form(rng, 3, degd(rng), 4);
    if (s.is_zero() || !squarefree_part_check(s)) continue;
    // skip draws with a component inside an exceptional locus: those
    // components legitimately disappear from the pushforward
    if (!gcd(s, f.cofactor_fwd()).is_constant()) continue;
    if (!gcd(s, fg.cofactor_fwd()).is_constant()) continue;
    try {
      Poly there = pushforward(f, s);
      if (!gcd(there, g.cofactor_fwd()).is_constant()) continue;
      if (!gcd(there, f.cofactor_bwd()).is_constant()) continue;

      Poly via_pair = pushforward(g, there);
      Poly via_comp = pushforward(fg, s);
      CHECK(proportional(via_pair, via_comp));

      Poly back = pushforward(f.inverted(), there);
      CHECK(proportional(back, s));
      CHECK(there.degree() <= f.inverse().degree() * s.degree());
      ++done;
    } catch (const HypersurfaceContractedError&) {
    }
  }
  CHECK(done >= 20);
}

TEST_CASE("restriction to the last hyperplane") {
  BirationalMap sigma = standard_quadratic(2);

  // lift-shaped tuple: involution components in 4 variables plus x3*x0
  auto view4 = [](const Poly& p) {
    std::vector<Poly> emb = {var(4, 0), var(4, 1), var(4, 2)};
    return p.substitute(emb);
  };
  std::vector<Poly> lifted;
  for (const auto& c : sigma.forward().components()) lifted.push_back(view4(c));
  lifted.push_back(var(4, 3) * var(4, 0));
  MapRep lift = MapRep::normalize(lifted);
  MapRep back = restrict_to_last_hyperplane(lift);
  CHECK(proportional(back, sigma.forward()));

  CHECK(proportional(restrict_to_last_hyperplane(MapRep::identity(3)), MapRep::identity(2)));

  std::vector<Poly> mixed = {mono(4, {0, 1, 1, 0}), mono(4, {1, 0, 1, 0}), mono(4, {1, 1, 0, 0}),
                             mono(4, {1, 0, 0, 1})};
  MapRep r = restrict_to_last_hyperplane(MapRep::normalize(mixed));
  CHECK(proportional(r, sigma.forward()));
}

TEST_CASE("numeric precheck") {
  BirationalMap sigma = standard_quadratic(2);
  const std::uint64_t p = 1048583;
  CHECK(numeric_precheck(sigma.forward(), sigma.inverse(), 100, p));
  CHECK_FALSE(numeric_precheck(sigma.forward(), MapRep::identity(2), 100, p));
  CHECK(numeric_precheck(MapRep::identity(2), MapRep::identity(2), 1, p));
  CHECK_THROWS_AS(numeric_precheck(sigma.forward(), sigma.inverse(), 1, 65537), Error);
}

TEST_CASE("precheck never contradicts symbolic verification") {
  std::mt19937_64 rng(161803);
  const std::uint64_t p = 1048583;
  for (int i = 0; i < 10; ++i) {
    BirationalMap m = random_composite(rng, 2);
    CHECK(numeric_precheck(m.forward(), m.inverse(), 20, p));
  }
}
