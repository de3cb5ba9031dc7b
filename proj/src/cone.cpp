#include "cremona/cone.hpp"

#include <set>
#include <sstream>

namespace cremona {

ConeWitness ConeWitness::over(const Poly& base) {
  if (base.is_zero()) throw Error("cone over the zero polynomial");
  auto [homog, d] = base.homogeneous_degree();
  if (!homog) throw Error("cone base must be homogeneous");
  if (d < 1) throw Error("cone base must have positive degree");
  if (!squarefree_part_check(base)) throw Error("cone base must be squarefree");

  int n = base.nvars();
  Poly equation = base.extended(n + 1);
  Point vertex = Point::last_coordinate_point(n + 1);
  if (multiplicity_at(equation, vertex) != d)
    throw Error("cone construction lost the vertex property");  // cannot happen
  return ConeWitness(base, std::move(equation), std::move(vertex));
}

bool detect_vertex(const Poly& s, const Point& p) {
  if (s.is_zero()) throw Error("vertex detection on the zero polynomial");
  return multiplicity_at(s, p) == s.degree();
}

namespace {

// Forward cofactor candidates of degree h-1: the pinned choice, or pivot
// powers followed by short products of known exceptional factors.
std::vector<Poly> cofactor_candidates(const BirationalMap& psi, const LiftChoice& choice, int h) {
  int n = psi.forward().nvars();
  std::vector<Poly> out;
  std::set<std::string> seen;
  auto push = [&](const Poly& c) {
    if (c.is_zero()) return;
    auto [homog, d] = c.homogeneous_degree();
    if (!homog || d != h - 1) return;
    if (seen.insert(c.monic().to_string()).second) out.push_back(c);
  };

  if (choice.cofactor) {
    if (choice.cofactor->nvars() != n)
      throw Error("lift cofactor must live in the base ring");
    push(*choice.cofactor);
    if (out.empty()) throw Error("lift cofactor must be homogeneous of degree h-1");
    return out;
  }

  if (choice.pivot < 0 || choice.pivot >= n) throw Error("lift pivot out of range");
  push(Poly::variable(n, choice.pivot, Rational(1)).pow(h - 1));
  for (int k = 0; k < n; ++k)
    push(Poly::variable(n, k, Rational(1)).pow(h - 1));

  // bounded products of exceptional factors
  const auto& exc = psi.exceptional_fwd();
  std::vector<Poly> partial = {Poly::constant(n, Rational(1))};
  for (int round = 0; round < h - 1 && !exc.empty(); ++round) {
    std::vector<Poly> next;
    for (const auto& p : partial)
      for (const auto& q : exc) {
        if (p.degree() + q.degree() > h - 1) continue;
        next.push_back(p * q);
        if (next.size() > 64) break;
      }
    for (const auto& p : next) push(p);
    partial = std::move(next);
    if (partial.empty()) break;
  }
  return out;
}

Poly embed(const Poly& p, int nvars) { return p.extended(nvars); }

}  // namespace

BirationalMap lift_cone_map(const BirationalMap& psi, const LiftChoice& choice) {
  int n = psi.forward().nvars();  // base ring variables; the lift has n+1
  int h = psi.forward().degree();

  std::vector<Poly> candidates = cofactor_candidates(psi, choice, h);
  std::ostringstream diagnostics;

  for (const auto& c : candidates) {
    // A lift-shaped inverse needs d * c(g) = cofactor_bwd; d is forced.
    Poly c_along_inverse = c.substitute(psi.inverse().components());
    std::optional<Poly> d = try_div(psi.cofactor_bwd(), c_along_inverse);
    if (!d || d->is_zero()) {
      diagnostics << "  cofactor " << c.to_string() << ": no inverse cofactor divides\n";
      continue;
    }

    std::vector<Poly> fwd, inv;
    for (const auto& f : psi.forward().components()) fwd.push_back(embed(f, n + 1));
    fwd.push_back(Poly::variable(n + 1, n, Rational(1)) * embed(c, n + 1));
    for (const auto& g : psi.inverse().components()) inv.push_back(embed(g, n + 1));
    inv.push_back(Poly::variable(n + 1, n, Rational(1)) * embed(*d, n + 1));

    std::vector<Poly> exc_fwd, exc_bwd;
    for (const auto& q : psi.exceptional_fwd()) exc_fwd.push_back(embed(q, n + 1));
    for (const auto& q : psi.exceptional_bwd()) exc_bwd.push_back(embed(q, n + 1));

    BirationalMap lift = BirationalMap::verified(MapRep::normalize(fwd), MapRep::normalize(inv),
                                                 std::move(exc_fwd), std::move(exc_bwd));

    // Contracts of the construction, all checked, never assumed.
    if (!proportional(restrict_to_last_hyperplane(lift.forward()), psi.forward()))
      throw Error("lift restriction does not reproduce the base map");
    Point vertex = Point::last_coordinate_point(n + 1);
    for (int i = 0; i < n; ++i) {
      const Poly& comp = lift.forward().components()[static_cast<std::size_t>(i)];
      if (!comp.is_zero() && multiplicity_at(comp, vertex) != h)
        throw Error("lift component has unexpected vertex multiplicity");
    }
    if (multiplicity_at(lift.forward().components()[static_cast<std::size_t>(n)], vertex) != h - 1)
      throw Error("lift cofactor component has unexpected vertex multiplicity");
    return lift;
  }

  throw InverseCandidateError(
      "no lift inverse candidate verified; supply the base map as a composition of "
      "generators and lift the factors instead\n" +
      diagnostics.str());
}

BirationalMap cone_equivalence_witness(const Poly& c1, const Poly& c2, const BirationalMap& psi) {
  if (c1.nvars() != psi.forward().nvars() || c2.nvars() != psi.forward().nvars())
    throw RingMismatchError("base hypersurfaces must live in the map's space");
  Poly image = pushforward(psi, c1);
  if (!proportional(image, c2))
    throw WitnessMismatchError("map does not send the first base to the second: image is " +
                               image.to_string());

  ConeWitness s1 = ConeWitness::over(c1);
  ConeWitness s2 = ConeWitness::over(c2);
  BirationalMap lift = lift_cone_map(psi);

  Poly cone_image = pushforward(lift, s1.equation());
  if (!proportional(cone_image, s2.equation()))
    throw Error("lift failed to transport the cone onto the target cone");
  return lift;
}

QuadricConeDemo quadric_cone_to_plane() {
  Poly conic = Poly::variable(3, 0, Rational(1)) * Poly::variable(3, 1, Rational(1)) +
               Poly::variable(3, 1, Rational(1)) * Poly::variable(3, 2, Rational(1)) +
               Poly::variable(3, 0, Rational(1)) * Poly::variable(3, 2, Rational(1));
  Poly line = Poly::variable(3, 0, Rational(1)) + Poly::variable(3, 1, Rational(1)) +
              Poly::variable(3, 2, Rational(1));

  BirationalMap sigma = standard_quadratic(2);
  BirationalMap lift = cone_equivalence_witness(conic, line, sigma);
  ConeWitness cone = ConeWitness::over(conic);
  Poly plane = pushforward(lift, cone.equation());
  return QuadricConeDemo{std::move(cone), std::move(lift), std::move(plane)};
}

}  // namespace cremona
