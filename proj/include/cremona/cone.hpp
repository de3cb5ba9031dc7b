// Cones over hypersurfaces and lifts of Cremona maps between their bases.
//
// A cone of degree d is a hypersurface with a point of multiplicity d (the
// vertex). A Cremona map of the base hyperplane lifts to a Cremona map of
// the ambient space fixing the vertex; the lift carries an explicit verified
// inverse, so equivalences between cones are certified, never asserted.
#pragma once

#include <optional>
#include <string>

#include "cremona/maps.hpp"

namespace cremona {

// Cofactor choice for a lift: the last forward component is x_n times a
// degree-(h-1) form in the base variables, by default pivot^(h-1).
struct LiftChoice {
  int pivot = 0;
  std::optional<Poly> cofactor;  // overrides pivot when set; pins the candidate
};

// A vertex and a base hypersurface, with the defining property
// multiplicity(equation, vertex) == degree checked at construction.
class ConeWitness {
 public:
  // Cone over a squarefree hypersurface C of P^{n-1}, in canonical position:
  // the equation is C viewed in one more variable, the vertex [0:...:0:1].
  static ConeWitness over(const Poly& base);

  int ambient_dim() const { return base_.nvars(); }  // cone lives in P^n, n = #base vars
  const Poly& base() const { return base_; }
  const Poly& equation() const { return equation_; }
  const Point& vertex() const { return vertex_; }
  int degree() const { return equation_.degree(); }

 private:
  ConeWitness(Poly base, Poly equation, Point vertex)
      : base_(std::move(base)), equation_(std::move(equation)), vertex_(std::move(vertex)) {}
  Poly base_;
  Poly equation_;
  Point vertex_;
};

// True iff s has multiplicity deg(s) at p, i.e. p is a vertex making V(s) a cone.
bool detect_vertex(const Poly& s, const Point& p);

// Lift a verified self-map of P^{n-1} to one of P^n fixing [0:...:0:1]:
// forward (f_0, ..., f_{n-1}, x_n * c) with c the chosen cofactor. The
// inverse cofactor is forced by exact division against the backward
// composition cofactor; when the choice does not pin the cofactor, other
// pivots and products of known exceptional factors are tried in order.
// Throws InverseCandidateError when no candidate verifies.
BirationalMap lift_cone_map(const BirationalMap& psi, const LiftChoice& choice = {});

// Certified equivalence of cones from a base-level witness: requires
// pushforward(psi, c1) == c2 up to scalar (else WitnessMismatchError) and
// returns a lift whose pushforward provably maps the cone over c1 to the
// cone over c2 (re-checked).
BirationalMap cone_equivalence_witness(const Poly& c1, const Poly& c2, const BirationalMap& psi);

// Packaged demonstration: the quadric cone over x0*x1 + x1*x2 + x0*x2 in
// P^3, a lift of the standard involution, and the image plane x0 + x1 + x2.
struct QuadricConeDemo {
  ConeWitness cone;
  BirationalMap map;
  Poly plane;
};
QuadricConeDemo quadric_cone_to_plane();

}  // namespace cremona
