// Rational self-maps of P^n as primitive tuples of homogeneous forms, and
// the verified forward/inverse pair that certifies birationality.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cremona/point.hpp"
#include "cremona/poly.hpp"

namespace cremona {

// An (n+1)-tuple of homogeneous polynomials of equal degree with constant
// gcd, representing a rational self-map of P^n.
class MapRep {
 public:
  // Strips the tuple content and records the common degree. Zero entries
  // are permitted as long as the tuple is not identically zero.
  static MapRep normalize(std::vector<Poly> tuple);
  static MapRep identity(int dim);

  int dim() const { return static_cast<int>(components_.size()) - 1; }
  int nvars() const { return static_cast<int>(components_.size()); }
  int degree() const { return degree_; }
  const std::vector<Poly>& components() const { return components_; }

  // Components of `outer` evaluated along this map (this first, then outer).
  std::vector<Poly> then(const MapRep& outer) const;

  std::string to_string() const;

  friend bool proportional(const MapRep& a, const MapRep& b);
  friend bool operator==(const MapRep& a, const MapRep& b) {
    return a.components_ == b.components_;
  }

 private:
  MapRep(std::vector<Poly> components, int degree)
      : components_(std::move(components)), degree_(degree) {}
  std::vector<Poly> components_;
  int degree_ = 0;
};

struct VerifyResult {
  bool ok = false;
  Poly cofactor;                // e with G(F(x)) = e(x) * x, when ok
  std::vector<Poly> residual;   // primitivized composition, when not ok
  std::string describe() const;
};

// Certificate check: compose G after F, succeed iff the composition is
// e * identity for a single polynomial e (returned as the cofactor).
VerifyResult verify_birational_pair(const MapRep& F, const MapRep& G);

// A verified pair of mutually inverse rational maps together with both
// composition cofactors and the known contracted-divisor equations.
class BirationalMap {
 public:
  // Verifies both directions (throws VerificationError otherwise). The
  // candidate lists seed the exceptional-divisor bookkeeping: every
  // candidate that divides the matching cofactor is kept, and coordinate
  // hyperplanes are always tried.
  static BirationalMap verified(MapRep forward, MapRep inverse,
                                std::vector<Poly> exceptional_fwd_candidates = {},
                                std::vector<Poly> exceptional_bwd_candidates = {});

  int dim() const { return forward_.dim(); }
  const MapRep& forward() const { return forward_; }
  const MapRep& inverse() const { return inverse_; }
  const Poly& cofactor_fwd() const { return cofactor_fwd_; }
  const Poly& cofactor_bwd() const { return cofactor_bwd_; }
  const std::vector<Poly>& exceptional_fwd() const { return exceptional_fwd_; }
  const std::vector<Poly>& exceptional_bwd() const { return exceptional_bwd_; }

  // Same map with the roles of forward and inverse swapped.
  BirationalMap inverted() const;

 private:
  BirationalMap(MapRep f, MapRep g) : forward_(std::move(f)), inverse_(std::move(g)) {}
  MapRep forward_;
  MapRep inverse_;
  Poly cofactor_fwd_;
  Poly cofactor_bwd_;
  std::vector<Poly> exceptional_fwd_;
  std::vector<Poly> exceptional_bwd_;
};

using Matrix = std::vector<std::vector<Rational>>;

// Projective change of coordinates from an invertible matrix; the inverse
// tuple comes from the adjugate, so integer input stays integer.
BirationalMap linear_map(const Matrix& m);

// The standard quadratic involution of P^n (n >= 2): y_i = prod_{j != i} x_j.
BirationalMap standard_quadratic(int n);

// Apply phi first, then psi. Tuples are re-primitivized and the pair is
// re-verified; exceptional lists are harvested from both factors.
BirationalMap compose(const BirationalMap& phi, const BirationalMap& psi);

// Equation of the closure of phi(V(s)): total transform along the inverse
// with the factors shared with the backward cofactor stripped, in canonical
// scalar normal form. Throws HypersurfaceContractedError if V(s) drops
// dimension.
Poly pushforward(const BirationalMap& phi, const Poly& s);

// Drop the last component and set the last variable to zero, renormalizing;
// the induced self-map of the hyperplane (x_n = 0).
MapRep restrict_to_last_hyperplane(const MapRep& m);

// Randomized screening over F_p: evaluates G(F(x)) at random points and
// tests proportionality to x. `false` guarantees verify_birational_pair
// fails; `true` can be a false positive. p must be at least 2^20.
bool numeric_precheck(const MapRep& F, const MapRep& G, int trials, std::uint64_t p,
                      std::uint64_t seed = 0x5eedULL);

}  // namespace cremona
