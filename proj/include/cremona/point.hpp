// Projective points and pointwise invariants of hypersurfaces.
#pragma once

#include <vector>

#include "cremona/poly.hpp"

namespace cremona {

// Point of P^n, stored as n+1 homogeneous coordinates, not all zero.
class Point {
 public:
  explicit Point(std::vector<Rational> coords);

  static Point coordinate_point(int nvars, int i);
  static Point last_coordinate_point(int nvars) { return coordinate_point(nvars, nvars - 1); }

  int nvars() const { return static_cast<int>(coords_.size()); }
  const std::vector<Rational>& coords() const { return coords_; }
  const Rational& operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }

  // Scale so the first nonzero coordinate is one.
  Point canonical() const;
  std::string to_string() const;

  // Projective equality: coordinate vectors proportional.
  friend bool operator==(const Point& a, const Point& b);
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
  // Deterministic order on canonical forms (for stable report output).
  friend bool operator<(const Point& a, const Point& b);

 private:
  std::vector<Rational> coords_;
};

// Invertible linear substitution tuple T with T(e_last) = p: substituting T
// into a polynomial moves the study of p to the last coordinate point. The
// basis completion picks unit vectors greedily, skipping the first nonzero
// coordinate of p.
std::vector<Poly> move_to_last_coordinate(const Point& p);

// Order of vanishing of a nonzero homogeneous s at p: minimal total degree
// of the local expansion. Zero iff p is not on V(s); equals deg s exactly at
// the vertex of a cone.
int multiplicity_at(const Poly& s, const Point& p);

// True iff s has no repeated factor: gcd(s, D s) is constant for some
// deterministic "generic" combination D of the partials.
bool squarefree_part_check(const Poly& s);

}  // namespace cremona
