#include "cremona/point.hpp"

#include <sstream>

namespace cremona {

Point::Point(std::vector<Rational> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw Error("point needs at least one coordinate");
  bool all_zero = true;
  for (const auto& c : coords_)
    if (sgn(c) != 0) all_zero = false;
  if (all_zero) throw Error("projective point cannot have all coordinates zero");
}

Point Point::coordinate_point(int nvars, int i) {
  std::vector<Rational> c(static_cast<std::size_t>(nvars), Rational(0));
  c[static_cast<std::size_t>(i)] = 1;
  return Point(std::move(c));
}

Point Point::canonical() const {
  std::size_t j = 0;
  while (sgn(coords_[j]) == 0) ++j;
  std::vector<Rational> c = coords_;
  Rational pivot = c[j];
  for (auto& x : c) x /= pivot;
  return Point(std::move(c));
}

std::string Point::to_string() const {
  Point c = canonical();
  std::ostringstream out;
  out << "[";
  for (int i = 0; i < c.nvars(); ++i) {
    if (i) out << ":";
    out << c[i].get_str();
  }
  out << "]";
  return out.str();
}

bool operator==(const Point& a, const Point& b) {
  if (a.nvars() != b.nvars()) return false;
  return a.canonical().coords_ == b.canonical().coords_;
}

bool operator<(const Point& a, const Point& b) {
  if (a.nvars() != b.nvars()) return a.nvars() < b.nvars();
  return a.canonical().coords_ < b.canonical().coords_;
}

std::vector<Poly> move_to_last_coordinate(const Point& p) {
  int n = p.nvars();
  int pivot = 0;
  while (sgn(p[pivot]) == 0) ++pivot;

  // Columns of the change matrix: unit vectors e_i (i != pivot) in order,
  // then p itself; determinant is +-p[pivot].
  std::vector<Poly> tuple;
  tuple.reserve(static_cast<std::size_t>(n));
  std::vector<int> unit_cols;
  for (int i = 0; i < n; ++i)
    if (i != pivot) unit_cols.push_back(i);

  for (int row = 0; row < n; ++row) {
    Poly t(n);
    for (int col = 0; col < n - 1; ++col)
      if (unit_cols[static_cast<std::size_t>(col)] == row)
        t = t + Poly::variable(n, col, Rational(1));
    if (sgn(p[row]) != 0) t = t + Poly::variable(n, n - 1, p[row]);
    tuple.push_back(std::move(t));
  }
  return tuple;
}

int multiplicity_at(const Poly& s, const Point& p) {
  if (s.is_zero()) throw Error("multiplicity of the zero polynomial");
  if (s.nvars() != p.nvars()) throw RingMismatchError("point does not live in the polynomial's space");
  auto [homog, deg] = s.homogeneous_degree();
  if (!homog) throw Error("multiplicity_at expects a homogeneous polynomial");

  Poly moved = s.substitute(move_to_last_coordinate(p));
  Poly local = moved.dehomogenize(moved.nvars() - 1);
  int m = local.degree();  // upper bound
  for (const auto& [mon, c] : local.terms()) m = std::min(m, mon.degree());
  return m;
}

bool squarefree_part_check(const Poly& s) {
  if (s.is_zero()) throw Error("squarefree check of the zero polynomial");
  if (s.is_constant()) return true;

  int n = s.nvars();
  std::vector<Poly> partials;
  for (int i = 0; i < n; ++i) {
    Poly d = s.derivative(i);
    if (!d.is_zero()) partials.push_back(std::move(d));
  }
  if (partials.empty()) return true;  // constant handled above; cannot happen in char 0

  // A repeated factor divides every combination of partials; for squarefree
  // input the combinations (1, k, k^2, ...) escape every bad hyperplane
  // after at most deg(s) * nvars trials.
  int trials = s.degree() * n + 2;
  for (int k = 0; k < trials; ++k) {
    Poly combo(n);
    Rational w(1);
    for (const auto& d : partials) {
      combo = combo + d.scaled(w);
      w *= k + 1;
    }
    if (combo.is_zero()) continue;
    if (gcd(s, combo).is_constant()) return true;
  }
  return false;
}

}  // namespace cremona
