#include "cremona/genus.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace cremona {

namespace {

// ---------------------------------------------------------------- univariate

// Coefficients of p as a univariate polynomial in `var`; every other
// variable must be absent.
std::vector<Rational> univariate_coeffs(const Poly& p, int var) {
  std::vector<Rational> c(static_cast<std::size_t>(p.degree_in(var) + 1), Rational(0));
  for (const auto& [m, k] : p.terms()) {
    if (m.degree() != m[var]) throw Error("polynomial is not univariate in the requested variable");
    c[static_cast<std::size_t>(m[var])] += k;
  }
  return c;
}

Poly from_univariate_coeffs(int nvars, int var, const std::vector<Rational>& c) {
  Poly r(nvars);
  for (std::size_t i = 0; i < c.size(); ++i) {
    Monomial m(nvars);
    m[var] = static_cast<int>(i);
    r.add_term(m, c[i]);
  }
  return r;
}

// All positive divisors, by trial division; a leftover cofactor beyond the
// trial bound is treated as prime, which is enough at desk scale.
std::vector<Integer> divisors_of(Integer n) {
  n = abs(n);
  if (n == 0) throw Error("divisors of zero requested");
  std::vector<std::pair<Integer, int>> factors;
  Integer d = 2;
  while (d * d <= n && d < 1000000) {
    if (n % d == 0) {
      int e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      factors.emplace_back(d, e);
    }
    d += (d == 2) ? 1 : 2;
  }
  if (n > 1) factors.emplace_back(n, 1);

  std::vector<Integer> divs = {Integer(1)};
  for (const auto& [prime, mult] : factors) {
    std::size_t count = divs.size();
    Integer pow(1);
    for (int e = 1; e <= mult; ++e) {
      pow *= prime;
      for (std::size_t i = 0; i < count; ++i) divs.push_back(divs[i] * pow);
    }
    if (divs.size() > 100000) throw Error("coefficient too composite for rational root search");
  }
  return divs;
}

Rational horner(const std::vector<Rational>& c, const Rational& x) {
  Rational acc(0);
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

// Divide by (x - r); the division is exact when r is a root.
std::vector<Rational> deflate(const std::vector<Rational>& c, const Rational& r) {
  std::vector<Rational> q(c.size() - 1, Rational(0));
  Rational carry(0);
  for (std::size_t i = c.size(); i-- > 1;) {
    carry = c[i] + carry * r;
    q[i - 1] = carry;
  }
  return q;
}

struct RootScan {
  std::vector<std::pair<Rational, int>> roots;  // value, multiplicity
  int residual_degree = 0;
  Poly residual;  // nonconstant iff non-rational roots remain
};

RootScan rational_roots_of(const Poly& p, int var) {
  if (p.is_zero()) throw Error("root scan of the zero polynomial");
  RootScan out;
  std::vector<Rational> c = univariate_coeffs(p, var);
  while (c.size() > 1 && sgn(c.back()) == 0) c.pop_back();

  // roots at zero
  std::size_t v = 0;
  while (v < c.size() && sgn(c[v]) == 0) ++v;
  if (v > 0) {
    out.roots.emplace_back(Rational(0), static_cast<int>(v));
    c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(v));
  }

  while (c.size() > 1) {
    // integer model for the candidate search
    Integer den_lcm(1);
    for (const auto& x : c) {
      Integer g;
      mpz_lcm(g.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den().get_mpz_t());
      den_lcm = g;
    }
    std::vector<Integer> ic;
    ic.reserve(c.size());
    for (const auto& x : c) ic.push_back(Integer(x * den_lcm));
    Integer content(0);
    for (const auto& x : ic) {
      Integer g;
      mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
      content = g;
    }
    for (auto& x : ic) x /= content;

    bool found = false;
    for (const Integer& num : divisors_of(ic.front())) {
      for (const Integer& den : divisors_of(ic.back())) {
        for (int sign = 1; sign >= -1 && !found; sign -= 2) {
          Rational r(num * sign, den);
          r.canonicalize();
          if (sgn(horner(c, r)) != 0) continue;
          int mult = 0;
          while (c.size() > 1 && sgn(horner(c, r)) == 0) {
            c = deflate(c, r);
            ++mult;
          }
          out.roots.emplace_back(r, mult);
          found = true;
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) break;
  }

  out.residual_degree = static_cast<int>(c.size()) - 1;
  out.residual = from_univariate_coeffs(p.nvars(), var, c);
  return out;
}

// ---------------------------------------------------------------- resultant

Poly bareiss_determinant(std::vector<std::vector<Poly>> m, int nvars) {
  int n = static_cast<int>(m.size());
  if (n == 0) return Poly::constant(nvars, Rational(1));
  Poly prev = Poly::constant(nvars, Rational(1));
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r)
        if (!m[r][k].is_zero()) {
          swap_row = r;
          break;
        }
      if (swap_row < 0) return Poly::zero(nvars);
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
    prev = m[k][k];
  }
  Poly det = m[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
  return sign < 0 ? -det : det;
}

// Coefficients of p in `var` as polynomials in the other variables
// (returned in the same ring, with `var` zeroed out).
std::vector<Poly> coefficients_in(const Poly& p, int var) {
  std::vector<Poly> c(static_cast<std::size_t>(p.degree_in(var) + 1), Poly(p.nvars()));
  for (const auto& [m, k] : p.terms()) {
    Monomial q = m;
    int e = q[var];
    q[var] = 0;
    c[static_cast<std::size_t>(e)].add_term(q, k);
  }
  return c;
}

Poly resultant_in(const Poly& f, const Poly& g, int var) {
  int df = f.degree_in(var), dg = g.degree_in(var);
  if (df < 1 || dg < 1) throw Error("resultant needs positive degrees in the variable");
  std::vector<Poly> fc = coefficients_in(f, var);
  std::vector<Poly> gc = coefficients_in(g, var);
  int n = df + dg;
  std::vector<std::vector<Poly>> m(static_cast<std::size_t>(n),
                                   std::vector<Poly>(static_cast<std::size_t>(n), Poly(f.nvars())));
  for (int i = 0; i < dg; ++i)
    for (int j = 0; j <= df; ++j) m[i][i + j] = fc[static_cast<std::size_t>(df - j)];
  for (int i = 0; i < df; ++i)
    for (int j = 0; j <= dg; ++j) m[dg + i][i + j] = gc[static_cast<std::size_t>(dg - j)];
  return bareiss_determinant(std::move(m), f.nvars());
}

// ------------------------------------------------------- singular point scan

void raise_non_rational(const Poly& residual, const char* where) {
  std::ostringstream os;
  os << "non-rational singular locus (" << where << "): unresolved factor " << residual.to_string()
     << " of degree " << residual.degree();
  throw NonRationalSingularityError(os.str(), residual.degree());
}

// Rational common zeros of a system of bivariate polynomials whose solution
// set is finite. Raises when roots escape the rationals.
std::vector<std::pair<Rational, Rational>> solve_affine_system(const std::vector<Poly>& system) {
  std::vector<Poly> S;
  for (const auto& s : system)
    if (!s.is_zero()) S.push_back(s);
  if (S.empty()) throw Error("singular locus is not finite");
  for (const auto& s : S)
    if (s.is_constant()) return {};

  std::vector<Poly> univ, tall;
  for (const auto& s : S)
    (s.degree_in(1) == 0 ? univ : tall).push_back(s);

  // x-eliminant: gcd of the univariate members and the nonzero pairwise
  // resultants; every true x-coordinate is a root of each ingredient.
  Poly eliminant(2);
  for (const auto& u : univ) eliminant = gcd(eliminant, u);
  for (std::size_t i = 0; i < tall.size(); ++i)
    for (std::size_t j = i + 1; j < tall.size(); ++j) {
      Poly r = resultant_in(tall[i], tall[j], 1);
      if (!r.is_zero()) eliminant = gcd(eliminant, r);
    }
  if (eliminant.is_zero())
    throw Error("elimination degenerated: the partials share nonconstant factors pairwise");
  if (eliminant.is_constant()) return {};

  RootScan xs = rational_roots_of(eliminant, 0);
  if (xs.residual_degree > 0) raise_non_rational(xs.residual, "eliminant");

  std::vector<std::pair<Rational, Rational>> points;
  for (const auto& [a, mult_ignored] : xs.roots) {
    Poly ax = Poly::constant(2, a);
    Poly ygcd(2);
    bool all_vanish = true;
    bool impossible = false;
    for (const auto& s : S) {
      Poly sy = s.plug(0, ax);
      if (sy.is_zero()) continue;
      all_vanish = false;
      if (sy.is_constant()) {
        impossible = true;
        break;
      }
      ygcd = gcd(ygcd, sy);
    }
    if (impossible) continue;
    if (all_vanish) throw Error("singular locus is not finite");
    if (ygcd.is_constant()) continue;
    RootScan ys = rational_roots_of(ygcd, 1);
    if (ys.residual_degree > 0) raise_non_rational(ys.residual, "fiber");
    for (const auto& [b, mb] : ys.roots) points.emplace_back(a, b);
  }
  return points;
}

}  // namespace

std::vector<std::pair<Point, int>> singular_points(const Poly& curve) {
  if (curve.nvars() != 3) throw Error("singular point scan expects a plane curve in three variables");
  if (curve.is_zero()) throw Error("singular point scan of the zero polynomial");
  if (!curve.is_homogeneous()) throw Error("singular point scan expects a homogeneous polynomial");
  if (curve.degree() < 1) throw Error("singular point scan expects positive degree");
  if (!squarefree_part_check(curve)) throw Error("singular point scan expects a squarefree curve");

  std::vector<Poly> partials;
  for (int i = 0; i < 3; ++i) partials.push_back(curve.derivative(i));

  std::vector<Point> found;

  // affine chart x2 = 1
  std::vector<Poly> chart;
  for (const auto& p : partials)
    if (!p.is_zero()) chart.push_back(p.dehomogenize(2));
  for (const auto& [a, b] : solve_affine_system(chart))
    found.push_back(Point({a, b, Rational(1)}));

  // the line at infinity: common zeros of the restricted binary forms
  Poly binary(2);
  for (const auto& p : partials) {
    if (p.is_zero()) continue;
    Poly b = p.plug(2, Poly(3)).dehomogenize(2);
    if (!b.is_zero()) binary = gcd(binary, b);
  }
  if (binary.is_zero()) throw Error("singular locus is not finite");
  if (!binary.is_constant()) {
    int k = binary.degree_in(1);
    for (const auto& [m, c] : binary.terms()) k = std::min(k, m[1]);
    if (k > 0) {
      found.push_back(Point({Rational(1), Rational(0), Rational(0)}));
      binary = exact_div(binary, Poly::variable(2, 1, Rational(1)).pow(k));
    }
    if (!binary.is_constant()) {
      Poly univ = binary.dehomogenize(1);
      RootScan rs = rational_roots_of(univ, 0);
      if (rs.residual_degree > 0) raise_non_rational(rs.residual, "line at infinity");
      for (const auto& [r, mult] : rs.roots)
        found.push_back(Point({r, Rational(1), Rational(0)}));
    }
  }

  std::vector<std::pair<Point, int>> out;
  for (const auto& p : found) {
    bool genuine = true;
    for (const auto& d : partials) {
      if (d.is_zero()) continue;
      if (sgn(d.evaluate(std::span<const Rational>(p.coords()))) != 0) genuine = false;
    }
    if (!genuine) continue;
    int m = multiplicity_at(curve, p);
    if (m < 2) throw Error("vanishing gradient at a smooth point");  // cannot happen
    out.emplace_back(p, m);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });
  return out;
}

// ------------------------------------------------------------- local models

AffineCurve affine_model(const Poly& curve, const Point& p) {
  if (curve.nvars() != 3 || p.nvars() != 3) throw Error("affine model expects a plane curve");
  int chart = 2;
  while (sgn(p[chart]) == 0) --chart;

  Poly local = curve.dehomogenize(chart);
  std::vector<Rational> affine;
  for (int i = 0; i < 3; ++i)
    if (i != chart) affine.push_back(p[i] / p[chart]);

  std::vector<Poly> shift = {
      Poly::variable(2, 0, Rational(1)) + Poly::constant(2, affine[0]),
      Poly::variable(2, 1, Rational(1)) + Poly::constant(2, affine[1]),
  };
  return AffineCurve{local.substitute(shift), chart, affine[0], affine[1]};
}

int origin_multiplicity(const Poly& local) {
  if (local.is_zero()) throw Error("multiplicity of the zero polynomial");
  int m = local.degree();
  for (const auto& [mon, c] : local.terms()) m = std::min(m, mon.degree());
  return m;
}

BlowupResult blowup_once(const AffineCurve& curve, int m) {
  if (m < 2) throw Error("blowup expects a point of multiplicity at least 2");
  if (origin_multiplicity(curve.poly) != m)
    throw Error("blowup multiplicity does not match the curve");

  const Poly& f = curve.poly;
  std::vector<Poly> sub1 = {Poly::variable(2, 0, Rational(1)),
                            Poly::variable(2, 0, Rational(1)) * Poly::variable(2, 1, Rational(1))};
  std::vector<Poly> sub2 = {Poly::variable(2, 0, Rational(1)) * Poly::variable(2, 1, Rational(1)),
                            Poly::variable(2, 1, Rational(1))};

  auto strict = [&](const Poly& total, int var) {
    auto q = try_div(total, Poly::variable(2, var, Rational(1)).pow(m));
    if (!q) throw Error("blowup division failed: multiplicity bookkeeping is wrong");
    return *q;
  };
  BlowupResult out;
  out.chart1 = strict(f.substitute(sub1), 0);
  out.chart2 = strict(f.substitute(sub2), 1);

  Poly on_exceptional = out.chart1.plug(0, Poly(2));
  if (on_exceptional.is_zero()) throw Error("strict transform contains the exceptional line");
  RootScan rs = rational_roots_of(on_exceptional, 1);
  if (rs.residual_degree > 0) raise_non_rational(rs.residual, "exceptional line");
  for (const auto& [r, mult] : rs.roots) out.chart1_meets.push_back(r);

  out.chart2_origin_meets = sgn(out.chart2.coefficient(Monomial(2))) == 0;
  return out;
}

namespace {

ResolutionNode resolve_local(const AffineCurve& curve, int m, int& budget) {
  budget -= m * (m - 1) / 2;
  if (budget < 0)
    throw Error("resolution exceeded its delta budget; the curve cannot be reduced");

  ResolutionNode node;
  node.point = {curve.shift_u, curve.shift_v};
  node.multiplicity = m;

  BlowupResult b = blowup_once(curve, m);
  for (const auto& r : b.chart1_meets) {
    Poly recentred =
        b.chart1.plug(1, Poly::variable(2, 1, Rational(1)) + Poly::constant(2, r));
    int next = origin_multiplicity(recentred);
    if (next < 2) continue;
    AffineCurve child{recentred, curve.chart, Rational(0), r};
    node.children.push_back(resolve_local(child, next, budget));
  }
  if (b.chart2_origin_meets) {
    int next = origin_multiplicity(b.chart2);
    if (next >= 2) {
      AffineCurve child{b.chart2, curve.chart, Rational(0), Rational(0)};
      ResolutionNode c = resolve_local(child, next, budget);
      c.second_chart = true;
      node.children.push_back(std::move(c));
    }
  }
  return node;
}

void collect_preorder(const ResolutionNode& n, std::vector<int>& out) {
  out.push_back(n.multiplicity);
  for (const auto& c : n.children) collect_preorder(c, out);
}

int delta_of(const ResolutionNode& n) {
  int d = n.multiplicity * (n.multiplicity - 1) / 2;
  for (const auto& c : n.children) d += delta_of(c);
  return d;
}

}  // namespace

int ResolutionTree::delta() const { return delta_of(root); }

std::vector<int> ResolutionTree::multiplicity_sequence() const {
  std::vector<int> out;
  collect_preorder(root, out);
  return out;
}

ResolutionTree resolve(const Poly& curve, const Point& p, int m) {
  AffineCurve local = affine_model(curve, p);
  if (origin_multiplicity(local.poly) != m)
    throw Error("resolve called with the wrong multiplicity");
  int d = curve.degree();
  int budget = (d - 1) * (d - 2) / 2;
  ResolutionTree tree;
  tree.root = resolve_local(local, m, budget);
  return tree;
}

// ------------------------------------------------------------------- genus

std::string GenusReport::to_string() const {
  std::ostringstream os;
  os << "curve: " << curve.to_string() << "\n";
  os << "degree: " << degree << "\n";
  os << "arithmetic genus: " << arithmetic_genus << "\n";
  os << "singular points: " << singularities.size() << "\n";
  for (const auto& s : singularities) {
    os << "  " << s.point.to_string() << " multiplicity " << s.multiplicity << " delta " << s.delta
       << " sequence (";
    std::vector<int> seq = s.tree.multiplicity_sequence();
    for (std::size_t i = 0; i < seq.size(); ++i) {
      if (i) os << ", ";
      os << seq[i];
    }
    os << ")\n";
  }
  os << "delta total: " << delta_total << "\n";
  os << "geometric genus: " << genus;
  return os.str();
}

GenusReport geometric_genus(const Poly& curve) {
  if (curve.nvars() != 3) throw Error("genus expects a plane curve in three variables");
  if (curve.is_zero()) throw Error("genus of the zero polynomial");
  if (!curve.is_homogeneous()) throw Error("genus expects a homogeneous polynomial");
  int d = curve.degree();
  if (d < 1) throw Error("genus expects positive degree");
  if (!squarefree_part_check(curve)) throw Error("genus expects a squarefree curve");

  GenusReport report;
  report.curve = curve;
  report.degree = d;
  report.arithmetic_genus = (d - 1) * (d - 2) / 2;

  for (const auto& [p, m] : singular_points(curve)) {
    SingularityReport s{p, m, resolve(curve, p, m), 0};
    s.delta = s.tree.delta();
    report.delta_total += s.delta;
    report.singularities.push_back(std::move(s));
  }
  report.genus = report.arithmetic_genus - report.delta_total;
  if (report.genus < 0)
    throw NegativeGenusError("geometric genus came out negative (" + std::to_string(report.genus) +
                             "): the curve is not irreducible");
  return report;
}

Poly general_section(const Poly& surface, std::uint64_t seed) {
  if (surface.nvars() != 4) throw Error("hyperplane section expects a surface in four variables");
  if (surface.is_zero()) throw Error("hyperplane section of the zero polynomial");
  if (!surface.is_homogeneous()) throw Error("hyperplane section expects a homogeneous polynomial");
  if (!squarefree_part_check(surface)) throw Error("hyperplane section expects a squarefree surface");

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pool(-5, 5);
  for (int attempt = 0; attempt < 20; ++attempt) {
    std::vector<Poly> sub = {Poly::variable(3, 0, Rational(1)), Poly::variable(3, 1, Rational(1)),
                             Poly::variable(3, 2, Rational(1)), Poly(3)};
    for (int i = 0; i < 3; ++i)
      sub[3] = sub[3] + Poly::variable(3, i, Rational(1)).scaled(Rational(pool(rng)));
    Poly section = surface.substitute(sub);
    if (section.is_zero() || section.degree() != surface.degree()) continue;
    if (!squarefree_part_check(section)) continue;
    return section;
  }
  throw RetriesExhaustedError("no squarefree hyperplane section found in 20 attempts");
}

Poly general_section(const ConeWitness& cone, std::uint64_t seed) {
  return general_section(cone.equation(), seed);
}

std::string DecisionReport::to_string() const {
  std::ostringstream os;
  os << "--- first cone section ---\n"
     << first.to_string() << "\n"
     << "--- second cone section ---\n"
     << second.to_string() << "\n";
  if (equivalent) {
    os << "verdict: Cremona equivalent (equal section genus " << first.genus << ")";
    if (first.genus == 0) os << "; both are rational cones, equivalent to a plane";
  } else {
    os << "verdict: not Cremona equivalent (section genus " << first.genus << " vs "
       << second.genus << ")";
  }
  return os.str();
}

DecisionReport decide_cone_equivalence_p3(const ConeWitness& s1, const ConeWitness& s2,
                                          std::uint64_t seed) {
  if (s1.ambient_dim() != 3 || s2.ambient_dim() != 3)
    throw Error("the decision procedure works with cones in P^3");
  DecisionReport out;
  out.first = geometric_genus(general_section(s1, seed));
  out.second = geometric_genus(general_section(s2, seed + 1));
  out.equivalent = out.first.genus == out.second.genus;
  return out;
}

}  // namespace cremona
