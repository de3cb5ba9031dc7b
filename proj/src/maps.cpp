#include "cremona/maps.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace cremona {

namespace {

// Keep every candidate that is a nonconstant exact divisor of the cofactor,
// in monic form, deduplicated; coordinate hyperplanes are always tried.
std::vector<Poly> harvest_exceptional(const Poly& cofactor, const std::vector<Poly>& candidates) {
  std::vector<Poly> out;
  if (cofactor.is_zero() || cofactor.is_constant()) return out;
  std::set<std::string> seen;
  auto consider = [&](const Poly& q) {
    if (q.is_zero() || q.is_constant()) return;
    Poly m = q.monic();
    if (!try_div(cofactor, m)) return;
    std::string key = m.to_string();
    if (seen.insert(key).second) out.push_back(std::move(m));
  };
  for (int i = 0; i < cofactor.nvars(); ++i)
    consider(Poly::variable(cofactor.nvars(), i, Rational(1)));
  for (const auto& q : candidates) consider(q);
  return out;
}

}  // namespace

MapRep MapRep::normalize(std::vector<Poly> tuple) {
  if (tuple.size() < 2) throw Error("a map tuple needs at least two components");
  int nvars = tuple.front().nvars();
  int degree = -1;
  bool any_nonzero = false;
  for (const auto& t : tuple) {
    if (t.nvars() != nvars) throw RingMismatchError("map components from different rings");
    if (t.is_zero()) continue;
    any_nonzero = true;
    auto [homog, d] = t.homogeneous_degree();
    if (!homog) throw Error("map components must be homogeneous");
    if (degree == -1) degree = d;
    if (d != degree) throw Error("components of unequal degree");
  }
  if (!any_nonzero) throw Error("map tuple is identically zero");

  Poly content = tuple_content(tuple);
  if (!content.is_constant()) {
    for (auto& t : tuple)
      if (!t.is_zero()) t = exact_div(t, content);
    degree -= content.degree();
  }
  return MapRep(std::move(tuple), degree);
}

MapRep MapRep::identity(int dim) {
  if (dim < 1) throw Error("identity map needs dim >= 1");
  std::vector<Poly> tuple;
  for (int i = 0; i <= dim; ++i) tuple.push_back(Poly::variable(dim + 1, i, Rational(1)));
  return MapRep(std::move(tuple), 1);
}

std::vector<Poly> MapRep::then(const MapRep& outer) const {
  if (outer.nvars() != nvars()) throw RingMismatchError("composition of maps of different spaces");
  std::vector<Poly> out;
  out.reserve(outer.components_.size());
  for (const auto& c : outer.components_) out.push_back(c.substitute(components_));
  return out;
}

std::string MapRep::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) os << " : ";
    os << components_[i].to_string();
  }
  os << "]";
  return os.str();
}

bool proportional(const MapRep& a, const MapRep& b) {
  if (a.nvars() != b.nvars()) return false;
  for (std::size_t i = 0; i < a.components_.size(); ++i)
    for (std::size_t j = i + 1; j < a.components_.size(); ++j)
      if (a.components_[i] * b.components_[j] != a.components_[j] * b.components_[i])
        return false;
  return true;
}

std::string VerifyResult::describe() const {
  std::ostringstream os;
  if (ok) {
    os << "verified, cofactor " << cofactor.to_string();
  } else {
    os << "verification failed, residual tuple [";
    for (std::size_t i = 0; i < residual.size(); ++i) {
      if (i) os << " : ";
      os << residual[i].to_string();
    }
    os << "]";
  }
  return os.str();
}

VerifyResult verify_birational_pair(const MapRep& F, const MapRep& G) {
  if (F.dim() != G.dim()) throw RingMismatchError("pair of maps of different spaces");
  std::vector<Poly> composed = F.then(G);
  int n = F.nvars();

  auto fail = [&]() {
    VerifyResult r;
    r.ok = false;
    Poly content = tuple_content(composed);
    r.residual.reserve(composed.size());
    for (const auto& t : composed)
      r.residual.push_back(t.is_zero() ? t : exact_div(t, content));
    return r;
  };

  for (const auto& t : composed)
    if (t.is_zero()) return fail();
  auto e = try_div(composed[0], Poly::variable(n, 0, Rational(1)));
  if (!e) return fail();
  for (int i = 1; i < n; ++i)
    if (composed[static_cast<std::size_t>(i)] != *e * Poly::variable(n, i, Rational(1)))
      return fail();

  VerifyResult r;
  r.ok = true;
  r.cofactor = *e;
  return r;
}

BirationalMap BirationalMap::verified(MapRep forward, MapRep inverse,
                                      std::vector<Poly> exceptional_fwd_candidates,
                                      std::vector<Poly> exceptional_bwd_candidates) {
  VerifyResult fwd = verify_birational_pair(forward, inverse);
  if (!fwd.ok) throw VerificationError("forward/inverse pair: " + fwd.describe());
  VerifyResult bwd = verify_birational_pair(inverse, forward);
  if (!bwd.ok) throw VerificationError("inverse/forward pair: " + bwd.describe());

  BirationalMap m(std::move(forward), std::move(inverse));
  m.cofactor_fwd_ = fwd.cofactor;
  m.cofactor_bwd_ = bwd.cofactor;
  m.exceptional_fwd_ = harvest_exceptional(m.cofactor_fwd_, exceptional_fwd_candidates);
  m.exceptional_bwd_ = harvest_exceptional(m.cofactor_bwd_, exceptional_bwd_candidates);
  return m;
}

BirationalMap BirationalMap::inverted() const {
  BirationalMap m(inverse_, forward_);
  m.cofactor_fwd_ = cofactor_bwd_;
  m.cofactor_bwd_ = cofactor_fwd_;
  m.exceptional_fwd_ = exceptional_bwd_;
  m.exceptional_bwd_ = exceptional_fwd_;
  return m;
}

BirationalMap linear_map(const Matrix& m) {
  int n = static_cast<int>(m.size());
  if (n < 2) throw Error("linear map needs a matrix of size >= 2");
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != n) throw Error("linear map matrix is not square");

  // Gauss-Jordan; adjugate = det * inverse keeps integer input integer.
  std::vector<std::vector<Rational>> a = m;
  std::vector<std::vector<Rational>> inv(static_cast<std::size_t>(n),
                                         std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)));
  for (int i = 0; i < n; ++i) inv[i][i] = 1;
  Rational det(1);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int row = col; row < n; ++row)
      if (sgn(a[row][col]) != 0) {
        pivot = row;
        break;
      }
    if (pivot < 0) throw SingularMatrixError("linear map matrix is singular");
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      std::swap(inv[pivot], inv[col]);
      det = -det;
    }
    Rational p = a[col][col];
    det *= p;
    for (int j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (int row = 0; row < n; ++row) {
      if (row == col || sgn(a[row][col]) == 0) continue;
      Rational f = a[row][col];
      for (int j = 0; j < n; ++j) {
        a[row][j] -= f * a[col][j];
        inv[row][j] -= f * inv[col][j];
      }
    }
  }

  auto rows_to_tuple = [n](const std::vector<std::vector<Rational>>& rows, const Rational& scale) {
    std::vector<Poly> tuple;
    for (int i = 0; i < n; ++i) {
      Poly t(n);
      for (int j = 0; j < n; ++j)
        if (sgn(rows[i][j]) != 0) t = t + Poly::variable(n, j, rows[i][j] * scale);
      tuple.push_back(std::move(t));
    }
    return tuple;
  };

  MapRep fwd = MapRep::normalize(rows_to_tuple(m, Rational(1)));
  MapRep inv_map = MapRep::normalize(rows_to_tuple(inv, det));
  return BirationalMap::verified(std::move(fwd), std::move(inv_map));
}

BirationalMap standard_quadratic(int n) {
  if (n < 2) throw Error("the standard quadratic involution needs n >= 2");
  std::vector<Poly> tuple;
  for (int i = 0; i <= n; ++i) {
    Poly t = Poly::constant(n + 1, Rational(1));
    for (int j = 0; j <= n; ++j)
      if (j != i) t = t * Poly::variable(n + 1, j, Rational(1));
    tuple.push_back(std::move(t));
  }
  std::vector<Poly> coords;
  for (int i = 0; i <= n; ++i) coords.push_back(Poly::variable(n + 1, i, Rational(1)));
  MapRep f = MapRep::normalize(tuple);
  return BirationalMap::verified(f, f, coords, coords);
}

BirationalMap compose(const BirationalMap& phi, const BirationalMap& psi) {
  if (phi.dim() != psi.dim()) throw RingMismatchError("composition of maps of different spaces");
  MapRep fwd = MapRep::normalize(phi.forward().then(psi.forward()));
  MapRep inv = MapRep::normalize(psi.inverse().then(phi.inverse()));

  // Contracted divisors of the composition: those of phi, plus the strict
  // transforms under phi^-1 of those of psi (and symmetrically backwards).
  std::vector<Poly> fwd_candidates = phi.exceptional_fwd();
  BirationalMap back = phi.inverted();
  for (const auto& q : psi.exceptional_fwd()) {
    try {
      fwd_candidates.push_back(pushforward(back, q));
    } catch (const HypersurfaceContractedError&) {
    }
  }
  std::vector<Poly> bwd_candidates = psi.exceptional_bwd();
  for (const auto& q : phi.exceptional_bwd()) {
    try {
      bwd_candidates.push_back(pushforward(psi, q));
    } catch (const HypersurfaceContractedError&) {
    }
  }

  return BirationalMap::verified(std::move(fwd), std::move(inv), std::move(fwd_candidates),
                                 std::move(bwd_candidates));
}

Poly pushforward(const BirationalMap& phi, const Poly& s) {
  if (s.nvars() != phi.forward().nvars())
    throw RingMismatchError("hypersurface does not live in the map's space");
  if (s.is_zero()) throw Error("pushforward of the zero polynomial");
  if (!s.is_homogeneous()) throw Error("pushforward expects a homogeneous polynomial");
  if (!squarefree_part_check(s)) throw Error("pushforward expects a squarefree polynomial");

  Poly t = s.substitute(phi.inverse().components());
  if (t.is_zero()) throw Error("total transform vanished; inverse tuple is not dominant");
  const Poly& cof = phi.cofactor_bwd();
  if (!cof.is_constant()) {
    for (;;) {
      Poly g = gcd(t, cof);
      if (g.is_constant()) break;
      t = exact_div(t, g);
    }
  }
  t = t.monic();
  if (t.is_constant()) throw HypersurfaceContractedError("hypersurface is contracted by the map");
  return t;
}

MapRep restrict_to_last_hyperplane(const MapRep& m) {
  int n = m.dim();
  if (n < 2) throw Error("restriction needs a map of P^n with n >= 2");
  std::vector<Poly> tuple;
  std::vector<Poly> hyperplane;  // (x0, ..., x_{n-1}, 0) in the smaller ring
  for (int i = 0; i < n; ++i) hyperplane.push_back(Poly::variable(n, i, Rational(1)));
  hyperplane.push_back(Poly::zero(n));
  for (int i = 0; i < n; ++i)
    tuple.push_back(m.components()[static_cast<std::size_t>(i)].substitute(hyperplane));
  bool all_zero = true;
  for (const auto& t : tuple)
    if (!t.is_zero()) all_zero = false;
  if (all_zero) throw Error("restriction degenerates to the zero tuple");
  return MapRep::normalize(std::move(tuple));
}

namespace {

PolyFp reduce_mod_p(const Poly& s, std::uint64_t p) {
  PolyFp r(s.nvars());
  for (const auto& [m, c] : s.terms()) {
    std::uint64_t num = mpz_fdiv_ui(c.get_num().get_mpz_t(), static_cast<unsigned long>(p));
    std::uint64_t den = mpz_fdiv_ui(c.get_den().get_mpz_t(), static_cast<unsigned long>(p));
    if (den == 0) throw Error("precheck prime divides a coefficient denominator");
    Fp coeff = Fp(static_cast<long long>(num), p) / Fp(static_cast<long long>(den), p);
    r.add_term(m, coeff);
  }
  return r;
}

}  // namespace

bool numeric_precheck(const MapRep& F, const MapRep& G, int trials, std::uint64_t p,
                      std::uint64_t seed) {
  if (F.dim() != G.dim()) throw RingMismatchError("pair of maps of different spaces");
  if (p < (1ULL << 20)) throw Error("precheck prime must be at least 2^20");
  int n = F.nvars();
  std::vector<PolyFp> f, g;
  for (const auto& c : F.components()) f.push_back(reduce_mod_p(c, p));
  for (const auto& c : G.components()) g.push_back(reduce_mod_p(c, p));

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
  auto eval_tuple = [&](const std::vector<PolyFp>& tuple, const std::vector<Fp>& x) {
    std::vector<Fp> y;
    y.reserve(tuple.size());
    for (const auto& t : tuple) y.push_back(t.evaluate(std::span<const Fp>(x)));
    return y;
  };

  for (int trial = 0; trial < trials; ++trial) {
    bool settled = false;
    for (int attempt = 0; attempt < 50 && !settled; ++attempt) {
      std::vector<Fp> x;
      bool nonzero = false;
      for (int i = 0; i < n; ++i) {
        x.emplace_back(static_cast<long long>(dist(rng)), p);
        if (!x.back().is_zero()) nonzero = true;
      }
      if (!nonzero) continue;
      std::vector<Fp> y = eval_tuple(f, x);
      if (std::all_of(y.begin(), y.end(), [](const Fp& v) { return v.is_zero(); })) continue;
      std::vector<Fp> z = eval_tuple(g, y);
      if (std::all_of(z.begin(), z.end(), [](const Fp& v) { return v.is_zero(); })) continue;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (z[i] * x[j] != z[j] * x[i]) return false;
      settled = true;  // proportional at this point
    }
    // a trial that keeps hitting the forbidden locus is inconclusive
  }
  return true;
}

}  // namespace cremona
