// Sparse multivariate polynomials over an exact field.
//
// Terms are kept in graded reverse-lexicographic order (fixed globally), so
// leading terms, canonical scalar normal forms and printing are
// deterministic. The coefficient field is a template parameter; Rational is
// the domain of record, F_p instantiations exist for randomized screening.
#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "cremona/errors.hpp"
#include "cremona/rational.hpp"

namespace cremona {

// Exponent vector; length is the variable count of the ambient ring.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int nvars) : e_(static_cast<std::size_t>(nvars), 0) {}
  explicit Monomial(std::vector<int> exps) : e_(std::move(exps)) {}

  int nvars() const { return static_cast<int>(e_.size()); }
  int operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }
  int& operator[](int i) { return e_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& exponents() const { return e_; }

  int degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }
  bool is_constant() const { return degree() == 0; }

  Monomial operator*(const Monomial& o) const {
    Monomial r = *this;
    for (int i = 0; i < nvars(); ++i) r.e_[static_cast<std::size_t>(i)] += o[i];
    return r;
  }
  bool divides(const Monomial& o) const {
    for (int i = 0; i < nvars(); ++i)
      if ((*this)[i] > o[i]) return false;
    return true;
  }
  Monomial quotient(const Monomial& o) const {
    Monomial r = *this;
    for (int i = 0; i < nvars(); ++i) r.e_[static_cast<std::size_t>(i)] -= o[i];
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

 private:
  std::vector<int> e_;
};

// a > b in grevlex iff deg a > deg b, or degrees agree and the last
// nonzero entry of a-b is negative.
inline bool grevlex_greater(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  for (int i = a.nvars() - 1; i >= 0; --i) {
    int d = a[i] - b[i];
    if (d != 0) return d < 0;
  }
  return false;
}

struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_greater(a, b); }
};

template <class K>
class PolyT {
 public:
  using TermMap = std::map<Monomial, K, GrevlexGreater>;

  PolyT() = default;
  explicit PolyT(int nvars) : nvars_(nvars) {}

  static PolyT zero(int nvars) { return PolyT(nvars); }
  static PolyT constant(int nvars, K c) {
    PolyT r(nvars);
    if (!FieldOps<K>::is_zero(c)) r.terms_.emplace(Monomial(nvars), std::move(c));
    return r;
  }
  static PolyT variable(int nvars, int i, K scale) {
    if (i < 0 || i >= nvars) throw Error("variable index out of range");
    PolyT r(nvars);
    if (!FieldOps<K>::is_zero(scale)) {
      Monomial m(nvars);
      m[i] = 1;
      r.terms_.emplace(std::move(m), std::move(scale));
    }
    return r;
  }
  static PolyT term(int nvars, Monomial m, K c) {
    if (m.nvars() != nvars) throw RingMismatchError("monomial does not match ring");
    PolyT r(nvars);
    if (!FieldOps<K>::is_zero(c)) r.terms_.emplace(std::move(m), std::move(c));
    return r;
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
  }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  // Total degree; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }
  int degree_in(int var) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
    return d;
  }

  // Leading term with respect to the global grevlex order.
  const Monomial& leading_monomial() const {
    if (terms_.empty()) throw Error("leading term of zero polynomial");
    return terms_.begin()->first;
  }
  const K& leading_coefficient() const {
    if (terms_.empty()) throw Error("leading term of zero polynomial");
    return terms_.begin()->second;
  }

  K coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    if (it == terms_.end()) return FieldOps<K>::zero(sample());
    return it->second;
  }

  void add_term(const Monomial& m, const K& c) {
    if (m.nvars() != nvars_) throw RingMismatchError("monomial does not match ring");
    if (FieldOps<K>::is_zero(c)) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second = it->second + c;
      if (FieldOps<K>::is_zero(it->second)) terms_.erase(it);
    }
  }

  friend PolyT operator+(const PolyT& a, const PolyT& b) {
    a.check_ring(b);
    PolyT r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
  }
  friend PolyT operator-(const PolyT& a, const PolyT& b) { return a + (-b); }
  PolyT operator-() const {
    PolyT r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }
  friend PolyT operator*(const PolyT& a, const PolyT& b) {
    a.check_ring(b);
    PolyT r(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }
  PolyT scaled(const K& c) const {
    PolyT r(nvars_);
    if (FieldOps<K>::is_zero(c)) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
  }

  friend bool operator==(const PolyT& a, const PolyT& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const PolyT& a, const PolyT& b) { return !(a == b); }

  PolyT pow(long long k) const {
    if (k < 0) throw Error("negative exponent");
    if (k == 0) return constant(nvars_, FieldOps<K>::one(sample()));
    PolyT base = *this;
    PolyT r = constant(nvars_, FieldOps<K>::one(sample()));
    while (k > 0) {
      if (k & 1) r = r * base;
      base = (k >>= 1) ? base * base : base;
    }
    return r;
  }

  // Divide by the canonical (grevlex) leading coefficient. The scalar
  // normal form used by every "equal up to scalar" contract.
  PolyT monic() const {
    if (terms_.empty()) return *this;
    const K& lc = leading_coefficient();
    PolyT r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c / lc);
    return r;
  }

  // Equality of nonzero polynomials up to a nonzero scalar; zero is
  // proportional only to zero.
  friend bool proportional(const PolyT& a, const PolyT& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return a.monic() == b.monic();
  }

  std::pair<bool, int> homogeneous_degree() const {
    if (terms_.empty()) return {true, -1};
    int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
      if (m.degree() != d) return {false, -1};
    return {true, d};
  }
  bool is_homogeneous() const { return homogeneous_degree().first; }

  PolyT derivative(int var) const {
    PolyT r(nvars_);
    for (const auto& [m, c] : terms_) {
      int e = m[var];
      if (e == 0) continue;
      Monomial q = m;
      q[var] = e - 1;
      r.add_term(q, c * k_from_int(e));
    }
    return r;
  }

  // Formal substitution: each variable of this ring is replaced by the
  // corresponding entry of `tuple`, all living in a common target ring.
  PolyT substitute(std::span<const PolyT> tuple) const {
    if (static_cast<int>(tuple.size()) != nvars_)
      throw RingMismatchError("substitution tuple length does not match ring");
    if (tuple.empty()) throw RingMismatchError("substitution into empty tuple");
    int target = tuple[0].nvars();
    for (const auto& t : tuple)
      if (t.nvars() != target) throw RingMismatchError("substitution tuple entries in mixed rings");

    // power cache per variable
    std::vector<std::vector<PolyT>> pows(static_cast<std::size_t>(nvars_));
    auto power = [&](int var, int e) -> const PolyT& {
      auto& cache = pows[static_cast<std::size_t>(var)];
      if (cache.empty()) cache.push_back(tuple[static_cast<std::size_t>(var)].pow(0));
      while (static_cast<int>(cache.size()) <= e)
        cache.push_back(cache.back() * tuple[static_cast<std::size_t>(var)]);
      return cache[static_cast<std::size_t>(e)];
    };

    PolyT r(target);
    for (const auto& [m, c] : terms_) {
      PolyT t = PolyT::constant(target, c);
      for (int i = 0; i < nvars_; ++i)
        if (m[i] > 0) t = t * power(i, m[i]);
      r = r + t;
    }
    return r;
  }
  PolyT substitute(const std::vector<PolyT>& tuple) const {
    return substitute(std::span<const PolyT>(tuple));
  }

  K evaluate(std::span<const K> point) const {
    if (static_cast<int>(point.size()) != nvars_)
      throw RingMismatchError("evaluation point length does not match ring");
    const K* s = sample() ? sample() : (point.empty() ? nullptr : &point[0]);
    K acc = FieldOps<K>::zero(s);
    for (const auto& [m, c] : terms_) {
      K t = c;
      for (int i = 0; i < nvars_; ++i)
        for (int e = 0; e < m[i]; ++e) t = t * point[static_cast<std::size_t>(i)];
      acc = acc + t;
    }
    return acc;
  }

  // Reinterpret in a ring with extra trailing variables (which do not occur).
  PolyT extended(int new_nvars) const {
    if (new_nvars < nvars_) throw RingMismatchError("extended ring must not shrink");
    PolyT r(new_nvars);
    for (const auto& [m, c] : terms_) {
      Monomial q(new_nvars);
      for (int i = 0; i < nvars_; ++i) q[i] = m[i];
      r.terms_.emplace(std::move(q), c);
    }
    return r;
  }

  // Set variable `var` to one, dropping it from the ring.
  PolyT dehomogenize(int var) const {
    if (var < 0 || var >= nvars_) throw Error("variable index out of range");
    PolyT r(nvars_ - 1);
    for (const auto& [m, c] : terms_) {
      Monomial q(nvars_ - 1);
      for (int i = 0, j = 0; i < nvars_; ++i)
        if (i != var) q[j++] = m[i];
      r.add_term(q, c);
    }
    return r;
  }

  // Inverse of dehomogenize: re-insert variable `var` with exponents chosen
  // to make every term have total degree d.
  PolyT homogenize(int var, int d) const {
    if (var < 0 || var > nvars_) throw Error("variable index out of range");
    if (degree() > d) throw Error("homogenization degree below input degree");
    PolyT r(nvars_ + 1);
    for (const auto& [m, c] : terms_) {
      Monomial q(nvars_ + 1);
      for (int i = 0, j = 0; i < nvars_; ++i, ++j) {
        if (j == var) ++j;
        q[j] = m[i];
      }
      q[var] = d - m.degree();
      r.add_term(q, c);
    }
    return r;
  }

  // Substitute `value` for variable `var`, keeping the ring unchanged.
  PolyT plug(int var, const PolyT& value) const {
    check_ring(value);
    std::vector<PolyT> tuple;
    tuple.reserve(static_cast<std::size_t>(nvars_));
    for (int i = 0; i < nvars_; ++i)
      tuple.push_back(i == var ? value : variable(nvars_, i, FieldOps<K>::one(sample_or(value))));
    return substitute(tuple);
  }

  // Exact division; nullopt when the divisor does not divide exactly.
  friend std::optional<PolyT> try_div(const PolyT& a, const PolyT& b) {
    a.check_ring(b);
    if (b.is_zero()) throw DivisionByZeroError("division by zero polynomial");
    PolyT q(a.nvars_);
    PolyT r = a;
    const Monomial& lmb = b.leading_monomial();
    const K& lcb = b.leading_coefficient();
    while (!r.is_zero()) {
      const Monomial& lmr = r.leading_monomial();
      if (!lmb.divides(lmr)) return std::nullopt;
      Monomial qm = lmr.quotient(lmb);
      K qc = r.leading_coefficient() / lcb;
      PolyT t = PolyT::term(a.nvars_, qm, qc);
      q = q + t;
      r = r - t * b;
    }
    return q;
  }

  friend PolyT exact_div(const PolyT& a, const PolyT& b) {
    auto q = try_div(a, b);
    if (!q) throw NotDivisibleError("polynomial division is not exact");
    return *q;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      std::string cs = cremona::to_string(c);
      bool neg = !cs.empty() && cs[0] == '-';
      if (first) {
        if (neg) out << "-";
        first = false;
      } else {
        out << (neg ? " - " : " + ");
      }
      std::string mag = neg ? cs.substr(1) : cs;
      if (m.is_constant()) {
        out << mag;
        continue;
      }
      bool printed = false;
      if (mag != "1") {
        out << mag;
        printed = true;
      }
      for (int i = 0; i < m.nvars(); ++i) {
        if (m[i] == 0) continue;
        if (printed) out << "*";
        out << "x" << i;
        if (m[i] > 1) out << "^" << m[i];
        printed = true;
      }
    }
    return out.str();
  }

 private:
  // Some K (F_p) cannot make constants out of thin air; hand arithmetic a
  // sample coefficient when one exists.
  const K* sample() const { return terms_.empty() ? nullptr : &terms_.begin()->second; }
  const K* sample_or(const PolyT& other) const {
    const K* s = sample();
    return s ? s : other.sample();
  }
  K k_from_int(int n) const {
    K one = FieldOps<K>::one(sample());
    K acc = FieldOps<K>::zero(sample());
    for (int i = 0; i < n; ++i) acc = acc + one;
    return acc;
  }
  void check_ring(const PolyT& o) const {
    if (nvars_ != o.nvars_) throw RingMismatchError("polynomials from different rings");
  }

  int nvars_ = 0;
  TermMap terms_;
};

using Poly = PolyT<Rational>;
using PolyFp = PolyT<Fp>;

namespace detail {

// View of a polynomial as univariate in one variable with polynomial
// coefficients (still carried in the full ring, with that variable zeroed).
template <class K>
std::map<int, PolyT<K>> univariate_view(const PolyT<K>& a, int var) {
  std::map<int, PolyT<K>> out;
  for (const auto& [m, c] : a.terms()) {
    Monomial q = m;
    int e = q[var];
    q[var] = 0;
    auto it = out.find(e);
    if (it == out.end()) it = out.emplace(e, PolyT<K>(a.nvars())).first;
    it->second.add_term(q, c);
  }
  return out;
}

template <class K>
PolyT<K> from_univariate_view(int nvars, int var, const std::map<int, PolyT<K>>& coeffs) {
  PolyT<K> r(nvars);
  for (const auto& [e, c] : coeffs) {
    PolyT<K> xe = PolyT<K>::variable(nvars, var, FieldOps<K>::one(nullptr)).pow(e);
    r = r + c * xe;
  }
  return r;
}

template <class K>
int top_variable(const PolyT<K>& a, const PolyT<K>& b) {
  for (int v = a.nvars() - 1; v >= 0; --v)
    if (a.degree_in(v) > 0 || b.degree_in(v) > 0) return v;
  return -1;
}

}  // namespace detail

// Greatest common divisor, normalized so the grevlex leading coefficient is
// one. Recursive content/primitive-part reduction with a primitive
// pseudo-remainder sequence in the top variable.
template <class K>
PolyT<K> gcd(const PolyT<K>& a, const PolyT<K>& b);

namespace detail {

template <class K>
PolyT<K> content_of_view(int nvars, const std::map<int, PolyT<K>>& view) {
  PolyT<K> c(nvars);
  for (const auto& [e, coeff] : view) {
    c = cremona::gcd(c, coeff);
    if (c.is_constant() && !c.is_zero()) break;
  }
  return c;
}

// Pseudo-remainder of a by b in `var` (up to a scalar in the coefficient
// ring, which the primitive-part step removes anyway).
template <class K>
PolyT<K> pseudo_rem(PolyT<K> r, const PolyT<K>& b, int var) {
  int db = b.degree_in(var);
  auto bview = univariate_view(b, var);
  const PolyT<K>& lcb = bview.rbegin()->second;
  PolyT<K> xv = PolyT<K>::variable(r.nvars(), var, FieldOps<K>::one(nullptr));
  while (!r.is_zero() && r.degree_in(var) >= db) {
    auto rview = univariate_view(r, var);
    int dr = rview.rbegin()->first;
    const PolyT<K>& lcr = rview.rbegin()->second;
    r = r * lcb - b * lcr * xv.pow(dr - db);
  }
  return r;
}

template <class K>
PolyT<K> primitive_part(const PolyT<K>& a, int var) {
  if (a.is_zero()) return a;
  auto view = univariate_view(a, var);
  PolyT<K> c = content_of_view(a.nvars(), view);
  return exact_div(a, c);
}

}  // namespace detail

template <class K>
PolyT<K> gcd(const PolyT<K>& a, const PolyT<K>& b) {
  if (a.is_zero() && b.is_zero()) return a;
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.nvars() != b.nvars()) throw RingMismatchError("gcd of polynomials from different rings");

  int var = detail::top_variable(a, b);
  if (var < 0)  // both nonzero constants
    return PolyT<K>::constant(a.nvars(), FieldOps<K>::one(&a.leading_coefficient()));

  if (a.degree_in(var) == 0 || b.degree_in(var) == 0) {
    // One side is free of the top variable: gcd divides that side's content.
    const PolyT<K>& flat = a.degree_in(var) == 0 ? a : b;
    const PolyT<K>& tall = a.degree_in(var) == 0 ? b : a;
    auto view = detail::univariate_view(tall, var);
    PolyT<K> c = detail::content_of_view(tall.nvars(), view);
    return gcd(flat, c);
  }

  auto va = detail::univariate_view(a, var);
  auto vb = detail::univariate_view(b, var);
  PolyT<K> ca = detail::content_of_view(a.nvars(), va);
  PolyT<K> cb = detail::content_of_view(b.nvars(), vb);
  PolyT<K> cg = gcd(ca, cb);

  PolyT<K> f = exact_div(a, ca);
  PolyT<K> g = exact_div(b, cb);
  if (f.degree_in(var) < g.degree_in(var)) std::swap(f, g);
  while (!g.is_zero()) {
    PolyT<K> r = detail::pseudo_rem(f, g, var);
    if (!r.is_zero()) r = detail::primitive_part(r, var);
    f = g;
    g = r;
    if (!g.is_zero() && f.degree_in(var) < g.degree_in(var)) std::swap(f, g);
  }
  if (f.degree_in(var) == 0) return cg.monic();
  return (cg * detail::primitive_part(f, var)).monic();
}

// gcd of a whole tuple; zero entries are skipped.
template <class K>
PolyT<K> tuple_content(std::span<const PolyT<K>> ts) {
  if (ts.empty()) throw Error("tuple_content of empty tuple");
  PolyT<K> c(ts[0].nvars());
  for (const auto& t : ts) {
    c = gcd(c, t);
    if (c.is_constant() && !c.is_zero()) break;
  }
  if (c.is_zero()) throw Error("tuple_content of all-zero tuple");
  return c;
}

template <class K>
PolyT<K> tuple_content(const std::vector<PolyT<K>>& ts) {
  return tuple_content(std::span<const PolyT<K>>(ts));
}

}  // namespace cremona
