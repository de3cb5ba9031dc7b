// Coefficient domains: exact rationals (GMP) and word-size prime fields.
//
// All verdicts in the library are computed over the rationals; F_p is used
// only for randomized pre-screening of polynomial identities.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "cremona/errors.hpp"

namespace cremona {

using Rational = mpq_class;
using Integer = mpz_class;

inline std::string to_string(const Rational& a) { return a.get_str(); }

// Element of F_p for a runtime prime p. The modulus travels with the value;
// mixing moduli is a programming error.
class Fp {
 public:
  Fp(long long value, std::uint64_t p) : p_(p) {
    long long r = value % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    v_ = static_cast<std::uint64_t>(r);
  }

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  friend Fp operator+(const Fp& a, const Fp& b) {
    a.check(b);
    std::uint64_t s = a.v_ + b.v_;
    if (s >= a.p_) s -= a.p_;
    return Fp(s, a.p_, 0);
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    a.check(b);
    std::uint64_t s = a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_;
    return Fp(s, a.p_, 0);
  }
  Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_, 0); }
  friend Fp operator*(const Fp& a, const Fp& b) {
    a.check(b);
    using u128 = unsigned __int128;
    return Fp(static_cast<std::uint64_t>((u128)a.v_ * b.v_ % a.p_), a.p_, 0);
  }
  friend Fp operator/(const Fp& a, const Fp& b) {
    a.check(b);
    if (b.v_ == 0) throw DivisionByZeroError("division by zero in F_p");
    return a * b.inverse();
  }
  Fp inverse() const {
    if (v_ == 0) throw DivisionByZeroError("inverse of zero in F_p");
    // extended Euclid on (v, p)
    long long t = 0, new_t = 1;
    long long r = static_cast<long long>(p_), new_r = static_cast<long long>(v_);
    while (new_r != 0) {
      long long q = r / new_r;
      long long tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    if (t < 0) t += static_cast<long long>(p_);
    return Fp(static_cast<std::uint64_t>(t), p_, 0);
  }

  friend bool operator==(const Fp& a, const Fp& b) {
    a.check(b);
    return a.v_ == b.v_;
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

 private:
  Fp(std::uint64_t v, std::uint64_t p, int) : v_(v), p_(p) {}
  void check(const Fp& o) const {
    if (p_ != o.p_) throw Error("F_p arithmetic with mismatched moduli");
  }
  std::uint64_t v_ = 0;
  std::uint64_t p_ = 2;
};

inline std::string to_string(const Fp& a) { return std::to_string(a.value()); }

// Uniform hooks so polynomial code can be generic over both fields.
template <class K>
struct FieldOps;

template <>
struct FieldOps<Rational> {
  static bool is_zero(const Rational& a) { return sgn(a) == 0; }
  static Rational zero(const Rational*) { return Rational(0); }
  static Rational one(const Rational*) { return Rational(1); }
};

template <>
struct FieldOps<Fp> {
  static bool is_zero(const Fp& a) { return a.is_zero(); }
  static Fp zero(const Fp* sample) {
    if (!sample) throw Error("F_p constant requires a modulus sample");
    return Fp(0, sample->modulus());
  }
  static Fp one(const Fp* sample) {
    if (!sample) throw Error("F_p constant requires a modulus sample");
    return Fp(1, sample->modulus());
  }
};

}  // namespace cremona
