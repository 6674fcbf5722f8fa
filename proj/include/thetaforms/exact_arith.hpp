#pragma once

// Exact scalar arithmetic: arbitrary-precision rationals, prime fields F_p and
// their quadratic extensions F_{p^2} = F_p[w]/(w^2 - d).

#include <gmpxx.h>

#include <cassert>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace thetaforms {

using Integer = mpz_class;
using Rat = mpq_class;

/// Reduced rational num/den. Throws std::domain_error if den == 0.
Rat make_rat(long num, long den = 1);

std::string to_string(const Rat& x);

bool is_prime(std::uint64_t n);

/// k-th Bernoulli number, k even (B_1 is the only odd index accepted, as -1/2).
Rat bernoulli(int k);

/// Euler's criterion mapped to {-1, 0, 1}. p must be an odd prime.
int legendre_symbol(std::int64_t a, std::uint64_t p);

/// nu_p(x); throws std::domain_error for x == 0.
long padic_valuation(const Integer& x, std::uint64_t p);
long padic_valuation(const Rat& x, std::uint64_t p);

inline bool is_p_integral(const Rat& x, std::uint64_t p) {
  return x == 0 || padic_valuation(x, p) >= 0;
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

/// Least quadratic non-residue modulo an odd prime.
std::uint64_t least_nonresidue(std::uint64_t p);

// ---------------------------------------------------------------------------
// F_p

class FpElem {
 public:
  FpElem() = default;
  FpElem(std::int64_t value, std::uint64_t p);

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  FpElem pow(std::uint64_t e) const;
  FpElem pow(const Integer& e) const;
  /// Throws std::domain_error on zero.
  FpElem inv() const;

  friend FpElem operator+(FpElem a, FpElem b) {
    assert(a.p_ == b.p_);
    std::uint64_t s = a.v_ + b.v_;
    if (s >= a.p_) s -= a.p_;
    return raw(s, a.p_);
  }
  friend FpElem operator-(FpElem a, FpElem b) {
    assert(a.p_ == b.p_);
    return raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_, a.p_);
  }
  friend FpElem operator-(FpElem a) { return raw(a.v_ == 0 ? 0 : a.p_ - a.v_, a.p_); }
  friend FpElem operator*(FpElem a, FpElem b) {
    assert(a.p_ == b.p_);
    return raw(a.v_ * b.v_ % a.p_, a.p_);
  }
  friend FpElem operator/(FpElem a, FpElem b) { return a * b.inv(); }
  FpElem& operator+=(FpElem o) { return *this = *this + o; }
  FpElem& operator-=(FpElem o) { return *this = *this - o; }
  FpElem& operator*=(FpElem o) { return *this = *this * o; }
  friend bool operator==(FpElem a, FpElem b) { return a.v_ == b.v_ && a.p_ == b.p_; }
  friend bool operator<(FpElem a, FpElem b) { return a.v_ < b.v_; }

 private:
  static FpElem raw(std::uint64_t v, std::uint64_t p) {
    FpElem r;
    r.v_ = v;
    r.p_ = p;
    return r;
  }
  std::uint64_t v_ = 0;
  std::uint64_t p_ = 0;
};

std::ostream& operator<<(std::ostream& os, const FpElem& x);

/// Context object for F_p: validates p and builds elements.
struct PrimeField {
  using Elem = FpElem;

  /// Throws std::invalid_argument unless p is a prime with 5 <= p < 2^31.
  explicit PrimeField(std::uint64_t p);

  std::uint64_t p;

  FpElem operator()(std::int64_t v) const { return FpElem(v, p); }
  /// Reduction of a p-integral rational; throws std::domain_error otherwise.
  FpElem from_rat(const Rat& x) const;
  std::uint64_t size() const { return p; }
  FpElem element(std::uint64_t index) const { return FpElem(static_cast<std::int64_t>(index), p); }
  static std::uint64_t index(const FpElem& x) { return x.value(); }
};

/// The unique cube root of 2 in F_p; requires p = 2 mod 3 (i.e. p = 5, 11 mod 12).
FpElem cube_root_of_2(std::uint64_t p);

// ---------------------------------------------------------------------------
// F_{p^2}

/// c0 + c1*w with w^2 = d, d the least non-residue mod p.
class Fp2Elem {
 public:
  Fp2Elem() = default;
  Fp2Elem(std::uint64_t c0, std::uint64_t c1, std::uint64_t p, std::uint64_t d)
      : c0_(c0 % p), c1_(c1 % p), p_(p), d_(d) {}

  std::uint64_t c0() const { return c0_; }
  std::uint64_t c1() const { return c1_; }
  std::uint64_t modulus() const { return p_; }
  std::uint64_t nonresidue() const { return d_; }
  bool is_zero() const { return c0_ == 0 && c1_ == 0; }
  bool in_base_field() const { return c1_ == 0; }
  FpElem base() const { return FpElem(static_cast<std::int64_t>(c0_), p_); }

  Fp2Elem pow(std::uint64_t e) const;
  Fp2Elem pow(const Integer& e) const;
  /// Throws std::domain_error on zero.
  Fp2Elem inv() const;
  /// x -> x^p, i.e. c0 - c1*w.
  Fp2Elem frobenius() const { return {c0_, c1_ == 0 ? 0 : p_ - c1_, p_, d_}; }
  /// x^{p+1} = c0^2 - d c1^2, an element of F_p.
  FpElem norm() const;

  friend Fp2Elem operator+(const Fp2Elem& a, const Fp2Elem& b) {
    assert(a.p_ == b.p_ && a.d_ == b.d_);
    return {a.c0_ + b.c0_, a.c1_ + b.c1_, a.p_, a.d_};
  }
  friend Fp2Elem operator-(const Fp2Elem& a, const Fp2Elem& b) {
    assert(a.p_ == b.p_ && a.d_ == b.d_);
    return {a.c0_ + a.p_ - b.c0_, a.c1_ + a.p_ - b.c1_, a.p_, a.d_};
  }
  friend Fp2Elem operator-(const Fp2Elem& a) { return {a.p_ - a.c0_, a.p_ - a.c1_, a.p_, a.d_}; }
  friend Fp2Elem operator*(const Fp2Elem& a, const Fp2Elem& b) {
    assert(a.p_ == b.p_ && a.d_ == b.d_);
    const std::uint64_t p = a.p_;
    std::uint64_t r0 = (a.c0_ * b.c0_ + (a.c1_ * b.c1_ % p) * a.d_) % p;
    std::uint64_t r1 = (a.c0_ * b.c1_ + a.c1_ * b.c0_) % p;
    return {r0, r1, p, a.d_};
  }
  friend Fp2Elem operator/(const Fp2Elem& a, const Fp2Elem& b) { return a * b.inv(); }
  Fp2Elem& operator+=(const Fp2Elem& o) { return *this = *this + o; }
  Fp2Elem& operator-=(const Fp2Elem& o) { return *this = *this - o; }
  Fp2Elem& operator*=(const Fp2Elem& o) { return *this = *this * o; }
  friend bool operator==(const Fp2Elem& a, const Fp2Elem& b) {
    return a.c0_ == b.c0_ && a.c1_ == b.c1_ && a.p_ == b.p_;
  }
  friend bool operator<(const Fp2Elem& a, const Fp2Elem& b) {
    return a.c1_ != b.c1_ ? a.c1_ < b.c1_ : a.c0_ < b.c0_;
  }

 private:
  std::uint64_t c0_ = 0, c1_ = 0, p_ = 0, d_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Fp2Elem& x);
std::string to_string(const Fp2Elem& x);

struct Fp2Field {
  using Elem = Fp2Elem;

  explicit Fp2Field(std::uint64_t p);

  std::uint64_t p;
  std::uint64_t d;

  Fp2Elem operator()(std::int64_t v) const;
  Fp2Elem embed(const FpElem& x) const { return {x.value(), 0, p, d}; }
  Fp2Elem make(std::uint64_t c0, std::uint64_t c1) const { return {c0, c1, p, d}; }
  Fp2Elem omega() const { return {0, 1, p, d}; }
  std::uint64_t size() const { return p * p; }
  Fp2Elem element(std::uint64_t index) const { return {index % p, index / p, p, d}; }
  std::uint64_t index(const Fp2Elem& x) const { return x.c0() + p * x.c1(); }
};

// Scalars "of the same kind" as a sample element; lets field-generic code
// write constants without carrying a context.
inline Rat lift(const Rat&, long v) { return Rat(v); }
inline FpElem lift(const FpElem& like, long v) { return FpElem(v, like.modulus()); }
inline Fp2Elem lift(const Fp2Elem& like, long v) {
  std::uint64_t p = like.modulus();
  std::int64_t r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += static_cast<std::int64_t>(p);
  return {static_cast<std::uint64_t>(r), 0, p, like.nonresidue()};
}
inline bool is_zero(const Rat& x) { return x == 0; }
inline bool is_zero(const FpElem& x) { return x.is_zero(); }
inline bool is_zero(const Fp2Elem& x) { return x.is_zero(); }

}  // namespace thetaforms
