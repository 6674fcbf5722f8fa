#pragma once

// Truncated formal power series in q with exact coefficients, and the
// q-expansions of the modular objects used throughout: Eisenstein series,
// Delta, j, theta series, eta quotients and the two Hauptmoduln.

#include "thetaforms/exact_arith.hpp"

#include <algorithm>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace thetaforms {

inline Rat zero_like(const Rat&) { return Rat(0); }
inline FpElem zero_like(const FpElem& x) { return FpElem(0, x.modulus()); }
inline Rat one_like(const Rat&) { return Rat(1); }
inline FpElem one_like(const FpElem& x) { return FpElem(1, x.modulus()); }
inline Rat inverse(const Rat& x) {
  if (x == 0) throw std::domain_error("inverse of zero rational");
  return 1 / x;
}
inline FpElem inverse(const FpElem& x) { return x.inv(); }

/// sum_{i} coeffs[i] q^{shift + i}, known exactly for exponents below shift + order().
/// A nonzero shift only appears for Laurent objects such as j.
template <class R>
class QSeries {
 public:
  QSeries(std::vector<R> coeffs, int shift = 0) : c_(std::move(coeffs)), shift_(shift) {
    if (c_.empty()) throw std::invalid_argument("QSeries: order must be at least 1");
  }

  /// A constant c + O(q^order).
  static QSeries constant(const R& c, int order) {
    std::vector<R> v(static_cast<std::size_t>(order), zero_like(c));
    v.at(0) = c;
    return QSeries(std::move(v));
  }
  /// q + O(q^order), or q^n in general.
  static QSeries monomial(const R& c, int exponent, int order) {
    QSeries s = constant(zero_like(c), order);
    if (exponent < order) s.c_[static_cast<std::size_t>(exponent)] = c;
    return s;
  }

  int order() const { return static_cast<int>(c_.size()); }
  int shift() const { return shift_; }
  /// First exponent that is not known.
  int precision() const { return shift_ + order(); }
  const std::vector<R>& coeffs() const { return c_; }

  /// Coefficient of q^n (absolute exponent). Zero below the shift, throws beyond precision.
  R coeff(int n) const {
    if (n < shift_) return zero_like(c_[0]);
    if (n >= precision()) throw std::out_of_range("QSeries: coefficient beyond truncation order");
    return c_[static_cast<std::size_t>(n - shift_)];
  }
  const R& operator[](int i) const { return c_.at(static_cast<std::size_t>(i)); }

  /// Smallest exponent with a nonzero coefficient; nullopt if all known coefficients vanish.
  std::optional<int> valuation() const {
    for (int i = 0; i < order(); ++i)
      if (!is_zero(c_[static_cast<std::size_t>(i)])) return shift_ + i;
    return std::nullopt;
  }

  QSeries truncated(int order) const {
    if (order > this->order()) throw std::invalid_argument("QSeries: cannot extend precision");
    return QSeries(std::vector<R>(c_.begin(), c_.begin() + order), shift_);
  }

  /// Multiply by q^s.
  QSeries shifted(int s) const { return QSeries(c_, shift_ + s); }

  /// Absorb a positive shift into leading zeros (exponent 0 becomes index 0).
  QSeries normalized_to_zero_shift() const {
    if (shift_ < 0) throw std::domain_error("QSeries: Laurent tail cannot be normalized");
    if (shift_ == 0) return *this;
    std::vector<R> v(static_cast<std::size_t>(shift_), zero_like(c_[0]));
    v.insert(v.end(), c_.begin(), c_.end());
    return QSeries(std::move(v), 0);
  }

  friend QSeries operator+(const QSeries& a, const QSeries& b) {
    const int lo = std::min(a.shift_, b.shift_);
    const int hi = std::min(a.precision(), b.precision());
    if (hi <= lo) throw std::invalid_argument("QSeries: sum has no known coefficients");
    std::vector<R> v;
    v.reserve(static_cast<std::size_t>(hi - lo));
    for (int n = lo; n < hi; ++n) v.push_back(a.coeff(n) + b.coeff(n));
    return QSeries(std::move(v), lo);
  }
  friend QSeries operator-(const QSeries& a) {
    QSeries r = a;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

  friend QSeries operator*(const QSeries& a, const QSeries& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<R> v(static_cast<std::size_t>(n), zero_like(a.c_[0]));
    for (int i = 0; i < n; ++i) {
      const R& ai = a.c_[static_cast<std::size_t>(i)];
      if (is_zero(ai)) continue;
      for (int j = 0; i + j < n; ++j) v[static_cast<std::size_t>(i + j)] += ai * b.c_[static_cast<std::size_t>(j)];
    }
    return QSeries(std::move(v), a.shift_ + b.shift_);
  }
  friend QSeries operator*(const R& c, const QSeries& a) {
    QSeries r = a;
    for (auto& x : r.c_) x = c * x;
    return r;
  }
  QSeries& operator+=(const QSeries& o) { return *this = *this + o; }
  QSeries& operator*=(const QSeries& o) { return *this = *this * o; }

  /// 1/f for f whose leading stored coefficient (q^shift) is invertible.
  QSeries invert_unit() const {
    const R& c0 = c_[0];
    if (is_zero(c0)) throw std::domain_error("QSeries: constant term is not a unit");
    const R inv0 = inverse(c0);
    const int n = order();
    std::vector<R> g(static_cast<std::size_t>(n), zero_like(c0));
    g[0] = inv0;
    for (int k = 1; k < n; ++k) {
      R acc = zero_like(c0);
      for (int i = 1; i <= k; ++i) acc += c_[static_cast<std::size_t>(i)] * g[static_cast<std::size_t>(k - i)];
      g[static_cast<std::size_t>(k)] = -(inv0 * acc);
    }
    return QSeries(std::move(g), -shift_);
  }

  QSeries pow(unsigned e) const {
    const int shift = shift_ * static_cast<int>(e);
    QSeries r = constant(one_like(c_[0]), order());
    QSeries b(c_, 0);
    while (e) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r.shifted(shift);
  }

  /// f^r for f = 1 + O(q), via n g_n = sum_{k=1}^{n} (r k - (n - k)) f_k g_{n-k}.
  QSeries pow_rational(const Rat& r) const {
    if (shift_ != 0 || !(c_[0] == one_like(c_[0])))
      throw std::domain_error("QSeries::pow_rational: constant term must be 1");
    const int n = order();
    const R one = one_like(c_[0]);
    const R rr = scalar_from_rat(r, one);
    std::vector<R> g(static_cast<std::size_t>(n), zero_like(one));
    g[0] = one;
    for (int m = 1; m < n; ++m) {
      R acc = zero_like(one);
      for (int k = 1; k <= m; ++k) {
        const R& fk = c_[static_cast<std::size_t>(k)];
        if (is_zero(fk)) continue;
        R weight = rr * scalar_from_rat(Rat(k), one) - scalar_from_rat(Rat(m - k), one);
        acc += weight * fk * g[static_cast<std::size_t>(m - k)];
      }
      g[static_cast<std::size_t>(m)] = acc * inverse(scalar_from_rat(Rat(m), one));
    }
    return QSeries(std::move(g), 0);
  }

  /// q -> q^m.
  QSeries substitute_power(int m) const {
    if (m < 1) throw std::invalid_argument("QSeries::substitute_power: m must be positive");
    std::vector<R> v(static_cast<std::size_t>(order() * m), zero_like(c_[0]));
    for (int i = 0; i < order(); ++i) v[static_cast<std::size_t>(i * m)] = c_[static_cast<std::size_t>(i)];
    return QSeries(std::move(v), shift_ * m);
  }

 private:
  static R scalar_from_rat(const Rat& x, const R& like) {
    if constexpr (std::is_same_v<R, Rat>) {
      (void)like;
      return x;
    } else {
      return PrimeField(like.modulus()).from_rat(x);
    }
  }

  std::vector<R> c_;
  int shift_ = 0;
};

/// sum_m outer[m] * inner^m, inner must have zero constant term (valuation >= 1).
template <class R>
QSeries<R> compose(std::span<const R> outer, const QSeries<R>& inner) {
  QSeries<R> in = inner.normalized_to_zero_shift();
  if (!is_zero(in[0])) throw std::domain_error("compose: inner series has a nonzero constant term");
  if (outer.empty()) return QSeries<R>::constant(zero_like(in[0]), in.order());
  // Horner; terms beyond the inner precision cannot contribute.
  const std::size_t top = std::min<std::size_t>(outer.size(), static_cast<std::size_t>(in.order()));
  QSeries<R> acc = QSeries<R>::constant(outer[top - 1], in.order());
  for (std::size_t m = top - 1; m-- > 0;) acc = acc * in + QSeries<R>::constant(outer[m], in.order());
  return acc;
}

/// First absolute exponent where a and b differ within their common precision.
template <class R>
std::optional<int> first_mismatch(const QSeries<R>& a, const QSeries<R>& b) {
  const int lo = std::min(a.shift(), b.shift());
  const int hi = std::min(a.precision(), b.precision());
  for (int n = lo; n < hi; ++n)
    if (!(a.coeff(n) == b.coeff(n))) return n;
  return std::nullopt;
}

using RatSeries = QSeries<Rat>;
using FpSeries = QSeries<FpElem>;

/// Coefficientwise reduction; throws std::domain_error if some coefficient is not p-integral.
FpSeries reduce_series(const RatSeries& f, std::uint64_t p);

std::string to_string(const RatSeries& f, int terms = -1);

// ---------------------------------------------------------------------------
// Modular generators. `order` = number of coefficients from q^0 (or q^shift).

/// 1 - (2k/B_k) sum sigma_{k-1}(n) q^n; k even >= 4.
RatSeries eisenstein(int k, int order);
/// q prod (1 - q^n)^24.
RatSeries delta(int order);
/// (E_4^3 - E_6^2) / 1728, the same series by a second route.
RatSeries delta_from_eisenstein(int order);
/// E_4^3 / Delta with shift -1; coefficients of q^{-1} .. q^{order-2}.
RatSeries j_invariant(int order);
/// 1728 / j = 1728 Delta / E_4^3, a series with zero constant term.
RatSeries j_reciprocal_1728(int order);

/// sum_{n in Z} q^{n^2}.
RatSeries theta_z(int order);
/// sum_{m,n} q^{m^2 + mn + n^2} by lattice enumeration.
RatSeries theta_h(int order);

/// eta(scale * tau)^exponent as one factor of an eta quotient.
struct EtaFactor {
  int scale;
  int exponent;
};

/// eta = q^{shift} * series with the shift an exact rational (1/24 for eta itself).
struct EtaSeries {
  Rat shift;
  RatSeries series;
};

EtaSeries eta(int order);
/// prod eta(d tau)^e; the total shift sum d e / 24 must be an integer.
RatSeries eta_quotient(std::span<const EtaFactor> factors, int order);

/// -108 x / (1 + 27 x), x = (eta(3 tau)/eta(tau))^12.
RatSeries t3(int order);
/// 16 (eta(tau) eta(4 tau)^2 / eta(2 tau)^3)^8 = 16 q - 128 q^2 + ... (lambda at 2 tau).
RatSeries lambda_eta_quotient(int order);

enum class Hauptmodul { T3, Lambda };

struct RelationCheck {
  bool holds;
  std::optional<int> first_mismatch;
};

/// t3: j t3 (t3 + 4)^3 = 3^3 4^4 (2 t3 - 1)^3.
/// lambda: j(q^2) L^2 (L - 1)^2 = 256 (1 - L + L^2)^3 with L the eta quotient.
RelationCheck verify_hauptmodul_relation(Hauptmodul which, int order);

}  // namespace thetaforms
