#pragma once

// Brute-force elliptic curve arithmetic over F_p and F_{p^2}: group law,
// point enumeration, torsion structure, and the j-invariant sets compared
// against the zero sets of the P-polynomials.

#include "thetaforms/exact_arith.hpp"
#include "thetaforms/fppoly.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace thetaforms {

/// Z/d1 x Z/d2 with d1 | d2.
struct TorsionStructure {
  int d1;
  int d2;
  friend bool operator==(const TorsionStructure&, const TorsionStructure&) = default;
};

std::string to_string(const TorsionStructure& t);

template <class Elem>
struct Point {
  Elem x{}, y{};
  bool infinity = true;
  friend bool operator==(const Point&, const Point&) = default;
};

/// y^2 = x^3 + a2 x^2 + a4 x + a6 over a prime field or F_{p^2} (odd characteristic).
template <class Field>
class CurveModel {
 public:
  using Elem = typename Field::Elem;
  using Pt = Point<Elem>;

  /// Throws std::domain_error for a singular model.
  CurveModel(Field field, Elem a2, Elem a4, Elem a6) : f_(field), a2_(a2), a4_(a4), a6_(a6) {
    if (is_zero(discriminant())) throw std::domain_error("singular curve");
  }

  const Field& field() const { return f_; }
  Elem a2() const { return a2_; }
  Elem a4() const { return a4_; }
  Elem a6() const { return a6_; }

  Elem rhs(const Elem& x) const { return ((x + a2_) * x + a4_) * x + a6_; }

  Elem discriminant() const {
    const Elem b2 = f_(4) * a2_, b4 = f_(2) * a4_, b6 = f_(4) * a6_;
    const Elem b8 = f_(4) * a2_ * a6_ - a4_ * a4_;
    return -(b2 * b2 * b8) - f_(8) * b4 * b4 * b4 - f_(27) * b6 * b6 + f_(9) * b2 * b4 * b6;
  }
  /// c4^3 / Delta.
  Elem j_invariant() const {
    const Elem b2 = f_(4) * a2_, b4 = f_(2) * a4_;
    const Elem c4 = b2 * b2 - f_(24) * b4;
    return c4 * c4 * c4 / discriminant();
  }

  bool on_curve(const Pt& P) const { return P.infinity || P.y * P.y == rhs(P.x); }

  Pt neg(const Pt& P) const { return P.infinity ? P : Pt{P.x, -P.y, false}; }

  Pt add(const Pt& P, const Pt& Q) const {
    if (P.infinity) return Q;
    if (Q.infinity) return P;
    Elem l;
    if (P.x == Q.x) {
      if (is_zero(P.y + Q.y)) return Pt{};
      l = (f_(3) * P.x * P.x + f_(2) * a2_ * P.x + a4_) / (f_(2) * P.y);
    } else {
      l = (Q.y - P.y) / (Q.x - P.x);
    }
    const Elem x3 = l * l - a2_ - P.x - Q.x;
    return Pt{x3, l * (P.x - x3) - P.y, false};
  }

  Pt mul(Pt P, std::uint64_t n) const {
    Pt acc{};
    while (n) {
      if (n & 1) acc = add(acc, P);
      P = add(P, P);
      n >>= 1;
    }
    return acc;
  }

 private:
  Field f_;
  Elem a2_, a4_, a6_;
};

/// root[index(z)] = index of some square root of z, or -1 for non-squares.
template <class Field>
class SqrtTable {
 public:
  explicit SqrtTable(const Field& f) : f_(f), root_(f.size(), -1) {
    for (std::uint64_t i = 0; i < f.size(); ++i) {
      const auto z = f.element(i);
      auto& slot = root_[f.index(z * z)];
      if (slot < 0) slot = static_cast<std::int64_t>(i);
    }
  }
  /// Some square root, or nullopt.
  std::optional<typename Field::Elem> sqrt(const typename Field::Elem& z) const {
    const auto r = root_[f_.index(z)];
    if (r < 0) return std::nullopt;
    return f_.element(static_cast<std::uint64_t>(r));
  }
  /// Quadratic character: 0, 1 or -1.
  int chi(const typename Field::Elem& z) const {
    if (is_zero(z)) return 0;
    return root_[f_.index(z)] < 0 ? -1 : 1;
  }

 private:
  Field f_;
  std::vector<std::int64_t> root_;
};

/// All points including the point at infinity (first).
template <class Field>
std::vector<Point<typename Field::Elem>> enumerate_points(const CurveModel<Field>& E, const SqrtTable<Field>& sq) {
  using Pt = Point<typename Field::Elem>;
  std::vector<Pt> pts{Pt{}};
  const Field& f = E.field();
  for (std::uint64_t i = 0; i < f.size(); ++i) {
    const auto x = f.element(i);
    const auto r = sq.sqrt(E.rhs(x));
    if (!r) continue;
    pts.push_back(Pt{x, *r, false});
    if (!is_zero(*r)) pts.push_back(Pt{x, -*r, false});
  }
  return pts;
}

template <class Field>
std::uint64_t point_count_table(const CurveModel<Field>& E, const SqrtTable<Field>& sq) {
  const Field& f = E.field();
  std::int64_t s = 0;
  for (std::uint64_t i = 0; i < f.size(); ++i) s += sq.chi(E.rhs(f.element(i)));
  return static_cast<std::uint64_t>(static_cast<std::int64_t>(f.size()) + 1 + s);
}

/// Structure of E(F)[n] by exhaustive enumeration; n >= 1.
template <class Field>
TorsionStructure n_torsion_structure(const CurveModel<Field>& E, int n, const SqrtTable<Field>& sq) {
  if (n < 1) throw std::invalid_argument("n_torsion_structure: n must be positive");
  const auto pts = enumerate_points(E, sq);
  std::vector<int> killed(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& P : pts)
    for (int d = 1; d <= n; ++d)
      if (n % d == 0 && E.mul(P, static_cast<std::uint64_t>(d)).infinity) ++killed[static_cast<std::size_t>(d)];
  int d1 = 1;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0 && killed[static_cast<std::size_t>(d)] == d * d) d1 = d;
  return {d1, killed[static_cast<std::size_t>(n)] / d1};
}

template <class Field>
TorsionStructure n_torsion_structure(const CurveModel<Field>& E, int n) {
  return n_torsion_structure(E, n, SqrtTable<Field>(E.field()));
}

// ---------------------------------------------------------------------------
// F_p curves

using FpCurve = CurveModel<PrimeField>;
using Fp2Curve = CurveModel<Fp2Field>;

/// y^2 = x^3 + a x + b.
FpCurve short_weierstrass(std::uint64_t p, std::int64_t a, std::int64_t b);
/// y^2 = x (x - 1) (x - lambda); throws std::domain_error for lambda in {0, 1}.
FpCurve legendre_curve(const FpElem& lambda);
/// A model with the given j-invariant (any j).
FpCurve curve_with_j(const FpElem& j);
Fp2Curve curve_with_j(const Fp2Elem& j, const Fp2Field& field);

/// 1 + sum_x (1 + chi(x^3 + a2 x^2 + a4 x + a6)) with chi the Legendre symbol.
std::uint64_t point_count(const FpCurve& E);

/// (2,2) iff -lambda and lambda - 1 are nonzero squares, else (2,4). Requires p = 3 mod 4.
TorsionStructure legendre_4torsion_predicted(const FpElem& lambda);

/// F_p-roots of x^2 - l, x^2 - 2x + l, x^2 - 2 l x + l; ascending, distinct.
std::vector<FpElem> psi4_roots(const FpElem& lambda);

/// 256 (1 - l + l^2)^3 / (l^2 (l - 1)^2); throws std::domain_error for l in {0, 1}.
template <class Elem>
Elem j_of_legendre(const Elem& l) {
  const Elem one = lift(l, 1);
  const Elem den = l * l * (l - one) * (l - one);
  if (is_zero(den)) throw std::domain_error("j_of_legendre: lambda must not be 0 or 1");
  const Elem a = one - l + l * l;
  return lift(l, 256) * a * a * a / den;
}

/// { j(l) : -l, l - 1 nonzero squares } minus {0, 1728}; ascending.
std::vector<FpElem> legendre_j_set(std::uint64_t p);
/// { j(E_l) : E_l(F_p)[4] = E_l(F_p)[2] } minus {0, 1728}, torsion by enumeration; ascending.
std::vector<FpElem> legendre_curve_set(std::uint64_t p);
/// { j(E) : E: y^2 = x^3 + a x + b, |E(F_p)[2]| = |E(F_p)[4]| = 4 } minus {0, 1728}, over all (a, b); ascending.
std::vector<FpElem> weierstrass_curve_set(std::uint64_t p);

/// All supersingular j in F_{p^2} (including 0 and 1728 when supersingular), ordered by (c1, c0).
std::vector<Fp2Elem> supersingular_j_set(std::uint64_t p);

/// { 6912 (2a - 1)^3 / (a (a + 4)^3) : a in F_{p^2}, a^{(p+1)/3} = -2^{1/3} } minus {0, 1728}.
std::vector<Fp2Elem> hex_zero_set(std::uint64_t p);

/// Product of (x - r) over a Frobenius-stable set, as an F_p polynomial.
/// Throws std::domain_error if the set is not Frobenius-stable.
FpPoly product_over_roots(const std::vector<Fp2Elem>& roots, std::uint64_t p);
FpPoly product_over_roots(const std::vector<FpElem>& roots, std::uint64_t p);

// ---------------------------------------------------------------------------
// Hessian curves X^3 + Y^3 + 1 = 3 b X Y

/// Coefficients (a2, a4, a6) of a Weierstrass model of the Hessian curve, using the flex (1 : -1 : 0).
template <class Elem>
struct HessianModel {
  Elem a2, a4, a6;
};

template <class Elem>
HessianModel<Elem> hessian_weierstrass(const Elem& b) {
  const Elem b3 = b * b * b;
  const Elem A = lift(b, 12) * (b3 - lift(b, 1));
  return {lift(b, -27) * b * b, A * lift(b, 18) * b, lift(b, -3) * A * A};
}

/// 27 b^3 (b^3 + 8)^3 / (b^3 - 1)^3; throws std::domain_error when b^3 = 1.
template <class Elem>
Elem hessian_j(const Elem& b) {
  const Elem b3 = b * b * b;
  const Elem s = b3 - lift(b, 1);
  if (is_zero(s)) throw std::domain_error("hessian_j: singular Hessian curve (b^3 = 1)");
  const Elem t = b3 + lift(b, 8);
  return lift(b, 27) * b3 * t * t * t / (s * s * s);
}

/// Projective points of X^3 + Y^3 + Z^3 = 3 b X Y Z over the field.
template <class Field>
std::uint64_t hessian_point_count(const typename Field::Elem& b, const Field& f) {
  using Elem = typename Field::Elem;
  const Elem one = f(1), three_b = f(3) * b;
  std::uint64_t n = 0;
  for (std::uint64_t i = 0; i < f.size(); ++i) {
    const Elem x = f.element(i);
    if (is_zero(x * x * x + one)) ++n;  // (x : 1 : 0)
    for (std::uint64_t k = 0; k < f.size(); ++k) {
      const Elem y = f.element(k);
      if (is_zero(x * x * x + y * y * y + one - three_b * x * y)) ++n;
    }
  }
  return n;
}

Fp2Curve hessian_curve(const Fp2Elem& b, const Fp2Field& field);

/// { hessian_j(b) : b in F_{p^2}, b^{p+1} = -2, b^3 != 1 } minus {0, 1728}.
std::vector<Fp2Elem> hessian_j_set(std::uint64_t p);

struct HessianCheck {
  bool sets_equal;
  bool torsion_ok;
  std::size_t set_size;
  std::string witness;
  bool ok() const { return sets_equal && torsion_ok; }
};

/// Set equality with hex_zero_set and (3,3) 3-torsion over F_{p^2} for up to `samples` curves.
/// Requires p = 5, 11 mod 12.
HessianCheck hessian_proposition_check(std::uint64_t p, int samples = 2);

}  // namespace thetaforms
