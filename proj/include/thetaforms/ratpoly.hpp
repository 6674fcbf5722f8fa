#pragma once

#include "thetaforms/exact_arith.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace thetaforms {

/// Dense univariate polynomial over Q, coefficients stored lowest degree first.
/// The zero polynomial has no coefficients; otherwise the leading one is nonzero.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> coeffs);

  static RatPoly monomial(int degree, const Rat& c = 1);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  /// Zero beyond the degree.
  Rat coeff(int i) const;
  Rat leading() const { return is_zero() ? Rat(0) : coeffs_.back(); }

  Rat operator()(const Rat& x) const;

  friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const Rat& c, const RatPoly& a);
  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Highest degree first, e.g. "j^2 - 3*j + 1/2".
  std::string to_string(std::string_view var = "j") const;

 private:
  void normalize();
  std::vector<Rat> coeffs_;
};

}  // namespace thetaforms
