#pragma once

// Dense univariate polynomials over F_p: gcd, splitting tests, degree patterns
// of irreducible factors, root enumeration over F_p and F_{p^2}, power sums.

#include "thetaforms/exact_arith.hpp"
#include "thetaforms/ratpoly.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace thetaforms {

class FpPoly {
 public:
  /// The zero polynomial over F_p.
  explicit FpPoly(std::uint64_t p);
  /// Coefficients lowest degree first; each is reduced mod p.
  FpPoly(std::uint64_t p, const std::vector<std::int64_t>& coeffs);
  FpPoly(std::uint64_t p, std::vector<FpElem> coeffs);

  static FpPoly x(std::uint64_t p) { return monomial(p, 1, 1); }
  static FpPoly constant(std::uint64_t p, std::int64_t c) { return monomial(p, 0, c); }
  static FpPoly monomial(std::uint64_t p, int degree, std::int64_t c);

  std::uint64_t modulus() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  FpElem coeff(int i) const;
  FpElem leading() const { return coeff(degree()); }
  const std::vector<std::uint64_t>& raw() const { return c_; }

  FpPoly monic() const;
  FpPoly derivative() const;
  FpElem operator()(const FpElem& x) const;
  Fp2Elem operator()(const Fp2Elem& x) const;

  friend FpPoly operator+(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator-(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator*(const FpElem& c, const FpPoly& a);
  friend bool operator==(const FpPoly& a, const FpPoly& b) { return a.p_ == b.p_ && a.c_ == b.c_; }

  /// Euclidean division; throws std::domain_error for a zero divisor.
  std::pair<FpPoly, FpPoly> divmod(const FpPoly& divisor) const;
  friend FpPoly operator/(const FpPoly& a, const FpPoly& b) { return a.divmod(b).first; }
  friend FpPoly operator%(const FpPoly& a, const FpPoly& b) { return a.divmod(b).second; }

  FpPoly pow(unsigned e) const;

  /// Highest degree first with coefficients in [0, p).
  std::string to_string(std::string_view var = "j") const;

 private:
  void normalize();
  std::uint64_t p_;
  std::vector<std::uint64_t> c_;
};

/// Raised by the boolean splitting tests on input with a repeated factor.
class NotSquarefree : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Coefficientwise reduction; throws std::domain_error if p divides a denominator.
FpPoly reduce_poly(const RatPoly& poly, std::uint64_t p);

/// Monic gcd (zero if both inputs are zero).
FpPoly gcd(const FpPoly& a, const FpPoly& b);
FpPoly powmod(const FpPoly& base, std::uint64_t e, const FpPoly& mod);
/// x^e mod f; f must be nonzero.
FpPoly powmod_x(std::uint64_t e, const FpPoly& f);

bool is_squarefree(const FpPoly& f);

/// deg gcd(f, x^p - x): number of distinct roots in F_p.
int count_fp_roots(const FpPoly& f);
bool splits_into_linears(const FpPoly& f);
/// f | x^{p^2} - x.
bool splits_over_fp2(const FpPoly& f);

/// Product of all monic irreducible factors of one degree occurring with one multiplicity.
struct DegreeBlock {
  int degree;
  int multiplicity;
  FpPoly product;
};

/// Squarefree decomposition followed by distinct-degree splitting.
/// The product of block.product^multiplicity over all blocks is f.monic().
std::vector<DegreeBlock> distinct_degree_factorization(const FpPoly& f);

struct FactorPattern {
  /// One (degree, multiplicity) entry per monic irreducible factor, sorted.
  std::vector<std::pair<int, int>> factors;

  /// degree -> number of irreducible factors of that degree (with multiplicity).
  std::map<int, int> degree_counts() const;
  int total_degree() const;
  std::string to_string() const;
  friend bool operator==(const FactorPattern&, const FactorPattern&) = default;
};

FactorPattern factor_pattern(const FpPoly& f);

/// Distinct roots in F_p by exhaustive evaluation, ascending.
std::vector<FpElem> roots_brute(const FpPoly& f);
/// Distinct roots in F_{p^2} by exhaustive evaluation, ordered by (c1, c0).
std::vector<Fp2Elem> roots_brute_fp2(const FpPoly& f, const Fp2Field& field);

/// S_0..S_V of the roots of f (with multiplicity, in a splitting field) via Newton's identities.
std::vector<FpElem> power_sums(const FpPoly& f, int max_power);

/// Newton power sums against explicit root-power sums over F_{p^2};
/// nullopt when f is not squarefree or does not split over F_{p^2}.
std::optional<bool> newton_consistency(const FpPoly& f, int max_power);

/// Palindromic coefficients after monic normalization. Throws std::domain_error if f(0) = 0.
bool is_reciprocal(const FpPoly& f);

}  // namespace thetaforms
