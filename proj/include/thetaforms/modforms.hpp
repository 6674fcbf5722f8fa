#pragma once

// Level-one modular forms of weight k as exact q-expansions: the
// Delta/E4/E6 basis, projection of an arbitrary coefficient stream onto M_k,
// and the polynomial P[f] with f / (Delta^n E4^a E6^b) = P[f](j).

#include "thetaforms/qseries.hpp"
#include "thetaforms/ratpoly.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace thetaforms {

/// k = 12 n + 4 a + 6 b with a in {0,1,2}, b in {0,1}.
struct WeightIndices {
  int k;
  int n;
  int a;
  int b;
  int dimension() const { return n + 1; }
  friend bool operator==(const WeightIndices&, const WeightIndices&) = default;
};

/// Throws std::invalid_argument for odd k or k < 4.
WeightIndices weight_indices(int k);

/// Series order used by the verification sweeps for weight k.
inline int default_order(int k) { return 2 * (weight_indices(k).n + 1) + 10; }

/// Delta^{n-l} E4^{a+3l} E6^b for l = 0..n; element l has valuation n - l and leading coefficient 1.
/// Requires order >= n + 1.
std::vector<RatSeries> basis(int k, int order);

/// coords[l] multiplies the l-th basis element.
struct BasisCoordinates {
  int k;
  std::vector<Rat> coords;
};

/// The unique coordinates matching f on q^0..q^n (triangular back-substitution).
BasisCoordinates basis_coordinates(const RatSeries& f, int k);

/// sum coords[l] * basis[l] to the given order.
RatSeries from_coordinates(const BasisCoordinates& c, int order);

/// The unique form in M_k agreeing with f on q^0..q^n, expanded to `order` terms.
RatSeries modular_completion(const RatSeries& f, int k, int order);

/// P[f](j) = sum coords[l] j^l.
RatPoly pf_polynomial(const RatSeries& f, int k);

/// Thrown when a coefficient that must be reduced mod p has p in its denominator.
class NotPIntegral : public std::domain_error {
 public:
  NotPIntegral(int index, const std::string& what) : std::domain_error(what), index_(index) {}
  int index() const { return index_; }

 private:
  int index_;
};

/// First m coefficients (q^0..q^{m-1}) of f and g agree mod p.
bool congruent_mod_p(const RatSeries& f, const RatSeries& g, std::uint64_t p, int m);
/// Same as congruent_mod_p but returns the first mismatching exponent.
std::optional<int> first_mismatch_mod_p(const RatSeries& f, const RatSeries& g, std::uint64_t p, int m);

/// Random p-integral forms in M_k with q^0..q^n coefficients divisible by p
/// are divisible by p to the default test order. Deterministic for a given seed.
bool check_almost_zero(int k, std::uint64_t p, int trials, std::uint64_t seed = 1);

// Convenience: the P-polynomials of the families studied here.
RatPoly theta_z_polynomial(int k);
RatPoly theta_h_polynomial(int k);
RatPoly eisenstein_polynomial(int k);
/// P[C_k 1], the extremal form.
RatPoly extremal_polynomial(int k);

}  // namespace thetaforms
