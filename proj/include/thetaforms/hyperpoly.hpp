#pragma once

// Pochhammer symbols, truncated 2F1 coefficient streams, the U/W/V polynomial
// families, the F_p polynomial G_p and the coefficient-vanishing windows.

#include "thetaforms/fppoly.hpp"
#include "thetaforms/modforms.hpp"
#include "thetaforms/qseries.hpp"
#include "thetaforms/ratpoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace thetaforms {

/// (x)_n = x (x+1) ... (x+n-1), (x)_0 = 1.
Rat pochhammer(const Rat& x, int n);

struct HGParams {
  Rat alpha;
  Rat beta;
  Rat gamma;
};

enum class Family { U0, U1, W0, W1, V0, V1 };

HGParams family_params(Family f);
std::string family_name(Family f);
/// U^b, W^b and V^b for b in {0, 1}.
Family u_family(int b);
Family w_family(int b);
Family v_family(int b);

/// c_m = (alpha)_m (beta)_m / ((gamma)_m m!) for m = 0..M, by the ratio recurrence.
/// Throws std::invalid_argument if gamma is a non-positive integer.
std::vector<Rat> f21_coefficients(const HGParams& params, int M);

/// 2F1(params; x) as a formal power series in x with `order` terms.
RatSeries f21_series(const HGParams& params, int order);

/// sum_{m=0}^{n} c_m 1728^m j^{n-m}.
RatPoly truncated_poly(Family f, int n);

/// Exact coefficients of G_p, m = 0..(p+1)/4. Requires p = 3 mod 4.
std::vector<Rat> gp_coefficients(std::uint64_t p);
FpPoly gp_poly(std::uint64_t p);
/// prod (x - t) over t with t - 1 a nonzero square and t a non-square.
FpPoly gp_root_product(std::uint64_t p);
/// (1/4) (1/2)_v / v! mod p for v = 0..V.
std::vector<FpElem> gp_expected_power_sums(std::uint64_t p, int V);

struct VanishingWindow {
  int n;
  /// Open window lo < m < hi.
  int lo;
  int hi;
  bool ok;
  /// First m in the window with nu_p(c_m) < 1.
  std::optional<int> witness;
};

/// Whether p lies in the residue classes where the family's window is claimed.
bool window_admissible(Family f, std::uint64_t p);
/// Throws std::invalid_argument for U families or inadmissible p.
VanishingWindow vanishing_window(Family f, std::uint64_t p);

/// c_m 1728^m at m = (p+1)/3 for V0 (p = 11 mod 12) or V1 (p = 5 mod 12).
Rat hex_constant(Family f, std::uint64_t p);

// ---------------------------------------------------------------------------
// Series identities; each compares two exact series up to `order` terms.

/// theta_Z = E4^{1/8} 2F1(W0; 1728/j).
RelationCheck check_theta_z_hypergeometric(int order);
/// theta_H = E4^{1/4} 2F1(V0; 1728/j).
RelationCheck check_theta_h_hypergeometric(int order);
/// E4^{1/4} = 2F1(U0; 1728/j).
RelationCheck check_e4_hypergeometric(int order);
/// 2F1(lower; z) = (1 - z)^{1/2} 2F1(upper; z) for (U0,U1), (W0,W1), (V0,V1) as z-series.
RelationCheck check_euler_transform(Family lower, int order);
/// 2F1(W0; 27 l^2 (l-1)^2 / (4 (1-l+l^2)^3)) = (1-l+l^2)^{-1/8} 2F1(-1/4, 1/4; 1/2; l).
RelationCheck check_cubic_transform(int order);
/// 2F1(V0; y (y+4)^3 / (4 (2y-1)^3)) = (1-2y)^{-1/4}.
RelationCheck check_degenerate_transform(int order);

// ---------------------------------------------------------------------------
// Polynomial transformations over F_p of a reduced P-polynomial.

/// (l^2 (l-1)^2 / 256)^n P(256 (1-l+l^2)^3 / (l^2 (l-1)^2)) (1-l+l^2)^a (1 - 3/2 l - 3/2 l^2 + l^3)^b.
FpPoly lambda_transform(const FpPoly& P, const WeightIndices& w);
/// (y (y+4)^3)^n P(6912 (2y-1)^3 / (y (y+4)^3)) (y^2 - 10 y - 2)^b.
FpPoly t3_transform(const FpPoly& P, const WeightIndices& w);
/// 12^e (y^{(p+1)/3} + 2^{1/3}) with e = (p+1)/4 for b = 0 and (p-5)/4 for b = 1.
FpPoly t3_transform_expected(std::uint64_t p, int b);

}  // namespace thetaforms
