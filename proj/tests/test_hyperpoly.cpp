#include <doctest.h>

#include "thetaforms/hyperpoly.hpp"

#include <map>
#include <set>

using namespace thetaforms;

namespace {

// c_m straight from the Pochhammer definition, no recurrence
Rat direct_coeff(const HGParams& h, int m) {
  Rat num = 1, den = 1;
  for (int i = 0; i < m; ++i) {
    num *= (h.alpha + i) * (h.beta + i);
    den *= (h.gamma + i) * (i + 1);
  }
  return num / den;
}

std::vector<std::uint64_t> primes_upto(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 5; p <= n; ++p) {
    bool prime = true;
    for (std::uint64_t d = 2; d * d <= p; ++d) prime = prime && p % d != 0;
    if (prime) out.push_back(p);
  }
  return out;
}

}  // namespace

TEST_CASE("pochhammer symbol") {
  CHECK(pochhammer(Rat(1), 5) == 120);
  CHECK(pochhammer(make_rat(1, 2), 3) == make_rat(15, 8));
  CHECK(pochhammer(Rat(-2), 3) == 0);
  CHECK(pochhammer(Rat(7), 0) == 1);
  CHECK_THROWS(pochhammer(Rat(1), -1));
}

TEST_CASE("2F1 coefficients agree with the closed form") {
  for (Family f : {Family::U0, Family::U1, Family::W0, Family::W1, Family::V0, Family::V1}) {
    const auto c = f21_coefficients(family_params(f), 30);
    for (int m = 0; m <= 30; ++m) CHECK(c[static_cast<std::size_t>(m)] == direct_coeff(family_params(f), m));
  }
  CHECK_THROWS(f21_coefficients({Rat(1), Rat(1), Rat(-2)}, 5));
}

TEST_CASE("family parameters and names") {
  CHECK(family_name(Family::W1) == "W1");
  CHECK(w_family(1) == Family::W1);
  CHECK(v_family(0) == Family::V0);
  CHECK(u_family(1) == Family::U1);
  CHECK_THROWS(u_family(2));
  const HGParams w0 = family_params(Family::W0);
  CHECK(w0.alpha == make_rat(-1, 24));
  CHECK(w0.beta == make_rat(7, 24));
  CHECK(w0.gamma == make_rat(3, 4));
}

TEST_CASE("truncated polynomial W0 of degree 4") {
  const RatPoly W = truncated_poly(Family::W0, 4);
  CHECK(W.to_string("j") == "j^4 - 28*j^3 - 17112*j^2 - 16085280*j - 18044467104");
  CHECK(reduce_poly(W, 103) == reduce_poly(theta_z_polynomial(52), 103));
  CHECK(truncated_poly(Family::U0, 0) == RatPoly({Rat(1)}));
}

TEST_CASE("G_p root set from the quadratic character") {
  for (std::uint64_t p : primes_upto(199)) {
    if (p % 4 != 3) continue;
    std::set<std::uint64_t> sq;
    for (std::uint64_t x = 1; x < p; ++x) sq.insert(x * x % p);
    FpPoly want = FpPoly::constant(p, 1);
    for (std::uint64_t t = 2; t < p; ++t)
      if (sq.count(t - 1) && !sq.count(t)) want = want * FpPoly(p, {-static_cast<std::int64_t>(t), 1});
    CHECK(gp_poly(p) == want);
    CHECK(gp_poly(p).degree() == static_cast<int>((p + 1) / 4));
    CHECK(is_reciprocal(gp_poly(p)));
  }
  CHECK_THROWS(gp_poly(13));
}

TEST_CASE("vanishing windows") {
  std::map<Family, int> seen;
  for (std::uint64_t p : primes_upto(400)) {
    for (Family f : {Family::W0, Family::W1, Family::V0, Family::V1}) {
      if (!window_admissible(f, p)) continue;
      const VanishingWindow w = vanishing_window(f, p);
      CHECK(w.ok);
      const auto h = family_params(f);
      for (int m = w.lo + 1; m < w.hi; ++m) {
        const Rat c = direct_coeff(h, m);
        CHECK((c == 0 || padic_valuation(c, p) >= 1));
      }
      ++seen[f];
    }
  }
  for (auto [f, count] : seen) CHECK(count >= 8);
  CHECK_THROWS(vanishing_window(Family::U0, 23));
  CHECK_THROWS(vanishing_window(Family::W0, 11));
}

TEST_CASE("hexagonal constant is -18") {
  for (std::uint64_t p : primes_upto(199)) {
    if (p % 12 == 11) CHECK(PrimeField(p).from_rat(hex_constant(Family::V0, p)) == FpElem(-18, p));
    if (p % 12 == 5) CHECK(PrimeField(p).from_rat(hex_constant(Family::V1, p)) == FpElem(-18, p));
  }
  CHECK_THROWS(hex_constant(Family::V0, 17));
}

TEST_CASE("series identities to order 40") {
  CHECK(check_theta_z_hypergeometric(40).holds);
  CHECK(check_theta_h_hypergeometric(40).holds);
  CHECK(check_e4_hypergeometric(40).holds);
  for (Family f : {Family::U0, Family::W0, Family::V0}) CHECK(check_euler_transform(f, 40).holds);
  CHECK(check_cubic_transform(40).holds);
  CHECK(check_degenerate_transform(40).holds);
  CHECK_THROWS(check_euler_transform(Family::U1, 10));
}

TEST_CASE("a deliberately wrong identity is caught") {
  // theta_Z against E4^{1/4} 2F1(W0): the exponent is off
  const int order = 20;
  const auto c = f21_coefficients(family_params(Family::W0), order - 1);
  const RatSeries rhs = eisenstein(4, order).pow_rational(make_rat(1, 4)) * compose<Rat>(c, j_reciprocal_1728(order));
  CHECK(first_mismatch(theta_z(order), rhs).has_value());
}

TEST_CASE("polynomial transforms") {
  for (std::uint64_t p : primes_upto(199)) {
    if (p % 4 == 3) {
      const int k = static_cast<int>((p + 1) / 2);
      CHECK(lambda_transform(reduce_poly(theta_z_polynomial(k), p), weight_indices(k)) == gp_poly(p));
    }
    if (p % 3 == 2) {
      const int k = static_cast<int>(p + 1);
      const WeightIndices w = weight_indices(k);
      CHECK(t3_transform(reduce_poly(theta_h_polynomial(k), p), w) == t3_transform_expected(p, w.b));
    }
  }
  // a perturbed polynomial no longer transforms correctly
  FpPoly P = reduce_poly(theta_z_polynomial(52), 103);
  P = P + FpPoly::constant(103, 1);
  CHECK_FALSE(lambda_transform(P, weight_indices(52)) == gp_poly(103));
  CHECK_THROWS(lambda_transform(FpPoly::monomial(103, 9, 1), weight_indices(52)));
}
