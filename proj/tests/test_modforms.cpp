#include <doctest.h>

#include "thetaforms/fppoly.hpp"
#include "thetaforms/modforms.hpp"

using namespace thetaforms;

namespace {

Rat big(const char* s) { return Rat(Integer(s)); }

}  // namespace

TEST_CASE("weight decomposition") {
  CHECK(weight_indices(4) == WeightIndices{4, 0, 1, 0});
  CHECK(weight_indices(6) == WeightIndices{6, 0, 0, 1});
  CHECK(weight_indices(12) == WeightIndices{12, 1, 0, 0});
  CHECK(weight_indices(14) == WeightIndices{14, 0, 2, 1});
  CHECK(weight_indices(52) == WeightIndices{52, 4, 1, 0});
  CHECK(weight_indices(108) == WeightIndices{108, 9, 0, 0});
  for (int k = 4; k < 200; k += 2) {
    const auto w = weight_indices(k);
    CHECK(12 * w.n + 4 * w.a + 6 * w.b == k);
    // dim M_k = floor(k/12) + (k mod 12 != 2)
    CHECK(w.dimension() == k / 12 + (k % 12 == 2 ? 0 : 1));
  }
  CHECK_THROWS_AS(weight_indices(7), std::invalid_argument);
  CHECK_THROWS_AS(weight_indices(2), std::invalid_argument);
}

TEST_CASE("basis elements are triangular") {
  const auto B = basis(52, 12);
  REQUIRE(B.size() == 5);
  for (int l = 0; l < 5; ++l) {
    CHECK(B[static_cast<std::size_t>(l)].valuation() == 4 - l);
    CHECK(B[static_cast<std::size_t>(l)][4 - l] == 1);
  }
  CHECK_THROWS(basis(52, 3));
}

TEST_CASE("completion of a modular form is itself") {
  for (int k : {12, 16, 24, 36}) {
    const int order = default_order(k);
    const RatSeries e = eisenstein(k, order);
    CHECK_FALSE(first_mismatch(modular_completion(e, k, order), e).has_value());
  }
  // E4 E6 = E10, and Delta E4 sits in M_16
  const RatSeries f = eisenstein(4, 20) * eisenstein(6, 20);
  CHECK_FALSE(first_mismatch(modular_completion(f, 10, 20), eisenstein(10, 20)).has_value());
  const RatSeries g = delta(20) * eisenstein(4, 20);
  CHECK_FALSE(first_mismatch(modular_completion(g, 16, 20), g).has_value());
  const auto c = basis_coordinates(g, 16);
  CHECK(c.coords == std::vector<Rat>{Rat(1), Rat(0)});
}

TEST_CASE("weight 52 theta example") {
  const auto c = basis_coordinates(theta_z(5), 52);
  CHECK(c.coords == std::vector<Rat>{big("27800506386"), big("-776608440"), big("2887488"), big("-3118"), Rat(1)});
  const RatSeries f = from_coordinates(c, 7);
  CHECK(f[0] == 1);
  CHECK(f[1] == 2);
  CHECK(f[2] == 0);
  CHECK(f[3] == 0);
  CHECK(f[4] == 2);
  CHECK(f[5] == big("95037348924"));
  CHECK(f[6] == big("1017845969208768"));
  const RatPoly P = theta_z_polynomial(52);
  CHECK(P.to_string("j") == "j^4 - 3118*j^3 + 2887488*j^2 - 776608440*j + 27800506386");
  const auto roots = roots_brute(reduce_poly(P, 103));
  std::vector<std::uint64_t> r;
  for (const auto& x : roots) r.push_back(x.value());
  CHECK(r == std::vector<std::uint64_t>{58, 89, 93, 97});
}

TEST_CASE("weight 108 hexagonal theta example") {
  const RatSeries f = modular_completion(theta_h(10), 108, 11);
  const long head[] = {1, 6, 0, 6, 6, 0, 0, 12, 0, 6};
  for (int i = 0; i < 10; ++i) CHECK(f[i] == head[i]);
  CHECK(f[10] == big("1496265431568669020160"));
  CHECK(theta_h_polynomial(108).to_string("j") ==
        "j^9 - 6474*j^8 + 16858944*j^7 - 22595806434*j^6 + 16561497291750*j^5 - 6514224685621164*j^4 + "
        "1257337803035458656*j^3 - 97749420668058422880*j^2 + 1958195577341989938240*j - "
        "2139590870258478384000");
  const FpPoly expected = FpPoly(107, {16, 1}) * FpPoly(107, {42, 0, 1}) * FpPoly(107, {42, 6, 1}) *
                          FpPoly(107, {42, 33, 1}) * FpPoly(107, {42, 105, 1});
  CHECK(reduce_poly(theta_h_polynomial(108), 107) == expected);
}

TEST_CASE("P of an Eisenstein series at small weight") {
  // E4 = E4 * Delta^0: P = 1; E12 = E4^3 + c Delta with P(j) = j + c
  CHECK(eisenstein_polynomial(4) == RatPoly({Rat(1)}));
  const RatPoly P12 = eisenstein_polynomial(12);
  CHECK(P12.degree() == 1);
  CHECK(P12.coeff(1) == 1);
  CHECK(P12.coeff(0) == eisenstein(12, 2)[1] - 720);
}

TEST_CASE("congruence helpers") {
  const RatSeries a = eisenstein(4, 10), b = RatSeries::constant(Rat(1), 10);
  CHECK(congruent_mod_p(a, b, 5, 10));
  CHECK(first_mismatch_mod_p(a, b, 7, 10) == std::optional<int>(1));
  CHECK_THROWS_AS(first_mismatch_mod_p(eisenstein(12, 5), b, 691, 5), std::domain_error);
}

TEST_CASE("extremal form is congruent to E_{p-1}") {
  for (std::uint64_t p : {5u, 13u, 23u, 47u}) {
    const int k = static_cast<int>(p - 1);
    const int order = default_order(k);
    const RatSeries ext = modular_completion(RatSeries::constant(Rat(1), order), k, order);
    CHECK(congruent_mod_p(ext, eisenstein(k, order), p, order));
    CHECK(reduce_poly(extremal_polynomial(k), p) == reduce_poly(eisenstein_polynomial(k), p));
  }
}

TEST_CASE("forms with a head divisible by p are divisible by p") {
  CHECK(check_almost_zero(52, 103, 3));
  CHECK(check_almost_zero(30, 31, 3, 99));
}

TEST_CASE("input validation") {
  CHECK_THROWS(basis_coordinates(j_invariant(10), 12));
  CHECK_THROWS(basis_coordinates(theta_z(2), 52));
}
