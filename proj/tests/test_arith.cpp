#include <doctest.h>

#include "thetaforms/exact_arith.hpp"

#include <set>

using namespace thetaforms;

namespace {

// Akiyama-Tanigawa; yields B_1 = +1/2, even indices agree with the usual convention.
Rat bernoulli_at(int n) {
  std::vector<Rat> a(static_cast<std::size_t>(n) + 1);
  for (int m = 0; m <= n; ++m) {
    a[static_cast<std::size_t>(m)] = Rat(1, m + 1);
    for (int j = m; j >= 1; --j)
      a[static_cast<std::size_t>(j - 1)] = j * (a[static_cast<std::size_t>(j - 1)] - a[static_cast<std::size_t>(j)]);
  }
  return a[0];
}

bool trial_division_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("rationals stay reduced") {
  const Rat x = make_rat(6, -4);
  CHECK(x.get_num() == -3);
  CHECK(x.get_den() == 2);
  CHECK(make_rat(0, 7).get_den() == 1);
  CHECK_THROWS_AS(make_rat(1, 0), std::domain_error);
  CHECK(to_string(make_rat(-5, 10)) == "-1/2");
}

TEST_CASE("bernoulli numbers match the Akiyama-Tanigawa recurrence") {
  for (int k = 2; k <= 60; k += 2) CHECK(bernoulli(k) == bernoulli_at(k));
  CHECK(bernoulli(12) == make_rat(-691, 2730));
  CHECK(bernoulli(1) == make_rat(-1, 2));
  CHECK_THROWS(bernoulli(3));
}

TEST_CASE("primality against trial division") {
  for (std::uint64_t n = 0; n < 3000; ++n) CHECK(is_prime(n) == trial_division_prime(n));
}

TEST_CASE("legendre symbol against the set of squares") {
  for (std::uint64_t p = 3; p < 200; ++p) {
    if (!trial_division_prime(p)) continue;
    std::set<std::uint64_t> sq;
    for (std::uint64_t x = 1; x < p; ++x) sq.insert(x * x % p);
    for (std::int64_t a = -3 * static_cast<std::int64_t>(p); a < 3 * static_cast<std::int64_t>(p); ++a) {
      const auto r = static_cast<std::uint64_t>(((a % static_cast<std::int64_t>(p)) + static_cast<std::int64_t>(p)) %
                                                static_cast<std::int64_t>(p));
      const int want = r == 0 ? 0 : (sq.count(r) ? 1 : -1);
      REQUIRE(legendre_symbol(a, p) == want);
    }
  }
}

TEST_CASE("p-adic valuation") {
  CHECK(padic_valuation(Integer(7 * 7 * 7 * 2), 7) == 3);
  CHECK(padic_valuation(make_rat(5, 49), 7) == -2);
  CHECK(is_p_integral(make_rat(5, 3), 7));
  CHECK_FALSE(is_p_integral(make_rat(5, 21), 7));
  CHECK_THROWS_AS(padic_valuation(Integer(0), 7), std::domain_error);
}

TEST_CASE("prime field arithmetic") {
  PrimeField F(103);
  for (std::int64_t a = 1; a < 103; ++a) CHECK(F(a) * F(a).inv() == F(1));
  CHECK(F(-1).value() == 102);
  CHECK(F.from_rat(make_rat(1, 2)) * F(2) == F(1));
  CHECK_THROWS_AS(F.from_rat(make_rat(1, 103)), std::domain_error);
  CHECK_THROWS(PrimeField(91));
  CHECK_THROWS(FpElem(0, 103).inv());
}

TEST_CASE("cube root of 2 is the unique solution of x^3 = 2") {
  for (std::uint64_t p = 5; p < 300; ++p) {
    if (!trial_division_prime(p) || p % 3 != 2) continue;
    std::vector<std::uint64_t> sols;
    for (std::uint64_t x = 0; x < p; ++x)
      if (x * x % p * x % p == 2 % p) sols.push_back(x);
    REQUIRE(sols.size() == 1);
    CHECK(cube_root_of_2(p).value() == sols[0]);
  }
  CHECK_THROWS(cube_root_of_2(7));
}

TEST_CASE("F_{p^2} arithmetic") {
  for (std::uint64_t p : {5u, 7u, 11u, 43u}) {
    const Fp2Field F2(p);
    CHECK(legendre_symbol(static_cast<std::int64_t>(F2.d), p) == -1);
    const Fp2Elem w = F2.omega();
    CHECK(w * w == F2(static_cast<std::int64_t>(F2.d)));
    for (std::uint64_t i = 1; i < F2.size(); i += 7) {
      const Fp2Elem x = F2.element(i);
      CHECK(x * x.inv() == F2(1));
      CHECK(x.frobenius() == x.pow(p));
      CHECK(F2.embed(x.norm()) == x.pow(p + 1));
      CHECK(F2.index(x) == i);
    }
    // the multiplicative group is cyclic of order p^2 - 1
    for (std::uint64_t i = 1; i < F2.size(); ++i) REQUIRE(F2.element(i).pow(F2.size() - 1) == F2(1));
  }
}
