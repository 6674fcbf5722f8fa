#include "thetaforms/hyperpoly.hpp"

namespace thetaforms {

Rat pochhammer(const Rat& x, int n) {
  if (n < 0) throw std::invalid_argument("pochhammer: n must be non-negative");
  Rat r(1);
  for (int i = 0; i < n; ++i) r *= x + i;
  return r;
}

HGParams family_params(Family f) {
  switch (f) {
    case Family::U0: return {make_rat(1, 12), make_rat(5, 12), make_rat(1)};
    case Family::U1: return {make_rat(7, 12), make_rat(11, 12), make_rat(1)};
    case Family::W0: return {make_rat(-1, 24), make_rat(7, 24), make_rat(3, 4)};
    case Family::W1: return {make_rat(11, 24), make_rat(19, 24), make_rat(3, 4)};
    case Family::V0: return {make_rat(-1, 12), make_rat(1, 4), make_rat(2, 3)};
    case Family::V1: return {make_rat(5, 12), make_rat(3, 4), make_rat(2, 3)};
  }
  throw std::invalid_argument("unknown family");
}

std::string family_name(Family f) {
  static const char* names[] = {"U0", "U1", "W0", "W1", "V0", "V1"};
  return names[static_cast<int>(f)];
}

namespace {
void check_b(int b) {
  if (b != 0 && b != 1) throw std::invalid_argument("family index b must be 0 or 1");
}
}  // namespace

Family u_family(int b) { check_b(b); return b ? Family::U1 : Family::U0; }
Family w_family(int b) { check_b(b); return b ? Family::W1 : Family::W0; }
Family v_family(int b) { check_b(b); return b ? Family::V1 : Family::V0; }

std::vector<Rat> f21_coefficients(const HGParams& params, int M) {
  if (M < 0) throw std::invalid_argument("f21_coefficients: M must be non-negative");
  if (params.gamma <= 0 && params.gamma.get_den() == 1)
    throw std::invalid_argument("f21_coefficients: gamma is a non-positive integer");
  std::vector<Rat> c;
  c.reserve(static_cast<std::size_t>(M) + 1);
  c.emplace_back(1);
  for (int m = 0; m < M; ++m)
    c.push_back(c.back() * (params.alpha + m) * (params.beta + m) / ((params.gamma + m) * (m + 1)));
  return c;
}

RatSeries f21_series(const HGParams& params, int order) {
  return RatSeries(f21_coefficients(params, order - 1));
}

RatPoly truncated_poly(Family f, int n) {
  if (n < 0) throw std::invalid_argument("truncated_poly: n must be non-negative");
  const auto c = f21_coefficients(family_params(f), n);
  std::vector<Rat> out(static_cast<std::size_t>(n) + 1);
  Integer scale = 1;
  for (int m = 0; m <= n; ++m) {
    out[static_cast<std::size_t>(n - m)] = c[static_cast<std::size_t>(m)] * Rat(scale);
    scale *= 1728;
  }
  return RatPoly(std::move(out));
}

namespace {

void require_3_mod_4(std::uint64_t p) {
  PrimeField check(p);
  if (p % 4 != 3) throw std::invalid_argument("G_p needs p = 3 mod 4, got " + std::to_string(p));
}

}  // namespace

std::vector<Rat> gp_coefficients(std::uint64_t p) {
  require_3_mod_4(p);
  return f21_coefficients({make_rat(-1, 4), make_rat(1, 4), make_rat(1, 2)}, static_cast<int>((p + 1) / 4));
}

FpPoly gp_poly(std::uint64_t p) { return reduce_poly(RatPoly(gp_coefficients(p)), p); }

FpPoly gp_root_product(std::uint64_t p) {
  require_3_mod_4(p);
  FpPoly acc = FpPoly::constant(p, 1);
  const auto sp = static_cast<std::int64_t>(p);
  for (std::int64_t t = 1; t < sp; ++t)
    if (legendre_symbol(t - 1, p) == 1 && legendre_symbol(t, p) == -1) acc = acc * FpPoly(p, {-t, 1});
  return acc;
}

std::vector<FpElem> gp_expected_power_sums(std::uint64_t p, int V) {
  PrimeField field(p);
  std::vector<FpElem> out;
  for (int v = 0; v <= V; ++v) {
    Rat fact = pochhammer(Rat(1), v);
    out.push_back(field.from_rat(make_rat(1, 4) * pochhammer(make_rat(1, 2), v) / fact));
  }
  return out;
}

bool window_admissible(Family f, std::uint64_t p) {
  switch (f) {
    case Family::W0: return p % 24 == 23 || p % 24 == 7;
    case Family::W1: return p % 24 == 11 || p % 24 == 19;
    case Family::V0: return p % 12 == 11;
    case Family::V1: return p % 12 == 5;
    default: return false;
  }
}

VanishingWindow vanishing_window(Family f, std::uint64_t p) {
  if (!window_admissible(f, p))
    throw std::invalid_argument("vanishing_window: p = " + std::to_string(p) + " is not admissible for " +
                                family_name(f));
  int n = 0, hi = 0;
  const auto ip = static_cast<int>(p);
  switch (f) {
    case Family::W0: n = ip % 24 == 23 ? (ip + 1) / 24 : (ip - 7) / 24; hi = 6 * n; break;
    case Family::W1: n = ip / 24; hi = 6 * n; break;
    case Family::V0: n = (ip + 1) / 12; hi = 4 * n; break;
    case Family::V1: n = (ip - 5) / 12; hi = 4 * n + 2; break;
    default: break;
  }
  VanishingWindow w{n, n, hi, true, std::nullopt};
  const auto c = f21_coefficients(family_params(f), std::max(hi, 0));
  for (int m = n + 1; m < hi; ++m) {
    const Rat& cm = c[static_cast<std::size_t>(m)];
    if (cm != 0 && padic_valuation(cm, p) < 1) {
      w.ok = false;
      w.witness = m;
      break;
    }
  }
  return w;
}

Rat hex_constant(Family f, std::uint64_t p) {
  if (!((f == Family::V0 && p % 12 == 11) || (f == Family::V1 && p % 12 == 5)))
    throw std::invalid_argument("hex_constant: needs V0 with p = 11 mod 12 or V1 with p = 5 mod 12");
  const int m = static_cast<int>((p + 1) / 3);
  const auto c = f21_coefficients(family_params(f), m);
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 1728, static_cast<unsigned long>(m));
  return c.back() * Rat(scale);
}

// ---------------------------------------------------------------------------

namespace {

RatSeries compose_family(Family f, const RatSeries& inner) {
  const auto c = f21_coefficients(family_params(f), inner.order() - 1);
  return compose<Rat>(c, inner);
}

RelationCheck compare(const RatSeries& a, const RatSeries& b) {
  auto bad = first_mismatch(a, b);
  return {!bad.has_value(), bad};
}

RatSeries var(int order) { return RatSeries::monomial(Rat(1), 1, order); }

}  // namespace

RelationCheck check_theta_z_hypergeometric(int order) {
  const RatSeries f = compose_family(Family::W0, j_reciprocal_1728(order));
  return compare(theta_z(order), eisenstein(4, order).pow_rational(make_rat(1, 8)) * f);
}

RelationCheck check_theta_h_hypergeometric(int order) {
  const RatSeries f = compose_family(Family::V0, j_reciprocal_1728(order));
  return compare(theta_h(order), eisenstein(4, order).pow_rational(make_rat(1, 4)) * f);
}

RelationCheck check_e4_hypergeometric(int order) {
  return compare(eisenstein(4, order).pow_rational(make_rat(1, 4)),
                 compose_family(Family::U0, j_reciprocal_1728(order)));
}

RelationCheck check_euler_transform(Family lower, int order) {
  Family upper;
  switch (lower) {
    case Family::U0: upper = Family::U1; break;
    case Family::W0: upper = Family::W1; break;
    case Family::V0: upper = Family::V1; break;
    default: throw std::invalid_argument("check_euler_transform: lower family must be U0, W0 or V0");
  }
  const HGParams lo = family_params(lower);
  const Rat exponent = lo.gamma - lo.alpha - lo.beta;
  const RatSeries one = RatSeries::constant(Rat(1), order);
  return compare(f21_series(lo, order),
                 (one - var(order)).pow_rational(exponent) * f21_series(family_params(upper), order));
}

RelationCheck check_cubic_transform(int order) {
  const RatSeries one = RatSeries::constant(Rat(1), order), l = var(order);
  const RatSeries a = one - l + l * l;
  const RatSeries z = Rat(27) * (l * l * (l - one).pow(2)) * (Rat(4) * a.pow(3)).invert_unit();
  const RatSeries lhs = compose_family(Family::W0, z);
  const RatSeries rhs =
      a.pow_rational(make_rat(-1, 8)) * f21_series({make_rat(-1, 4), make_rat(1, 4), make_rat(1, 2)}, order);
  return compare(lhs, rhs);
}

RelationCheck check_degenerate_transform(int order) {
  const RatSeries one = RatSeries::constant(Rat(1), order), y = var(order);
  const RatSeries z = y * (y + Rat(4) * one).pow(3) * (Rat(4) * (Rat(2) * y - one).pow(3)).invert_unit();
  return compare(compose_family(Family::V0, z), (one - Rat(2) * y).pow_rational(make_rat(-1, 4)));
}

// ---------------------------------------------------------------------------

FpPoly lambda_transform(const FpPoly& P, const WeightIndices& w) {
  const std::uint64_t p = P.modulus();
  if (P.degree() > w.n) throw std::invalid_argument("lambda_transform: degree exceeds n_k");
  PrimeField F(p);
  const FpPoly a = FpPoly(p, {1, -1, 1});
  const FpPoly b = FpPoly(p, {0, 0, 1, -2, 1});  // l^2 (l-1)^2
  const FpElem half = F(2).inv();
  const FpPoly c(p, std::vector<FpElem>{F(1), -F(3) * half, -F(3) * half, F(1)});
  const FpElem inv256 = F(256).inv();
  const FpPoly a3 = a.pow(3);
  FpPoly acc(p);
  for (int l = 0; l <= P.degree(); ++l) {
    const FpElem coef = P.coeff(l) * inv256.pow(static_cast<std::uint64_t>(w.n - l));
    if (coef.is_zero()) continue;
    acc = acc + coef * (a3.pow(static_cast<unsigned>(l)) * b.pow(static_cast<unsigned>(w.n - l)));
  }
  return acc * a.pow(static_cast<unsigned>(w.a)) * c.pow(static_cast<unsigned>(w.b));
}

FpPoly t3_transform(const FpPoly& P, const WeightIndices& w) {
  const std::uint64_t p = P.modulus();
  if (P.degree() > w.n) throw std::invalid_argument("t3_transform: degree exceeds n_k");
  PrimeField F(p);
  const FpPoly den = FpPoly(p, {0, 1}) * FpPoly(p, {4, 1}).pow(3);
  const FpPoly num = F(6912) * FpPoly(p, {-1, 2}).pow(3);
  FpPoly acc(p);
  for (int l = 0; l <= P.degree(); ++l) {
    if (P.coeff(l).is_zero()) continue;
    acc = acc + P.coeff(l) * (num.pow(static_cast<unsigned>(l)) * den.pow(static_cast<unsigned>(w.n - l)));
  }
  return acc * FpPoly(p, {-2, -10, 1}).pow(static_cast<unsigned>(w.b));
}

FpPoly t3_transform_expected(std::uint64_t p, int b) {
  check_b(b);
  PrimeField F(p);
  if (b == 0 && p % 12 != 11) throw std::invalid_argument("t3_transform_expected: b = 0 needs p = 11 mod 12");
  if (b == 1 && p % 12 != 5) throw std::invalid_argument("t3_transform_expected: b = 1 needs p = 5 mod 12");
  const std::uint64_t e = b == 0 ? (p + 1) / 4 : (p - 5) / 4;
  const FpPoly core = FpPoly::monomial(p, static_cast<int>((p + 1) / 3), 1) +
                      FpPoly::constant(p, static_cast<std::int64_t>(cube_root_of_2(p).value()));
  return F(12).pow(e) * core;
}

}  // namespace thetaforms
