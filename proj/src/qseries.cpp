#include "thetaforms/qseries.hpp"

#include <cmath>
#include <sstream>

namespace thetaforms {

namespace {

void require_order(int order) {
  if (order < 1) throw std::invalid_argument("series order must be at least 1");
}

// prod_{n>=1} (1 - q^n) to the given order.
RatSeries euler_product(int order) {
  RatSeries acc = RatSeries::constant(Rat(1), order);
  for (int n = 1; n < order; ++n) {
    std::vector<Rat> v(static_cast<std::size_t>(order), Rat(0));
    v[0] = 1;
    v[static_cast<std::size_t>(n)] = -1;
    acc = acc * RatSeries(std::move(v));
  }
  return acc;
}

// f / q for f with zero constant term.
RatSeries divide_by_q(const RatSeries& f) {
  RatSeries g = f.normalized_to_zero_shift();
  if (g[0] != 0) throw std::domain_error("divide_by_q: nonzero constant term");
  return RatSeries(std::vector<Rat>(g.coeffs().begin() + 1, g.coeffs().end()));
}

Integer divisor_power_sum(int n, int power) {
  Integer s = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d) continue;
    Integer t;
    mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(power));
    s += t;
  }
  return s;
}

}  // namespace

FpSeries reduce_series(const RatSeries& f, std::uint64_t p) {
  PrimeField field(p);
  std::vector<FpElem> v;
  v.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) v.push_back(field.from_rat(c));
  return FpSeries(std::move(v), f.shift());
}

std::string to_string(const RatSeries& f, int terms) {
  std::ostringstream os;
  const int n = terms < 0 ? f.order() : std::min(terms, f.order());
  bool first = true;
  for (int i = 0; i < n; ++i) {
    const Rat& c = f[i];
    if (c == 0) continue;
    const int e = f.shift() + i;
    Rat mag = c < 0 ? Rat(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "q";
    if (e != 1) os << "^" << e;
  }
  if (first) os << "0";
  os << " + O(q^" << f.shift() + n << ")";
  return os.str();
}

RatSeries eisenstein(int k, int order) {
  require_order(order);
  if (k < 4 || k % 2) throw std::invalid_argument("eisenstein: weight must be even and >= 4");
  const Rat factor = Rat(-2 * k) / bernoulli(k);
  std::vector<Rat> v(static_cast<std::size_t>(order));
  v[0] = 1;
  for (int n = 1; n < order; ++n) v[static_cast<std::size_t>(n)] = factor * Rat(divisor_power_sum(n, k - 1));
  return RatSeries(std::move(v));
}

RatSeries delta(int order) {
  require_order(order);
  std::vector<Rat> v(static_cast<std::size_t>(order), Rat(0));
  if (order > 1) {
    RatSeries p24 = euler_product(order - 1).pow(24);
    for (int i = 1; i < order; ++i) v[static_cast<std::size_t>(i)] = p24[i - 1];
  }
  return RatSeries(std::move(v));
}

RatSeries delta_from_eisenstein(int order) {
  RatSeries e4 = eisenstein(4, order), e6 = eisenstein(6, order);
  return make_rat(1, 1728) * (e4.pow(3) - e6.pow(2));
}

RatSeries j_invariant(int order) {
  require_order(order);
  RatSeries e4cubed = eisenstein(4, order).pow(3);
  RatSeries delta_over_q = divide_by_q(delta(order + 1));
  return (e4cubed * delta_over_q.invert_unit()).shifted(-1);
}

RatSeries j_reciprocal_1728(int order) {
  require_order(order);
  return Rat(1728) * delta(order) * eisenstein(4, order).pow(3).invert_unit();
}

RatSeries theta_z(int order) {
  require_order(order);
  std::vector<Rat> v(static_cast<std::size_t>(order), Rat(0));
  v[0] = 1;
  for (int n = 1; n * n < order; ++n) v[static_cast<std::size_t>(n * n)] = 2;
  return RatSeries(std::move(v));
}

RatSeries theta_h(int order) {
  require_order(order);
  // m^2 + mn + n^2 >= (3/4) max(|m|, |n|)^2, so this box covers every exponent < order.
  const int box = static_cast<int>(std::ceil(std::sqrt(4.0 * order / 3.0))) + 1;
  std::vector<long> counts(static_cast<std::size_t>(order), 0);
  for (int m = -box; m <= box; ++m)
    for (int n = -box; n <= box; ++n) {
      const long e = static_cast<long>(m) * m + static_cast<long>(m) * n + static_cast<long>(n) * n;
      if (e < order) ++counts[static_cast<std::size_t>(e)];
    }
  std::vector<Rat> v;
  v.reserve(counts.size());
  for (long c : counts) v.emplace_back(c);
  return RatSeries(std::move(v));
}

EtaSeries eta(int order) {
  require_order(order);
  return {make_rat(1, 24), euler_product(order)};
}

RatSeries eta_quotient(std::span<const EtaFactor> factors, int order) {
  require_order(order);
  long shift24 = 0;
  for (const auto& f : factors) {
    if (f.scale < 1) throw std::invalid_argument("eta_quotient: scale must be positive");
    shift24 += static_cast<long>(f.scale) * f.exponent;
  }
  if (shift24 % 24 != 0) throw std::domain_error("eta_quotient: total q-shift is not an integer");
  const int shift = static_cast<int>(shift24 / 24);

  const RatSeries base = euler_product(order);
  RatSeries acc = RatSeries::constant(Rat(1), order);
  for (const auto& f : factors) {
    RatSeries scaled = base.substitute_power(f.scale).truncated(order);
    RatSeries term = scaled.pow(static_cast<unsigned>(std::abs(f.exponent)));
    acc = acc * (f.exponent < 0 ? term.invert_unit() : term);
  }
  if (shift <= 0) return acc.shifted(shift);
  std::vector<Rat> v(static_cast<std::size_t>(order), Rat(0));
  for (int i = shift; i < order; ++i) v[static_cast<std::size_t>(i)] = acc[i - shift];
  return RatSeries(std::move(v));
}

RatSeries t3(int order) {
  const EtaFactor factors[] = {{3, 12}, {1, -12}};
  RatSeries x = eta_quotient(factors, order);
  RatSeries denom = RatSeries::constant(Rat(1), order) + Rat(27) * x;
  return Rat(-108) * x * denom.invert_unit();
}

RatSeries lambda_eta_quotient(int order) {
  const EtaFactor factors[] = {{1, 8}, {4, 16}, {2, -24}};
  return Rat(16) * eta_quotient(factors, order);
}

RelationCheck verify_hauptmodul_relation(Hauptmodul which, int order) {
  require_order(order);
  const RatSeries one = RatSeries::constant(Rat(1), order);
  RatSeries lhs = one, rhs = one;
  if (which == Hauptmodul::T3) {
    // (q j) (t3 / q) (t3 + 4)^3 = 6912 (2 t3 - 1)^3
    RatSeries qj = j_invariant(order).shifted(1);
    RatSeries t = t3(order + 1);
    RatSeries t_over_q = divide_by_q(t);
    RatSeries tt = t.truncated(order);
    lhs = qj * t_over_q * (tt + Rat(4) * one).pow(3);
    rhs = Rat(6912) * (Rat(2) * tt - one).pow(3);
  } else {
    // (q^2 j(q^2)) (L / q)^2 (L - 1)^2 = 256 (1 - L + L^2)^3
    RatSeries qj2 = j_invariant(order).shifted(1).substitute_power(2).truncated(order);
    RatSeries l = lambda_eta_quotient(order + 1);
    RatSeries l_over_q = divide_by_q(l);
    RatSeries ll = l.truncated(order);
    lhs = qj2 * l_over_q.pow(2) * (ll - one).pow(2);
    rhs = Rat(256) * (one - ll + ll * ll).pow(3);
  }
  auto bad = first_mismatch(lhs, rhs);
  return {!bad.has_value(), bad};
}

}  // namespace thetaforms
