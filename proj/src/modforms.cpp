#include "thetaforms/modforms.hpp"

#include <random>
#include <string>

namespace thetaforms {

WeightIndices weight_indices(int k) {
  if (k < 4 || k % 2) throw std::invalid_argument("weight must be even and >= 4, got " + std::to_string(k));
  // k mod 12 fixes (a, b); k = 2 mod 12 needs a = 2, b = 1 (so k >= 14).
  static constexpr int kA[6] = {0, 2, 1, 0, 2, 1};
  static constexpr int kB[6] = {0, 1, 0, 1, 0, 1};
  const int r = (k % 12) / 2;
  const int a = kA[r], b = kB[r];
  return {k, (k - 4 * a - 6 * b) / 12, a, b};
}

std::vector<RatSeries> basis(int k, int order) {
  const WeightIndices w = weight_indices(k);
  if (order < w.n + 1) throw std::invalid_argument("basis: order must be at least n_k + 1");
  const RatSeries d = delta(order), e4 = eisenstein(4, order), e6 = eisenstein(6, order);
  const RatSeries e4cubed = e4.pow(3);
  RatSeries common = e4.pow(static_cast<unsigned>(w.a)) * e6.pow(static_cast<unsigned>(w.b));

  // delta_pows[i] = Delta^i, e4_pows[l] = E4^{3l}
  std::vector<RatSeries> delta_pows{RatSeries::constant(Rat(1), order)};
  std::vector<RatSeries> e4_pows{RatSeries::constant(Rat(1), order)};
  for (int i = 1; i <= w.n; ++i) {
    delta_pows.push_back(delta_pows.back() * d);
    e4_pows.push_back(e4_pows.back() * e4cubed);
  }
  std::vector<RatSeries> out;
  out.reserve(static_cast<std::size_t>(w.n) + 1);
  for (int l = 0; l <= w.n; ++l)
    out.push_back(delta_pows[static_cast<std::size_t>(w.n - l)] * e4_pows[static_cast<std::size_t>(l)] * common);
  return out;
}

BasisCoordinates basis_coordinates(const RatSeries& f, int k) {
  const WeightIndices w = weight_indices(k);
  const int m = w.n + 1;
  if (f.shift() != 0 && f.shift() > 0) {
    return basis_coordinates(f.normalized_to_zero_shift(), k);
  }
  if (f.shift() < 0) throw std::invalid_argument("basis_coordinates: Laurent input");
  if (f.order() < m) throw std::invalid_argument("basis_coordinates: need n_k + 1 known coefficients");
  const auto b = basis(k, m);
  // Element l starts at q^{n-l} with coefficient 1, so q^i only sees l >= n - i.
  std::vector<Rat> coords(static_cast<std::size_t>(m), Rat(0));
  for (int i = 0; i < m; ++i) {
    const int l = w.n - i;
    Rat residual = f[i];
    for (int l2 = l + 1; l2 <= w.n; ++l2)
      residual -= coords[static_cast<std::size_t>(l2)] * b[static_cast<std::size_t>(l2)][i];
    coords[static_cast<std::size_t>(l)] = residual;
  }
  return {k, std::move(coords)};
}

RatSeries from_coordinates(const BasisCoordinates& c, int order) {
  const auto b = basis(c.k, order);
  if (c.coords.size() != b.size()) throw std::invalid_argument("from_coordinates: coordinate count mismatch");
  RatSeries acc = RatSeries::constant(Rat(0), order);
  for (std::size_t l = 0; l < b.size(); ++l)
    if (c.coords[l] != 0) acc += c.coords[l] * b[l];
  return acc;
}

RatSeries modular_completion(const RatSeries& f, int k, int order) {
  return from_coordinates(basis_coordinates(f, k), order);
}

RatPoly pf_polynomial(const RatSeries& f, int k) { return RatPoly(basis_coordinates(f, k).coords); }

std::optional<int> first_mismatch_mod_p(const RatSeries& f, const RatSeries& g, std::uint64_t p, int m) {
  PrimeField field(p);
  for (int i = 0; i < m; ++i) {
    const Rat a = f.coeff(i), b = g.coeff(i);
    for (const Rat* x : {&a, &b})
      if (!is_p_integral(*x, p))
        throw NotPIntegral(i, "coefficient of q^" + std::to_string(i) + " (" + x->get_str() + ") is not " +
                                  std::to_string(p) + "-integral");
    if (!(field.from_rat(a) == field.from_rat(b))) return i;
  }
  return std::nullopt;
}

bool congruent_mod_p(const RatSeries& f, const RatSeries& g, std::uint64_t p, int m) {
  return !first_mismatch_mod_p(f, g, p, m).has_value();
}

bool check_almost_zero(int k, std::uint64_t p, int trials, std::uint64_t seed) {
  const WeightIndices w = weight_indices(k);
  PrimeField field(p);
  const int order = default_order(k);
  const auto b = basis(k, order);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-1000, 1000);
  const long pl = static_cast<long>(p);
  for (int t = 0; t < trials; ++t) {
    // Prescribe q^0..q^n as multiples of p; the remaining coefficients are whatever M_k forces.
    std::vector<Rat> head(static_cast<std::size_t>(w.n) + 1);
    for (auto& c : head) c = Rat(pl * dist(rng));
    std::vector<Rat> coords(head.size(), Rat(0));
    for (int i = 0; i <= w.n; ++i) {
      Rat residual = head[static_cast<std::size_t>(i)];
      for (int l2 = w.n - i + 1; l2 <= w.n; ++l2)
        residual -= coords[static_cast<std::size_t>(l2)] * b[static_cast<std::size_t>(l2)][i];
      coords[static_cast<std::size_t>(w.n - i)] = residual;
    }
    RatSeries f = RatSeries::constant(Rat(0), order);
    for (std::size_t l = 0; l < b.size(); ++l) f += coords[l] * b[l];
    for (int i = 0; i < order; ++i) {
      if (!is_p_integral(f[i], p)) return false;
      if (!field.from_rat(f[i]).is_zero()) return false;
    }
  }
  return true;
}

namespace {

RatPoly polynomial_of(const RatSeries& f, int k) { return pf_polynomial(f, k); }

}  // namespace

RatPoly theta_z_polynomial(int k) { return polynomial_of(theta_z(weight_indices(k).n + 1), k); }

RatPoly theta_h_polynomial(int k) { return polynomial_of(theta_h(weight_indices(k).n + 1), k); }

RatPoly eisenstein_polynomial(int k) { return polynomial_of(eisenstein(k, weight_indices(k).n + 1), k); }

RatPoly extremal_polynomial(int k) {
  return polynomial_of(RatSeries::constant(Rat(1), weight_indices(k).n + 1), k);
}

}  // namespace thetaforms
