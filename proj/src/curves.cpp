#include "thetaforms/curves.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace thetaforms {

std::string to_string(const TorsionStructure& t) {
  return "(" + std::to_string(t.d1) + "," + std::to_string(t.d2) + ")";
}

FpCurve short_weierstrass(std::uint64_t p, std::int64_t a, std::int64_t b) {
  PrimeField F(p);
  return FpCurve(F, F(0), F(a), F(b));
}

FpCurve legendre_curve(const FpElem& lambda) {
  PrimeField F(lambda.modulus());
  if (lambda.is_zero() || lambda == F(1)) throw std::domain_error("legendre_curve: lambda must not be 0 or 1");
  return FpCurve(F, -(F(1) + lambda), lambda, F(0));
}

namespace {

template <class Field>
CurveModel<Field> model_with_j(const typename Field::Elem& j, const Field& F) {
  if (is_zero(j)) return CurveModel<Field>(F, F(0), F(0), F(1));
  const auto c = F(1728) - j;
  if (is_zero(c)) return CurveModel<Field>(F, F(0), F(1), F(0));
  return CurveModel<Field>(F, F(0), F(3) * j * c, F(2) * j * c * c);
}

}  // namespace

FpCurve curve_with_j(const FpElem& j) { return model_with_j(j, PrimeField(j.modulus())); }

Fp2Curve curve_with_j(const Fp2Elem& j, const Fp2Field& field) { return model_with_j(j, field); }

std::uint64_t point_count(const FpCurve& E) {
  const std::uint64_t p = E.field().p;
  std::int64_t s = 0;
  for (std::uint64_t x = 0; x < p; ++x)
    s += legendre_symbol(static_cast<std::int64_t>(E.rhs(E.field().element(x)).value()), p);
  return static_cast<std::uint64_t>(static_cast<std::int64_t>(p) + 1 + s);
}

TorsionStructure legendre_4torsion_predicted(const FpElem& lambda) {
  const std::uint64_t p = lambda.modulus();
  if (p % 4 != 3) throw std::invalid_argument("legendre_4torsion_predicted: needs p = 3 mod 4");
  PrimeField F(p);
  if (lambda.is_zero() || lambda == F(1)) throw std::domain_error("lambda must not be 0 or 1");
  const auto sq = [p](const FpElem& x) { return legendre_symbol(static_cast<std::int64_t>(x.value()), p) == 1; };
  if (sq(-lambda) && sq(lambda - F(1))) return {2, 2};
  return {2, 4};
}

std::vector<FpElem> psi4_roots(const FpElem& lambda) {
  PrimeField F(lambda.modulus());
  if (lambda.is_zero() || lambda == F(1)) throw std::domain_error("lambda must not be 0 or 1");
  const FpPoly q1(F.p, std::vector<FpElem>{-lambda, F(0), F(1)});
  const FpPoly q2(F.p, std::vector<FpElem>{lambda, F(-2), F(1)});
  const FpPoly q3(F.p, std::vector<FpElem>{lambda, F(-2) * lambda, F(1)});
  std::set<FpElem> out;
  for (const auto* q : {&q1, &q2, &q3})
    for (const auto& r : roots_brute(*q)) out.insert(r);
  return {out.begin(), out.end()};
}

namespace {

bool exceptional(const FpElem& j) { return j.is_zero() || j == FpElem(1728, j.modulus()); }
bool exceptional(const Fp2Elem& j) { return j.is_zero() || j == lift(j, 1728); }

}  // namespace

std::vector<FpElem> legendre_j_set(std::uint64_t p) {
  PrimeField F(p);
  std::set<FpElem> out;
  const auto sp = static_cast<std::int64_t>(p);
  for (std::int64_t l = 2; l < sp; ++l)
    if (legendre_symbol(-l, p) == 1 && legendre_symbol(l - 1, p) == 1) {
      const FpElem j = j_of_legendre(F(l));
      if (!exceptional(j)) out.insert(j);
    }
  return {out.begin(), out.end()};
}

std::vector<FpElem> legendre_curve_set(std::uint64_t p) {
  PrimeField F(p);
  SqrtTable<PrimeField> sq(F);
  std::set<FpElem> out;
  for (std::uint64_t l = 2; l < p; ++l) {
    const FpCurve E = legendre_curve(F.element(l));
    if (n_torsion_structure(E, 4, sq) == TorsionStructure{2, 2}) {
      const FpElem j = E.j_invariant();
      if (!exceptional(j)) out.insert(j);
    }
  }
  return {out.begin(), out.end()};
}

std::vector<FpElem> weierstrass_curve_set(std::uint64_t p) {
  PrimeField F(p);
  SqrtTable<PrimeField> sq(F);
  std::set<FpElem> out;
  for (std::uint64_t a = 0; a < p; ++a)
    for (std::uint64_t b = 0; b < p; ++b) {
      const FpElem fa = F.element(a), fb = F.element(b);
      const FpElem disc = F(4) * fa * fa * fa + F(27) * fb * fb;
      if (disc.is_zero()) continue;
      const FpCurve E(F, F(0), fa, fb);
      int roots = 0;
      for (std::uint64_t x = 0; x < p; ++x)
        if (E.rhs(F.element(x)).is_zero()) ++roots;
      if (roots != 3) continue;
      bool has4 = false;
      for (std::uint64_t x = 0; x < p && !has4; ++x) {
        const FpElem fx = F.element(x);
        const auto y = sq.sqrt(E.rhs(fx));
        if (!y || y->is_zero()) continue;
        const auto D = E.add(Point<FpElem>{fx, *y, false}, Point<FpElem>{fx, *y, false});
        has4 = !D.infinity && D.y.is_zero();
      }
      if (has4) continue;
      const FpElem j = E.j_invariant();
      if (!exceptional(j)) out.insert(j);
    }
  return {out.begin(), out.end()};
}

std::vector<Fp2Elem> supersingular_j_set(std::uint64_t p) {
  const Fp2Field F2(p);
  const SqrtTable<Fp2Field> sq(F2);
  std::mt19937_64 rng(p);
  std::uniform_int_distribution<std::uint64_t> pick(0, F2.size() - 1);
  const std::int64_t sp = static_cast<std::int64_t>(p);
  const std::int64_t traces[] = {0, sp, -sp, 2 * sp, -2 * sp};
  const std::int64_t q1 = sp * sp + 1;
  std::vector<Fp2Elem> out;
  for (std::uint64_t i = 0; i < F2.size(); ++i) {
    const Fp2Elem j = F2.element(i);
    if (j.in_base_field()) {
      if (point_count(curve_with_j(j.base())) == p + 1) out.push_back(j);
      continue;
    }
    const Fp2Curve E = curve_with_j(j, F2);
    Point<Fp2Elem> P;
    while (P.infinity) {
      const Fp2Elem x = F2.element(pick(rng));
      if (const auto y = sq.sqrt(E.rhs(x))) P = {x, *y, false};
    }
    bool candidate = false;
    for (std::int64_t t : traces)
      if (E.mul(P, static_cast<std::uint64_t>(q1 - t)).infinity) candidate = true;
    if (!candidate) continue;
    const std::int64_t t = q1 - static_cast<std::int64_t>(point_count_table(E, sq));
    if (std::find(std::begin(traces), std::end(traces), t) != std::end(traces)) out.push_back(j);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Fp2Elem> hex_zero_set(std::uint64_t p) {
  if (p % 12 != 5 && p % 12 != 11) throw std::invalid_argument("hex_zero_set: needs p = 5, 11 mod 12");
  const Fp2Field F2(p);
  const Fp2Elem target = -F2.embed(cube_root_of_2(p));
  const std::uint64_t e = (p + 1) / 3;
  std::set<Fp2Elem> out;
  for (std::uint64_t i = 0; i < F2.size(); ++i) {
    const Fp2Elem a = F2.element(i);
    if (!(a.pow(e) == target)) continue;
    const Fp2Elem s = a + F2(4);
    const Fp2Elem den = a * s * s * s;
    if (den.is_zero()) continue;
    const Fp2Elem u = F2(2) * a - F2(1);
    const Fp2Elem j = F2(6912) * u * u * u / den;
    if (!exceptional(j)) out.insert(j);
  }
  return {out.begin(), out.end()};
}

FpPoly product_over_roots(const std::vector<Fp2Elem>& roots, std::uint64_t p) {
  std::set<Fp2Elem> all(roots.begin(), roots.end());
  FpPoly acc = FpPoly::constant(p, 1);
  for (const auto& r : all) {
    if (r.in_base_field()) {
      acc = acc * FpPoly(p, std::vector<FpElem>{-r.base(), FpElem(1, p)});
      continue;
    }
    if (!all.count(r.frobenius())) throw std::domain_error("product_over_roots: root set is not Frobenius-stable");
    if (r.c1() > p - r.c1()) continue;
    const FpElem trace = FpElem(2, p) * r.base();
    acc = acc * FpPoly(p, std::vector<FpElem>{r.norm(), -trace, FpElem(1, p)});
  }
  return acc;
}

FpPoly product_over_roots(const std::vector<FpElem>& roots, std::uint64_t p) {
  std::set<FpElem> all(roots.begin(), roots.end());
  FpPoly acc = FpPoly::constant(p, 1);
  for (const auto& r : all) acc = acc * FpPoly(p, std::vector<FpElem>{-r, FpElem(1, p)});
  return acc;
}

Fp2Curve hessian_curve(const Fp2Elem& b, const Fp2Field& field) {
  const auto m = hessian_weierstrass(b);
  return Fp2Curve(field, m.a2, m.a4, m.a6);
}

std::vector<Fp2Elem> hessian_j_set(std::uint64_t p) {
  const Fp2Field F2(p);
  const FpElem minus2(-2, p);
  std::set<Fp2Elem> out;
  for (std::uint64_t i = 0; i < F2.size(); ++i) {
    const Fp2Elem b = F2.element(i);
    if (!(b.norm() == minus2) || b * b * b == F2(1)) continue;
    const Fp2Elem j = hessian_j(b);
    if (!exceptional(j)) out.insert(j);
  }
  return {out.begin(), out.end()};
}

HessianCheck hessian_proposition_check(std::uint64_t p, int samples) {
  if (p % 12 != 5 && p % 12 != 11) throw std::invalid_argument("hessian_proposition_check: needs p = 5, 11 mod 12");
  HessianCheck out{true, true, 0, ""};
  const auto hs = hessian_j_set(p);
  const auto zs = hex_zero_set(p);
  out.set_size = hs.size();
  if (hs != zs) {
    out.sets_equal = false;
    std::vector<Fp2Elem> diff;
    std::set_symmetric_difference(hs.begin(), hs.end(), zs.begin(), zs.end(), std::back_inserter(diff));
    out.witness = "sizes " + std::to_string(hs.size()) + " vs " + std::to_string(zs.size()) +
                  (diff.empty() ? "" : ", first difference j = " + to_string(diff.front()));
    return out;
  }
  const Fp2Field F2(p);
  const SqrtTable<Fp2Field> sq(F2);
  const FpElem minus2(-2, p);
  int done = 0;
  for (std::uint64_t i = 0; i < F2.size() && done < samples; ++i) {
    const Fp2Elem b = F2.element(i);
    if (!(b.norm() == minus2) || b * b * b == F2(1)) continue;
    ++done;
    const Fp2Curve E = hessian_curve(b, F2);
    if (!(E.j_invariant() == hessian_j(b))) {
      out.torsion_ok = false;
      out.witness = "model j differs from closed form at b = " + to_string(b);
      break;
    }
    const TorsionStructure t = n_torsion_structure(E, 3, sq);
    if (!(t == TorsionStructure{3, 3})) {
      out.torsion_ok = false;
      out.witness = "3-torsion " + to_string(t) + " at b = " + to_string(b);
      break;
    }
  }
  return out;
}

}  // namespace thetaforms
