#include "thetaforms/fppoly.hpp"

#include <algorithm>
#include <sstream>

namespace thetaforms {

namespace {

std::uint64_t reduce_signed(std::int64_t v, std::uint64_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(r);
}

void require_same_field(const FpPoly& a, const FpPoly& b) {
  if (a.modulus() != b.modulus()) throw std::invalid_argument("FpPoly: mixed moduli");
}

}  // namespace

FpPoly::FpPoly(std::uint64_t p) : p_(p) {
  if (p < 2) throw std::invalid_argument("FpPoly: modulus must be prime");
}

FpPoly::FpPoly(std::uint64_t p, const std::vector<std::int64_t>& coeffs) : FpPoly(p) {
  c_.reserve(coeffs.size());
  for (auto v : coeffs) c_.push_back(reduce_signed(v, p));
  normalize();
}

FpPoly::FpPoly(std::uint64_t p, std::vector<FpElem> coeffs) : FpPoly(p) {
  c_.reserve(coeffs.size());
  for (const auto& v : coeffs) {
    if (v.modulus() != p) throw std::invalid_argument("FpPoly: coefficient from another field");
    c_.push_back(v.value());
  }
  normalize();
}

FpPoly FpPoly::monomial(std::uint64_t p, int degree, std::int64_t c) {
  std::vector<std::int64_t> v(static_cast<std::size_t>(degree) + 1, 0);
  v.back() = c;
  return FpPoly(p, v);
}

void FpPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpElem FpPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return FpElem(0, p_);
  return FpElem(static_cast<std::int64_t>(c_[static_cast<std::size_t>(i)]), p_);
}

FpPoly FpPoly::monic() const {
  if (is_zero()) return *this;
  return leading().inv() * *this;
}

FpPoly FpPoly::derivative() const {
  FpPoly r(p_);
  if (c_.size() < 2) return r;
  r.c_.resize(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = (c_[i] * (i % p_)) % p_;
  r.normalize();
  return r;
}

FpElem FpPoly::operator()(const FpElem& x) const {
  if (x.modulus() != p_) throw std::invalid_argument("FpPoly: evaluation point from another field");
  std::uint64_t acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = (acc * x.value() + *it) % p_;
  return FpElem(static_cast<std::int64_t>(acc), p_);
}

Fp2Elem FpPoly::operator()(const Fp2Elem& x) const {
  if (x.modulus() != p_) throw std::invalid_argument("FpPoly: evaluation point from another field");
  Fp2Elem acc = lift(x, 0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Fp2Elem(*it, 0, p_, x.nonresidue());
  return acc;
}

FpPoly operator+(const FpPoly& a, const FpPoly& b) {
  require_same_field(a, b);
  FpPoly r(a.p_);
  r.c_.assign(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i] = (r.c_[i] + b.c_[i]) % a.p_;
  r.normalize();
  return r;
}

FpPoly operator-(const FpPoly& a, const FpPoly& b) { return a + FpElem(-1, b.p_) * b; }

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
  require_same_field(a, b);
  FpPoly r(a.p_);
  if (a.is_zero() || b.is_zero()) return r;
  const std::uint64_t p = a.p_;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] = (r.c_[i + j] + a.c_[i] * b.c_[j]) % p;
  }
  r.normalize();
  return r;
}

FpPoly operator*(const FpElem& c, const FpPoly& a) {
  if (c.modulus() != a.p_) throw std::invalid_argument("FpPoly: scalar from another field");
  FpPoly r = a;
  for (auto& v : r.c_) v = v * c.value() % a.p_;
  r.normalize();
  return r;
}

std::pair<FpPoly, FpPoly> FpPoly::divmod(const FpPoly& divisor) const {
  require_same_field(*this, divisor);
  if (divisor.is_zero()) throw std::domain_error("FpPoly: division by zero polynomial");
  FpPoly q(p_), r = *this;
  if (degree() < divisor.degree()) return {q, r};
  const int dd = divisor.degree();
  const std::uint64_t lead_inv = divisor.leading().inv().value();
  q.c_.assign(static_cast<std::size_t>(degree() - dd) + 1, 0);
  for (int i = degree(); i >= dd; --i) {
    std::uint64_t c = r.c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    std::uint64_t f = c * lead_inv % p_;
    q.c_[static_cast<std::size_t>(i - dd)] = f;
    for (int j = 0; j <= dd; ++j) {
      auto& slot = r.c_[static_cast<std::size_t>(i - dd + j)];
      slot = (slot + p_ - f * divisor.c_[static_cast<std::size_t>(j)] % p_) % p_;
    }
  }
  q.normalize();
  r.normalize();
  return {q, r};
}

FpPoly FpPoly::pow(unsigned e) const {
  FpPoly r = constant(p_, 1), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

std::string FpPoly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    std::uint64_t c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

// ---------------------------------------------------------------------------

FpPoly reduce_poly(const RatPoly& poly, std::uint64_t p) {
  PrimeField field(p);
  std::vector<FpElem> v;
  v.reserve(poly.coeffs().size());
  for (const auto& c : poly.coeffs()) v.push_back(field.from_rat(c));
  return FpPoly(p, std::move(v));
}

FpPoly gcd(const FpPoly& a, const FpPoly& b) {
  FpPoly x = a, y = b;
  while (!y.is_zero()) {
    FpPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

FpPoly powmod(const FpPoly& base, std::uint64_t e, const FpPoly& mod) {
  FpPoly r = FpPoly::constant(mod.modulus(), 1) % mod;
  FpPoly b = base % mod;
  while (e) {
    if (e & 1) r = (r * b) % mod;
    b = (b * b) % mod;
    e >>= 1;
  }
  return r;
}

FpPoly powmod_x(std::uint64_t e, const FpPoly& f) {
  if (f.is_zero()) throw std::domain_error("powmod_x: zero modulus polynomial");
  return powmod(FpPoly::x(f.modulus()), e, f);
}

bool is_squarefree(const FpPoly& f) {
  if (f.degree() <= 0) return true;
  return gcd(f, f.derivative()).degree() == 0;
}

namespace {

void require_squarefree(const FpPoly& f, const char* what) {
  if (!is_squarefree(f)) throw NotSquarefree(std::string(what) + ": input has a repeated factor: " + f.to_string());
}

}  // namespace

int count_fp_roots(const FpPoly& f) {
  if (f.is_zero()) throw std::domain_error("count_fp_roots: zero polynomial");
  if (f.degree() == 0) return 0;
  FpPoly xp = powmod_x(f.modulus(), f);
  return gcd(f, xp - FpPoly::x(f.modulus())).degree();
}

bool splits_into_linears(const FpPoly& f) {
  require_squarefree(f, "splits_into_linears");
  if (f.degree() <= 0) return true;
  return count_fp_roots(f) == f.degree();
}

bool splits_over_fp2(const FpPoly& f) {
  require_squarefree(f, "splits_over_fp2");
  if (f.degree() <= 0) return true;
  const std::uint64_t p = f.modulus();
  FpPoly h = powmod_x(p, f);
  h = powmod(h, p, f);
  return h == FpPoly::x(p) % f;
}

namespace {

// Squarefree decomposition over F_p, including p-th power parts.
std::vector<std::pair<FpPoly, int>> squarefree_parts(const FpPoly& f) {
  const std::uint64_t p = f.modulus();
  std::vector<std::pair<FpPoly, int>> out;
  FpPoly one = FpPoly::constant(p, 1);
  FpPoly c = gcd(f, f.derivative());
  FpPoly w = f.monic() / c;
  int i = 1;
  while (w.degree() > 0) {
    FpPoly y = gcd(w, c);
    FpPoly fac = w / y;
    if (fac.degree() > 0) out.emplace_back(fac.monic(), i);
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) {
    // c is a polynomial in x^p; over F_p the p-th root just drops exponents.
    std::vector<std::int64_t> root;
    for (int k = 0; k <= c.degree(); k += static_cast<int>(p))
      root.push_back(static_cast<std::int64_t>(c.coeff(k).value()));
    for (auto& [g, m] : squarefree_parts(FpPoly(p, root))) out.emplace_back(g, m * static_cast<int>(p));
  }
  return out;
}

}  // namespace

std::vector<DegreeBlock> distinct_degree_factorization(const FpPoly& f) {
  if (f.is_zero()) throw std::domain_error("distinct_degree_factorization: zero polynomial");
  const std::uint64_t p = f.modulus();
  std::vector<DegreeBlock> blocks;
  for (auto& [part, mult] : squarefree_parts(f)) {
    FpPoly g = part;
    FpPoly h = FpPoly::x(p) % g;
    for (int d = 1; g.degree() >= 2 * d; ++d) {
      h = powmod(h, p, g);
      FpPoly block = gcd(g, h - FpPoly::x(p));
      if (block.degree() > 0) {
        blocks.push_back({d, mult, block});
        g = g / block;
        h = h % g;
      }
    }
    if (g.degree() > 0) blocks.push_back({g.degree(), mult, g.monic()});
  }
  std::sort(blocks.begin(), blocks.end(), [](const DegreeBlock& a, const DegreeBlock& b) {
    return a.degree != b.degree ? a.degree < b.degree : a.multiplicity < b.multiplicity;
  });
  return blocks;
}

std::map<int, int> FactorPattern::degree_counts() const {
  std::map<int, int> m;
  for (auto [deg, mult] : factors) m[deg] += mult;
  return m;
}

int FactorPattern::total_degree() const {
  int s = 0;
  for (auto [deg, mult] : factors) s += deg * mult;
  return s;
}

std::string FactorPattern::to_string() const {
  std::map<std::pair<int, int>, int> grouped;
  for (auto e : factors) ++grouped[e];
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (auto& [key, count] : grouped) {
    if (!first) os << ", ";
    first = false;
    os << key.first << ":x" << count;
    if (key.second > 1) os << "^" << key.second;
  }
  os << "}";
  return os.str();
}

FactorPattern factor_pattern(const FpPoly& f) {
  FactorPattern pat;
  for (const auto& b : distinct_degree_factorization(f))
    for (int i = 0; i < b.product.degree() / b.degree; ++i) pat.factors.emplace_back(b.degree, b.multiplicity);
  std::sort(pat.factors.begin(), pat.factors.end());
  return pat;
}

std::vector<FpElem> roots_brute(const FpPoly& f) {
  if (f.is_zero()) throw std::domain_error("roots_brute: zero polynomial");
  const std::uint64_t p = f.modulus();
  std::vector<FpElem> out;
  for (std::uint64_t x = 0; x < p; ++x) {
    FpElem e(static_cast<std::int64_t>(x), p);
    if (f(e).is_zero()) out.push_back(e);
  }
  return out;
}

std::vector<Fp2Elem> roots_brute_fp2(const FpPoly& f, const Fp2Field& field) {
  if (f.is_zero()) throw std::domain_error("roots_brute_fp2: zero polynomial");
  if (field.p != f.modulus()) throw std::invalid_argument("roots_brute_fp2: field mismatch");
  std::vector<Fp2Elem> out;
  for (std::uint64_t i = 0; i < field.size(); ++i) {
    Fp2Elem e = field.element(i);
    if (f(e).is_zero()) out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FpElem> power_sums(const FpPoly& f, int max_power) {
  if (f.degree() < 0) throw std::domain_error("power_sums: zero polynomial");
  const std::uint64_t p = f.modulus();
  const FpPoly m = f.monic();
  const int d = m.degree();
  // e[i] = coefficient of x^{d-i} in the monic polynomial.
  auto e = [&](int i) { return i <= d ? m.coeff(d - i) : FpElem(0, p); };
  std::vector<FpElem> s;
  s.reserve(static_cast<std::size_t>(max_power) + 1);
  s.emplace_back(d, p);
  for (int v = 1; v <= max_power; ++v) {
    FpElem acc = FpElem(-v, p) * e(v);
    for (int i = 1; i < v; ++i) acc -= e(i) * s[static_cast<std::size_t>(v - i)];
    s.push_back(acc);
  }
  return s;
}

std::optional<bool> newton_consistency(const FpPoly& f, int max_power) {
  if (f.degree() < 1 || !is_squarefree(f) || !splits_over_fp2(f)) return std::nullopt;
  Fp2Field field(f.modulus());
  auto roots = roots_brute_fp2(f, field);
  auto newton = power_sums(f, max_power);
  for (int v = 0; v <= max_power; ++v) {
    Fp2Elem sum = field(0);
    for (const auto& r : roots) sum += r.pow(static_cast<std::uint64_t>(v));
    if (!(sum == field.embed(newton[static_cast<std::size_t>(v)]))) return false;
  }
  return true;
}

bool is_reciprocal(const FpPoly& f) {
  if (f.is_zero() || f.coeff(0).is_zero()) throw std::domain_error("is_reciprocal: constant term is zero");
  FpPoly m = f.monic();
  const int d = m.degree();
  for (int i = 0; i <= d; ++i)
    if (!(m.coeff(i) == m.coeff(d - i))) return false;
  return true;
}

}  // namespace thetaforms
