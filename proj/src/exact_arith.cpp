#include "thetaforms/exact_arith.hpp"

#include <mutex>
#include <sstream>
#include <vector>

namespace thetaforms {

Rat make_rat(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& x) { return x.get_str(); }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Rat bernoulli(int k) {
  if (k < 0) throw std::invalid_argument("bernoulli: negative index");
  if (k == 1) return make_rat(-1, 2);
  if (k % 2 == 1) throw std::invalid_argument("bernoulli: odd index > 1");

  // sum_{j=0}^{n} C(n+1, j) B_j = 0, memoized across calls.
  static std::mutex mu;
  static std::vector<Rat> table{Rat(1)};
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(table.size()) <= k) {
    const int n = static_cast<int>(table.size());
    Rat acc = 0;
    Integer binom = 1;  // C(n+1, j)
    for (int j = 0; j < n; ++j) {
      acc += binom * table[j];
      binom = binom * (n + 1 - j) / (j + 1);
    }
    Rat bn = -acc / (n + 1);
    table.push_back(bn);
  }
  return table[k];
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t r = 1 % mod;
  base %= mod;
  while (exp) {
    if (exp & 1) r = static_cast<std::uint64_t>(static_cast<unsigned __int128>(r) * base % mod);
    base = static_cast<std::uint64_t>(static_cast<unsigned __int128>(base) * base % mod);
    exp >>= 1;
  }
  return r;
}

int legendre_symbol(std::int64_t a, std::uint64_t p) {
  if (p < 3 || p % 2 == 0) throw std::invalid_argument("legendre_symbol: p must be an odd prime");
  std::int64_t r = a % static_cast<std::int64_t>(p);
  if (r < 0) r += static_cast<std::int64_t>(p);
  if (r == 0) return 0;
  return powmod(static_cast<std::uint64_t>(r), (p - 1) / 2, p) == 1 ? 1 : -1;
}

long padic_valuation(const Integer& x, std::uint64_t p) {
  if (x == 0) throw std::domain_error("padic_valuation of zero");
  Integer n = abs(x);
  long v = 0;
  Integer q, r;
  const Integer pp(static_cast<unsigned long>(p));
  for (;;) {
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), pp.get_mpz_t());
    if (r != 0) break;
    n = q;
    ++v;
  }
  return v;
}

long padic_valuation(const Rat& x, std::uint64_t p) {
  if (x == 0) throw std::domain_error("padic_valuation of zero");
  return padic_valuation(x.get_num(), p) - padic_valuation(x.get_den(), p);
}

std::uint64_t least_nonresidue(std::uint64_t p) {
  for (std::uint64_t d = 2; d < p; ++d)
    if (legendre_symbol(static_cast<std::int64_t>(d), p) == -1) return d;
  throw std::invalid_argument("least_nonresidue: no non-residue");
}

// ---------------------------------------------------------------------------

FpElem::FpElem(std::int64_t value, std::uint64_t p) : p_(p) {
  if (p == 0) throw std::invalid_argument("FpElem: zero modulus");
  std::int64_t r = value % static_cast<std::int64_t>(p);
  if (r < 0) r += static_cast<std::int64_t>(p);
  v_ = static_cast<std::uint64_t>(r);
}

FpElem FpElem::pow(std::uint64_t e) const { return raw(powmod(v_, e, p_), p_); }

FpElem FpElem::pow(const Integer& e) const {
  if (e < 0) return inv().pow(Integer(-e));
  // Exponents only matter mod p - 1 for nonzero bases.
  if (v_ == 0) return raw(e == 0 ? 1 : 0, p_);
  Integer r = e % static_cast<unsigned long>(p_ - 1);
  return pow(static_cast<std::uint64_t>(r.get_ui()));
}

FpElem FpElem::inv() const {
  if (v_ == 0) throw std::domain_error("inverse of zero in F_p");
  return pow(p_ - 2);
}

std::ostream& operator<<(std::ostream& os, const FpElem& x) { return os << x.value(); }

PrimeField::PrimeField(std::uint64_t prime) : p(prime) {
  if (prime < 5 || prime >= (1ULL << 31) || !is_prime(prime))
    throw std::invalid_argument("PrimeField: need a prime 5 <= p < 2^31, got " + std::to_string(prime));
}

FpElem PrimeField::from_rat(const Rat& x) const {
  if (!is_p_integral(x, p))
    throw std::domain_error("rational " + x.get_str() + " is not " + std::to_string(p) + "-integral");
  const Integer pp(static_cast<unsigned long>(p));
  Integer n = x.get_num() % pp;
  Integer d = x.get_den() % pp;
  if (n < 0) n += pp;
  FpElem num(static_cast<std::int64_t>(n.get_ui()), p);
  FpElem den(static_cast<std::int64_t>(d.get_ui()), p);
  return num / den;
}

FpElem cube_root_of_2(std::uint64_t p) {
  PrimeField field(p);
  if (p % 3 != 2)
    throw std::invalid_argument("cube_root_of_2: p = 1 mod 3 has three cube roots of 2 or none");
  // 3 is invertible mod p - 1, so cubing is a bijection with inverse x^{1/3 mod (p-1)}.
  Integer inv3;
  const Integer three(3), order(static_cast<unsigned long>(p - 1));
  mpz_invert(inv3.get_mpz_t(), three.get_mpz_t(), order.get_mpz_t());
  return field(2).pow(static_cast<std::uint64_t>(inv3.get_ui()));
}

// ---------------------------------------------------------------------------

Fp2Elem Fp2Elem::pow(std::uint64_t e) const {
  Fp2Elem r{1, 0, p_, d_};
  Fp2Elem b = *this;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

Fp2Elem Fp2Elem::pow(const Integer& e) const {
  if (e < 0) return inv().pow(Integer(-e));
  if (is_zero()) return e == 0 ? Fp2Elem{1, 0, p_, d_} : *this;
  Integer r = e % static_cast<unsigned long>(p_ * p_ - 1);
  return pow(static_cast<std::uint64_t>(r.get_ui()));
}

FpElem Fp2Elem::norm() const {
  FpElem a(static_cast<std::int64_t>(c0_), p_), b(static_cast<std::int64_t>(c1_), p_);
  return a * a - FpElem(static_cast<std::int64_t>(d_), p_) * b * b;
}

Fp2Elem Fp2Elem::inv() const {
  if (is_zero()) throw std::domain_error("inverse of zero in F_p^2");
  FpElem n = norm().inv();
  Fp2Elem conj = frobenius();
  return {conj.c0_ * n.value() % p_, conj.c1_ * n.value() % p_, p_, d_};
}

std::ostream& operator<<(std::ostream& os, const Fp2Elem& x) { return os << to_string(x); }

std::string to_string(const Fp2Elem& x) {
  std::ostringstream os;
  if (x.c1() == 0) {
    os << x.c0();
  } else {
    if (x.c0() != 0) os << x.c0() << "+";
    if (x.c1() != 1) os << x.c1() << "*";
    os << "w";
  }
  return os.str();
}

Fp2Field::Fp2Field(std::uint64_t prime) : p(PrimeField(prime).p), d(least_nonresidue(prime)) {}

Fp2Elem Fp2Field::operator()(std::int64_t v) const {
  return {FpElem(v, p).value(), 0, p, d};
}

}  // namespace thetaforms
