// Acceptance run: one line per criterion, nonzero exit if any fails.

#include "thetaforms/curves.hpp"
#include "thetaforms/harness.hpp"
#include "thetaforms/hyperpoly.hpp"
#include "thetaforms/modforms.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using namespace thetaforms;

namespace {

struct Result {
  bool ok;
  std::string note;
};

using Clock = std::chrono::steady_clock;

Rat big(const char* s) { return Rat(Integer(s)); }

std::string summarize(const std::vector<VerificationReport>& rs) {
  std::ostringstream os;
  os << count_status(rs, Status::Pass) << " pass, " << count_status(rs, Status::Fail) << " fail, "
     << count_status(rs, Status::Skipped) << " skipped";
  for (const auto& r : rs)
    if (r.status == Status::Fail) {
      os << "; first failure " << r.check_id << " p=" << r.p << ": " << r.witness;
      break;
    }
  return os.str();
}

SweepConfig sweep(std::uint64_t lo, std::uint64_t hi, std::vector<std::string> checks = {}) {
  SweepConfig c;
  c.p_min = lo;
  c.p_max = hi;
  c.curve_max = 103;
  c.checks = std::move(checks);
  return c;
}

// every listed check id ran at every prime of the class and none failed
Result covered(const std::vector<VerificationReport>& rs, const std::vector<std::string>& ids,
               const std::function<bool(std::uint64_t)>& applies, std::uint64_t lo, std::uint64_t hi,
               std::uint64_t curve_limit = 0, const std::string& curve_id = "") {
  for (std::uint64_t p = lo; p <= hi; ++p) {
    if (!is_prime(p) || !applies(p)) continue;
    for (const auto& id : ids) {
      bool seen = false;
      for (const auto& r : rs) {
        if (r.p != p || r.check_id != id) continue;
        seen = true;
        if (r.status == Status::Fail) return {false, id + " failed at p=" + std::to_string(p) + ": " + r.witness};
        const bool must_run = id != curve_id || p <= curve_limit;
        if (must_run && r.status != Status::Pass) return {false, id + " did not run at p=" + std::to_string(p)};
      }
      if (!seen) return {false, id + " missing at p=" + std::to_string(p)};
    }
  }
  return {count_status(rs, Status::Fail) == 0, summarize(rs)};
}

Result weight52() {
  const auto c = basis_coordinates(theta_z(5), 52);
  if (c.coords != std::vector<Rat>{big("27800506386"), big("-776608440"), big("2887488"), big("-3118"), Rat(1)})
    return {false, "basis coordinates differ"};
  const RatSeries f = from_coordinates(c, 7);
  if (f[5] != big("95037348924") || f[6] != big("1017845969208768")) return {false, "q^5 / q^6 coefficients differ"};
  const RatPoly P = pf_polynomial(theta_z(5), 52);
  if (P.to_string("j") != "j^4 - 3118*j^3 + 2887488*j^2 - 776608440*j + 27800506386")
    return {false, "P = " + P.to_string("j")};
  const FpPoly Pp = reduce_poly(P, 103);
  std::vector<std::uint64_t> roots;
  for (const auto& r : roots_brute(Pp)) roots.push_back(r.value());
  if (roots != std::vector<std::uint64_t>{58, 89, 93, 97}) return {false, "roots mod 103 differ"};
  if (!(Pp == reduce_poly(truncated_poly(Family::W0, 4), 103))) return {false, "P is not W0_4 mod 103"};
  return {true, "coordinates, q^5, q^6, P, roots {58, 89, 93, 97}, P = W0_4 mod 103"};
}

Result weight108() {
  const RatSeries f = modular_completion(theta_h(10), 108, 11);
  const long head[] = {1, 6, 0, 6, 6, 0, 0, 12, 0, 6};
  for (int i = 0; i < 10; ++i)
    if (f[i] != head[i]) return {false, "q^" + std::to_string(i) + " differs"};
  if (f[10] != big("1496265431568669020160")) return {false, "q^10 coefficient " + f[10].get_str()};
  const RatPoly P = pf_polynomial(theta_h(10), 108);
  const std::string want =
      "j^9 - 6474*j^8 + 16858944*j^7 - 22595806434*j^6 + 16561497291750*j^5 - 6514224685621164*j^4 + "
      "1257337803035458656*j^3 - 97749420668058422880*j^2 + 1958195577341989938240*j - 2139590870258478384000";
  if (P.to_string("j") != want) return {false, "P = " + P.to_string("j")};
  const FpPoly Pp = reduce_poly(P, 107);
  if (!(Pp == reduce_poly(truncated_poly(Family::V0, 9), 107))) return {false, "P is not V0_9 mod 107"};
  const FpPoly fact = FpPoly(107, {16, 1}) * FpPoly(107, {42, 0, 1}) * FpPoly(107, {42, 6, 1}) *
                      FpPoly(107, {42, 33, 1}) * FpPoly(107, {42, 105, 1});
  if (!(Pp == fact)) return {false, "factorization differs"};
  if (factor_pattern(Pp).to_string() != "{1:x1, 2:x4}") return {false, "pattern " + factor_pattern(Pp).to_string()};
  return {true, "q-expansion through q^10, P, P = V0_9 mod 107, (j + 16) times four quadratics"};
}

Result theta_z_sweep() {
  const auto rs = run_suite(Suite::ThetaZ, sweep(7, 199));
  return covered(rs, {"theta_z.congruence", "theta_z.splits", "theta_z.curve_set", "theta_z.legendre_zero_set"},
                 [](std::uint64_t p) { return p % 4 == 3; }, 7, 199);
}

Result theta_hex_sweep() {
  const auto rs = run_suite(Suite::ThetaHex, sweep(5, 197));
  return covered(rs,
                 {"theta_hex.congruence", "theta_hex.splits_fp2", "theta_hex.factor_pattern", "theta_hex.zero_set"},
                 [](std::uint64_t p) { return p % 3 == 2; }, 5, 197);
}

Result background_sweep() {
  const auto rs = run_suite(Suite::Background, sweep(5, 199));
  return covered(rs,
                 {"eisenstein.congruence", "eisenstein.factor_degrees", "eisenstein.supersingular",
                  "extremal.congruence"},
                 [](std::uint64_t) { return true; }, 5, 199, 103, "eisenstein.supersingular");
}

Result series_suite() {
  SweepConfig c = sweep(5, 5, {"series."});
  c.order = 40;
  const auto rs = run_suite(Suite::Identities, c);
  if (rs.size() != 11) return {false, "expected 11 series checks, got " + std::to_string(rs.size())};
  return {count_status(rs, Status::Pass) == rs.size(), summarize(rs) + " at order 40"};
}

Result gp_suite() {
  const auto rs = run_suite(Suite::Identities, sweep(5, 199, {"gp."}));
  return covered(rs, {"gp.reciprocal", "gp.root_set", "gp.power_sums", "gp.four_torsion"},
                 [](std::uint64_t p) { return p % 4 == 3; }, 5, 199);
}

Result four_torsion() {
  std::vector<VerificationReport> all;
  for (std::uint64_t p : {7u, 11u, 19u, 23u, 31u}) {
    const auto rs = run_suite(Suite::Identities, sweep(p, p, {"legendre.four_torsion"}));
    all.insert(all.end(), rs.begin(), rs.end());
  }
  const bool ok = all.size() == 5 && count_status(all, Status::Pass) == 5;
  return {ok, summarize(all) + " over p in {7, 11, 19, 23, 31}, every lambda"};
}

Result hessian() {
  std::ostringstream os;
  bool ok = true;
  for (std::uint64_t p : {5u, 11u, 17u, 23u, 29u, 41u, 53u, 59u, 107u}) {
    const HessianCheck h = hessian_proposition_check(p);
    if (!h.ok()) {
      ok = false;
      os << "p=" << p << ": " << h.witness << "; ";
    } else {
      os << p << ":" << h.set_size << " ";
    }
  }
  return {ok, "set sizes " + os.str()};
}

Result vanishing() {
  std::ostringstream os;
  for (Family f : {Family::W0, Family::W1, Family::V0, Family::V1}) {
    int found = 0;
    for (std::uint64_t p = 5; found < 8; ++p) {
      if (!is_prime(p) || !window_admissible(f, p)) continue;
      const VanishingWindow w = vanishing_window(f, p);
      if (!w.ok)
        return {false, family_name(f) + " p=" + std::to_string(p) + " witness m=" + std::to_string(*w.witness)};
      ++found;
      if (found == 8) os << family_name(f) << " up to p=" << p << " ";
    }
  }
  return {true, "8 primes each: " + os.str()};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    Result (*run)();
  };
  const Criterion criteria[] = {
      {1, "weight 52 theta example", 1.0, weight52},
      {2, "weight 108 hexagonal theta example", 5.0, weight108},
      {3, "theta-z congruence, splitting and curve sets, p = 3 mod 4, 7..199", 300.0, theta_z_sweep},
      {4, "theta-hex congruence, F_{p^2} splitting, factor pattern, zero set, 5..197", 300.0, theta_hex_sweep},
      {5, "Eisenstein and extremal congruences, supersingular sets, 5..199", 300.0, background_sweep},
      {6, "q-series and 2F1 identities to order 40", 300.0, series_suite},
      {7, "G_p reciprocity, root set, power sums, 4-torsion description, p <= 199", 300.0, gp_suite},
      {8, "Legendre 4-torsion prediction vs enumeration", 300.0, four_torsion},
      {9, "Hessian j-set vs hexagonal zero set, (3,3) torsion", 300.0, hessian},
      {10, "coefficient vanishing windows", 300.0, vanishing},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = Clock::now();
    Result r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(Clock::now() - t0).count();
    if (r.ok && s >= c.limit_s) {
      r.ok = false;
      r.note += "; over the time limit";
    }
    if (!r.ok) ++failures;
    std::printf("[%s] criterion %2d: %s (%.2f s, limit %.0f s) %s\n", r.ok ? "PASS" : "FAIL", c.id, c.name, s,
                c.limit_s, r.note.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
  return failures ? 1 : 0;
}
