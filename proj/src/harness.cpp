#include "thetaforms/harness.hpp"

#include "thetaforms/curves.hpp"
#include "thetaforms/hyperpoly.hpp"
#include "thetaforms/modforms.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <set>
#include <sstream>
#include <thread>

namespace thetaforms {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "?";
}

std::string to_string(Suite s) {
  switch (s) {
    case Suite::ThetaZ: return "theta-z";
    case Suite::ThetaHex: return "theta-hex";
    case Suite::Background: return "background";
    case Suite::Identities: return "identities";
  }
  return "?";
}

namespace {

struct Outcome {
  Status status;
  std::string witness;
};

Outcome pass() { return {Status::Pass, ""}; }
Outcome fail(std::string w) { return {Status::Fail, std::move(w)}; }
Outcome skip(std::string w) { return {Status::Skipped, std::move(w)}; }
Outcome verdict(bool ok, const std::string& w) { return ok ? pass() : fail(w.empty() ? "mismatch" : w); }

struct Check {
  std::string id;
  std::function<Outcome()> run;
};

class Runner {
 public:
  Runner(const SweepConfig& cfg, std::uint64_t p, int k) : cfg_(cfg), p_(p), k_(k) {}

  bool wanted(const std::string& id) const {
    if (cfg_.checks.empty()) return true;
    return std::any_of(cfg_.checks.begin(), cfg_.checks.end(),
                       [&](const std::string& pre) { return id.compare(0, pre.size(), pre) == 0; });
  }

  void run(const std::string& id, const std::function<Outcome()>& fn) {
    if (!wanted(id)) return;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    out_.push_back({id, p_, k_, o.status, std::move(o.witness), ms});
  }

  void skip_all(const std::vector<std::string>& ids, const std::string& reason) {
    for (const auto& id : ids)
      if (wanted(id)) out_.push_back({id, p_, k_, Status::Skipped, reason, 0.0});
  }

  std::vector<VerificationReport> take() { return std::move(out_); }

 private:
  const SweepConfig& cfg_;
  std::uint64_t p_;
  int k_;
  std::vector<VerificationReport> out_;
};

std::string poly_diff(const FpPoly& got, const FpPoly& want) {
  if (got.degree() != want.degree())
    return "degree " + std::to_string(got.degree()) + " vs " + std::to_string(want.degree());
  for (int i = got.degree(); i >= 0; --i)
    if (!(got.coeff(i) == want.coeff(i)))
      return "coefficient of j^" + std::to_string(i) + ": " + std::to_string(got.coeff(i).value()) + " vs " +
             std::to_string(want.coeff(i).value());
  return "";
}

template <class E>
std::string join(const std::vector<E>& xs) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? ", " : "") << xs[i];
  os << "}";
  return os.str();
}

int series_order(const SweepConfig& cfg, const WeightIndices& w) {
  return cfg.order > 0 ? std::max(cfg.order, w.n + 1) : default_order(w.k);
}

// C_k f has integer coordinates and coefficients, and agrees with f on q^0..q^n.
Outcome integrality(const RatSeries& f, const WeightIndices& w, int order) {
  const auto c = basis_coordinates(f, w.k);
  for (std::size_t l = 0; l < c.coords.size(); ++l)
    if (c.coords[l].get_den() != 1) return fail("coordinate " + std::to_string(l) + " = " + c.coords[l].get_str());
  const RatSeries g = from_coordinates(c, order);
  for (int i = 0; i < order; ++i) {
    if (g[i].get_den() != 1) return fail("coefficient of q^" + std::to_string(i) + " = " + g[i].get_str());
    if (i <= w.n && g[i] != f[i]) return fail("constructor differs from input at q^" + std::to_string(i));
  }
  return pass();
}

// ---------------------------------------------------------------------------

std::vector<VerificationReport> theta_z_prime(std::uint64_t p, const SweepConfig& cfg) {
  static const std::vector<std::string> ids = {"theta_z.congruence",         "theta_z.splits",
                                               "theta_z.legendre_zero_set",  "theta_z.curve_set",
                                               "theta_z.lambda_transform",   "theta_z.integrality"};
  const int k = static_cast<int>((p + 1) / 2);
  Runner r(cfg, p, k);
  if (p % 4 == 1) {
    r.skip_all(ids, "k = (p+1)/2 = " + std::to_string(k) + " is odd; there are no level one forms of odd weight");
    return r.take();
  }
  const WeightIndices w = weight_indices(k);
  const RatPoly P = theta_z_polynomial(k);
  const FpPoly Pp = reduce_poly(P, p);

  r.run(ids[0], [&] {
    const FpPoly W = reduce_poly(truncated_poly(w_family(w.b), w.n), p);
    return verdict(Pp == W, poly_diff(Pp, W));
  });
  r.run(ids[1], [&] { return verdict(splits_into_linears(Pp), "factor pattern " + factor_pattern(Pp).to_string()); });
  r.run(ids[2], [&] {
    const auto L = legendre_j_set(p);
    const FpPoly prod = product_over_roots(L, p);
    return verdict(prod == Pp, "legendre set " + join(L) + " vs roots " + join(roots_brute(Pp)));
  });
  r.run(ids[3], [&] {
    const auto L = legendre_curve_set(p);
    if (!(product_over_roots(L, p) == Pp))
      return fail("legendre models " + join(L) + " vs roots " + join(roots_brute(Pp)));
    if (p > cfg.curve_max) return pass();
    const auto S = weierstrass_curve_set(p);
    return verdict(product_over_roots(S, p) == Pp, "all models " + join(S) + " vs roots " + join(roots_brute(Pp)));
  });
  r.run(ids[4], [&] {
    const FpPoly lhs = lambda_transform(Pp, w), G = gp_poly(p);
    return verdict(lhs == G, poly_diff(lhs, G));
  });
  r.run(ids[5], [&] { return integrality(theta_z(w.n + 1), w, series_order(cfg, w)); });
  return r.take();
}

std::vector<VerificationReport> theta_hex_prime(std::uint64_t p, const SweepConfig& cfg) {
  static const std::vector<std::string> ids = {
      "theta_hex.congruence", "theta_hex.splits_fp2",   "theta_hex.factor_pattern", "theta_hex.zero_set",
      "theta_hex.hessian",    "theta_hex.t3_transform", "theta_hex.constant",       "theta_hex.integrality"};
  const int k = static_cast<int>(p + 1);
  Runner r(cfg, p, k);
  if (p % 3 == 1) {
    r.skip_all(ids, "p = 1 mod 3; the cube root of 2 is not unique");
    return r.take();
  }
  const WeightIndices w = weight_indices(k);
  const FpPoly Pp = reduce_poly(theta_h_polynomial(k), p);
  const Fp2Field F2(p);

  r.run(ids[0], [&] {
    const FpPoly V = reduce_poly(truncated_poly(v_family(w.b), w.n), p);
    return verdict(Pp == V, poly_diff(Pp, V));
  });
  r.run(ids[1], [&] { return verdict(splits_over_fp2(Pp), "factor pattern " + factor_pattern(Pp).to_string()); });
  r.run(ids[2], [&] {
    const FactorPattern fp = factor_pattern(Pp);
    const auto counts = fp.degree_counts();
    const int linear = counts.count(1) ? counts.at(1) : 0;
    bool ok = linear == (w.n % 2) && counts.size() <= 2;
    for (auto [deg, mult] : fp.factors) ok = ok && mult == 1 && (deg == 1 || deg == 2);
    if (ok && linear == 1) ok = roots_brute(Pp) == std::vector<FpElem>{FpElem(-1728, p)};
    return verdict(ok, "factor pattern " + fp.to_string() + ", F_p roots " + join(roots_brute(Pp)));
  });
  r.run(ids[3], [&] {
    const auto Z = hex_zero_set(p);
    const Fp2Elem target = F2(1728) * F2(1728);
    for (const auto& beta : Z)
      if (!(beta.frobenius() * beta == target)) return fail("beta^(p+1) != 1728^2 at beta = " + to_string(beta));
    return verdict(product_over_roots(Z, p) == Pp,
                   "zero set has " + std::to_string(Z.size()) + " elements, degree " + std::to_string(Pp.degree()));
  });
  r.run(ids[4], [&] {
    if (p > 200) return skip("exhaustive F_{p^2} sweep limited to p <= 200");
    const HessianCheck h = hessian_proposition_check(p);
    return verdict(h.ok(), h.witness);
  });
  r.run(ids[5], [&] {
    const FpPoly lhs = t3_transform(Pp, w), rhs = t3_transform_expected(p, w.b);
    return verdict(lhs == rhs, poly_diff(lhs, rhs));
  });
  r.run(ids[6], [&] {
    const FpElem c = PrimeField(p).from_rat(hex_constant(v_family(w.b), p));
    return verdict(c == FpElem(-18, p), "constant is " + std::to_string(c.value()) + " mod p");
  });
  r.run(ids[7], [&] { return integrality(theta_h(w.n + 1), w, series_order(cfg, w)); });
  return r.take();
}

std::vector<VerificationReport> background_prime(std::uint64_t p, const SweepConfig& cfg) {
  const int k = static_cast<int>(p - 1);
  Runner r(cfg, p, k);
  const WeightIndices w = weight_indices(k);
  const FpPoly Pp = reduce_poly(eisenstein_polynomial(k), p);

  r.run("eisenstein.congruence", [&] {
    const FpPoly U = reduce_poly(truncated_poly(u_family(w.b), w.n), p);
    return verdict(Pp == U, poly_diff(Pp, U));
  });
  r.run("eisenstein.factor_degrees", [&] {
    const FactorPattern fp = factor_pattern(Pp);
    bool ok = true;
    for (auto [deg, mult] : fp.factors) ok = ok && (deg == 1 || deg == 2);
    return verdict(ok, "factor pattern " + fp.to_string());
  });
  r.run("eisenstein.supersingular", [&] {
    if (p > cfg.curve_max) return skip("exhaustive supersingular sweep limited to p <= " + std::to_string(cfg.curve_max));
    std::vector<Fp2Elem> S;
    for (const auto& j : supersingular_j_set(p))
      if (!j.is_zero() && !(j == lift(j, 1728))) S.push_back(j);
    const FpPoly prod = product_over_roots(S, p);
    return verdict(prod == Pp, "supersingular set has " + std::to_string(S.size()) + " elements besides 0, 1728; " +
                                   poly_diff(prod, Pp));
  });
  r.run("extremal.congruence", [&] {
    const int order = series_order(cfg, w);
    const RatSeries ext = modular_completion(RatSeries::constant(Rat(1), order), k, order);
    const RatSeries ek = eisenstein(k, order);
    if (auto bad = first_mismatch_mod_p(ek, RatSeries::constant(Rat(1), order), p, order))
      return fail("E_k differs from 1 mod p at q^" + std::to_string(*bad));
    if (auto bad = first_mismatch_mod_p(ext, ek, p, order))
      return fail("C_k 1 differs from E_k mod p at q^" + std::to_string(*bad));
    const FpPoly X = reduce_poly(extremal_polynomial(k), p);
    return verdict(X == Pp, poly_diff(X, Pp));
  });
  r.run("almost_zero", [&] {
    return verdict(check_almost_zero(k, p, 3, p), "a form with vanishing head mod p is nonzero mod p");
  });
  return r.take();
}

std::vector<VerificationReport> identities_global(const SweepConfig& cfg) {
  const int order = cfg.order > 0 ? cfg.order : 40;
  Runner r(cfg, 0, 0);
  const auto rel = [](const RelationCheck& c) {
    return verdict(c.holds, c.first_mismatch ? "first mismatch at exponent " + std::to_string(*c.first_mismatch) : "");
  };
  r.run("series.theta_z", [&] { return rel(check_theta_z_hypergeometric(order)); });
  r.run("series.theta_h", [&] { return rel(check_theta_h_hypergeometric(order)); });
  r.run("series.e4_root", [&] { return rel(check_e4_hypergeometric(order)); });
  r.run("series.delta", [&] {
    const RatSeries d = delta(order);
    if (auto bad = first_mismatch(d, delta_from_eisenstein(order)))
      return fail("product and Eisenstein forms differ at q^" + std::to_string(*bad));
    const RatSeries e4c = eisenstein(4, order).pow(3);
    return rel({!first_mismatch(j_invariant(order) * d, e4c), first_mismatch(j_invariant(order) * d, e4c)});
  });
  r.run("series.t3_relation", [&] { return rel(verify_hauptmodul_relation(Hauptmodul::T3, order)); });
  r.run("series.lambda_relation", [&] { return rel(verify_hauptmodul_relation(Hauptmodul::Lambda, order)); });
  r.run("series.euler_u", [&] { return rel(check_euler_transform(Family::U0, order)); });
  r.run("series.euler_w", [&] { return rel(check_euler_transform(Family::W0, order)); });
  r.run("series.euler_v", [&] { return rel(check_euler_transform(Family::V0, order)); });
  r.run("series.cubic", [&] { return rel(check_cubic_transform(order)); });
  r.run("series.degenerate", [&] { return rel(check_degenerate_transform(order)); });
  return r.take();
}

std::vector<VerificationReport> identities_prime(std::uint64_t p, const SweepConfig& cfg) {
  Runner r(cfg, p, 0);
  PrimeField F(p);
  if (p % 4 == 3) {
    const FpPoly G = gp_poly(p);
    const int V = static_cast<int>((p + 1) / 4);
    r.run("gp.reciprocal", [&] {
      return verdict(G.coeff(0) == F(1) && G.leading() == F(1) && is_reciprocal(G), "G_p = " + G.to_string("x"));
    });
    r.run("gp.root_set", [&] {
      const FpPoly R = gp_root_product(p);
      return verdict(G == R, poly_diff(G, R));
    });
    r.run("gp.power_sums", [&] {
      const auto S = power_sums(G, V);
      const auto want = gp_expected_power_sums(p, V);
      for (int v = 0; v <= V; ++v)
        if (!(S[static_cast<std::size_t>(v)] == want[static_cast<std::size_t>(v)]))
          return fail("S_" + std::to_string(v) + " = " + std::to_string(S[static_cast<std::size_t>(v)].value()) +
                      ", expected " + std::to_string(want[static_cast<std::size_t>(v)].value()));
      const auto nc = newton_consistency(G, V);
      return verdict(nc.value_or(false), "Newton sums disagree with explicit root sums");
    });
    r.run("gp.four_torsion", [&] {
      const SqrtTable<PrimeField> sq(F);
      std::vector<FpElem> lams;
      for (std::uint64_t l = 2; l < p; ++l)
        if (n_torsion_structure(legendre_curve(F.element(l)), 4, sq) == TorsionStructure{2, 2})
          lams.push_back(F.element(l));
      const FpPoly R = product_over_roots(lams, p);
      return verdict(R == G, "lambda set " + join(lams) + " vs roots " + join(roots_brute(G)));
    });
    r.run("legendre.four_torsion", [&] {
      const SqrtTable<PrimeField> sq(F);
      for (std::uint64_t l = 2; l < p; ++l) {
        const FpElem lam = F.element(l);
        const FpCurve E = legendre_curve(lam);
        const TorsionStructure got = n_torsion_structure(E, 4, sq), want = legendre_4torsion_predicted(lam);
        if (!(got == want))
          return fail("lambda = " + std::to_string(l) + ": " + to_string(got) + " vs predicted " + to_string(want));
        const auto xs = psi4_roots(lam);
        bool rational_four = false;
        for (const auto& x : xs) {
          const FpElem y2 = E.rhs(x);
          if (!y2.is_zero() && sq.chi(y2) == 1) rational_four = true;
        }
        if (rational_four != (got == TorsionStructure{2, 4}))
          return fail("lambda = " + std::to_string(l) + ": division polynomial roots disagree with enumeration");
        for (const auto& P : enumerate_points(E, sq)) {
          if (P.infinity || P.y.is_zero() || !E.mul(P, 4).infinity) continue;
          if (!std::binary_search(xs.begin(), xs.end(), P.x))
            return fail("lambda = " + std::to_string(l) + ": point of order 4 with x = " +
                        std::to_string(P.x.value()) + " missing from the division polynomial roots");
        }
      }
      return pass();
    });
  }
  for (Family f : {Family::W0, Family::W1, Family::V0, Family::V1}) {
    if (!window_admissible(f, p)) continue;
    std::string id = "vanishing." + family_name(f);
    std::transform(id.begin(), id.end(), id.begin(), [](unsigned char c) { return std::tolower(c); });
    r.run(id, [&] {
      const VanishingWindow v = vanishing_window(f, p);
      return verdict(v.ok, "window (" + std::to_string(v.lo) + ", " + std::to_string(v.hi) + "): nu_p(c_" +
                               std::to_string(v.witness.value_or(-1)) + ") < 1");
    });
  }
  return r.take();
}

std::vector<std::uint64_t> primes_in(const SweepConfig& cfg) {
  std::vector<std::uint64_t> ps;
  for (std::uint64_t p = cfg.p_min; p <= cfg.p_max; ++p)
    if (is_prime(p)) ps.push_back(p);
  return ps;
}

}  // namespace

void validate(const SweepConfig& cfg, Suite suite) {
  if (cfg.p_min < 5) throw ConfigError("p-min must be at least 5");
  if (cfg.p_max < cfg.p_min) throw ConfigError("p-max must not be below p-min");
  if (cfg.p_max > 1000 && !cfg.allow_large) throw ConfigError("p-max above 1000 needs --allow-large");
  if (cfg.p_max >= (1ULL << 31)) throw ConfigError("p-max must be below 2^31");
  if (cfg.jobs < 1) throw ConfigError("jobs must be at least 1");
  if (cfg.order < 0) throw ConfigError("order must be positive");
  if (suite == Suite::Identities && cfg.order != 0 && cfg.order < 20)
    throw ConfigError("the identity suite needs order >= 20");
  if (cfg.curve_max > 1000 && !cfg.allow_large) throw ConfigError("curve-max above 1000 needs --allow-large");
}

std::vector<VerificationReport> run_suite(Suite suite, const SweepConfig& cfg) {
  validate(cfg, suite);
  std::vector<std::function<std::vector<VerificationReport>()>> tasks;
  if (suite == Suite::Identities) tasks.emplace_back([&cfg] { return identities_global(cfg); });
  for (std::uint64_t p : primes_in(cfg)) {
    switch (suite) {
      case Suite::ThetaZ:
        if (p >= 7) tasks.emplace_back([p, &cfg] { return theta_z_prime(p, cfg); });
        break;
      case Suite::ThetaHex: tasks.emplace_back([p, &cfg] { return theta_hex_prime(p, cfg); }); break;
      case Suite::Background: tasks.emplace_back([p, &cfg] { return background_prime(p, cfg); }); break;
      case Suite::Identities: tasks.emplace_back([p, &cfg] { return identities_prime(p, cfg); }); break;
    }
  }
  std::vector<std::vector<VerificationReport>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
      try {
        results[i] = tasks[i]();
      } catch (const std::exception& e) {
        results[i] = {{"setup", 0, 0, Status::Fail, std::string("exception: ") + e.what(), 0.0}};
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(cfg.jobs, static_cast<unsigned>(tasks.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::vector<VerificationReport> out;
  for (auto& v : results)
    for (auto& rep : v) out.push_back(std::move(rep));
  return out;
}

std::size_t count_status(const std::vector<VerificationReport>& reports, Status s) {
  return static_cast<std::size_t>(
      std::count_if(reports.begin(), reports.end(), [s](const VerificationReport& r) { return r.status == s; }));
}

namespace {

std::string format_ms(double ms, bool canonical) {
  if (canonical) return "0";
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << ms;
  return os.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string render(const std::vector<VerificationReport>& reports, Format format, bool canonical) {
  std::ostringstream os;
  switch (format) {
    case Format::Json: {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& r : reports) {
        nlohmann::ordered_json o;
        o["check_id"] = r.check_id;
        o["p"] = r.p;
        o["k"] = r.k;
        o["status"] = to_string(r.status);
        o["witness"] = r.witness.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(r.witness);
        if (canonical)
          o["ms"] = 0;
        else
          o["ms"] = std::round(r.ms * 1000.0) / 1000.0;
        arr.push_back(std::move(o));
      }
      os << arr.dump(2) << "\n";
      break;
    }
    case Format::Csv:
      os << "check_id,p,k,status,witness,ms\n";
      for (const auto& r : reports)
        os << csv_field(r.check_id) << "," << r.p << "," << r.k << "," << to_string(r.status) << "," << csv_field(r.witness)
           << "," << format_ms(r.ms, canonical) << "\n";
      break;
    case Format::Table: {
      std::size_t wid = 8;
      for (const auto& r : reports) wid = std::max(wid, r.check_id.size());
      os << std::left << std::setw(static_cast<int>(wid)) << "check_id" << "  " << std::right << std::setw(5) << "p"
         << std::setw(5) << "k" << "  " << std::left << std::setw(8) << "status" << std::right << std::setw(10) << "ms"
         << "  witness\n";
      for (const auto& r : reports)
        os << std::left << std::setw(static_cast<int>(wid)) << r.check_id << "  " << std::right << std::setw(5) << r.p
           << std::setw(5) << r.k << "  " << std::left << std::setw(8) << to_string(r.status) << std::right
           << std::setw(10) << format_ms(r.ms, canonical) << "  " << r.witness << "\n";
      os << count_status(reports, Status::Pass) << " pass, " << count_status(reports, Status::Fail) << " fail, "
         << count_status(reports, Status::Skipped) << " skipped\n";
      break;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Worked examples

namespace {

std::string factor_text(const FpPoly& f) {
  const std::uint64_t p = f.modulus();
  std::ostringstream os;
  for (int i = f.degree(); i >= 0; --i) {
    const auto c = f.coeff(i).value();
    if (c == 0) continue;
    if (i != f.degree()) os << " + ";
    if (i == 0 || c != 1) os << c;
    if (i > 0) os << "j";
    if (i > 1) os << "^" << i;
  }
  (void)p;
  return "(" + os.str() + ")";
}

// Irreducible factors of a squarefree polynomial that splits over F_{p^2}, from its roots.
std::vector<FpPoly> factors_from_roots(const FpPoly& f) {
  const std::uint64_t p = f.modulus();
  std::vector<FpPoly> out;
  for (const auto& r : roots_brute_fp2(f, Fp2Field(p))) {
    if (r.in_base_field())
      out.push_back(FpPoly(p, std::vector<FpElem>{-r.base(), FpElem(1, p)}));
    else if (r.c1() < p - r.c1())
      out.push_back(FpPoly(p, std::vector<FpElem>{r.norm(), -(FpElem(2, p) * r.base()), FpElem(1, p)}));
  }
  std::sort(out.begin(), out.end(), [](const FpPoly& a, const FpPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i)
      if (a.coeff(i).value() != b.coeff(i).value()) return a.coeff(i).value() < b.coeff(i).value();
    return false;
  });
  return out;
}

std::string basis_combination(const BasisCoordinates& c) {
  const WeightIndices w = weight_indices(c.k);
  std::ostringstream os;
  bool first = true;
  for (std::size_t l = 0; l < c.coords.size(); ++l) {
    const Rat& x = c.coords[l];
    if (x == 0) continue;
    os << (first ? (x < 0 ? "-" : "") : (x < 0 ? " - " : " + "));
    first = false;
    const Rat mag = abs(x);
    std::vector<std::string> parts;
    const int e4 = w.a + 3 * static_cast<int>(l), d = w.n - static_cast<int>(l);
    if (e4) parts.push_back(e4 == 1 ? "E4" : "E4^" + std::to_string(e4));
    if (w.b) parts.push_back("E6");
    if (d) parts.push_back(d == 1 ? "Delta" : "Delta^" + std::to_string(d));
    if (mag != 1 || parts.empty()) os << mag.get_str() << (parts.empty() ? "" : " ");
    for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? " " : "") << parts[i];
  }
  return os.str();
}

std::string show_k52() {
  const int k = 52;
  const std::uint64_t p = 103;
  const WeightIndices w = weight_indices(k);
  const auto c = basis_coordinates(theta_z(w.n + 1), k);
  const RatSeries f = from_coordinates(c, 7);
  const RatPoly P = pf_polynomial(theta_z(w.n + 1), k);
  const FpPoly Pp = reduce_poly(P, p);
  std::ostringstream os;
  os << "k = 52: n = " << w.n << ", a = " << w.a << ", b = " << w.b << "\n";
  os << "C_52 theta_Z = " << basis_combination(c) << "\n";
  os << "            = " << to_string(f) << "\n";
  os << "P(j) = " << P.to_string("j") << "\n";
  os << "P mod 103 = ";
  for (const auto& g : factors_from_roots(Pp)) os << factor_text(g);
  os << "\n";
  os << "roots mod 103: " << join(roots_brute(Pp)) << "\n";
  const FpPoly W = reduce_poly(truncated_poly(Family::W0, w.n), p);
  os << "W0_4 mod 103 = " << W.to_string("j") << (W == Pp ? "  (equal to P mod 103)" : "  (differs from P mod 103)")
     << "\n";
  return os.str();
}

std::string show_p107() {
  const int k = 108;
  const std::uint64_t p = 107;
  const WeightIndices w = weight_indices(k);
  const RatSeries f = modular_completion(theta_h(w.n + 1), k, 11);
  const RatPoly P = pf_polynomial(theta_h(w.n + 1), k);
  const FpPoly Pp = reduce_poly(P, p);
  std::ostringstream os;
  os << "k = 108: n = " << w.n << ", a = " << w.a << ", b = " << w.b << "\n";
  os << "C_108 theta_H = " << to_string(f) << "\n";
  os << "P(j) = " << P.to_string("j") << "\n";
  os << "P mod 107 = ";
  for (const auto& g : factors_from_roots(Pp)) os << factor_text(g);
  os << "\n";
  os << "factor pattern: " << factor_pattern(Pp).to_string() << "\n";
  const FpPoly V = reduce_poly(truncated_poly(Family::V0, w.n), p);
  os << "V0_9 mod 107 = " << V.to_string("j") << (V == Pp ? "  (equal to P mod 107)" : "  (differs from P mod 107)")
     << "\n";
  return os.str();
}

std::string show_w0_4() {
  const RatPoly W = truncated_poly(Family::W0, 4);
  std::ostringstream os;
  os << "W0_4 = " << W.to_string("j") << "\n";
  os << "W0_4 mod 103 = " << reduce_poly(W, 103).to_string("j") << "\n";
  return os.str();
}

}  // namespace

std::vector<std::string> example_ids() { return {"k52", "p107", "w0-4-mod103"}; }

std::string show_example(const std::string& id) {
  if (id == "k52") return show_k52();
  if (id == "p107") return show_p107();
  if (id == "w0-4-mod103") return show_w0_4();
  throw std::invalid_argument("unknown example id '" + id + "' (known: k52, p107, w0-4-mod103)");
}

}  // namespace thetaforms
