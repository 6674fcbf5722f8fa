#pragma once

// Verification sweeps over prime ranges, report rendering and the worked examples.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace thetaforms {

enum class Status { Pass, Fail, Skipped };
enum class Suite { ThetaZ, ThetaHex, Background, Identities };
enum class Format { Json, Csv, Table };

std::string to_string(Status s);
std::string to_string(Suite s);

struct VerificationReport {
  std::string check_id;
  /// 0 for checks that are not attached to a prime.
  std::uint64_t p;
  /// 0 when no weight is involved.
  int k;
  Status status;
  /// Failure witness or skip reason; empty on pass.
  std::string witness;
  double ms;
};

struct SweepConfig {
  std::uint64_t p_min = 5;
  std::uint64_t p_max = 199;
  /// Series order; 0 picks 2 (n_k + 1) + 10 per weight, and 40 for the identity suite.
  int order = 0;
  unsigned jobs = 1;
  bool allow_large = false;
  /// Exhaustive curve oracles (all (a, b) models, supersingular sweep) run for p up to this bound.
  std::uint64_t curve_max = 103;
  /// Check-id prefixes to run; empty runs everything.
  std::vector<std::string> checks;
};

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws ConfigError.
void validate(const SweepConfig& cfg, Suite suite);

/// Reports ordered by prime, then by the fixed check order of the suite.
std::vector<VerificationReport> run_suite(Suite suite, const SweepConfig& cfg);

inline std::vector<VerificationReport> verify_theta_z(const SweepConfig& cfg) { return run_suite(Suite::ThetaZ, cfg); }
inline std::vector<VerificationReport> verify_theta_hex(const SweepConfig& cfg) { return run_suite(Suite::ThetaHex, cfg); }
inline std::vector<VerificationReport> verify_background(const SweepConfig& cfg) {
  return run_suite(Suite::Background, cfg);
}
inline std::vector<VerificationReport> verify_identities(const SweepConfig& cfg) {
  return run_suite(Suite::Identities, cfg);
}

std::size_t count_status(const std::vector<VerificationReport>& reports, Status s);

/// canonical: ms written as 0 so output depends only on the inputs.
std::string render(const std::vector<VerificationReport>& reports, Format format, bool canonical);

std::vector<std::string> example_ids();
/// Throws std::invalid_argument for an unknown id.
std::string show_example(const std::string& id);

}  // namespace thetaforms
