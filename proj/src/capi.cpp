#include "thetaforms/thetaforms.h"

#include "thetaforms/harness.hpp"
#include "thetaforms/modforms.hpp"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <sstream>

struct tf_report_set {
  std::vector<thetaforms::VerificationReport> reports;
};

namespace {

thread_local std::string last_error;

tf_status fail(tf_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

template <class F>
tf_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const thetaforms::ConfigError& e) {
    return fail(TF_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(TF_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::domain_error& e) {
    return fail(TF_ERR_DOMAIN, e.what());
  } catch (const std::bad_alloc&) {
    return fail(TF_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(TF_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(TF_ERR_INTERNAL, "unknown error");
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

thetaforms::SweepConfig convert(const tf_sweep_config& c) {
  thetaforms::SweepConfig cfg;
  cfg.p_min = c.p_min;
  cfg.p_max = c.p_max;
  cfg.order = c.order;
  cfg.jobs = c.jobs;
  cfg.allow_large = c.allow_large != 0;
  cfg.curve_max = c.curve_max;
  if (c.checks) {
    std::stringstream ss(c.checks);
    for (std::string item; std::getline(ss, item, ',');)
      if (!item.empty()) cfg.checks.push_back(item);
  }
  return cfg;
}

}  // namespace

extern "C" {

void tf_sweep_config_init(tf_sweep_config* cfg) {
  if (!cfg) return;
  const thetaforms::SweepConfig d;
  cfg->p_min = d.p_min;
  cfg->p_max = d.p_max;
  cfg->order = d.order;
  cfg->jobs = d.jobs;
  cfg->allow_large = d.allow_large ? 1 : 0;
  cfg->curve_max = d.curve_max;
  cfg->checks = nullptr;
}

tf_status tf_verify(tf_suite suite, const tf_sweep_config* cfg, tf_report_set** out) {
  if (!cfg || !out) return fail(TF_ERR_NULL, "null argument");
  *out = nullptr;
  return guarded([&] {
    thetaforms::Suite s;
    switch (suite) {
      case TF_SUITE_THETA_Z: s = thetaforms::Suite::ThetaZ; break;
      case TF_SUITE_THETA_HEX: s = thetaforms::Suite::ThetaHex; break;
      case TF_SUITE_BACKGROUND: s = thetaforms::Suite::Background; break;
      case TF_SUITE_IDENTITIES: s = thetaforms::Suite::Identities; break;
      default: return fail(TF_ERR_INVALID_ARGUMENT, "unknown suite");
    }
    auto set = std::make_unique<tf_report_set>();
    set->reports = thetaforms::run_suite(s, convert(*cfg));
    *out = set.release();
    return TF_OK;
  });
}

size_t tf_report_count(const tf_report_set* set) { return set ? set->reports.size() : 0; }

tf_status tf_report_get(const tf_report_set* set, size_t index, tf_report* out) {
  if (!set || !out) return fail(TF_ERR_NULL, "null argument");
  if (index >= set->reports.size()) return fail(TF_ERR_INVALID_ARGUMENT, "report index out of range");
  const auto& r = set->reports[index];
  out->check_id = r.check_id.c_str();
  out->p = r.p;
  out->k = r.k;
  out->status = r.status == thetaforms::Status::Pass   ? TF_CHECK_PASS
                : r.status == thetaforms::Status::Fail ? TF_CHECK_FAIL
                                                       : TF_CHECK_SKIPPED;
  out->witness = r.witness.c_str();
  out->ms = r.ms;
  return TF_OK;
}

size_t tf_report_failures(const tf_report_set* set) {
  return set ? thetaforms::count_status(set->reports, thetaforms::Status::Fail) : 0;
}

tf_status tf_report_render(const tf_report_set* set, tf_format format, int canonical, char** out) {
  if (!set || !out) return fail(TF_ERR_NULL, "null argument");
  *out = nullptr;
  return guarded([&] {
    thetaforms::Format f;
    switch (format) {
      case TF_FORMAT_JSON: f = thetaforms::Format::Json; break;
      case TF_FORMAT_CSV: f = thetaforms::Format::Csv; break;
      case TF_FORMAT_TABLE: f = thetaforms::Format::Table; break;
      default: return fail(TF_ERR_INVALID_ARGUMENT, "unknown format");
    }
    *out = dup(thetaforms::render(set->reports, f, canonical != 0));
    return TF_OK;
  });
}

void tf_report_set_free(tf_report_set* set) { delete set; }

tf_status tf_show(const char* example_id, char** out) {
  if (!example_id || !out) return fail(TF_ERR_NULL, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = dup(thetaforms::show_example(example_id));
    return TF_OK;
  });
}

tf_status tf_pf_polynomial(tf_form form, int k, char** out) {
  if (!out) return fail(TF_ERR_NULL, "null argument");
  *out = nullptr;
  return guarded([&] {
    if (k < 4 || k % 2) return fail(TF_ERR_DOMAIN, "weight must be even and at least 4");
    thetaforms::RatPoly P;
    switch (form) {
      case TF_FORM_THETA_Z: P = thetaforms::theta_z_polynomial(k); break;
      case TF_FORM_THETA_HEX: P = thetaforms::theta_h_polynomial(k); break;
      case TF_FORM_EISENSTEIN: P = thetaforms::eisenstein_polynomial(k); break;
      case TF_FORM_EXTREMAL: P = thetaforms::extremal_polynomial(k); break;
      default: return fail(TF_ERR_INVALID_ARGUMENT, "unknown form");
    }
    *out = dup(P.to_string("j"));
    return TF_OK;
  });
}

void tf_string_free(char* s) { std::free(s); }

const char* tf_last_error(void) { return last_error.c_str(); }

const char* tf_version(void) { return "1.0.0"; }
}
