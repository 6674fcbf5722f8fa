#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <thetaforms/thetaforms.h>

#include <json.hpp>

#include <string>

extern "C" int capi_header_check(void);

namespace {

tf_sweep_config small(uint64_t lo, uint64_t hi) {
  tf_sweep_config c;
  tf_sweep_config_init(&c);
  c.p_min = lo;
  c.p_max = hi;
  return c;
}

}  // namespace

TEST_CASE("header is valid C") { CHECK(capi_header_check() == 1); }

TEST_CASE("verify and read reports") {
  tf_sweep_config cfg = small(7, 47);
  tf_report_set* set = nullptr;
  REQUIRE(tf_verify(TF_SUITE_THETA_Z, &cfg, &set) == TF_OK);
  REQUIRE(set);
  CHECK(tf_report_count(set) > 0);
  CHECK(tf_report_failures(set) == 0);
  tf_report r;
  REQUIRE(tf_report_get(set, 0, &r) == TF_OK);
  CHECK(std::string(r.check_id) == "theta_z.congruence");
  CHECK(r.p == 7);
  CHECK(r.k == 4);
  CHECK(r.status == TF_CHECK_PASS);
  CHECK(std::string(r.witness).empty());
  CHECK(tf_report_get(set, tf_report_count(set), &r) == TF_ERR_INVALID_ARGUMENT);

  char* json = nullptr;
  REQUIRE(tf_report_render(set, TF_FORMAT_JSON, 1, &json) == TF_OK);
  const auto parsed = nlohmann::json::parse(json);
  CHECK(parsed.size() == tf_report_count(set));
  tf_string_free(json);
  CHECK(tf_report_render(set, static_cast<tf_format>(9), 1, &json) == TF_ERR_INVALID_ARGUMENT);
  tf_report_set_free(set);
}

TEST_CASE("check filter") {
  tf_sweep_config cfg = small(5, 60);
  cfg.checks = "eisenstein.congruence,almost_zero";
  tf_report_set* set = nullptr;
  REQUIRE(tf_verify(TF_SUITE_BACKGROUND, &cfg, &set) == TF_OK);
  for (size_t i = 0; i < tf_report_count(set); ++i) {
    tf_report r;
    tf_report_get(set, i, &r);
    const std::string id = r.check_id;
    CHECK((id == "eisenstein.congruence" || id == "almost_zero"));
  }
  tf_report_set_free(set);
}

TEST_CASE("configuration errors") {
  tf_report_set* set = reinterpret_cast<tf_report_set*>(0x1);
  tf_sweep_config cfg = small(3, 50);
  CHECK(tf_verify(TF_SUITE_THETA_HEX, &cfg, &set) == TF_ERR_INVALID_ARGUMENT);
  CHECK(set == nullptr);
  CHECK(std::string(tf_last_error()).find("p-min") != std::string::npos);
  cfg = small(5, 2000);
  CHECK(tf_verify(TF_SUITE_THETA_HEX, &cfg, &set) == TF_ERR_INVALID_ARGUMENT);
  cfg.allow_large = 1;
  cfg.p_min = 1999;
  cfg.checks = "theta_hex.congruence";
  CHECK(tf_verify(TF_SUITE_THETA_HEX, &cfg, &set) == TF_OK);
  tf_report_set_free(set);
  CHECK(tf_verify(static_cast<tf_suite>(42), &cfg, &set) == TF_ERR_INVALID_ARGUMENT);
  CHECK(tf_verify(TF_SUITE_THETA_Z, nullptr, &set) == TF_ERR_NULL);
  CHECK(tf_verify(TF_SUITE_THETA_Z, &cfg, nullptr) == TF_ERR_NULL);
  CHECK(tf_report_count(nullptr) == 0);
  tf_report_set_free(nullptr);
}

TEST_CASE("examples and polynomials") {
  char* s = nullptr;
  REQUIRE(tf_show("k52", &s) == TF_OK);
  CHECK(std::string(s).find("{58, 89, 93, 97}") != std::string::npos);
  tf_string_free(s);
  CHECK(tf_show("nope", &s) == TF_ERR_INVALID_ARGUMENT);
  CHECK(s == nullptr);
  CHECK(tf_show(nullptr, &s) == TF_ERR_NULL);

  REQUIRE(tf_pf_polynomial(TF_FORM_THETA_Z, 52, &s) == TF_OK);
  CHECK(std::string(s) == "j^4 - 3118*j^3 + 2887488*j^2 - 776608440*j + 27800506386");
  tf_string_free(s);
  REQUIRE(tf_pf_polynomial(TF_FORM_EISENSTEIN, 4, &s) == TF_OK);
  CHECK(std::string(s) == "1");
  tf_string_free(s);
  CHECK(tf_pf_polynomial(TF_FORM_THETA_HEX, 7, &s) == TF_ERR_DOMAIN);
  CHECK(std::string(tf_last_error()).find("even") != std::string::npos);
  CHECK(std::string(tf_version()) == "1.0.0");
}
