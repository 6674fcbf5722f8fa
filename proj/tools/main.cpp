// theta-forms: command line front end over the C API.

#include <thetaforms/thetaforms.h>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

namespace {

struct CString {
  char* s = nullptr;
  ~CString() { tf_string_free(s); }
};

unsigned default_jobs() {
  if (const char* env = std::getenv("THETA_FORMS_JOBS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<unsigned>(v);
    std::cerr << "warning: ignoring THETA_FORMS_JOBS='" << env << "'\n";
  }
  return 1;
}

int exit_for(tf_status s) { return s == TF_ERR_INVALID_ARGUMENT ? 2 : 3; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Theta modular forms: construction and congruence verification"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(tf_version()));

  tf_sweep_config cfg;
  tf_sweep_config_init(&cfg);
  cfg.jobs = default_jobs();
  std::string suite_name, format_name = "table", out_file, checks;
  bool canonical = false;

  auto* verify = app.add_subcommand("verify", "Run a verification suite over a prime range");
  const std::map<std::string, tf_suite> suites{{"theta-z", TF_SUITE_THETA_Z},
                                               {"theta-hex", TF_SUITE_THETA_HEX},
                                               {"background", TF_SUITE_BACKGROUND},
                                               {"identities", TF_SUITE_IDENTITIES}};
  const std::map<std::string, tf_format> formats{
      {"json", TF_FORMAT_JSON}, {"csv", TF_FORMAT_CSV}, {"table", TF_FORMAT_TABLE}};
  verify->add_option("suite", suite_name, "theta-z | theta-hex | background | identities")
      ->required()
      ->check(CLI::IsMember({"theta-z", "theta-hex", "background", "identities"}));
  verify->add_option("--p-min", cfg.p_min, "smallest prime")->capture_default_str();
  verify->add_option("--p-max", cfg.p_max, "largest prime")->capture_default_str();
  verify->add_option("--order", cfg.order, "series order override (0 = automatic)")->capture_default_str();
  verify->add_option("--jobs", cfg.jobs, "worker threads (default THETA_FORMS_JOBS or 1)");
  verify->add_option("--format", format_name, "json | csv | table")
      ->check(CLI::IsMember({"json", "csv", "table"}))
      ->capture_default_str();
  verify->add_option("--out", out_file, "write the report here instead of stdout");
  verify->add_flag("--canonical", canonical, "zero the timings so reruns are byte-identical");
  auto* allow_large = verify->add_flag("--allow-large", "permit p-max above 1000");
  verify->add_option("--curve-max", cfg.curve_max, "bound for exhaustive curve oracles")->capture_default_str();
  verify->add_option("--checks", checks, "comma separated check-id prefixes");

  std::string example;
  auto* show = app.add_subcommand("show", "Print a worked example");
  show->add_option("example-id", example, "k52 | p107 | w0-4-mod103")->required();

  int k = 0;
  std::string form_name;
  const std::map<std::string, tf_form> forms{{"theta-z", TF_FORM_THETA_Z},
                                             {"theta-hex", TF_FORM_THETA_HEX},
                                             {"eisenstein", TF_FORM_EISENSTEIN},
                                             {"extremal", TF_FORM_EXTREMAL}};
  auto* poly = app.add_subcommand("poly", "Print P[f](j) for a form at weight k");
  poly->add_option("form", form_name, "theta-z | theta-hex | eisenstein | extremal")
      ->required()
      ->check(CLI::IsMember({"theta-z", "theta-hex", "eisenstein", "extremal"}));
  poly->add_option("k", k, "even weight >= 4")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (*show) {
    CString text;
    const tf_status s = tf_show(example.c_str(), &text.s);
    if (s != TF_OK) {
      std::cerr << "error: " << tf_last_error() << "\n";
      return exit_for(s);
    }
    std::cout << text.s;
    return 0;
  }

  if (*poly) {
    CString text;
    const tf_status s = tf_pf_polynomial(forms.at(form_name), k, &text.s);
    if (s != TF_OK) {
      std::cerr << "error: " << tf_last_error() << "\n";
      return s == TF_ERR_DOMAIN ? 2 : exit_for(s);
    }
    std::cout << text.s << "\n";
    return 0;
  }

  cfg.allow_large = allow_large->count() > 0;
  cfg.checks = checks.empty() ? nullptr : checks.c_str();
  tf_report_set* set = nullptr;
  const tf_status s = tf_verify(suites.at(suite_name), &cfg, &set);
  if (s != TF_OK) {
    std::cerr << "error: " << tf_last_error() << "\n";
    return exit_for(s);
  }
  CString text;
  const tf_status r = tf_report_render(set, formats.at(format_name), canonical ? 1 : 0, &text.s);
  const std::size_t failures = tf_report_failures(set);
  tf_report_set_free(set);
  if (r != TF_OK) {
    std::cerr << "error: " << tf_last_error() << "\n";
    return 3;
  }
  if (out_file.empty()) {
    std::cout << text.s;
  } else {
    std::ofstream out(out_file, std::ios::binary);
    out << text.s;
    if (!out) {
      std::cerr << "error: cannot write " << out_file << "\n";
      return 2;
    }
  }
  return failures ? 1 : 0;
}
