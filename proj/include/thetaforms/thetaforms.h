#ifndef THETAFORMS_H
#define THETAFORMS_H

/* C interface to the theta-forms verification library. */

#include <stddef.h>
#include <stdint.h>

#if defined(THETAFORMS_BUILDING_LIBRARY)
#define TF_API __attribute__((visibility("default")))
#else
#define TF_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  TF_OK = 0,
  TF_ERR_INVALID_ARGUMENT = 1, /* bad sweep configuration or unknown id */
  TF_ERR_DOMAIN = 2,           /* mathematically undefined request */
  TF_ERR_INTERNAL = 3,
  TF_ERR_NULL = 4
} tf_status;

typedef enum { TF_SUITE_THETA_Z = 0, TF_SUITE_THETA_HEX = 1, TF_SUITE_BACKGROUND = 2, TF_SUITE_IDENTITIES = 3 } tf_suite;

typedef enum { TF_FORMAT_JSON = 0, TF_FORMAT_CSV = 1, TF_FORMAT_TABLE = 2 } tf_format;

typedef enum { TF_CHECK_PASS = 0, TF_CHECK_FAIL = 1, TF_CHECK_SKIPPED = 2 } tf_check_status;

/* Which form P[f] is taken of. */
typedef enum { TF_FORM_THETA_Z = 0, TF_FORM_THETA_HEX = 1, TF_FORM_EISENSTEIN = 2, TF_FORM_EXTREMAL = 3 } tf_form;

typedef struct {
  uint64_t p_min;
  uint64_t p_max;
  int order;     /* 0: automatic */
  unsigned jobs; /* worker threads, >= 1 */
  int allow_large;
  uint64_t curve_max;
  const char* checks; /* comma separated check-id prefixes, NULL or "" for all */
} tf_sweep_config;

typedef struct tf_report_set tf_report_set;

/* Borrowed view of one report; strings live as long as the set. */
typedef struct {
  const char* check_id;
  uint64_t p;
  int k;
  tf_check_status status;
  const char* witness; /* "" when absent */
  double ms;
} tf_report;

TF_API void tf_sweep_config_init(tf_sweep_config* cfg);

TF_API tf_status tf_verify(tf_suite suite, const tf_sweep_config* cfg, tf_report_set** out);
TF_API size_t tf_report_count(const tf_report_set* set);
TF_API tf_status tf_report_get(const tf_report_set* set, size_t index, tf_report* out);
TF_API size_t tf_report_failures(const tf_report_set* set);
/* *out must be released with tf_string_free. */
TF_API tf_status tf_report_render(const tf_report_set* set, tf_format format, int canonical, char** out);
TF_API void tf_report_set_free(tf_report_set* set);

TF_API tf_status tf_show(const char* example_id, char** out);
/* P[f](j) for the chosen form at weight k, rendered with rational coefficients. */
TF_API tf_status tf_pf_polynomial(tf_form form, int k, char** out);

TF_API void tf_string_free(char* s);
/* Message for the last failing call on this thread, or "". */
TF_API const char* tf_last_error(void);
TF_API const char* tf_version(void);

#ifdef __cplusplus
}
#endif

#endif
