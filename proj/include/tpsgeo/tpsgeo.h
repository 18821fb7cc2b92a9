#ifndef TPSGEO_H
#define TPSGEO_H

#include <stddef.h>

#if defined(TPSGEO_BUILDING_LIBRARY)
#define TPSGEO_API __attribute__((visibility("default")))
#else
#define TPSGEO_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tpsgeo_status {
  TPSGEO_OK = 0,
  TPSGEO_VERIFY_FAILED = 1,
  TPSGEO_USAGE_ERROR = 2,
  TPSGEO_DOMAIN_ERROR = 3,
  TPSGEO_INTERNAL_ERROR = 4
} tpsgeo_status;

/* A finished command: an envelope of verified claims. */
typedef struct tpsgeo_report tpsgeo_report;
/* An element (a, b, c) of the Heisenberg group H_n. */
typedef struct tpsgeo_heis tpsgeo_heis;

TPSGEO_API const char* tpsgeo_version(void);
/* Message of the last failing call on this thread; empty when none. */
TPSGEO_API const char* tpsgeo_last_error(void);
TPSGEO_API void tpsgeo_string_free(char* s);

/* On TPSGEO_OK or TPSGEO_VERIFY_FAILED *out holds a report the caller frees. */
TPSGEO_API tpsgeo_status tpsgeo_curvature(const char* space, int n, tpsgeo_report** out);
TPSGEO_API tpsgeo_status tpsgeo_killing(const char* space, int n, int degree, tpsgeo_report** out);
/* model_json: potential definition; points_json: {"points": [...]} or {"grid": {"ranges", "counts"}}. */
TPSGEO_API tpsgeo_status tpsgeo_potential(const char* model_json, const char* points_json, tpsgeo_report** out);
/* only: comma-separated module names or NULL for all; seed 0 keeps the default. */
TPSGEO_API tpsgeo_status tpsgeo_verify_all(int n_max, const char* only, int tamper, int samples, unsigned long seed,
                                           tpsgeo_report** out);

TPSGEO_API int tpsgeo_report_passed(const tpsgeo_report* r);
TPSGEO_API size_t tpsgeo_report_count(const tpsgeo_report* r);
TPSGEO_API size_t tpsgeo_report_failures(const tpsgeo_report* r);
/* Serialized envelope; free with tpsgeo_string_free. */
TPSGEO_API tpsgeo_status tpsgeo_report_json(const tpsgeo_report* r, int include_timing, int indent, char** out);
TPSGEO_API tpsgeo_status tpsgeo_report_markdown(const tpsgeo_report* r, char** out);
TPSGEO_API void tpsgeo_report_free(tpsgeo_report* r);

/* Heisenberg elements as JSON {"a": [...], "b": [...], "c": "p/q"}; rationals as strings. */
TPSGEO_API tpsgeo_status tpsgeo_heis_from_json(const char* json, tpsgeo_heis** out);
TPSGEO_API tpsgeo_status tpsgeo_heis_multiply(const tpsgeo_heis* g, const tpsgeo_heis* h, tpsgeo_heis** out);
TPSGEO_API tpsgeo_status tpsgeo_heis_inverse(const tpsgeo_heis* g, tpsgeo_heis** out);
/* Point (x0, p, x) of the phase space, as JSON. */
TPSGEO_API tpsgeo_status tpsgeo_heis_chi(const tpsgeo_heis* g, char** out);
TPSGEO_API tpsgeo_status tpsgeo_heis_to_json(const tpsgeo_heis* g, char** out);
TPSGEO_API void tpsgeo_heis_free(tpsgeo_heis* g);

#ifdef __cplusplus
}
#endif

#endif
