/*
 * unilat C API.
 *
 * Every entry point returns a unilat_status. On success a report handle is
 * written to *out; release it with unilat_report_free. On failure *out is
 * left NULL and unilat_last_error() describes the problem (per thread).
 * Strings returned by unilat_report_json / unilat_report_text stay valid
 * until the report is freed; a NULL report gives "".
 */
#ifndef UNILAT_H
#define UNILAT_H

#include <stdint.h>

#if defined(_WIN32)
#  if defined(UNILAT_BUILDING_LIBRARY)
#    define UNILAT_API __declspec(dllexport)
#  else
#    define UNILAT_API __declspec(dllimport)
#  endif
#else
#  define UNILAT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct unilat_report unilat_report;

typedef enum unilat_status {
  UNILAT_OK = 0,
  UNILAT_ERR_ARGUMENT = 1, /* bad rank, unknown lattice/check, bad option */
  UNILAT_ERR_NULL = 2,     /* a required pointer was NULL */
  UNILAT_ERR_INTERNAL = 3  /* invariant failure or unexpected exception */
} unilat_status;

#define UNILAT_DEFAULT_SEED 1729u
#define UNILAT_DEFAULT_PROBES 5

UNILAT_API const char* unilat_version(void);

/* Message for the last failed call on this thread ("" if none). */
UNILAT_API const char* unilat_last_error(void);

/* formulation: "default", "moment", "zonal" or "both"; NULL means "default". */
UNILAT_API unilat_status unilat_verify(int rank, const char* formulation, unilat_report** out);

/* terms <= 0 selects the default (m + 10). */
UNILAT_API unilat_status unilat_theta(int rank, int terms, unilat_report** out);

/* formulation as for unilat_verify. */
UNILAT_API unilat_status unilat_system(int rank, const char* formulation, unilat_report** out);

/* lattice: "e8" or "leech"; checks: comma-separated list of theta, kissing,
 * design:<t>, profile (NULL or "" for all). */
UNILAT_API unilat_status unilat_oracle(const char* lattice, const char* checks, uint64_t seed,
                                       int probes, unilat_report** out);

/* JSON text. indent < 0 gives compact output. include_timing = 0 drops the
 * timing field so equal inputs give byte-identical text. */
UNILAT_API const char* unilat_report_json(unilat_report* report, int indent, int include_timing);

UNILAT_API const char* unilat_report_text(unilat_report* report);

/* 1 if no check failed, 0 otherwise (and for NULL). */
UNILAT_API int unilat_report_passed(const unilat_report* report);

UNILAT_API void unilat_report_free(unilat_report* report);

#ifdef __cplusplus
}
#endif

#endif /* UNILAT_H */
