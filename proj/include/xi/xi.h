/*
 * Copyright 2026 The xi Authors.
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to libxi: exact sexagesimal arithmetic, the two-stage circle
 * formulary, Nippur/Gudea metrology and the lunar chord conversion.
 *
 * Conventions:
 *  - Every fallible call returns xi_status. On failure xi_last_error()
 *    describes the problem; the message is thread-local and stays valid
 *    until the next libxi call on the same thread.
 *  - Strings returned through `char**` are owned by the caller and must be
 *    released with xi_string_free(). On failure they are set to NULL.
 *  - Numbers cross the boundary as text. Floating sexagesimal uses ';'
 *    ("1;2;30"); pinned sexagesimal uses ',' between places and ';' as the
 *    radix point ("0;57,36"). Plain magnitudes accept integers, fractions
 *    ("25/8"), decimals ("15.16") or a pinned sexagesimal number.
 */
#ifndef XI_XI_H
#define XI_XI_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(XI_BUILDING_LIBRARY)
#    define XI_API __declspec(dllexport)
#  else
#    define XI_API __declspec(dllimport)
#  endif
#else
#  define XI_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum xi_status {
  XI_OK = 0,
  XI_ERR_PARSE = 1,
  XI_ERR_DOMAIN = 2,
  XI_ERR_IRREGULAR = 3,
  XI_ERR_ARGUMENT = 4,
  XI_ERR_IO = 5,
  XI_ERR_CORPUS = 6,
  XI_ERR_STRUCTURE = 7,
  XI_ERR_UNKNOWN_NAME = 8,
  XI_ERR_DIVISION_BY_ZERO = 9,
  XI_ERR_INTERNAL = 10
} xi_status;

typedef enum xi_stage {
  XI_STAGE_HEXAGON = 1,
  XI_STAGE_SUSA = 2,
  XI_STAGE_PTOLEMY = 3,
  XI_STAGE_MODERN = 4
} xi_stage;

typedef enum xi_format { XI_FORMAT_TEXT = 0, XI_FORMAT_RECORDS = 1 } xi_format;

typedef struct xi_registry xi_registry;
typedef struct xi_report xi_report;

XI_API const char* xi_version(void);
XI_API const char* xi_last_error(void);
XI_API const char* xi_status_name(xi_status status);
XI_API void xi_string_free(char* s);

/* Parses `stage` ("1", "2", "ptolemy", "modern"). */
XI_API xi_status xi_stage_parse(const char* text, xi_stage* out);

/* Sexagesimal numbers */
XI_API xi_status xi_parse_floating(const char* text, char** normalized);
/* `value` receives the exact rational ("24/25"); may be NULL. */
XI_API xi_status xi_parse_pinned(const char* text, char** normalized, char** value);
XI_API xi_status xi_pin(const char* floating, int exponent, char** pinned, char** value);
XI_API xi_status xi_mul(const char* a, const char* b, char** product);
XI_API xi_status xi_add(const char* a, const char* b, char** sum);
XI_API xi_status xi_reciprocal(const char* floating, char** result);
/* Expands a magnitude with at most `max_places` fractional places. `nearest`
 * selects round-to-nearest instead of truncation; `truncated` (may be NULL)
 * receives 1 when the expansion was cut. */
XI_API xi_status xi_from_rational(const char* magnitude, int max_places, int nearest, char** pinned,
                                  int* truncated);
XI_API xi_status xi_is_regular(const char* magnitude, int* regular);

/* Circle formulary. `operation` is one of: circumference d | diameter c |
 * arc N r | sectors b r | hexagon-part b | arc-from-hexagon h [r] |
 * area c | perimeter A | sagitta r chord | chord r s | fraction chord r.
 * `registry` may be NULL for the built-in coefficients. The result is one
 * line of text describing the value (exact, sexagesimal and decimal forms). */
XI_API xi_status xi_circle(const char* operation, const char* const* args, size_t nargs, xi_stage stage,
                           const xi_registry* registry, char** result);

/* Metrology: `unit` is finger|cubit|ninda, systems are nippur|gudea. The
 * result holds the converted quantity and its count in base fingers. */
XI_API xi_status xi_convert_length(const char* magnitude, const char* unit, const char* from_system,
                                   const char* to_system, char** result);

/* Lunar chord conversion: arcminute reading (pinned, e.g. "31;20") to DMS. */
XI_API xi_status xi_chord_minutes_to_dms(const char* arcminutes, char** dms);
XI_API xi_status xi_average_arcminutes(const char* a, const char* b, char** mean);

/* Coefficient registry */
XI_API xi_registry* xi_registry_builtin(void);
/* Loads a corpus over the built-ins. Fails with XI_ERR_CORPUS when any line
 * is malformed; `diagnostics` (may be NULL) receives warnings and errors,
 * one per line. */
XI_API xi_status xi_registry_load(const char* path, xi_registry** out, char** diagnostics);
XI_API void xi_registry_free(xi_registry* registry);
XI_API size_t xi_registry_size(const xi_registry* registry);
XI_API xi_status xi_registry_lookup(const xi_registry* registry, const char* id, char** digits, char** value);

/* Verification. `corpus_path` may be NULL. */
XI_API xi_status xi_verify(const char* corpus_path, xi_report** out);
XI_API int xi_report_ok(const xi_report* report);
XI_API size_t xi_report_size(const xi_report* report);
XI_API size_t xi_report_failed(const xi_report* report);
XI_API xi_status xi_report_render(const xi_report* report, xi_format format, char** text);
XI_API void xi_report_free(xi_report* report);

/* Tables: formulary | lunar | ladder | equivalents. */
XI_API xi_status xi_table(const char* name, const xi_registry* registry, xi_format format, char** text);

#ifdef __cplusplus
}
#endif

#endif /* XI_XI_H */
