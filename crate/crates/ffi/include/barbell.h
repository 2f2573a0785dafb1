#ifndef BARBELL_H
#define BARBELL_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes. The first three match the command-line exit codes.
 */
typedef enum BarbellStatus {
  /**
   * The report was produced and every check passed.
   */
  BARBELL_STATUS_OK = 0,
  /**
   * The report was produced but some check failed.
   */
  BARBELL_STATUS_MISMATCH = 1,
  /**
   * Invalid input or a violated hypothesis; no report.
   */
  BARBELL_STATUS_INVALID = 2,
  /**
   * A required pointer argument was null.
   */
  BARBELL_STATUS_NULL_POINTER = 3,
  /**
   * A string argument was not valid UTF-8.
   */
  BARBELL_STATUS_INVALID_UTF8 = 4,
  /**
   * The engine panicked; this is a bug.
   */
  BARBELL_STATUS_INTERNAL = 5,
} BarbellStatus;

/**
 * A computed report.
 */
typedef struct BarbellReport BarbellReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Runs a theorem or obstruction scenario by name. `params_json` is a JSON
 * object such as `{"k": 2, "l": 3}`, or null for no parameters.
 *
 * # Safety
 * `name` must be a valid C string; `params_json` must be null or a valid C
 * string; `out` must be valid for writes.
 */
enum BarbellStatus barbell_run(const char *name,
                               const char *params_json,
                               struct BarbellReport **out);

/**
 * Runs a parameter sweep (`morsesimple`, `higher-dim`, `brunnian`,
 * `montesinos`).
 *
 * # Safety
 * As for [`barbell_run`].
 */
enum BarbellStatus barbell_run_sweep(const char *kind,
                                     const char *params_json,
                                     struct BarbellReport **out);

/**
 * Runs a scenario given as JSON text.
 *
 * # Safety
 * `scenario_json` must be a valid C string; `out` must be valid for writes.
 */
enum BarbellStatus barbell_run_scenario(const char *scenario_json, struct BarbellReport **out);

/**
 * 1 if every check passed, 0 if not, -1 for a null handle.
 *
 * # Safety
 * `report` must be null or a live handle.
 */
int32_t barbell_report_passed(const struct BarbellReport *report);

/**
 * Number of checks in the report, 0 for a null handle.
 *
 * # Safety
 * `report` must be null or a live handle.
 */
size_t barbell_report_check_count(const struct BarbellReport *report);

/**
 * The report as JSON; null for a null handle. Free with
 * [`barbell_string_free`].
 *
 * # Safety
 * `report` must be null or a live handle.
 */
char *barbell_report_to_json(const struct BarbellReport *report);

/**
 * The report as a human-readable table; null for a null handle. Free with
 * [`barbell_string_free`].
 *
 * # Safety
 * `report` must be null or a live handle.
 */
char *barbell_report_table(const struct BarbellReport *report);

/**
 * Releases a report. Null is ignored.
 *
 * # Safety
 * `report` must be null or a handle not yet freed.
 */
void barbell_report_free(struct BarbellReport *report);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a string from this library not yet freed.
 */
void barbell_string_free(char *s);

/**
 * The last error on this thread, or null. The pointer stays valid until
 * the next call into this library from the same thread.
 */
const char *barbell_last_error(void);

/**
 * Library version as a static C string.
 */
const char *barbell_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BARBELL_H */
