#ifndef TAKEUCHI_CAPI_H
#define TAKEUCHI_CAPI_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes for every C entry point.
 */
typedef enum TakStatus {
  /**
   * Success; for `tak_job_run` this means every verdict passed.
   */
  TakOk = 0,
  /**
   * The job ran but a verification check failed.
   */
  TakVerificationFailed = 1,
  /**
   * Malformed input: bad JSON, bad schema, inconsistent data.
   */
  TakInputError = 2,
  /**
   * A mathematical precondition failed while computing.
   */
  TakMathError = 3,
  /**
   * A required pointer argument was NULL.
   */
  TakNullPointer = 4,
  /**
   * A string argument was not valid UTF-8.
   */
  TakInvalidUtf8 = 5,
} TakStatus;

/**
 * An opaque, validated job description.
 */
typedef struct TakJob TakJob;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Returns the message of the last error on this thread, or NULL when
 * no error has occurred. The caller owns the string.
 */
char *tak_last_error(void);

/**
 * Releases a string returned by this library. NULL is ignored.
 */
void tak_string_free(char *s);

/**
 * Parses and validates a JSON job document into an opaque handle
 * written to `out`. On failure `out` is left untouched.
 *
 * # Safety
 * `text` must point to a NUL-terminated string and `out` to a valid
 * pointer slot.
 */
enum TakStatus tak_job_parse(const char *text, struct TakJob **out);

/**
 * Releases a job handle. NULL is ignored.
 *
 * # Safety
 * `job` must have come from [`tak_job_parse`] and not been freed.
 */
void tak_job_free(struct TakJob *job);

/**
 * Runs a job and writes the JSON report to `out_report` (caller-owned,
 * release with [`tak_string_free`]). Returns `TakOk` when every check
 * passed and `TakVerificationFailed` when the job ran but a check
 * failed; in both cases the report is written.
 *
 * # Safety
 * `job` must be a live handle from [`tak_job_parse`]; `out_report`
 * must point to a valid pointer slot.
 */
enum TakStatus tak_job_run(const struct TakJob *job, char **out_report);

/**
 * Convenience one-shot: parse, validate and run a job from JSON text.
 *
 * # Safety
 * As for [`tak_job_parse`] and [`tak_job_run`].
 */
enum TakStatus tak_run(const char *text, char **out_report);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TAKEUCHI_CAPI_H */
