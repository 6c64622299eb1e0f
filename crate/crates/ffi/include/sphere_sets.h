#ifndef SPHERE_SETS_H
#define SPHERE_SETS_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every call.
 */
typedef enum SsStatus {
  SS_STATUS_OK = 0,
  /**
   * The call ran but a mathematical check failed or a bound does not apply.
   */
  SS_STATUS_CHECK_FAILED = 1,
  SS_STATUS_INVALID_ARGUMENT = 2,
  SS_STATUS_PARSE_ERROR = 3,
  SS_STATUS_NULL_POINTER = 4,
  /**
   * The configuration is not suitable for the requested operation.
   */
  SS_STATUS_CONFIGURATION_ERROR = 5,
  SS_STATUS_INTERNAL = 6,
} SsStatus;

typedef enum SsFormat {
  SS_FORMAT_TEXT = 0,
  SS_FORMAT_CSV = 1,
} SsFormat;

typedef enum SsMode {
  SS_MODE_DERIVATION = 0,
  SS_MODE_ASSUME_THEOREMS = 1,
} SsMode;

/**
 * Opaque configuration handle.
 */
typedef struct SsConfiguration SsConfiguration;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Text of the last error on this thread, or NULL. Valid until the next
 * failing call on the same thread.
 */
const char *ss_last_error(void);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void ss_string_free(char *s);

/**
 * Parses a configuration in the library's text format.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum SsStatus ss_configuration_parse(const char *text,
                                     double tolerance,
                                     struct SsConfiguration **out);

/**
 * Builds a named configuration (`octahedron`, `pentagon`, `icosahedron`,
 * `lines28`) or `simplex-faces` with parameters `n` and `s`; `n` and `s`
 * are ignored for named families.
 *
 * # Safety
 * `family` must be a NUL-terminated string and `out` a valid pointer.
 */
enum SsStatus ss_configuration_generate(const char *family,
                                        size_t n,
                                        size_t s,
                                        struct SsConfiguration **out);

/**
 * Releases a handle. NULL is ignored.
 *
 * # Safety
 * `cfg` must come from this library and not have been freed.
 */
void ss_configuration_free(struct SsConfiguration *cfg);

/**
 * Number of points, or 0 for NULL.
 *
 * # Safety
 * `cfg` must be NULL or a live handle.
 */
size_t ss_configuration_len(const struct SsConfiguration *cfg);

/**
 * Whether the configuration is held in exact rational arithmetic.
 *
 * # Safety
 * `cfg` must be NULL or a live handle.
 */
bool ss_configuration_is_exact(const struct SsConfiguration *cfg);

/**
 * Serializes the configuration in the text format.
 *
 * # Safety
 * `cfg` must be a live handle and `out` a valid pointer.
 */
enum SsStatus ss_configuration_to_text(const struct SsConfiguration *cfg, char **out);

/**
 * Full verification. The report is written to `report` and the overall
 * outcome to `pass`; a failing check still returns `Ok`.
 *
 * # Safety
 * `cfg` must be a live handle, `report` a valid pointer and `pass` NULL or
 * valid.
 */
enum SsStatus ss_verify(const struct SsConfiguration *cfg,
                        uint32_t max_degree,
                        bool regular,
                        enum SsFormat format,
                        char **report,
                        bool *pass);

/**
 * Staged extremal certificate for angle `arccos(1/a)`.
 *
 * # Safety
 * Same contract as `ss_verify`.
 */
enum SsStatus ss_certify_extremal(const struct SsConfiguration *cfg,
                                  uint64_t a,
                                  enum SsFormat format,
                                  char **report,
                                  bool *pass);

/**
 * Upper bound on equiangular lines in `R^n` over all angles.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum SsStatus ss_equiangular_max_bound(uint64_t n, uint64_t *out);

/**
 * Upper bound on spherical two-distance sets in `R^n`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum SsStatus ss_two_distance_max_bound(uint64_t n, enum SsMode mode, uint64_t *out);

/**
 * Split bound for equiangular sets in `R^n` with angle `arccos(1/a)`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum SsStatus ss_split_bound(uint64_t n, uint64_t a, uint64_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SPHERE_SETS_H */
