#ifndef SCHRODER_H
#define SCHRODER_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum SchroderFamily {
  SCHRODER_FAMILY_SCHRODER_PERMS = 0,
  SCHRODER_FAMILY_CENTROSYMMETRIC = 1,
  SCHRODER_FAMILY_CENTROSYMMETRIC_INVOLUTIONS = 2,
} SchroderFamily;

typedef enum SchroderMethod {
  SCHRODER_METHOD_RECURRENCE = 0,
  SCHRODER_METHOD_PATHS = 1,
  SCHRODER_METHOD_BRUTE_FORCE = 2,
} SchroderMethod;

typedef enum SchroderStatus {
  SCHRODER_STATUS_OK = 0,
  SCHRODER_STATUS_NULL_POINTER = 1,
  SCHRODER_STATUS_INVALID_UTF8 = 2,
  SCHRODER_STATUS_PARSE_ERROR = 3,
  SCHRODER_STATUS_NOT_A_PATH = 4,
  SCHRODER_STATUS_NOT_IN_CLASS = 5,
  SCHRODER_STATUS_CAP_EXCEEDED = 6,
  SCHRODER_STATUS_UNKNOWN_CLAIM = 7,
  SCHRODER_STATUS_UNSUPPORTED_QUERY = 8,
  SCHRODER_STATUS_OUT_OF_RANGE = 9,
  SCHRODER_STATUS_CACHE_ERROR = 10,
  SCHRODER_STATUS_INTERNAL = 11,
} SchroderStatus;

/*
 Opaque Schroder path.
 */
typedef struct SchroderPathHandle SchroderPathHandle;

/*
 Opaque permutation.
 */
typedef struct SchroderPermHandle SchroderPermHandle;

/*
 Message for the last failed call on this thread, or null. The pointer is
 valid until the next call into this library on the same thread.
 */
const char *schroder_last_error_message(void);

/*
 # Safety
 `s` must be null or a string returned by this library, not yet freed.
 */
void schroder_string_free(char *s);

/*
 Parses a path over the letters `d`, `e`, `n`.

 # Safety
 `text` must be a nul-terminated string; `out` must be writable.
 */
enum SchroderStatus schroder_path_parse(const char *text, struct SchroderPathHandle **out);

/*
 # Safety
 `path` must be null or a handle from this library, not yet freed.
 */
void schroder_path_free(struct SchroderPathHandle *path);

/*
 # Safety
 `path` must be a live handle; `out` must be writable.
 */
enum SchroderStatus schroder_path_to_string(const struct SchroderPathHandle *path, char **out);

/*
 # Safety
 `path` must be a live handle; `out` must be writable.
 */
enum SchroderStatus schroder_path_len(const struct SchroderPathHandle *path, uintptr_t *out);

/*
 # Safety
 `path` must be a live handle; `out` must be writable.
 */
enum SchroderStatus schroder_path_rev(const struct SchroderPathHandle *path,
                                      struct SchroderPathHandle **out);

/*
 # Safety
 `path` must be a live handle; `out` must be writable.
 */
enum SchroderStatus schroder_path_psi(const struct SchroderPathHandle *path,
                                      struct SchroderPathHandle **out);

/*
 # Safety
 `path` must be a live handle; `out` must be writable.
 */
enum SchroderStatus schroder_path_is_in_d(const struct SchroderPathHandle *path, bool *out);

/*
 # Safety
 `path` must be a live handle; `out` must be writable.
 */
enum SchroderStatus schroder_phi(const struct SchroderPathHandle *path,
                                 struct SchroderPermHandle **out);

/*
 # Safety
 `perm` must be a live handle; `out` must be writable.
 */
enum SchroderStatus schroder_phi_inverse(const struct SchroderPermHandle *perm,
                                         struct SchroderPathHandle **out);

/*
 Parses a comma-separated permutation such as `"3,1,2"`.

 # Safety
 `text` must be a nul-terminated string; `out` must be writable.
 */
enum SchroderStatus schroder_perm_parse(const char *text, struct SchroderPermHandle **out);

/*
 Builds a permutation from `len` one-based entries.

 # Safety
 `entries` must point to `len` readable bytes; `out` must be writable.
 */
enum SchroderStatus schroder_perm_from_entries(const uint8_t *entries,
                                               uintptr_t len,
                                               struct SchroderPermHandle **out);

/*
 # Safety
 `perm` must be null or a handle from this library, not yet freed.
 */
void schroder_perm_free(struct SchroderPermHandle *perm);

/*
 # Safety
 `perm` must be a live handle; `out` must be writable.
 */
enum SchroderStatus schroder_perm_to_string(const struct SchroderPermHandle *perm, char **out);

/*
 # Safety
 `perm` must be a live handle; `out` must be writable.
 */
enum SchroderStatus schroder_perm_len(const struct SchroderPermHandle *perm, uintptr_t *out);

/*
 Copies the one-based entries into `buf`, which must hold at least the
 permutation's length; `out_len` receives that length either way.

 # Safety
 `perm` must be a live handle, `buf` writable for `cap` bytes (or null when
 `cap` is 0), `out_len` writable.
 */
enum SchroderStatus schroder_perm_entries(const struct SchroderPermHandle *perm,
                                          uint8_t *buf,
                                          uintptr_t cap,
                                          uintptr_t *out_len);

/*
 # Safety
 `perm` must be a live handle; `out` must be writable.
 */
enum SchroderStatus schroder_perm_reverse_complement(const struct SchroderPermHandle *perm,
                                                     struct SchroderPermHandle **out);

/*
 # Safety
 `perm` must be a live handle; `out` must be writable.
 */
enum SchroderStatus schroder_perm_inverse(const struct SchroderPermHandle *perm,
                                          struct SchroderPermHandle **out);

/*
 True iff the permutation avoids both 1243 and 2143.

 # Safety
 `perm` must be a live handle; `out` must be writable.
 */
enum SchroderStatus schroder_perm_avoids(const struct SchroderPermHandle *perm, bool *out);

/*
 Size of a class at permutation length `n` under the default caps.

 # Safety
 `out` must be writable.
 */
enum SchroderStatus schroder_count(enum SchroderFamily family,
                                   enum SchroderMethod method,
                                   uintptr_t n,
                                   uint64_t *out);

/*
 Runs one claim (or `"regression_fixtures"`) and returns its report as
 JSON. A negative `max_n` selects the claim's default range. A claim that
 fails still returns `Ok`; inspect `failure_count` in the report.

 # Safety
 `claim` must be a nul-terminated string; `out` must be writable.
 */
enum SchroderStatus schroder_verify_json(const char *claim, int64_t max_n, char **out);

#endif  /* SCHRODER_H */
