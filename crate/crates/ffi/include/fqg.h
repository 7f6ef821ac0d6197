/* C interface of the fqg finite-quantum-group workbench.
 * Strings returned through out-parameters are owned by the library;
 * release them with fqg_string_free. */

#ifndef FQG_H
#define FQG_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every entry point.
 */
typedef enum FqgStatus {
  FqgStatus_Ok = 0,
  FqgStatus_NullArgument = 1,
  FqgStatus_InvalidArgument = 2,
  FqgStatus_Utf8 = 3,
  FqgStatus_MathFailure = 4,
  FqgStatus_Io = 5,
  FqgStatus_Panic = 6,
} FqgStatus;

/**
 * Opaque quantum-group handle.
 */
typedef struct FqgGroup FqgGroup;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Latest error message on this thread, or NULL when the last call
 * succeeded. The caller owns the string; release with `fqg_string_free`.
 */
char *fqg_last_error(void);

/**
 * Releases a string returned by this library.
 */
void fqg_string_free(char *s);

/**
 * Builds the eight-dimensional Kac-Paljutkin group.
 */
enum FqgStatus fqg_group_kp(struct FqgGroup **out);

/**
 * Builds the Sekine group of index n (n >= 2, dimension 2 n^2).
 */
enum FqgStatus fqg_group_sekine(uint32_t n, struct FqgGroup **out);

/**
 * Builds the dual of a verified group.
 */
enum FqgStatus fqg_group_dual(const struct FqgGroup *g, struct FqgGroup **out);

/**
 * Reads a group from a JSON fixture file.
 */
enum FqgStatus fqg_group_from_file(const char *path, struct FqgGroup **out);

/**
 * Writes the group fixture to a JSON file.
 */
enum FqgStatus fqg_group_to_file(const struct FqgGroup *g, const char *path);

/**
 * Releases a group handle.
 */
void fqg_group_free(struct FqgGroup *g);

/**
 * Dimension of the underlying algebra; 0 for a null handle.
 */
uint64_t fqg_group_dim(const struct FqgGroup *g);

/**
 * Group name ("kp", "sekine:5", "dual(sekine:5)", ...).
 */
enum FqgStatus fqg_group_name(const struct FqgGroup *g, char **out);

/**
 * Runs the Hopf and Haar verifications; `out_passed` receives the combined
 * verdict and `out_json` the full report.
 */
enum FqgStatus fqg_group_verify_json(const struct FqgGroup *g, bool *out_passed, char **out_json);

/**
 * Exports the irreducible corepresentation catalog as JSON (built-in
 * families only).
 */
enum FqgStatus fqg_irreps_json(const struct FqgGroup *g, char **out_json);

/**
 * Moment table of the character of `rep` raised to `power`, as JSON.
 * `rep` accepts catalog labels and the alias "fundamental".
 */
enum FqgStatus fqg_char_moments_json(const struct FqgGroup *g,
                                     const char *rep,
                                     uint32_t power,
                                     uint32_t max_order,
                                     char **out_json);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FQG_H */
