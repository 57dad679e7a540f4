#ifndef FLIPTOP_H
#define FLIPTOP_H

/* C interface to the flip-transpose walk laboratory.
 *
 * Walks are addressed by kind name and rank n:
 *   "bn"        flip-transpose top walk on the signed permutations B_n
 *   "bn-alpha"  its biased variant, parameter alpha in [0,1]
 *   "dn"        the even-sign restriction on D_n
 *   "sn"        the a-biased top-transposition walk on S_n, a in (0,1)
 *
 * Every function that can fail returns an ftt status code; the message for
 * the most recent failure on the calling thread is available from
 * ftt_last_error(). Functions producing text hand back an ftt_buffer the
 * caller must destroy.
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define FTT_OK 0           /* success */
#define FTT_ERR_VERIFY 1   /* a verification suite ran and reported failures */
#define FTT_ERR_INVALID 2  /* invalid argument */
#define FTT_ERR_CAP 3      /* resource cap exceeded (group too large, etc.) */
#define FTT_ERR_INTERNAL 4 /* internal invariant violated */

typedef struct ftt_walk ftt_walk;
typedef struct ftt_buffer ftt_buffer;

/* Library version, as a static "major.minor.patch" string. */
const char* ftt_version(void);

/* Message for the most recent failure on this thread, empty if none. The
 * pointer stays valid until the next ftt call on the same thread. */
const char* ftt_last_error(void);

/* Create a walk handle. kind is one of the names above; param is the walk
 * parameter as a decimal or "p/q" string, required for "bn-alpha" and "sn"
 * and ignored (may be NULL) otherwise. Returns NULL on error, with the
 * reason in ftt_last_error(). */
ftt_walk* ftt_walk_create(const char* kind, int n, const char* param);
void ftt_walk_destroy(ftt_walk* w);

/* Order of the group the walk lives on. */
int ftt_walk_group_order(const ftt_walk* w, uint64_t* out);

/* Exact-distribution options. group_cap limits the group order for which
 * full distributions may be materialized; bit_budget is the denominator size
 * (in bits) past which exact arithmetic demotes to floating point; mode is
 * "exact" or "floating"; threads parallelizes convolution and simulation. */
int ftt_walk_set_group_cap(ftt_walk* w, uint64_t group_cap);
int ftt_walk_set_bit_budget(ftt_walk* w, unsigned bit_budget);
int ftt_walk_set_mode(ftt_walk* w, const char* mode);
int ftt_walk_set_threads(ftt_walk* w, unsigned threads);

/* Full eigenvalue decomposition of the walk operator, from the closed
 * formulas (no matrices). format is "json" or "csv"; aggregate_lines != 0
 * merges lines with equal eigenvalues. */
int ftt_spectrum(const ftt_walk* w, int aggregate_lines, const char* format,
                 ftt_buffer** out);

/* Exact k-step distance to uniform for k = 0..k_max, as CSV. With
 * exact_cells != 0 the tv column carries canonical rationals, otherwise
 * decimals. */
int ftt_tv_curve(const ftt_walk* w, long k_max, int exact_cells, ftt_buffer** out);

/* Lower bound, exact TV (optional), spectral upper bound, and closed-form
 * upper bound per step, as CSV. */
int ftt_bounds_curve(const ftt_walk* w, long k_max, int with_tv, ftt_buffer** out);

/* Smallest k <= k_max with TV <= threshold; *k_out is -1 when the walk does
 * not mix by k_max (that is not an error). */
int ftt_mixing_time(const ftt_walk* w, double threshold, long k_max, long* k_out);

/* Monte Carlo estimate of the mean fixed-point count of the projected state
 * after the given number of steps, as a one-row CSV. Deterministic for a
 * fixed seed, independent of thread count. */
int ftt_simulate(const ftt_walk* w, long steps, long trials, uint64_t seed,
                 ftt_buffer** out);

/* Run a self-check suite: "oracle", "lemmas", "projection", "moments" or
 * "all". n_max <= 0 selects each suite's default range. The report lists one
 * line per check; *failures receives the failure count. Returns
 * FTT_ERR_VERIFY when failures > 0. */
int ftt_verify(const char* suite, int n_max, ftt_buffer** report, int* failures);

/* Buffer contents are NUL-terminated; size excludes the terminator. */
const char* ftt_buffer_data(const ftt_buffer* b);
size_t ftt_buffer_size(const ftt_buffer* b);
void ftt_buffer_destroy(ftt_buffer* b);

#ifdef __cplusplus
}
#endif

#endif /* FLIPTOP_H */
