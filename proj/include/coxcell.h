/* coxcell — public C API.
 *
 * Collapse engine for the face complex of an expression in a finite
 * crystallographic Coxeter group, with word combinatorics, graded-poset
 * checks and an exact-rational matrix oracle for chain (type A) systems.
 *
 * Conventions
 *   - Generators are numbered 1..rank everywhere at this boundary (words,
 *     JSON output, error messages).
 *   - Every function returning cxc_status fills its output parameters only
 *     on CXC_OK or CXC_VIOLATION; on any failure the thread-local message
 *     from cxc_last_error() describes the problem.
 *   - Strings handed out by the library are heap-allocated; release them
 *     with cxc_free_string().  JSON strings are deterministic: two-space
 *     indent, keys sorted, no trailing newline.
 *
 * SPDX-License-Identifier: MIT
 */
#ifndef COXCELL_H
#define COXCELL_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cxc_status {
  CXC_OK = 0,            /* success */
  CXC_VIOLATION = 1,     /* a requested verification found violations */
  CXC_INVALID_INPUT = 2, /* malformed input (bad letters, bad matrix, ...) */
  CXC_ERROR = 3          /* internal failure (allocation, logic guard) */
} cxc_status;

/* Opaque Coxeter system handle. */
typedef struct cxc_system cxc_system;

/* Library version, a static string such as "0.1.0". */
const char* cxc_version(void);

/* Message for the calling thread's most recent failure; never NULL.
 * Cleared to "" by every successful call. */
const char* cxc_last_error(void);

/* Releases a string allocated by this library.  NULL is allowed. */
void cxc_free_string(char* s);

/* ------------------------------------------------------------- systems -- */

/* Creates the named finite system:  type in "ABCDEFG" with the usual rank
 * bounds (A: n>=1, B/C: n>=2, D: n>=4, E: 6..8, F: 4, G: 2). */
cxc_status cxc_system_create(char type, int rank, cxc_system** out);

/* Creates a system from an explicit Coxeter matrix, row-major rank*rank,
 * with m[i][i] = 1 and off-diagonal entries in {2,3,4,6}.  The matrix must
 * define a finite group (the root enumeration is capped). */
cxc_status cxc_system_create_from_matrix(int rank, const int* entries,
                                         cxc_system** out);

/* Reads the matrix from a file: first line the rank n, then n lines of n
 * integers. */
cxc_status cxc_system_create_from_file(const char* path, cxc_system** out);

void cxc_system_destroy(cxc_system* sys);

/* JSON summary: label, rank, coxeter_matrix, cartan, positive_roots,
 * longest_length. */
cxc_status cxc_system_describe(const cxc_system* sys, char** json_out);

/* --------------------------------------------------------------- words -- */

/* JSON report on one word (letters 1..rank, `len` of them): whether it is
 * reduced, the group product with its length and lexicographically least
 * reduced word, and the absorbing (0-Hecke) product. */
cxc_status cxc_word_analyze(const cxc_system* sys, const int* word, int len,
                            char** json_out);

/* JSON report of the word's deletion pairs and commutation-omittable pairs,
 * each with its minimal certified move script (adjacent swaps free, braid
 * runs counted). */
cxc_status cxc_hecke_report(const cxc_system* sys, const int* word, int len,
                            char** json_out);

/* ------------------------------------------------------------ collapse -- */

/* Runs the collapse of the word's face complex to exhaustion (words are
 * capped at 12 letters) and renders the trace as JSON.
 *   full_mode      nonzero: retire every non-reduced face (deletion pairs);
 *                  zero: commutation moves only (omittable pairs).
 *   with_checks    also replay the trace against the step conditions and
 *                  the whole-run invariants; their messages are embedded
 *                  and any violation turns the status into CXC_VIOLATION.
 *   with_quotient  embed the quotient cell order (labels, ranks, covers,
 *                  surviving products; in full mode also the comparison
 *                  with the group's order ideal under the absorbing
 *                  product, which participates in the violation status).
 */
cxc_status cxc_collapse_run(const cxc_system* sys, const int* word, int len,
                            int full_mode, int with_checks, int with_quotient,
                            char** json_out);

/* Verifies a full-mode collapse trace of the word against the exact matrix
 * model (chain systems only): sampled parameter points on each swept face
 * are transported along the step's move script and must land on the
 * identified face with the same matrix image.  CXC_VIOLATION when any
 * sampled point misbehaves; the JSON lists the violations. */
cxc_status cxc_fiber_check(const cxc_system* sys, const int* word, int len,
                           char** json_out);

/* --------------------------------------------------------------- posets -- */

/* Builds the order interval [lower, upper] of the group (words may be
 * empty for the identity) as a graded poset: labels are canonical words,
 * ranks are lengths above the lower end.  JSON carries labels, ranks,
 * covers, size and the Moebius value between the ends; with_checks nonzero
 * adds the structural battery (graded covers, thinness, Euler condition,
 * connected open intervals) and failing it yields CXC_VIOLATION.
 * When dot_out is non-NULL it receives a DOT rendering of the cover
 * digraph. */
cxc_status cxc_interval_poset(const cxc_system* sys, const int* lower,
                              int lower_len, const int* upper, int upper_len,
                              int with_checks, char** json_out, char** dot_out);

/* ------------------------------------------------- exact matrix oracle -- */

/* Evaluates the product of elementary matrices of the word at exact
 * rational parameters ("7", "-2", "1/3"; one per letter).  Chain systems
 * of rank n-1 act by n x n upper unitriangular matrices.
 *   check_minors  nonzero: test all minors for nonnegativity; a negative
 *                 minor reports tnn=false and CXC_VIOLATION.
 *   want_cell     nonzero: locate the cell of the (nonnegative) matrix via
 *                 its rank table and report the cell's canonical word.
 */
cxc_status cxc_tnn_eval(const cxc_system* sys, const int* word, int len,
                        const char* const* params, int check_minors,
                        int want_cell, char** json_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* COXCELL_H */
