#ifndef RELCOMP_H
#define RELCOMP_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

#define RC_FLAG_MODULAR 1

#define RC_FLAG_DISTRIBUTIVE 2

#define RC_FLAG_COMPLEMENTED 4

#define RC_FLAG_REL_COMPLEMENTED 8

/**
 * Result codes. The first four match the command-line exit codes.
 */
typedef enum RcStatus {
  RC_STATUS_OK = 0,
  /**
   * A checked statement does not hold.
   */
  RC_STATUS_CHECK_FAILED = 1,
  /**
   * The lattice description is malformed or not a lattice.
   */
  RC_STATUS_INVALID = 2,
  /**
   * Unknown element, `a` not below `b`, unknown statement, ...
   */
  RC_STATUS_BAD_QUERY = 3,
  RC_STATUS_NULL_ARGUMENT = 4,
  RC_STATUS_BUFFER_TOO_SMALL = 5,
  /**
   * A Rust panic was caught at the boundary.
   */
  RC_STATUS_INTERNAL = 6,
} RcStatus;

/**
 * Opaque lattice handle.
 */
typedef struct RcLattice RcLattice;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses a lattice in the text format and stores a new handle in `*out`.
 *
 * # Safety
 * `text` is a NUL-terminated string; `out` is valid for one write.
 */
enum RcStatus rc_lattice_parse(const char *text, struct RcLattice **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `l` is null or a handle from [`rc_lattice_parse`] not yet freed.
 */
void rc_lattice_free(struct RcLattice *l);

/**
 * Number of elements, or 0 for a null handle.
 *
 * # Safety
 * `l` is null or a live handle.
 */
size_t rc_lattice_size(const struct RcLattice *l);

/**
 * The lattice name, owned by the handle.
 *
 * # Safety
 * `l` is null or a live handle.
 */
const char *rc_lattice_name(const struct RcLattice *l);

/**
 * Name of element `x`, owned by the handle; null when out of range.
 *
 * # Safety
 * `l` is null or a live handle.
 */
const char *rc_lattice_element_name(const struct RcLattice *l, uint32_t x);

/**
 * Index of the element called `name`.
 *
 * # Safety
 * `l` is a live handle, `name` NUL-terminated, `out` valid for one write.
 */
enum RcStatus rc_lattice_index(const struct RcLattice *l, const char *name, uint32_t *out);

/**
 * Bottom and top element indices.
 *
 * # Safety
 * `l` is a live handle; `bottom` and `top` are valid for one write each.
 */
enum RcStatus rc_lattice_bounds(const struct RcLattice *l, uint32_t *bottom, uint32_t *top);

/**
 * Stores whether `x <= y`.
 *
 * # Safety
 * `l` is a live handle; `out` is valid for one write.
 */
enum RcStatus rc_lattice_leq(const struct RcLattice *l, uint32_t x, uint32_t y, bool *out);

/**
 * Stores `x ∨ y`.
 *
 * # Safety
 * `l` is a live handle; `out` is valid for one write.
 */
enum RcStatus rc_lattice_join(const struct RcLattice *l, uint32_t x, uint32_t y, uint32_t *out);

/**
 * Stores `x ∧ y`.
 *
 * # Safety
 * `l` is a live handle; `out` is valid for one write.
 */
enum RcStatus rc_lattice_meet(const struct RcLattice *l, uint32_t x, uint32_t y, uint32_t *out);

/**
 * Stores a bitwise OR of the `RC_FLAG_*` constants.
 *
 * # Safety
 * `l` is a live handle; `out` is valid for one write.
 */
enum RcStatus rc_lattice_flags(const struct RcLattice *l, uint32_t *out);

/**
 * Complements of `x`.
 *
 * # Safety
 * `l` is a live handle; `buf` is valid for `cap` writes; `len` for one.
 */
enum RcStatus rc_complements(const struct RcLattice *l,
                             uint32_t x,
                             uint32_t *buf,
                             size_t cap,
                             size_t *len);

/**
 * Relative complements of `x` in `[a, b]`.
 *
 * # Safety
 * `l` is a live handle; `buf` is valid for `cap` writes; `len` for one.
 */
enum RcStatus rc_rel_complements(const struct RcLattice *l,
                                 uint32_t a,
                                 uint32_t b,
                                 uint32_t x,
                                 uint32_t *buf,
                                 size_t cap,
                                 size_t *len);

/**
 * `(x⁺ ∨ a) ∧ b`.
 *
 * # Safety
 * `l` is a live handle; `buf` is valid for `cap` writes; `len` for one.
 */
enum RcStatus rc_bar(const struct RcLattice *l,
                     uint32_t a,
                     uint32_t b,
                     uint32_t x,
                     uint32_t *buf,
                     size_t cap,
                     size_t *len);

/**
 * `(x⁺ ∧ b) ∨ a`.
 *
 * # Safety
 * `l` is a live handle; `buf` is valid for `cap` writes; `len` for one.
 */
enum RcStatus rc_hat(const struct RcLattice *l,
                     uint32_t a,
                     uint32_t b,
                     uint32_t x,
                     uint32_t *buf,
                     size_t cap,
                     size_t *len);

/**
 * `(A^ab)^ab` for the `n` indices at `xs`.
 *
 * # Safety
 * `l` is a live handle; `xs` is valid for `n` reads (or null when `n` is
 * 0); `buf` is valid for `cap` writes; `len` for one.
 */
enum RcStatus rc_closure(const struct RcLattice *l,
                         uint32_t a,
                         uint32_t b,
                         const uint32_t *xs,
                         size_t n,
                         uint32_t *buf,
                         size_t cap,
                         size_t *len);

/**
 * Checks the statements selected by `pattern` (an id, `prefix.*` or
 * `all`). Returns `RC_STATUS_OK` when all hold and
 * `RC_STATUS_CHECK_FAILED` otherwise; [`rc_last_error`] then names the
 * first failing statement and its counterexample.
 *
 * # Safety
 * `l` is a live handle; `pattern` is NUL-terminated.
 */
enum RcStatus rc_check(const struct RcLattice *l, const char *pattern);

/**
 * Message for the last failed call on this thread, valid until the next
 * call on the same thread. Empty when nothing has failed.
 */
const char *rc_last_error(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RELCOMP_H */
