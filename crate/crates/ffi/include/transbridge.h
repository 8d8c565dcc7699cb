/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#ifndef TRANSBRIDGE_H
#define TRANSBRIDGE_H

#include <stdbool.h>
#include <stddef.h>

/**
 * Result codes of the C API.
 */
typedef enum TbStatus {
  TB_STATUS_OK = 0,
  TB_STATUS_NULL_POINTER = 1,
  TB_STATUS_INVALID_UTF8 = 2,
  TB_STATUS_PARSE = 3,
  TB_STATUS_INVALID_ARGUMENT = 4,
  TB_STATUS_INVALID_FACTORIZATION = 5,
  TB_STATUS_NEGATIVE_FACTOR = 6,
  TB_STATUS_UNSTABILIZED = 7,
  TB_STATUS_MALFORMED_DIAGRAM = 8,
  TB_STATUS_LAYOUT = 9,
  TB_STATUS_PANIC = 10,
} TbStatus;

/**
 * Opaque stabilized torus diagram, with its source factorization if known.
 */
typedef struct TbDiagram TbDiagram;

/**
 * Opaque factorization of the full twist.
 */
typedef struct TbFactorization TbFactorization;

/**
 * Bridge parameters `(b; c1, c2, c3)` and stabilization count `s`.
 */
typedef struct TbBridgeParams {
  size_t b;
  size_t c1;
  size_t c2;
  size_t c3;
  size_t s;
} TbBridgeParams;

/**
 * Outcome of the diagram checks. `has_triviality` is false when the
 * diagram carries no factorization or is not stabilized, in which case the
 * three `l*_ok` fields are false.
 */
typedef struct TbCheckReport {
  bool transverse;
  bool general_position;
  bool stabilized;
  bool has_triviality;
  bool l1_ok;
  bool l2_ok;
  bool l3_ok;
} TbCheckReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failure on this thread, or NULL. The pointer stays
 * valid until the next failing call on the same thread.
 */
const char *tb_last_error(void);

/**
 * Parses a factorization document.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer.
 */
enum TbStatus tb_factorization_parse(const char *json, struct TbFactorization **out);

/**
 * The standard factorization of the full twist on `strands` strands.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum TbStatus tb_factorization_standard(size_t strands, struct TbFactorization **out);

/**
 * Number of band factors.
 *
 * # Safety
 * `f` must be a live handle or NULL (which gives 0).
 */
size_t tb_factorization_len(const struct TbFactorization *f);

/**
 * Writes whether the factorization multiplies to the full twist with the
 * expected exponent sum and factor count.
 *
 * # Safety
 * `f` must be a live handle and `valid` a valid pointer.
 */
enum TbStatus tb_factorization_validate(const struct TbFactorization *f, bool *valid);

/**
 * Serializes a factorization document into a new string.
 *
 * # Safety
 * `f` must be a live handle and `out` a valid pointer.
 */
enum TbStatus tb_factorization_to_json(const struct TbFactorization *f, char **out);

/**
 * # Safety
 * `f` must be a handle from this library, not yet freed, or NULL.
 */
void tb_factorization_free(struct TbFactorization *f);

/**
 * Assembles and stabilizes the diagram of a valid factorization.
 *
 * # Safety
 * `f` must be a live handle and `out` a valid pointer.
 */
enum TbStatus tb_diagram_build(const struct TbFactorization *f, struct TbDiagram **out);

/**
 * Parses a diagram document.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer.
 */
enum TbStatus tb_diagram_parse(const char *json, struct TbDiagram **out);

/**
 * Half the number of bridge points.
 *
 * # Safety
 * `d` must be a live handle or NULL (which gives 0).
 */
size_t tb_diagram_bridge_index(const struct TbDiagram *d);

/**
 * Bridge parameters of a stabilized diagram.
 *
 * # Safety
 * `d` must be a live handle and `out` a valid pointer.
 */
enum TbStatus tb_diagram_params(const struct TbDiagram *d, struct TbBridgeParams *out);

/**
 * Transversality, general position and, when possible, the triviality
 * certificates.
 *
 * # Safety
 * `d` must be a live handle and `out` a valid pointer.
 */
enum TbStatus tb_diagram_check(const struct TbDiagram *d, struct TbCheckReport *out);

/**
 * Serializes a diagram document into a new string.
 *
 * # Safety
 * `d` must be a live handle and `out` a valid pointer.
 */
enum TbStatus tb_diagram_to_json(const struct TbDiagram *d, char **out);

/**
 * Renders a diagram as SVG into a new string.
 *
 * # Safety
 * `d` must be a live handle and `out` a valid pointer.
 */
enum TbStatus tb_diagram_to_svg(const struct TbDiagram *d, char **out);

/**
 * # Safety
 * `d` must be a handle from this library, not yet freed, or NULL.
 */
void tb_diagram_free(struct TbDiagram *d);

/**
 * Releases a string returned by this library.
 *
 * # Safety
 * `s` must come from this library and not be freed yet, or be NULL.
 */
void tb_string_free(char *s);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* TRANSBRIDGE_H */
