/* C interface to the morphology library.
 *
 * Conventions:
 *   - Functions returning a pointer return NULL on failure; functions
 *     returning int return a MORPHO_* status. After any failure,
 *     morpho_last_error() describes it and morpho_last_status() repeats the
 *     code. Both are thread-local and valid until the next call on that
 *     thread.
 *   - Strings returned as char* are heap copies; release them with
 *     morpho_string_free(). Handles have their matching *_free().
 *   - Structured arguments and results are JSON documents (see README for
 *     the schemas); formulas use the textual syntax of the formula parser.
 */
#ifndef MORPHO_C_H
#define MORPHO_C_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

enum {
  MORPHO_OK = 0,
  MORPHO_E_GROUND_MISMATCH = 1,
  MORPHO_E_TOO_LARGE = 2,
  MORPHO_E_UNKNOWN_ELEMENT = 3,
  MORPHO_E_UNKNOWN_NAME = 4,
  MORPHO_E_INCOMPATIBLE_MODE = 5,
  MORPHO_E_NO_CLOSED_FORM = 6,
  MORPHO_E_NOT_A_SUBOBJECT = 7,
  MORPHO_E_INVALID_GROUND = 8,
  MORPHO_E_UNSUPPORTED_FORGET_MODE = 9,
  MORPHO_E_NO_ATOMS = 10,
  MORPHO_E_UNSUPPORTED_STRUCTURE = 11,
  MORPHO_E_UNKNOWN_PROPOSITION = 12,
  MORPHO_E_NOT_COVERED = 13,
  MORPHO_E_UNKNOWN_WORLD = 14,
  MORPHO_E_UNKNOWN_SCHEMA = 15,
  MORPHO_E_INVALID_STEP = 16,
  MORPHO_E_PRECONDITION_UNMET = 17,
  MORPHO_E_PARSE = 18,
  MORPHO_E_BAD_INPUT = 19
};

typedef struct morpho_lattice morpho_lattice;
typedef struct morpho_sub morpho_sub;
typedef struct morpho_se morpho_se;
typedef struct morpho_model morpho_model;

const char* morpho_last_error(void);
int morpho_last_status(void);
const char* morpho_status_name(int status);
void morpho_string_free(char* s);

/* --- lattices and subobjects --------------------------------------------- */

/* ground_json: a ground document; forget_mode: element|vertex|edge|hyperedge */
morpho_lattice* morpho_lattice_create(const char* ground_json, const char* forget_mode);
void morpho_lattice_free(morpho_lattice* lat);

morpho_sub* morpho_sub_parse(const morpho_lattice* lat, const char* sub_json);
char* morpho_sub_dump(const morpho_lattice* lat, const morpho_sub* d);
morpho_sub* morpho_sub_top(const morpho_lattice* lat);
morpho_sub* morpho_sub_bottom(const morpho_lattice* lat);
int morpho_sub_equal(const morpho_lattice* lat, const morpho_sub* a, const morpho_sub* b,
                     int* out_equal);
int morpho_sub_leq(const morpho_lattice* lat, const morpho_sub* a, const morpho_sub* b,
                   int* out_leq);
void morpho_sub_free(morpho_sub* d);

/* --- structuring elements ------------------------------------------------- */

morpho_se* morpho_se_parse(const morpho_lattice* lat, const char* se_json);
char* morpho_se_dump(const morpho_lattice* lat, const morpho_se* b);
int morpho_se_is_covered(const morpho_lattice* lat, const morpho_se* b, int* out_covered);
void morpho_se_free(morpho_se* b);

/* --- operators ------------------------------------------------------------ */

/* op: erode|dilate|open|close; method: generic|fast|paper-algorithm.
 * "fast" uses the per-structure formula operators and fails with
 * MORPHO_E_NO_CLOSED_FORM when none applies; "paper-algorithm" is the
 * alternative erosion procedure (erode only). */
morpho_sub* morpho_apply(const morpho_lattice* lat, const morpho_se* b, const morpho_sub* d,
                         const char* op, const char* method);

/* --- law harness ----------------------------------------------------------- */

char* morpho_law_ids(void);
/* exhaustive != 0 enumerates the lattice; otherwise `samples` seeded draws. */
char* morpho_check_law(const morpho_lattice* lat, const morpho_se* b, const char* law,
                       int exhaustive, uint64_t samples, uint64_t seed);

/* Method-comparison documents; the scan version draws random objects. */
char* morpho_compare_methods(const morpho_lattice* lat, const morpho_se* b, const morpho_sub* d);
char* morpho_diverge_scan(const morpho_lattice* lat, const morpho_se* b, uint64_t samples,
                          uint64_t seed);

/* --- modal logic ----------------------------------------------------------- */

morpho_model* morpho_model_parse(const char* model_json);
char* morpho_model_dump(const morpho_model* m);
void morpho_model_free(morpho_model* m);

char* morpho_model_eval(const morpho_model* m, const char* formula);
int morpho_model_check(const morpho_model* m, const char* formula, int* out_satisfied);
/* Report array for the profile's schemas; profile: base|s4|b|s5|classical. */
char* morpho_axiom_suite(const morpho_model* m, const char* profile, uint64_t samples,
                         uint64_t seed);

/* Result document: {ok, failed_line, reason, classification, conclusion}. */
char* morpho_check_proof(const char* proof_json);

/* Parses and reprints a formula in canonical syntax. */
char* morpho_formula_roundtrip(const char* formula);

/* --- rendering ------------------------------------------------------------- */

/* baseline may be NULL; with a baseline, removed parts render dashed. */
char* morpho_to_dot(const morpho_lattice* lat, const morpho_sub* result,
                    const morpho_sub* baseline);

#ifdef __cplusplus
}
#endif

#endif /* MORPHO_C_H */
