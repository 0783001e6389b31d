/*
 * dwa — exact arithmetic in deformed Webster algebras of type A1 over F_p,
 * their p-derivations, inclusion maps, splitter bimodules, and the
 * verification drivers that certify the defining identities.
 *
 * C API over an opaque-handle core. Every function returns a dwa_status;
 * on failure the session (when one is involved) stores a message retrievable
 * with dwa_session_error(). Strings returned through char** out-parameters
 * are heap-allocated; release them with dwa_string_free().
 */

#ifndef DWA_H
#define DWA_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct dwa_session dwa_session;
typedef struct dwa_element dwa_element;

typedef enum {
    DWA_OK = 0,
    DWA_ERR_ARGUMENT = -1,  /* bad call: range, flavor mismatch, ... */
    DWA_ERR_CONFIG = -2,    /* non-prime p, mixed primes */
    DWA_ERR_PARSE = -3,     /* expression syntax; message carries the offset */
    DWA_ERR_RESOURCE = -4,  /* a configured cap was exceeded */
    DWA_ERR_INTERNAL = -5
} dwa_status;

typedef enum {
    DWA_FORMAT_TEXT = 0,
    DWA_FORMAT_JSON = 1,
    DWA_FORMAT_SVG = 2,
    DWA_FORMAT_TIKZ = 3
} dwa_format;

/* algebra: "NH", "D" or "W"; s may be NULL when s_len is 0 */
dwa_status dwa_session_new(uint32_t p, const char* algebra, const int32_t* s, size_t s_len,
                           uint32_t n, dwa_session** out);
void dwa_session_free(dwa_session* session);

/* message of the most recent failure on this session; empty when none */
const char* dwa_session_error(const dwa_session* session);

/* degree cap for the equality oracle and exploratory budget for prove-zero
 * paths; pass a negative value to leave a cap unchanged */
dwa_status dwa_session_set_caps(dwa_session* session, int32_t degree_cap, int32_t budget);

dwa_status dwa_parse(dwa_session* session, const char* text, dwa_element** out);
dwa_status dwa_element_clone(dwa_session* session, const dwa_element* elem, dwa_element** out);
void dwa_element_free(dwa_element* elem);

dwa_status dwa_add(dwa_session* session, const dwa_element* a, const dwa_element* b,
                   dwa_element** out);
dwa_status dwa_multiply(dwa_session* session, const dwa_element* a, const dwa_element* b,
                        dwa_element** out);
dwa_status dwa_scale(dwa_session* session, const dwa_element* a, int64_t k, dwa_element** out);

/* k-fold application of the flavor's degree-2 derivation */
dwa_status dwa_derive(dwa_session* session, const dwa_element* a, uint32_t k, dwa_element** out);

/* normal form; steps and canonical flag are optional out-parameters */
dwa_status dwa_reduce(dwa_session* session, const dwa_element* a, dwa_element** out,
                      uint64_t* steps, int32_t* canonical);

/* like dwa_reduce, additionally returning the rule-application trace,
 * one line per step: rule name, window position, term count */
dwa_status dwa_reduce_trace(dwa_session* session, const dwa_element* a, dwa_element** out,
                            char** trace);

/* proven = 1 guarantees a = 0 in the algebra; proven = 0 implies nothing */
dwa_status dwa_prove_zero(dwa_session* session, const dwa_element* a, int32_t budget,
                          int32_t* proven);

/* independent linear-algebra equality oracle; never calls reduce */
dwa_status dwa_oracle_equal(dwa_session* session, const dwa_element* a, const dwa_element* b,
                            int32_t* equal);

dwa_status dwa_element_is_zero(dwa_session* session, const dwa_element* a, int32_t* zero);

/* homogeneous = 1 with the common degree, else homogeneous = 0 */
dwa_status dwa_element_degree(dwa_session* session, const dwa_element* a, int32_t* degree,
                              int32_t* homogeneous);

dwa_status dwa_format_element(dwa_session* session, const dwa_element* a, dwa_format format,
                              char** out);

/* rendering with an optional trivalent splitter decoration (splitter_j = 0: none) */
dwa_status dwa_render(dwa_session* session, const dwa_element* a, dwa_format format,
                      int32_t splitter_j, int32_t merge_top, char** out);

/*
 * Verification driver, independent of any session.
 * suite: polyring | nilhecke | webster | deformed | bimodules | quotient | all
 * options_json: {"primes":[2,3],"s_max":3,"m_max":2,"n_max":2,
 *                "specs":[[2,1]],"n":1,"budget":0} — every key optional.
 * report_json receives the full per-instance report; all_proven the verdict.
 * On error, *error_message (when non-NULL) receives the description.
 */
dwa_status dwa_verify(const char* suite, const char* options_json, char** report_json,
                      int32_t* all_proven, char** error_message);

void dwa_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* DWA_H */
