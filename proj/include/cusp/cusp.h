/* SPDX-License-Identifier: Apache-2.0 */
#ifndef CUSP_CUSP_H
#define CUSP_CUSP_H

/*
 * C interface to the cusp algebra toolkit.
 *
 * Objects are opaque handles created by cusp_*_create / cusp_*_from_* and
 * released with the matching cusp_*_destroy. Every fallible call returns a
 * cusp_status; on failure the output handle is left untouched and
 * cusp_last_error() describes the problem (thread-local, valid until the
 * next failing call on the same thread).
 *
 * Variable-length results follow a query pattern: pass out == NULL to learn
 * the length, then call again with a buffer of at least that capacity.
 * Strings returned through char** are owned by the caller and released with
 * cusp_string_free.
 *
 * Tolerance arguments <= 0 select the library default.
 */

#include <stddef.h>

#if defined(_WIN32)
#  if defined(CUSP_BUILDING_LIBRARY)
#    define CUSP_API __declspec(dllexport)
#  else
#    define CUSP_API __declspec(dllimport)
#  endif
#else
#  define CUSP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cusp_status {
    CUSP_OK = 0,
    CUSP_ERR_INVALID_ARGUMENT = 1,
    CUSP_ERR_TRUNCATION_MISMATCH = 2,
    CUSP_ERR_NOT_ALGEBRAIC = 3,
    CUSP_ERR_NOT_CUSP = 4,
    CUSP_ERR_NOT_SIMPLE = 5,
    CUSP_ERR_NOT_MEMBER = 6,
    CUSP_ERR_NUMERICAL = 7,
    CUSP_ERR_PARSE = 8,
    CUSP_ERR_BUFFER_TOO_SMALL = 9,
    CUSP_ERR_INTERNAL = 10
} cusp_status;

typedef struct cusp_complex {
    double re;
    double im;
} cusp_complex;

typedef struct cusp_invariants {
    size_t codimension;
    size_t order;
    size_t contact;
    int simple;
} cusp_invariants;

typedef enum cusp_svg_axes { CUSP_SVG_REAL = 0, CUSP_SVG_IMAG = 1 } cusp_svg_axes;

typedef struct cusp_jet cusp_jet;
typedef struct cusp_connection cusp_connection;
typedef struct cusp_algebra cusp_algebra;
typedef struct cusp_moduli cusp_moduli;
typedef struct cusp_embedding cusp_embedding;
typedef struct cusp_render cusp_render;

CUSP_API const char* cusp_status_message(cusp_status status);
CUSP_API const char* cusp_last_error(void);
CUSP_API void cusp_string_free(char* s);

/* Jets: truncated Taylor series c_0 + ... + c_N z^N. */
CUSP_API cusp_status cusp_jet_create(const cusp_complex* coeffs, size_t count, cusp_jet** out);
CUSP_API cusp_status cusp_jet_from_json(const char* text, cusp_jet** out);
CUSP_API cusp_status cusp_jet_to_json(const cusp_jet* jet, int digits, char** out);
CUSP_API void cusp_jet_destroy(cusp_jet* jet);
CUSP_API size_t cusp_jet_truncation(const cusp_jet* jet);
CUSP_API cusp_status cusp_jet_coefficients(const cusp_jet* jet, cusp_complex* out, size_t capacity, size_t* count);
CUSP_API cusp_status cusp_jet_mul(const cusp_jet* a, const cusp_jet* b, cusp_jet** out);
CUSP_API cusp_status cusp_jet_compose(const cusp_jet* g, const cusp_jet* psi, cusp_jet** out);
CUSP_API cusp_status cusp_jet_revert(const cusp_jet* f, cusp_jet** out);
CUSP_API cusp_status cusp_jet_sqrt_order2(const cusp_jet* pi, cusp_jet** out);
CUSP_API cusp_status cusp_jet_exp(const cusp_jet* q, cusp_jet** out);

/* Connections: spaces of derivative functionals at the origin. Rows are
 * given in the Taylor basis, row_count rows of truncation + 1 entries. */
CUSP_API cusp_status cusp_connection_create(size_t truncation, const cusp_complex* taylor_rows, size_t row_count,
                                            cusp_connection** out);
CUSP_API cusp_status cusp_connection_from_json(const char* text, cusp_connection** out);
CUSP_API cusp_status cusp_connection_to_json(const cusp_connection* gamma, int digits, char** out);
CUSP_API void cusp_connection_destroy(cusp_connection* gamma);
CUSP_API size_t cusp_connection_dim(const cusp_connection* gamma);
CUSP_API size_t cusp_connection_truncation(const cusp_connection* gamma);
CUSP_API cusp_status cusp_connection_is_algebraic(const cusp_connection* gamma, int* out);
/* Echelonized pushforward g -> Lambda(g o psi); psi is re-truncated to the
 * connection truncation. */
CUSP_API cusp_status cusp_connection_pushforward(const cusp_connection* gamma, const cusp_jet* psi, double tolerance,
                                                 cusp_connection** out);
CUSP_API cusp_status cusp_connection_same_span(const cusp_connection* a, const cusp_connection* b, double tolerance,
                                               int* out);

/* Cusp algebras. truncation == 0 selects max(connection truncation,
 * 2 dim + 3). */
CUSP_API cusp_status cusp_algebra_from_connection(const cusp_connection* gamma, size_t truncation,
                                                  cusp_algebra** out);
CUSP_API cusp_status cusp_algebra_from_moduli(const cusp_moduli* m, size_t truncation, cusp_algebra** out);
CUSP_API void cusp_algebra_destroy(cusp_algebra* a);
CUSP_API size_t cusp_algebra_truncation(const cusp_algebra* a);
CUSP_API cusp_status cusp_algebra_invariants(const cusp_algebra* a, cusp_invariants* out);
CUSP_API cusp_status cusp_algebra_connection(const cusp_algebra* a, cusp_connection** out);
CUSP_API cusp_status cusp_algebra_contains(const cusp_algebra* a, const cusp_jet* f, int* out);
CUSP_API cusp_status cusp_algebra_primitive(const cusp_algebra* a, cusp_jet** out);
CUSP_API cusp_status cusp_algebra_filtration(const cusp_algebra* a, size_t* dims, size_t capacity, size_t* count,
                                             size_t* n0);
/* f = sum_k poly[k] pi^k + z^{2 n0 + 2} remainder. */
CUSP_API cusp_status cusp_algebra_decompose(const cusp_algebra* a, const cusp_jet* f, const cusp_jet* pi,
                                            cusp_complex* poly, size_t capacity, size_t* count,
                                            cusp_jet** remainder);
CUSP_API cusp_status cusp_algebra_canonical_form(const cusp_algebra* a, cusp_moduli** out);

/* Moduli points alpha_1..alpha_n of z^2 + alpha_1 z^3 + ... + alpha_n z^{2n+1}. */
CUSP_API cusp_status cusp_moduli_create(const cusp_complex* alphas, size_t n, cusp_moduli** out);
CUSP_API cusp_status cusp_moduli_from_json(const char* text, cusp_moduli** out);
CUSP_API cusp_status cusp_moduli_to_json(const cusp_moduli* m, int digits, char** out);
CUSP_API void cusp_moduli_destroy(cusp_moduli* m);
CUSP_API size_t cusp_moduli_count(const cusp_moduli* m);
CUSP_API cusp_status cusp_moduli_alphas(const cusp_moduli* m, cusp_complex* out, size_t capacity, size_t* count);
CUSP_API cusp_status cusp_moduli_primitive(const cusp_moduli* m, size_t truncation, cusp_jet** out);
CUSP_API cusp_status cusp_moduli_coordinates(const cusp_moduli* m, double tolerance, cusp_moduli** out);
/* *equivalent is 1 with *tau set when b_j = tau^{2j-1} a_j for all j. */
CUSP_API cusp_status cusp_moduli_equivalent(const cusp_moduli* a, const cusp_moduli* b, double tolerance,
                                            int* equivalent, cusp_complex* tau);
CUSP_API cusp_status cusp_local_equivalence_map(const cusp_jet* pi1, const cusp_jet* pi2, double tolerance,
                                                cusp_jet** out);

/* Two-function embeddings (h1, h2), each p(z) e^{q(z)}. */
CUSP_API cusp_status cusp_embedding_create(const cusp_algebra* a, cusp_embedding** out);
CUSP_API void cusp_embedding_destroy(cusp_embedding* e);
/* component is 1 or 2. */
CUSP_API cusp_status cusp_embedding_component(const cusp_embedding* e, int component, cusp_complex* p,
                                              size_t p_capacity, size_t* p_count, cusp_complex* q,
                                              size_t q_capacity, size_t* q_count);
CUSP_API cusp_status cusp_embedding_density_check(const cusp_algebra* a, const cusp_embedding* e, int* out);

CUSP_API cusp_status cusp_embedding_render(const cusp_embedding* e, size_t radial_steps, size_t angular_steps,
                                           cusp_render** out);
CUSP_API void cusp_render_destroy(cusp_render* r);
CUSP_API size_t cusp_render_count(const cusp_render* r);
CUSP_API cusp_status cusp_render_samples(const cusp_render* r, cusp_complex* z, cusp_complex* w, size_t capacity);
CUSP_API cusp_status cusp_render_csv(const cusp_render* r, char** out);
CUSP_API cusp_status cusp_render_svg(const cusp_render* r, cusp_svg_axes axes, char** out);

#ifdef __cplusplus
}
#endif

#endif /* CUSP_CUSP_H */
