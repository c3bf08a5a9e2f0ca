/* hyperstate: entanglement and Bell-nonlocality quantities for symmetric
 * quantum hypergraph states.
 *
 * C API of the shared library. All functions return a status code from
 * hs_status (HS_OK on success); results are written through out-parameters.
 * On failure hs_last_error() carries a thread-local message. Handles are
 * opaque and freed with the matching *_free function. All computations are
 * pure; a handle may be shared across threads once created.
 */
#ifndef HYPERSTATE_H
#define HYPERSTATE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define HS_API __declspec(dllexport)
#else
#define HS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hs_status {
    HS_OK = 0,
    HS_ERR_INVALID_ARGUMENT = 1,
    HS_ERR_UNSUPPORTED = 2,       /* family/case not covered by a closed form */
    HS_ERR_CAP_EXCEEDED = 3,      /* dense or contraction size cap */
    HS_ERR_NOT_GHZ_ODD_FORM = 4,  /* decomposition residual above tolerance */
    HS_ERR_NO_CONVERGENCE = 5,    /* optimizer failed on every restart */
    HS_ERR_CROSS_CHECK = 6,       /* two computation routes disagree */
    HS_ERR_INTERNAL = 7
} hs_status;

typedef enum hs_stabilizer {
    HS_STAB_PLUS_X = 0,
    HS_STAB_MINUS_X = 1,
    HS_STAB_PLUS_Y = 2,
    HS_STAB_NONE = 3
} hs_stabilizer;

typedef enum hs_pauli { HS_PAULI_X = 0, HS_PAULI_Y = 1, HS_PAULI_Z = 2 } hs_pauli;

typedef enum hs_method {
    HS_METHOD_CLOSED_FORM = 0,
    HS_METHOD_CONTRACTION = 1,
    HS_METHOD_NUMERIC_OPT = 2,
    HS_METHOD_ORACLE = 3,
    HS_METHOD_DECOMPOSITION = 4
} hs_method;

typedef struct hs_hypergraph hs_hypergraph;
typedef struct hs_symmetric_state hs_symmetric_state;
typedef struct hs_dense_state hs_dense_state;

HS_API const char* hs_version(void);
HS_API const char* hs_status_name(int status);
/* Message of the last failing call on this thread; empty string if none. */
HS_API const char* hs_last_error(void);
HS_API const char* hs_stabilizer_name(int stabilizer);

/* ---- hypergraph specifications -------------------------------------- */

/* Complete k-uniform spec: every hyperedge of each listed cardinality. */
HS_API int hs_hypergraph_create_complete(int n_qubits, const int* cardinalities,
                                         int n_cardinalities, hs_hypergraph** out);
/* Explicit edges: vertices is the concatenation of all edges, edge_sizes the
 * length of each. Duplicate edges cancel pairwise. */
HS_API int hs_hypergraph_create_edges(int n_qubits, const int* vertices,
                                      const int* edge_sizes, int n_edges,
                                      hs_hypergraph** out);
HS_API void hs_hypergraph_free(hs_hypergraph* hg);
HS_API int hs_hypergraph_n_qubits(const hs_hypergraph* hg);

/* f(w) = sum_i C(w, k_i) mod 2, exact. */
HS_API int hs_weight_sign(const int* cardinalities, int n_cardinalities, long w, int* bit);
/* Palindrome classification of the local Pauli stabilizer (complete form). */
HS_API int hs_classify(const hs_hypergraph* hg, int* stabilizer);
/* Add/remove all cardinality-2 edges (even n only). */
HS_API int hs_toggle_pairwise(const hs_hypergraph* hg, hs_hypergraph** out);

/* ---- symmetric (weight-basis) states --------------------------------- */

HS_API int hs_build_symmetric(const hs_hypergraph* hg, hs_symmetric_state** out);
HS_API void hs_symmetric_state_free(hs_symmetric_state* s);
HS_API int hs_symmetric_n_qubits(const hs_symmetric_state* s);
/* re/im must hold n_qubits + 1 entries. */
HS_API int hs_symmetric_amplitudes(const hs_symmetric_state* s, double* re, double* im);
HS_API int hs_symmetric_from_amplitudes(int n_qubits, const double* re, const double* im,
                                        hs_symmetric_state** out);

/* 2x2 ops are row-major 4-entry re/im arrays. */
HS_API int hs_sqrt_pauli(int pauli, int branch, double* op_re, double* op_im);
HS_API int hs_apply_tensor_power(const hs_symmetric_state* s, const double* op_re,
                                 const double* op_im, hs_symmetric_state** out);

/* Closed-form amplitude of weight w after sqrt(P)+^{xN}; both evaluation
 * routes are cross-checked internally. */
HS_API int hs_coeff_closed_form(int n_qubits, const int* cardinalities, int n_cardinalities,
                                int stabilizer, int w, double* re, double* im);

/* GHZ + odd-weight decomposition of a transformed state. odd_re/odd_im may be
 * NULL or hold n_qubits + 1 entries. basis is 'Z' or 'X'. */
HS_API int hs_ghz_odd_decompose(const hs_symmetric_state* s, double tol, int* ghz_sign,
                                char* basis, double* residual, double* phase_re,
                                double* phase_im, double* odd_re, double* odd_im);

/* ---- dense oracle ----------------------------------------------------- */

HS_API int hs_build_dense(const hs_hypergraph* hg, int cap, hs_dense_state** out);
HS_API void hs_dense_state_free(hs_dense_state* d);
HS_API int hs_dense_n_qubits(const hs_dense_state* d);
/* re/im must hold 2^n_qubits entries. */
HS_API int hs_dense_amplitudes(const hs_dense_state* d, double* re, double* im);
HS_API int hs_symmetric_to_dense(const hs_symmetric_state* s, int cap, hs_dense_state** out);
HS_API int hs_dense_overlap(const hs_dense_state* a, const hs_dense_state* b, double* re,
                            double* im);
HS_API int hs_dense_apply_local(const hs_dense_state* d, const double* ops_re,
                                const double* ops_im, const int* sites, int n_sites,
                                hs_dense_state** out);
/* letters: string of I/X/Y/Z of length n_qubits. */
HS_API int hs_dense_pauli_expectation(const hs_dense_state* d, const char* letters,
                                      double* re, double* im);
/* Multi-start alternating product-state optimizer. locals_re/locals_im may be
 * NULL or hold 2*n_qubits entries (the best per-qubit states). */
HS_API int hs_dense_product_optimize(const hs_dense_state* d, int restarts, int real_only,
                                     uint64_t seed, double* e_g, double* overlap_sq,
                                     double* locals_re, double* locals_im);

/* ---- geometric measure ------------------------------------------------ */

HS_API int hs_symmetric_overlap(const hs_symmetric_state* s, double theta, double phi,
                                double* re, double* im);
/* 1 - max |overlap|^2 over symmetric product states. */
HS_API int hs_geomeasure_numeric(const hs_symmetric_state* s, int allow_phase, double* value,
                                 double* theta, double* phi);
/* Closed forms/bounds for the 3- and 5-uniform families. exact = 1 when
 * lower == upper is the exact value. */
HS_API int hs_geomeasure_closed(int n_qubits, const int* cardinalities, int n_cardinalities,
                                int* exact, double* lower, double* upper, int* stabilizer);
/* Conjectured (unproven) lower-bound data for the (2^{r-1}+1)-uniform family. */
HS_API int hs_conjecture_lambda(int r, int n_qubits, int check_class, double* lambda,
                                double* bound);
HS_API int hs_single_edge_geomeasure(int n_qubits, double* value, double* theta);
HS_API int hs_cyclic_cos_max_check(int r, int n_qubits, long grid, int* ok, double* deviation);
HS_API int hs_mod_binom_sum(int N, int q, int n, double* value);
HS_API int hs_alternating_cos_sum(int M, double alpha, double beta, double* value);

/* ---- nonlocality ------------------------------------------------------ */

/* <s| Ma^{x(n-k)} (x) Mb^{xk} |s>. */
HS_API int hs_grouped_expectation(const hs_symmetric_state* s, const double* ma_re,
                                  const double* ma_im, const double* mb_re,
                                  const double* mb_im, int split_k, double* re, double* im);

typedef struct hs_bell_report {
    double quantum_value;
    double signed_value;
    double imag_residue;
    double classical_bound;
    double separability_bound;
    double ratio_log2;
    int method; /* hs_method */
    double cross_residual;
} hs_bell_report;

HS_API int hs_mermin_value(const hs_hypergraph* hg, int pauli, hs_bell_report* report,
                           int* hypothesis_ok, double* decomposition_residual);
HS_API int hs_mermin_odd_correction(int r, int n_qubits, double* correction);

/* variant: 0 = auto, 1 = M0, 2 = M1. table_row: 1..4 per the closed-form
 * table, 0 for the degenerate parity cases, -1 when no row applies. */
HS_API int hs_robustness(int n_qubits, int lost, int variant, hs_bell_report* report,
                         int* table_row, int* variant_used);

/* Family descriptor for cardinality vectors with entries 2^i + 1 and an
 * optional trailing 2: N residue class, modulus and predicted stabilizer. */
HS_API int hs_table1_family(const int* cardinalities, int n_cardinalities, int* residue,
                            int* modulus, int* stabilizer, int* r);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* HYPERSTATE_H */
