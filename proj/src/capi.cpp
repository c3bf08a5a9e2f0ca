#include "hyperstate/hyperstate.h"

#include <cstring>
#include <string>

#include "dense.hpp"
#include "entanglement.hpp"
#include "errors.hpp"
#include "hypergraph.hpp"
#include "nonlocality.hpp"
#include "transforms.hpp"

using namespace hyperstate;

struct hs_hypergraph {
    HypergraphSpec spec;
};
struct hs_symmetric_state {
    SymmetricState state;
};
struct hs_dense_state {
    DenseState state;
};

namespace {

thread_local std::string g_last_error;

int fail(int code, const std::string& msg) {
    g_last_error = msg;
    return code;
}

// Runs the body and maps exceptions onto status codes.
template <typename F>
int guarded(F&& body) {
    try {
        body();
        return HS_OK;
    } catch (const CapExceeded& e) {
        return fail(HS_ERR_CAP_EXCEEDED, e.what());
    } catch (const UnsupportedFamily& e) {
        return fail(HS_ERR_UNSUPPORTED, e.what());
    } catch (const UnsupportedCase& e) {
        return fail(HS_ERR_UNSUPPORTED, e.what());
    } catch (const NotGhzOddForm& e) {
        return fail(HS_ERR_NOT_GHZ_ODD_FORM, e.what());
    } catch (const NoConvergence& e) {
        return fail(HS_ERR_NO_CONVERGENCE, e.what());
    } catch (const CrossCheckFailure& e) {
        return fail(HS_ERR_CROSS_CHECK, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(HS_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::logic_error& e) {
        return fail(HS_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(HS_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(HS_ERR_INTERNAL, "unknown error");
    }
}

int require(bool cond, const char* msg) {
    return cond ? HS_OK : fail(HS_ERR_INVALID_ARGUMENT, msg);
}

StabilizerClass to_stab(int s) {
    switch (s) {
        case HS_STAB_PLUS_X: return StabilizerClass::PlusX;
        case HS_STAB_MINUS_X: return StabilizerClass::MinusX;
        case HS_STAB_PLUS_Y: return StabilizerClass::PlusY;
        default: return StabilizerClass::None;
    }
}

int from_stab(StabilizerClass s) {
    switch (s) {
        case StabilizerClass::PlusX: return HS_STAB_PLUS_X;
        case StabilizerClass::MinusX: return HS_STAB_MINUS_X;
        case StabilizerClass::PlusY: return HS_STAB_PLUS_Y;
        case StabilizerClass::None: return HS_STAB_NONE;
    }
    return HS_STAB_NONE;
}

SingleQubitOp to_op(const double* re, const double* im) {
    SingleQubitOp op;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            op.m[i][j] = cplx(re[2 * i + j], im ? im[2 * i + j] : 0.0);
    return op;
}

void fill_bell_report(const BellReport& in, hs_bell_report* out) {
    out->quantum_value = in.quantum_value;
    out->signed_value = in.signed_value;
    out->imag_residue = in.imag_residue;
    out->classical_bound = in.classical_bound;
    out->separability_bound = in.separability_bound;
    out->ratio_log2 = in.ratio_log2;
    out->cross_residual = in.cross_residual;
    switch (in.method) {
        case BellMethod::contraction: out->method = HS_METHOD_CONTRACTION; break;
        case BellMethod::decomposition: out->method = HS_METHOD_DECOMPOSITION; break;
        case BellMethod::oracle: out->method = HS_METHOD_ORACLE; break;
    }
}

} // namespace

extern "C" {

const char* hs_version(void) { return "0.1.0"; }

const char* hs_status_name(int status) {
    switch (status) {
        case HS_OK: return "ok";
        case HS_ERR_INVALID_ARGUMENT: return "invalid_argument";
        case HS_ERR_UNSUPPORTED: return "unsupported";
        case HS_ERR_CAP_EXCEEDED: return "cap_exceeded";
        case HS_ERR_NOT_GHZ_ODD_FORM: return "not_ghz_odd_form";
        case HS_ERR_NO_CONVERGENCE: return "no_convergence";
        case HS_ERR_CROSS_CHECK: return "cross_check_failed";
        case HS_ERR_INTERNAL: return "internal";
    }
    return "unknown";
}

const char* hs_last_error(void) { return g_last_error.c_str(); }

const char* hs_stabilizer_name(int stabilizer) {
    return stabilizer_name(to_stab(stabilizer));
}

int hs_hypergraph_create_complete(int n_qubits, const int* cardinalities, int n_cardinalities,
                                  hs_hypergraph** out) {
    if (int rc = require(out && (n_cardinalities == 0 || cardinalities), "null argument")) return rc;
    return guarded([&] {
        std::vector<int> k(cardinalities, cardinalities + n_cardinalities);
        *out = new hs_hypergraph{HypergraphSpec::complete(n_qubits, std::move(k))};
    });
}

int hs_hypergraph_create_edges(int n_qubits, const int* vertices, const int* edge_sizes,
                               int n_edges, hs_hypergraph** out) {
    if (int rc = require(out && (n_edges == 0 || (vertices && edge_sizes)), "null argument")) return rc;
    return guarded([&] {
        std::vector<std::vector<int>> edges;
        const int* v = vertices;
        for (int e = 0; e < n_edges; ++e) {
            edges.emplace_back(v, v + edge_sizes[e]);
            v += edge_sizes[e];
        }
        *out = new hs_hypergraph{HypergraphSpec::from_edges(n_qubits, edges)};
    });
}

void hs_hypergraph_free(hs_hypergraph* hg) { delete hg; }

int hs_hypergraph_n_qubits(const hs_hypergraph* hg) { return hg ? hg->spec.n_qubits() : 0; }

int hs_weight_sign(const int* cardinalities, int n_cardinalities, long w, int* bit) {
    if (int rc = require(bit && (n_cardinalities == 0 || cardinalities), "null argument")) return rc;
    return guarded([&] {
        *bit = weight_sign(std::span<const int>(cardinalities, size_t(n_cardinalities)), w);
    });
}

int hs_classify(const hs_hypergraph* hg, int* stabilizer) {
    if (int rc = require(hg && stabilizer, "null argument")) return rc;
    return guarded([&] { *stabilizer = from_stab(classify_stabilizer(hg->spec)); });
}

int hs_toggle_pairwise(const hs_hypergraph* hg, hs_hypergraph** out) {
    if (int rc = require(hg && out, "null argument")) return rc;
    return guarded([&] { *out = new hs_hypergraph{toggle_pairwise_edges(hg->spec)}; });
}

int hs_build_symmetric(const hs_hypergraph* hg, hs_symmetric_state** out) {
    if (int rc = require(hg && out, "null argument")) return rc;
    return guarded([&] { *out = new hs_symmetric_state{build_symmetric(hg->spec)}; });
}

void hs_symmetric_state_free(hs_symmetric_state* s) { delete s; }

int hs_symmetric_n_qubits(const hs_symmetric_state* s) { return s ? s->state.n_qubits : 0; }

int hs_symmetric_amplitudes(const hs_symmetric_state* s, double* re, double* im) {
    if (int rc = require(s && re && im, "null argument")) return rc;
    for (int w = 0; w <= s->state.n_qubits; ++w) {
        re[w] = s->state.amp[w].real();
        im[w] = s->state.amp[w].imag();
    }
    return HS_OK;
}

int hs_symmetric_from_amplitudes(int n_qubits, const double* re, const double* im,
                                 hs_symmetric_state** out) {
    if (int rc = require(re && im && out, "null argument")) return rc;
    if (int rc = require(n_qubits >= 1, "n_qubits must be >= 1")) return rc;
    SymmetricState st;
    st.n_qubits = n_qubits;
    st.amp.resize(n_qubits + 1);
    for (int w = 0; w <= n_qubits; ++w) st.amp[w] = cplx(re[w], im[w]);
    *out = new hs_symmetric_state{std::move(st)};
    return HS_OK;
}

int hs_sqrt_pauli(int pauli, int branch, double* op_re, double* op_im) {
    if (int rc = require(op_re && op_im, "null argument")) return rc;
    if (int rc = require(pauli >= HS_PAULI_X && pauli <= HS_PAULI_Z, "bad pauli")) return rc;
    return guarded([&] {
        const SingleQubitOp op = sqrt_pauli(static_cast<Pauli>(pauli), branch);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                op_re[2 * i + j] = op(i, j).real();
                op_im[2 * i + j] = op(i, j).imag();
            }
    });
}

int hs_apply_tensor_power(const hs_symmetric_state* s, const double* op_re, const double* op_im,
                          hs_symmetric_state** out) {
    if (int rc = require(s && op_re && op_im && out, "null argument")) return rc;
    return guarded([&] {
        *out = new hs_symmetric_state{apply_tensor_power(s->state, to_op(op_re, op_im))};
    });
}

int hs_coeff_closed_form(int n_qubits, const int* cardinalities, int n_cardinalities,
                         int stabilizer, int w, double* re, double* im) {
    if (int rc = require(cardinalities && re && im, "null argument")) return rc;
    return guarded([&] {
        const cplx c = coeff_closed_form(
            n_qubits, std::span<const int>(cardinalities, size_t(n_cardinalities)),
            to_stab(stabilizer), w);
        *re = c.real();
        *im = c.imag();
    });
}

int hs_ghz_odd_decompose(const hs_symmetric_state* s, double tol, int* ghz_sign, char* basis,
                         double* residual, double* phase_re, double* phase_im, double* odd_re,
                         double* odd_im) {
    if (int rc = require(s && ghz_sign && basis && residual, "null argument")) return rc;
    return guarded([&] {
        const GhzOddDecomposition d = ghz_odd_decompose(s->state, tol);
        *ghz_sign = d.ghz_sign;
        *basis = d.ghz_basis;
        *residual = d.residual;
        if (phase_re) *phase_re = d.global_phase.real();
        if (phase_im) *phase_im = d.global_phase.imag();
        if (odd_re && odd_im)
            for (int w = 0; w <= s->state.n_qubits; ++w) {
                odd_re[w] = d.odd_amp[w].real();
                odd_im[w] = d.odd_amp[w].imag();
            }
    });
}

int hs_build_dense(const hs_hypergraph* hg, int cap, hs_dense_state** out) {
    if (int rc = require(hg && out, "null argument")) return rc;
    return guarded([&] { *out = new hs_dense_state{build_dense(hg->spec, cap)}; });
}

void hs_dense_state_free(hs_dense_state* d) { delete d; }

int hs_dense_n_qubits(const hs_dense_state* d) { return d ? d->state.n_qubits : 0; }

int hs_dense_amplitudes(const hs_dense_state* d, double* re, double* im) {
    if (int rc = require(d && re && im, "null argument")) return rc;
    for (size_t x = 0; x < d->state.amp.size(); ++x) {
        re[x] = d->state.amp[x].real();
        im[x] = d->state.amp[x].imag();
    }
    return HS_OK;
}

int hs_symmetric_to_dense(const hs_symmetric_state* s, int cap, hs_dense_state** out) {
    if (int rc = require(s && out, "null argument")) return rc;
    return guarded([&] { *out = new hs_dense_state{symmetric_to_dense(s->state, cap)}; });
}

int hs_dense_overlap(const hs_dense_state* a, const hs_dense_state* b, double* re, double* im) {
    if (int rc = require(a && b && re && im, "null argument")) return rc;
    return guarded([&] {
        const cplx o = overlap(a->state, b->state);
        *re = o.real();
        *im = o.imag();
    });
}

int hs_dense_apply_local(const hs_dense_state* d, const double* ops_re, const double* ops_im,
                         const int* sites, int n_sites, hs_dense_state** out) {
    if (int rc = require(d && ops_re && ops_im && sites && out, "null argument")) return rc;
    return guarded([&] {
        std::vector<SingleQubitOp> ops(n_sites);
        for (int i = 0; i < n_sites; ++i)
            ops[i] = to_op(ops_re + 4 * std::size_t(i), ops_im + 4 * std::size_t(i));
        *out = new hs_dense_state{
            apply_local(d->state, ops, std::span<const int>(sites, size_t(n_sites)))};
    });
}

int hs_dense_pauli_expectation(const hs_dense_state* d, const char* letters, double* re,
                               double* im) {
    if (int rc = require(d && letters && re && im, "null argument")) return rc;
    return guarded([&] {
        PauliString p;
        p.letters = letters;
        const cplx e = pauli_string_expectation(d->state, p);
        *re = e.real();
        *im = e.imag();
    });
}

int hs_dense_product_optimize(const hs_dense_state* d, int restarts, int real_only,
                              uint64_t seed, double* e_g, double* overlap_sq, double* locals_re,
                              double* locals_im) {
    if (int rc = require(d && e_g, "null argument")) return rc;
    return guarded([&] {
        const ProductOptResult r = product_state_optimize(d->state, restarts, real_only != 0, seed);
        *e_g = r.e_g;
        if (overlap_sq) *overlap_sq = r.best_overlap_sq;
        if (locals_re && locals_im)
            for (int q = 0; q < d->state.n_qubits; ++q)
                for (int b = 0; b < 2; ++b) {
                    locals_re[2 * q + b] = r.locals[q][b].real();
                    locals_im[2 * q + b] = r.locals[q][b].imag();
                }
    });
}

int hs_symmetric_overlap(const hs_symmetric_state* s, double theta, double phi, double* re,
                         double* im) {
    if (int rc = require(s && re && im, "null argument")) return rc;
    return guarded([&] {
        const cplx o = symmetric_overlap(s->state, theta, phi);
        *re = o.real();
        *im = o.imag();
    });
}

int hs_geomeasure_numeric(const hs_symmetric_state* s, int allow_phase, double* value,
                          double* theta, double* phi) {
    if (int rc = require(s && value, "null argument")) return rc;
    return guarded([&] {
        const GeoMeasureResult r = geomeasure_symmetric_numeric(s->state, allow_phase != 0);
        *value = r.value;
        if (theta) *theta = r.theta;
        if (phi) *phi = r.phi;
    });
}

int hs_geomeasure_closed(int n_qubits, const int* cardinalities, int n_cardinalities,
                         int* exact, double* lower, double* upper, int* stabilizer) {
    if (int rc = require(cardinalities && exact && lower && upper, "null argument")) return rc;
    return guarded([&] {
        const ClosedGeoMeasure c = geomeasure_closed(
            n_qubits, std::span<const int>(cardinalities, size_t(n_cardinalities)));
        *exact = c.exact ? 1 : 0;
        *lower = c.lower;
        *upper = c.upper;
        if (stabilizer) *stabilizer = from_stab(c.stabilizer);
    });
}

int hs_conjecture_lambda(int r, int n_qubits, int check_class, double* lambda, double* bound) {
    if (int rc = require(lambda && bound, "null argument")) return rc;
    return guarded([&] {
        const ConjectureBound b = conjecture_lambda(r, n_qubits, check_class != 0);
        *lambda = b.lambda;
        *bound = b.bound;
    });
}

int hs_single_edge_geomeasure(int n_qubits, double* value, double* theta) {
    if (int rc = require(value != nullptr, "null argument")) return rc;
    return guarded([&] {
        const GeoMeasureResult r = single_edge_geomeasure(n_qubits);
        *value = r.value;
        if (theta) *theta = r.theta;
    });
}

int hs_cyclic_cos_max_check(int r, int n_qubits, long grid, int* ok, double* deviation) {
    if (int rc = require(ok != nullptr, "null argument")) return rc;
    return guarded([&] {
        const CyclicMaxCheck c = cyclic_cos_max_check(r, n_qubits, grid);
        *ok = c.ok ? 1 : 0;
        if (deviation) *deviation = c.deviation;
    });
}

int hs_mod_binom_sum(int N, int q, int n, double* value) {
    if (int rc = require(value != nullptr, "null argument")) return rc;
    return guarded([&] { *value = mod_binom_sum(N, q, n); });
}

int hs_alternating_cos_sum(int M, double alpha, double beta, double* value) {
    if (int rc = require(value != nullptr, "null argument")) return rc;
    return guarded([&] { *value = alternating_cos_sum(M, alpha, beta); });
}

int hs_grouped_expectation(const hs_symmetric_state* s, const double* ma_re, const double* ma_im,
                           const double* mb_re, const double* mb_im, int split_k, double* re,
                           double* im) {
    if (int rc = require(s && ma_re && ma_im && mb_re && mb_im && re && im, "null argument")) return rc;
    return guarded([&] {
        const cplx e = grouped_tensor_power_expectation(s->state, to_op(ma_re, ma_im),
                                                        to_op(mb_re, mb_im), split_k);
        *re = e.real();
        *im = e.imag();
    });
}

int hs_mermin_value(const hs_hypergraph* hg, int pauli, hs_bell_report* report,
                    int* hypothesis_ok, double* decomposition_residual) {
    if (int rc = require(hg && report, "null argument")) return rc;
    if (int rc = require(pauli == HS_PAULI_X || pauli == HS_PAULI_Y, "pauli must be X or Y"))
        return rc;
    return guarded([&] {
        const MerminResult r = mermin_quantum_value(hg->spec, static_cast<Pauli>(pauli));
        fill_bell_report(r.report, report);
        if (hypothesis_ok) *hypothesis_ok = r.hypothesis_ok ? 1 : 0;
        if (decomposition_residual) *decomposition_residual = r.decomposition_residual;
    });
}

int hs_mermin_odd_correction(int r, int n_qubits, double* correction) {
    if (int rc = require(correction != nullptr, "null argument")) return rc;
    return guarded([&] { *correction = mermin_odd_correction(r, n_qubits); });
}

int hs_robustness(int n_qubits, int lost, int variant, hs_bell_report* report, int* table_row,
                  int* variant_used) {
    if (int rc = require(report != nullptr, "null argument")) return rc;
    if (int rc = require(variant >= 0 && variant <= 2, "variant must be 0 (auto), 1 (M0) or 2 (M1)"))
        return rc;
    return guarded([&] {
        const RobustnessVariant v = (variant == 0)   ? RobustnessVariant::Auto
                                    : (variant == 1) ? RobustnessVariant::M0
                                                     : RobustnessVariant::M1;
        const RobustnessResult r = robustness_value(n_qubits, lost, v);
        fill_bell_report(r.report, report);
        if (table_row) *table_row = r.table_row;
        if (variant_used) *variant_used = r.variant_used;
    });
}

int hs_table1_family(const int* cardinalities, int n_cardinalities, int* residue, int* modulus,
                     int* stabilizer, int* r) {
    if (int rc = require(cardinalities && residue && modulus && stabilizer, "null argument"))
        return rc;
    return guarded([&] {
        const FamilyDescriptor d =
            table1_family(std::span<const int>(cardinalities, size_t(n_cardinalities)));
        *residue = d.residue;
        *modulus = d.modulus;
        *stabilizer = from_stab(d.stabilizer);
        if (r) *r = d.r;
    });
}

} // extern "C"
