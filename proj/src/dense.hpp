#ifndef HYPERSTATE_DENSE_HPP
#define HYPERSTATE_DENSE_HPP

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hypergraph.hpp"
#include "qubit_op.hpp"

namespace hyperstate {

inline constexpr int kDefaultDenseCap = 24;

// Brute-force 2^n statevector. Basis index x encodes the bitstring with
// qubit 0 as the most significant bit.
struct DenseState {
    int n_qubits = 0;
    std::vector<cplx> amp; // size 2^n_qubits

    double norm_error() const;
    static int bit(std::uint64_t x, int qubit, int n_qubits) {
        return int((x >> (n_qubits - 1 - qubit)) & 1u);
    }
};

// |+>^n: every amplitude 1/sqrt(2^n).
DenseState uniform_superposition(int n_qubits, int cap = kDefaultDenseCap);

// Sign flip on the all-ones subspace of `edge` (the generalized CZ gate C_e).
void apply_ce(DenseState& state, std::span<const int> edge);

// Gate-by-gate construction: C_e applied to |+>^n for every hyperedge;
// complete-form specs expand to all C(n, k) edges.
DenseState build_dense(const HypergraphSpec& spec, int cap = kDefaultDenseCap);

DenseState symmetric_to_dense(const SymmetricState& s, int cap = kDefaultDenseCap);

struct WeightProjection {
    SymmetricState state;
    double symmetry_residual; // max per-amplitude deviation from the weight-class mean
};
WeightProjection dense_weight_projection(const DenseState& state);

// Apply each 2x2 op to its site. Sites must be distinct.
DenseState apply_local(const DenseState& state, std::span<const SingleQubitOp> ops,
                       std::span<const int> sites);

// op^{tensor n} applied to every site.
DenseState apply_all(const DenseState& state, const SingleQubitOp& op);

struct PauliString {
    std::string letters; // one of I, X, Y, Z per qubit
    cplx prefactor = 1.0;
};

cplx pauli_string_expectation(const DenseState& state, const PauliString& p);

cplx overlap(const DenseState& a, const DenseState& b); // <a|b>
bool equal_up_to_global_phase(const DenseState& a, const DenseState& b, double tol);

struct ProductOptResult {
    double e_g = 0.0;          // 1 - best squared overlap
    double best_overlap_sq = 0.0;
    std::vector<std::array<cplx, 2>> locals; // per-qubit states of the best run
    int converged_restarts = 0;
    std::uint64_t seed = 0;
};

// Best rank-one (product-state) approximation by alternating single-site
// updates: each qubit's local state is replaced by its normalized single-site
// environment, sweeping until the overlap is stationary, over `restarts`
// random initializations. real_only restricts the search to real product
// states (initial angles uniform on [0, pi)).
ProductOptResult product_state_optimize(const DenseState& state, int restarts, bool real_only,
                                        std::uint64_t seed);

} // namespace hyperstate

#endif
