#ifndef HYPERSTATE_HYPERGRAPH_HPP
#define HYPERSTATE_HYPERGRAPH_HPP

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "qubit_op.hpp"

namespace hyperstate {

// A hypergraph on n_qubits vertices, given either as a cardinality vector
// (the complete k-uniform case, one entry per hyperedge size) or as an
// explicit list of hyperedges.
class HypergraphSpec {
  public:
    // Complete form: every hyperedge of each listed cardinality is present.
    static HypergraphSpec complete(int n_qubits, std::vector<int> cardinalities);
    // Explicit form. Duplicate edges cancel pairwise (each C_e is an involution),
    // so edges are deduplicated by parity of their multiplicity.
    static HypergraphSpec from_edges(int n_qubits, const std::vector<std::vector<int>>& edges);

    int n_qubits() const { return n_qubits_; }
    bool is_complete() const { return complete_; }
    const std::vector<int>& cardinalities() const;
    const std::vector<std::vector<int>>& edges() const;

    // Every hyperedge, materialized. For the complete form this expands each
    // cardinality k into all C(n, k) subsets.
    std::vector<std::vector<int>> expand_edges() const;

    std::string describe() const;

  private:
    HypergraphSpec() = default;
    int n_qubits_ = 0;
    bool complete_ = false;
    std::vector<int> cardinalities_;
    std::vector<std::vector<int>> edges_;
};

// Permutation-symmetric n-qubit state stored as one amplitude per Hamming
// weight class: amp[w] is the amplitude of EACH basis element of weight w,
// so the norm carries the C(n, w) multiplicities.
struct SymmetricState {
    int n_qubits = 0;
    std::vector<cplx> amp; // size n_qubits + 1

    // |sum_w C(n,w) |amp[w]|^2 - 1|
    double norm_error() const;
    double norm() const;
};

enum class StabilizerClass { PlusX, MinusX, PlusY, None };

const char* stabilizer_name(StabilizerClass s);

// f(w) = sum_i C(w, k_i) mod 2, the sign function of the complete state.
int weight_sign(std::span<const int> cardinalities, long w);

// Smallest power of two 2^r with f periodic of period 2^r, i.e.
// 2^ceil(log2(max k + 1)).
int weight_sign_period(std::span<const int> cardinalities);

// amp[w] = (-1)^{f(w)} / sqrt(2^n) for a complete-form spec.
SymmetricState build_symmetric(const HypergraphSpec& spec);

// Palindrome classification of the local Pauli stabilizer of a complete-form
// state, with exact integer arithmetic. The Y condition involves
// n/2 and is only tested for even n. The three conditions are mutually
// exclusive, so at most one variant can match.
StabilizerClass classify_stabilizer(const HypergraphSpec& spec);

// Add/remove all cardinality-2 hyperedges of an even-qubit complete spec.
// Swaps the classification between an X variant and +Y.
HypergraphSpec toggle_pairwise_edges(const HypergraphSpec& spec);

} // namespace hyperstate

#endif
