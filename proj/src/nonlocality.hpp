#ifndef HYPERSTATE_NONLOCALITY_HPP
#define HYPERSTATE_NONLOCALITY_HPP

#include <span>

#include "hypergraph.hpp"
#include "qubit_op.hpp"
#include "transforms.hpp"

namespace hyperstate {

enum class BellMethod { contraction, decomposition, oracle };

const char* bell_method_name(BellMethod m);

struct BellReport {
    double quantum_value = 0.0;     // |signed_value|
    double signed_value = 0.0;      // real part of the raw expectation
    double imag_residue = 0.0;      // |imaginary part| of the raw expectation
    double classical_bound = 0.0;   // local-realistic bound
    double separability_bound = 0.0;
    double ratio_log2 = 0.0;        // log2(quantum_value / relevant bound)
    BellMethod method = BellMethod::contraction;
    double cross_residual = 0.0;    // |contraction - closed form| when both computed
};

// <s| Ma^{tensor (n-k)} (x) Mb^{tensor k} |s> for a symmetric state, by a
// two-level weight split: the outer sums run over the weights carried by each
// site group (with binomial multiplicities), the inner transition sums are the
// same counts as in apply_tensor_power. O(n^4).
cplx grouped_tensor_power_expectation(const SymmetricState& s, const SingleQubitOp& ma,
                                      const SingleQubitOp& mb, int split_k);

// The same contraction over absolute values: the total mass the alternating
// sum cancels against, which sets the attainable floating-point accuracy.
double grouped_expectation_abs_scale(const SymmetricState& s, const SingleQubitOp& ma,
                                     const SingleQubitOp& mb, int split_k);

// Quantum value of the Mermin operator B^P = ((P+iZ)^{xN} + (P-iZ)^{xN})/2 on
// a complete-form hypergraph state, via two grouped contractions. When the
// state maps to (GHZ + odd weights) under sqrt(P)_+^{xN} (checked through the
// decomposition, with a sqrt(Z)_+ cleanup pass where needed), the value is
// asserted to equal 2^{n-2}.
struct MerminResult {
    BellReport report;
    bool hypothesis_ok = false;
    double decomposition_residual = 0.0;
};
MerminResult mermin_quantum_value(const HypergraphSpec& spec, Pauli pauli);

// Closed-form odd-weight contribution to <B^Y> for the (2^{r-1}+1)-uniform
// X-stabilized family (r >= 3, N = 2^{r-1} mod 2^r):
//   -(4/4^r) | sum_{l odd} i^l (cos(l pi/2^r) + sin(l pi/2^r))^N / cos(2 l pi/2^r) |^2.
// The full quantum value is 2^{N-2} plus this (nonpositive) correction.
double mermin_odd_correction(int r, int n_qubits);

enum class RobustnessVariant { Auto, M0, M1 };

// Separability violation of M^i_{N-k} (x) 1^k on the three-uniform complete
// state after losing the trailing k qubits. The closed form follows the
// (N mod 4, k parity, (N-k) mod 4) table; Auto picks the applicable row with
// the largest value. Cross-checked against the grouped contraction.
struct RobustnessResult {
    BellReport report;
    int table_row = 0;  // 1..4; 0 = degenerate row-1/2 parity case; -1 = no row (value unlabeled)
    int variant_used = 0; // 0 or 1
};
RobustnessResult robustness_value(int n_qubits, int lost, RobustnessVariant variant);

// Table-1 family descriptor for cardinality vectors with entries 2^i + 1
// (i >= 1), optionally with a trailing 2: the residue class of N (mod n_r,
// n_r = 2^{r+1}, r = log2(k_max - 1)) and the predicted stabilizer.
struct FamilyDescriptor {
    int residue = 0;
    int modulus = 0;
    StabilizerClass stabilizer = StabilizerClass::None;
    int r = 0;
};
FamilyDescriptor table1_family(std::span<const int> cardinalities);

} // namespace hyperstate

#endif
