#ifndef HYPERSTATE_TRANSFORMS_HPP
#define HYPERSTATE_TRANSFORMS_HPP

#include <span>
#include <vector>

#include "hypergraph.hpp"
#include "qubit_op.hpp"

namespace hyperstate {

inline constexpr int kContractionCap = 128;

// M^{tensor n} on a weight-represented symmetric state: the output amplitude
// of each weight-u element is
//   d_u = sum_w c_w sum_t C(u,t) C(n-u,w-t) m11^t m10^{u-t} m01^{w-t} m00^{n-u-w+t},
// counting transitions by the overlap t between input and output 1-sets.
// O(n^3) with compensated summation.
SymmetricState apply_tensor_power(const SymmetricState& s, const SingleQubitOp& m);

// Per-element amplitude of weight w after sqrt(P)_+^{tensor n} applied to the
// complete state with cardinality vector k, where P is the stabilizing Pauli
// (X for the +/-X classes, Y for +Y). Evaluated along two independent routes
// (the direct transition sum and the root-of-unity resummation over one period
// of the sign function); throws CrossCheckFailure if they disagree.
cplx coeff_closed_form(int n_qubits, std::span<const int> cardinalities, StabilizerClass stab,
                       int w, double path_tol = 1e-10);

// Odd-weight coefficient of the (2^{r-1}+1)-uniform X-stabilized family,
// N = l*2^r + 2^{r-1}, r >= 3, after sqrt(X)_+^{tensor N}:
//   (2/2^r) sum_{j odd} i^{j-1} cos^{N-w}(pi j/2^r) sin^w(pi j/2^r) / cos(2 pi j/2^r),
// multiplied by the sign that makes it the actual amplitude (pinned against
// the general route; see tests).
double uniform_family_odd_coeff_x(int r, int n_qubits, int w);

// Same for the Y-stabilized family (N = l*2^r): the actual amplitude is
// i^{w-1} times the returned real value.
double uniform_family_odd_coeff_y(int r, int n_qubits, int w);

// Decomposition of a transformed state into a GHZ part plus odd-weight rest:
// state = global_phase * ghz_sign * (1/sqrt2)|GHZ_basis> + (odd part).
struct GhzOddDecomposition {
    int ghz_sign = 0;           // sign of the GHZ component
    char ghz_basis = 'Z';       // 'Z': (|0..0>+|1..1>)/sqrt2; 'X': (|+..+>+|-..->)/sqrt2
    cplx global_phase = 1.0;    // unit phase left on the GHZ part after the sign split
    std::vector<cplx> odd_amp;  // raw per-element amplitudes, zero at even weights
    double residual = 0.0;      // max deviation of the even-weight content from the GHZ form
};

// Never throws; the residual reports how far the state is from the claimed form.
GhzOddDecomposition try_ghz_odd_decompose(const SymmetricState& s);

// Throws NotGhzOddForm when the residual exceeds tol.
GhzOddDecomposition ghz_odd_decompose(const SymmetricState& s, double tol = 1e-10);

// Extra structure of the transformed three-uniform states: odd amplitudes
// 1/sqrt(2^n) (X case) resp. (-i)^{w-1}/sqrt(2^n) up to the GHZ sign (Y case).
double three_uniform_form_residual(const GhzOddDecomposition& d, int n_qubits,
                                   StabilizerClass stab);

// sum_{w == q mod n} C(N, w) evaluated through the root-of-unity closed form
// (1/n) sum_j (2 cos(pi j/n))^N cos(pi j (N - 2q)/n).
double mod_binom_sum(int N, int q, int n);

// Re(e^{i pi alpha/beta} (-2i sin(pi/beta))^M), the closed form of
// sum_m (-1)^m C(M,m) cos(pi(2m - M + alpha)/beta).
double alternating_cos_sum(int M, double alpha, double beta);

// Utility: integer power with exact handling of negative bases.
double ipow(double base, long exp);
cplx ipow(cplx base, long exp);
// e^{i pi q/4} exactly on the eighth roots of unity.
cplx unit_phase_quarter(long q);
// (-i)^q
cplx minus_i_pow(long q);

} // namespace hyperstate

#endif
