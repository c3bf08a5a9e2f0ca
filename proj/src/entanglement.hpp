#ifndef HYPERSTATE_ENTANGLEMENT_HPP
#define HYPERSTATE_ENTANGLEMENT_HPP

#include <span>

#include "hypergraph.hpp"

namespace hyperstate {

enum class GeoMethod { closed_form, symmetric_numeric, oracle };

const char* geo_method_name(GeoMethod m);

struct GeoMeasureResult {
    double value = 0.0; // 1 - max squared overlap
    double theta = 0.0; // argmax of the overlap (smallest in case of ties)
    double phi = 0.0;
    GeoMethod method = GeoMethod::symmetric_numeric;
    double residual_vs_alternate = 0.0;
};

// <s | (cos(theta)|0> + e^{i phi} sin(theta)|1>)^{tensor n}>
//   = sum_w C(n,w) conj(amp[w]) cos^{n-w}(theta) (e^{i phi} sin(theta))^w
cplx symmetric_overlap(const SymmetricState& s, double theta, double phi);

// Maximize |symmetric_overlap|^2 over symmetric product states. With
// allow_phase = false the search runs over theta in [0, pi) (real product
// states up to a global sign), seeded by a 4096-point grid and refined by
// golden section; with allow_phase = true a 512x512 grid over (theta, phi)
// is refined coordinate-wise. Returns 1 - max.
GeoMeasureResult geomeasure_symmetric_numeric(const SymmetricState& s, bool allow_phase);

// Closed forms and bounds for the covered complete-uniform families:
// three-uniform X (exact), three-uniform Y (bounds), five-uniform X (exact),
// five-uniform Y (bounds). Throws UnsupportedFamily otherwise.
struct ClosedGeoMeasure {
    bool exact = false;
    double value = 0.0; // meaningful when exact
    double lower = 0.0;
    double upper = 0.0;
    StabilizerClass stabilizer = StabilizerClass::None;
};
ClosedGeoMeasure geomeasure_closed(int n_qubits, std::span<const int> cardinalities);

// lambda_N of the conjectured bound for the (2^{r-1}+1)-uniform X-stabilized
// family, and the bound 3/4 - lambda - lambda^2. Conjectured, not proven:
// callers must label the output accordingly. check_class enforces
// N = 2^{r-1} mod 2^r.
struct ConjectureBound {
    double lambda = 0.0;
    double bound = 0.0;
};
ConjectureBound conjecture_lambda(int r, int n_qubits, bool check_class = true);

// E_G of the n-qubit state with the single hyperedge {0, ..., n-1}:
// 1 - max over real a^2 + b^2 = 1 of ((a+b)^n - 2 b^n)^2 / 2^n.
GeoMeasureResult single_edge_geomeasure(int n_qubits);

// Grid check that sum_j cos^N(x + pi j / 2^r) peaks on the lattice
// (pi/2^r) Z. deviation is the distance of the refined argmax from the
// nearest lattice point.
struct CyclicMaxCheck {
    bool ok = false;
    double deviation = 0.0;
    double argmax = 0.0;
};
CyclicMaxCheck cyclic_cos_max_check(int r, int n_qubits, long grid = 100000);

} // namespace hyperstate

#endif
