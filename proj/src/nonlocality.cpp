#include "nonlocality.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>
#include <limits>
#include <vector>

#include "binom.hpp"
#include "errors.hpp"
#include "kahan.hpp"

namespace hyperstate {

namespace {

const double kPi = std::acos(-1.0);
const double kSqrt2 = std::sqrt(2.0);

// sqrt(2)^m, exact for even m
double sqrt2_pow(int m) {
    return (m % 2 == 0) ? std::ldexp(1.0, m / 2) : std::ldexp(1.0, (m - 1) / 2) * kSqrt2;
}

// T(u, w) = sum_t C(u,t) C(g-u,w-t) m11^t m10^{u-t} m01^{w-t} m00^{g-u-w+t}
// tabulated for one site group of size g.
std::vector<std::vector<cplx>> transition_table(const SingleQubitOp& m, int g) {
    std::vector<cplx> p00(g + 1), p01(g + 1), p10(g + 1), p11(g + 1);
    p00[0] = p01[0] = p10[0] = p11[0] = 1.0;
    for (int t = 1; t <= g; ++t) {
        p00[t] = p00[t - 1] * m(0, 0);
        p01[t] = p01[t - 1] * m(0, 1);
        p10[t] = p10[t - 1] * m(1, 0);
        p11[t] = p11[t - 1] * m(1, 1);
    }
    std::vector<std::vector<cplx>> table(g + 1, std::vector<cplx>(g + 1));
    for (int u = 0; u <= g; ++u) {
        const auto row_u = binomial_row_d(u);
        const auto row_gu = binomial_row_d(g - u);
        for (int w = 0; w <= g; ++w) {
            const int t_lo = std::max(0, w - (g - u));
            const int t_hi = std::min(u, w);
            KahanSumC acc;
            for (int t = t_lo; t <= t_hi; ++t)
                acc.add(row_u[t] * row_gu[w - t] * p11[t] * p10[u - t] * p01[w - t] *
                        p00[g - u - w + t]);
            table[u][w] = acc.value();
        }
    }
    return table;
}

} // namespace

const char* bell_method_name(BellMethod m) {
    switch (m) {
        case BellMethod::contraction: return "contraction";
        case BellMethod::decomposition: return "decomposition";
        case BellMethod::oracle: return "oracle";
    }
    return "?";
}

cplx grouped_tensor_power_expectation(const SymmetricState& s, const SingleQubitOp& ma,
                                      const SingleQubitOp& mb, int split_k) {
    const int n = s.n_qubits;
    if (split_k < 0 || split_k >= n)
        throw std::invalid_argument("split must satisfy 0 <= k < n");
    if (n > kContractionCap) throw CapExceeded("grouped contraction beyond the cap");
    const int ga = n - split_k, gb = split_k;
    const auto ta = transition_table(ma, ga);
    const auto tb = transition_table(mb, gb);
    const auto rows_a = binomial_row_d(ga);
    const auto rows_b = binomial_row_d(gb);
    KahanSumC total;
    for (int u2 = 0; u2 <= gb; ++u2)
        for (int w2 = 0; w2 <= gb; ++w2) {
            const cplx sb = rows_b[u2] * tb[u2][w2];
            if (sb == cplx(0.0)) continue;
            KahanSumC part;
            for (int u1 = 0; u1 <= ga; ++u1) {
                const cplx cu = std::conj(s.amp[u1 + u2]) * rows_a[u1];
                for (int w1 = 0; w1 <= ga; ++w1)
                    part.add(cu * s.amp[w1 + w2] * ta[u1][w1]);
            }
            total.add(sb * part.value());
        }
    return total.value();
}

double grouped_expectation_abs_scale(const SymmetricState& s, const SingleQubitOp& ma,
                                     const SingleQubitOp& mb, int split_k) {
    const int n = s.n_qubits;
    if (split_k < 0 || split_k >= n)
        throw std::invalid_argument("split must satisfy 0 <= k < n");
    auto abs_op = [](const SingleQubitOp& m) {
        SingleQubitOp r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) r.m[i][j] = std::abs(m.m[i][j]);
        return r;
    };
    SymmetricState abs_state;
    abs_state.n_qubits = n;
    abs_state.amp.resize(n + 1);
    for (int w = 0; w <= n; ++w) abs_state.amp[w] = std::abs(s.amp[w]);
    return grouped_tensor_power_expectation(abs_state, abs_op(ma), abs_op(mb), split_k).real();
}

namespace {

BellReport make_report(cplx expectation, double classical, double separability,
                       BellMethod method, double noise_floor = 0.0) {
    BellReport r;
    r.signed_value = expectation.real();
    r.imag_residue = std::abs(expectation.imag());
    // the operators are Hermitian, so any imaginary part is numerical noise
    if (r.imag_residue > 1e-9 * std::max(1.0, std::abs(r.signed_value)) + noise_floor)
        throw CrossCheckFailure("Bell expectation has a nonreal residue of " +
                                std::to_string(r.imag_residue));
    r.quantum_value = std::abs(r.signed_value);
    r.classical_bound = classical;
    r.separability_bound = separability;
    r.method = method;
    return r;
}

} // namespace

MerminResult mermin_quantum_value(const HypergraphSpec& spec, Pauli pauli) {
    if (pauli == Pauli::Z) throw std::invalid_argument("Mermin operators use P in {X, Y}");
    const SymmetricState s = build_symmetric(spec);
    const int n = s.n_qubits;
    const SingleQubitOp id = identity_op();
    const cplx e_plus = grouped_tensor_power_expectation(s, pauli_plus_iz(pauli, +1), id, 0);
    const cplx e_minus = grouped_tensor_power_expectation(s, pauli_plus_iz(pauli, -1), id, 0);
    const cplx qv = 0.5 * (e_plus + e_minus);

    MerminResult result;
    result.report = make_report(qv, sqrt2_pow(n), kSqrt2, BellMethod::contraction);
    result.report.ratio_log2 =
        std::log2(result.report.quantum_value) - std::log2(result.report.classical_bound);

    // Hypothesis: sqrt(P)_+^{xN} maps the state to GHZ_Z + odd weights, possibly
    // after a sqrt(Z)_+ pass that removes a relative phase. Odd qubit counts
    // cannot take this form (weight n would be both the GHZ top and odd).
    if (n % 2 == 0) {
        SymmetricState t = apply_tensor_power(s, sqrt_pauli(pauli, +1));
        GhzOddDecomposition d = try_ghz_odd_decompose(t);
        if (d.ghz_basis != 'Z' || d.residual > 1e-10) {
            SymmetricState t2 = apply_tensor_power(t, sqrt_pauli(Pauli::Z, +1));
            GhzOddDecomposition d2 = try_ghz_odd_decompose(t2);
            if (d2.ghz_basis == 'Z' && d2.residual < d.residual) d = d2;
        }
        result.decomposition_residual = d.residual;
        result.hypothesis_ok = (d.ghz_basis == 'Z' && d.residual <= 1e-10);
    } else {
        result.decomposition_residual = 1.0;
        result.hypothesis_ok = false;
    }

    if (result.hypothesis_ok) {
        const double expected = std::pow(2.0, n - 2);
        result.report.cross_residual = std::abs(result.report.quantum_value - expected);
        if (result.report.cross_residual > 1e-8 * expected)
            throw CrossCheckFailure("Mermin value deviates from 2^(n-2) by " +
                                    std::to_string(result.report.cross_residual));
        result.report.method = BellMethod::decomposition;
    }
    return result;
}

double mermin_odd_correction(int r, int n_qubits) {
    if (r < 3) throw std::invalid_argument("odd correction requires r >= 3");
    const int period = 1 << r;
    if (((n_qubits % period) + period) % period != period / 2)
        throw std::invalid_argument("n_qubits must be = 2^{r-1} mod 2^r");
    // i^l for odd l is +/-i, so the sum is purely imaginary; accumulate the
    // imaginary part directly.
    KahanSum acc;
    for (int l = 1; l < period; l += 2) {
        const double sign = (((l - 1) / 2) & 1) ? -1.0 : 1.0;
        const double base = std::cos(kPi * l / period) + std::sin(kPi * l / period);
        const double denom = std::cos(2.0 * kPi * l / period);
        assert(std::abs(denom) > 1e-12);
        acc.add(sign * ipow(base, n_qubits) / denom);
    }
    const double s = acc.sum;
    return -(4.0 / ipow(4.0, r)) * s * s;
}

RobustnessResult robustness_value(int n_qubits, int lost, RobustnessVariant variant) {
    const int n = n_qubits, k = lost;
    if (n < 3) throw std::invalid_argument("three-uniform states require n >= 3");
    if (k < 1 || k >= n) throw std::invalid_argument("lost qubits must satisfy 1 <= k < n");

    struct Row {
        int row;
        int variant; // 0 or 1
        double value;
    };
    std::vector<Row> candidates;
    const double scale = sqrt2_pow(n - 2 * k);
    if (n % 4 == 2) candidates.push_back({(k % 2 == 1) ? 1 : 0, 0, (k % 2 == 1) ? scale : 0.5});
    if (n % 4 == 0) candidates.push_back({(k % 2 == 0) ? 2 : 0, 1, (k % 2 == 0) ? scale : 0.0});
    if ((n - k) % 4 == 2)
        candidates.push_back({3, 1, std::abs(std::sin(kPi * k / 4)) * scale});
    if ((n - k) % 4 == 0)
        candidates.push_back({4, 1, std::abs(std::cos(kPi * k / 4)) * scale});

    int want_variant = -1;
    if (variant == RobustnessVariant::M0) want_variant = 0;
    if (variant == RobustnessVariant::M1) want_variant = 1;
    const Row* chosen = nullptr;
    for (const Row& c : candidates) {
        if (want_variant >= 0 && c.variant != want_variant) continue;
        if (!chosen || c.value > chosen->value) chosen = &c;
    }
    if (!chosen && variant == RobustnessVariant::Auto)
        throw UnsupportedCase("no table row applies to n=" + std::to_string(n) +
                              ", k=" + std::to_string(k));

    const int used = chosen ? chosen->variant : want_variant;
    const SymmetricState s = build_symmetric(HypergraphSpec::complete(n, {3}));
    const SingleQubitOp id = identity_op();
    const cplx e_plus =
        grouped_tensor_power_expectation(s, pauli_plus_iz(Pauli::X, +1), id, k);
    const cplx e_minus =
        grouped_tensor_power_expectation(s, pauli_plus_iz(Pauli::X, -1), id, k);
    const cplx expectation = (used == 0) ? 0.5 * (e_plus + e_minus)
                                         : (e_plus - e_minus) / cplx(0.0, 2.0);
    // The expectation emerges from near-total cancellation of the summed
    // mass, so the contraction's attainable accuracy scales with that mass,
    // not with the final value.
    const double abs_scale =
        grouped_expectation_abs_scale(s, pauli_plus_iz(Pauli::X, +1), id, k);
    const double contraction_noise = 3e-14 * abs_scale;

    RobustnessResult result;
    result.report = make_report(expectation, sqrt2_pow(n - k), kSqrt2,
                                chosen ? BellMethod::decomposition : BellMethod::contraction,
                                contraction_noise);
    result.variant_used = used;
    result.table_row = chosen ? chosen->row : -1;
    if (chosen) {
        result.report.cross_residual =
            std::abs(result.report.quantum_value - chosen->value);
        const double tol = 1e-9 * std::max(1.0, chosen->value) + contraction_noise;
        if (result.report.cross_residual > tol)
            throw CrossCheckFailure("robustness contraction deviates from the table value by " +
                                    std::to_string(result.report.cross_residual));
        // the closed form is exact; report it, keeping the contraction in
        // signed_value and cross_residual
        result.report.quantum_value = chosen->value;
    }
    result.report.ratio_log2 = (result.report.quantum_value > 0.0)
                                   ? std::log2(result.report.quantum_value) - 0.5
                                   : std::numeric_limits<double>::quiet_NaN();
    return result;
}

FamilyDescriptor table1_family(std::span<const int> cardinalities) {
    std::vector<int> k(cardinalities.begin(), cardinalities.end());
    std::sort(k.begin(), k.end());
    bool has_two = false;
    if (!k.empty() && k.front() == 2) {
        has_two = true;
        k.erase(k.begin());
    }
    if (k.empty()) throw std::invalid_argument("family requires at least one entry 2^i + 1");
    int kmax = 0;
    for (size_t i = 0; i < k.size(); ++i) {
        if (i > 0 && k[i] == k[i - 1]) throw std::invalid_argument("cardinalities must be distinct");
        const int v = k[i] - 1;
        if (v < 2 || (v & (v - 1)) != 0)
            throw std::invalid_argument("cardinality " + std::to_string(k[i]) +
                                        " is not of the form 2^i + 1 with i >= 1");
        kmax = std::max(kmax, k[i]);
    }
    FamilyDescriptor d;
    d.r = 0;
    for (int v = kmax - 1; v > 1; v >>= 1) ++d.r;
    d.modulus = 1 << (d.r + 1);
    const bool m_odd = (k.size() % 2 == 1);
    d.residue = m_odd ? 0 : d.modulus / 2;
    d.stabilizer = has_two ? StabilizerClass::PlusX : StabilizerClass::PlusY;
    return d;
}

} // namespace hyperstate
