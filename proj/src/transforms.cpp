#include "transforms.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

#include "binom.hpp"
#include "errors.hpp"
#include "kahan.hpp"

namespace hyperstate {

namespace {

const double kPi = std::acos(-1.0);

} // namespace

double ipow(double base, long exp) {
    if (exp < 0) throw std::invalid_argument("ipow: negative exponent");
    double r = 1.0, b = base;
    for (long e = exp; e > 0; e >>= 1) {
        if (e & 1) r *= b;
        b *= b;
    }
    return r;
}

cplx ipow(cplx base, long exp) {
    if (exp < 0) throw std::invalid_argument("ipow: negative exponent");
    cplx r = 1.0, b = base;
    for (long e = exp; e > 0; e >>= 1) {
        if (e & 1) r *= b;
        b *= b;
    }
    return r;
}

cplx unit_phase_quarter(long q) {
    const double s = std::sqrt(0.5);
    switch (((q % 8) + 8) % 8) {
        case 0: return {1.0, 0.0};
        case 1: return {s, s};
        case 2: return {0.0, 1.0};
        case 3: return {-s, s};
        case 4: return {-1.0, 0.0};
        case 5: return {-s, -s};
        case 6: return {0.0, -1.0};
        default: return {s, -s};
    }
}

cplx minus_i_pow(long q) {
    switch (((q % 4) + 4) % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, -1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, 1.0};
    }
}

SymmetricState apply_tensor_power(const SymmetricState& s, const SingleQubitOp& m) {
    const int n = s.n_qubits;
    if (n > kContractionCap)
        throw CapExceeded("tensor-power contraction beyond " + std::to_string(kContractionCap) +
                          " qubits");
    // power tables, p[0] = 1 regardless of the entry (0^0 = 1 convention)
    std::vector<cplx> p00(n + 1), p01(n + 1), p10(n + 1), p11(n + 1);
    p00[0] = p01[0] = p10[0] = p11[0] = 1.0;
    for (int t = 1; t <= n; ++t) {
        p00[t] = p00[t - 1] * m(0, 0);
        p01[t] = p01[t - 1] * m(0, 1);
        p10[t] = p10[t - 1] * m(1, 0);
        p11[t] = p11[t - 1] * m(1, 1);
    }
    SymmetricState out;
    out.n_qubits = n;
    out.amp.resize(n + 1);
    for (int u = 0; u <= n; ++u) {
        const auto row_u = binomial_row_d(u);
        const auto row_nu = binomial_row_d(n - u);
        KahanSumC acc;
        for (int w = 0; w <= n; ++w) {
            if (s.amp[w] == cplx(0.0)) continue;
            const int t_lo = std::max(0, w - (n - u));
            const int t_hi = std::min(u, w);
            KahanSumC trans;
            for (int t = t_lo; t <= t_hi; ++t) {
                const double mult = row_u[t] * row_nu[w - t];
                trans.add(mult * p11[t] * p10[u - t] * p01[w - t] * p00[n - u - w + t]);
            }
            acc.add(s.amp[w] * trans.value());
        }
        out.amp[u] = acc.value();
    }
    return out;
}

namespace {

// sum_m C(n-u, v-m) C(u, m) (-1)^m, the alternating transition count shared by
// both closed-form routes.
double alternating_transition_sum(int n, int u, int v) {
    const int m_lo = std::max(0, v - (n - u));
    const int m_hi = std::min(u, v);
    const auto row_u = binomial_row_d(u);
    const auto row_nu = binomial_row_d(n - u);
    KahanSum s;
    for (int m = m_lo; m <= m_hi; ++m) {
        const double term = row_nu[v - m] * row_u[m];
        s.add((m & 1) ? -term : term);
    }
    return s.sum;
}

// Direct route: the transition sum over all input weights, with the
// sqrt(P)_+ phases folded into quarter powers of i.
cplx closed_general(int n, std::span<const int> k, bool y_transform, int u) {
    const cplx pref = unit_phase_quarter(n) * std::pow(2.0, -double(n));
    KahanSumC acc;
    for (int v = 0; v <= n; ++v) {
        const int f = weight_sign(k, v);
        const double a = alternating_transition_sum(n, u, v);
        cplx phase;
        if (y_transform)
            phase = ((v & 1) ? -1.0 : 1.0);
        else
            phase = minus_i_pow(u + v);
        acc.add((f ? -1.0 : 1.0) * phase * a);
    }
    return pref * acc.value();
}

// Periodic route: resum over one period of the sign function using the
// root-of-unity identities for the binomial sums.
cplx closed_periodic(int n, std::span<const int> k, bool y_transform, int u) {
    int T = weight_sign_period(k);
    if (!y_transform) T = std::max(T, 4);
    KahanSumC acc;
    for (int j = 0; j < T; ++j) {
        const double c = std::cos(kPi * j / T);
        const double s = std::sin(kPi * j / T);
        const double trig = ipow(c, n - u) * ipow(s, u);
        if (trig == 0.0) continue;
        KahanSumC inner;
        for (int q = 0; q < T; ++q) {
            const int f = weight_sign(k, q);
            const double re_part =
                (minus_i_pow(u) * std::polar(1.0, kPi * j * double(n - 2 * q) / T)).real();
            cplx term;
            if (y_transform)
                term = ((f ^ (q & 1)) ? -1.0 : 1.0) * re_part;
            else
                term = (f ? -1.0 : 1.0) * minus_i_pow(q + u) * re_part;
            inner.add(term);
        }
        acc.add(trig * inner.value());
    }
    return unit_phase_quarter(n) * acc.value() / double(T);
}

} // namespace

cplx coeff_closed_form(int n_qubits, std::span<const int> cardinalities, StabilizerClass stab,
                       int w, double path_tol) {
    if (w < 0 || w > n_qubits) throw std::invalid_argument("weight out of range");
    const auto spec = HypergraphSpec::complete(n_qubits,
                                               std::vector<int>(cardinalities.begin(), cardinalities.end()));
    if (classify_stabilizer(spec) != stab)
        throw std::invalid_argument("stabilizer class does not match the state");
    if (stab == StabilizerClass::None)
        throw std::invalid_argument("state has no local Pauli stabilizer");
    const bool y_transform = (stab == StabilizerClass::PlusY);
    const cplx general = closed_general(n_qubits, cardinalities, y_transform, w);
    const cplx periodic = closed_periodic(n_qubits, cardinalities, y_transform, w);
    if (std::abs(general - periodic) > path_tol)
        throw CrossCheckFailure("closed-form paths disagree at weight " + std::to_string(w) +
                                ": general vs periodic differ by " +
                                std::to_string(std::abs(general - periodic)));
    return general;
}

double uniform_family_odd_coeff_x(int r, int n_qubits, int w) {
    if (r < 3) throw std::invalid_argument("family coefficient requires r >= 3");
    const int period = 1 << r;
    if (((n_qubits % period) + period) % period != period / 2)
        throw std::invalid_argument("n_qubits must be = 2^{r-1} mod 2^r");
    if (w % 2 == 0 || w < 0 || w > n_qubits) throw std::invalid_argument("w must be odd and in range");
    const long l = (n_qubits - period / 2) / period;
    KahanSum acc;
    for (int j = 1; j < period; j += 2) {
        const double sign = (((j - 1) / 2) & 1) ? -1.0 : 1.0; // i^{j-1} for odd j
        const double num = ipow(std::cos(kPi * j / period), n_qubits - w) *
                           ipow(std::sin(kPi * j / period), w);
        const double denom = std::cos(2.0 * kPi * j / period);
        assert(std::abs(denom) > 1e-12); // 2j = 2^{r-1} mod 2^r needs even j
        acc.add(sign * num / denom);
    }
    // Sign pinned against the direct closed form: (-1)^{N/4 + l + 1} times the
    // trigonometric sum, across r = 3, 4, 5. For r = 3 (where N/4 is odd) this
    // reduces to (-1)^l.
    const long quarter = n_qubits / 4;
    return (((quarter + l + 1) & 1) ? -1.0 : 1.0) * (2.0 / period) * acc.sum;
}

double uniform_family_odd_coeff_y(int r, int n_qubits, int w) {
    if (r < 3) throw std::invalid_argument("family coefficient requires r >= 3");
    const int period = 1 << r;
    if (n_qubits % period != 0 || n_qubits <= 0)
        throw std::invalid_argument("n_qubits must be a positive multiple of 2^r");
    if (w % 2 == 0 || w < 0 || w > n_qubits) throw std::invalid_argument("w must be odd and in range");
    const long l = n_qubits / period;
    KahanSum acc;
    for (int j = 1; j < period; j += 2) {
        const double num = ipow(std::cos(kPi * j / period), n_qubits - w) *
                           ipow(std::sin(kPi * j / period), w);
        const double denom = std::sin(2.0 * kPi * j / period);
        assert(std::abs(denom) > 1e-12);
        acc.add(num / denom);
    }
    const double printed = 2.0 / period * acc.sum;
    return ((l & 1) ? -1.0 : 1.0) * printed;
}

namespace {

// Split a unit phase into sign * phase with the phase in the closed right
// half plane (Re > 0, or Re = 0 with Im > 0).
void canonical_sign_split(cplx unit, int& sign, cplx& phase) {
    if (unit.real() < 0.0 || (unit.real() == 0.0 && unit.imag() < 0.0)) {
        sign = -1;
        phase = -unit;
    } else {
        sign = 1;
        phase = unit;
    }
}

} // namespace

GhzOddDecomposition try_ghz_odd_decompose(const SymmetricState& s) {
    const int n = s.n_qubits;
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("GHZ + odd decomposition is defined for even n >= 2");
    GhzOddDecomposition d;
    d.odd_amp.assign(n + 1, cplx(0.0));
    for (int w = 1; w <= n; w += 2) d.odd_amp[w] = s.amp[w];

    const double a0 = std::abs(s.amp[0]);
    const cplx unit = (a0 > 0.0) ? s.amp[0] / a0 : cplx(1.0);

    // Z basis: amp[0] = amp[n] with modulus 1/2, interior even weights vanish.
    double res_z = std::max(std::abs(a0 - 0.5), std::abs(s.amp[n] - s.amp[0]));
    for (int w = 2; w < n; w += 2) res_z = std::max(res_z, std::abs(s.amp[w]));

    // X basis: every even weight carries the same amplitude of modulus 1/sqrt(2^n).
    double res_x = std::abs(a0 - std::pow(2.0, -0.5 * n));
    for (int w = 2; w <= n; w += 2) res_x = std::max(res_x, std::abs(s.amp[w] - s.amp[0]));

    d.ghz_basis = (res_z <= res_x) ? 'Z' : 'X';
    d.residual = std::min(res_z, res_x);
    canonical_sign_split(unit, d.ghz_sign, d.global_phase);
    return d;
}

GhzOddDecomposition ghz_odd_decompose(const SymmetricState& s, double tol) {
    GhzOddDecomposition d = try_ghz_odd_decompose(s);
    if (d.residual > tol)
        throw NotGhzOddForm("even-weight content deviates from the GHZ form by " +
                            std::to_string(d.residual));
    return d;
}

double three_uniform_form_residual(const GhzOddDecomposition& d, int n_qubits,
                                   StabilizerClass stab) {
    const double mag = std::pow(2.0, -0.5 * n_qubits);
    cplx lead = d.odd_amp[1];
    if (std::abs(lead) == 0.0) return 1.0;
    const cplx phase = lead / std::abs(lead);
    double res = 0.0;
    for (int w = 1; w <= n_qubits; w += 2) {
        cplx expected = phase * mag;
        if (stab == StabilizerClass::PlusY) expected *= minus_i_pow(w - 1);
        res = std::max(res, std::abs(d.odd_amp[w] - expected));
    }
    return res;
}

double mod_binom_sum(int N, int q, int n) {
    if (n <= 0 || n > N) throw std::invalid_argument("mod_binom_sum requires 0 < n <= N");
    KahanSum acc;
    for (int j = 0; j < n; ++j) {
        acc.add(ipow(2.0 * std::cos(kPi * j / n), N) * std::cos(kPi * j * double(N - 2 * q) / n));
    }
    return acc.sum / n;
}

double alternating_cos_sum(int M, double alpha, double beta) {
    if (M < 0) throw std::invalid_argument("M must be >= 0");
    if (beta == 0.0) throw std::invalid_argument("beta must be nonzero");
    const cplx i(0.0, 1.0);
    return (std::polar(1.0, kPi * alpha / beta) * ipow(-2.0 * i * std::sin(kPi / beta), M)).real();
}

} // namespace hyperstate
