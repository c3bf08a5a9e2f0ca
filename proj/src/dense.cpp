#include "dense.hpp"

#include <atomic>
#include <bit>
#include <cmath>
#include <future>
#include <random>
#include <stdexcept>
#include <thread>

#include "binom.hpp"
#include "errors.hpp"

namespace hyperstate {

namespace {

void check_cap(int n_qubits, int cap) {
    // hard ceiling regardless of the configured cap: beyond this the index
    // arithmetic (and any allocation) is hopeless anyway
    constexpr int kHardCeiling = 48;
    if (n_qubits > cap || n_qubits > kHardCeiling)
        throw CapExceeded("dense representation of " + std::to_string(n_qubits) +
                          " qubits exceeds cap " + std::to_string(std::min(cap, kHardCeiling)));
    if (n_qubits < 1) throw std::invalid_argument("n_qubits must be >= 1");
}

} // namespace

double DenseState::norm_error() const {
    double s = 0.0;
    for (const cplx& a : amp) s += std::norm(a);
    return std::abs(s - 1.0);
}

DenseState uniform_superposition(int n_qubits, int cap) {
    check_cap(n_qubits, cap);
    DenseState s;
    s.n_qubits = n_qubits;
    s.amp.assign(std::size_t(1) << n_qubits, cplx(std::pow(2.0, -0.5 * n_qubits)));
    return s;
}

void apply_ce(DenseState& state, std::span<const int> edge) {
    std::uint64_t mask = 0;
    for (int q : edge) {
        if (q < 0 || q >= state.n_qubits) throw std::invalid_argument("edge vertex out of range");
        mask |= std::uint64_t(1) << (state.n_qubits - 1 - q);
    }
    const std::uint64_t comp = ((std::uint64_t(1) << state.n_qubits) - 1) & ~mask;
    // walk all supersets of mask
    std::uint64_t sub = comp;
    while (true) {
        state.amp[mask | sub] = -state.amp[mask | sub];
        if (sub == 0) break;
        sub = (sub - 1) & comp;
    }
}

DenseState build_dense(const HypergraphSpec& spec, int cap) {
    DenseState s = uniform_superposition(spec.n_qubits(), cap);
    for (const auto& e : spec.expand_edges()) apply_ce(s, e);
    return s;
}

DenseState symmetric_to_dense(const SymmetricState& s, int cap) {
    check_cap(s.n_qubits, cap);
    DenseState d;
    d.n_qubits = s.n_qubits;
    d.amp.resize(std::size_t(1) << s.n_qubits);
    for (std::uint64_t x = 0; x < d.amp.size(); ++x)
        d.amp[x] = s.amp[std::popcount(x)];
    return d;
}

WeightProjection dense_weight_projection(const DenseState& state) {
    const int n = state.n_qubits;
    std::vector<cplx> sum(n + 1, cplx(0.0));
    for (std::uint64_t x = 0; x < state.amp.size(); ++x)
        sum[std::popcount(x)] += state.amp[x];
    WeightProjection p;
    p.state.n_qubits = n;
    p.state.amp.resize(n + 1);
    for (int w = 0; w <= n; ++w)
        p.state.amp[w] = sum[w] / binomial_d(n, w);
    p.symmetry_residual = 0.0;
    for (std::uint64_t x = 0; x < state.amp.size(); ++x)
        p.symmetry_residual =
            std::max(p.symmetry_residual, std::abs(state.amp[x] - p.state.amp[std::popcount(x)]));
    return p;
}

DenseState apply_local(const DenseState& state, std::span<const SingleQubitOp> ops,
                       std::span<const int> sites) {
    if (ops.size() != sites.size()) throw std::invalid_argument("ops/sites length mismatch");
    for (size_t i = 0; i < sites.size(); ++i) {
        if (sites[i] < 0 || sites[i] >= state.n_qubits)
            throw std::invalid_argument("site out of range");
        for (size_t j = i + 1; j < sites.size(); ++j)
            if (sites[i] == sites[j]) throw std::invalid_argument("sites must be distinct");
    }
    DenseState out = state;
    for (size_t i = 0; i < sites.size(); ++i) {
        const SingleQubitOp& m = ops[i];
        const std::uint64_t stride = std::uint64_t(1) << (state.n_qubits - 1 - sites[i]);
        for (std::uint64_t base = 0; base < out.amp.size(); ++base) {
            if (base & stride) continue;
            const cplx a0 = out.amp[base];
            const cplx a1 = out.amp[base | stride];
            out.amp[base] = m(0, 0) * a0 + m(0, 1) * a1;
            out.amp[base | stride] = m(1, 0) * a0 + m(1, 1) * a1;
        }
    }
    return out;
}

DenseState apply_all(const DenseState& state, const SingleQubitOp& op) {
    std::vector<SingleQubitOp> ops(state.n_qubits, op);
    std::vector<int> sites(state.n_qubits);
    for (int q = 0; q < state.n_qubits; ++q) sites[q] = q;
    return apply_local(state, ops, sites);
}

cplx pauli_string_expectation(const DenseState& state, const PauliString& p) {
    if (int(p.letters.size()) != state.n_qubits)
        throw std::invalid_argument("pauli string length must equal n_qubits");
    const int n = state.n_qubits;
    std::uint64_t flip = 0;
    std::uint64_t ymask = 0, zmask = 0;
    for (int q = 0; q < n; ++q) {
        const std::uint64_t b = std::uint64_t(1) << (n - 1 - q);
        switch (p.letters[q]) {
            case 'I': break;
            case 'X': flip |= b; break;
            case 'Y': flip |= b; ymask |= b; break;
            case 'Z': zmask |= b; break;
            default: throw std::invalid_argument("pauli letters must be I/X/Y/Z");
        }
    }
    const cplx iu(0.0, 1.0);
    cplx sum = 0.0;
    for (std::uint64_t x = 0; x < state.amp.size(); ++x) {
        // P|x> = phase * |x ^ flip>; Y contributes i on |0>, -i on |1>; Z gives (-1)^bit.
        const int y_ones = std::popcount(x & ymask);
        const int y_zeros = std::popcount(ymask) - y_ones;
        const int z_ones = std::popcount(x & zmask);
        cplx phase = (z_ones & 1) ? -1.0 : 1.0;
        switch (((y_zeros - y_ones) % 4 + 4) % 4) {
            case 0: break;
            case 1: phase *= iu; break;
            case 2: phase *= -1.0; break;
            case 3: phase *= -iu; break;
        }
        sum += std::conj(state.amp[x ^ flip]) * phase * state.amp[x];
    }
    return p.prefactor * sum;
}

cplx overlap(const DenseState& a, const DenseState& b) {
    if (a.n_qubits != b.n_qubits) throw std::invalid_argument("qubit count mismatch");
    cplx s = 0.0;
    for (std::size_t x = 0; x < a.amp.size(); ++x) s += std::conj(a.amp[x]) * b.amp[x];
    return s;
}

bool equal_up_to_global_phase(const DenseState& a, const DenseState& b, double tol) {
    return std::abs(std::abs(overlap(a, b)) - 1.0) < tol;
}

namespace {

// <product(locals except site q)|state> restricted to qubit q: the two
// components of the single-site environment.
std::array<cplx, 2> site_environment(const DenseState& state,
                                     const std::vector<std::array<cplx, 2>>& locals, int q) {
    const int n = state.n_qubits;
    std::array<cplx, 2> env = {cplx(0.0), cplx(0.0)};
    for (std::uint64_t x = 0; x < state.amp.size(); ++x) {
        cplx w = state.amp[x];
        for (int j = 0; j < n; ++j) {
            if (j == q) continue;
            w *= std::conj(locals[j][DenseState::bit(x, j, n)]);
        }
        env[DenseState::bit(x, q, n)] += w;
    }
    return env;
}

} // namespace

namespace {

struct RestartOutcome {
    double overlap_sq = -1.0;
    bool converged = false;
    std::vector<std::array<cplx, 2>> locals;
};

// One alternating-update run from a random initialization. Each restart owns
// an independent RNG stream, so results do not depend on scheduling.
RestartOutcome run_restart(const DenseState& state, bool real_only, std::uint64_t stream_seed) {
    const int n = state.n_qubits;
    constexpr int kMaxSweeps = 10000;
    constexpr double kConvergence = 1e-13;

    std::mt19937_64 rng(stream_seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> angle(0.0, std::acos(-1.0));

    RestartOutcome out;
    std::vector<std::array<cplx, 2>> locals(n);
    for (int q = 0; q < n; ++q) {
        if (real_only) {
            const double t = angle(rng);
            locals[q] = {cplx(std::cos(t)), cplx(std::sin(t))};
        } else {
            cplx a(gauss(rng), gauss(rng)), b(gauss(rng), gauss(rng));
            const double nrm = std::sqrt(std::norm(a) + std::norm(b));
            locals[q] = {a / nrm, b / nrm};
        }
    }
    double prev = -1.0;
    for (int sweep = 0; sweep < kMaxSweeps && !out.converged; ++sweep) {
        double ov = 0.0;
        for (int q = 0; q < n; ++q) {
            std::array<cplx, 2> env = site_environment(state, locals, q);
            double nrm = std::sqrt(std::norm(env[0]) + std::norm(env[1]));
            if (nrm < 1e-300) {
                // stuck on an exactly orthogonal configuration; re-randomize the site
                cplx a(gauss(rng), gauss(rng)), b(gauss(rng), gauss(rng));
                if (real_only) { a = std::abs(a); b = std::abs(b); }
                const double m = std::sqrt(std::norm(a) + std::norm(b));
                locals[q] = {a / m, b / m};
                continue;
            }
            locals[q] = {env[0] / nrm, env[1] / nrm};
            ov = nrm; // overlap modulus after the update
        }
        if (std::abs(ov - prev) < kConvergence) out.converged = true;
        prev = ov;
    }
    out.overlap_sq = prev * prev;
    out.locals = std::move(locals);
    return out;
}

} // namespace

ProductOptResult product_state_optimize(const DenseState& state, int restarts, bool real_only,
                                        std::uint64_t seed) {
    if (restarts < 1) throw std::invalid_argument("restarts must be >= 1");
    auto stream = [seed](int r) {
        return seed ^ (0x9E3779B97F4A7C15ULL * std::uint64_t(r + 1));
    };

    std::vector<RestartOutcome> outcomes(restarts);
    const unsigned workers =
        std::min<unsigned>(std::thread::hardware_concurrency(), unsigned(restarts));
    if (workers > 1 && state.amp.size() >= 64) {
        std::vector<std::future<void>> futures;
        std::atomic<int> next{0};
        for (unsigned w = 0; w < workers; ++w)
            futures.push_back(std::async(std::launch::async, [&] {
                for (int r = next.fetch_add(1); r < restarts; r = next.fetch_add(1))
                    outcomes[r] = run_restart(state, real_only, stream(r));
            }));
        for (auto& f : futures) f.get();
    } else {
        for (int r = 0; r < restarts; ++r)
            outcomes[r] = run_restart(state, real_only, stream(r));
    }

    // max-reduction in restart order, so the result is scheduling-independent
    ProductOptResult best;
    best.seed = seed;
    best.best_overlap_sq = -1.0;
    for (const RestartOutcome& out : outcomes) {
        if (out.converged) ++best.converged_restarts;
        if (out.overlap_sq > best.best_overlap_sq) {
            best.best_overlap_sq = out.overlap_sq;
            best.locals = out.locals;
        }
    }
    if (best.converged_restarts == 0)
        throw NoConvergence("product-state optimizer did not converge on any restart");
    best.e_g = 1.0 - best.best_overlap_sq;
    return best;
}

} // namespace hyperstate
