#include <doctest.h>

#include <array>
#include <random>

#include "dense.hpp"
#include "errors.hpp"
#include "hypergraph.hpp"
#include "oracle.hpp"
#include "transforms.hpp"

using namespace hyperstate;
using namespace hyperstate::testing;

namespace {
const double kPi = std::acos(-1.0);
}

TEST_CASE("sqrt pauli matrices") {
    auto sz = sqrt_pauli(Pauli::Z, +1);
    CHECK(std::abs(sz(0, 0) - cplx(1.0)) < 1e-15);
    CHECK(std::abs(sz(1, 1) - cplx(0.0, 1.0)) < 1e-15);
    CHECK(std::abs(sz(0, 1)) < 1e-15);

    for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
        for (int branch : {+1, -1}) {
            auto r = sqrt_pauli(p, branch);
            CHECK(r.unitarity_defect() < 1e-14);
            auto sq = r * r;
            auto direct = pauli_op(p);
            double dev = 0.0;
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) dev = std::max(dev, std::abs(sq.m[i][j] - direct.m[i][j]));
            CHECK(dev < 1e-14);
        }
    }

    // sqrt(X)+ |+_Y> = ((1+i)/sqrt2)|0>
    auto sx = sqrt_pauli(Pauli::X, +1);
    const cplx in0 = 1.0 / std::sqrt(2.0), in1 = cplx(0.0, 1.0) / std::sqrt(2.0);
    const cplx out0 = sx(0, 0) * in0 + sx(0, 1) * in1;
    const cplx out1 = sx(1, 0) * in0 + sx(1, 1) * in1;
    CHECK(std::abs(out0 - cplx(1.0, 1.0) / std::sqrt(2.0)) < 1e-15);
    CHECK(std::abs(out1) < 1e-15);

    // our branch convention gives sqrt(P)- Z sqrt(P)- = -iZ for P in {X, Y}
    for (Pauli p : {Pauli::X, Pauli::Y}) {
        auto sm = sqrt_pauli(p, -1);
        auto conj = sm * pauli_op(Pauli::Z) * sm;
        auto expected = cplx(0.0, -1.0) * pauli_op(Pauli::Z);
        double dev = 0.0;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                dev = std::max(dev, std::abs(conj.m[i][j] - expected.m[i][j]));
        CHECK(dev < 1e-15);
    }

    CHECK_THROWS_AS(sqrt_pauli(Pauli::X, 0), std::invalid_argument);
}

TEST_CASE("apply_tensor_power identity and composition") {
    std::mt19937_64 rng(5150);
    for (int n : {1, 3, 6, 9}) {
        auto s = random_symmetric_state(n, rng);
        auto same = apply_tensor_power(s, identity_op());
        for (int w = 0; w <= n; ++w) CHECK(std::abs(same.amp[w] - s.amp[w]) < 1e-13);

        // sqrt(P)+ twice equals P as a tensor power
        for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
            auto twice = apply_tensor_power(apply_tensor_power(s, sqrt_pauli(p, +1)),
                                            sqrt_pauli(p, +1));
            auto direct = apply_tensor_power(s, pauli_op(p));
            for (int w = 0; w <= n; ++w) CHECK(std::abs(twice.amp[w] - direct.amp[w]) < 1e-12);
        }
    }
}

TEST_CASE("apply_tensor_power matches the dense oracle") {
    std::mt19937_64 rng(777);
    for (int n : {2, 5, 8}) {
        auto s = random_symmetric_state(n, rng);
        for (auto op : {sqrt_pauli(Pauli::X, +1), sqrt_pauli(Pauli::Y, -1), hadamard_op(),
                        random_su2(rng)}) {
            auto weight_route = apply_tensor_power(s, op);
            auto dense_route = dense_weight_projection(apply_all(symmetric_to_dense(s), op));
            CHECK(dense_route.symmetry_residual < 1e-12);
            for (int w = 0; w <= n; ++w)
                CHECK(std::abs(weight_route.amp[w] - dense_route.state.amp[w]) < 1e-12);
        }
    }
}

TEST_CASE("transformed H_6^3 amplitudes") {
    auto t = apply_tensor_power(build_symmetric(HypergraphSpec::complete(6, {3})),
                                sqrt_pauli(Pauli::X, +1));
    CHECK(std::abs(t.amp[0] - cplx(-0.5)) < 1e-13);
    CHECK(std::abs(t.amp[6] - cplx(-0.5)) < 1e-13);
    for (int w : {1, 3, 5}) CHECK(std::abs(t.amp[w] - cplx(0.125)) < 1e-13);
    for (int w : {2, 4}) CHECK(std::abs(t.amp[w]) < 1e-13);
}

TEST_CASE("Hadamard power of the single-edge state is real") {
    SymmetricState s;
    s.n_qubits = 4;
    s.amp.assign(5, cplx(0.25));
    s.amp[4] = -0.25;
    auto t = apply_tensor_power(s, hadamard_op());
    for (int w = 0; w <= 4; ++w) CHECK(std::abs(t.amp[w].imag()) < 1e-14);
}

TEST_CASE("closed-form coefficients match transform and oracle") {
    const std::vector<int> pool{2, 3, 5, 9};
    for (int mask = 1; mask < 16; ++mask) {
        std::vector<int> k;
        for (int i = 0; i < 4; ++i)
            if (mask & (1 << i)) k.push_back(pool[i]);
        for (int n = std::max(k.back(), 2); n <= 14; ++n) {
            auto spec = HypergraphSpec::complete(n, k);
            const StabilizerClass stab = classify_stabilizer(spec);
            if (stab == StabilizerClass::None) continue;
            const Pauli p = (stab == StabilizerClass::PlusY) ? Pauli::Y : Pauli::X;
            auto t = apply_tensor_power(build_symmetric(spec), sqrt_pauli(p, +1));
            auto d = dense_weight_projection(apply_all(build_dense(spec), sqrt_pauli(p, +1)));
            for (int w = 0; w <= n; ++w) {
                const cplx c = coeff_closed_form(n, k, stab, w);
                INFO(spec.describe() << " stab " << stabilizer_name(stab) << " w " << w);
                CHECK(std::abs(c - t.amp[w]) < 1e-12);
                CHECK(std::abs(c - d.state.amp[w]) < 1e-12);
            }
        }
    }
}

TEST_CASE("closed form pre/post conditions") {
    std::array<int, 1> k3{3};
    CHECK_THROWS_AS(coeff_closed_form(5, k3, StabilizerClass::None, 0), std::invalid_argument);
    CHECK_THROWS_AS(coeff_closed_form(6, k3, StabilizerClass::PlusY, 0), std::invalid_argument);
    CHECK_THROWS_AS(coeff_closed_form(6, k3, StabilizerClass::PlusX, 7), std::invalid_argument);

    // even weights of the five-uniform X family all equal 1/sqrt(2^N)
    std::array<int, 1> k5{5};
    for (int w = 0; w <= 12; w += 2) {
        const cplx c = coeff_closed_form(12, k5, StabilizerClass::PlusX, w);
        CHECK(std::abs(c - cplx(std::pow(2.0, -6.0))) < 1e-12);
    }
    // Y family: c_0 = c_N = 1/2
    CHECK(std::abs(coeff_closed_form(8, k5, StabilizerClass::PlusY, 0) - cplx(0.5)) < 1e-12);
    CHECK(std::abs(coeff_closed_form(8, k5, StabilizerClass::PlusY, 8) - cplx(0.5)) < 1e-12);
}

TEST_CASE("five-uniform odd coefficients follow the r=3 closed form") {
    // c_w = (-1)^l / sqrt2 (cos^{N-w}(pi/8) sin^w(pi/8) + sin^{N-w}(pi/8) cos^w(pi/8))
    for (int n : {12, 20}) {
        const int l = (n - 4) / 8;
        std::array<int, 1> k5{5};
        for (int w = 1; w <= n; w += 2) {
            const double expected = ((l & 1) ? -1.0 : 1.0) / std::sqrt(2.0) *
                                    (ipow(std::cos(kPi / 8), n - w) * ipow(std::sin(kPi / 8), w) +
                                     ipow(std::sin(kPi / 8), n - w) * ipow(std::cos(kPi / 8), w));
            const cplx c = coeff_closed_form(n, k5, StabilizerClass::PlusX, w);
            CHECK(std::abs(c - cplx(expected)) < 1e-12);
            CHECK(uniform_family_odd_coeff_x(3, n, w) == doctest::Approx(expected).epsilon(1e-12));
        }
    }
}

TEST_CASE("family coefficient fast paths match the general route") {
    // X-stabilized: r=3 at N=12, 20; r=4 at N=24
    for (auto [r, n] : std::vector<std::pair<int, int>>{{3, 12}, {3, 20}, {4, 24}}) {
        const int k = (1 << (r - 1)) + 1;
        auto t = apply_tensor_power(build_symmetric(HypergraphSpec::complete(n, {k})),
                                    sqrt_pauli(Pauli::X, +1));
        for (int w = 1; w <= n; w += 2) {
            INFO("r=" << r << " n=" << n << " w=" << w);
            CHECK(std::abs(t.amp[w] - cplx(uniform_family_odd_coeff_x(r, n, w))) < 1e-11);
        }
    }
    // Y-stabilized: r=3 at N=8, 16; r=4 at N=16
    for (auto [r, n] : std::vector<std::pair<int, int>>{{3, 8}, {3, 16}, {4, 16}}) {
        const int k = (1 << (r - 1)) + 1;
        auto t = apply_tensor_power(build_symmetric(HypergraphSpec::complete(n, {k})),
                                    sqrt_pauli(Pauli::Y, +1));
        for (int w = 1; w <= n; w += 2) {
            const cplx expected = minus_i_pow(-(w - 1)) * uniform_family_odd_coeff_y(r, n, w);
            INFO("r=" << r << " n=" << n << " w=" << w);
            CHECK(std::abs(t.amp[w] - expected) < 1e-11);
        }
    }
    CHECK_THROWS_AS(uniform_family_odd_coeff_x(2, 6, 1), std::invalid_argument);
    CHECK_THROWS_AS(uniform_family_odd_coeff_x(3, 13, 1), std::invalid_argument);
    CHECK_THROWS_AS(uniform_family_odd_coeff_y(3, 8, 2), std::invalid_argument);
}

TEST_CASE("GHZ + odd decomposition of the three-uniform family") {
    for (int n : {4, 6, 8, 10, 12}) {
        auto spec = HypergraphSpec::complete(n, {3});
        const StabilizerClass stab = classify_stabilizer(spec);
        const Pauli p = (stab == StabilizerClass::PlusY) ? Pauli::Y : Pauli::X;
        auto t = apply_tensor_power(build_symmetric(spec), sqrt_pauli(p, +1));
        auto d = ghz_odd_decompose(t, 1e-10);
        INFO("n=" << n);
        CHECK(d.residual < 1e-12);
        CHECK(d.ghz_basis == 'Z');
        // GHZ sign is negative exactly at N = 8k+4 and 8k+6
        const int expected_sign = (n % 8 == 4 || n % 8 == 6) ? -1 : 1;
        CHECK(d.ghz_sign == expected_sign);
        CHECK(three_uniform_form_residual(d, n, stab) < 1e-12);
    }
    // N=6: odd amplitudes are uniformly 1/8
    auto t6 = apply_tensor_power(build_symmetric(HypergraphSpec::complete(6, {3})),
                                 sqrt_pauli(Pauli::X, +1));
    auto d6 = ghz_odd_decompose(t6);
    for (int w : {1, 3, 5}) CHECK(std::abs(d6.odd_amp[w] - cplx(0.125)) < 1e-13);

    // N=12 five-uniform: the GHZ part lives in the X basis
    auto t12 = apply_tensor_power(build_symmetric(HypergraphSpec::complete(12, {5})),
                                  sqrt_pauli(Pauli::X, +1));
    auto d12 = ghz_odd_decompose(t12, 1e-10);
    CHECK(d12.ghz_basis == 'X');
    CHECK(d12.ghz_sign == 1);
}

TEST_CASE("decomposition of the general Y-stabilized family") {
    // 16-qubit (3,5,9)-uniform state: Y-stabilized, maps to GHZ + odd
    auto spec = HypergraphSpec::complete(16, {3, 5, 9});
    CHECK(classify_stabilizer(spec) == StabilizerClass::PlusY);
    auto t = apply_tensor_power(build_symmetric(spec), sqrt_pauli(Pauli::Y, +1));
    auto d = ghz_odd_decompose(t, 1e-10);
    CHECK(d.residual < 1e-10);
    CHECK(d.ghz_basis == 'Z');
}

TEST_CASE("decomposition rejects non-GHZ-odd states") {
    std::mt19937_64 rng(2024);
    auto s = random_symmetric_state(6, rng);
    CHECK_THROWS_AS(ghz_odd_decompose(s, 1e-10), NotGhzOddForm);
    auto d = try_ghz_odd_decompose(s);
    CHECK(d.residual > 1e-10);
    CHECK_THROWS_AS(try_ghz_odd_decompose(random_symmetric_state(5, rng)), std::invalid_argument);
}

TEST_CASE("residue-class binomial sums") {
    CHECK(mod_binom_sum(6, 1, 4) == doctest::Approx(12.0));
    CHECK(mod_binom_sum(4, 0, 2) == doctest::Approx(8.0));
    CHECK(mod_binom_sum(10, 0, 1) == doctest::Approx(1024.0));
    for (int N : {5, 12, 24}) {
        for (int n : {2, 4, 8, 16}) {
            if (n > N) continue;
            for (int q = 0; q < n; ++q) {
                const double exact = exact_mod_binom_sum(N, q, n);
                INFO("N=" << N << " q=" << q << " n=" << n);
                CHECK(mod_binom_sum(N, q, n) ==
                      doctest::Approx(exact).epsilon(1e-9).scale(std::max(exact, 1.0)));
            }
        }
    }
    CHECK_THROWS_AS(mod_binom_sum(4, 0, 5), std::invalid_argument);
    CHECK_THROWS_AS(mod_binom_sum(4, 0, 0), std::invalid_argument);
}

TEST_CASE("alternating cosine identity") {
    CHECK(alternating_cos_sum(0, 2, 8) == doctest::Approx(std::cos(kPi / 4)));
    CHECK(alternating_cos_sum(1, 0, 4) == doctest::Approx(0.0));
    CHECK(alternating_cos_sum(2, 2, 8) == doctest::Approx(direct_alternating_cos_sum(2, 2, 8)));
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> alpha(-6, 12);
    std::uniform_real_distribution<double> beta(0.5, 16.0);
    for (int M = 0; M <= 20; ++M) {
        for (int rep = 0; rep < 4; ++rep) {
            const double a = alpha(rng), b = beta(rng);
            const double lhs = direct_alternating_cos_sum(M, a, b);
            const double rhs = alternating_cos_sum(M, a, b);
            INFO("M=" << M << " alpha=" << a << " beta=" << b);
            CHECK(rhs == doctest::Approx(lhs).epsilon(1e-9).scale(std::max(1.0, std::abs(lhs))));
        }
    }
    CHECK_THROWS_AS(alternating_cos_sum(2, 1, 0.0), std::invalid_argument);
}

TEST_CASE("normalization is preserved by the unitary transforms") {
    std::mt19937_64 rng(11);
    for (int n : {3, 7, 12}) {
        auto s = build_symmetric(
            HypergraphSpec::complete(n, n >= 5 ? std::vector<int>{3, 5} : std::vector<int>{3}));
        CHECK(s.norm_error() < 1e-12);
        for (auto op : {sqrt_pauli(Pauli::X, +1), sqrt_pauli(Pauli::Y, +1), hadamard_op(),
                        random_su2(rng)}) {
            auto t = apply_tensor_power(s, op);
            CHECK(t.norm_error() < 1e-12);
        }
    }
}

TEST_CASE("cardinality-1 edges act as Z gates") {
    // a single-vertex hyperedge flips the sign of every basis element with
    // that qubit set
    auto with_edge = build_dense(HypergraphSpec::from_edges(3, {{1}}));
    auto plain = uniform_superposition(3);
    std::vector<SingleQubitOp> z{pauli_op(Pauli::Z)};
    std::vector<int> site{1};
    auto z_applied = apply_local(plain, z, site);
    for (size_t x = 0; x < with_edge.amp.size(); ++x)
        CHECK(std::abs(with_edge.amp[x] - z_applied.amp[x]) < 1e-15);

    // complete cardinality-1 specs classify and transform consistently
    for (int n : {2, 4, 5}) {
        auto spec = HypergraphSpec::complete(n, {1});
        const StabilizerClass stab = classify_stabilizer(spec);
        CHECK(stab == (n % 2 == 0 ? StabilizerClass::PlusX : StabilizerClass::MinusX));
        auto t = apply_tensor_power(build_symmetric(spec), sqrt_pauli(Pauli::X, +1));
        for (int w = 0; w <= n; ++w)
            CHECK(std::abs(coeff_closed_form(n, std::array<int, 1>{1}, stab, w) - t.amp[w]) <
                  1e-12);
    }
}

TEST_CASE("contraction cap guards oversized states") {
    SymmetricState s;
    s.n_qubits = kContractionCap + 1;
    s.amp.assign(s.n_qubits + 1, 0.0);
    s.amp[0] = 1.0;
    CHECK_THROWS_AS(apply_tensor_power(s, identity_op()), CapExceeded);
}
