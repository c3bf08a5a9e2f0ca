#include <doctest.h>

#include <random>

#include "dense.hpp"
#include "errors.hpp"
#include "hypergraph.hpp"
#include "oracle.hpp"

using namespace hyperstate;
using namespace hyperstate::testing;

TEST_CASE("build_dense small cases") {
    auto cz = build_dense(HypergraphSpec::from_edges(2, {{0, 1}}));
    CHECK(cz.amp[0].real() == doctest::Approx(0.5));
    CHECK(cz.amp[1].real() == doctest::Approx(0.5));
    CHECK(cz.amp[2].real() == doctest::Approx(0.5));
    CHECK(cz.amp[3].real() == doctest::Approx(-0.5));

    auto h43 = build_dense(HypergraphSpec::complete(4, {3}));
    for (std::uint64_t x = 0; x < 16; ++x) {
        const double expected = (__builtin_popcountll(x) == 3) ? -0.25 : 0.25;
        CHECK(h43.amp[x].real() == doctest::Approx(expected));
    }

    auto single = build_dense(HypergraphSpec::from_edges(5, {{0, 1, 2, 3, 4}}));
    for (std::uint64_t x = 0; x < 32; ++x) {
        const double expected = (x == 31) ? -1.0 : 1.0;
        CHECK(single.amp[x].real() * expected > 0);
    }
    CHECK_THROWS_AS(build_dense(HypergraphSpec::complete(30, {3}), 24), CapExceeded);
}

TEST_CASE("build_dense matches build_symmetric after weight projection") {
    for (int n : {4, 6, 8}) {
        auto spec = HypergraphSpec::complete(n, {3});
        auto d = build_dense(spec);
        auto p = dense_weight_projection(d);
        CHECK(p.symmetry_residual < 1e-12);
        auto s = build_symmetric(spec);
        for (int w = 0; w <= n; ++w) CHECK(std::abs(p.state.amp[w] - s.amp[w]) < 1e-12);
    }
}

TEST_CASE("nonlocal stabilizers fix random hypergraph states") {
    std::mt19937_64 rng(31337);
    for (int n = 3; n <= 8; ++n) {
        // a few random edge sets per size
        for (int rep = 0; rep < 3; ++rep) {
            std::vector<std::vector<int>> edges;
            std::uniform_int_distribution<int> nedges(1, 2 * n);
            std::uniform_int_distribution<int> card(1, n);
            const int m = nedges(rng);
            for (int e = 0; e < m; ++e) {
                std::vector<int> all(n);
                for (int q = 0; q < n; ++q) all[q] = q;
                std::shuffle(all.begin(), all.end(), rng);
                all.resize(card(rng));
                edges.push_back(all);
            }
            auto spec = HypergraphSpec::from_edges(n, edges);
            auto st = build_dense(spec);
            for (int i = 0; i < n; ++i) {
                auto fixed = apply_hg_stabilizer(st, spec, i);
                double dev = 0.0;
                for (size_t x = 0; x < st.amp.size(); ++x)
                    dev = std::max(dev, std::abs(fixed.amp[x] - st.amp[x]));
                INFO(spec.describe() << " vertex " << i);
                CHECK(dev < 1e-12);
            }
        }
    }
}

TEST_CASE("apply_local basics") {
    auto st = build_dense(HypergraphSpec::complete(3, {2}));
    std::vector<SingleQubitOp> id(3, identity_op());
    std::vector<int> sites{0, 1, 2};
    auto same = apply_local(st, id, sites);
    for (size_t x = 0; x < st.amp.size(); ++x) CHECK(std::abs(same.amp[x] - st.amp[x]) < 1e-15);

    // sqrt(X)+ applied twice equals X
    std::vector<SingleQubitOp> sx{sqrt_pauli(Pauli::X, +1)};
    std::vector<SingleQubitOp> x{pauli_op(Pauli::X)};
    std::vector<int> site0{0};
    auto twice = apply_local(apply_local(st, sx, site0), sx, site0);
    auto direct = apply_local(st, x, site0);
    for (size_t i = 0; i < st.amp.size(); ++i) CHECK(std::abs(twice.amp[i] - direct.amp[i]) < 1e-14);

    CHECK_THROWS_AS(apply_local(st, sx, std::vector<int>{5}), std::invalid_argument);
    std::vector<SingleQubitOp> two(2, identity_op());
    CHECK_THROWS_AS(apply_local(st, two, std::vector<int>{1, 1}), std::invalid_argument);
}

TEST_CASE("Hadamards on the first two qubits of the fig-1b state") {
    auto spec = HypergraphSpec::from_edges(4, {{1, 2, 3}, {0, 2, 3}});
    auto st = build_dense(spec);
    std::vector<SingleQubitOp> hh(2, hadamard_op());
    std::vector<int> sites{0, 1};
    auto ht = apply_local(st, hh, sites);
    // (|0000> + |0001> + |0010> + |1111>)/2
    for (std::uint64_t x = 0; x < 16; ++x) {
        const bool hit = (x == 0b0000 || x == 0b0001 || x == 0b0010 || x == 0b1111);
        CHECK(std::abs(ht.amp[x] - (hit ? cplx(0.5) : cplx(0.0))) < 1e-14);
    }
}

TEST_CASE("pauli string expectations") {
    SymmetricState ghz;
    ghz.n_qubits = 4;
    ghz.amp.assign(5, 0.0);
    ghz.amp[0] = ghz.amp[4] = 1.0 / std::sqrt(2.0);
    auto d = symmetric_to_dense(ghz);
    CHECK(pauli_string_expectation(d, {"ZZII"}).real() == doctest::Approx(1.0));

    auto h43 = build_dense(HypergraphSpec::complete(4, {3}));
    CHECK(pauli_string_expectation(h43, {"YYYY"}).real() == doctest::Approx(1.0));

    auto fig1b = build_dense(HypergraphSpec::from_edges(4, {{1, 2, 3}, {0, 2, 3}}));
    CHECK(pauli_string_expectation(fig1b, {"XXII"}).real() == doctest::Approx(1.0));

    CHECK_THROWS_AS(pauli_string_expectation(h43, {"XX"}), std::invalid_argument);
    CHECK_THROWS_AS(pauli_string_expectation(h43, {"ABCD"}), std::invalid_argument);
}

TEST_CASE("overlap and global phase comparison") {
    auto h = build_dense(HypergraphSpec::complete(4, {3}));
    CHECK(std::abs(overlap(h, h) - cplx(1.0)) < 1e-14);

    SymmetricState ghz;
    ghz.n_qubits = 4;
    ghz.amp.assign(5, 0.0);
    ghz.amp[0] = ghz.amp[4] = 1.0 / std::sqrt(2.0);
    auto g = symmetric_to_dense(ghz);
    DenseState zero = g;
    for (auto& a : zero.amp) a = 0.0;
    zero.amp[0] = 1.0;
    CHECK(std::abs(overlap(zero, g) - cplx(1.0 / std::sqrt(2.0))) < 1e-14);

    DenseState rotated = h;
    for (auto& a : rotated.amp) a *= cplx(0.0, 1.0);
    CHECK(equal_up_to_global_phase(h, rotated, 1e-12));
    CHECK(!equal_up_to_global_phase(h, g, 1e-12));
}

TEST_CASE("transformed three-uniform state matches the GHZ + odd form") {
    // sqrt(X)+^{x6} H_6^3 against the explicit -GHZ/sqrt2 + odd-sum state
    auto spec = HypergraphSpec::complete(6, {3});
    auto t = apply_all(build_dense(spec), sqrt_pauli(Pauli::X, +1));
    DenseState expected = t;
    for (std::uint64_t x = 0; x < expected.amp.size(); ++x) {
        const int w = __builtin_popcountll(x);
        if (w % 2 == 1)
            expected.amp[x] = 1.0 / 8.0;
        else if (w == 0 || w == 6)
            expected.amp[x] = -0.5;
        else
            expected.amp[x] = 0.0;
    }
    CHECK(std::abs(std::abs(overlap(t, expected)) - 1.0) < 1e-12);
}

TEST_CASE("product state optimizer") {
    // GHZ: E_G = 1/2 for any qubit count
    for (int n = 3; n <= 6; ++n) {
        SymmetricState ghz;
        ghz.n_qubits = n;
        ghz.amp.assign(n + 1, 0.0);
        ghz.amp[0] = ghz.amp[n] = 1.0 / std::sqrt(2.0);
        auto r = product_state_optimize(symmetric_to_dense(ghz), 16, false, 99 + n);
        CHECK(r.e_g == doctest::Approx(0.5).epsilon(1e-9));
    }

    // H_4^3: (25 - 3 sqrt5)/32
    auto h43 = build_dense(HypergraphSpec::complete(4, {3}));
    auto r = product_state_optimize(h43, 32, false, 1234);
    CHECK(r.e_g == doctest::Approx((25.0 - 3.0 * std::sqrt(5.0)) / 32.0).epsilon(1e-9));

    // fig 1b with the Hadamard pre-transform; real product states suffice
    auto fig1b = build_dense(HypergraphSpec::from_edges(4, {{1, 2, 3}, {0, 2, 3}}));
    std::vector<SingleQubitOp> hh(2, hadamard_op());
    std::vector<int> sites{0, 1};
    auto ht = apply_local(fig1b, hh, sites);
    auto r2 = product_state_optimize(ht, 32, true, 4321);
    CHECK(r2.e_g == doctest::Approx((5.0 - std::sqrt(5.0)) / 8.0).epsilon(1e-9));

    CHECK_THROWS_AS(product_state_optimize(h43, 0, false, 1), std::invalid_argument);
}

TEST_CASE("optimizer finds a symmetric product state on symmetric input") {
    for (int n : {3, 4, 6}) {
        auto st = build_dense(HypergraphSpec::complete(n, {3}));
        auto r = product_state_optimize(st, 32, false, 777);
        for (int q = 1; q < n; ++q) {
            const cplx ov = std::conj(r.locals[0][0]) * r.locals[q][0] +
                            std::conj(r.locals[0][1]) * r.locals[q][1];
            CHECK(std::abs(ov) == doctest::Approx(1.0).epsilon(1e-6));
        }
    }
}
