#include <doctest.h>

#include <array>

#include "dense.hpp"
#include "hypergraph.hpp"
#include "errors.hpp"
#include "oracle.hpp"

using namespace hyperstate;

TEST_CASE("weight sign function") {
    std::array<int, 1> k3{3};
    CHECK(weight_sign(k3, 3) == 1);
    CHECK(weight_sign(k3, 2) == 0);
    CHECK(weight_sign(k3, 7) == 1);
    std::array<int, 2> k32{3, 2};
    CHECK(weight_sign(k32, 3) == 0);
}

TEST_CASE("weight sign periodicity") {
    // k = 3 gives a 4-periodic sign pattern
    std::array<int, 1> k3{3};
    for (long w = 0; w + 4 <= 200; ++w) CHECK(weight_sign(k3, w) == weight_sign(k3, w + 4));
    // k = 2^{r-1} + 1 gives a 2^r-periodic pattern
    for (int r = 2; r <= 4; ++r) {
        const int k = (1 << (r - 1)) + 1;
        const long period = 1 << r;
        std::array<int, 1> kk{k};
        CHECK(weight_sign_period(kk) == period);
        for (long w = 0; w + period <= 200; ++w)
            CHECK(weight_sign(kk, w) == weight_sign(kk, w + period));
    }
}

TEST_CASE("build_symmetric amplitudes") {
    auto s = build_symmetric(HypergraphSpec::complete(4, {3}));
    CHECK(s.amp[0].real() == doctest::Approx(0.25));
    CHECK(s.amp[1].real() == doctest::Approx(0.25));
    CHECK(s.amp[2].real() == doctest::Approx(0.25));
    CHECK(s.amp[3].real() == doctest::Approx(-0.25));
    CHECK(s.amp[4].real() == doctest::Approx(0.25));
    CHECK(s.norm_error() < 1e-12);

    auto s6 = build_symmetric(HypergraphSpec::complete(6, {3}));
    for (int w = 0; w <= 6; ++w)
        CHECK(s6.amp[w].real() * (w == 3 ? -1 : 1) > 0);
    CHECK(s6.norm_error() < 1e-12);

    auto s2 = build_symmetric(HypergraphSpec::complete(2, {2}));
    CHECK(s2.amp[0].real() == doctest::Approx(0.5));
    CHECK(s2.amp[1].real() == doctest::Approx(0.5));
    CHECK(s2.amp[2].real() == doctest::Approx(-0.5));
}

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(HypergraphSpec::complete(2, {3}), std::invalid_argument);
    CHECK_THROWS_AS(HypergraphSpec::complete(0, {}), std::invalid_argument);
    CHECK_THROWS_AS(HypergraphSpec::complete(4, {3, 3}), std::invalid_argument);
    CHECK_THROWS_AS(HypergraphSpec::complete(4, {0}), std::invalid_argument);
    CHECK_THROWS_AS(HypergraphSpec::from_edges(3, {{}}), std::invalid_argument);
    CHECK_THROWS_AS(HypergraphSpec::from_edges(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(HypergraphSpec::from_edges(3, {{0, 0}}), std::invalid_argument);
}

TEST_CASE("duplicate explicit edges cancel pairwise") {
    // C_e is an involution, so an edge listed twice drops out
    auto once = HypergraphSpec::from_edges(3, {{0, 1}});
    auto twice_plus = HypergraphSpec::from_edges(3, {{0, 1}, {1, 0}, {0, 1, 2}});
    CHECK(once.edges().size() == 1);
    CHECK(twice_plus.edges().size() == 1);
    CHECK(twice_plus.edges()[0] == std::vector<int>{0, 1, 2});
}

TEST_CASE("classification examples") {
    CHECK(classify_stabilizer(HypergraphSpec::complete(6, {3})) == StabilizerClass::PlusX);
    CHECK(classify_stabilizer(HypergraphSpec::complete(4, {3})) == StabilizerClass::PlusY);
    CHECK(classify_stabilizer(HypergraphSpec::complete(4, {3, 2})) == StabilizerClass::PlusX);
    CHECK(classify_stabilizer(HypergraphSpec::complete(5, {3})) == StabilizerClass::None);
    CHECK(classify_stabilizer(HypergraphSpec::complete(3, {2})) == StabilizerClass::MinusX);
}

TEST_CASE("classification agrees with the dense eigenvalue test") {
    const std::vector<int> pool{2, 3, 5, 9};
    for (int mask = 1; mask < 16; ++mask) {
        std::vector<int> k;
        for (int i = 0; i < 4; ++i)
            if (mask & (1 << i)) k.push_back(pool[i]);
        const int kmax = k.back();
        for (int n = std::max(kmax, 2); n <= 9; ++n) {
            auto spec = HypergraphSpec::complete(n, k);
            const StabilizerClass cls = classify_stabilizer(spec);
            auto d = build_dense(spec);
            StabilizerClass oracle = StabilizerClass::None;
            for (Pauli p : {Pauli::X, Pauli::Y}) {
                PauliString ps;
                ps.letters.assign(n, p == Pauli::X ? 'X' : 'Y');
                const cplx e = pauli_string_expectation(d, ps);
                if (std::abs(e - cplx(1.0)) < 1e-12)
                    oracle = (p == Pauli::X) ? StabilizerClass::PlusX : StabilizerClass::PlusY;
                else if (p == Pauli::X && std::abs(e + cplx(1.0)) < 1e-12)
                    oracle = StabilizerClass::MinusX;
            }
            INFO(spec.describe());
            CHECK(cls == oracle);
        }
    }
}

TEST_CASE("toggle pairwise edges") {
    auto t1 = toggle_pairwise_edges(HypergraphSpec::complete(4, {3}));
    CHECK(t1.cardinalities() == std::vector<int>{2, 3});
    CHECK(classify_stabilizer(t1) == StabilizerClass::PlusX);

    auto t2 = toggle_pairwise_edges(HypergraphSpec::complete(6, {3}));
    CHECK(classify_stabilizer(HypergraphSpec::complete(6, {3})) == StabilizerClass::PlusX);
    CHECK(classify_stabilizer(t2) == StabilizerClass::PlusY);

    auto t3 = toggle_pairwise_edges(HypergraphSpec::complete(6, {3, 2}));
    CHECK(t3.cardinalities() == std::vector<int>{3});

    CHECK_THROWS_AS(toggle_pairwise_edges(HypergraphSpec::complete(5, {3})),
                    std::invalid_argument);
}

TEST_CASE("toggle swaps X and Y classes on even qubits") {
    for (int n = 4; n <= 12; n += 2) {
        for (std::vector<int> k : {std::vector<int>{3}, std::vector<int>{5}, std::vector<int>{3, 5}}) {
            if (k.back() > n) continue;
            auto spec = HypergraphSpec::complete(n, k);
            const StabilizerClass before = classify_stabilizer(spec);
            const StabilizerClass after = classify_stabilizer(toggle_pairwise_edges(spec));
            if (before == StabilizerClass::PlusY)
                CHECK((after == StabilizerClass::PlusX || after == StabilizerClass::MinusX));
            if (before == StabilizerClass::PlusX || before == StabilizerClass::MinusX)
                CHECK(after == StabilizerClass::PlusY);
        }
    }
}

TEST_CASE("symmetric to dense round trip") {
    auto s = build_symmetric(HypergraphSpec::complete(5, {3}));
    auto d = symmetric_to_dense(s);
    CHECK(d.norm_error() < 1e-12);
    auto p = dense_weight_projection(d);
    CHECK(p.symmetry_residual < 1e-15);
    for (int w = 0; w <= 5; ++w) CHECK(std::abs(p.state.amp[w] - s.amp[w]) < 1e-15);
    CHECK_THROWS_AS(symmetric_to_dense(s, 4), CapExceeded);
}
