// hyperstate CLI: classify/build/transform/decompose/geomeasure/single-edge/
// mermin/robustness/families/verify/sweep over the shared-library C API.
//
// Exit codes: 0 success, 2 usage or domain error, 3 cross-check failure.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperstate/hyperstate.h"
#include "json_out.hpp"

namespace {

constexpr int kExitDomain = 2;
constexpr int kExitCrossCheck = 3;

struct CliError {
    int exit_code;
    std::string message;
};

[[noreturn]] void die(int code, const std::string& msg) { throw CliError{code, msg}; }

void check(int rc) {
    if (rc == HS_OK) return;
    const int code = (rc == HS_ERR_CROSS_CHECK) ? kExitCrossCheck : kExitDomain;
    die(code, std::string(hs_status_name(rc)) + ": " + hs_last_error());
}

using HgPtr = std::unique_ptr<hs_hypergraph, decltype(&hs_hypergraph_free)>;
using SymPtr = std::unique_ptr<hs_symmetric_state, decltype(&hs_symmetric_state_free)>;
using DensePtr = std::unique_ptr<hs_dense_state, decltype(&hs_dense_state_free)>;

int dense_cap() {
    if (const char* env = std::getenv("HYPERSTATE_DENSE_CAP")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 24;
}

struct StateArgs {
    int n = 0;
    std::vector<int> k;
    std::string edges;

    bool has_edges() const { return !edges.empty(); }

    HgPtr make() const {
        hs_hypergraph* hg = nullptr;
        if (has_edges()) {
            nlohmann::json j;
            try {
                j = nlohmann::json::parse(edges);
            } catch (const std::exception& e) {
                die(kExitDomain, std::string("cannot parse --edges: ") + e.what());
            }
            std::vector<int> vertices;
            std::vector<int> sizes;
            for (const auto& edge : j) {
                sizes.push_back(int(edge.size()));
                for (const auto& v : edge) vertices.push_back(v.get<int>());
            }
            check(hs_hypergraph_create_edges(n, vertices.data(), sizes.data(), int(sizes.size()),
                                             &hg));
        } else {
            check(hs_hypergraph_create_complete(n, k.data(), int(k.size()), &hg));
        }
        return HgPtr(hg, hs_hypergraph_free);
    }

    std::string echo_k() const {
        std::ostringstream os;
        for (size_t i = 0; i < k.size(); ++i) os << (i ? "," : "") << k[i];
        return os.str();
    }
};

SymPtr build_symmetric(const HgPtr& hg) {
    hs_symmetric_state* s = nullptr;
    check(hs_build_symmetric(hg.get(), &s));
    return SymPtr(s, hs_symmetric_state_free);
}

DensePtr build_dense_state(const HgPtr& hg) {
    hs_dense_state* d = nullptr;
    check(hs_build_dense(hg.get(), dense_cap(), &d));
    return DensePtr(d, hs_dense_state_free);
}

struct Op2 {
    double re[4];
    double im[4];
};

Op2 sqrt_pauli_op(int pauli, int branch) {
    Op2 op;
    check(hs_sqrt_pauli(pauli, branch, op.re, op.im));
    return op;
}

Op2 pauli_plus_iz(int pauli, int sign) {
    // P + sign*iZ assembled from the Pauli matrices directly.
    Op2 op{};
    if (pauli == HS_PAULI_X) {
        op.re[1] = op.re[2] = 1.0;
    } else {
        op.im[1] = -1.0;
        op.im[2] = 1.0;
    }
    op.im[0] += sign;
    op.im[3] -= sign;
    return op;
}

SymPtr apply_power(const SymPtr& s, const Op2& op) {
    hs_symmetric_state* out = nullptr;
    check(hs_apply_tensor_power(s.get(), op.re, op.im, &out));
    return SymPtr(out, hs_symmetric_state_free);
}

// Dense-route Mermin expectation: B^P |psi> via the two rank-one tensor-power
// applications, used as the oracle cross-check.
double mermin_oracle_dense(const DensePtr& d, int pauli, double* imag_residue) {
    const int n = hs_dense_n_qubits(d.get());
    std::complex<double> total = 0.0;
    for (int sign : {+1, -1}) {
        const Op2 piz = pauli_plus_iz(pauli, sign);
        std::vector<double> ops_re, ops_im;
        std::vector<int> sites;
        for (int q = 0; q < n; ++q) {
            ops_re.insert(ops_re.end(), piz.re, piz.re + 4);
            ops_im.insert(ops_im.end(), piz.im, piz.im + 4);
            sites.push_back(q);
        }
        hs_dense_state* applied = nullptr;
        check(hs_dense_apply_local(d.get(), ops_re.data(), ops_im.data(), sites.data(), n,
                                   &applied));
        DensePtr ap(applied, hs_dense_state_free);
        double re = 0.0, im = 0.0;
        check(hs_dense_overlap(d.get(), ap.get(), &re, &im));
        total += 0.5 * std::complex<double>(re, im);
    }
    if (imag_residue) *imag_residue = std::abs(total.imag());
    return total.real();
}

long now_ms() {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

struct Emitter {
    std::string out_path;
    void emit(const std::string& text) const {
        if (out_path.empty()) {
            std::cout << text << "\n";
        } else {
            std::ofstream f(out_path);
            if (!f) die(kExitDomain, "cannot open output file " + out_path);
            f << text << "\n";
        }
    }
};

const char* stab_str(int stab) { return hs_stabilizer_name(stab); }

int parse_pauli(const std::string& p) {
    if (p == "x" || p == "X") return HS_PAULI_X;
    if (p == "y" || p == "Y") return HS_PAULI_Y;
    if (p == "z" || p == "Z") return HS_PAULI_Z;
    die(kExitDomain, "unknown pauli '" + p + "'");
}

// ---------------------------------------------------------------- classify

int cmd_classify(const StateArgs& st, const Emitter& em, long t0) {
    JsonOut j;
    j.field("command", "classify").field("n", st.n);
    if (st.has_edges()) {
        // explicit-edge states are classified through the oracle eigenvalue test
        j.field("edges", st.edges);
        auto hg = st.make();
        auto d = build_dense_state(hg);
        std::string result = "none";
        double best = 1.0;
        for (int pauli : {HS_PAULI_X, HS_PAULI_Y}) {
            std::string letters(st.n, pauli == HS_PAULI_X ? 'X' : 'Y');
            double re = 0.0, im = 0.0;
            check(hs_dense_pauli_expectation(d.get(), letters.c_str(), &re, &im));
            for (int sign : {+1, -1}) {
                const double dev = std::abs(re - sign) + std::abs(im);
                if (dev < 1e-10 && dev < best) {
                    best = dev;
                    result = (sign > 0 ? "+" : "-") + std::string(pauli == HS_PAULI_X ? "X" : "Y");
                }
            }
        }
        j.field("stabilizer", result).field("method", "oracle");
    } else {
        auto hg = st.make();
        int stab = 0;
        check(hs_classify(hg.get(), &stab));
        j.field("k", st.echo_k());
        j.field("stabilizer", stab_str(stab)).field("method", "closed_form");
    }
    j.field("version", hs_version()).field("wall_time_ms", now_ms() - t0);
    em.emit(j.str());
    return 0;
}

// ------------------------------------------------------------------- build

int cmd_build(const StateArgs& st, const std::string& method, const Emitter& em, long t0) {
    auto hg = st.make();
    double cross = 0.0;
    JsonOut j;
    j.field("command", "build").field("n", st.n);
    if (st.has_edges()) {
        j.field("edges", st.edges);
        if (st.n > 16) die(kExitDomain, "dense amplitude dump limited to n <= 16");
        auto d = build_dense_state(hg);
        const size_t dim = size_t(1) << st.n;
        std::vector<double> re(dim), im(dim);
        check(hs_dense_amplitudes(d.get(), re.data(), im.data()));
        j.field("representation", "dense");
        j.field_complex_array("amp", re, im);
    } else {
        j.field("k", st.echo_k());
        auto s = build_symmetric(hg);
        std::vector<double> re(st.n + 1), im(st.n + 1);
        check(hs_symmetric_amplitudes(s.get(), re.data(), im.data()));
        j.field("representation", "symmetric");
        j.field_complex_array("amp", re, im);
        if (method == "oracle" || method == "all") {
            auto d = build_dense_state(hg);
            hs_dense_state* ds = nullptr;
            check(hs_symmetric_to_dense(s.get(), dense_cap(), &ds));
            DensePtr sym_dense(ds, hs_dense_state_free);
            double ore = 0.0, oim = 0.0;
            check(hs_dense_overlap(d.get(), sym_dense.get(), &ore, &oim));
            cross = std::abs(std::complex<double>(ore, oim) - 1.0);
            j.field("oracle_residual", cross).field("oracle_method", "oracle");
        }
    }
    j.field("version", hs_version()).field("wall_time_ms", now_ms() - t0);
    em.emit(j.str());
    if (cross > 1e-12)
        die(kExitCrossCheck,
            "symmetric and gate-by-gate constructions disagree: " + JsonOut::num(cross));
    return 0;
}

// --------------------------------------------------------------- transform

int transform_state(const StateArgs& st, const std::string& pauli_arg, int branch, double tol,
                    SymPtr* out_state, int* out_stab, int* out_pauli, double* out_residual) {
    auto hg = st.make();
    int stab = 0;
    check(hs_classify(hg.get(), &stab));
    int pauli;
    if (pauli_arg == "auto") {
        if (stab == HS_STAB_NONE)
            die(kExitDomain, "state has no local Pauli stabilizer; pass --pauli explicitly");
        pauli = (stab == HS_STAB_PLUS_Y) ? HS_PAULI_Y : HS_PAULI_X;
    } else {
        pauli = parse_pauli(pauli_arg);
    }
    auto s = build_symmetric(hg);
    auto t = apply_power(s, sqrt_pauli_op(pauli, branch));

    double residual = std::nan("");
    const bool matches_stab = branch == +1 && stab != HS_STAB_NONE &&
                              pauli == ((stab == HS_STAB_PLUS_Y) ? HS_PAULI_Y : HS_PAULI_X);
    if (matches_stab && !st.has_edges()) {
        std::vector<double> re(st.n + 1), im(st.n + 1);
        check(hs_symmetric_amplitudes(t.get(), re.data(), im.data()));
        residual = 0.0;
        for (int w = 0; w <= st.n; ++w) {
            double cre = 0.0, cim = 0.0;
            check(hs_coeff_closed_form(st.n, st.k.data(), int(st.k.size()), stab, w, &cre, &cim));
            residual = std::max(residual, std::hypot(re[w] - cre, im[w] - cim));
        }
        (void)tol;
    }
    *out_state = std::move(t);
    *out_stab = stab;
    *out_pauli = pauli;
    *out_residual = residual;
    return 0;
}

int cmd_transform(const StateArgs& st, const std::string& pauli_arg, int branch, double tol,
                  const Emitter& em, long t0) {
    SymPtr t(nullptr, hs_symmetric_state_free);
    int stab = 0, pauli = 0;
    double residual = 0.0;
    transform_state(st, pauli_arg, branch, tol, &t, &stab, &pauli, &residual);
    std::vector<double> re(st.n + 1), im(st.n + 1);
    check(hs_symmetric_amplitudes(t.get(), re.data(), im.data()));
    JsonOut j;
    j.field("command", "transform")
        .field("n", st.n)
        .field("k", st.echo_k())
        .field("pauli", pauli == HS_PAULI_X ? "x" : (pauli == HS_PAULI_Y ? "y" : "z"))
        .field("branch", branch)
        .field("stabilizer", stab_str(stab))
        .field_complex_array("amp", re, im)
        .field("method", "contraction");
    if (!std::isnan(residual)) j.field("closed_form_residual", residual);
    j.field("version", hs_version()).field("wall_time_ms", now_ms() - t0);
    em.emit(j.str());
    if (!std::isnan(residual) && residual > tol)
        die(kExitCrossCheck, "closed form and contraction disagree: " + JsonOut::num(residual));
    return 0;
}

// --------------------------------------------------------------- decompose

int cmd_decompose(const StateArgs& st, double tol, const Emitter& em, long t0) {
    SymPtr t(nullptr, hs_symmetric_state_free);
    int stab = 0, pauli = 0;
    double path_residual = 0.0;
    transform_state(st, "auto", +1, 1e-10, &t, &stab, &pauli, &path_residual);

    int sign = 0;
    char basis = 0;
    double residual = 0.0, pre = 0.0, pim = 0.0;
    std::vector<double> ore(st.n + 1), oim(st.n + 1);
    int rc = hs_ghz_odd_decompose(t.get(), tol, &sign, &basis, &residual, &pre, &pim, ore.data(),
                                  oim.data());
    if (rc == HS_ERR_NOT_GHZ_ODD_FORM) {
        // retry after the sqrt(Z)+ cleanup pass
        auto t2 = apply_power(t, sqrt_pauli_op(HS_PAULI_Z, +1));
        const int rc2 = hs_ghz_odd_decompose(t2.get(), tol, &sign, &basis, &residual, &pre, &pim,
                                             ore.data(), oim.data());
        if (rc2 == HS_OK) {
            t = std::move(t2);
            rc = HS_OK;
        }
    }
    check(rc);

    JsonOut j;
    j.field("command", "decompose")
        .field("n", st.n)
        .field("k", st.echo_k())
        .field("stabilizer", stab_str(stab))
        .field("ghz_sign", sign)
        .field("ghz_basis", std::string(1, basis))
        .field_complex("global_phase", pre, pim)
        .field("residual", residual)
        .field_complex_array("odd_amp", ore, oim);
    if (st.k == std::vector<int>{3}) {
        // three-uniform structure: odd amplitudes have modulus 1/sqrt(2^n),
        // uniform phase (X case) or the (-i)^{w-1} ladder (Y case)
        const double mag = std::pow(2.0, -0.5 * st.n);
        std::complex<double> lead(ore[1], oim[1]);
        const std::complex<double> phase = lead / std::abs(lead);
        double tres = 0.0;
        for (int w = 1; w <= st.n; w += 2) {
            std::complex<double> expected = phase * mag;
            if (stab == HS_STAB_PLUS_Y) {
                const int e = ((w - 1) % 4 + 4) % 4;
                const std::complex<double> mi(0, -1);
                std::complex<double> f = 1.0;
                for (int i = 0; i < e; ++i) f *= mi;
                expected *= f;
            }
            tres = std::max(tres, std::abs(std::complex<double>(ore[w], oim[w]) - expected));
        }
        j.field("three_uniform_residual", tres);
    }
    j.field("closed_form_residual", path_residual)
        .field("method", "contraction")
        .field("version", hs_version())
        .field("wall_time_ms", now_ms() - t0);
    em.emit(j.str());
    if (!std::isnan(path_residual) && path_residual > 1e-10)
        die(kExitCrossCheck,
            "closed form and contraction disagree: " + JsonOut::num(path_residual));
    return 0;
}

// -------------------------------------------------------------- geomeasure

int cmd_geomeasure(const StateArgs& st, const std::string& method, int restarts, uint64_t seed,
                   double tol, const Emitter& em, long t0) {
    const bool want_closed = method == "closed" || method == "all";
    const bool want_numeric = method == "numeric" || method == "all";
    const bool want_oracle = method == "oracle" || method == "all";
    const double closed_numeric_tol = (tol > 0) ? tol : 1e-9;
    const double oracle_tol = (tol > 0) ? tol : 1e-7;

    JsonOut j;
    j.field("command", "geomeasure").field("n", st.n);
    if (st.has_edges())
        j.field("edges", st.edges);
    else
        j.field("k", st.echo_k());

    std::optional<double> closed_exact, closed_lower, closed_upper;
    if (want_closed && !st.has_edges()) {
        int exact = 0, stab = 0;
        double lower = 0.0, upper = 0.0;
        const int rc = hs_geomeasure_closed(st.n, st.k.data(), int(st.k.size()), &exact, &lower,
                                            &upper, &stab);
        if (rc == HS_OK) {
            closed_lower = lower;
            closed_upper = upper;
            if (exact) {
                closed_exact = lower;
                j.field("value_closed", lower).field("method_closed", "closed_form");
            } else {
                j.field("lower_bound", lower).field("upper_bound", upper);
            }
            j.field("stabilizer", stab_str(stab));
        } else if (method == "closed") {
            check(rc);
        }
    }

    std::optional<double> numeric;
    if (want_numeric && st.has_edges() && method == "numeric")
        die(kExitDomain, "numeric symmetric optimization requires the complete form");
    if (want_numeric && !st.has_edges()) {
        auto hg = st.make();
        auto s = build_symmetric(hg);
        double value = 0.0, theta = 0.0, phi = 0.0;
        check(hs_geomeasure_numeric(s.get(), 1, &value, &theta, &phi));
        numeric = value;
        j.field("value_numeric", value)
            .field("theta", theta)
            .field("phi", phi)
            .field("method_numeric", "numeric_opt");
    }

    std::optional<double> oracle;
    if (want_oracle && st.n <= dense_cap()) {
        auto hg = st.make();
        auto d = build_dense_state(hg);
        double e_g = 0.0, ov = 0.0;
        check(hs_dense_product_optimize(d.get(), restarts, 0, seed, &e_g, &ov, nullptr, nullptr));
        oracle = e_g;
        j.field("value_oracle", e_g).field("method_oracle", "oracle");
    } else if (method == "oracle") {
        die(kExitDomain, "oracle path requires n <= dense cap");
    }

    double worst = 0.0;
    if (closed_exact && numeric) {
        const double r = std::abs(*closed_exact - *numeric);
        j.field("residual_closed_numeric", r);
        if (r > closed_numeric_tol) worst = std::max(worst, r);
    }
    if (closed_lower && numeric && !closed_exact) {
        const double breach =
            std::max(*closed_lower - *numeric, *numeric - *closed_upper);
        j.field("bound_breach", std::max(breach, 0.0));
        if (breach > 1e-9) worst = std::max(worst, breach);
    }
    if (numeric && oracle) {
        const double r = std::abs(*numeric - *oracle);
        j.field("residual_numeric_oracle", r);
        if (r > oracle_tol) worst = std::max(worst, r);
    }
    j.field("restarts", restarts)
        .field("seed", long(seed))
        .field("version", hs_version())
        .field("wall_time_ms", now_ms() - t0);
    em.emit(j.str());
    if (worst > 0.0)
        die(kExitCrossCheck, "geomeasure routes disagree by " + JsonOut::num(worst));
    return 0;
}

// ------------------------------------------------------------- single-edge

int cmd_single_edge(int n, int restarts, uint64_t seed, const Emitter& em, long t0) {
    double cross = 0.0;
    double value = 0.0, theta = 0.0;
    check(hs_single_edge_geomeasure(n, &value, &theta));
    JsonOut j;
    j.field("command", "single-edge")
        .field("n", n)
        .field("value", value)
        .field("theta", theta)
        .field("method", "numeric_opt");
    if (n <= dense_cap() && n <= 16) {
        std::vector<int> edge(n);
        for (int q = 0; q < n; ++q) edge[q] = q;
        std::vector<int> sizes{n};
        hs_hypergraph* hg = nullptr;
        check(hs_hypergraph_create_edges(n, edge.data(), sizes.data(), 1, &hg));
        HgPtr hgp(hg, hs_hypergraph_free);
        auto d = build_dense_state(hgp);
        double e_g = 0.0;
        check(hs_dense_product_optimize(d.get(), restarts, 0, seed, &e_g, nullptr, nullptr,
                                        nullptr));
        const double r = std::abs(e_g - value);
        j.field("value_oracle", e_g).field("residual", r);
        cross = r;
    }
    j.field("restarts", restarts)
        .field("seed", long(seed))
        .field("version", hs_version())
        .field("wall_time_ms", now_ms() - t0);
    em.emit(j.str());
    if (cross > 1e-8)
        die(kExitCrossCheck, "single-edge routes disagree by " + JsonOut::num(cross));
    return 0;
}

// ------------------------------------------------------------------ mermin

int cmd_mermin(const StateArgs& st, const std::string& pauli_arg, const std::string& method,
               double tol, const Emitter& em, long t0) {
    const int pauli = parse_pauli(pauli_arg);
    auto hg = st.make();
    hs_bell_report report{};
    int hyp = 0;
    double dres = 0.0;
    check(hs_mermin_value(hg.get(), pauli, &report, &hyp, &dres));
    JsonOut j;
    j.field("command", "mermin")
        .field("n", st.n)
        .field("k", st.echo_k())
        .field("pauli", pauli_arg)
        .field("quantum_value", report.quantum_value)
        .field("classical_bound", report.classical_bound)
        .field("separability_bound", report.separability_bound)
        .field("ratio_log2", report.ratio_log2)
        .field("imag_residue", report.imag_residue)
        .field("hypothesis_ok", hyp != 0)
        .field("decomposition_residual", dres)
        .field("method", "contraction");
    double cross = -1.0, lim = 0.0;
    const bool oracle_feasible = st.n <= dense_cap();
    if (method == "all" && oracle_feasible) {
        auto d = build_dense_state(hg);
        double imres = 0.0;
        const double oracle = mermin_oracle_dense(d, pauli, &imres);
        cross = std::abs(report.signed_value - oracle);
        j.field("value_oracle", std::abs(oracle)).field("residual_oracle", cross);
        lim = (tol > 0 ? tol : 1e-9) * std::max(1.0, report.quantum_value);
    }
    j.field("version", hs_version()).field("wall_time_ms", now_ms() - t0);
    em.emit(j.str());
    if (method == "all" && oracle_feasible && cross > lim)
        die(kExitCrossCheck, "mermin routes disagree by " + JsonOut::num(cross));
    return 0;
}

// -------------------------------------------------------------- robustness

int cmd_robustness(int n, int lost, const std::string& variant, const Emitter& em, long t0) {
    int v = 0;
    if (variant == "auto") v = 0;
    else if (variant == "m0") v = 1;
    else if (variant == "m1") v = 2;
    else die(kExitDomain, "variant must be auto, m0 or m1");
    hs_bell_report report{};
    int row = 0, used = 0;
    check(hs_robustness(n, lost, v, &report, &row, &used));
    JsonOut j;
    j.field("command", "robustness")
        .field("n", n)
        .field("lost", lost)
        .field("quantum_value", report.quantum_value)
        .field("signed_value", report.signed_value)
        .field("separability_bound", report.separability_bound)
        .field("ratio_log2", report.ratio_log2)
        .field("table_row", row)
        .field("variant", used == 0 ? "m0" : "m1")
        .field("closed_form_residual", report.cross_residual)
        .field("method", row >= 0 ? "decomposition" : "contraction")
        .field("version", hs_version())
        .field("wall_time_ms", now_ms() - t0);
    em.emit(j.str());
    return 0;
}

// ---------------------------------------------------------------- families

int cmd_families(const std::vector<int>& k, const Emitter& em, long t0) {
    int residue = 0, modulus = 0, stab = 0, r = 0;
    check(hs_table1_family(k.data(), int(k.size()), &residue, &modulus, &stab, &r));
    JsonOut j;
    std::ostringstream ke;
    for (size_t i = 0; i < k.size(); ++i) ke << (i ? "," : "") << k[i];
    j.field("command", "families")
        .field("k", ke.str())
        .field("residue", residue)
        .field("modulus", modulus)
        .field("stabilizer", stab_str(stab))
        .field("r", r);
    // consistency of the prediction for the emitted instances
    std::vector<int> checked;
    int kmax = 0;
    for (int v : k) kmax = std::max(kmax, v);
    double worst = 0.0;
    for (int n = residue == 0 ? modulus : residue; n <= 16; n += modulus) {
        if (n < kmax) continue;
        hs_hypergraph* hg = nullptr;
        check(hs_hypergraph_create_complete(n, k.data(), int(k.size()), &hg));
        HgPtr hgp(hg, hs_hypergraph_free);
        int got = 0;
        check(hs_classify(hgp.get(), &got));
        if (got != stab) worst = 1.0;
        checked.push_back(n);
    }
    j.field_int_array("checked_n", checked);
    j.field("consistent", worst == 0.0)
        .field("method", "closed_form")
        .field("version", hs_version())
        .field("wall_time_ms", now_ms() - t0);
    em.emit(j.str());
    if (worst > 0.0) die(kExitCrossCheck, "family prediction disagrees with classification");
    return 0;
}

// ------------------------------------------------------------------ verify

int cmd_verify(const StateArgs& st, int restarts, uint64_t seed, const Emitter& em, long t0) {
    if (st.has_edges()) die(kExitDomain, "verify requires the complete (cardinality) form");
    auto hg = st.make();
    JsonOut j;
    j.field("command", "verify").field("n", st.n).field("k", st.echo_k());
    double worst = 0.0;
    auto record = [&](const std::string& name, double residual, double tol) {
        j.field(name, residual);
        if (residual > tol) worst = std::max(worst, residual);
    };

    int stab = 0;
    check(hs_classify(hg.get(), &stab));
    j.field("stabilizer", stab_str(stab));
    auto s = build_symmetric(hg);

    const bool dense_ok = st.n <= dense_cap() && st.n <= 14;
    DensePtr d(nullptr, hs_dense_state_free);
    if (dense_ok) {
        d = build_dense_state(hg);
        // construction: symmetric vs gate-by-gate
        hs_dense_state* sd = nullptr;
        check(hs_symmetric_to_dense(s.get(), dense_cap(), &sd));
        DensePtr sdp(sd, hs_dense_state_free);
        double ore = 0.0, oim = 0.0;
        check(hs_dense_overlap(d.get(), sdp.get(), &ore, &oim));
        record("residual_build", std::abs(std::complex<double>(ore, oim) - 1.0), 1e-12);
        // classification vs the eigenvalue test
        std::string expect;
        switch (stab) {
            case HS_STAB_PLUS_X: expect = "+X"; break;
            case HS_STAB_MINUS_X: expect = "-X"; break;
            case HS_STAB_PLUS_Y: expect = "+Y"; break;
            default: expect = "none";
        }
        std::string oracle_stab = "none";
        for (int pauli : {HS_PAULI_X, HS_PAULI_Y}) {
            std::string letters(st.n, pauli == HS_PAULI_X ? 'X' : 'Y');
            double re = 0.0, im = 0.0;
            check(hs_dense_pauli_expectation(d.get(), letters.c_str(), &re, &im));
            for (int sign : {+1, -1})
                if (std::abs(re - sign) + std::abs(im) < 1e-10)
                    oracle_stab = (sign > 0 ? "+" : "-") + std::string(1, letters[0]);
        }
        j.field("stabilizer_oracle", oracle_stab);
        record("residual_classify", oracle_stab == expect ? 0.0 : 1.0, 0.5);
    }

    if (stab != HS_STAB_NONE) {
        const int pauli = (stab == HS_STAB_PLUS_Y) ? HS_PAULI_Y : HS_PAULI_X;
        auto t = apply_power(s, sqrt_pauli_op(pauli, +1));
        std::vector<double> tre(st.n + 1), tim(st.n + 1);
        check(hs_symmetric_amplitudes(t.get(), tre.data(), tim.data()));
        double res = 0.0;
        for (int w = 0; w <= st.n; ++w) {
            double cre = 0.0, cim = 0.0;
            check(hs_coeff_closed_form(st.n, st.k.data(), int(st.k.size()), stab, w, &cre, &cim));
            res = std::max(res, std::hypot(tre[w] - cre, tim[w] - cim));
        }
        record("residual_closed_contraction", res, 1e-10);
        if (dense_ok) {
            const Op2 op = sqrt_pauli_op(pauli, +1);
            std::vector<double> ops_re, ops_im;
            std::vector<int> sites;
            for (int q = 0; q < st.n; ++q) {
                ops_re.insert(ops_re.end(), op.re, op.re + 4);
                ops_im.insert(ops_im.end(), op.im, op.im + 4);
                sites.push_back(q);
            }
            hs_dense_state* td = nullptr;
            check(hs_dense_apply_local(d.get(), ops_re.data(), ops_im.data(), sites.data(), st.n,
                                       &td));
            DensePtr tdp(td, hs_dense_state_free);
            hs_dense_state* ts = nullptr;
            check(hs_symmetric_to_dense(t.get(), dense_cap(), &ts));
            DensePtr tsp(ts, hs_dense_state_free);
            double ore = 0.0, oim = 0.0;
            check(hs_dense_overlap(tdp.get(), tsp.get(), &ore, &oim));
            record("residual_transform_oracle", std::abs(std::complex<double>(ore, oim) - 1.0),
                   1e-11);
        }
        if (st.n % 2 == 0) {
            int sign = 0;
            char basis = 0;
            double dres = 0.0;
            int rc = hs_ghz_odd_decompose(t.get(), 1e-10, &sign, &basis, &dres, nullptr, nullptr,
                                          nullptr, nullptr);
            if (rc == HS_ERR_NOT_GHZ_ODD_FORM) {
                auto t2 = apply_power(t, sqrt_pauli_op(HS_PAULI_Z, +1));
                rc = hs_ghz_odd_decompose(t2.get(), 1e-10, &sign, &basis, &dres, nullptr, nullptr,
                                          nullptr, nullptr);
            }
            j.field("decomposition_residual", dres);
            j.field("decomposition_ok", rc == HS_OK);
        }
    }

    // closed-form geometric measure, when the family is covered
    {
        int exact = 0, cstab = 0;
        double lower = 0.0, upper = 0.0;
        const int rc = hs_geomeasure_closed(st.n, st.k.data(), int(st.k.size()), &exact, &lower,
                                            &upper, &cstab);
        if (rc == HS_OK) {
            double value = 0.0, th = 0.0, ph = 0.0;
            check(hs_geomeasure_numeric(s.get(), 1, &value, &th, &ph));
            j.field("e_g_numeric", value);
            if (exact) {
                j.field("e_g_closed", lower);
                record("residual_geomeasure", std::abs(value - lower), 1e-9);
            } else {
                j.field("e_g_lower", lower).field("e_g_upper", upper);
                record("bound_breach", std::max({lower - value, value - upper, 0.0}), 1e-9);
            }
            if (dense_ok) {
                double e_g = 0.0;
                check(hs_dense_product_optimize(d.get(), restarts, 0, seed, &e_g, nullptr, nullptr,
                                                nullptr));
                record("residual_geomeasure_oracle", std::abs(value - e_g), 1e-7);
            }
        }
    }

    // Mermin contraction vs dense route
    if (stab == HS_STAB_PLUS_X || stab == HS_STAB_PLUS_Y) {
        const int pauli = (stab == HS_STAB_PLUS_Y) ? HS_PAULI_Y : HS_PAULI_X;
        hs_bell_report report{};
        int hyp = 0;
        double dres = 0.0;
        check(hs_mermin_value(hg.get(), pauli, &report, &hyp, &dres));
        j.field("mermin_quantum_value", report.quantum_value).field("mermin_hypothesis", hyp != 0);
        if (dense_ok) {
            double imres = 0.0;
            const double oracle = mermin_oracle_dense(d, pauli, &imres);
            record("residual_mermin_oracle", std::abs(report.signed_value - oracle),
                   1e-9 * std::max(1.0, report.quantum_value));
        }
    }

    j.field("restarts", restarts)
        .field("seed", long(seed))
        .field("ok", worst == 0.0)
        .field("version", hs_version())
        .field("wall_time_ms", now_ms() - t0);
    em.emit(j.str());
    if (worst > 0.0)
        die(kExitCrossCheck, "verification failed, worst residual " + JsonOut::num(worst));
    return 0;
}

// ------------------------------------------------------------------- sweep

struct CsvRow {
    std::vector<std::string> cells;
};

std::string csv_render(const std::vector<std::string>& header, std::vector<CsvRow> rows) {
    std::ostringstream os;
    for (size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
    os << "\n";
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.cells.size(); ++i) os << (i ? "," : "") << row.cells[i];
        os << "\n";
    }
    return os.str();
}

int cmd_sweep(const std::string& fig, int nmax, int restarts, uint64_t seed, const Emitter& em) {
    std::vector<std::string> header;
    std::vector<CsvRow> rows;

    if (fig == "fig2") {
        const int hi = nmax > 0 ? nmax : 10;
        header = {"n", "e_g", "method", "residual"};
        for (int n = 3; n <= hi; ++n) {
            double value = 0.0, theta = 0.0;
            check(hs_single_edge_geomeasure(n, &value, &theta));
            double residual = std::nan("");
            if (n <= 12) {
                std::vector<int> edge(n);
                for (int q = 0; q < n; ++q) edge[q] = q;
                std::vector<int> sizes{n};
                hs_hypergraph* hg = nullptr;
                check(hs_hypergraph_create_edges(n, edge.data(), sizes.data(), 1, &hg));
                HgPtr hgp(hg, hs_hypergraph_free);
                auto d = build_dense_state(hgp);
                double e_g = 0.0;
                check(hs_dense_product_optimize(d.get(), restarts, 0, seed + n, &e_g, nullptr,
                                                nullptr, nullptr));
                residual = std::abs(e_g - value);
            }
            rows.push_back({{std::to_string(n), JsonOut::num(value), "numeric_opt",
                             std::isnan(residual) ? "" : JsonOut::num(residual)}});
        }
    } else if (fig == "fig3") {
        const int hi = nmax > 0 ? nmax : 48;
        header = {"r", "n", "log2_qv", "quantum_value", "correction", "rel_correction",
                  "method", "residual"};
        for (int r = 3; r <= 5; ++r) {
            const int period = 1 << r;
            const int kcard = (1 << (r - 1)) + 1;
            for (int n = period / 2; n <= hi; n += period) {
                if (n < kcard) continue;
                double corr = 0.0;
                check(hs_mermin_odd_correction(r, n, &corr));
                const double qv = std::pow(2.0, n - 2) + corr;
                double residual = std::nan("");
                std::string method = "closed_form";
                if (n <= 48) {
                    hs_hypergraph* hg = nullptr;
                    const int card = kcard;
                    check(hs_hypergraph_create_complete(n, &card, 1, &hg));
                    HgPtr hgp(hg, hs_hypergraph_free);
                    hs_bell_report report{};
                    int hyp = 0;
                    double dres = 0.0;
                    check(hs_mermin_value(hgp.get(), HS_PAULI_Y, &report, &hyp, &dres));
                    residual = std::abs(report.quantum_value - qv) / qv;
                    method = "contraction";
                }
                rows.push_back({{std::to_string(r), std::to_string(n),
                                 JsonOut::num(std::log2(qv)), JsonOut::num(qv),
                                 JsonOut::num(corr), JsonOut::num(-corr / std::pow(2.0, n - 2)),
                                 method,
                                 std::isnan(residual) ? "" : JsonOut::num(residual)}});
            }
        }
    } else if (fig == "figGEM" || fig == "figgem") {
        const int hi = nmax > 0 ? nmax : 32;
        header = {"panel", "family", "stabilizer", "n", "e_g", "three_quarters_minus",
                  "method", "residual", "label"};
        struct Point {
            std::string panel, family, stab;
            int n;
            int kcard;     // 0 means closed-form X family value
            bool closed;
            bool conjecture;
        };
        std::vector<Point> points;
        for (int n = 4; n <= hi; n += 4) points.push_back({"A", "3-uniform", "+Y", n, 3, false, false});
        for (int n = 8; n <= hi; n += 8) points.push_back({"A", "5-uniform", "+Y", n, 5, false, false});
        for (int n = 16; n <= hi; n += 16) {
            points.push_back({"A", "9-uniform", "+Y", n, 9, false, false});
            points.push_back({"A", "9-uniform", "+Y", n, 9, false, true});
        }
        for (int n = 6; n <= hi; n += 4) points.push_back({"B", "3-uniform", "+X", n, 3, true, false});
        for (int n = 12; n <= hi; n += 8) points.push_back({"B", "5-uniform", "+X", n, 5, true, false});
        for (int n = 4; n <= hi; n += 4) points.push_back({"B", "3-uniform", "+Y", n, 3, false, false});
        for (int n = 8; n <= hi; n += 8) points.push_back({"B", "5-uniform", "+Y", n, 5, false, false});

        auto eval = [&](const Point& p) -> CsvRow {
            double value = 0.0;
            double residual = std::nan("");
            std::string method, label = "";
            if (p.conjecture) {
                double lambda = 0.0, bound = 0.0;
                check(hs_conjecture_lambda(4, p.n, 0, &lambda, &bound));
                value = bound;
                method = "closed_form";
                label = "CONJECTURE";
            } else if (p.closed) {
                int exact = 0, stab = 0;
                double lower = 0.0, upper = 0.0;
                check(hs_geomeasure_closed(p.n, &p.kcard, 1, &exact, &lower, &upper, &stab));
                value = lower;
                method = "closed_form";
                if (p.n <= 20) {
                    hs_hypergraph* hg = nullptr;
                    check(hs_hypergraph_create_complete(p.n, &p.kcard, 1, &hg));
                    HgPtr hgp(hg, hs_hypergraph_free);
                    auto s = build_symmetric(hgp);
                    double numeric = 0.0, th = 0.0, ph = 0.0;
                    check(hs_geomeasure_numeric(s.get(), 1, &numeric, &th, &ph));
                    residual = std::abs(numeric - value);
                }
            } else {
                hs_hypergraph* hg = nullptr;
                check(hs_hypergraph_create_complete(p.n, &p.kcard, 1, &hg));
                HgPtr hgp(hg, hs_hypergraph_free);
                auto s = build_symmetric(hgp);
                double th = 0.0, ph = 0.0;
                check(hs_geomeasure_numeric(s.get(), 1, &value, &th, &ph));
                method = "numeric_opt";
            }
            return CsvRow{{p.panel, p.family, p.stab, std::to_string(p.n), JsonOut::num(value),
                           JsonOut::num(0.75 - value), method,
                           std::isnan(residual) ? "" : JsonOut::num(residual), label}};
        };
        std::vector<std::future<CsvRow>> futures;
        futures.reserve(points.size());
        for (const auto& p : points)
            futures.push_back(std::async(std::launch::async, eval, p));
        for (auto& f : futures) rows.push_back(f.get());
    } else {
        die(kExitDomain, "unknown figure '" + fig + "' (expected fig2, fig3 or figGEM)");
    }
    em.emit(csv_render(header, std::move(rows)));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"entanglement and Bell nonlocality of symmetric hypergraph states"};
    app.require_subcommand(1);

    StateArgs st;
    std::string method = "all", pauli = "auto", variant = "auto", fig, out_path;
    int branch = +1, lost = 1, restarts = 32, nmax = 0;
    std::uint64_t seed = 20250809;
    double tol = -1.0;

    auto add_state_flags = [&](CLI::App* cmd, bool edges_allowed) {
        cmd->add_option("--n", st.n, "number of qubits")->required();
        cmd->add_option("--k", st.k, "cardinality vector (comma separated)")->delimiter(',');
        if (edges_allowed)
            cmd->add_option("--edges", st.edges, "explicit hyperedges as JSON, e.g. [[0,1,2]]");
    };
    auto add_out = [&](CLI::App* cmd) {
        cmd->add_option("--out", out_path, "write output to FILE instead of stdout");
    };
    auto add_tol = [&](CLI::App* cmd) {
        cmd->add_option("--tol", tol, "cross-check tolerance override");
    };

    auto* c_classify = app.add_subcommand("classify", "local Pauli stabilizer class");
    add_state_flags(c_classify, true);
    add_out(c_classify);

    auto* c_build = app.add_subcommand("build", "state amplitudes");
    add_state_flags(c_build, true);
    c_build->add_option("--method", method, "symmetric|oracle|all");
    add_out(c_build);

    auto* c_transform = app.add_subcommand("transform", "sqrt-Pauli tensor-power transform");
    add_state_flags(c_transform, false);
    c_transform->add_option("--pauli", pauli, "auto|x|y|z");
    c_transform->add_option("--branch", branch, "+1 or -1 eigenvalue branch");
    add_tol(c_transform);
    add_out(c_transform);

    auto* c_decompose = app.add_subcommand("decompose", "GHZ + odd-weight decomposition");
    add_state_flags(c_decompose, false);
    add_tol(c_decompose);
    add_out(c_decompose);

    auto* c_geo = app.add_subcommand("geomeasure", "geometric measure of entanglement");
    add_state_flags(c_geo, true);
    c_geo->add_option("--method", method, "closed|numeric|oracle|all");
    c_geo->add_option("--restarts", restarts, "oracle optimizer restarts");
    c_geo->add_option("--seed", seed, "oracle optimizer seed");
    add_tol(c_geo);
    add_out(c_geo);

    auto* c_edge = app.add_subcommand("single-edge", "E_G of the single full-size hyperedge state");
    c_edge->add_option("--n", st.n, "number of qubits")->required();
    c_edge->add_option("--restarts", restarts, "oracle optimizer restarts");
    c_edge->add_option("--seed", seed, "oracle optimizer seed");
    add_out(c_edge);

    auto* c_mermin = app.add_subcommand("mermin", "Mermin operator quantum value");
    add_state_flags(c_mermin, false);
    c_mermin->add_option("--pauli", pauli, "x|y")->required();
    c_mermin->add_option("--method", method, "contraction|all (all adds the dense route)");
    add_tol(c_mermin);
    add_out(c_mermin);

    auto* c_robust = app.add_subcommand("robustness", "separability violation after particle loss");
    c_robust->add_option("--n", st.n, "number of qubits")->required();
    c_robust->add_option("--lost", lost, "number of lost qubits")->required();
    c_robust->add_option("--variant", variant, "auto|m0|m1");
    add_out(c_robust);

    auto* c_families = app.add_subcommand("families", "Table-1 family descriptor");
    c_families->add_option("--k", st.k, "cardinality vector")->delimiter(',')->required();
    add_out(c_families);

    auto* c_verify = app.add_subcommand("verify", "dual-path verification battery");
    add_state_flags(c_verify, false);
    c_verify->add_option("--restarts", restarts, "oracle optimizer restarts");
    c_verify->add_option("--seed", seed, "oracle optimizer seed");
    add_out(c_verify);

    auto* c_sweep = app.add_subcommand("sweep", "figure reproduction sweeps (CSV)");
    c_sweep->add_option("--fig", fig, "fig2|fig3|figGEM")->required();
    c_sweep->add_option("--nmax", nmax, "largest n");
    c_sweep->add_option("--restarts", restarts, "oracle optimizer restarts");
    c_sweep->add_option("--seed", seed, "oracle optimizer seed");
    add_out(c_sweep);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitDomain;
    }

    const long t0 = now_ms();
    Emitter em{out_path};
    try {
        if (c_classify->parsed()) return cmd_classify(st, em, t0);
        if (c_build->parsed()) return cmd_build(st, method, em, t0);
        if (c_transform->parsed()) {
            const double t = tol > 0 ? tol : 1e-10;
            return cmd_transform(st, pauli, branch, t, em, t0);
        }
        if (c_decompose->parsed()) return cmd_decompose(st, tol > 0 ? tol : 1e-10, em, t0);
        if (c_geo->parsed()) return cmd_geomeasure(st, method, restarts, seed, tol, em, t0);
        if (c_edge->parsed()) return cmd_single_edge(st.n, restarts, seed, em, t0);
        if (c_mermin->parsed()) return cmd_mermin(st, pauli, method, tol, em, t0);
        if (c_robust->parsed()) return cmd_robustness(st.n, lost, variant, em, t0);
        if (c_families->parsed()) return cmd_families(st.k, em, t0);
        if (c_verify->parsed()) return cmd_verify(st, restarts, seed, em, t0);
        if (c_sweep->parsed()) return cmd_sweep(fig, nmax, restarts, seed, em);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitDomain;
}
