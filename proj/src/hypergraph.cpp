#include "hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "binom.hpp"

namespace hyperstate {

HypergraphSpec HypergraphSpec::complete(int n_qubits, std::vector<int> cardinalities) {
    if (n_qubits < 1) throw std::invalid_argument("n_qubits must be >= 1");
    std::sort(cardinalities.begin(), cardinalities.end());
    for (size_t i = 0; i < cardinalities.size(); ++i) {
        if (cardinalities[i] < 1)
            throw std::invalid_argument("cardinalities must be >= 1");
        if (cardinalities[i] > n_qubits)
            throw std::invalid_argument("cardinality " + std::to_string(cardinalities[i]) +
                                        " exceeds n_qubits = " + std::to_string(n_qubits));
        if (i > 0 && cardinalities[i] == cardinalities[i - 1])
            throw std::invalid_argument("cardinalities must be distinct");
    }
    HypergraphSpec s;
    s.n_qubits_ = n_qubits;
    s.complete_ = true;
    s.cardinalities_ = std::move(cardinalities);
    return s;
}

HypergraphSpec HypergraphSpec::from_edges(int n_qubits, const std::vector<std::vector<int>>& edges) {
    if (n_qubits < 1) throw std::invalid_argument("n_qubits must be >= 1");
    std::map<std::vector<int>, int> count;
    for (const auto& e : edges) {
        if (e.empty()) throw std::invalid_argument("hyperedges must be nonempty");
        std::vector<int> sorted = e;
        std::sort(sorted.begin(), sorted.end());
        for (size_t i = 0; i < sorted.size(); ++i) {
            if (sorted[i] < 0 || sorted[i] >= n_qubits)
                throw std::invalid_argument("edge vertex out of range");
            if (i > 0 && sorted[i] == sorted[i - 1])
                throw std::invalid_argument("edge vertices must be distinct");
        }
        count[sorted] ^= 1;
    }
    HypergraphSpec s;
    s.n_qubits_ = n_qubits;
    s.complete_ = false;
    for (const auto& [e, parity] : count)
        if (parity) s.edges_.push_back(e);
    return s;
}

const std::vector<int>& HypergraphSpec::cardinalities() const {
    if (!complete_) throw std::logic_error("spec is not in complete (cardinality-vector) form");
    return cardinalities_;
}

const std::vector<std::vector<int>>& HypergraphSpec::edges() const {
    if (complete_) throw std::logic_error("spec is not in explicit-edge form");
    return edges_;
}

std::vector<std::vector<int>> HypergraphSpec::expand_edges() const {
    if (!complete_) return edges_;
    std::vector<std::vector<int>> out;
    for (int k : cardinalities_) {
        // enumerate all k-subsets of {0, ..., n-1} in lexicographic order
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            out.push_back(idx);
            int i = k - 1;
            while (i >= 0 && idx[i] == n_qubits_ - k + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return out;
}

std::string HypergraphSpec::describe() const {
    std::ostringstream os;
    os << "n=" << n_qubits_;
    if (complete_) {
        os << " k=(";
        for (size_t i = 0; i < cardinalities_.size(); ++i)
            os << (i ? "," : "") << cardinalities_[i];
        os << ")";
    } else {
        os << " edges=" << edges_.size();
    }
    return os.str();
}

double SymmetricState::norm() const {
    double s = 0.0;
    for (int w = 0; w <= n_qubits; ++w)
        s += binomial_d(n_qubits, w) * std::norm(amp[w]);
    return std::sqrt(s);
}

double SymmetricState::norm_error() const {
    double s = 0.0;
    for (int w = 0; w <= n_qubits; ++w)
        s += binomial_d(n_qubits, w) * std::norm(amp[w]);
    return std::abs(s - 1.0);
}

const char* stabilizer_name(StabilizerClass s) {
    switch (s) {
        case StabilizerClass::PlusX: return "+X";
        case StabilizerClass::MinusX: return "-X";
        case StabilizerClass::PlusY: return "+Y";
        case StabilizerClass::None: return "none";
    }
    return "?";
}

int weight_sign(std::span<const int> cardinalities, long w) {
    if (w < 0) throw std::invalid_argument("weight must be >= 0");
    int f = 0;
    for (int k : cardinalities) {
        if (k < 1) throw std::invalid_argument("cardinalities must be >= 1");
        f ^= binomial_parity(w, k);
    }
    return f;
}

int weight_sign_period(std::span<const int> cardinalities) {
    int kmax = 1;
    for (int k : cardinalities) kmax = std::max(kmax, k);
    int p = 1;
    while (p <= kmax) p *= 2;
    return p;
}

SymmetricState build_symmetric(const HypergraphSpec& spec) {
    const auto& k = spec.cardinalities(); // throws for explicit-edge specs
    const int n = spec.n_qubits();
    SymmetricState s;
    s.n_qubits = n;
    s.amp.resize(n + 1);
    const double scale = std::pow(2.0, -0.5 * n);
    for (int w = 0; w <= n; ++w)
        s.amp[w] = weight_sign(k, w) ? -scale : scale;
    return s;
}

StabilizerClass classify_stabilizer(const HypergraphSpec& spec) {
    const auto& k = spec.cardinalities();
    const int n = spec.n_qubits();
    bool plus_x = true, minus_x = true, plus_y = (n % 2 == 0);
    for (int w = 0; w <= n; ++w) {
        const int fw = weight_sign(k, w);
        const int fnw = weight_sign(k, n - w);
        if (fw != fnw) plus_x = false;
        if (fw != (fnw ^ 1)) minus_x = false;
        if (plus_y && fw != ((fnw + w + n / 2) & 1)) plus_y = false;
    }
    if (plus_x) return StabilizerClass::PlusX;
    if (minus_x) return StabilizerClass::MinusX;
    if (plus_y) return StabilizerClass::PlusY;
    return StabilizerClass::None;
}

HypergraphSpec toggle_pairwise_edges(const HypergraphSpec& spec) {
    if (spec.n_qubits() % 2 != 0)
        throw std::invalid_argument("toggle_pairwise_edges requires an even number of qubits");
    std::vector<int> k = spec.cardinalities();
    auto it = std::find(k.begin(), k.end(), 2);
    if (it != k.end())
        k.erase(it);
    else
        k.push_back(2);
    return HypergraphSpec::complete(spec.n_qubits(), std::move(k));
}

} // namespace hyperstate
