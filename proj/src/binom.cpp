#include "binom.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace hyperstate {

BigInt binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i; // always divides exactly
    }
    return result;
}

int binomial_parity(long n, long k) {
    return static_cast<int>(binomial(n, k) & 1);
}

double binomial_d(long n, long k) {
    return binomial(n, k).convert_to<double>();
}

std::span<const double> binomial_row_d(int n) {
    static std::mutex mu;
    static std::map<int, std::vector<double>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) {
        std::vector<double> row(n + 1);
        BigInt v = 1;
        for (int k = 0; k <= n; ++k) {
            row[k] = v.convert_to<double>();
            if (k < n) {
                v *= n - k;
                v /= k + 1;
            }
        }
        it = cache.emplace(n, std::move(row)).first;
    }
    return it->second;
}

} // namespace hyperstate
