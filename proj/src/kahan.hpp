#ifndef HYPERSTATE_KAHAN_HPP
#define HYPERSTATE_KAHAN_HPP

#include <complex>

namespace hyperstate {

// Compensated (Kahan) summation for real and complex accumulators.
struct KahanSum {
    double sum = 0.0;
    double comp = 0.0;
    void add(double x) {
        const double y = x - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

struct KahanSumC {
    KahanSum re, im;
    void add(std::complex<double> x) {
        re.add(x.real());
        im.add(x.imag());
    }
    std::complex<double> value() const { return {re.sum, im.sum}; }
};

} // namespace hyperstate

#endif
