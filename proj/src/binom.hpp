#ifndef HYPERSTATE_BINOM_HPP
#define HYPERSTATE_BINOM_HPP

#include <span>

#include <boost/multiprecision/cpp_int.hpp>

namespace hyperstate {

using BigInt = boost::multiprecision::cpp_int;

// C(n, k) as an exact integer. Zero for k < 0 or k > n.
BigInt binomial(long n, long k);

// Parity of C(n, k). Exact for any n, k.
int binomial_parity(long n, long k);

// C(n, k) converted to double at the last moment.
double binomial_d(long n, long k);

// Row n of Pascal's triangle as doubles (size n + 1), computed exactly and
// converted once; cached and safe to share across threads.
std::span<const double> binomial_row_d(int n);

} // namespace hyperstate

#endif
