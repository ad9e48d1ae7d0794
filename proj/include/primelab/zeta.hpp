#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "primelab/arith.hpp"

namespace primelab::zeta {

// Multiplicative weight n^(-s), computed as exp(-s ln n); completely
// multiplicative up to rounding.
std::complex<double> mu_s(uint64_t n, std::complex<double> s);

// Partial sum of mu_s over 1..N in ascending order. Requires Re(s) > 1.
std::complex<double> zeta_partial(std::complex<double> s, uint64_t N);

// Product of (1 - p^-s)^-1 over primes p <= P in ascending order.
// Requires Re(s) > 1.
std::complex<double> euler_product_truncated(std::complex<double> s, uint64_t P,
                                             const Sieve& sieve);

// Sum of mu_s over P-smooth n <= N, ascending. Requires Re(s) > 1.
std::complex<double> smooth_sum(std::complex<double> s, uint64_t P, uint64_t N,
                                const Sieve& sieve);

// log p when n = p^k for prime p, else 0.
double von_mangoldt(uint64_t n);

struct LogDerivResult {
    double lhs = 0;    // sum over n <= N of Lambda(n) n^-s
    double rhs = 0;    // sum over p <= P of log p / (p^s - 1)
    double delta = 0;  // lhs - rhs
};

// The two routes to -zeta'(s)/zeta(s) at real s > 1.
LogDerivResult log_deriv_compare(double s, uint64_t N, uint64_t P, const Sieve& sieve);

// Functional-equation spot check at s = -1, where Gamma(2) = 1 is exact:
// 2^-1 pi^-2 sin(-pi/2) Gamma(2) zeta(2), with zeta(2) from
// zeta_partial(2, 1e6). Expected -1/12.
double reflection_check();

struct LfpResult {
    std::vector<uint64_t> members;  // ascending
    uint32_t passes = 0;            // closure passes that changed the set
};

// Least fixed point of the compositeness rule over [2..N]: n enters when
// some a,b > 1 satisfy a*b = n. The membership test does not consult the
// accumulating set (repaired reading of the recursion), so exactly one pass
// changes anything; the loop still iterates to stability.
LfpResult comp_lfp(uint64_t N);

}  // namespace primelab::zeta
