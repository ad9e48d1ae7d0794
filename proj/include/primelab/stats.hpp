#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "primelab/arith.hpp"

namespace primelab::stats {

struct PhiResult {
    double value = 0;
    uint32_t iterations = 0;
};

// Iterates x <- 1 + 1/x from x0 until successive iterates differ by less
// than tol; converges to the golden ratio from any positive start.
PhiResult phi_fixed_point(double x0, double tol);

// Floor-sqrt chain n, isqrt(n), ... stopping at the first value <= 2;
// k counts the steps taken.
struct DepthTrace {
    uint64_t start = 0;
    std::vector<uint64_t> chain;
    uint32_t k = 0;
};

DepthTrace depth(uint64_t n);

struct DepthRow {
    uint64_t n = 0;
    uint32_t k = 0;
    double log_phi_n = 0;
    double log2_log2_n = 0;
};

// Rows for n = 2^j <= N; reports both candidate growth laws side by side.
std::vector<DepthRow> depth_table(uint64_t N);

enum class QuantMode : uint8_t { sigma, pi };

// Bounded quantifier layer over a predicate table on [0..N]:
// sigma: out[x] = exists y <= x with pred[y]; pi: out[x] = forall y <= x.
std::vector<uint8_t> bounded_layer(const std::vector<uint8_t>& pred, QuantMode mode);

struct TilingCount {
    uint64_t total = 0;       // ordered pairs (a,b) with a*b = n, a,b >= 1
    uint64_t nontrivial = 0;  // ordered pairs with a,b >= 2
};

TilingCount tiling_count(uint64_t n);

struct EntropyRow {
    uint64_t n = 0;
    uint64_t w_total = 0;
    uint64_t w_nontrivial = 0;
    double s_total = 0;
    double s_nontrivial = 0;
    // Successive-difference ratios (S_{n+2}-S_{n+1})/(S_{n+1}-S_n); absent
    // when out of range or the denominator vanishes.
    std::optional<double> ratio_total;
    std::optional<double> ratio_nontrivial;
};

// Rows for 1 <= n <= N with S = k_B ln W under both tiling readings.
std::vector<EntropyRow> entropy_series(uint64_t N, double k_b);

struct RhoResult {
    double value = 0;   // pi(x) / (x - pi(x))
    double approx = 0;  // 1 / (ln x - 1)
    double ratio = 0;   // value / approx
};

RhoResult rho(const Sieve& sieve, uint64_t x);

struct RhoGradient {
    double empirical = 0;  // central difference over +-window
    double formula = 0;    // -1 / (x (ln x - 1)^2)
    uint64_t window = 0;
};

// window == 0 selects the documented default max(1, x/100).
RhoGradient rho_gradient(const Sieve& sieve, uint64_t x, uint64_t window = 0);

struct HarmonicResult {
    double h = 0;       // sum of 1/p over primes p <= x
    double loglog = 0;  // ln ln x
    double delta = 0;   // h - loglog
};

HarmonicResult harmonic_prime_sum(const Sieve& sieve, uint64_t x);

// k_B / ln p for prime p >= 3; throws std::invalid_argument otherwise.
double cost_of_knowledge(uint64_t p, double k_b);

}  // namespace primelab::stats
