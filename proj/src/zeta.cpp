#include "primelab/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace primelab::zeta {
namespace {

void require_convergent(std::complex<double> s) {
    if (!(s.real() > 1.0)) throw std::invalid_argument("requires Re(s) > 1");
}

}  // namespace

std::complex<double> mu_s(uint64_t n, std::complex<double> s) {
    if (n == 0) throw std::invalid_argument("mu_s requires n >= 1");
    if (n == 1) return {1.0, 0.0};
    return std::exp(-s * std::log(static_cast<double>(n)));
}

std::complex<double> zeta_partial(std::complex<double> s, uint64_t N) {
    require_convergent(s);
    if (N < 1) throw std::invalid_argument("zeta_partial requires N >= 1");
    std::complex<double> sum = 0.0;
    for (uint64_t n = 1; n <= N; ++n) sum += mu_s(n, s);
    return sum;
}

std::complex<double> euler_product_truncated(std::complex<double> s, uint64_t P,
                                             const Sieve& sieve) {
    require_convergent(s);
    std::complex<double> prod = 1.0;
    for (uint64_t p : sieve.primes()) {
        if (p > P) break;
        prod *= 1.0 / (1.0 - mu_s(p, s));
    }
    return prod;
}

std::complex<double> smooth_sum(std::complex<double> s, uint64_t P, uint64_t N,
                                const Sieve& sieve) {
    require_convergent(s);
    if (N < 1) throw std::invalid_argument("smooth_sum requires N >= 1");
    // Enumerate the P-smooth integers <= N, then sum ascending for a fixed
    // summation order.
    std::vector<uint64_t> smooth{1};
    for (uint64_t p : sieve.primes()) {
        if (p > P) break;
        const size_t existing = smooth.size();
        for (size_t i = 0; i < existing; ++i) {
            // N / p etc. guards overflow; smooth stays within [1, N].
            for (uint64_t v = smooth[i]; v <= N / p;) {
                v *= p;
                smooth.push_back(v);
                if (smooth.size() > 20'000'000)
                    throw std::length_error("smooth enumeration exceeds capacity");
            }
        }
    }
    std::sort(smooth.begin(), smooth.end());
    std::complex<double> sum = 0.0;
    for (uint64_t v : smooth) sum += mu_s(v, s);
    return sum;
}

double von_mangoldt(uint64_t n) {
    if (n < 2) return 0.0;
    uint64_t m = n;
    uint64_t base = 0;
    for (uint64_t p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
        if (m % p == 0) {
            base = p;
            while (m % p == 0) m /= p;
            break;
        }
    }
    if (base == 0) return std::log(static_cast<double>(n));  // n itself prime
    if (m != 1) return 0.0;  // second prime divides n
    return std::log(static_cast<double>(base));
}

LogDerivResult log_deriv_compare(double s, uint64_t N, uint64_t P, const Sieve& sieve) {
    if (!(s > 1.0)) throw std::invalid_argument("requires s > 1");
    LogDerivResult out;
    for (uint64_t n = 2; n <= N; ++n) {
        const double lam = von_mangoldt(n);
        if (lam != 0.0) out.lhs += lam * std::pow(static_cast<double>(n), -s);
    }
    for (uint64_t p : sieve.primes()) {
        if (p > P) break;
        out.rhs += std::log(static_cast<double>(p)) /
                   (std::pow(static_cast<double>(p), s) - 1.0);
    }
    out.delta = out.lhs - out.rhs;
    return out;
}

double reflection_check() {
    const double zeta2 = zeta_partial({2.0, 0.0}, 1'000'000).real();
    const double pi = std::numbers::pi;
    return 0.5 * std::pow(pi, -2.0) * std::sin(-pi / 2.0) * 1.0 * zeta2;
}

LfpResult comp_lfp(uint64_t N) {
    if (N < 2) throw std::invalid_argument("comp_lfp requires N >= 2");
    std::vector<bool> in_x(N + 1, false);
    LfpResult out;
    for (;;) {
        bool changed = false;
        for (uint64_t n = 2; n <= N; ++n) {
            if (in_x[n]) continue;
            bool enters = false;
            for (uint64_t a = 2; a * a <= n; ++a) {
                if (n % a == 0) {
                    enters = true;
                    break;
                }
            }
            if (enters) {
                in_x[n] = true;
                changed = true;
            }
        }
        if (!changed) break;
        ++out.passes;
    }
    for (uint64_t n = 2; n <= N; ++n)
        if (in_x[n]) out.members.push_back(n);
    return out;
}

}  // namespace primelab::zeta
