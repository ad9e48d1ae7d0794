#include "primelab/arith.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace primelab {

uint64_t ExponentVector::reconstruct() const {
    uint64_t n = 1;
    for (const auto& [p, e] : entries)
        for (uint32_t i = 0; i < e; ++i) n *= p;
    return n;
}

uint64_t isqrt(uint64_t n) {
    if (n == 0) return 0;
    auto r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r > n / r) --r;
    while ((r + 1) <= n / (r + 1)) ++r;
    return r;
}

uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t m) {
    if (m == 1) return 0;
    uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

std::optional<FactorPair> comp_witness(uint64_t n) {
    if (n < 4) return std::nullopt;
    const uint64_t root = isqrt(n);
    for (uint64_t a = 2; a <= root; ++a)
        if (n % a == 0) return FactorPair{a, n / a, n};
    return std::nullopt;
}

bool is_prime_pi(uint64_t n) {
    if (n < 2) return false;
    const uint64_t root = isqrt(n);
    for (uint64_t a = 2; a <= root; ++a)
        if (n % a == 0) return false;
    return true;
}

Sieve::Sieve(uint64_t limit) : limit_(limit) {
    if (limit < 2) throw std::invalid_argument("sieve limit must be >= 2");
    if (limit > kMaxLimit) throw std::length_error("sieve limit exceeds supported capacity");
    table_.assign(limit + 1, true);
    table_[0] = table_[1] = false;
    for (uint64_t i = 2; i * i <= limit; ++i)
        if (table_[i])
            for (uint64_t j = i * i; j <= limit; j += i) table_[j] = false;
    for (uint64_t i = 2; i <= limit; ++i)
        if (table_[i]) primes_.push_back(i);
}

bool Sieve::is_prime(uint64_t n) const {
    if (n > limit_) throw std::out_of_range("sieve query beyond limit");
    return table_[n];
}

uint64_t Sieve::prime_count(uint64_t x) const {
    if (x > limit_) throw std::out_of_range("sieve query beyond limit");
    auto it = std::upper_bound(primes_.begin(), primes_.end(), x);
    return static_cast<uint64_t>(it - primes_.begin());
}

ExponentVector factorize(uint64_t n) {
    if (n < 2) throw std::invalid_argument("factorize requires n >= 2");
    ExponentVector out;
    for (uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        while (n % p == 0) {
            ++out.entries[p];
            n /= p;
        }
    }
    if (n > 1) ++out.entries[n];
    return out;
}

PrattCert pratt_generate(uint64_t p) {
    if (!is_prime_pi(p)) throw std::invalid_argument("pratt_generate requires a prime");
    PrattCert cert;
    cert.p = p;
    if (p == 2) {
        cert.generator = 1;  // 1^(2-1) = 1 mod 2; no factors of p-1 = 1
        return cert;
    }
    const ExponentVector phi = factorize(p - 1);
    for (const auto& [q, e] : phi.entries)
        cert.factor_certs.push_back({q, e, pratt_generate(q)});
    for (uint64_t g = 2; g < p; ++g) {
        if (pow_mod(g, p - 1, p) != 1) continue;  // cannot happen for prime p
        bool primitive = true;
        for (const auto& f : cert.factor_certs) {
            if (pow_mod(g, (p - 1) / f.prime, p) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            cert.generator = g;
            return cert;
        }
    }
    throw std::logic_error("no generator found");  // unreachable for prime p
}

bool pratt_verify(uint64_t p, const PrattCert& cert) {
    if (cert.p != p || p < 2) return false;
    if (cert.generator < 1 || cert.generator >= p) return false;
    // Listed factors with multiplicities must divide out p-1 completely.
    uint64_t m = p - 1;
    for (const auto& f : cert.factor_certs) {
        if (f.prime < 2 || f.exponent == 0) return false;
        for (uint32_t i = 0; i < f.exponent; ++i) {
            if (m % f.prime != 0) return false;
            m /= f.prime;
        }
        if (!pratt_verify(f.prime, f.cert)) return false;
    }
    if (m != 1) return false;
    // Distinct factor primes only; duplicates would double-count multiplicity.
    for (size_t i = 0; i < cert.factor_certs.size(); ++i)
        for (size_t j = i + 1; j < cert.factor_certs.size(); ++j)
            if (cert.factor_certs[i].prime == cert.factor_certs[j].prime) return false;
    if (pow_mod(cert.generator, p - 1, p) != 1) return false;
    for (const auto& f : cert.factor_certs)
        if (pow_mod(cert.generator, (p - 1) / f.prime, p) == 1) return false;
    return true;
}

std::string pratt_to_string(const PrattCert& cert) {
    std::string out = std::to_string(cert.p) + ":" + std::to_string(cert.generator);
    if (!cert.factor_certs.empty()) {
        out += '(';
        for (size_t i = 0; i < cert.factor_certs.size(); ++i) {
            const auto& f = cert.factor_certs[i];
            if (i > 0) out += ',';
            out += std::to_string(f.prime) + "^" + std::to_string(f.exponent) + "=" +
                   pratt_to_string(f.cert);
        }
        out += ')';
    }
    return out;
}

uint64_t pratt_size(const PrattCert& cert) { return pratt_to_string(cert).size(); }

}  // namespace primelab
