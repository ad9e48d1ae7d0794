#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace primelab {

// A nontrivial factorization a*b = n with a,b >= 2.
struct FactorPair {
    uint64_t a = 0;
    uint64_t b = 0;
    uint64_t n = 0;

    bool operator==(const FactorPair&) const = default;
};

// Prime factorization as a finitely supported map prime -> exponent (>= 1).
struct ExponentVector {
    std::map<uint64_t, uint32_t> entries;

    uint64_t reconstruct() const;
    bool operator==(const ExponentVector&) const = default;
};

// Recursive primality certificate: a generator g of (Z/pZ)* together with
// certificates for every prime factor of p-1. The recursion grounds at p = 2,
// whose factor list is empty (p-1 = 1).
struct PrattCert {
    struct Factor;

    uint64_t p = 0;
    uint64_t generator = 0;
    std::vector<Factor> factor_certs;

    bool operator==(const PrattCert&) const;
};

struct PrattCert::Factor {
    uint64_t prime = 0;
    uint32_t exponent = 0;
    PrattCert cert;

    bool operator==(const Factor&) const = default;
};

inline bool PrattCert::operator==(const PrattCert& other) const {
    return p == other.p && generator == other.generator && factor_certs == other.factor_certs;
}

// Canonical text encoding of a certificate, e.g. "7:3(2^1=2:1,3^1=3:2(2^1=2:1))".
// Used for size accounting and JSON export; the grammar is fixed in FORMAT.md.
std::string pratt_to_string(const PrattCert& cert);

// Symbol count of the canonical encoding.
uint64_t pratt_size(const PrattCert& cert);

// floor(sqrt(n)), exact.
uint64_t isqrt(uint64_t n);

// (a * b) mod m and (base ^ exp) mod m without 64-bit overflow.
uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m);
uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t m);

// Least nontrivial factor pair of n, smallest a >= 2 first; absent when n is
// prime or n <= 1 (0 and 1 have no pair with both sides >= 2).
std::optional<FactorPair> comp_witness(uint64_t n);

// Bounded-search primality: n > 1 and no a with 2 <= a <= floor(sqrt(n))
// divides n.
bool is_prime_pi(uint64_t n);

// Prime table up to a limit, with pi(x) queries and the ascending prime list.
// Construction is single-writer; afterwards the table is read-only and safe
// to share across threads.
class Sieve {
public:
    // Supported up to kMaxLimit (documented capacity; >= 1e7 required).
    static constexpr uint64_t kMaxLimit = 200'000'000;

    explicit Sieve(uint64_t limit);

    uint64_t limit() const { return limit_; }
    bool is_prime(uint64_t n) const;
    // pi(x) for x <= limit.
    uint64_t prime_count(uint64_t x) const;
    const std::vector<uint64_t>& primes() const { return primes_; }

private:
    uint64_t limit_;
    std::vector<bool> table_;
    std::vector<uint64_t> primes_;
};

// Prime factorization by trial division; throws std::invalid_argument for n < 2.
ExponentVector factorize(uint64_t n);

// Certificate for a prime p; throws std::invalid_argument when p is not prime.
PrattCert pratt_generate(uint64_t p);

// Total recursive check of all certificate invariants; malformed input yields
// false, never an exception.
bool pratt_verify(uint64_t p, const PrattCert& cert);

}  // namespace primelab
