#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <variant>
#include <vector>

#include "primelab/arith.hpp"

namespace primelab::goldbach {

// A fully certified decomposition n = p + q with p the least prime whose
// complement is prime. search_steps counts the primality tests spent
// finding p; cert_size is the symbol count of both encoded certificates.
struct WitnessRecord {
    uint64_t n = 0;
    uint64_t p = 0;
    uint64_t q = 0;
    PrattCert cert_p;
    PrattCert cert_q;
    uint64_t search_steps = 0;
    uint64_t cert_size = 0;
};

// First-class report of a least counterexample (never observed in range).
struct CounterexampleReport {
    uint64_t n = 0;
    uint64_t search_steps = 0;
};

using ExtractResult = std::variant<WitnessRecord, CounterexampleReport>;

// Minimal-p witness for even n >= 4. The sieve must cover n. Throws
// std::invalid_argument for odd n or n < 4.
ExtractResult extract(uint64_t n, const Sieve& sieve);

// p + q = n, p,q > 1, and both certificates verify.
bool verify_witness(const WitnessRecord& rec);

// For every even n <= N: a bare two-prime decomposition exists exactly when
// a certificate-form witness exists.
bool wgc_equivalence_check(uint64_t N, const Sieve& sieve);

struct ScanRow {
    uint64_t n = 0;
    uint64_t p = 0;
    uint64_t q = 0;
    uint64_t search_steps = 0;
    uint64_t cert_size = 0;
};

struct ScanStats {
    uint64_t max_minimal_p = 0;
    uint64_t argmax_n = 0;  // lowest n attaining max_minimal_p
    std::vector<uint64_t> failures;
    std::map<uint64_t, uint64_t> histogram;  // minimal p -> count
    uint64_t max_search_steps = 0;
    uint64_t argmax_search_steps_n = 0;
    uint64_t max_cert_size = 0;
    uint64_t argmax_cert_size_n = 0;
};

using RowSink = std::function<void(const ScanRow&)>;

// Extracts and verifies a witness for every even 4 <= n <= N. Rows reach the
// sink in ascending n regardless of the job count. A failure is an even n
// with no witness or a witness that does not verify.
ScanStats scan(uint64_t N, const Sieve& sieve, unsigned jobs = 1, const RowSink& sink = {});

// Witness-cost growth table: same rows as scan, same stats; kept as its own
// entry point because the probe is about per-n cost, not coverage.
ScanStats uniformity_probe(uint64_t N, const Sieve& sieve, unsigned jobs = 1,
                           const RowSink& sink = {});

}  // namespace primelab::goldbach
