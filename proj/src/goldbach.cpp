#include "primelab/goldbach.hpp"

#include <stdexcept>

#include "primelab/parallel.hpp"

namespace primelab::goldbach {

ExtractResult extract(uint64_t n, const Sieve& sieve) {
    if (n < 4 || n % 2 != 0) throw std::invalid_argument("extract requires even n >= 4");
    if (n > sieve.limit()) throw std::out_of_range("sieve does not cover n");
    uint64_t tests = 0;
    for (uint64_t p : sieve.primes()) {
        if (p > n / 2) break;
        ++tests;
        if (sieve.is_prime(n - p)) {
            WitnessRecord rec;
            rec.n = n;
            rec.p = p;
            rec.q = n - p;
            rec.cert_p = pratt_generate(p);
            rec.cert_q = pratt_generate(rec.q);
            rec.search_steps = tests;
            rec.cert_size = pratt_size(rec.cert_p) + pratt_size(rec.cert_q);
            return rec;
        }
    }
    return CounterexampleReport{n, tests};
}

bool verify_witness(const WitnessRecord& rec) {
    if (rec.p <= 1 || rec.q <= 1 || rec.p + rec.q != rec.n) return false;
    return pratt_verify(rec.p, rec.cert_p) && pratt_verify(rec.q, rec.cert_q);
}

bool wgc_equivalence_check(uint64_t N, const Sieve& sieve) {
    if (N < 4) throw std::invalid_argument("equivalence check requires N >= 4");
    for (uint64_t n = 4; n <= N; n += 2) {
        bool bare = false;
        for (uint64_t p : sieve.primes()) {
            if (p > n / 2) break;
            if (sieve.is_prime(n - p)) {
                bare = true;
                break;
            }
        }
        const ExtractResult res = extract(n, sieve);
        const auto* witness = std::get_if<WitnessRecord>(&res);
        const bool certified = witness != nullptr && verify_witness(*witness);
        if (bare != certified) return false;
    }
    return true;
}

namespace {

struct ProbeRow {
    ScanRow row;
    bool failed = false;
};

ScanStats run_range(uint64_t N, const Sieve& sieve, unsigned jobs, const RowSink& sink) {
    if (N < 4) throw std::invalid_argument("scan requires N >= 4");
    const uint64_t count = N / 2 - 1;  // evens 4..N
    std::vector<ProbeRow> rows = parallel_map<ProbeRow>(0, count, jobs, [&](uint64_t i) {
        const uint64_t n = 4 + 2 * i;
        ProbeRow out;
        const ExtractResult res = extract(n, sieve);
        if (const auto* w = std::get_if<WitnessRecord>(&res); w && verify_witness(*w)) {
            out.row = ScanRow{w->n, w->p, w->q, w->search_steps, w->cert_size};
        } else {
            out.row.n = n;
            out.failed = true;
        }
        return out;
    });
    ScanStats stats;
    for (const ProbeRow& pr : rows) {
        if (pr.failed) {
            stats.failures.push_back(pr.row.n);
            continue;
        }
        const ScanRow& r = pr.row;
        ++stats.histogram[r.p];
        if (r.p > stats.max_minimal_p) {
            stats.max_minimal_p = r.p;
            stats.argmax_n = r.n;
        }
        if (r.search_steps > stats.max_search_steps) {
            stats.max_search_steps = r.search_steps;
            stats.argmax_search_steps_n = r.n;
        }
        if (r.cert_size > stats.max_cert_size) {
            stats.max_cert_size = r.cert_size;
            stats.argmax_cert_size_n = r.n;
        }
        if (sink) sink(r);
    }
    return stats;
}

}  // namespace

ScanStats scan(uint64_t N, const Sieve& sieve, unsigned jobs, const RowSink& sink) {
    return run_range(N, sieve, jobs, sink);
}

ScanStats uniformity_probe(uint64_t N, const Sieve& sieve, unsigned jobs, const RowSink& sink) {
    return run_range(N, sieve, jobs, sink);
}

}  // namespace primelab::goldbach
