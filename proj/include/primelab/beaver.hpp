#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "primelab/arith.hpp"

namespace primelab::beaver {

// Pending subgoal: a cofactor still to be tested, paired with the divisor
// candidate it restarts from (always 2 here; the pair shape follows the
// transition system's stack entries).
struct Subgoal {
    uint64_t value = 0;
    uint64_t divisor_start = 2;

    bool operator==(const Subgoal&) const = default;
};

// <n, k, S> state of the divisor-search transition system plus the log of
// decompositions discovered so far.
struct BeaverConfig {
    uint64_t current = 0;
    uint64_t divisor = 2;
    std::vector<Subgoal> stack;  // back() is the top
    std::vector<FactorPair> factor_log;
    uint64_t steps = 0;

    bool operator==(const BeaverConfig&) const = default;
};

BeaverConfig beaver_init(uint64_t n);

// Terminal means the halt case applies: divisor^2 > current and empty stack.
bool beaver_terminal(const BeaverConfig& cfg);

// Applies exactly one of the four transition cases:
//   (i)   k^2 <= n and k does not divide n   ->  k := k+1
//   (ii)  1 < k < n and k | n                ->  log (k, n/k), push n/k,
//                                                current := k, k := 2
//   (iii) k^2 > n and stack nonempty         ->  pop into current, k := 2
//   (iv)  k^2 > n and stack empty            ->  halt (returns nullopt)
// Throws std::logic_error for configs no case covers (k < 2).
std::optional<BeaverConfig> beaver_step(const BeaverConfig& cfg);

struct BeaverTrace {
    std::vector<BeaverConfig> configs;
    bool terminal = false;
};

enum class Classification : uint8_t { prime, composite };

const char* classification_name(Classification c);

struct BeaverResult {
    Classification classification = Classification::prime;
    uint64_t steps = 0;  // transitions applied before the halt case fires
    std::vector<FactorPair> factor_log;
    BeaverTrace trace;  // empty when run without trace collection
};

enum class TraceMode : uint8_t { none, record };

// Runs from <n, 2, []> to the halt case. Classification is composite exactly
// when the factor log is nonempty. Throws std::invalid_argument for n < 2.
BeaverResult beaver_run(uint64_t n, TraceMode mode = TraceMode::record);

// True iff trace starts at beaver_init(n), every consecutive pair is one
// legal transition, and the final config is terminal with the flag set.
bool trace_verify(uint64_t n, const BeaverTrace& trace);

// Multiplies the factor log back together; the leaves of the decomposition
// tree rooted at n. Returns the reconstructed exponent vector.
ExponentVector log_reconstruct(uint64_t n, const std::vector<FactorPair>& log);

struct PbProfile {
    uint64_t max_steps = 0;
    uint64_t argmax_n = 0;
};

// Desk-scale proxy for the worst-case runtime function: max steps of
// beaver_run over inputs 2 <= n <= s (lowest n wins ties).
PbProfile pb_profile(uint64_t s);

struct PbProfileRow {
    uint64_t s = 0;
    uint64_t max_steps = 0;
    uint64_t argmax_n = 0;
};

// Rows for every 2 <= s <= S; monotone nondecreasing in s.
std::vector<PbProfileRow> pb_profile_table(uint64_t S);

}  // namespace primelab::beaver
