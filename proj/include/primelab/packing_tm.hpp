#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace primelab::packing {

// Control states of the fixed three-tape packing machine. The transition
// table lives in packing_tm.cpp; see the rule list there for the full chart.
enum class State : uint8_t {
    init,         // q0: step off tape 2's left marker
    copy_a,       // write the 1^a prefix of the output tape from the A zone
    block_r0,     // at C, no completed row yet in this attempt
    consume_r0,   // consuming a block, 0 completed rows
    consume_r1,   // consuming a block, 1 completed row
    consume_r2,   // consuming a block, >= 2 completed rows
    rewind_r1,    // rewind working zone after 1st row
    rewind_r2,    // rewind working zone after 2nd+ row
    block_r1,     // at C, exactly 1 completed row
    block_r2,     // at C, >= 2 completed rows
    accept_scan,  // convert row marks B to 1s, right to left
    fail_rew1,    // failure: restore consumed marks on tape 1
    fail_del3a,   // failure: step onto the last output symbol
    fail_del3,    // failure: erase tape 3
    fail_rew2,    // failure: rewind working zone to C
    incr_a,       // increment: C -> A
    incr_c,       // increment: first working mark -> C
    incr_scan,    // increment: walk to $
    incr_grow,    // increment: extend working zone by one
    incr_dollar,  // increment: close with $
    rew_full,     // rewind tape 2 to the left marker
    accept,
    reject,
};

const char* state_name(State s);

// Full machine state. Tapes grow on demand; blank is '_'. Heads clamp at
// cell 0 when told to move left (such a non-move is not counted as a head
// move).
struct PackingTmConfig {
    std::string tape1;  // input marks: '1', consumed 'x', blank
    std::string tape2;  // divisor zone: L A^a C a^a $
    std::string tape3;  // output: 1^a # B^k during a run, 1^a # 1^b at accept
    size_t head1 = 0;
    size_t head2 = 0;
    size_t head3 = 0;
    State state = State::init;
    uint64_t steps = 0;
    uint64_t head_moves = 0;

    bool terminal() const { return state == State::accept || state == State::reject; }
};

enum class Outcome : uint8_t { accepted, rejected, fuel_exhausted };

const char* outcome_name(Outcome o);

struct RunResult {
    Outcome outcome = Outcome::fuel_exhausted;
    uint64_t a = 0;  // set when accepted
    uint64_t b = 0;
    uint64_t steps = 0;
    uint64_t head_moves = 0;

    bool operator==(const RunResult&) const = default;
};

// Fuel that empirically covers the least-divisor search for every composite
// at desk scale (measured constant recorded in the repo notes).
inline uint64_t default_fuel(uint64_t n) { return 64 * n * n; }

// Initial configuration: 1^n on tape 1, divisor candidate a = 2 on tape 2,
// empty output tape. Throws std::invalid_argument for n < 2.
PackingTmConfig tm_init(uint64_t n);

// Applies exactly one transition; returns false when cfg was already
// terminal (no transition applied). Undefined state/symbol pairs move to
// the reject state.
bool tm_step(PackingTmConfig& cfg);

// Runs the machine on 1^n for at most `fuel` transitions.
RunResult tm_run(uint64_t n, uint64_t fuel);

struct CensusRow {
    uint64_t n = 0;
    Outcome outcome = Outcome::fuel_exhausted;
    uint64_t a = 0;
    uint64_t b = 0;
    uint64_t steps = 0;
    uint64_t head_moves = 0;
};

// One row per 2 <= n <= N, deterministic across runs and job counts.
// fuel == 0 selects default_fuel(n) per input.
std::vector<CensusRow> tm_runtime_census(uint64_t N, uint64_t fuel, unsigned jobs = 1);

}  // namespace primelab::packing
