#include "primelab/packing_tm.hpp"

#include <array>
#include <stdexcept>

#include "primelab/parallel.hpp"

namespace primelab::packing {
namespace {

constexpr char kBlank = '_';

// Tape alphabets. Tape 2 and tape 3 are fixed by the machine definition;
// tape 1 additionally uses 'x' for consumed input marks.
constexpr std::array<char, 3> kAlpha1 = {'1', 'x', kBlank};
constexpr std::array<char, 6> kAlpha2 = {'L', 'A', 'C', 'a', '$', kBlank};
constexpr std::array<char, 4> kAlpha3 = {'1', '#', 'B', kBlank};

constexpr int8_t kLeft = -1;
constexpr int8_t kStay = 0;
constexpr int8_t kRight = 1;

struct Action {
    State next = State::reject;
    char write1 = 0, write2 = 0, write3 = 0;  // 0 = keep symbol
    int8_t move1 = kStay, move2 = kStay, move3 = kStay;
};

// One row of the transition chart. A 0 in a read field is a wildcard.
struct Rule {
    State state;
    char read1, read2, read3;
    Action act;
};

// The machine tests divisor candidates a = 2, 3, ... by block-subtraction:
// tape 2 holds L A^a C a^a $, and one row of the packing consumes a input
// marks while the tape-2 head walks the working zone a^a. Per completed row
// one B is appended to tape 3 (behind a precopied 1^a # prefix). Order of
// routines follows the machine definition: row count, then completion (at
// least two rows and no remainder), then failure (increment a and restart).
constexpr Rule kRules[] = {
    // -- entry: skip the left marker, then copy A^a to tape 3 as 1^a # --
    {State::init, 0, 'L', 0, {State::copy_a, 0, 0, 0, kStay, kRight, kStay}},
    {State::copy_a, 0, 'A', 0, {State::copy_a, 0, 0, '1', kStay, kRight, kRight}},
    {State::copy_a, 0, 'C', 0, {State::block_r0, 0, 0, '#', kStay, kStay, kRight}},

    // -- row count: consume one input mark per working-zone mark --
    {State::block_r0, '1', 'C', 0, {State::consume_r0, 0, 0, 0, kStay, kRight, kStay}},
    {State::consume_r0, '1', 'a', 0, {State::consume_r0, 'x', 0, 0, kRight, kRight, kStay}},
    {State::consume_r1, '1', 'a', 0, {State::consume_r1, 'x', 0, 0, kRight, kRight, kStay}},
    {State::consume_r2, '1', 'a', 0, {State::consume_r2, 'x', 0, 0, kRight, kRight, kStay}},

    // block fits exactly: append one B, rewind the working zone
    {State::consume_r0, 0, '$', 0, {State::rewind_r1, 0, 0, 'B', kStay, kLeft, kRight}},
    {State::consume_r1, 0, '$', 0, {State::rewind_r2, 0, 0, 'B', kStay, kLeft, kRight}},
    {State::consume_r2, 0, '$', 0, {State::rewind_r2, 0, 0, 'B', kStay, kLeft, kRight}},
    {State::rewind_r1, 0, 'a', 0, {State::rewind_r1, 0, 0, 0, kStay, kLeft, kStay}},
    {State::rewind_r2, 0, 'a', 0, {State::rewind_r2, 0, 0, 0, kStay, kLeft, kStay}},
    {State::rewind_r1, 0, 'C', 0, {State::block_r1, 0, 0, 0, kStay, kStay, kStay}},
    {State::rewind_r2, 0, 'C', 0, {State::block_r2, 0, 0, 0, kStay, kStay, kStay}},
    {State::block_r1, '1', 'C', 0, {State::consume_r1, 0, 0, 0, kStay, kRight, kStay}},
    {State::block_r2, '1', 'C', 0, {State::consume_r2, 0, 0, 0, kStay, kRight, kStay}},

    // -- completion: input exhausted with at least two rows --
    {State::block_r2, kBlank, 'C', 0, {State::accept_scan, 0, 0, 0, kStay, kStay, kLeft}},
    {State::accept_scan, 0, 0, 'B', {State::accept_scan, 0, 0, '1', kStay, kStay, kLeft}},
    {State::accept_scan, 0, 0, '#', {State::accept, 0, 0, 0, kStay, kStay, kStay}},

    // -- failure: remainder mid-block, or a single full row (a = n) --
    {State::consume_r0, kBlank, 'a', 0, {State::fail_rew1, 0, 0, 0, kStay, kStay, kStay}},
    {State::consume_r1, kBlank, 'a', 0, {State::fail_rew1, 0, 0, 0, kStay, kStay, kStay}},
    {State::consume_r2, kBlank, 'a', 0, {State::fail_rew1, 0, 0, 0, kStay, kStay, kStay}},
    {State::block_r1, kBlank, 'C', 0, {State::fail_rew1, 0, 0, 0, kStay, kStay, kStay}},

    // restore tape 1 (head parks on cell 0, the only restored mark it re-reads)
    {State::fail_rew1, kBlank, 0, 0, {State::fail_rew1, 0, 0, 0, kLeft, kStay, kStay}},
    {State::fail_rew1, 'x', 0, 0, {State::fail_rew1, '1', 0, 0, kLeft, kStay, kStay}},
    {State::fail_rew1, '1', 0, 0, {State::fail_del3a, 0, 0, 0, kStay, kStay, kStay}},

    // erase tape 3 (stops when it re-reads the blank it wrote at cell 0)
    {State::fail_del3a, 0, 0, 0, {State::fail_del3, 0, 0, 0, kStay, kStay, kLeft}},
    {State::fail_del3, 0, 0, '1', {State::fail_del3, 0, 0, kBlank, kStay, kStay, kLeft}},
    {State::fail_del3, 0, 0, '#', {State::fail_del3, 0, 0, kBlank, kStay, kStay, kLeft}},
    {State::fail_del3, 0, 0, 'B', {State::fail_del3, 0, 0, kBlank, kStay, kStay, kLeft}},
    {State::fail_del3, 0, 0, kBlank, {State::fail_rew2, 0, 0, 0, kStay, kStay, kStay}},

    // rewind the working zone, then increment a by one:
    // L A^a C a^a $  ->  L A^(a+1) C a^(a+1) $
    {State::fail_rew2, 0, 'a', 0, {State::fail_rew2, 0, 0, 0, kStay, kLeft, kStay}},
    {State::fail_rew2, 0, 'C', 0, {State::incr_a, 0, 0, 0, kStay, kStay, kStay}},
    {State::incr_a, 0, 'C', 0, {State::incr_c, 0, 'A', 0, kStay, kRight, kStay}},
    {State::incr_c, 0, 'a', 0, {State::incr_scan, 0, 'C', 0, kStay, kRight, kStay}},
    {State::incr_scan, 0, 'a', 0, {State::incr_scan, 0, 0, 0, kStay, kRight, kStay}},
    {State::incr_scan, 0, '$', 0, {State::incr_grow, 0, 'a', 0, kStay, kRight, kStay}},
    {State::incr_grow, 0, kBlank, 0, {State::incr_dollar, 0, 'a', 0, kStay, kRight, kStay}},
    {State::incr_dollar, 0, kBlank, 0, {State::rew_full, 0, '$', 0, kStay, kStay, kStay}},

    // back to the left marker and start the next attempt
    {State::rew_full, 0, '$', 0, {State::rew_full, 0, 0, 0, kStay, kLeft, kStay}},
    {State::rew_full, 0, 'a', 0, {State::rew_full, 0, 0, 0, kStay, kLeft, kStay}},
    {State::rew_full, 0, 'C', 0, {State::rew_full, 0, 0, 0, kStay, kLeft, kStay}},
    {State::rew_full, 0, 'A', 0, {State::rew_full, 0, 0, 0, kStay, kLeft, kStay}},
    {State::rew_full, 0, 'L', 0, {State::copy_a, 0, 0, 0, kStay, kRight, kStay}},
};

constexpr size_t kNumStates = static_cast<size_t>(State::reject) + 1;

int sym_index(const auto& alphabet, char c) {
    for (size_t i = 0; i < alphabet.size(); ++i)
        if (alphabet[i] == c) return static_cast<int>(i);
    return -1;
}

// Dense delta: [state][s1][s2][s3] -> Action. Unlisted combinations reject,
// which keeps delta total.
struct Table {
    Action map[kNumStates][kAlpha1.size()][kAlpha2.size()][kAlpha3.size()];

    Table() {
        for (auto& d1 : map)
            for (auto& d2 : d1)
                for (auto& d3 : d2)
                    for (auto& a : d3) a = Action{};
        for (const Rule& r : kRules) {
            for (size_t i1 = 0; i1 < kAlpha1.size(); ++i1) {
                if (r.read1 != 0 && kAlpha1[i1] != r.read1) continue;
                for (size_t i2 = 0; i2 < kAlpha2.size(); ++i2) {
                    if (r.read2 != 0 && kAlpha2[i2] != r.read2) continue;
                    for (size_t i3 = 0; i3 < kAlpha3.size(); ++i3) {
                        if (r.read3 != 0 && kAlpha3[i3] != r.read3) continue;
                        map[static_cast<size_t>(r.state)][i1][i2][i3] = r.act;
                    }
                }
            }
        }
    }
};

const Table& table() {
    static const Table t;
    return t;
}

char read_tape(const std::string& tape, size_t head) {
    return head < tape.size() ? tape[head] : kBlank;
}

void write_tape(std::string& tape, size_t head, char c) {
    if (head >= tape.size()) tape.resize(head + 1, kBlank);
    tape[head] = c;
}

// Moves with clamping at cell 0; returns 1 when the head actually moved.
uint64_t move_head(size_t& head, int8_t dir) {
    if (dir == kRight) {
        ++head;
        return 1;
    }
    if (dir == kLeft && head > 0) {
        --head;
        return 1;
    }
    return 0;
}

}  // namespace

const char* state_name(State s) {
    switch (s) {
        case State::init: return "init";
        case State::copy_a: return "copy_a";
        case State::block_r0: return "block_r0";
        case State::consume_r0: return "consume_r0";
        case State::consume_r1: return "consume_r1";
        case State::consume_r2: return "consume_r2";
        case State::rewind_r1: return "rewind_r1";
        case State::rewind_r2: return "rewind_r2";
        case State::block_r1: return "block_r1";
        case State::block_r2: return "block_r2";
        case State::accept_scan: return "accept_scan";
        case State::fail_rew1: return "fail_rew1";
        case State::fail_del3a: return "fail_del3a";
        case State::fail_del3: return "fail_del3";
        case State::fail_rew2: return "fail_rew2";
        case State::incr_a: return "incr_a";
        case State::incr_c: return "incr_c";
        case State::incr_scan: return "incr_scan";
        case State::incr_grow: return "incr_grow";
        case State::incr_dollar: return "incr_dollar";
        case State::rew_full: return "rew_full";
        case State::accept: return "accept";
        case State::reject: return "reject";
    }
    return "?";
}

const char* outcome_name(Outcome o) {
    switch (o) {
        case Outcome::accepted: return "accepted";
        case Outcome::rejected: return "rejected";
        case Outcome::fuel_exhausted: return "fuel_exhausted";
    }
    return "?";
}

PackingTmConfig tm_init(uint64_t n) {
    if (n < 2) throw std::invalid_argument("packing machine input requires n >= 2");
    PackingTmConfig cfg;
    cfg.tape1.assign(n, '1');
    cfg.tape2 = "LAACaa$";  // divisor candidate a = 2
    cfg.tape3.clear();
    cfg.state = State::init;
    return cfg;
}

bool tm_step(PackingTmConfig& cfg) {
    if (cfg.terminal()) return false;
    const char s1 = read_tape(cfg.tape1, cfg.head1);
    const char s2 = read_tape(cfg.tape2, cfg.head2);
    const char s3 = read_tape(cfg.tape3, cfg.head3);
    const int i1 = sym_index(kAlpha1, s1);
    const int i2 = sym_index(kAlpha2, s2);
    const int i3 = sym_index(kAlpha3, s3);
    Action act;  // default-rejects on any symbol outside the alphabets
    if (i1 >= 0 && i2 >= 0 && i3 >= 0)
        act = table().map[static_cast<size_t>(cfg.state)][i1][i2][i3];
    if (act.write1) write_tape(cfg.tape1, cfg.head1, act.write1);
    if (act.write2) write_tape(cfg.tape2, cfg.head2, act.write2);
    if (act.write3) write_tape(cfg.tape3, cfg.head3, act.write3);
    cfg.head_moves += move_head(cfg.head1, act.move1);
    cfg.head_moves += move_head(cfg.head2, act.move2);
    cfg.head_moves += move_head(cfg.head3, act.move3);
    cfg.state = act.next;
    ++cfg.steps;
    return true;
}

RunResult tm_run(uint64_t n, uint64_t fuel) {
    PackingTmConfig cfg = tm_init(n);
    while (cfg.steps < fuel && !cfg.terminal()) tm_step(cfg);
    RunResult res;
    res.steps = cfg.steps;
    res.head_moves = cfg.head_moves;
    if (cfg.state == State::accept) {
        res.outcome = Outcome::accepted;
        // Output tape carries 1^a # 1^b.
        size_t i = 0;
        while (i < cfg.tape3.size() && cfg.tape3[i] == '1') ++i;
        res.a = i;
        ++i;  // '#'
        uint64_t b = 0;
        while (i < cfg.tape3.size() && cfg.tape3[i] == '1') {
            ++b;
            ++i;
        }
        res.b = b;
    } else if (cfg.state == State::reject) {
        res.outcome = Outcome::rejected;
    } else {
        res.outcome = Outcome::fuel_exhausted;
    }
    return res;
}

std::vector<CensusRow> tm_runtime_census(uint64_t N, uint64_t fuel, unsigned jobs) {
    if (N < 2) throw std::invalid_argument("census requires N >= 2");
    return parallel_map<CensusRow>(2, N + 1, jobs, [fuel](uint64_t n) {
        const RunResult r = tm_run(n, fuel == 0 ? default_fuel(n) : fuel);
        return CensusRow{n, r.outcome, r.a, r.b, r.steps, r.head_moves};
    });
}

}  // namespace primelab::packing
