#include "primelab/beaver.hpp"

#include <stdexcept>

namespace primelab::beaver {

BeaverConfig beaver_init(uint64_t n) {
    if (n < 2) throw std::invalid_argument("beaver input requires n >= 2");
    BeaverConfig cfg;
    cfg.current = n;
    cfg.divisor = 2;
    return cfg;
}

namespace {

// k^2 > n without overflow.
bool past_root(uint64_t k, uint64_t n) { return k > n / k; }

}  // namespace

bool beaver_terminal(const BeaverConfig& cfg) {
    // Matches beaver_step's case order: the divide case wins over halt on
    // hand-built configs where both guards hold.
    const uint64_t n = cfg.current;
    const uint64_t k = cfg.divisor;
    if (k < 2 || !past_root(k, n) || !cfg.stack.empty()) return false;
    return !(k < n && n % k == 0);
}

std::optional<BeaverConfig> beaver_step(const BeaverConfig& cfg) {
    const uint64_t n = cfg.current;
    const uint64_t k = cfg.divisor;
    if (k < 2) throw std::logic_error("beaver config with divisor < 2");
    BeaverConfig next = cfg;
    ++next.steps;
    if (!past_root(k, n) && n % k != 0) {  // (i)
        next.divisor = k + 1;
        return next;
    }
    if (1 < k && k < n && n % k == 0) {  // (ii)
        next.factor_log.push_back(FactorPair{k, n / k, n});
        next.stack.push_back(Subgoal{n / k, 2});
        next.current = k;
        next.divisor = 2;
        return next;
    }
    if (past_root(k, n) && !cfg.stack.empty()) {  // (iii)
        next.current = cfg.stack.back().value;
        next.divisor = cfg.stack.back().divisor_start;
        next.stack.pop_back();
        return next;
    }
    if (past_root(k, n) && cfg.stack.empty()) {  // (iv)
        return std::nullopt;
    }
    throw std::logic_error("beaver config matches no transition case");
}

const char* classification_name(Classification c) {
    return c == Classification::prime ? "prime" : "composite";
}

BeaverResult beaver_run(uint64_t n, TraceMode mode) {
    BeaverConfig cfg = beaver_init(n);
    BeaverResult res;
    if (mode == TraceMode::record) res.trace.configs.push_back(cfg);
    for (;;) {
        std::optional<BeaverConfig> next = beaver_step(cfg);
        if (!next) break;
        cfg = std::move(*next);
        if (mode == TraceMode::record) res.trace.configs.push_back(cfg);
    }
    res.steps = cfg.steps;
    res.factor_log = cfg.factor_log;
    res.classification =
        cfg.factor_log.empty() ? Classification::prime : Classification::composite;
    if (mode == TraceMode::record) res.trace.terminal = true;
    return res;
}

bool trace_verify(uint64_t n, const BeaverTrace& trace) {
    if (n < 2 || trace.configs.empty() || !trace.terminal) return false;
    if (trace.configs.front() != beaver_init(n)) return false;
    try {
        for (size_t i = 0; i + 1 < trace.configs.size(); ++i) {
            std::optional<BeaverConfig> next = beaver_step(trace.configs[i]);
            if (!next || *next != trace.configs[i + 1]) return false;
        }
        return beaver_step(trace.configs.back()) == std::nullopt;
    } catch (const std::logic_error&) {
        return false;  // malformed snapshot (divisor < 2 or uncovered case)
    }
}

ExponentVector log_reconstruct(uint64_t n, const std::vector<FactorPair>& log) {
    // Replay the decompositions: each entry splits one active value into its
    // two factors; whatever remains unsplit are the leaves.
    std::map<uint64_t, uint32_t> active;
    ++active[n];
    for (const FactorPair& f : log) {
        auto it = active.find(f.n);
        if (f.a * f.b != f.n || it == active.end() || it->second == 0)
            throw std::invalid_argument("factor log does not replay against n");
        if (--it->second == 0) active.erase(it);
        ++active[f.a];
        ++active[f.b];
    }
    ExponentVector out;
    out.entries = std::move(active);
    return out;
}

PbProfile pb_profile(uint64_t s) {
    if (s < 2) throw std::invalid_argument("profile requires s >= 2");
    PbProfile best;
    for (uint64_t n = 2; n <= s; ++n) {
        const BeaverResult r = beaver_run(n, TraceMode::none);
        if (best.argmax_n == 0 || r.steps > best.max_steps) {
            best.max_steps = r.steps;
            best.argmax_n = n;
        }
    }
    return best;
}

std::vector<PbProfileRow> pb_profile_table(uint64_t S) {
    if (S < 2) throw std::invalid_argument("profile requires S >= 2");
    std::vector<PbProfileRow> rows;
    uint64_t max_steps = 0;
    uint64_t argmax = 0;
    for (uint64_t s = 2; s <= S; ++s) {
        const BeaverResult r = beaver_run(s, TraceMode::none);
        if (argmax == 0 || r.steps > max_steps) {
            max_steps = r.steps;
            argmax = s;
        }
        rows.push_back(PbProfileRow{s, max_steps, argmax});
    }
    return rows;
}

}  // namespace primelab::beaver
