#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "primelab/beaver.hpp"

using namespace primelab;
using namespace primelab::beaver;

namespace {

uint64_t big_omega(uint64_t n) {  // number of prime factors with multiplicity
    uint64_t count = 0;
    for (uint64_t p = 2; p * p <= n; ++p)
        while (n % p == 0) {
            ++count;
            n /= p;
        }
    return count + (n > 1 ? 1 : 0);
}

}  // namespace

TEST_CASE("single transitions follow the four cases") {
    // case (ii): divisor found at <6,2,[]>
    const BeaverConfig six = beaver_init(6);
    const auto after = beaver_step(six);
    REQUIRE(after.has_value());
    REQUIRE(after->current == 2);
    REQUIRE(after->divisor == 2);
    REQUIRE(after->stack == std::vector<Subgoal>{Subgoal{3, 2}});
    REQUIRE(after->factor_log == std::vector<FactorPair>{FactorPair{2, 3, 6}});
    REQUIRE(after->steps == 1);

    // case (iv): halt at <5,3,[]>
    BeaverConfig five;
    five.current = 5;
    five.divisor = 3;
    REQUIRE(beaver_step(five) == std::nullopt);
    REQUIRE(beaver_terminal(five));

    // case (i): increment at <9,2,[]>
    const auto nine = beaver_step(beaver_init(9));
    REQUIRE(nine.has_value());
    REQUIRE(nine->current == 9);
    REQUIRE(nine->divisor == 3);
    REQUIRE(nine->stack.empty());

    // case (iii): pop at <3,4,[7]>
    BeaverConfig popping;
    popping.current = 3;
    popping.divisor = 4;
    popping.stack.push_back(Subgoal{7, 2});
    const auto popped = beaver_step(popping);
    REQUIRE(popped.has_value());
    REQUIRE(popped->current == 7);
    REQUIRE(popped->divisor == 2);
    REQUIRE(popped->stack.empty());

    BeaverConfig bad;
    bad.current = 6;
    bad.divisor = 1;
    REQUIRE_THROWS_AS(beaver_step(bad), std::logic_error);
}

TEST_CASE("beaver_run classifies the examples") {
    const BeaverResult seven = beaver_run(7);
    REQUIRE(seven.classification == Classification::prime);
    REQUIRE(seven.factor_log.empty());

    const BeaverResult six = beaver_run(6);
    REQUIRE(six.classification == Classification::composite);
    REQUIRE(six.factor_log.front() == FactorPair{2, 3, 6});

    const BeaverResult two = beaver_run(2);
    REQUIRE(two.classification == Classification::prime);
    REQUIRE(two.steps == 0);  // k = 2, k^2 = 4 > 2, empty stack: immediate halt

    REQUIRE_THROWS_AS(beaver_run(1), std::invalid_argument);
}

TEST_CASE("classification matches bounded primality up to 1e5") {
    for (uint64_t n = 2; n <= 100'000; ++n) {
        const BeaverResult r = beaver_run(n, TraceMode::none);
        REQUIRE((r.classification == Classification::prime) == is_prime_pi(n));
    }
}

TEST_CASE("measured termination bound 4*sqrt(n)*Omega(n) + c") {
    // c frozen from the measured maximum over the full range (attained in
    // the prime tail where Omega = 1 and the scan walks to sqrt(n)).
    constexpr double kFrozenConstant = 8.0;
    for (uint64_t n = 2; n <= 100'000; ++n) {
        const BeaverResult r = beaver_run(n, TraceMode::none);
        const double omega = static_cast<double>(big_omega(n));
        const double bound = 4.0 * std::sqrt(static_cast<double>(n)) * omega + kFrozenConstant;
        REQUIRE(static_cast<double>(r.steps) <= bound);
    }
}

TEST_CASE("traces verify and mutations are rejected") {
    const BeaverResult five = beaver_run(5);
    REQUIRE(trace_verify(5, five.trace));

    BeaverTrace missing = five.trace;
    missing.configs.erase(missing.configs.begin() + 1);
    REQUIRE_FALSE(trace_verify(5, missing));

    const BeaverResult ten = beaver_run(10);
    REQUIRE_FALSE(trace_verify(6, ten.trace));  // initial config mismatch

    // single-snapshot mutations
    for (size_t i = 0; i < five.trace.configs.size(); ++i) {
        BeaverTrace mutated = five.trace;
        mutated.configs[i].divisor += 1;
        REQUIRE_FALSE(trace_verify(5, mutated));
    }
    BeaverTrace wrong_steps = beaver_run(12).trace;
    wrong_steps.configs.back().steps += 1;
    REQUIRE_FALSE(trace_verify(12, wrong_steps));

    BeaverTrace unterminated = five.trace;
    unterminated.terminal = false;
    REQUIRE_FALSE(trace_verify(5, unterminated));

    REQUIRE_FALSE(trace_verify(5, BeaverTrace{}));
}

TEST_CASE("factor log reconstructs the prime factorization") {
    for (uint64_t n = 2; n <= 10'000; ++n) {
        const BeaverResult r = beaver_run(n, TraceMode::none);
        if (r.classification == Classification::composite) {
            REQUIRE(log_reconstruct(n, r.factor_log) == factorize(n));
        } else {
            REQUIRE(r.factor_log.empty());
        }
    }
    REQUIRE_THROWS_AS(log_reconstruct(12, {FactorPair{2, 3, 6}}), std::invalid_argument);
}

TEST_CASE("profile grows monotonically and tracks known runs") {
    REQUIRE(pb_profile(2).max_steps == beaver_run(2).steps);

    uint64_t expected_max = 0;
    for (uint64_t n = 2; n <= 10; ++n)
        expected_max = std::max(expected_max, beaver_run(n, TraceMode::none).steps);
    REQUIRE(pb_profile(10).max_steps == expected_max);

    const auto table = pb_profile_table(200);
    REQUIRE(table.size() == 199);
    for (size_t i = 1; i < table.size(); ++i) {
        REQUIRE(table[i].max_steps >= table[i - 1].max_steps);
        REQUIRE(pb_profile(table[i].s).max_steps == table[i].max_steps);
    }
    // ties keep the lowest attaining n
    for (const auto& row : table)
        REQUIRE(beaver_run(row.argmax_n, TraceMode::none).steps == row.max_steps);
}

TEST_CASE("json-exportable subgoal pairs carry the divisor restart") {
    const BeaverResult twelve = beaver_run(12);
    bool saw_push = false;
    for (const auto& cfg : twelve.trace.configs)
        for (const auto& sub : cfg.stack) {
            saw_push = true;
            REQUIRE(sub.divisor_start == 2);
            REQUIRE(sub.value >= 2);
        }
    REQUIRE(saw_push);
}
