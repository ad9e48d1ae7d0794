#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "primelab/schema.hpp"

using namespace primelab;
using namespace primelab::schema;

namespace {

// Least-prime-factor sieve, the independent oracle for omission sets.
std::vector<uint64_t> lpf_sieve(uint64_t N) {
    std::vector<uint64_t> lpf(N + 1, 0);
    for (uint64_t p = 2; p <= N; ++p) {
        if (lpf[p] != 0) continue;
        for (uint64_t m = p; m <= N; m += p)
            if (lpf[m] == 0) lpf[m] = p;
    }
    return lpf;
}

std::vector<uint64_t> oracle_omissions(uint64_t D, uint64_t N) {
    const auto lpf = lpf_sieve(N);
    std::vector<uint64_t> out;
    for (uint64_t n = 4; n <= N; ++n)
        if (lpf[n] != n && lpf[n] > D) out.push_back(n);  // composite with lpf > D
    return out;
}

}  // namespace

TEST_CASE("schema parsing and bounds") {
    const BoundedSchema w3 = BoundedSchema::parse("window:3");
    REQUIRE(w3.kind == BoundedSchema::Kind::divisor_window);
    REQUIRE(w3.bound(10) == 3);
    REQUIRE(w3.bound(1'000'000) == 3);

    const BoundedSchema p04 = BoundedSchema::parse("pow:0.4");
    REQUIRE(p04.kind == BoundedSchema::Kind::bound_function);
    REQUIRE(p04.bound(32) == 4);    // 32^0.4 = 4
    REQUIRE(p04.bound(1024) == 16); // 1024^0.4 = 16
    REQUIRE(p04.bound(1) == 1);

    REQUIRE_THROWS_AS(BoundedSchema::parse("triangle:3"), std::invalid_argument);
    REQUIRE_THROWS_AS(BoundedSchema::parse("window"), std::invalid_argument);
    REQUIRE_THROWS_AS(BoundedSchema::parse("window:x"), std::invalid_argument);
    REQUIRE_THROWS_AS(BoundedSchema::divisor_window_schema(1), std::invalid_argument);
    REQUIRE_THROWS_AS(BoundedSchema::power_schema(0.0), std::invalid_argument);
}

TEST_CASE("comp_d and prime_d on the figure examples") {
    const BoundedSchema w3 = BoundedSchema::divisor_window_schema(3);
    REQUIRE_FALSE(comp_d(w3, 25));  // factors (5,5) outside the window
    REQUIRE(comp_d(w3, 6));
    REQUIRE(comp_d(BoundedSchema::divisor_window_schema(2), 4));

    REQUIRE(prime_d(w3, 25));  // wrongly "prime": the schema's blind spot
    REQUIRE(prime_d(w3, 7));
    REQUIRE_FALSE(prime_d(BoundedSchema::divisor_window_schema(5), 25));
    REQUIRE_FALSE(prime_d(w3, 1));
    REQUIRE_FALSE(prime_d(w3, 0));
}

TEST_CASE("no false positives for either schema kind up to 1e5") {
    const std::vector<BoundedSchema> schemas = {
        BoundedSchema::divisor_window_schema(2), BoundedSchema::divisor_window_schema(7),
        BoundedSchema::power_schema(0.3), BoundedSchema::power_schema(0.5)};
    for (const auto& s : schemas)
        for (uint64_t n = 0; n <= 100'000; ++n)
            if (comp_d(s, n)) REQUIRE(comp_witness(n).has_value());
}

TEST_CASE("omissions match the spec examples") {
    REQUIRE(omissions(BoundedSchema::divisor_window_schema(3), 30) ==
            std::vector<uint64_t>{25});
    REQUIRE(omissions(BoundedSchema::divisor_window_schema(2), 10) ==
            std::vector<uint64_t>{9});
    REQUIRE(omissions(BoundedSchema::divisor_window_schema(7), 100).empty());
}

TEST_CASE("omissions equal the least-prime-factor oracle up to 1e5") {
    for (uint64_t D : {2u, 3u, 5u, 7u, 11u}) {
        const auto got = omissions(BoundedSchema::divisor_window_schema(D), 100'000);
        REQUIRE(got == oracle_omissions(D, 100'000));
    }
}

TEST_CASE("power schemata with alpha < 1/2 eventually omit composites") {
    // B(n) = floor(n^0.3) < sqrt(n): p^2 escapes once p > p^0.6.
    const BoundedSchema s = BoundedSchema::power_schema(0.3);
    const auto omitted = omissions(s, 10'000);
    REQUIRE(!omitted.empty());
    REQUIRE(std::find(omitted.begin(), omitted.end(), 49) != omitted.end());  // 7 > 49^0.3 ~ 3.2
    // while the full-root schema alpha = 1/2 omits nothing
    REQUIRE(omissions(BoundedSchema::power_schema(0.5), 10'000).empty());
}

TEST_CASE("omission count curve is a consistent running count") {
    const auto curve = omission_count_curve(3, 10'000);
    REQUIRE(!curve.empty());
    for (size_t i = 1; i < curve.size(); ++i) {
        REQUIRE(curve[i].x > curve[i - 1].x);
        REQUIRE(curve[i].count >= curve[i - 1].count);
    }
    REQUIRE(curve.back().x == 10'000);
    REQUIRE(curve.back().count == omissions(BoundedSchema::divisor_window_schema(3), 10'000).size());

    // larger windows miss fewer
    REQUIRE(omission_count_curve(3, 100'000).back().count >
            omission_count_curve(5, 100'000).back().count);
}

TEST_CASE("farey window enumerates bounded factor pairs") {
    REQUIRE(farey_window(25, 4).empty());
    const auto twelve = farey_window(12, 3);
    REQUIRE(twelve == std::vector<FactorPair>{FactorPair{2, 6, 12}, FactorPair{3, 4, 12}});
    REQUIRE(farey_window(97, 96).empty());  // prime: nothing at any window

    for (uint64_t n = 2; n <= 5000; ++n) {
        const bool composite = comp_witness(n).has_value();
        REQUIRE(!farey_window(n, std::max<uint64_t>(2, isqrt(n))).empty() == composite);
    }
}

TEST_CASE("delta_square witnesses follow the least pair") {
    REQUIRE(delta_square(4) == GeomWitness{2, 2, 4, 8});
    REQUIRE_FALSE(delta_square(11).has_value());
    REQUIRE(delta_square(6) == GeomWitness{2, 3, 6, 10});
    for (uint64_t n = 2; n <= 2000; ++n) {
        const auto w = delta_square(n);
        REQUIRE(w.has_value() == comp_witness(n).has_value());
        if (w) {
            REQUIRE(w->a * w->b == w->area);
            REQUIRE(w->perimeter == 2 * (w->a + w->b));
        }
    }
}

TEST_CASE("forcing clauses") {
    const ForcingCondition six{{FactorPair{2, 3, 6}}};
    REQUIRE(forces_comp(six, 6));
    REQUIRE_FALSE(forces_comp(ForcingCondition{}, 6));
    REQUIRE_FALSE(forces_comp(six, 12));

    REQUIRE(forces_prime(ForcingCondition{}, 7));
    REQUIRE_FALSE(forces_prime(ForcingCondition{}, 6));
    REQUIRE(forces_prime(ForcingCondition{{FactorPair{2, 2, 4}}}, 5));

    const ForcingCondition bad{{FactorPair{2, 3, 7}}};
    REQUIRE_THROWS_AS(forces_comp(bad, 7), std::invalid_argument);
    REQUIRE_THROWS_AS(forces_prime(bad, 7), std::invalid_argument);
}

TEST_CASE("forcing is monotone under extension") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 200; ++round) {
        ForcingCondition cond;
        const int base = 1 + static_cast<int>(rng() % 4);
        for (int i = 0; i < base; ++i) {
            const uint64_t a = 2 + rng() % 20;
            const uint64_t b = 2 + rng() % 20;
            cond.pairs.push_back(FactorPair{a, b, a * b});
        }
        ForcingCondition extended = cond;
        const uint64_t a = 2 + rng() % 20;
        const uint64_t b = 2 + rng() % 20;
        extended.pairs.push_back(FactorPair{a, b, a * b});

        for (uint64_t n = 2; n <= 450; ++n) {
            if (forces_comp(cond, n)) REQUIRE(forces_comp(extended, n));
            REQUIRE(forces_prime(cond, n) == forces_prime(extended, n));
        }
    }
}

TEST_CASE("empty-condition forcing of primality is bounded primality up to 1e4") {
    const ForcingCondition empty;
    for (uint64_t n = 2; n <= 10'000; ++n)
        REQUIRE(forces_prime(empty, n) == is_prime_pi(n));
}
