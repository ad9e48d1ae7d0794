#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "primelab/arith.hpp"

namespace primelab::schema {

// A bounded compositeness rule: factor pairs are only visible when their
// smaller side stays within the schema's bound.
struct BoundedSchema {
    enum class Kind : uint8_t { divisor_window, bound_function };

    Kind kind = Kind::divisor_window;
    uint64_t window = 2;   // divisor_window: fixed D
    double alpha = 0.5;    // bound_function: B(n) = floor(n^alpha)
    std::string description;

    // Total and >= 1 for every n.
    uint64_t bound(uint64_t n) const;

    static BoundedSchema divisor_window_schema(uint64_t d);
    static BoundedSchema power_schema(double alpha);
    // "window:D" or "pow:alpha"; throws std::invalid_argument on bad syntax.
    static BoundedSchema parse(const std::string& text);
};

// Rectangle witness for compositeness: sides, area, and the closing
// perimeter of the minimal enclosing loop.
struct GeomWitness {
    uint64_t a = 0;
    uint64_t b = 0;
    uint64_t area = 0;
    uint64_t perimeter = 0;

    bool operator==(const GeomWitness&) const = default;
};

// Finite set of verified factorizations, ordered by extension.
struct ForcingCondition {
    std::vector<FactorPair> pairs;
};

// Bounded compositeness: some factor pair of n has min(a,b) within the
// schema bound. Never a false positive (comp_d implies composite).
bool comp_d(const BoundedSchema& schema, uint64_t n);

// n > 1 and not comp_d; may wrongly call a composite "prime" when all its
// factors escape the bound.
bool prime_d(const BoundedSchema& schema, uint64_t n);

// All composites n <= N the schema fails to recognize. For a divisor window
// D this is exactly the set of composites whose least prime factor exceeds D.
std::vector<uint64_t> omissions(const BoundedSchema& schema, uint64_t N);

struct CurvePoint {
    uint64_t x = 0;
    uint64_t count = 0;
};

// Jump points of the cumulative omission count for window D, with a final
// row at N; monotone nondecreasing.
std::vector<CurvePoint> omission_count_curve(uint64_t D, uint64_t N);

// Factor pairs (a, b) of n with 2 <= a = min(a,b) <= D, ascending in a.
std::vector<FactorPair> farey_window(uint64_t n, uint64_t D);

// Geometric compositeness witness from the least factor pair; absent for
// primes and n <= 3.
std::optional<GeomWitness> delta_square(uint64_t n);

// True iff some pair in the condition multiplies to n. Throws
// std::invalid_argument on a malformed condition.
bool forces_comp(const ForcingCondition& cond, uint64_t n);

// True iff no extension of the condition can contain a factorization of n;
// extension-invariant, hence ordinary primality of n.
bool forces_prime(const ForcingCondition& cond, uint64_t n);

}  // namespace primelab::schema
