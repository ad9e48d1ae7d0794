#include "primelab/schema.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace primelab::schema {

uint64_t BoundedSchema::bound(uint64_t n) const {
    if (kind == Kind::divisor_window) return window;
    if (n == 0) return 1;
    const double r = std::floor(std::pow(static_cast<double>(n), alpha) + 1e-9);
    return std::max<uint64_t>(1, static_cast<uint64_t>(r));
}

BoundedSchema BoundedSchema::divisor_window_schema(uint64_t d) {
    if (d < 2) throw std::invalid_argument("divisor window requires D >= 2");
    BoundedSchema s;
    s.kind = Kind::divisor_window;
    s.window = d;
    s.description = "window:" + std::to_string(d);
    return s;
}

BoundedSchema BoundedSchema::power_schema(double alpha) {
    if (!(alpha > 0.0) || !(alpha <= 1.0))
        throw std::invalid_argument("power schema requires 0 < alpha <= 1");
    BoundedSchema s;
    s.kind = Kind::bound_function;
    s.alpha = alpha;
    s.description = "pow:" + std::to_string(alpha);
    return s;
}

BoundedSchema BoundedSchema::parse(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("schema spec needs kind:value");
    const std::string kind = text.substr(0, colon);
    const std::string value = text.substr(colon + 1);
    try {
        if (kind == "window") return divisor_window_schema(std::stoull(value));
        if (kind == "pow") return power_schema(std::stod(value));
    } catch (const std::logic_error&) {
        throw std::invalid_argument("bad schema value: " + value);
    }
    throw std::invalid_argument("unknown schema kind: " + kind);
}

bool comp_d(const BoundedSchema& schema, uint64_t n) {
    if (n < 4) return false;
    const uint64_t d = std::min(schema.bound(n), isqrt(n));
    for (uint64_t a = 2; a <= d; ++a)
        if (n % a == 0) return true;
    return false;
}

bool prime_d(const BoundedSchema& schema, uint64_t n) { return n > 1 && !comp_d(schema, n); }

std::vector<uint64_t> omissions(const BoundedSchema& schema, uint64_t N) {
    if (N < 2) throw std::invalid_argument("omissions requires N >= 2");
    const Sieve sieve(N);
    std::vector<uint64_t> out;
    for (uint64_t n = 4; n <= N; ++n)
        if (!sieve.is_prime(n) && !comp_d(schema, n)) out.push_back(n);
    return out;
}

std::vector<CurvePoint> omission_count_curve(uint64_t D, uint64_t N) {
    const std::vector<uint64_t> omitted = omissions(BoundedSchema::divisor_window_schema(D), N);
    std::vector<CurvePoint> curve;
    for (size_t i = 0; i < omitted.size(); ++i)
        curve.push_back(CurvePoint{omitted[i], i + 1});
    if (curve.empty() || curve.back().x != N)
        curve.push_back(CurvePoint{N, omitted.size()});
    return curve;
}

std::vector<FactorPair> farey_window(uint64_t n, uint64_t D) {
    if (n < 2 || D < 2) throw std::invalid_argument("farey window requires n >= 2 and D >= 2");
    std::vector<FactorPair> pairs;
    const uint64_t hi = std::min(D, isqrt(n));
    for (uint64_t a = 2; a <= hi; ++a)
        if (n % a == 0) pairs.push_back(FactorPair{a, n / a, n});
    return pairs;
}

std::optional<GeomWitness> delta_square(uint64_t n) {
    const std::optional<FactorPair> pair = comp_witness(n);
    if (!pair) return std::nullopt;
    return GeomWitness{pair->a, pair->b, n, 2 * (pair->a + pair->b)};
}

namespace {

void validate(const ForcingCondition& cond) {
    for (const FactorPair& f : cond.pairs)
        if (f.a < 2 || f.b < 2 || f.a * f.b != f.n)
            throw std::invalid_argument("malformed forcing condition");
}

}  // namespace

bool forces_comp(const ForcingCondition& cond, uint64_t n) {
    validate(cond);
    for (const FactorPair& f : cond.pairs)
        if (f.n == n) return true;
    return false;
}

bool forces_prime(const ForcingCondition& cond, uint64_t n) {
    validate(cond);
    // Any composite admits an extension containing its factorization, so
    // quantifying over all extensions collapses to primality of n itself.
    return is_prime_pi(n);
}

}  // namespace primelab::schema
