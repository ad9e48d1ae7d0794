#include "primelab/stats.hpp"

#include <cmath>
#include <stdexcept>

namespace primelab::stats {
namespace {

constexpr double kPhi = 1.6180339887498948;

}  // namespace

PhiResult phi_fixed_point(double x0, double tol) {
    if (!(x0 > 0) || !(tol > 0)) throw std::invalid_argument("requires x0 > 0 and tol > 0");
    PhiResult res;
    double x = x0;
    for (;;) {
        const double next = 1.0 + 1.0 / x;
        ++res.iterations;
        const double diff = std::abs(next - x);
        x = next;
        if (diff < tol) break;
        if (res.iterations > 10'000) throw std::runtime_error("fixed point did not settle");
    }
    res.value = x;
    return res;
}

DepthTrace depth(uint64_t n) {
    if (n < 2) throw std::invalid_argument("depth requires n >= 2");
    DepthTrace t;
    t.start = n;
    t.chain.push_back(n);
    while (t.chain.back() > 2) {
        t.chain.push_back(isqrt(t.chain.back()));
        ++t.k;
    }
    return t;
}

std::vector<DepthRow> depth_table(uint64_t N) {
    if (N < 2) throw std::invalid_argument("depth table requires N >= 2");
    std::vector<DepthRow> rows;
    for (uint64_t n = 2; n <= N; n *= 2) {
        DepthRow row;
        row.n = n;
        row.k = depth(n).k;
        const double ln_n = std::log(static_cast<double>(n));
        row.log_phi_n = ln_n / std::log(kPhi);
        row.log2_log2_n = std::log2(std::log2(static_cast<double>(n)));
        rows.push_back(row);
        if (n > N / 2) break;  // avoid overflow on n *= 2
    }
    return rows;
}

std::vector<uint8_t> bounded_layer(const std::vector<uint8_t>& pred, QuantMode mode) {
    std::vector<uint8_t> out(pred.size());
    bool acc = (mode == QuantMode::pi);
    for (size_t x = 0; x < pred.size(); ++x) {
        if (mode == QuantMode::sigma)
            acc = acc || pred[x] != 0;
        else
            acc = acc && pred[x] != 0;
        out[x] = acc ? 1 : 0;
    }
    return out;
}

TilingCount tiling_count(uint64_t n) {
    if (n < 1) throw std::invalid_argument("tiling count requires n >= 1");
    TilingCount c;
    for (uint64_t a = 1; a * a <= n; ++a) {
        if (n % a == 0) {
            c.total += (a * a == n) ? 1 : 2;  // (a, n/a) and (n/a, a)
        }
    }
    c.nontrivial = (n >= 2 && c.total >= 2) ? c.total - 2 : 0;
    return c;
}

std::vector<EntropyRow> entropy_series(uint64_t N, double k_b) {
    if (N < 4) throw std::invalid_argument("entropy series requires N >= 4");
    if (!(k_b > 0)) throw std::invalid_argument("requires k_B > 0");
    std::vector<EntropyRow> rows(N);
    for (uint64_t n = 1; n <= N; ++n) {
        const TilingCount w = tiling_count(n);
        EntropyRow& row = rows[n - 1];
        row.n = n;
        row.w_total = w.total;
        row.w_nontrivial = w.nontrivial;
        row.s_total = k_b * std::log(static_cast<double>(w.total));
        row.s_nontrivial =
            w.nontrivial == 0 ? 0.0 : k_b * std::log(static_cast<double>(w.nontrivial));
    }
    auto ratio = [](double s0, double s1, double s2) -> std::optional<double> {
        const double den = s1 - s0;
        if (den == 0.0) return std::nullopt;
        return (s2 - s1) / den;
    };
    for (uint64_t n = 1; n + 2 <= N; ++n) {
        EntropyRow& row = rows[n - 1];
        row.ratio_total = ratio(row.s_total, rows[n].s_total, rows[n + 1].s_total);
        row.ratio_nontrivial =
            ratio(row.s_nontrivial, rows[n].s_nontrivial, rows[n + 1].s_nontrivial);
    }
    return rows;
}

RhoResult rho(const Sieve& sieve, uint64_t x) {
    if (x < 3) throw std::invalid_argument("rho requires x >= 3");
    if (x > sieve.limit()) throw std::out_of_range("sieve does not cover x");
    const double pi_x = static_cast<double>(sieve.prime_count(x));
    RhoResult r;
    r.value = pi_x / (static_cast<double>(x) - pi_x);
    r.approx = 1.0 / (std::log(static_cast<double>(x)) - 1.0);
    r.ratio = r.value / r.approx;
    return r;
}

RhoGradient rho_gradient(const Sieve& sieve, uint64_t x, uint64_t window) {
    if (x < 10) throw std::invalid_argument("rho gradient requires x >= 10");
    RhoGradient g;
    g.window = window == 0 ? std::max<uint64_t>(1, x / 100) : window;
    if (x - g.window < 3 || x + g.window > sieve.limit())
        throw std::out_of_range("gradient window outside sieve range");
    const double hi = rho(sieve, x + g.window).value;
    const double lo = rho(sieve, x - g.window).value;
    g.empirical = (hi - lo) / (2.0 * static_cast<double>(g.window));
    const double lnx = std::log(static_cast<double>(x));
    g.formula = -1.0 / (static_cast<double>(x) * (lnx - 1.0) * (lnx - 1.0));
    return g;
}

HarmonicResult harmonic_prime_sum(const Sieve& sieve, uint64_t x) {
    if (x < 3) throw std::invalid_argument("harmonic prime sum requires x >= 3");
    if (x > sieve.limit()) throw std::out_of_range("sieve does not cover x");
    HarmonicResult r;
    for (uint64_t p : sieve.primes()) {
        if (p > x) break;
        r.h += 1.0 / static_cast<double>(p);
    }
    r.loglog = std::log(std::log(static_cast<double>(x)));
    r.delta = r.h - r.loglog;
    return r;
}

double cost_of_knowledge(uint64_t p, double k_b) {
    if (p < 3 || !is_prime_pi(p)) throw std::invalid_argument("requires a prime p >= 3");
    if (!(k_b > 0)) throw std::invalid_argument("requires k_B > 0");
    return k_b / std::log(static_cast<double>(p));
}

}  // namespace primelab::stats
