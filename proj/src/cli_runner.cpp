#include "primelab/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "primelab/arith.hpp"
#include "primelab/beaver.hpp"
#include "primelab/format.hpp"
#include "primelab/goldbach.hpp"
#include "primelab/packing_tm.hpp"
#include "primelab/parallel.hpp"
#include "primelab/schema.hpp"
#include "primelab/stats.hpp"
#include "primelab/zeta.hpp"

namespace primelab::cli {
namespace {

using io::boolean;
using io::Cell;
using io::num;
using io::str;
using io::Table;
using ordered_json = nlohmann::ordered_json;

constexpr double kPi = 3.14159265358979323846;

// Later sections write either to the caller's stream or to --output.
class OutputTarget {
public:
    OutputTarget(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
        if (!path.empty() && path != "-") {
            file_.open(path);
            if (!file_) throw CantCreate(path);
            stream_ = &file_;
        }
    }

    std::ostream& get() { return *stream_; }

    struct CantCreate : std::runtime_error {
        explicit CantCreate(const std::string& path)
            : std::runtime_error("cannot open output path: " + path) {}
    };

private:
    std::ofstream file_;
    std::ostream* stream_;
};

std::complex<double> parse_complex(const std::string& text) {
    // "2", "2.5", or "2+0.5i" / "2-0.5i"
    std::string body = text;
    double im = 0.0;
    if (!body.empty() && (body.back() == 'i' || body.back() == 'I')) {
        body.pop_back();
        const size_t split = body.find_last_of("+-");
        if (split == std::string::npos || split == 0)
            throw std::invalid_argument("bad complex literal: " + text);
        im = std::stod(body.substr(split));
        body = body.substr(0, split);
    }
    size_t used = 0;
    const double re = std::stod(body, &used);
    if (used != body.size()) throw std::invalid_argument("bad complex literal: " + text);
    return {re, im};
}

schema::ForcingCondition parse_condition(const std::string& text) {
    // "2x3=6;5x5=25" -> {(2,3,6),(5,5,25)}; empty string is the empty condition
    schema::ForcingCondition cond;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) {
        if (item.empty()) continue;
        const size_t x = item.find('x');
        const size_t eq = item.find('=');
        if (x == std::string::npos || eq == std::string::npos || eq < x)
            throw std::invalid_argument("bad condition entry: " + item);
        FactorPair f;
        f.a = std::stoull(item.substr(0, x));
        f.b = std::stoull(item.substr(x + 1, eq - x - 1));
        f.n = std::stoull(item.substr(eq + 1));
        cond.pairs.push_back(f);
    }
    return cond;
}

std::string join_factors(const std::vector<FactorPair>& log) {
    std::string out;
    for (size_t i = 0; i < log.size(); ++i) {
        if (i) out += '|';
        out += std::to_string(log[i].a) + "x" + std::to_string(log[i].b);
    }
    return out;
}

// ---- shared option state ----

struct CommonOpts {
    std::string output;
    std::string format = "csv";
    unsigned jobs = 0;

    bool json() const { return format == "json"; }
    unsigned effective_jobs() const { return jobs == 0 ? default_jobs() : jobs; }
};

void add_common(CLI::App* cmd, CommonOpts& c, bool with_jobs) {
    cmd->add_option("--output", c.output, "write tables to this path instead of stdout");
    cmd->add_option("--format", c.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    if (with_jobs) cmd->add_option("--jobs", c.jobs, "worker threads (default: cores)");
}

void emit(const Table& t, const CommonOpts& c, std::ostream& fallback) {
    OutputTarget target(c.output, fallback);
    io::write_table(target.get(), t, c.json());
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    static const std::vector<std::string> kSubcommands = {"tm",       "beaver", "schema",
                                                          "goldbach", "zeta",   "stats"};
    if (!args.empty() && !args[0].empty() && args[0][0] != '-') {
        bool known = false;
        for (const auto& s : kSubcommands) known = known || s == args[0];
        if (!known) {
            err << "error: unknown subcommand '" << args[0] << "'\n";
            return kExitUsage;
        }
    }

    CLI::App app{"desk-scale laboratory for packing machines, witnesses and prime numerics"};
    app.require_subcommand(0, 1);

    // ---------------- tm ----------------
    CommonOpts tm_opts;
    uint64_t tm_n = 0, tm_census = 0, tm_fuel = 0;
    auto* tm = app.add_subcommand("tm", "three-tape packing machine");
    tm->add_option("--n", tm_n, "run a single input");
    tm->add_option("--census", tm_census, "run every 2 <= n <= N");
    tm->add_option("--fuel", tm_fuel, "transition budget (default 64*n^2)");
    add_common(tm, tm_opts, true);

    // ---------------- beaver ----------------
    CommonOpts bv_opts;
    uint64_t bv_n = 0, bv_profile = 0;
    bool bv_trace = false;
    auto* bv = app.add_subcommand("beaver", "divisor-search transition system");
    bv->add_option("--n", bv_n, "classify a single input");
    bv->add_flag("--trace", bv_trace, "emit the halting trace as JSON lines");
    bv->add_option("--profile", bv_profile, "max-steps profile for s = 2..S");
    add_common(bv, bv_opts, false);

    // ---------------- schema ----------------
    CommonOpts sc_opts;
    std::string sc_schema, sc_forces;
    uint64_t sc_limit = 0, sc_classify = 0, sc_farey = 0, sc_window = 0, sc_delta = 0,
             sc_forces_n = 0;
    bool sc_curve = false, sc_omissions = false;
    auto* sc = app.add_subcommand("schema", "bounded compositeness schemata");
    sc->add_option("--schema", sc_schema, "window:D or pow:alpha");
    sc->add_option("--limit", sc_limit, "range bound N");
    sc->add_flag("--omissions", sc_omissions, "list composites the schema misses (default)");
    sc->add_flag("--curve", sc_curve, "cumulative omission-count curve");
    sc->add_option("--classify", sc_classify, "comp_d/prime_d verdict for one n");
    sc->add_option("--farey", sc_farey, "bounded factor pairs of n");
    sc->add_option("--window", sc_window, "divisor bound D for --farey");
    sc->add_option("--delta-square", sc_delta, "geometric witness for one n");
    sc->add_option("--forces", sc_forces, "forcing condition, e.g. 2x3=6;5x5=25");
    sc->add_option("--forces-n", sc_forces_n, "target n for --forces");
    add_common(sc, sc_opts, false);

    // ---------------- goldbach ----------------
    CommonOpts gb_opts;
    uint64_t gb_n = 0, gb_scan = 0, gb_probe = 0, gb_equiv = 0, gb_cert = 0;
    std::string gb_rows, gb_summary;
    auto* gb = app.add_subcommand("goldbach", "witness extraction pipeline");
    gb->add_option("--n", gb_n, "witness for a single even n");
    gb->add_option("--scan", gb_scan, "summary statistics for evens up to N");
    gb->add_option("--rows", gb_rows, "also write per-n scan rows to this path");
    gb->add_option("--probe", gb_probe, "witness-cost table for evens up to N");
    gb->add_option("--summary", gb_summary, "also write probe summary JSON to this path");
    gb->add_option("--equiv", gb_equiv, "bare/certificate equivalence up to N");
    gb->add_option("--cert", gb_cert, "emit a primality certificate for prime p");
    add_common(gb, gb_opts, true);

    // ---------------- zeta ----------------
    CommonOpts zt_opts;
    std::string zt_s = "2";
    uint64_t zt_partial = 0, zt_product = 0, zt_mu = 0, zt_lambda = 0, zt_lfp = 0,
             zt_factor = 0, zt_limit = 0, zt_primes = 0;
    bool zt_smooth = false, zt_logderiv = false, zt_reflect = false;
    auto* zt = app.add_subcommand("zeta", "euler-product and fixed-point numerics");
    zt->add_option("--s", zt_s, "exponent, real or a+bi (default 2)");
    zt->add_option("--partial", zt_partial, "partial sum to N");
    zt->add_option("--product", zt_product, "truncated euler product over p <= P");
    zt->add_flag("--smooth", zt_smooth, "smooth-number sum (needs --primes and --limit)");
    zt->add_option("--mu", zt_mu, "multiplicative weight of n");
    zt->add_option("--lambda", zt_lambda, "von Mangoldt value of n");
    zt->add_flag("--logderiv", zt_logderiv,
                 "compare both routes to -zeta'/zeta (needs --limit and --primes)");
    zt->add_flag("--reflect", zt_reflect, "functional-equation spot check at s = -1");
    zt->add_option("--lfp", zt_lfp, "least-fixed-point compositeness closure up to N");
    zt->add_option("--factor", zt_factor, "prime-power slices (exponent vector) of n");
    zt->add_option("--limit", zt_limit, "range bound N");
    zt->add_option("--primes", zt_primes, "prime bound P");
    add_common(zt, zt_opts, false);

    // ---------------- stats ----------------
    CommonOpts st_opts;
    bool st_phi = false;
    double st_tol = 1e-12, st_kb = 1.0;
    uint64_t st_depth = 0, st_depth_table = 0, st_tiling = 0, st_entropy = 0, st_rho = 0,
             st_grad = 0, st_harmonic = 0, st_cost = 0, st_pi = 0, st_limit = 0,
             st_window = 0;
    std::string st_layer, st_pred;
    auto* st = app.add_subcommand("stats", "entropy, density and depth heuristics");
    st->add_flag("--phi", st_phi, "golden-ratio fixed point");
    st->add_option("--tol", st_tol, "fixed-point tolerance (default 1e-12)");
    st->add_option("--kb", st_kb, "normalizing constant k_B (default 1)");
    st->add_option("--depth", st_depth, "floor-sqrt chain of n");
    st->add_option("--depth-table", st_depth_table, "depth rows for powers of two up to N");
    st->add_option("--layer", st_layer, "bounded quantifier layer: sigma or pi")
        ->check(CLI::IsMember({"sigma", "pi"}));
    st->add_option("--pred", st_pred, "base predicate: prime, square or even")
        ->check(CLI::IsMember({"prime", "square", "even"}));
    st->add_option("--limit", st_limit, "range bound N");
    st->add_option("--tiling", st_tiling, "tiling counts of n");
    st->add_option("--entropy", st_entropy, "entropy series up to N");
    st->add_option("--rho", st_rho, "occupation fraction at x");
    st->add_option("--rho-gradient", st_grad, "density slope at x");
    st->add_option("--window", st_window, "gradient half-window (default max(1, x/100))");
    st->add_option("--harmonic", st_harmonic, "harmonic prime sum at x");
    st->add_option("--cost", st_cost, "cost of knowledge at prime p");
    st->add_option("--pi", st_pi, "prime count at x");
    add_common(st, st_opts, false);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitPrecondition;
    }

    try {
        if (tm->parsed()) {
            Table t;
            t.header = {"n", "outcome", "a", "b", "steps", "head_moves"};
            auto row = [](const packing::CensusRow& r) {
                return std::vector<Cell>{num(r.n), str(packing::outcome_name(r.outcome)),
                                         num(r.a), num(r.b), num(r.steps), num(r.head_moves)};
            };
            if (tm_n != 0) {
                const auto res =
                    packing::tm_run(tm_n, tm_fuel == 0 ? packing::default_fuel(tm_n) : tm_fuel);
                t.rows.push_back(
                    row({tm_n, res.outcome, res.a, res.b, res.steps, res.head_moves}));
            } else if (tm_census != 0) {
                for (const auto& r :
                     packing::tm_runtime_census(tm_census, tm_fuel, tm_opts.effective_jobs()))
                    t.rows.push_back(row(r));
            } else {
                throw std::invalid_argument("tm needs --n or --census");
            }
            emit(t, tm_opts, out);
            return kExitOk;
        }

        if (bv->parsed()) {
            if (bv_profile != 0) {
                Table t;
                t.header = {"s", "max_steps", "argmax_n"};
                for (const auto& r : beaver::pb_profile_table(bv_profile))
                    t.rows.push_back({num(r.s), num(r.max_steps), num(r.argmax_n)});
                emit(t, bv_opts, out);
                return kExitOk;
            }
            if (bv_n == 0) throw std::invalid_argument("beaver needs --n or --profile");
            const auto res = beaver::beaver_run(bv_n);
            if (bv_trace) {
                OutputTarget target(bv_opts.output, out);
                for (const auto& cfg : res.trace.configs) {
                    ordered_json line;
                    line["n"] = cfg.current;
                    line["k"] = cfg.divisor;
                    line["stack"] = ordered_json::array();
                    for (const auto& sub : cfg.stack)
                        line["stack"].push_back({sub.value, sub.divisor_start});
                    line["steps"] = cfg.steps;
                    target.get() << line.dump() << "\n";
                }
                return kExitOk;
            }
            Table t;
            t.header = {"n", "classification", "steps", "factors", "trace_verified"};
            t.rows.push_back({num(bv_n), str(beaver::classification_name(res.classification)),
                              num(res.steps), str(join_factors(res.factor_log)),
                              boolean(beaver::trace_verify(bv_n, res.trace))});
            emit(t, bv_opts, out);
            return kExitOk;
        }

        if (sc->parsed()) {
            Table t;
            if (sc_classify != 0) {
                const auto schema_obj = schema::BoundedSchema::parse(sc_schema);
                t.header = {"n", "comp_d", "prime_d"};
                t.rows.push_back({num(sc_classify),
                                  boolean(schema::comp_d(schema_obj, sc_classify)),
                                  boolean(schema::prime_d(schema_obj, sc_classify))});
            } else if (sc_farey != 0) {
                if (sc_window == 0) throw std::invalid_argument("--farey needs --window");
                t.header = {"a", "b", "n"};
                for (const auto& f : schema::farey_window(sc_farey, sc_window))
                    t.rows.push_back({num(f.a), num(f.b), num(f.n)});
            } else if (sc_delta != 0) {
                t.header = {"a", "b", "area", "perimeter"};
                if (const auto w = schema::delta_square(sc_delta))
                    t.rows.push_back({num(w->a), num(w->b), num(w->area), num(w->perimeter)});
            } else if (!sc_forces.empty() || sc_forces_n != 0) {
                if (sc_forces_n == 0) throw std::invalid_argument("--forces needs --forces-n");
                const auto cond = parse_condition(sc_forces);
                t.header = {"n", "forces_comp", "forces_prime"};
                t.rows.push_back({num(sc_forces_n),
                                  boolean(schema::forces_comp(cond, sc_forces_n)),
                                  boolean(schema::forces_prime(cond, sc_forces_n))});
            } else if (sc_curve) {
                if (sc_limit == 0) throw std::invalid_argument("--curve needs --limit");
                const auto schema_obj = schema::BoundedSchema::parse(sc_schema);
                if (schema_obj.kind != schema::BoundedSchema::Kind::divisor_window)
                    throw std::invalid_argument("--curve needs a window schema");
                t.header = {"x", "count"};
                for (const auto& p : schema::omission_count_curve(schema_obj.window, sc_limit))
                    t.rows.push_back({num(p.x), num(p.count)});
            } else {
                if (sc_limit == 0) throw std::invalid_argument("schema needs --limit");
                const auto schema_obj = schema::BoundedSchema::parse(sc_schema);
                t.header = {"n"};
                for (uint64_t n : schema::omissions(schema_obj, sc_limit))
                    t.rows.push_back({num(n)});
            }
            emit(t, sc_opts, out);
            return kExitOk;
        }

        if (gb->parsed()) {
            if (gb_cert != 0) {
                const PrattCert cert = pratt_generate(gb_cert);
                ordered_json doc;
                doc["p"] = gb_cert;
                doc["generator"] = cert.generator;
                doc["cert"] = pratt_to_string(cert);
                doc["size"] = pratt_size(cert);
                doc["verified"] = pratt_verify(gb_cert, cert);
                OutputTarget target(gb_opts.output, out);
                target.get() << doc.dump(2) << "\n";
                return kExitOk;
            }
            if (gb_equiv != 0) {
                const Sieve sieve(gb_equiv);
                Table t;
                t.header = {"limit", "equivalent"};
                t.rows.push_back(
                    {num(gb_equiv), boolean(goldbach::wgc_equivalence_check(gb_equiv, sieve))});
                emit(t, gb_opts, out);
                return kExitOk;
            }
            if (gb_n != 0) {
                const Sieve sieve(gb_n);
                const auto res = goldbach::extract(gb_n, sieve);
                Table t;
                t.header = {"n", "p", "q", "search_steps", "cert_size"};
                if (const auto* w = std::get_if<goldbach::WitnessRecord>(&res)) {
                    t.rows.push_back(
                        {num(w->n), num(w->p), num(w->q), num(w->search_steps), num(w->cert_size)});
                } else {
                    const auto& c = std::get<goldbach::CounterexampleReport>(res);
                    t.rows.push_back({num(c.n), num(uint64_t{0}), num(uint64_t{0}),
                                      num(c.search_steps), num(uint64_t{0})});
                }
                emit(t, gb_opts, out);
                return kExitOk;
            }
            if (gb_scan == 0 && gb_probe == 0)
                throw std::invalid_argument("goldbach needs --n, --scan, --probe, --equiv or --cert");
            const uint64_t limit = gb_scan != 0 ? gb_scan : gb_probe;
            const Sieve sieve(limit);
            Table rows_table;
            rows_table.header = {"n", "p", "q", "search_steps", "cert_size"};
            goldbach::RowSink sink = [&](const goldbach::ScanRow& r) {
                rows_table.rows.push_back(
                    {num(r.n), num(r.p), num(r.q), num(r.search_steps), num(r.cert_size)});
            };
            const auto stats =
                goldbach::scan(limit, sieve, gb_opts.effective_jobs(), sink);
            ordered_json summary;
            summary["limit"] = limit;
            summary["max_minimal_p"] = stats.max_minimal_p;
            summary["argmax_n"] = stats.argmax_n;
            summary["failures"] = stats.failures;
            summary["max_search_steps"] = stats.max_search_steps;
            summary["argmax_search_steps_n"] = stats.argmax_search_steps_n;
            summary["max_cert_size"] = stats.max_cert_size;
            summary["argmax_cert_size_n"] = stats.argmax_cert_size_n;
            ordered_json hist = ordered_json::object();
            for (const auto& [p, count] : stats.histogram) hist[std::to_string(p)] = count;
            summary["histogram"] = hist;
            if (gb_scan != 0) {
                if (!gb_rows.empty()) {
                    OutputTarget rows_target(gb_rows, out);
                    io::write_table(rows_target.get(), rows_table, gb_opts.json());
                }
                OutputTarget target(gb_opts.output, out);
                target.get() << summary.dump(2) << "\n";
            } else {
                if (!gb_summary.empty()) {
                    OutputTarget summary_target(gb_summary, out);
                    summary_target.get() << summary.dump(2) << "\n";
                }
                emit(rows_table, gb_opts, out);
            }
            return kExitOk;
        }

        if (zt->parsed()) {
            const std::complex<double> s = parse_complex(zt_s);
            const bool s_is_two = s.real() == 2.0 && s.imag() == 0.0;
            const double zeta2 = kPi * kPi / 6.0;
            Table t;
            t.header = {"quantity", "parameters", "value", "reference", "delta"};
            auto compare_row = [&](const std::string& name, const std::string& params,
                                   std::complex<double> value,
                                   std::optional<double> reference) {
                std::vector<Cell> row{str(name), str(params), num(value)};
                if (reference) {
                    row.push_back(num(*reference));
                    row.push_back(num(value.real() - *reference));
                } else {
                    row.push_back(str(""));
                    row.push_back(str(""));
                }
                t.rows.push_back(row);
            };
            if (zt_partial != 0) {
                const auto v = zeta::zeta_partial(s, zt_partial);
                compare_row("zeta_partial", "s=" + io::fmt_complex(s) + ";N=" + std::to_string(zt_partial),
                            v, s_is_two ? std::optional<double>(zeta2) : std::nullopt);
            } else if (zt_product != 0) {
                const Sieve sieve(zt_product);
                const auto v = zeta::euler_product_truncated(s, zt_product, sieve);
                compare_row("euler_product", "s=" + io::fmt_complex(s) + ";P=" + std::to_string(zt_product),
                            v, s_is_two ? std::optional<double>(zeta2) : std::nullopt);
            } else if (zt_smooth) {
                if (zt_primes == 0 || zt_limit == 0)
                    throw std::invalid_argument("--smooth needs --primes and --limit");
                const Sieve sieve(zt_primes);
                const auto v = zeta::smooth_sum(s, zt_primes, zt_limit, sieve);
                const auto ref = zeta::euler_product_truncated(s, zt_primes, sieve);
                compare_row("smooth_sum",
                            "s=" + io::fmt_complex(s) + ";P=" + std::to_string(zt_primes) +
                                ";N=" + std::to_string(zt_limit),
                            v, ref.imag() == 0.0 ? std::optional<double>(ref.real()) : std::nullopt);
            } else if (zt_mu != 0) {
                compare_row("mu_s", "s=" + io::fmt_complex(s) + ";n=" + std::to_string(zt_mu),
                            zeta::mu_s(zt_mu, s), std::nullopt);
            } else if (zt_lambda != 0) {
                compare_row("von_mangoldt", "n=" + std::to_string(zt_lambda),
                            zeta::von_mangoldt(zt_lambda), std::nullopt);
            } else if (zt_logderiv) {
                if (zt_primes == 0 || zt_limit == 0)
                    throw std::invalid_argument("--logderiv needs --primes and --limit");
                if (s.imag() != 0.0)
                    throw std::invalid_argument("--logderiv takes a real s");
                const Sieve sieve(zt_primes);
                const auto r = zeta::log_deriv_compare(s.real(), zt_limit, zt_primes, sieve);
                t.rows.push_back({str("log_deriv"),
                                  str("s=" + io::fmt_double(s.real()) + ";N=" + std::to_string(zt_limit) +
                                      ";P=" + std::to_string(zt_primes)),
                                  num(r.lhs), num(r.rhs), num(r.delta)});
            } else if (zt_reflect) {
                const double v = zeta::reflection_check();
                const double ref = -1.0 / 12.0;
                t.rows.push_back({str("reflection"), str("s=-1"), num(v), num(ref), num(v - ref)});
            } else if (zt_lfp != 0) {
                const auto res = zeta::comp_lfp(zt_lfp);
                Table members;
                members.header = {"n"};
                for (uint64_t n : res.members) members.rows.push_back({num(n)});
                err << "passes=" << res.passes << "\n";
                emit(members, zt_opts, out);
                return kExitOk;
            } else if (zt_factor != 0) {
                Table slices;
                slices.header = {"p", "exponent"};
                for (const auto& [p, e] : factorize(zt_factor).entries)
                    slices.rows.push_back({num(p), num(uint64_t{e})});
                emit(slices, zt_opts, out);
                return kExitOk;
            } else {
                throw std::invalid_argument("zeta needs one of --partial/--product/--smooth/--mu/"
                                            "--lambda/--logderiv/--reflect/--lfp/--factor");
            }
            emit(t, zt_opts, out);
            return kExitOk;
        }

        if (st->parsed()) {
            Table t;
            if (st_phi) {
                const auto r = stats::phi_fixed_point(1.0, st_tol);
                t.header = {"value", "iterations"};
                t.rows.push_back({num(r.value), num(uint64_t{r.iterations})});
            } else if (st_depth != 0) {
                const auto d = stats::depth(st_depth);
                std::string chain;
                for (size_t i = 0; i < d.chain.size(); ++i)
                    chain += (i ? "|" : "") + std::to_string(d.chain[i]);
                t.header = {"n", "k", "chain"};
                t.rows.push_back({num(d.start), num(uint64_t{d.k}), str(chain)});
            } else if (st_depth_table != 0) {
                t.header = {"n", "k", "log_phi_n", "log2_log2_n"};
                for (const auto& r : stats::depth_table(st_depth_table))
                    t.rows.push_back(
                        {num(r.n), num(uint64_t{r.k}), num(r.log_phi_n), num(r.log2_log2_n)});
            } else if (!st_layer.empty()) {
                if (st_pred.empty() || st_limit == 0)
                    throw std::invalid_argument("--layer needs --pred and --limit");
                std::vector<uint8_t> pred(st_limit + 1);
                for (uint64_t x = 0; x <= st_limit; ++x) {
                    if (st_pred == "prime")
                        pred[x] = is_prime_pi(x);
                    else if (st_pred == "square")
                        pred[x] = isqrt(x) * isqrt(x) == x;
                    else
                        pred[x] = x % 2 == 0;
                }
                const auto layered = stats::bounded_layer(
                    pred, st_layer == "sigma" ? stats::QuantMode::sigma : stats::QuantMode::pi);
                t.header = {"x", "pred", "layered"};
                for (uint64_t x = 0; x <= st_limit; ++x)
                    t.rows.push_back({num(x), boolean(pred[x]), boolean(layered[x])});
            } else if (st_tiling != 0) {
                const auto w = stats::tiling_count(st_tiling);
                t.header = {"n", "w_total", "w_nontrivial"};
                t.rows.push_back({num(st_tiling), num(w.total), num(w.nontrivial)});
            } else if (st_entropy != 0) {
                t.header = {"n", "w_total",       "w_nontrivial", "s_total",
                            "s_nontrivial", "ratio_total", "ratio_nontrivial"};
                auto ratio_cell = [](const std::optional<double>& r) {
                    return r ? num(*r) : str("undef");
                };
                for (const auto& r : stats::entropy_series(st_entropy, st_kb))
                    t.rows.push_back({num(r.n), num(r.w_total), num(r.w_nontrivial),
                                      num(r.s_total), num(r.s_nontrivial),
                                      ratio_cell(r.ratio_total), ratio_cell(r.ratio_nontrivial)});
            } else if (st_rho != 0) {
                const Sieve sieve(st_rho);
                const auto r = stats::rho(sieve, st_rho);
                t.header = {"x", "rho", "approx", "ratio"};
                t.rows.push_back({num(st_rho), num(r.value), num(r.approx), num(r.ratio)});
            } else if (st_grad != 0) {
                const uint64_t window = st_window == 0 ? std::max<uint64_t>(1, st_grad / 100)
                                                       : st_window;
                const Sieve sieve(st_grad + window);
                const auto g = stats::rho_gradient(sieve, st_grad, st_window);
                t.header = {"x", "window", "empirical_slope", "formula_slope"};
                t.rows.push_back({num(st_grad), num(g.window), num(g.empirical), num(g.formula)});
            } else if (st_harmonic != 0) {
                const Sieve sieve(st_harmonic);
                const auto h = stats::harmonic_prime_sum(sieve, st_harmonic);
                t.header = {"x", "h", "loglog", "delta"};
                t.rows.push_back({num(st_harmonic), num(h.h), num(h.loglog), num(h.delta)});
            } else if (st_cost != 0) {
                t.header = {"p", "cost"};
                t.rows.push_back({num(st_cost), num(stats::cost_of_knowledge(st_cost, st_kb))});
            } else if (st_pi != 0) {
                const Sieve sieve(st_pi);
                t.header = {"x", "pi"};
                t.rows.push_back({num(st_pi), num(sieve.prime_count(st_pi))});
            } else {
                throw std::invalid_argument("stats needs an action flag");
            }
            emit(t, st_opts, out);
            return kExitOk;
        }

        out << app.help();
        return kExitOk;
    } catch (const OutputTarget::CantCreate& e) {
        err << "error: " << e.what() << "\n";
        return kExitCantCreate;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitPrecondition;
    }
}

}  // namespace primelab::cli
