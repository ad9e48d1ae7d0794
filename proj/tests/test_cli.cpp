#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "primelab/cli.hpp"

using primelab::cli::run_cli;

namespace {

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult invoke(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    CliResult res;
    res.code = run_cli(args, out, err);
    res.out = out.str();
    res.err = err.str();
    return res;
}

}  // namespace

TEST_CASE("tm subcommand emits the fixed census header and row") {
    const CliResult r = invoke({"tm", "--n", "9", "--fuel", "1000000"});
    REQUIRE(r.code == 0);
    REQUIRE(r.out.substr(0, r.out.find('\n')) == "n,outcome,a,b,steps,head_moves");
    REQUIRE(r.out.find("9,accepted,3,3,") != std::string::npos);
}

TEST_CASE("schema subcommand reproduces the window-3 omission") {
    const CliResult r = invoke({"schema", "--schema", "window:3", "--limit", "30"});
    REQUIRE(r.code == 0);
    REQUIRE(r.out == "n\n25\n");
}

TEST_CASE("stats --phi prints the golden ratio") {
    const CliResult r = invoke({"stats", "--phi", "--tol", "1e-12"});
    REQUIRE(r.code == 0);
    const size_t nl = r.out.find('\n');
    const std::string value = r.out.substr(nl + 1, r.out.find(',', nl) - nl - 1);
    REQUIRE(std::abs(std::stod(value) - 1.618033988749895) < 1e-12);
}

TEST_CASE("unknown subcommands exit 64") {
    const CliResult r = invoke({"frobnicate", "--n", "4"});
    REQUIRE(r.code == 64);
    REQUIRE(r.err.find("unknown subcommand") != std::string::npos);
    REQUIRE(r.out.empty());
}

TEST_CASE("precondition violations exit 2 with a one-line diagnostic") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"tm", "--n", "1"},
             {"beaver", "--n", "0"},
             {"schema", "--schema", "window:1", "--limit", "30"},
             {"schema", "--schema", "nope:3", "--limit", "30"},
             {"goldbach", "--n", "7"},
             {"goldbach", "--cert", "9"},
             {"zeta", "--partial", "10", "--s", "1.0"},
             {"stats", "--cost", "4"},
             {"tm"},
         }) {
        const CliResult r = invoke(args);
        REQUIRE(r.code == 2);
        REQUIRE(r.err.find("error:") == 0);
        REQUIRE(std::count(r.err.begin(), r.err.end(), '\n') == 1);
    }
}

TEST_CASE("unwritable output paths exit 74") {
    const CliResult r =
        invoke({"tm", "--n", "4", "--output", "/nonexistent-dir/census.csv"});
    REQUIRE(r.code == 74);
    REQUIRE(r.err.find("cannot open output path") != std::string::npos);
}

TEST_CASE("help succeeds") {
    REQUIRE(invoke({"--help"}).code == 0);
    REQUIRE(invoke({}).code == 0);
}

TEST_CASE("json format mirrors the csv tables") {
    const CliResult csv = invoke({"stats", "--tiling", "6"});
    const CliResult json = invoke({"stats", "--tiling", "6", "--format", "json"});
    REQUIRE(csv.out == "n,w_total,w_nontrivial\n6,4,2\n");
    REQUIRE(json.out.find("\"w_total\":4") != std::string::npos);
    REQUIRE(json.out.find("\"w_nontrivial\":2") != std::string::npos);
}

TEST_CASE("beaver trace export is one json object per config") {
    const CliResult r = invoke({"beaver", "--n", "6", "--trace"});
    REQUIRE(r.code == 0);
    REQUIRE(r.out.find("{\"n\":6,\"k\":2,\"stack\":[],\"steps\":0}") == 0);
    REQUIRE(std::count(r.out.begin(), r.out.end(), '\n') == 3);  // 6 halts in 2 steps
}

TEST_CASE("every module operation is reachable through a subcommand") {
    // op -> invocation map; each must succeed and produce output.
    const std::vector<std::pair<std::string, std::vector<std::string>>> mapping = {
        {"arith.comp_witness", {"schema", "--delta-square", "21"}},
        {"arith.is_prime_pi", {"beaver", "--n", "97"}},
        {"arith.sieve", {"stats", "--pi", "1000"}},
        {"arith.factorize", {"zeta", "--factor", "360"}},
        {"arith.pratt_generate", {"goldbach", "--cert", "97"}},
        {"arith.pratt_verify", {"goldbach", "--cert", "97"}},
        {"packing.tm_init", {"tm", "--n", "4"}},
        {"packing.tm_step", {"tm", "--n", "4"}},
        {"packing.tm_run", {"tm", "--n", "12"}},
        {"packing.tm_runtime_census", {"tm", "--census", "50"}},
        {"beaver.beaver_step", {"beaver", "--n", "12"}},
        {"beaver.beaver_run", {"beaver", "--n", "12"}},
        {"beaver.trace_verify", {"beaver", "--n", "12"}},
        {"beaver.pb_profile", {"beaver", "--profile", "40"}},
        {"schema.comp_d", {"schema", "--classify", "25", "--schema", "window:3"}},
        {"schema.prime_d", {"schema", "--classify", "25", "--schema", "window:3"}},
        {"schema.omissions", {"schema", "--schema", "window:3", "--limit", "30"}},
        {"schema.omission_count_curve", {"schema", "--curve", "--schema", "window:3", "--limit", "100"}},
        {"schema.farey_window", {"schema", "--farey", "12", "--window", "3"}},
        {"schema.delta_square", {"schema", "--delta-square", "6"}},
        {"schema.forces_comp", {"schema", "--forces", "2x3=6", "--forces-n", "6"}},
        {"schema.forces_prime", {"schema", "--forces", "", "--forces-n", "7"}},
        {"goldbach.extract", {"goldbach", "--n", "28"}},
        {"goldbach.verify_witness", {"goldbach", "--scan", "40"}},
        {"goldbach.wgc_equivalence_check", {"goldbach", "--equiv", "60"}},
        {"goldbach.scan", {"goldbach", "--scan", "40"}},
        {"goldbach.uniformity_probe", {"goldbach", "--probe", "40"}},
        {"zeta.mu_s", {"zeta", "--mu", "4", "--s", "2"}},
        {"zeta.zeta_partial", {"zeta", "--partial", "1000", "--s", "2"}},
        {"zeta.euler_product_truncated", {"zeta", "--product", "100", "--s", "2"}},
        {"zeta.smooth_sum", {"zeta", "--smooth", "--primes", "3", "--limit", "1000", "--s", "2"}},
        {"zeta.von_mangoldt", {"zeta", "--lambda", "8"}},
        {"zeta.log_deriv_compare", {"zeta", "--logderiv", "--limit", "1000", "--primes", "1000", "--s", "2"}},
        {"zeta.reflection_check", {"zeta", "--reflect"}},
        {"zeta.comp_lfp", {"zeta", "--lfp", "20"}},
        {"stats.phi_fixed_point", {"stats", "--phi"}},
        {"stats.depth", {"stats", "--depth", "65536"}},
        {"stats.depth_table", {"stats", "--depth-table", "1024"}},
        {"stats.bounded_layer", {"stats", "--layer", "sigma", "--pred", "prime", "--limit", "10"}},
        {"stats.tiling_count", {"stats", "--tiling", "6"}},
        {"stats.entropy_series", {"stats", "--entropy", "12"}},
        {"stats.rho", {"stats", "--rho", "1000"}},
        {"stats.rho_gradient", {"stats", "--rho-gradient", "1000"}},
        {"stats.harmonic_prime_sum", {"stats", "--harmonic", "1000"}},
        {"stats.cost_of_knowledge", {"stats", "--cost", "101"}},
        {"cli.dispatch", {"tm", "--n", "4"}},
    };
    for (const auto& [op, args] : mapping) {
        INFO(op);
        const CliResult r = invoke(args);
        REQUIRE(r.code == 0);
        REQUIRE_FALSE(r.out.empty());
    }
}

TEST_CASE("identical configs produce byte-identical output") {
    const std::vector<std::vector<std::string>> configs = {
        {"tm", "--census", "200", "--jobs", "4"},
        {"goldbach", "--scan", "300", "--jobs", "3"},
        {"goldbach", "--probe", "120"},
        {"zeta", "--partial", "100000", "--s", "2"},
        {"stats", "--entropy", "40"},
        {"beaver", "--profile", "60"},
        {"schema", "--schema", "pow:0.4", "--limit", "500"},
    };
    for (const auto& args : configs) {
        const CliResult a = invoke(args);
        const CliResult b = invoke(args);
        REQUIRE(a.code == 0);
        REQUIRE(a.out == b.out);
        REQUIRE_FALSE(a.out.empty());
    }
    // job count must not leak into the bytes
    const CliResult serial = invoke({"tm", "--census", "200", "--jobs", "1"});
    const CliResult parallel = invoke({"tm", "--census", "200", "--jobs", "8"});
    REQUIRE(serial.out == parallel.out);
}

TEST_CASE("goldbach cert action emits a verified certificate document") {
    const CliResult r = invoke({"goldbach", "--cert", "7"});
    REQUIRE(r.code == 0);
    REQUIRE(r.out.find("\"cert\": \"7:3(2^1=2:1,3^1=3:2(2^1=2:1))\"") != std::string::npos);
    REQUIRE(r.out.find("\"verified\": true") != std::string::npos);
}
