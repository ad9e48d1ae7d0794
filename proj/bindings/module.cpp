#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "primelab/arith.hpp"
#include "primelab/beaver.hpp"
#include "primelab/goldbach.hpp"
#include "primelab/packing_tm.hpp"
#include "primelab/schema.hpp"
#include "primelab/stats.hpp"
#include "primelab/zeta.hpp"

namespace py = pybind11;

using namespace primelab;

namespace {

py::dict witness_to_dict(const goldbach::WitnessRecord& w) {
    py::dict d;
    d["n"] = w.n;
    d["p"] = w.p;
    d["q"] = w.q;
    d["cert_p"] = pratt_to_string(w.cert_p);
    d["cert_q"] = pratt_to_string(w.cert_q);
    d["search_steps"] = w.search_steps;
    d["cert_size"] = w.cert_size;
    d["counterexample"] = false;
    return d;
}

}  // namespace

PYBIND11_MODULE(_primelab, m) {
    m.doc() = "packing machines, prime witnesses and zeta numerics";

    // ---- arithmetic core ----
    py::class_<Sieve>(m, "Sieve")
        .def(py::init<uint64_t>(), py::arg("limit"))
        .def_property_readonly("limit", &Sieve::limit)
        .def("is_prime", &Sieve::is_prime, py::arg("n"))
        .def("prime_count", &Sieve::prime_count, py::arg("x"))
        .def("primes", &Sieve::primes);

    py::class_<PrattCert::Factor>(m, "PrattFactor")
        .def_readwrite("prime", &PrattCert::Factor::prime)
        .def_readwrite("exponent", &PrattCert::Factor::exponent)
        .def_readwrite("cert", &PrattCert::Factor::cert);

    py::class_<PrattCert>(m, "PrattCert")
        .def(py::init<>())
        .def_readwrite("p", &PrattCert::p)
        .def_readwrite("generator", &PrattCert::generator)
        .def_readwrite("factor_certs", &PrattCert::factor_certs)
        .def("__str__", &pratt_to_string);

    m.def("is_prime", &is_prime_pi, py::arg("n"), "bounded-search primality test");
    m.def(
        "comp_witness",
        [](uint64_t n) -> py::object {
            const auto w = comp_witness(n);
            if (!w) return py::none();
            return py::make_tuple(w->a, w->b);
        },
        py::arg("n"), "least factor pair (a, b) or None");
    m.def(
        "factorize",
        [](uint64_t n) {
            py::dict d;
            for (const auto& [p, e] : factorize(n).entries) d[py::int_(p)] = e;
            return d;
        },
        py::arg("n"));
    m.def("pratt_generate", &pratt_generate, py::arg("p"));
    m.def("pratt_verify", &pratt_verify, py::arg("p"), py::arg("cert"));

    // ---- packing machine ----
    m.def(
        "tm_run",
        [](uint64_t n, uint64_t fuel) {
            const auto r = packing::tm_run(n, fuel == 0 ? packing::default_fuel(n) : fuel);
            py::dict d;
            d["outcome"] = packing::outcome_name(r.outcome);
            d["a"] = r.a;
            d["b"] = r.b;
            d["steps"] = r.steps;
            d["head_moves"] = r.head_moves;
            return d;
        },
        py::arg("n"), py::arg("fuel") = 0, "run the packing machine on 1^n");

    // ---- prime beaver ----
    m.def(
        "beaver_run",
        [](uint64_t n) {
            const auto r = beaver::beaver_run(n, beaver::TraceMode::none);
            py::dict d;
            d["classification"] = beaver::classification_name(r.classification);
            d["steps"] = r.steps;
            py::list log;
            for (const auto& f : r.factor_log) log.append(py::make_tuple(f.a, f.b, f.n));
            d["factor_log"] = log;
            return d;
        },
        py::arg("n"));
    m.def(
        "pb_profile",
        [](uint64_t s) {
            const auto p = beaver::pb_profile(s);
            return py::make_tuple(p.max_steps, p.argmax_n);
        },
        py::arg("s"));

    // ---- bounded schemata ----
    m.def(
        "comp_d",
        [](const std::string& spec, uint64_t n) {
            return schema::comp_d(schema::BoundedSchema::parse(spec), n);
        },
        py::arg("schema"), py::arg("n"), "schema spec: 'window:D' or 'pow:alpha'");
    m.def(
        "prime_d",
        [](const std::string& spec, uint64_t n) {
            return schema::prime_d(schema::BoundedSchema::parse(spec), n);
        },
        py::arg("schema"), py::arg("n"));
    m.def(
        "omissions",
        [](const std::string& spec, uint64_t N) {
            return schema::omissions(schema::BoundedSchema::parse(spec), N);
        },
        py::arg("schema"), py::arg("limit"));
    m.def(
        "farey_window",
        [](uint64_t n, uint64_t D) {
            py::list out;
            for (const auto& f : schema::farey_window(n, D))
                out.append(py::make_tuple(f.a, f.b));
            return out;
        },
        py::arg("n"), py::arg("window"));
    m.def(
        "delta_square",
        [](uint64_t n) -> py::object {
            const auto w = schema::delta_square(n);
            if (!w) return py::none();
            py::dict d;
            d["a"] = w->a;
            d["b"] = w->b;
            d["area"] = w->area;
            d["perimeter"] = w->perimeter;
            return d;
        },
        py::arg("n"));

    // ---- goldbach pipeline ----
    m.def(
        "extract",
        [](const Sieve& sieve, uint64_t n) {
            const auto res = goldbach::extract(n, sieve);
            if (const auto* w = std::get_if<goldbach::WitnessRecord>(&res))
                return witness_to_dict(*w);
            const auto& c = std::get<goldbach::CounterexampleReport>(res);
            py::dict d;
            d["n"] = c.n;
            d["search_steps"] = c.search_steps;
            d["counterexample"] = true;
            return d;
        },
        py::arg("sieve"), py::arg("n"), "minimal-p certified witness for even n");
    m.def(
        "extract_verified",
        [](const Sieve& sieve, uint64_t n) {
            const auto res = goldbach::extract(n, sieve);
            const auto* w = std::get_if<goldbach::WitnessRecord>(&res);
            return w != nullptr && goldbach::verify_witness(*w);
        },
        py::arg("sieve"), py::arg("n"));
    m.def("wgc_equivalence_check", &goldbach::wgc_equivalence_check, py::arg("limit"),
          py::arg("sieve"));

    // ---- zeta numerics ----
    m.def("mu_s", &zeta::mu_s, py::arg("n"), py::arg("s"));
    m.def("zeta_partial", &zeta::zeta_partial, py::arg("s"), py::arg("limit"));
    m.def("euler_product_truncated", &zeta::euler_product_truncated, py::arg("s"),
          py::arg("prime_bound"), py::arg("sieve"));
    m.def("smooth_sum", &zeta::smooth_sum, py::arg("s"), py::arg("prime_bound"),
          py::arg("limit"), py::arg("sieve"));
    m.def("von_mangoldt", &zeta::von_mangoldt, py::arg("n"));
    m.def(
        "log_deriv_compare",
        [](double s, uint64_t N, uint64_t P, const Sieve& sieve) {
            const auto r = zeta::log_deriv_compare(s, N, P, sieve);
            return py::make_tuple(r.lhs, r.rhs, r.delta);
        },
        py::arg("s"), py::arg("limit"), py::arg("prime_bound"), py::arg("sieve"));
    m.def("reflection_check", &zeta::reflection_check);
    m.def(
        "comp_lfp",
        [](uint64_t N) {
            const auto r = zeta::comp_lfp(N);
            return py::make_tuple(r.members, r.passes);
        },
        py::arg("limit"));

    // ---- statistics ----
    m.def(
        "phi_fixed_point",
        [](double x0, double tol) {
            const auto r = stats::phi_fixed_point(x0, tol);
            return py::make_tuple(r.value, r.iterations);
        },
        py::arg("x0") = 1.0, py::arg("tol") = 1e-12);
    m.def(
        "depth",
        [](uint64_t n) {
            const auto d = stats::depth(n);
            py::dict out;
            out["start"] = d.start;
            out["chain"] = d.chain;
            out["k"] = d.k;
            return out;
        },
        py::arg("n"));
    m.def(
        "bounded_layer",
        [](const std::vector<uint8_t>& pred, const std::string& mode) {
            if (mode != "sigma" && mode != "pi")
                throw std::invalid_argument("mode must be 'sigma' or 'pi'");
            return stats::bounded_layer(
                pred, mode == "sigma" ? stats::QuantMode::sigma : stats::QuantMode::pi);
        },
        py::arg("pred"), py::arg("mode"));
    m.def(
        "tiling_count",
        [](uint64_t n) {
            const auto c = stats::tiling_count(n);
            return py::make_tuple(c.total, c.nontrivial);
        },
        py::arg("n"));
    m.def(
        "rho",
        [](const Sieve& sieve, uint64_t x) {
            const auto r = stats::rho(sieve, x);
            return py::make_tuple(r.value, r.approx, r.ratio);
        },
        py::arg("sieve"), py::arg("x"));
    m.def(
        "rho_gradient",
        [](const Sieve& sieve, uint64_t x, uint64_t window) {
            const auto g = stats::rho_gradient(sieve, x, window);
            return py::make_tuple(g.empirical, g.formula, g.window);
        },
        py::arg("sieve"), py::arg("x"), py::arg("window") = 0);
    m.def(
        "harmonic_prime_sum",
        [](const Sieve& sieve, uint64_t x) {
            const auto h = stats::harmonic_prime_sum(sieve, x);
            return py::make_tuple(h.h, h.loglog, h.delta);
        },
        py::arg("sieve"), py::arg("x"));
    m.def("cost_of_knowledge", &stats::cost_of_knowledge, py::arg("p"), py::arg("k_b") = 1.0);
}
