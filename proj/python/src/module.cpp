#include <sstream>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rieszap/cli.hpp"
#include "rieszap/constructions.hpp"
#include "rieszap/errors.hpp"
#include "rieszap/io.hpp"
#include "rieszap/numtheory.hpp"
#include "rieszap/spectral.hpp"
#include "rieszap/torus.hpp"

namespace py = pybind11;
using namespace rieszap;

namespace {

IntervalSet make_set(const std::vector<std::pair<double, double>>& arcs) { return IntervalSet::normalize(arcs); }

py::dict block_dict(const LambdaBlock& b) {
    py::dict d;
    d["n"] = b.spec.n;
    d["step"] = b.spec.step;
    d["length"] = b.spec.length;
    d["shift"] = b.spec.shift;
    d["cert_lambda_min"] = b.cert_lambda_min;
    d["target"] = b.target;
    if (b.alpha) d["alpha"] = *b.alpha;
    if (b.step_sum) d["step_sum"] = *b.step_sum;
    return d;
}

py::dict build_dict(const LambdaBuild& b) {
    py::dict d;
    d["gamma"] = b.gamma;
    py::list blocks;
    for (const auto& blk : b.blocks) blocks.append(block_dict(blk));
    d["blocks"] = blocks;
    d["frequencies"] = b.frequencies().values();
    d["json"] = io::build_to_json(b).dump();
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Riesz bounds for exponential systems on finite unions of arcs";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<InputError>(m, "InputError", base.ptr());
    py::register_exception<SearchError>(m, "SearchError", base.ptr());

    py::class_<IntervalSet>(m, "IntervalSet")
        .def(py::init(&make_set), py::arg("arcs"))
        .def_static("full_circle", &IntervalSet::full_circle)
        .def_property_readonly("measure", &IntervalSet::measure)
        .def_property_readonly("arcs",
                               [](const IntervalSet& s) {
                                   std::vector<std::pair<double, double>> out;
                                   for (const auto& a : s.arcs()) out.emplace_back(a.start, a.end);
                                   return out;
                               })
        .def("__contains__", [](const IntervalSet& s, double x) { return contains(s, x); })
        .def("__eq__", [](const IntervalSet& a, const IntervalSet& b) { return a == b; })
        .def("complement", [](const IntervalSet& s) { return complement(s); })
        .def("to_json", [](const IntervalSet& s) { return io::set_to_json(s).dump(); })
        .def("__repr__", [](const IntervalSet& s) {
            std::ostringstream o;
            o << "IntervalSet(measure=" << s.measure() << ", arcs=" << s.arcs().size() << ")";
            return o.str();
        });

    m.def("scale_periodize", &scale_periodize, py::arg("delta"), py::arg("ell"));
    m.def("fourier_coeff", &fourier_coeff, py::arg("set"), py::arg("k"));
    m.def("quadrature_coeff", &quadrature_coeff, py::arg("set"), py::arg("k"), py::arg("points_per_unit"));
    m.def(
        "fourier_coeffs",
        [](const IntervalSet& s, std::int64_t k_max, unsigned threads) {
            const auto t = fourier_table(s, k_max, threads);
            std::vector<Complex> out;
            for (std::int64_t k = 0; k <= k_max; ++k) out.push_back(t(k));
            return out;
        },
        py::arg("set"), py::arg("k_max"), py::arg("threads") = 1, "c(k) for k = 0..k_max");

    m.def(
        "gram",
        [](const IntervalSet& s, std::vector<std::int64_t> freqs) {
            return gram(s, FrequencySet(std::move(freqs))).entries();
        },
        py::arg("set"), py::arg("freqs"));

    py::class_<RieszReport>(m, "RieszReport")
        .def_readonly("lower", &RieszReport::lower)
        .def_readonly("upper", &RieszReport::upper)
        .def_readonly("cs_lower", &RieszReport::cs_lower)
        .def_readonly("offdiag_energy", &RieszReport::offdiag_energy)
        .def_readonly("size", &RieszReport::size);
    m.def(
        "riesz_report",
        [](const IntervalSet& s, std::vector<std::int64_t> freqs, unsigned threads) {
            return riesz_report(s, FrequencySet(std::move(freqs)), threads);
        },
        py::arg("set"), py::arg("freqs"), py::arg("threads") = 1);
    m.def("uniform_rayleigh_progression", &uniform_rayleigh_progression, py::arg("set"), py::arg("step"),
          py::arg("length"), py::arg("threads") = 1);
    m.def("dirichlet_tail", &dirichlet_tail, py::arg("n"), py::arg("delta"), py::arg("threads") = 1);
    m.def("dirichlet_tail_bound", &dirichlet_tail_bound, py::arg("n"), py::arg("delta"));

    py::class_<DeltaSchedule>(m, "DeltaSchedule")
        .def(py::init<double>(), py::arg("epsilon"))
        .def_property_readonly("epsilon", &DeltaSchedule::epsilon)
        .def_property_readonly("normalizer", &DeltaSchedule::normalizer)
        .def("__call__", &DeltaSchedule::operator(), py::arg("ell"));
    m.def(
        "build_adversarial_set", [](double eps, std::int64_t l_max) { return build_adversarial_set(eps, l_max); },
        py::arg("epsilon"), py::arg("l_max"));

    py::class_<Theorem1Cell>(m, "Theorem1Cell")
        .def_readonly("ell", &Theorem1Cell::ell)
        .def_readonly("n", &Theorem1Cell::n)
        .def_readonly("delta", &Theorem1Cell::delta)
        .def_readonly("rayleigh_uniform", &Theorem1Cell::rayleigh_uniform)
        .def_readonly("tail", &Theorem1Cell::tail)
        .def_readonly("tail_bound", &Theorem1Cell::tail_bound);
    m.def("theorem1", &cli::run_theorem1, py::arg("epsilon"), py::arg("l_max"), py::arg("ells"), py::arg("ns"),
          py::arg("threads") = 1, "Grid of theorem 1 cells, sorted by (ell, N)");

    m.def("block", [](std::int64_t n) { return block(n).values(); }, py::arg("n"));
    m.def(
        "good_n_search",
        [](const IntervalSet& s, double eps, std::int64_t n_lo, std::int64_t n_hi, unsigned threads) {
            return good_n_search(fourier_table(s, n_hi * n_hi, threads), eps, n_lo, n_hi);
        },
        py::arg("set"), py::arg("eps"), py::arg("n_lo"), py::arg("n_hi"), py::arg("threads") = 1);
    m.def(
        "build_thm2",
        [](const IntervalSet& s, std::size_t count, double eps, std::int64_t n_hi, unsigned threads) {
            Thm2Config cfg;
            cfg.eps = eps;
            cfg.n_hi = n_hi;
            cfg.threads = threads;
            return build_dict(build_lambda_thm2(s, count, cfg));
        },
        py::arg("set"), py::arg("count") = 3, py::arg("eps") = 0.075, py::arg("n_hi") = 2000, py::arg("threads") = 1);
    m.def(
        "build_thm3",
        [](const IntervalSet& s, std::vector<double> alphas, std::vector<std::vector<std::int64_t>> lengths,
           unsigned threads) {
            Thm3Config cfg;
            cfg.alphas = std::move(alphas);
            cfg.lengths = std::move(lengths);
            cfg.threads = threads;
            return build_dict(build_lambda_thm3(s, cfg));
        },
        py::arg("set"), py::arg("alphas"), py::arg("lengths"), py::arg("threads") = 1);

    m.def("primes", [](std::int64_t limit) { return sieve_primes(limit).primes(); }, py::arg("limit"));
    m.def(
        "divisor_counts",
        [](std::int64_t limit) {
            const auto d = sieve_divisors(limit);
            std::vector<std::uint32_t> out;
            for (std::int64_t k = 1; k <= limit; ++k) out.push_back(d[k]);
            return out;
        },
        py::arg("limit"), "d(k) for k = 1..limit");

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run a CLI command in-process; returns (exit_code, stdout, stderr)");
}
