#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wos/estimator.hpp"
#include "wos/sampling.hpp"
#include "wos/special_functions.hpp"
#include "wos/validation_suite.hpp"
#include "wos/walker.hpp"

namespace py = pybind11;
using namespace wos;

PYBIND11_MODULE(_core, m) {
    m.doc() = "drifted walk-on-spheres solver for a*laplace(u) + b.grad(u) = 0";

    m.def("bessel_i", &sf::bessel_i, py::arg("v"), py::arg("z"),
          "modified Bessel function of the first kind I_v(z)");
    m.def("kappa", &sf::kappa, py::arg("d"), py::arg("z"),
          "exit-law normalizer (z/2)^{d/2-1} / (Gamma(d/2) I_{d/2-1}(z))");
    m.def("vmf_mean_resultant", &sf::vmf_mean_resultant, py::arg("d"), py::arg("kappa_c"));

    py::class_<Domain>(m, "Domain")
        .def_static("ball", &Domain::ball, py::arg("center"), py::arg("radius"))
        .def_static("box", &Domain::box, py::arg("lo"), py::arg("hi"))
        .def_static("annulus", &Domain::annulus, py::arg("center"), py::arg("r_inner"),
                    py::arg("r_outer"))
        .def("dim", &Domain::dim)
        .def("distance_to_boundary", &Domain::distance_to_boundary, py::arg("x"))
        .def("contains", &Domain::contains, py::arg("x"))
        .def("project_to_boundary", &Domain::project_to_boundary, py::arg("x"))
        .def("diameter", &Domain::diameter);

    py::class_<BoundaryFunction>(m, "BoundaryFunction")
        .def_static("constant", &BoundaryFunction::constant, py::arg("value"))
        .def_static("coordinate", &BoundaryFunction::coordinate, py::arg("axis"))
        .def_static("affine", &BoundaryFunction::affine, py::arg("offset"), py::arg("coeffs"))
        .def_static("exp_drift", &BoundaryFunction::exp_drift, py::arg("axis"), py::arg("rate"))
        .def_static("sum", &BoundaryFunction::sum, py::arg("terms"))
        .def("__call__", &BoundaryFunction::operator(), py::arg("x"));

    py::class_<ProblemSpec>(m, "ProblemSpec")
        .def(py::init([](double a, Point b, Domain dom, BoundaryFunction f) {
                 ProblemSpec p;
                 p.a = a;
                 p.b = std::move(b);
                 p.dom = std::move(dom);
                 p.f = std::move(f);
                 return p;
             }),
             py::arg("a"), py::arg("b"), py::arg("domain"), py::arg("boundary"))
        .def_readwrite("a", &ProblemSpec::a)
        .def_readwrite("b", &ProblemSpec::b)
        .def_readwrite("dom", &ProblemSpec::dom)
        .def_readwrite("f", &ProblemSpec::f);

    py::class_<WalkConfig>(m, "WalkConfig")
        .def(py::init<>())
        .def_readwrite("shrink", &WalkConfig::shrink)
        .def_readwrite("shell", &WalkConfig::shell)
        .def_readwrite("max_steps", &WalkConfig::max_steps)
        .def_readwrite("record_path", &WalkConfig::record_path);

    py::class_<Estimate>(m, "Estimate")
        .def_readonly("mean", &Estimate::mean)
        .def_readonly("std_error", &Estimate::std_error)
        .def_readonly("ci_lo", &Estimate::ci_lo)
        .def_readonly("ci_hi", &Estimate::ci_hi)
        .def_readonly("n_walks", &Estimate::n_walks)
        .def_readonly("n_budget_failures", &Estimate::n_budget_failures)
        .def_readonly("mean_steps", &Estimate::mean_steps)
        .def("degraded", &Estimate::degraded)
        .def("__repr__", [](const Estimate& e) {
            return "Estimate(mean=" + std::to_string(e.mean) +
                   ", std_error=" + std::to_string(e.std_error) + ")";
        });

    m.def("sample_uniform_sphere",
          [](int d, std::uint64_t seed, long n) {
              RngStream rng(seed, 0);
              std::vector<Point> out;
              out.reserve(static_cast<std::size_t>(n));
              for (long i = 0; i < n; ++i) out.push_back(sample_uniform_sphere(d, rng));
              return out;
          },
          py::arg("d"), py::arg("seed"), py::arg("n"));

    m.def("sample_exit",
          [](int d, double a, const Point& b, double r, long n, std::uint64_t seed) {
              const auto law = ExitLaw::make(d, r, b, 2.0 * a);
              std::vector<Point> out;
              out.reserve(static_cast<std::size_t>(n));
              for (long i = 0; i < n; ++i) {
                  RngStream rng(seed, static_cast<std::uint64_t>(i));
                  out.push_back(sample_exit(law, rng));
              }
              return out;
          },
          py::arg("d"), py::arg("a"), py::arg("b"), py::arg("r"), py::arg("n"), py::arg("seed"),
          "exact draws of the sphere-exit direction law");

    m.def("run_walk",
          [](const ProblemSpec& p, const Point& x, const WalkConfig& cfg, std::uint64_t seed,
             std::uint64_t stream) {
              RngStream rng(seed, stream);
              const auto out = run_walk(p, x, cfg, rng);
              py::dict d;
              d["exit_point"] = out.exit_point;
              d["steps"] = out.steps;
              d["budget_exhausted"] = out.terminated == Termination::BudgetExhausted;
              d["path"] = out.path;
              return d;
          },
          py::arg("problem"), py::arg("x"), py::arg("cfg"), py::arg("seed"),
          py::arg("stream") = 0);

    m.def("estimate_point", &estimate_point, py::arg("problem"), py::arg("x"), py::arg("cfg"),
          py::arg("n_walks"), py::arg("seed"), py::arg("workers") = 1,
          py::call_guard<py::gil_scoped_release>());

    m.def("estimate_grid",
          [](const ProblemSpec& p, const Point& lo, const Point& hi, std::vector<int> counts,
             const WalkConfig& cfg, long n_walks, std::uint64_t seed, int workers) {
              GridSpec g{lo, hi, std::move(counts)};
              const auto res = estimate_grid(p, g, cfg, n_walks, seed, workers);
              return py::make_tuple(res.nodes, res.skipped);
          },
          py::arg("problem"), py::arg("lo"), py::arg("hi"), py::arg("counts"), py::arg("cfg"),
          py::arg("n_walks"), py::arg("seed"), py::arg("workers") = 1);

    m.def("run_validation_suite",
          [](const std::string& selector) {
              py::list out;
              for (const auto& c : validation::run_suite(selector)) {
                  py::dict d;
                  d["name"] = c.name;
                  d["criterion"] = c.criterion;
                  d["pass"] = c.pass;
                  d["measured"] = c.measured;
                  d["threshold"] = c.threshold;
                  d["detail"] = c.detail;
                  out.append(std::move(d));
              }
              return out;
          },
          py::arg("selector"));
}
