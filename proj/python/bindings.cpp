#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <fstream>
#include <sstream>

#include "epcd/baselines.hpp"
#include "epcd/detect.hpp"
#include "epcd/error.hpp"
#include "epcd/graph.hpp"
#include "epcd/metrics.hpp"
#include "epcd/models.hpp"
#include "epcd/objectives.hpp"
#include "epcd/spectral.hpp"

namespace py = pybind11;

namespace {

epcd::Graph graph_from_pairs(std::size_t n, const std::vector<std::pair<long long, long long>>& pairs) {
    std::vector<epcd::Edge> edges;
    edges.reserve(pairs.size());
    for (const auto& [u, v] : pairs) {
        if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n) {
            throw py::index_error("edge endpoint out of range");
        }
        edges.emplace_back(static_cast<epcd::NodeId>(u), static_cast<epcd::NodeId>(v));
    }
    return epcd::Graph::from_edges(n, edges);
}

}  // namespace

PYBIND11_MODULE(_epcd, m) {
    m.doc() = "Two-community detection by extreme points of the projected label cube";

    auto base = py::register_exception<epcd::Error>(m, "EpcdError", PyExc_RuntimeError);
    py::register_exception<epcd::ParseError>(m, "ParseError", base.ptr());
    py::register_exception<epcd::IoError>(m, "IoError", base.ptr());
    py::register_exception<epcd::EigenSolverError>(m, "EigenSolverError", base.ptr());

    py::class_<epcd::Graph>(m, "Graph")
        .def(py::init(&graph_from_pairs), py::arg("n"), py::arg("edges"))
        .def_property_readonly("num_nodes", &epcd::Graph::num_nodes)
        .def_property_readonly("num_edges", &epcd::Graph::num_edges)
        .def("degree", &epcd::Graph::degree)
        .def("neighbors",
             [](const epcd::Graph& g, epcd::NodeId i) {
                 auto nb = g.neighbors(i);
                 return std::vector<epcd::NodeId>(nb.begin(), nb.end());
             })
        .def("edges", &epcd::Graph::edges)
        .def("__eq__", &epcd::Graph::operator==)
        .def("__repr__", [](const epcd::Graph& g) {
            std::ostringstream s;
            s << "Graph(nodes=" << g.num_nodes() << ", edges=" << g.num_edges() << ")";
            return s.str();
        });

    m.def(
        "load_edge_list",
        [](const std::string& path) { return epcd::load_edge_list_file(path).graph; }, py::arg("path"));
    m.def(
        "parse_edge_list",
        [](const std::string& text) {
            std::istringstream in(text);
            return epcd::load_edge_list(in).graph;
        },
        py::arg("text"));
    m.def(
        "largest_connected_component",
        [](const epcd::Graph& g) {
            auto c = epcd::largest_connected_component(g);
            return py::make_tuple(std::move(c.graph), std::move(c.mapping));
        },
        py::arg("graph"));

    py::class_<epcd::Embedding>(m, "Embedding")
        .def_readonly("basis", &epcd::Embedding::basis)
        .def_readonly("tau", &epcd::Embedding::tau)
        .def_readonly("epsilon", &epcd::Embedding::epsilon)
        .def_readonly("eigenvalues", &epcd::Embedding::eigenvalues)
        .def_readonly("near_degenerate", &epcd::Embedding::near_degenerate);

    m.def("regularizer_tau", &epcd::regularizer_tau, py::arg("graph"), py::arg("epsilon") = epcd::kDefaultEpsilon);
    m.def("embedding", &epcd::embedding, py::arg("graph"), py::arg("epsilon") = epcd::kDefaultEpsilon,
          py::arg("tol") = epcd::kDefaultTolerance, py::arg("seed") = 1);

    m.def(
        "ep_detect",
        [](const epcd::Graph& g, const std::string& criterion, double epsilon, double tol, std::uint64_t seed) {
            const auto result = epcd::ep_detect(g, epcd::parse_criterion(criterion), {epsilon, tol, seed});
            py::dict out;
            out["labels"] = result.labels;
            out["objective"] = result.objective_value;
            out["candidates"] = result.candidates_evaluated;
            out["tie_broken"] = result.tie_broken;
            out["degenerate_nodes"] = result.diagnostics.degenerate_nodes;
            out["near_degenerate"] = result.diagnostics.near_degenerate_eigenpair;
            return out;
        },
        py::arg("graph"), py::arg("criterion") = "bm", py::arg("epsilon") = epcd::kDefaultEpsilon,
        py::arg("tol") = epcd::kDefaultTolerance, py::arg("seed") = 1);
    m.def(
        "aep_detect", [](const epcd::Embedding& e) { return epcd::aep_detect(e); }, py::arg("embedding"));
    m.def(
        "scr",
        [](const epcd::Graph& g, double epsilon, std::size_t restarts, double tol, std::uint64_t seed) {
            return epcd::scr(g, epsilon, restarts, tol, seed);
        },
        py::arg("graph"), py::arg("epsilon") = epcd::kDefaultEpsilon,
        py::arg("restarts") = epcd::kDefaultKMeansRestarts, py::arg("tol") = epcd::kDefaultTolerance,
        py::arg("seed") = 1);
    m.def("les", &epcd::les, py::arg("graph"), py::arg("epsilon") = epcd::kDefaultEpsilon,
          py::arg("tol") = epcd::kDefaultTolerance, py::arg("seed") = 1);

    m.def(
        "objective",
        [](const epcd::Graph& g, const std::vector<int>& labels, const std::string& criterion) {
            return epcd::evaluate(epcd::parse_criterion(criterion), epcd::block_counts(g, labels));
        },
        py::arg("graph"), py::arg("labels"), py::arg("criterion"));

    m.def(
        "nmi", [](const std::vector<int>& a, const std::vector<int>& b) { return epcd::nmi(a, b); }, py::arg("a"),
        py::arg("b"));
    m.def(
        "misclustered_fraction",
        [](const std::vector<int>& a, const std::vector<int>& b) { return epcd::misclustered_fraction(a, b); },
        py::arg("a"), py::arg("b"));

    m.def(
        "sample_dcsbm",
        [](std::size_t n1, std::size_t n2, double w1, double w2, double r, double lambda, double gamma,
           std::uint64_t seed) {
            epcd::SimConfig c;
            c.n1 = n1;
            c.n2 = n2;
            c.w1 = w1;
            c.w2 = w2;
            c.r = r;
            c.lambda = lambda;
            c.gamma = gamma;
            c.seed = seed;
            c.validate();
            auto s = epcd::sample_dcsbm(c);
            return py::make_tuple(std::move(s.graph), std::move(s.truth), std::move(s.theta));
        },
        py::arg("n1") = 150, py::arg("n2") = 150, py::arg("w1") = 1.0, py::arg("w2") = 1.0, py::arg("r") = 0.3,
        py::arg("lambda_") = 15.0, py::arg("gamma") = 0.0, py::arg("seed") = 1);

    m.def(
        "population_spectrum",
        [](double pi1, double pi2, double r, double omega, double lambda, std::size_t n) {
            const auto s = epcd::population_spectrum(pi1, pi2, r, omega, lambda, n);
            py::dict out;
            out["rho1"] = s.rho1;
            out["rho2"] = s.rho2;
            out["u1"] = s.u1;
            out["u2"] = s.u2;
            out["r1"] = s.r1;
            out["r2"] = s.r2;
            return out;
        },
        py::arg("pi1"), py::arg("pi2"), py::arg("r"), py::arg("omega"), py::arg("lambda_"), py::arg("n"));
}
