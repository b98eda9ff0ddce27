#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "flatcover/baselines.hpp"
#include "flatcover/format.hpp"
#include "flatcover/kernelizer.hpp"
#include "flatcover/reductions.hpp"
#include "flatcover/solver.hpp"
#include "flatcover/structure.hpp"

namespace py = pybind11;
using namespace flatcover;

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "Set Cover toolkit for semi-ladder-free hypergraphs";

    py::class_<Hypergraph>(mod, "Hypergraph")
        .def(py::init<>())
        .def(py::init([](int n, std::vector<Edge> edges) {
                 Hypergraph h{n, std::move(edges)};
                 h.check();
                 return h;
             }),
             py::arg("n"), py::arg("edges"))
        .def_readwrite("n", &Hypergraph::n)
        .def_readwrite("edges", &Hypergraph::edges)
        .def("__eq__", [](const Hypergraph& a, const Hypergraph& b) { return a == b; })
        .def("__repr__", [](const Hypergraph& h) {
            return "Hypergraph(n=" + std::to_string(h.n) +
                   ", m=" + std::to_string(h.edges.size()) + ")";
        });

    py::class_<Cover>(mod, "Cover")
        .def(py::init<>())
        .def(py::init([](std::vector<int> idx) { return Cover{std::move(idx)}; }),
             py::arg("edge_indices"))
        .def_readwrite("edge_indices", &Cover::edge_indices)
        .def("__len__", [](const Cover& c) { return c.edge_indices.size(); });

    py::class_<GroupStep>(mod, "GroupStep")
        .def_readonly("grouped_set", &GroupStep::grouped_set)
        .def_readonly("fresh_vertex", &GroupStep::fresh_vertex)
        .def_readonly("preimage", &GroupStep::preimage)
        .def_readonly("forward", &GroupStep::forward);

    py::class_<GroupTrace>(mod, "GroupTrace").def_readonly("steps", &GroupTrace::steps);

    mod.def("parse_hg", py::overload_cast<const std::string&>(&parse_hg));
    mod.def("serialize_hg", &serialize_hg);
    mod.def("parse_cover", py::overload_cast<const std::string&>(&parse_cover));
    mod.def("serialize_cover", &serialize_cover);

    mod.def("hg_size", &hg_size);
    mod.def("reduce", [](const Hypergraph& h) {
        ReduceResult r = reduce(h);
        return py::make_tuple(r.reduced, r.removed);
    });
    mod.def("is_reduced", &is_reduced);
    mod.def("dual", &dual);
    mod.def("group", [](const Hypergraph& h, const Edge& s) {
        GroupResult r = group(h, s);
        return py::make_tuple(r.grouped, r.step);
    });
    mod.def("verify_cover", &verify_cover);

    mod.def("members_K", &members_K);
    mod.def("closure_min", &closure_min);
    mod.def(
        "semi_ladder_index",
        [](const Hypergraph& h) { return semi_ladder_index(h); });
    mod.def("is_flat", [](const Hypergraph& h, int d) {
        FlatnessReport r = is_flat(h, d);
        return py::make_tuple(r.flat, r.semi_ladder_index, r.chain);
    });

    mod.def(
        "solve",
        [](const Hypergraph& h, int k, std::optional<int> d, std::optional<long long> budget) {
            SolveOptions opts;
            opts.flatness_hint = d;
            opts.node_budget = budget;
            SolveResult r = solve(h, k, opts);
            py::dict stats;
            stats["nodes"] = r.stats.nodes_visited;
            stats["depth"] = r.stats.max_depth;
            return py::make_tuple(r.cover, stats);
        },
        py::arg("h"), py::arg("k"), py::arg("d") = py::none(), py::arg("budget") = py::none());

    py::class_<KernelResult>(mod, "KernelResult")
        .def_readonly("kernel", &KernelResult::kernel)
        .def_readonly("trace", &KernelResult::trace)
        .def_readonly("rounds", &KernelResult::rounds)
        .def_readonly("warnings", &KernelResult::warnings);

    mod.def(
        "kernelize",
        [](const Hypergraph& h, int k, int d, bool check) {
            KernelOptions opts;
            opts.check = check;
            return kernelize(h, k, d, opts);
        },
        py::arg("h"), py::arg("k"), py::arg("d"), py::arg("check") = false);
    mod.def("lift_cover", &lift_cover);
    mod.def("push_cover", &push_cover);

    mod.def("brute_force_min_cover", [](const Hypergraph& h) {
        MinCoverResult r = brute_force_min_cover(h);
        if (!r.coverable) return py::make_tuple(py::none(), py::none());
        return py::make_tuple(py::cast(r.min_size), py::cast(r.cover));
    });
    mod.def("greedy_cover", &greedy_cover);

    mod.def(
        "gen",
        [](uint64_t seed, int n, int m, int d, const std::string& mode) {
            GenSpec spec;
            spec.seed = seed;
            spec.n = n;
            spec.m = m;
            spec.d = d;
            if (mode == "random-flat")
                spec.mode = GenMode::RandomFlat;
            else if (mode == "planted-cover")
                spec.mode = GenMode::PlantedCover;
            else if (mode == "unconstrained")
                spec.mode = GenMode::Unconstrained;
            else
                throw std::invalid_argument("unknown mode: " + mode);
            GenResult r = gen(spec);
            return py::make_tuple(r.hypergraph, r.planted);
        },
        py::arg("seed"), py::arg("n"), py::arg("m"), py::arg("d") = 1,
        py::arg("mode") = "unconstrained");

    py::class_<Literal>(mod, "Literal")
        .def_readonly("var", &Literal::var)
        .def_readonly("bit", &Literal::bit)
        .def("__repr__", [](const Literal& l) {
            return std::to_string(l.var) + ":" + std::to_string(l.bit);
        });

    py::class_<CCInstance>(mod, "CCInstance")
        .def_readonly("d", &CCInstance::d)
        .def_readonly("k", &CCInstance::k)
        .def_readonly("num_vars", &CCInstance::num_vars)
        .def_readonly("c1", &CCInstance::c1)
        .def_readonly("c2", &CCInstance::c2);

    mod.def("parse_cc", py::overload_cast<const std::string&>(&parse_cc));
    mod.def("serialize_cc", &serialize_cc);
    mod.def("cc_to_setcover", [](const CCInstance& inst) {
        SetCoverReduction r = cc_to_setcover(inst);
        return py::make_tuple(r.hypergraph, r.k_prime);
    });
}
