// Python bindings for the main operations: parsing and canonical forms,
// moves, search, invariants, capacity, and factorization.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "inca/canonical.hpp"
#include "inca/capacity.hpp"
#include "inca/coloring.hpp"
#include "inca/errors.hpp"
#include "inca/fingerprint.hpp"
#include "inca/graph.hpp"
#include "inca/io.hpp"
#include "inca/linking.hpp"
#include "inca/moves.hpp"
#include "inca/quandle.hpp"
#include "inca/search.hpp"
#include "inca/sum.hpp"
#include "inca/theta.hpp"
#include "inca/wcode.hpp"

namespace py = pybind11;
using namespace inca;

namespace {

SearchBudget make_budget(int depth, int states, bool stable, bool use_false) {
    return SearchBudget{depth, states, stable, use_false};
}

py::dict verdict_dict(const GaussDiagram& start, const Verdict& v) {
    py::dict out;
    out["verdict"] = verdict_name(v.kind);
    if (v.yes()) {
        py::list moves;
        GaussDiagram cur = canonical(start).diagram;
        for (const auto& inst : v.witness) {
            moves.append(describe(inst, cur));
            cur = canonical(apply(cur, inst)).diagram;
        }
        out["moves"] = moves;
    }
    if (v.no()) out["certificate"] = v.certificate;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Gauss-diagram calculus for Inca foams";

    py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);
    py::register_exception<invalid_diagram>(m, "InvalidDiagram", PyExc_ValueError);
    py::register_exception<not_applicable>(m, "NotApplicable", PyExc_ValueError);
    py::register_exception<resource_limit>(m, "ResourceLimit", PyExc_RuntimeError);
    py::register_exception<numerical_failure>(m, "NumericalFailure", PyExc_RuntimeError);

    py::class_<GaussDiagram>(m, "GaussDiagram")
        .def("__repr__",
             [](const GaussDiagram& d) {
                 std::ostringstream out;
                 out << "GaussDiagram(components=" << d.component_count()
                     << ", interactions=" << d.interaction_count() << ")";
                 return out.str();
             })
        .def("__eq__", [](const GaussDiagram& a, const GaussDiagram& b) { return a == b; })
        .def_property_readonly("component_count", &GaussDiagram::component_count)
        .def_property_readonly("vertex_count", &GaussDiagram::vertex_count)
        .def_property_readonly("interaction_count", &GaussDiagram::interaction_count);

    py::class_<MultiQuandle>(m, "MultiQuandle")
        .def_readonly("name", &MultiQuandle::name)
        .def_readonly("size", &MultiQuandle::size)
        .def("__repr__", [](const MultiQuandle& q) {
            return "MultiQuandle(" + q.name + ", size=" + std::to_string(q.size) + ")";
        });

    py::class_<MoveInstance>(m, "MoveInstance")
        .def("__repr__", [](const MoveInstance& inst) {
            return std::string("MoveInstance(") + move_kind_name(inst.kind) + ")";
        });

    py::class_<SimpleGraph>(m, "SimpleGraph")
        .def(py::init<int>())
        .def("add_edge", &SimpleGraph::add_edge)
        .def("adjacent", &SimpleGraph::adjacent)
        .def_property_readonly("size", &SimpleGraph::size)
        .def_property_readonly("edges", &SimpleGraph::edge_count)
        .def_static("cycle", &SimpleGraph::cycle)
        .def_static("complete", &SimpleGraph::complete)
        .def_static("edgeless", &SimpleGraph::edgeless);

    m.def("parse", &parse_diagram, py::arg("text"), "Parse an 'inca v1' document.");
    m.def("serialize", &serialize, py::arg("diagram"));
    m.def("validate", [](const GaussDiagram& d) { return validate(d); });
    m.def("canonical_code", &canonical_code);
    m.def("canonicalize", [](const GaussDiagram& d) { return canonical(d).diagram; });
    m.def("underlying_graph_code", [](const GaussDiagram& d) { return underlying_graph(d).code; });
    m.def("export_dot", &export_dot);

    m.def(
        "random_diagram",
        [](const std::vector<std::pair<std::string, int>>& components, int interactions, int marks,
           std::uint64_t seed) {
            RandomSpec spec;
            for (const auto& [kind, size] : components)
                spec.components.emplace_back(
                    kind == "cycle" ? ComponentKind::Cycle : ComponentKind::Path, size);
            spec.interactions = interactions;
            spec.marks = marks;
            spec.seed = seed;
            return random_diagram(spec);
        },
        py::arg("components"), py::arg("interactions") = 0, py::arg("marks") = 0,
        py::arg("seed") = 0);

    m.def("quandle", &quandle_from_spec, py::arg("spec"),
          "Builtin family 'trivial:n' / 'dihedral:n' or a table document.");
    m.def("validate_quandle", &validate_quandle);
    m.def("count_colorings", &count_colorings, py::arg("diagram"), py::arg("quandle"));
    m.def("presentation_text",
          [](const GaussDiagram& d) { return quandle_presentation(d).text(); });

    m.def(
        "linking_code",
        [](const GaussDiagram& d, const std::string& variant) {
            return linking_graph(d, linking_variant_from_name(variant)).code;
        },
        py::arg("diagram"), py::arg("variant") = "reduced-unframed");
    m.def("w_code", [](const GaussDiagram& d) { return w_code(d).text; });
    m.def("fingerprint_digest", [](const GaussDiagram& d) { return fingerprint(d).digest(); });

    m.def(
        "enumerate_moves",
        [](const GaussDiagram& d, bool stable, bool use_false, bool include_adds) {
            return enumerate_moves(d, all_move_kinds(stable, use_false), include_adds);
        },
        py::arg("diagram"), py::arg("stable") = true, py::arg("use_false") = false,
        py::arg("include_adds") = true);
    m.def("describe_move", &describe, py::arg("move"), py::arg("diagram"));
    m.def("apply_move", &apply, py::arg("diagram"), py::arg("move"));
    m.def("inverse_move", &inverse_of, py::arg("diagram"), py::arg("move"));

    m.def(
        "simplify",
        [](const GaussDiagram& d, int depth, int states, bool stable) {
            return simplify(d, make_budget(depth, states, stable, false));
        },
        py::arg("diagram"), py::arg("depth") = 16, py::arg("states") = 20000,
        py::arg("stable") = false);
    m.def(
        "equivalent",
        [](const GaussDiagram& a, const GaussDiagram& b, int depth, int states, bool stable,
           bool use_false, int workers) {
            return verdict_dict(a, equivalent(a, b, make_budget(depth, states, stable, use_false),
                                              workers));
        },
        py::arg("a"), py::arg("b"), py::arg("depth") = 6, py::arg("states") = 20000,
        py::arg("stable") = false, py::arg("use_false") = false, py::arg("workers") = 1);
    m.def(
        "is_trivial",
        [](const GaussDiagram& d, int depth, int states, bool stable) {
            return verdict_dict(d, is_trivial(d, make_budget(depth, states, stable, false)));
        },
        py::arg("diagram"), py::arg("depth") = 6, py::arg("states") = 20000,
        py::arg("stable") = true);

    py::class_<Factor>(m, "Factor")
        .def_readonly("diagram", &Factor::diagram)
        .def_property_readonly("agent",
                               [](const Factor& f) {
                                   return py::make_tuple(f.agent.component, f.agent.position);
                               })
        .def_property_readonly("trivial",
                               [](const Factor& f) { return verdict_name(f.triviality.kind); })
        .def("__repr__", [](const Factor& f) {
            return "Factor(interactions=" + std::to_string(f.diagram.interaction_count()) +
                   ", trivial=" + verdict_name(f.triviality.kind) + ")";
        });
    py::class_<Factorization>(m, "Factorization")
        .def_readonly("factors", &Factorization::factors)
        .def_readonly("units", &Factorization::units)
        .def_readonly("exhaustive", &Factorization::exhaustive)
        .def_property_readonly("base_code",
                               [](const Factorization& f) { return f.base.code; })
        .def("__repr__", [](const Factorization& f) {
            return "Factorization(factors=" + std::to_string(f.factors.size()) +
                   ", units=" + std::to_string(f.units.size()) + ")";
        });
    m.def(
        "prime_factorize",
        [](const GaussDiagram& d, int depth, int states, bool stable) {
            return prime_factorize(d, make_budget(depth, states, stable, false));
        },
        py::arg("diagram"), py::arg("depth") = 4, py::arg("states") = 3000,
        py::arg("stable") = true);
    m.def(
        "factors_match",
        [](const Factorization& a, const Factorization& b, int depth, int states, bool stable) {
            Verdict v = factors_match(a, b, make_budget(depth, states, stable, false));
            py::dict out;
            out["verdict"] = verdict_name(v.kind);
            if (v.no()) out["certificate"] = v.certificate;
            return out;
        },
        py::arg("a"), py::arg("b"), py::arg("depth") = 4, py::arg("states") = 2000,
        py::arg("stable") = true);
    m.def(
        "trivial_agents",
        [](const GaussDiagram& d, int depth, int states, bool stable) {
            auto r = trivial_agents(d, make_budget(depth, states, stable, false));
            py::dict out;
            py::list certified;
            for (const auto& v : r.certified)
                certified.append(py::make_tuple(v.component, v.position));
            out["certified"] = certified;
            out["nontrivial_lower_bound"] = r.nontrivial_lower_bound;
            out["exhaustive"] = r.exhaustive;
            return out;
        },
        py::arg("diagram"), py::arg("depth") = 3, py::arg("states") = 1000,
        py::arg("stable") = false);
    m.def(
        "reduced_graph_code",
        [](const GaussDiagram& d, int depth, int states, bool stable) {
            return reduced_graph(d, make_budget(depth, states, stable, false)).graph.code;
        },
        py::arg("diagram"), py::arg("depth") = 3, py::arg("states") = 1000,
        py::arg("stable") = false);
    m.def("connect_sum", &connect_sum);
    m.def(
        "split",
        [](const GaussDiagram& d, const std::vector<std::pair<int, int>>& agents) {
            std::vector<VertexRef> refs;
            for (auto [c, p] : agents) refs.push_back({c, p});
            return split(d, refs);
        },
        py::arg("diagram"), py::arg("agents"));

    m.def("automorphism_count",
          [](const MultiQuandle& q) { return automorphisms(q).size(); });
    m.def("automorphisms", [](const MultiQuandle& q) { return automorphisms(q); });
    m.def(
        "realized_triples",
        [](const GaussDiagram& d, const MultiQuandle& q) {
            std::vector<std::tuple<int, int, int>> out;
            for (const auto& t : realized_triples(d, q)) out.emplace_back(t[0], t[1], t[2]);
            return out;
        },
        py::arg("diagram"), py::arg("quandle"));
    m.def(
        "message_graph",
        [](const GaussDiagram& d, const MultiQuandle& q, int k, bool use_automorphisms,
           bool use_triples, int limit) {
            return message_graph(d, q, k, MessagePolicy{use_automorphisms, use_triples}, limit);
        },
        py::arg("diagram"), py::arg("quandle"), py::arg("k"), py::arg("use_automorphisms") = true,
        py::arg("use_triples") = false, py::arg("limit") = 512);
    m.def(
        "cap_report",
        [](const GaussDiagram& d, const MultiQuandle& q, int kmax, bool use_automorphisms,
           bool use_triples, int limit) {
            auto r = cap_report(d, q, kmax, MessagePolicy{use_automorphisms, use_triples}, limit);
            py::dict out;
            out["cap"] = r.cap;
            out["lower_bound"] = r.lower_bound;
            out["alphabet"] = r.alphabet;
            out["lower_bounds_only"] = r.lower_bounds_only;
            return out;
        },
        py::arg("diagram"), py::arg("quandle"), py::arg("kmax") = 2,
        py::arg("use_automorphisms") = true, py::arg("use_triples") = false,
        py::arg("limit") = 512);
    m.def("independence_number", &independence_number, py::arg("graph"),
          py::arg("max_vertices") = 512);
    m.def("strong_product", &strong_product, py::arg("g"), py::arg("h"),
          py::arg("max_vertices") = 4096);
    m.def("lovasz_theta", &lovasz_theta, py::arg("graph"), py::arg("tol") = 1e-7);
}
