#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "distinguo/bounds.hpp"
#include "distinguo/colouring.hpp"
#include "distinguo/construct.hpp"
#include "distinguo/dot.hpp"
#include "distinguo/graph.hpp"
#include "distinguo/oracle.hpp"
#include "distinguo/verify.hpp"

namespace py = pybind11;
using namespace distinguo;

namespace {

FamilyKind kind_from(const std::string& name) {
    if (name == "path")
        return FamilyKind::Path;
    if (name == "cycle")
        return FamilyKind::Cycle;
    if (name == "star")
        return FamilyKind::Star;
    if (name == "complete")
        return FamilyKind::Complete;
    if (name == "complete_bipartite")
        return FamilyKind::CompleteBipartite;
    throw InputError("unknown family '" + name + "'");
}

} // namespace

PYBIND11_MODULE(_distinguo, m) {
    m.doc() = "proper and distinguishing arc colourings of symmetric digraphs";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);

    py::class_<SimpleGraph>(m, "SimpleGraph")
        .def(py::init<int, std::vector<std::pair<int, int>>>(), py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &SimpleGraph::vertex_count)
        .def_property_readonly("m", &SimpleGraph::edge_count)
        .def("degree", &SimpleGraph::degree)
        .def("max_degree", &SimpleGraph::max_degree)
        .def("neighbours", &SimpleGraph::neighbours)
        .def("adjacent", &SimpleGraph::adjacent)
        .def("edges", &SimpleGraph::edges)
        .def("is_connected", &SimpleGraph::is_connected)
        .def("__eq__", [](const SimpleGraph& a, const SimpleGraph& b) { return a == b; })
        .def("__repr__", [](const SimpleGraph& g) {
            return "SimpleGraph(n=" + std::to_string(g.vertex_count()) +
                   ", m=" + std::to_string(g.edge_count()) + ")";
        });

    py::class_<ArcColouring>(m, "ArcColouring")
        .def(py::init<SimpleGraph, int>(), py::arg("graph"), py::arg("k"))
        .def_property_readonly("graph", &ArcColouring::graph)
        .def_property_readonly("k", &ArcColouring::palette_size)
        .def("colour", &ArcColouring::colour, py::arg("tail"), py::arg("head"))
        .def("set_colour", &ArcColouring::set_colour)
        .def("total", &ArcColouring::total)
        .def("used_colours", &ArcColouring::used_colour_count);

    m.def("parse_graph", [](const std::string& text, const std::string& format) {
              return parse_graph(text, format == "graph6" ? GraphFormat::Graph6
                                                          : GraphFormat::EdgeList);
          },
          py::arg("text"), py::arg("format") = "edge-list");
    m.def("emit_edge_list", &emit_edge_list);
    m.def("emit_graph6", &emit_graph6);
    m.def("generate_family",
          [](const std::string& kind, std::vector<int> params) {
              return generate_family(kind_from(kind), params);
          },
          py::arg("kind"), py::arg("params"));
    m.def("bfs_order", [](const SimpleGraph& g, int root) {
        auto t = bfs_tree(g, root);
        return py::make_tuple(t.order, t.parent, t.depth);
    });

    m.def("central_binomial", &central_binomial);
    m.def("min_k_threshold", &min_k_threshold);
    m.def("colour_budget", [](std::uint64_t delta) {
        auto b = colour_budget(delta);
        py::dict d;
        d["k"] = b.k;
        d["half_floor"] = b.half_floor;
        d["half_ceil"] = b.half_ceil;
        d["pair_capacity"] = b.pair_capacity;
        d["list_capacity"] = b.list_capacity;
        return d;
    });
    m.def("list_inequality_holds", &list_inequality_holds);

    m.def("emit_colouring", &emit_colouring);
    m.def("parse_colouring", &parse_colouring);

    m.def("monochromatic_two_cycles", &monochromatic_two_cycles);
    m.def("monochromatic_two_paths", &monochromatic_two_paths);
    m.def("is_distinguishing",
          [](const ArcColouring& c, std::uint64_t budget) {
              auto v = is_distinguishing(c, budget);
              py::dict d;
              d["distinguishing"] = v.distinguishing;
              d["exact"] = v.exact;
              d["nodes"] = v.nodes;
              d["witness"] = v.witness ? py::object(py::cast(v.witness->image))
                                       : py::object(py::none());
              return d;
          },
          py::arg("colouring"), py::arg("budget") = default_node_budget());
    m.def("colour_automorphisms",
          [](const ArcColouring& c, std::uint64_t budget) {
              auto r = colour_automorphisms(c, budget);
              py::dict d;
              py::list gens;
              for (const auto& phi : r.generators)
                  gens.append(phi.image);
              d["generators"] = gens;
              d["group_order"] = r.group_order;
              d["exact"] = r.exact;
              d["orbits"] = r.orbits;
              d["fixed"] = r.fixed;
              d["nodes"] = r.nodes;
              return d;
          },
          py::arg("colouring"), py::arg("budget") = default_node_budget());

    m.def("colour_type1_minimum",
          [](const SimpleGraph& g, std::optional<int> chi) {
              return colour_type1_minimum(g, chi);
          },
          py::arg("graph"), py::arg("chi") = py::none());
    m.def("colour_distinguishing_type1",
          [](const SimpleGraph& g) { return colour_distinguishing_type1(g); });
    m.def("colour_family_distinguishing",
          [](const std::string& kind, int param) {
              return colour_family_distinguishing(kind_from(kind), param);
          },
          py::arg("kind"), py::arg("param"));
    m.def("colour_type2_complete", &colour_type2_complete);
    m.def("colour_distinguishing_type2_complete", &colour_distinguishing_type2_complete);

    m.def("chromatic_number", &chromatic_number);
    m.def("search_colouring",
          [](const SimpleGraph& g, int k, bool forbid_two_cycle, bool forbid_two_path,
             bool distinguishing, std::optional<std::uint32_t> seed, std::uint64_t budget,
             bool allow_oversize) {
              ConstraintSet cs{forbid_two_cycle, forbid_two_path, distinguishing};
              SearchOptions opts;
              opts.node_budget = budget;
              opts.value_seed = seed;
              opts.allow_oversize = allow_oversize;
              auto res = search_colouring(g, k, cs, opts);
              py::dict d;
              d["status"] = res.status == SearchStatus::Found ? "found"
                            : res.status == SearchStatus::ProvenImpossible
                                ? "proven-impossible"
                                : "budget-exceeded";
              d["nodes"] = res.nodes;
              d["colouring"] = res.colouring ? py::object(py::cast(*res.colouring))
                                             : py::object(py::none());
              return d;
          },
          py::arg("graph"), py::arg("k"), py::arg("forbid_two_cycle") = true,
          py::arg("forbid_two_path") = true, py::arg("distinguishing") = false,
          py::arg("seed") = py::none(), py::arg("budget") = default_node_budget(),
          py::arg("allow_oversize") = false);
    m.def("exact_index",
          [](const SimpleGraph& g, bool forbid_two_cycle, bool forbid_two_path,
             bool distinguishing, std::uint64_t budget, bool allow_oversize) {
              ConstraintSet cs{forbid_two_cycle, forbid_two_path, distinguishing};
              SearchOptions opts;
              opts.node_budget = budget;
              opts.allow_oversize = allow_oversize;
              auto res = exact_index(g, cs, opts);
              py::dict d;
              d["k"] = res.k;
              d["certificate"] = res.certificate;
              d["proven_optimal"] = res.proven_optimal;
              d["nodes"] = res.nodes;
              return d;
          },
          py::arg("graph"), py::arg("forbid_two_cycle") = true,
          py::arg("forbid_two_path") = true, py::arg("distinguishing") = false,
          py::arg("budget") = default_node_budget(), py::arg("allow_oversize") = false);

    m.def("dot_emit",
          [](const SimpleGraph& g, const ArcColouring* c, std::optional<int> highlight) {
              return dot_emit(g, c, highlight);
          },
          py::arg("graph"), py::arg("colouring") = nullptr, py::arg("highlight") = py::none());
}
