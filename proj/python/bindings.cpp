#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "seqcolor/chromatic_sum.hpp"
#include "seqcolor/errors.hpp"
#include "seqcolor/oracle.hpp"
#include "seqcolor/report.hpp"
#include "seqcolor/sequentializer.hpp"

namespace py = pybind11;
using namespace seqcolor;

namespace {

Graph make_graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges,
                 std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>> parts) {
    std::optional<Bipartition> bp;
    if (parts) bp = Bipartition{parts->first, parts->second};
    return build_graph(n, edges, std::move(bp));
}

std::vector<std::pair<Vertex, Vertex>> edge_pairs(const Graph& g) {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "R-sequential edge colorings of near-regular Class 1 graphs";

    auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<GraphError>(m, "GraphError", base.ptr());
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<CoverageError>(m, "CoverageError", base.ptr());
    py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
    py::register_exception<ClassTwoError>(m, "ClassTwoError", base.ptr());
    py::register_exception<UnknownClassError>(m, "UnknownClassError", base.ptr());
    py::register_exception<CapExceededError>(m, "CapExceededError", base.ptr());
    py::register_exception<OracleRefusal>(m, "OracleRefusal", base.ptr());
    py::register_exception<GenerationError>(m, "GenerationError", base.ptr());

    py::class_<Graph>(m, "Graph")
        .def(py::init(&make_graph), py::arg("n"), py::arg("edges"), py::arg("bipartition") = py::none())
        .def_property_readonly("vertex_count", &Graph::vertex_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def_property_readonly("edges", &edge_pairs)
        .def("degree", &Graph::degree)
        .def_property_readonly("bipartition",
                               [](const Graph& g) -> py::object {
                                   if (!g.bipartition()) return py::none();
                                   return py::make_tuple(g.bipartition()->left, g.bipartition()->right);
                               })
        .def("__repr__", [](const Graph& g) {
            return "<Graph n=" + std::to_string(g.vertex_count()) + " m=" + std::to_string(g.edge_count()) + ">";
        });

    py::class_<DegreeProfile>(m, "DegreeProfile")
        .def_readonly("n", &DegreeProfile::n)
        .def_readonly("max_degree", &DegreeProfile::max_degree)
        .def_readonly("min_degree", &DegreeProfile::min_degree)
        .def_readonly("r", &DegreeProfile::r)
        .def_readonly("n_r", &DegreeProfile::n_r)
        .def_readonly("top_vertices", &DegreeProfile::top_vertices)
        .def_readonly("near_regular", &DegreeProfile::near_regular);

    m.def("degree_profile", &degree_profile);
    m.def("same_edge_set", &same_edge_set);
    m.def("parse_graph6", [](const std::string& s) { return parse_graph6(s); });
    m.def("emit_graph6", &emit_graph6);
    m.def("parse_edge_list", [](const std::string& s) { return parse_edge_list(s); });
    m.def("emit_edge_list", &emit_edge_list);
    m.def("generate_complete_bipartite", &generate_complete_bipartite, py::arg("a"), py::arg("b"));
    m.def("generate_random_biregular", &generate_random_biregular, py::arg("r"), py::arg("k"), py::arg("seed"));
    m.def(
        "generate_regular_class1",
        [](int r, bool complete) {
            return generate_regular_class1(r, complete ? RegularFamily::complete : RegularFamily::complete_bipartite);
        },
        py::arg("r"), py::arg("complete") = false);

    py::class_<EdgeColoring>(m, "EdgeColoring")
        .def(py::init([](std::vector<Color> colors, int t) { return EdgeColoring{std::move(colors), t}; }),
             py::arg("colors"), py::arg("color_count"))
        .def_readonly("colors", &EdgeColoring::colors)
        .def_readonly("color_count", &EdgeColoring::color_count)
        .def(py::self == py::self);

    m.def("verify_proper", [](const Graph& g, const EdgeColoring& c) {
        auto v = verify_proper(g, c);
        std::vector<std::pair<Vertex, Color>> clashes;
        for (const auto& x : v.violations) clashes.emplace_back(x.vertex, x.color);
        return py::make_tuple(v.proper, clashes);
    });
    m.def("palette", &palette);
    m.def("misra_gries", &misra_gries);
    m.def("konig_color_bipartite", &konig_color_bipartite);
    m.def(
        "exact_chromatic_index",
        [](const Graph& g, std::optional<int> cap) {
            auto res = cap ? exact_chromatic_index(g, *cap) : exact_chromatic_index(g);
            return py::make_tuple(res.chi_prime, res.witness);
        },
        py::arg("g"), py::arg("max_colors") = py::none());
    m.def("obtain_r_coloring", [](const Graph& g) {
        auto res = obtain_r_coloring(g);
        return py::make_tuple(res.coloring, std::string(to_string(res.source)));
    });
    m.def("emit_coloring", &emit_coloring);
    m.def("parse_coloring", [](const Graph& g, const std::string& s) { return parse_coloring(g, s); });

    py::class_<MissingColorPartition>(m, "MissingColorPartition")
        .def_readonly("r", &MissingColorPartition::r)
        .def_readonly("classes", &MissingColorPartition::classes);

    m.def("missing_color_partition", &missing_color_partition);
    m.def("select_swap_color", &select_swap_color);
    m.def("swap_colors", &swap_colors, py::arg("alpha"), py::arg("i0"), py::arg("r"));
    m.def("verify_sequential", [](const Graph& g, const EdgeColoring& c, const std::vector<Vertex>& R) {
        auto v = verify_sequential(g, c, R);
        return py::make_tuple(v.sequential, v.failing);
    });
    m.def("theorem3_bound", &theorem3_bound, py::arg("n"), py::arg("n_r"), py::arg("r"));
    m.def("corollary1_bound", &corollary1_bound, py::arg("n"), py::arg("r"));
    m.def("corollary2_bound", &corollary2_bound, py::arg("n"), py::arg("n_r"), py::arg("r"));

    py::class_<SequentialCertificate>(m, "SequentialCertificate")
        .def_readonly("coloring", &SequentialCertificate::coloring)
        .def_readonly("source_coloring", &SequentialCertificate::source_coloring)
        .def_readonly("R", &SequentialCertificate::R)
        .def_readonly("swap_color", &SequentialCertificate::swap_color)
        .def_readonly("bound", &SequentialCertificate::bound)
        .def_readonly("r", &SequentialCertificate::r)
        .def_readonly("n", &SequentialCertificate::n)
        .def_readonly("n_r", &SequentialCertificate::n_r)
        .def_readonly("verified", &SequentialCertificate::verified);

    m.def("sequentialize", &sequentialize, py::arg("g"), py::arg("alpha") = py::none());
    m.def("certificate_json", [](const Graph& g, const SequentialCertificate& c) {
        return report::certificate(g, c).dump();
    });

    m.def("coloring_sum", &coloring_sum);

    py::class_<SumReport>(m, "SumReport")
        .def_readonly("actual_sum", &SumReport::actual_sum)
        .def_readonly("bound", &SumReport::bound)
        .def_readonly("per_vertex_bound", &SumReport::per_vertex_bound)
        .def_readonly("exact_sum", &SumReport::exact_sum)
        .def_readonly("chain_holds", &SumReport::chain_holds);

    m.def("sum_report", py::overload_cast<const Graph&, bool>(&sum_report), py::arg("g"),
          py::arg("run_oracle") = false);

    py::class_<OracleResult>(m, "OracleResult")
        .def_readonly("value", &OracleResult::value)
        .def_readonly("witness", &OracleResult::witness)
        .def_readonly("explored", &OracleResult::explored)
        .def_readonly("cap_stable", &OracleResult::cap_stable)
        .def_readonly("sequential_vertices", &OracleResult::sequential_vertices);

    m.def(
        "exact_edge_chromatic_sum",
        [](const Graph& g, bool override_size) { return exact_edge_chromatic_sum(g, {override_size}); },
        py::arg("g"), py::arg("override_size") = false);
    m.def(
        "exact_max_sequential_set",
        [](const Graph& g, int r, bool override_size) { return exact_max_sequential_set(g, r, {override_size}); },
        py::arg("g"), py::arg("r"), py::arg("override_size") = false);
    m.def("count_proper_colorings", [](const Graph& g, int t) { return enumerate_proper_colorings(g, t, nullptr); });
}
