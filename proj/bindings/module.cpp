#include "outerturan/certifier.hpp"
#include "outerturan/construct.hpp"
#include "outerturan/dual.hpp"
#include "outerturan/errors.hpp"
#include "outerturan/io.hpp"
#include "outerturan/oracle.hpp"
#include "outerturan/turan.hpp"

#include <pybind11/chrono.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace outerturan;

namespace {

Graph graph_from_pairs(int n, const std::vector<std::pair<int, int>> &edges) { return make_graph(n, edges); }

std::vector<std::pair<int, int>> edge_pairs(const Graph &g)
{
    std::vector<std::pair<int, int>> out;
    for (auto e : g.edges())
        out.emplace_back(e.u, e.v);
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Outerplanar Turan numbers of cycles";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<InvalidArgument>(m, "InvalidArgument", base.ptr());
    py::register_exception<GraphError>(m, "GraphError", base.ptr());
    py::register_exception<NotOuterplanarError>(m, "NotOuterplanarError", base.ptr());
    py::register_exception<ContainsCycleError>(m, "ContainsCycleError", base.ptr());
    py::register_exception<ResourceRefusal>(m, "ResourceRefusal", base.ptr());
    py::register_exception<OverflowError>(m, "OverflowError", base.ptr());
    py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_AssertionError);

    py::class_<Graph>(m, "Graph")
        .def(py::init(&graph_from_pairs), py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Graph::vertex_count)
        .def_property_readonly("e", &Graph::edge_count)
        .def_property_readonly("edges", &edge_pairs)
        .def("has_edge", &Graph::has_edge)
        .def("to_json", &io::graph_to_json)
        .def("to_graph6", &io::to_graph6)
        .def("__eq__", [](const Graph &a, const Graph &b) { return a == b; })
        .def("__repr__", [](const Graph &g) {
            return "Graph(n=" + std::to_string(g.vertex_count()) + ", e=" + std::to_string(g.edge_count()) + ")";
        });
    m.def("read_graph", &io::read_graph, "Graph JSON or graph6 text");

    py::class_<BlockEmbedding>(m, "BlockEmbedding")
        .def_readonly("outer", &BlockEmbedding::outer)
        .def_readonly("chords", &BlockEmbedding::chords);
    py::class_<Face>(m, "Face")
        .def_readonly("vertices", &Face::vertices)
        .def_readonly("block", &Face::block)
        .def_property_readonly("size", &Face::size);
    py::class_<OuterplaneEmbedding>(m, "Embedding")
        .def_readonly("graph", &OuterplaneEmbedding::graph)
        .def_readonly("blocks", &OuterplaneEmbedding::blocks)
        .def_property_readonly("bridges",
                               [](const OuterplaneEmbedding &e) {
                                   std::vector<std::pair<int, int>> out;
                                   for (auto b : e.bridges)
                                       out.emplace_back(b.u, b.v);
                                   return out;
                               })
        .def_readonly("isolated", &OuterplaneEmbedding::isolated)
        .def_property_readonly("n", &OuterplaneEmbedding::vertex_count)
        .def_property_readonly("e", &OuterplaneEmbedding::edge_count)
        .def("to_json", &io::embedding_to_json)
        .def("to_dot", [](const OuterplaneEmbedding &e) { return io::embedding_to_dot(e); });
    m.def("embedding_from_json", &io::embedding_from_json);

    m.def("recognize_outerplanar", &recognize_outerplanar, py::arg("graph"));
    m.def("inner_faces", &inner_faces);
    m.def("is_edge_maximal", &is_edge_maximal);
    m.def("cycle_length_set", &cycle_length_set);
    m.def("path_length_set", &path_length_set, py::arg("embedding"), py::arg("u"), py::arg("v"));
    m.def("has_cycle_of_length", &has_cycle_of_length, py::arg("graph"), py::arg("length"));
    m.def(
        "contract_outer_edge",
        [](const OuterplaneEmbedding &emb, Vertex u, Vertex v) {
            auto r = contract_outer_edge(emb, u, v);
            return py::make_tuple(r.embedding, r.collapsed_parallels, r.vertex_map);
        },
        "Returns (embedding, collapsed_parallels, vertex_map)");

    m.def("weak_dual_edges", [](const OuterplaneEmbedding &emb) { return weak_dual(emb).edges; });
    m.def(
        "triangular_blocks",
        [](const OuterplaneEmbedding &emb) {
            py::list out;
            for (const auto &b : classify_terminal(triangular_blocks(emb), emb).blocks) {
                py::dict d;
                std::vector<std::pair<int, int>> edges;
                for (auto e : b.edges)
                    edges.emplace_back(e.u, e.v);
                d["edges"] = edges;
                d["vertices"] = b.vertices;
                d["trivial"] = b.kind == BlockKind::Trivial;
                d["terminal"] = b.terminal;
                out.append(d);
            }
            return out;
        },
        "Triangular blocks with their trivial/terminal tags");
    m.def(
        "find_lemma_face",
        [](const OuterplaneEmbedding &emb) -> py::object {
            auto lemma = find_lemma_face(emb);
            if (!lemma)
                return py::none();
            return py::make_tuple(lemma->face.vertices, static_cast<int>(lemma->terminal_blocks.size()));
        },
        "(face vertices, number of terminal blocks) or None");

    m.def("fan", &fan);
    m.def("build_G0", &build_G0);
    m.def("build_H", [](int k) { return build_H(k).embedding; });
    m.def("build_chain", &build_chain, py::arg("k"), py::arg("merges"));

    m.def(
        "upper_bound",
        [](int k, int n) {
            auto b = upper_bound(k, n);
            return py::make_tuple(b.numerator, b.denominator);
        },
        "(numerator, denominator) of the bound, unreduced");
    m.def(
        "bound_holds", [](Int e, int k, int n) { return bound_holds(e, k, n).holds; }, py::arg("e"), py::arg("k"),
        py::arg("n"));
    m.def("sharp_residue", &sharp_residue);
    m.def(
        "fang_value_as_stated",
        [](int k, int n) {
            auto f = fang_value_as_stated(k, n);
            return py::make_tuple(f.value, f.lambda, to_string(f.branch));
        },
        "(value, lambda, branch) of the transcribed closed formula");

    py::class_<OracleResult>(m, "OracleResult")
        .def_readonly("n", &OracleResult::n)
        .def_readonly("k", &OracleResult::k)
        .def_readonly("value", &OracleResult::value)
        .def_readonly("witness", &OracleResult::witness)
        .def_readonly("triangulations_scanned", &OracleResult::triangulations_scanned)
        .def_readonly("elapsed", &OracleResult::elapsed);
    m.def(
        "exact_ex",
        [](int n, int k, int cap, int jobs, const std::string &symmetry) {
            OracleOptions o;
            o.cap = cap;
            o.jobs = jobs;
            if (symmetry == "on")
                o.symmetry = SymmetryMode::On;
            else if (symmetry == "auto")
                o.symmetry = SymmetryMode::Auto;
            else if (symmetry != "off")
                throw InvalidArgument("symmetry must be off, on or auto");
            py::gil_scoped_release release;
            return exact_ex(n, k, o);
        },
        py::arg("n"), py::arg("k"), py::arg("cap") = 11, py::arg("jobs") = 1, py::arg("symmetry") = "off");
    m.def("catalan", &catalan);

    py::class_<Certificate>(m, "Certificate")
        .def_readonly("k", &Certificate::k)
        .def_property_readonly("root_kind", [](const Certificate &c) { return to_string(c.root.kind); })
        .def("to_json", &io::certificate_to_json);
    m.def("certificate_from_json", &io::certificate_from_json);
    m.def("build_certificate", &build_certificate, py::arg("embedding"), py::arg("k"));

    py::class_<AuditReport>(m, "AuditReport")
        .def_readonly("verdict", &AuditReport::verdict)
        .def_readonly("failures", &AuditReport::failures)
        .def_readonly("root_lhs", &AuditReport::root_lhs)
        .def_readonly("root_rhs", &AuditReport::root_rhs)
        .def_readonly("root_slack", &AuditReport::root_slack)
        .def("to_text", &AuditReport::to_text);
    m.def("verify_certificate", &verify_certificate, py::arg("certificate"), py::arg("k"));
}
