#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "treeverse/analytics.hpp"
#include "treeverse/balanced.hpp"
#include "treeverse/decomposition.hpp"
#include "treeverse/embedder.hpp"
#include "treeverse/graph_gen.hpp"
#include "treeverse/oracle.hpp"

namespace py = pybind11;
using namespace treeverse;

namespace {

py::dict flags_dict(const EmbeddingFlags& f) {
  py::dict d;
  d["admissible_complement"] = f.admissible_complement;
  d["phi1_ok"] = f.phi1_ok;
  d["phi2_applicable"] = f.phi2_applicable;
  d["phi2_ok"] = f.phi2_ok;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Universal graphs for trees";

  py::class_<RootedTree>(m, "RootedTree")
      .def(py::init([](std::vector<Vertex> parents) { return RootedTree::from_preorder_parents(std::move(parents)); }),
           py::arg("parents"))
      .def_static("parse", [](const std::string& text) { return parse_tree(text); })
      .def("__len__", &RootedTree::size)
      .def_property_readonly("parents", &RootedTree::parents)
      .def_property_readonly("height", &RootedTree::height)
      .def("children", [](const RootedTree& t, Vertex v) {
        return std::vector<Vertex>(t.children(v).begin(), t.children(v).end());
      })
      .def("level", &RootedTree::level)
      .def("subtree_size", &RootedTree::subtree_size)
      .def("prefix", &RootedTree::prefix)
      .def("nearest_left_cousin", &RootedTree::nearest_left_cousin)
      .def("__eq__", [](const RootedTree& a, const RootedTree& b) { return a == b; })
      .def("__str__", [](const RootedTree& t) { return to_paren_string(t); })
      .def("__repr__", [](const RootedTree& t) { return "RootedTree.parse('" + to_paren_string(t) + "')"; });

  m.def("perfect_binary", &perfect_binary, py::arg("k"));
  m.def("typed_tree", [](int k) {
    const TypedTree t = build_typed_tree(k);
    return py::make_tuple(t.tree, t.type_of);
  }, py::arg("k"), "T_k and the per-vertex types");
  m.def("validate_balance", [](const RootedTree& t, const std::string& K, int s) {
    std::vector<std::pair<std::string, std::vector<Vertex>>> out;
    for (const auto& v : validate_balance(t, Rational::parse(K), s).violations) out.emplace_back(to_string(v.axiom), v.witness);
    return out;
  }, py::arg("tree"), py::arg("K") = "2", py::arg("s") = 1, "List of (axiom, witness) violations");

  m.def("generated_edges", [](const RootedTree& t, int r) { return underlying(generate(t, r)).edges(); },
        py::arg("tree"), py::arg("r"));
  m.def("legacy_edges", [](int k) { return underlying(legacy_generate(k)).edges(); }, py::arg("k"));
  m.def("edge_counts", [](const RootedTree& t, int r) {
    const EdgeTypeCounts c = count_edges_by_type(generate(t, r));
    py::dict d;
    d["G1"] = c.g1;
    d["G2"] = c.g2;
    d["G3"] = c.g3;
    d["G4"] = c.g4;
    d["edges"] = c.undirected;
    return d;
  }, py::arg("tree"), py::arg("r"));

  m.def("find_feasible_or_critical", [](const RootedTree& t, Vertex u, int x, int y) {
    const ClassifiedCollection c = find_feasible_or_critical(Forest::from_tree(t), u, x, y);
    return py::make_tuple(c.collection.w, c.collection.components, to_string(c.kind));
  }, py::arg("tree"), py::arg("u"), py::arg("x"), py::arg("y"));

  m.def("embed", [](const RootedTree& host, const RootedTree& guest, Vertex x1, Vertex x2) {
    const Embedding e = embed(host, guest, x1, x2);
    const Verification v = verify_embedding(e, guest, x1, x2, phi2_applies(e.host->tree, guest.size()));
    py::dict d;
    d["map"] = e.map;
    d["ok"] = v.ok;
    d["flags"] = flags_dict(v.flags);
    d["diagnostics"] = v.diagnostics;
    return d;
  }, py::arg("host"), py::arg("guest"), py::arg("x1") = 0, py::arg("x2") = 0);

  m.def("free_trees", [](int n) { return enumerate_free_trees(n); }, py::arg("n"));
  m.def("is_universal", [](int n, const std::vector<std::pair<Vertex, Vertex>>& edges, int jobs) {
    return is_universal(UndirectedGraph(n, edges), OracleOptions{jobs, false}).universal;
  }, py::arg("n"), py::arg("edges"), py::arg("jobs") = 1);

  m.def("bounds_csv", [](const std::string& family, int k_max, bool prefix_sweep) {
    return to_csv(family == "binary" ? bound_table_binary(k_max, prefix_sweep) : bound_table_ternary(k_max, prefix_sweep));
  }, py::arg("family"), py::arg("k_max"), py::arg("prefix_sweep") = false);
  m.def("counterexample", [] {
    const CounterexampleReport r = reproduce_counterexample();
    py::dict d;
    d["legacy_missing"] = r.legacy_missing;
    d["six_vertex_complete"] = r.six_vertex_complete;
    d["corrected_missing"] = r.corrected_missing;
    d["ok"] = r.ok();
    return d;
  });
  m.def("edge_gap", [](int k) {
    const GapReport g = edge_gap_summary(k);
    return py::make_tuple(g.n, g.gap, g.limit);
  }, py::arg("k"), "(n, gap, 32n)");
}
