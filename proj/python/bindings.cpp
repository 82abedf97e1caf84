#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "treedepth/pace_io.hpp"
#include "treedepth/separators.hpp"
#include "treedepth/solver.hpp"
#include "treedepth/upper_bound.hpp"

namespace py = pybind11;
using namespace treedepth;

namespace {

Graph build(int n, const std::vector<Edge>& edges) {
  if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
  return Graph(n, edges);
}

std::vector<int> parents_of(const TreedepthDecomposition& dec) { return dec.parent; }

py::dict stats_dict(const SolverStats& s) {
  py::dict d;
  d["nodes"] = s.nodes;
  d["separators"] = s.separators_enumerated;
  d["memo_hits"] = s.memo_hits;
  d["subset_hits"] = s.subset_hits;
  d["iso_hits"] = s.iso_hits;
  d["bound_prunes"] = s.bound_prunes;
  d["special_k1"] = s.special_k1;
  d["special_k2"] = s.special_k2;
  d["inherited_families"] = s.inherited_families;
  d["budget_aborts"] = s.budget_aborts;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact treedepth via small minimal separators";
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def(
      "solve",
      [](int n, const std::vector<Edge>& edges, bool preprocess, bool verify_result, std::size_t budget) {
        SolverOptions opt;
        opt.preprocess = preprocess;
        opt.verify = verify_result;
        opt.separator_budget = budget;
        SolveResult r;
        {
          py::gil_scoped_release release;
          r = solve(build(n, edges), opt);
        }
        py::dict out;
        out["treedepth"] = r.treedepth;
        out["parents"] = parents_of(r.decomposition);
        out["optimal"] = r.optimal;
        out["lower_bound"] = r.lower_bound;
        out["reduced_vertices"] = r.reduced_vertices;
        out["stats"] = stats_dict(r.stats);
        return out;
      },
      py::arg("n"), py::arg("edges"), py::arg("preprocess") = true, py::arg("verify") = true,
      py::arg("budget") = std::size_t{2'000'000},
      "Treedepth and an elimination forest (parent list, -1 for roots) of the graph.");

  m.def(
      "upper_bound",
      [](int n, const std::vector<Edge>& edges) {
        UpperBound ub = compute_upper_bound(build(n, edges));
        return py::make_tuple(ub.depth, parents_of(ub.decomposition));
      },
      py::arg("n"), py::arg("edges"), "Heuristic depth and forest from a min-fill triangulation.");

  m.def(
      "verify",
      [](int n, const std::vector<Edge>& edges, const std::vector<int>& parents, int depth) {
        if (static_cast<int>(parents.size()) != n) return false;
        return verify(build(n, edges), {parents, depth});
      },
      py::arg("n"), py::arg("edges"), py::arg("parents"), py::arg("depth"));

  m.def(
      "parse_gr",
      [](const std::string& text) {
        PaceInstance inst = parse_gr_string(text);
        return py::make_tuple(inst.n, inst.edges);
      },
      py::arg("text"), "Vertex count and 0-based edge list of a .gr document.");

  m.def(
      "emit_tree", [](const std::vector<int>& parents, int depth) { return emit_tree({parents, depth}); },
      py::arg("parents"), py::arg("depth"));

  m.def(
      "minimal_separators",
      [](int n, const std::vector<Edge>& edges, int k, bool exact) {
        Graph g = build(n, edges);
        SeparatorFamily f = exact ? enumerate_exact(g, g.all(), k) : enumerate_heuristic(g, g.all(), k);
        std::vector<std::vector<int>> out;
        for (const auto& s : f) out.push_back(s.to_vector());
        return out;
      },
      py::arg("n"), py::arg("edges"), py::arg("k"), py::arg("exact") = true,
      "Minimal separators with at most k vertices, smallest first.");
}
