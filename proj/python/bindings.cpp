#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hypertrans/canonical.hpp"
#include "hypertrans/enumerate.hpp"
#include "hypertrans/error.hpp"
#include "hypertrans/extremal.hpp"
#include "hypertrans/families.hpp"
#include "hypertrans/hgr.hpp"
#include "hypertrans/report_json.hpp"
#include "hypertrans/transforms.hpp"

namespace py = pybind11;
using namespace hypertrans;

namespace {

// Reports cross the boundary as plain dicts, through the same JSON the CLI writes.
py::object to_python(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

EnumerateOptions options(std::uint64_t budget, unsigned threads) { return {budget, threads}; }

}  // namespace

PYBIND11_MODULE(_hypertrans, m) {
  m.doc() = "Transmission (Wiener index) of uniform hypergraphs";

  py::register_exception<Error>(m, "HypertransError", PyExc_ValueError);

  py::class_<Hypergraph>(m, "Hypergraph")
      .def(py::init([](int k, int n, std::vector<Edge> edges) { return Hypergraph::build(k, n, std::move(edges)); }),
           py::arg("k"), py::arg("n"), py::arg("edges"))
      .def_property_readonly("k", &Hypergraph::k)
      .def_property_readonly("n", &Hypergraph::n)
      .def_property_readonly("m", &Hypergraph::m)
      .def_property_readonly("edges", &Hypergraph::edges)
      .def("degree", &Hypergraph::degree)
      .def("__eq__", [](const Hypergraph& a, const Hypergraph& b) { return a == b; })
      .def("__repr__", [](const Hypergraph& g) {
        return "Hypergraph(k=" + std::to_string(g.k()) + ", n=" + std::to_string(g.n()) +
               ", m=" + std::to_string(g.m()) + ")";
      })
      .def("to_hgr", &write_hgr)
      .def_static("from_hgr", [](std::string_view text) { return parse_hgr(text); });

  m.def("transmission", py::overload_cast<const Hypergraph&>(&transmission));
  m.def("sigma_vertex", &sigma_vertex, py::arg("g"), py::arg("u"));
  m.def("sigma_subset", [](const Hypergraph& g, std::vector<Vertex> a) { return sigma_subset(g, a); });
  m.def("sigma_between",
        [](const Hypergraph& g, std::vector<Vertex> a, std::vector<Vertex> b) { return sigma_between(g, a, b); });
  m.def("distances_from", &distances_from);
  m.def("all_pairs", [](const Hypergraph& g) {
    auto d = all_pairs(g);
    std::vector<std::vector<int>> rows;
    for (Vertex u = 0; u < d.n(); ++u) rows.emplace_back(d.row(u).begin(), d.row(u).end());
    return rows;
  });
  m.def("average_distance", [](const Hypergraph& g) {
    auto r = average_distance(g);
    return py::module_::import("fractions").attr("Fraction")(r.numerator(), r.denominator());
  });
  m.def("diameter", py::overload_cast<const Hypergraph&>(&diameter));
  m.def("is_connected", &is_connected);
  m.def("classify", [](const Hypergraph& g) { return std::string(to_string(classify(g))); });
  m.def("components", &components);

  m.def("loose_path", &loose_path, py::arg("k"), py::arg("m"));
  m.def("loose_cycle", &loose_cycle, py::arg("k"), py::arg("g"));
  m.def("hyperstar", &hyperstar, py::arg("k"), py::arg("t"));
  m.def("cg_star", [](int k, int g, std::vector<int> t) { return cg_star(k, g, t); }, py::arg("k"), py::arg("g"),
        py::arg("star_edges"));
  m.def("tilde_c2", &tilde_c2, py::arg("k"), py::arg("p"), py::arg("q"));
  m.def("lollipop_graph", &lollipop_graph, py::arg("m"));
  m.def("triangle_star_graph", &triangle_star_graph, py::arg("m"));
  m.def("family", [](std::string_view spec) { return FamilySpec::parse(spec).construct(); }, py::arg("spec"));
  m.def("identify_family", &identify_family);

  m.def("decompose", [](const Hypergraph& g) {
    auto d = decompose(g);
    py::dict out;
    out["girth"] = d.girth;
    out["cycle_edges"] = d.cycle_edges;
    out["cycle_vertices"] = d.cycle_vertices;
    out["attachments"] = d.attachments;
    return out;
  });
  m.def("move_edges", [](const Hypergraph& g, std::vector<EdgeId> edges, Vertex from, Vertex to) {
    return move_edges(g, {std::move(edges), from, to});
  }, py::arg("g"), py::arg("edges"), py::arg("source"), py::arg("target"));

  m.def("canonical_key", [](const Hypergraph& g) { return canonical_key(g).hex(); });
  m.def("are_isomorphic", &are_isomorphic);

  m.def(
      "enumerate_unicyclic",
      [](int k, int mm, const std::string& method, unsigned threads, std::uint64_t budget) {
        if (method != "constructive" && method != "bruteforce") {
          throw Error(Errc::BadParam, "method must be 'constructive' or 'bruteforce'");
        }
        EnumerationResult r;
        {
          py::gil_scoped_release release;
          r = method == "bruteforce" ? enumerate_unicyclic_bruteforce(k, mm, options(budget, threads))
                                     : enumerate_unicyclic(k, mm, options(budget, threads));
        }
        return to_python(to_json(r));
      },
      py::arg("k"), py::arg("m"), py::arg("method") = "constructive", py::arg("threads") = 1u,
      py::arg("budget") = kDefaultBudget);
  m.def(
      "verify_theorem",
      [](const std::string& theorem, int k, int mm, unsigned threads) {
        auto opts = options(kDefaultBudget, threads);
        if (theorem == "min") return to_python(to_json(verify_theorem_min(k, mm, opts)));
        if (theorem == "max") return to_python(to_json(verify_theorem_max(k, mm, opts)));
        if (theorem == "graph-remark") return to_python(to_json(graph_remark_check(mm, opts)));
        throw Error(Errc::BadParam, "theorem must be 'min', 'max' or 'graph-remark'");
      },
      py::arg("theorem"), py::arg("k"), py::arg("m"), py::arg("threads") = 1u);
  m.def("sigma_min_formula", &sigma_min_formula);
  m.def(
      "check_lemma",
      [](int id, int trials, std::uint64_t seed, unsigned threads) {
        return to_python(to_json(check_lemma(id, trials, seed, threads)));
      },
      py::arg("id"), py::arg("trials") = 100, py::arg("seed") = 42, py::arg("threads") = 1u);
}
