// Python bindings: graphs cross the boundary as SignedGraph objects, orderings
// as lists of vertex ids, signs as "+" / "-".
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "signelim/characterize.hpp"
#include "signelim/invariant.hpp"
#include "signelim/oracle.hpp"
#include "signelim/special.hpp"

namespace py = pybind11;
using namespace signelim;

namespace {

Sign to_sign(const std::string& s) {
  if (s == "+") return Sign::plus;
  if (s == "-") return Sign::minus;
  throw GraphError("sign must be '+' or '-', got '" + s + "'");
}

std::string from_sign(Sign s) { return std::string(1, sign_char(s)); }

SignedGraph make_graph(int n, const std::vector<std::tuple<int, int, std::string>>& edges) {
  std::vector<SignedEdge> out;
  out.reserve(edges.size());
  for (const auto& [u, v, s] : edges) out.push_back({u, v, to_sign(s)});
  return SignedGraph::from_edges(n, out);
}

std::optional<std::vector<VertexId>> sequence(const std::optional<Ordering>& nu) {
  if (!nu) return std::nullopt;
  return nu->sequence;
}

py::dict special_dict(const SpecialVerdict& v) {
  py::dict d;
  d["name"] = v.name;
  d["applicable"] = v.applicable;
  d["se"] = v.applicable && v.se;
  d["reason"] = v.reason;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Signed elimination orderings: recognition, certificates and invariants";

  py::register_exception<CapError>(m, "CapError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<SignedGraph>(m, "SignedGraph")
      .def(py::init(&make_graph), py::arg("n"), py::arg("edges") = std::vector<std::tuple<int, int, std::string>>{})
      .def_property_readonly("n", &SignedGraph::size)
      .def("edges",
           [](const SignedGraph& g) {
             std::vector<std::tuple<int, int, std::string>> out;
             for (const auto& e : g.edges()) out.emplace_back(e.u, e.v, from_sign(e.sign));
             return out;
           })
      .def("edge",
           [](const SignedGraph& g, VertexId u, VertexId v) -> std::optional<std::string> {
             switch (g.edge(u, v)) {
               case EdgeState::plus:
                 return "+";
               case EdgeState::minus:
                 return "-";
               default:
                 return std::nullopt;
             }
           })
      .def("neighborhood",
           [](const SignedGraph& g, VertexId v, const std::string& s, bool closed) {
             return g.neighborhood(v, to_sign(s), closed);
           },
           py::arg("v"), py::arg("sign"), py::arg("closed") = false)
      .def("induced_subgraph", [](const SignedGraph& g, const VertexSet& keep) { return g.induced_subgraph(keep).first; })
      .def("flipped", &SignedGraph::flipped)
      .def("__eq__", [](const SignedGraph& a, const SignedGraph& b) { return a == b; })
      .def("__repr__", [](const SignedGraph& g) {
        return "SignedGraph(n=" + std::to_string(g.size()) + ", edges=" + std::to_string(g.edge_count()) + ")";
      });

  m.def("parse_sg", &parse_sg, py::arg("text"));
  m.def("serialize_sg", &serialize_sg, py::arg("graph"));

  m.def("greedy_seo", [](const SignedGraph& g) { return sequence(greedy_seo(g)); }, py::arg("graph"),
        "An SEO as a vertex sequence, or None when the graph is not signed-eliminable.");
  m.def("is_signed_eliminable", &is_signed_eliminable, py::arg("graph"));
  m.def(
      "is_seo",
      [](const SignedGraph& g, const std::vector<VertexId>& order) -> std::optional<std::string> {
        const auto v = is_seo(g, Ordering{order});
        if (!v) return std::nullopt;
        return format_violation(*v);
      },
      py::arg("graph"), py::arg("order"), "None when the order is an SEO, else the first violation line.");
  m.def("signed_simplicial_set", &signed_simplicial_set, py::arg("graph"));
  m.def(
      "enumerate_seos",
      [](const SignedGraph& g) {
        std::vector<std::vector<VertexId>> out;
        for (const auto& nu : enumerate_seos(g)) out.push_back(nu.sequence);
        return out;
      },
      py::arg("graph"));

  m.def(
      "degree_profile",
      [](const SignedGraph& g, const std::vector<VertexId>& order) {
        std::vector<std::pair<int, int>> out;
        for (const auto& d : degree_profile(g, Ordering{order})) out.emplace_back(d.plus, d.minus);
        return out;
      },
      py::arg("graph"), py::arg("order"));
  m.def("deg_tilde", &deg_tilde, py::arg("graph"));
  m.def("invariance_check", [](const SignedGraph& g) { return invariance_check(g); }, py::arg("graph"));

  m.def(
      "characterize",
      [](const SignedGraph& g, bool no_cap) {
        SearchOptions opts;
        opts.override_cap = no_cap;
        const Verdict v = characterize(g, opts);
        py::dict d;
        d["c1+"] = v.c1_plus;
        d["c1-"] = v.c1_minus;
        d["c2"] = v.c2;
        d["c3"] = v.c3;
        d["se"] = v.se();
        d["ordering"] = sequence(v.ordering);
        d["certificate"] = v.certificate ? py::cast(format_certificate(*v.certificate)) : py::none();
        return d;
      },
      py::arg("graph"), py::arg("no_cap") = false);
  m.def(
      "verify_certificate",
      [](const SignedGraph& g, const std::string& line) {
        const auto r = verify_certificate(g, parse_certificate(line));
        return std::make_pair(r.ok, r.reason);
      },
      py::arg("graph"), py::arg("certificate"), "(ok, reason) for a certificate line.");

  m.def(
      "special_checks",
      [](const SignedGraph& g) {
        py::list out;
        for (const auto& v : all_special_checks(g)) out.append(special_dict(v));
        return out;
      },
      py::arg("graph"));

  m.def(
      "build_family",
      [](const std::string& kind, const std::string& sign, int n) {
        return build_family(parse_family_kind(kind), to_sign(sign), n);
      },
      py::arg("kind"), py::arg("sign"), py::arg("n"));
  m.def("brute_force_se", [](const SignedGraph& g) { return sequence(brute_force_se(g)); }, py::arg("graph"));

  m.def(
      "cross_check",
      [](int n, bool oracle, int workers, bool long_run) {
        CrossCheckOptions opts;
        opts.n = n;
        opts.oracle = oracle;
        opts.workers = workers;
        opts.long_run = long_run;
        CrossCheckReport r;
        {
          py::gil_scoped_release release;
          r = cross_check(opts);
        }
        py::dict d;
        d["n"] = r.n;
        d["instances"] = r.instances;
        d["se_instances"] = r.se_instances;
        d["certificates_checked"] = r.certificates_checked;
        d["mismatches"] = r.mismatches.size();
        d["report"] = format_report(r);
        return d;
      },
      py::arg("n"), py::arg("oracle") = false, py::arg("workers") = 1, py::arg("long_run") = false);
}
