#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "zdg/automorphism.hpp"
#include "zdg/errors.hpp"
#include "zdg/graph.hpp"
#include "zdg/graph_io.hpp"
#include "zdg/ring.hpp"
#include "zdg/ring_spec_parser.hpp"
#include "zdg/spectral.hpp"
#include "zdg/theorem_suite.hpp"
#include "zdg/threshold.hpp"

namespace py = pybind11;

namespace {

std::vector<std::vector<zdg::Vertex>> blocks_of(const zdg::Partition& p) {
  std::vector<std::vector<zdg::Vertex>> out;
  for (const auto& b : p.blocks) out.push_back(b.vertices);
  return out;
}

py::dict verdict_dict(const zdg::ThresholdVerdict& v, const zdg::Graph& g) {
  py::dict d;
  d["threshold"] = v.is_threshold();
  if (v.is_threshold()) {
    d["code"] = v.code().to_string();
  } else {
    const auto& w = v.witness();
    d["witness"] = std::vector<std::string>{g.label(w.a), g.label(w.b),
                                            g.label(w.c), g.label(w.d)};
    d["shape"] = zdg::to_string(w.shape);
  }
  return d;
}

zdg::Graph ring_graph(const std::string& expr, std::uint64_t cap) {
  const zdg::Ring ring =
      zdg::make_ring(zdg::parse_ring_spec(expr), zdg::RingOptions{cap});
  return zdg::build_zero_divisor_graph(ring, cap);
}

}  // namespace

PYBIND11_MODULE(_zdg, m) {
  m.doc() = "Zero-divisor graphs, threshold recognition and exact spectra";

  py::register_exception<zdg::Error>(m, "ZdgError");

  py::class_<zdg::Graph>(m, "Graph")
      .def(py::init<std::size_t>())
      .def_property_readonly("order", &zdg::Graph::order)
      .def("adjacent", &zdg::Graph::adjacent)
      .def("add_edge", &zdg::Graph::add_edge)
      .def("degree", &zdg::Graph::degree)
      .def("edge_count", &zdg::Graph::edge_count)
      .def("edges", &zdg::Graph::edges)
      .def_property_readonly("labels", &zdg::Graph::labels)
      .def("to_json", &zdg::graph_to_json)
      .def("to_dot",
           [](const zdg::Graph& g) { return zdg::graph_to_dot(g); })
      .def_static("from_json", &zdg::graph_from_json);

  m.def("normalize_ring", [](const std::string& expr) {
    return zdg::render_ring_spec(zdg::parse_ring_spec(expr));
  });
  m.def("ring_size", [](const std::string& expr) {
    return zdg::analytic_size(zdg::parse_ring_spec(expr));
  });
  m.def("zero_divisor_graph", &ring_graph, py::arg("expr"),
        py::arg("cap") = zdg::kDefaultSizeCap);
  m.def("threshold_from_code", [](const std::string& code) {
    return zdg::build_threshold_from_code(code);
  });

  m.def("is_threshold", [](const zdg::Graph& g) {
    return verdict_dict(zdg::is_threshold(g), g);
  });
  m.def("alternating_four_cycle", [](const zdg::Graph& g) -> py::object {
    const auto w = zdg::find_alternating_four_cycle(g);
    if (!w) return py::none();
    return py::make_tuple(w->a, w->b, w->c, w->d, zdg::to_string(w->shape));
  });

  m.def("aut_orbits",
        [](const zdg::Graph& g) { return blocks_of(zdg::aut_orbits(g)); });
  m.def("twin_classes",
        [](const zdg::Graph& g) { return blocks_of(zdg::twin_partition(g)); });
  m.def("gcd_classes", [](std::uint64_t n) {
    return blocks_of(zdg::gcd_class_partition(zdg::make_ring(zdg::spec::Zn{n})));
  });
  m.def("are_isomorphic", &zdg::are_isomorphic);

  m.def("charpoly", [](const zdg::Graph& g) {
    return zdg::adjacency_char_poly(g).to_string();
  });
  m.def("quotient", [](const zdg::Graph& g,
                       const std::vector<std::vector<zdg::Vertex>>& blocks) {
    zdg::Partition p{zdg::PartitionKind::kCustom, {}};
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      p.blocks.push_back({"B" + std::to_string(i), blocks[i]});
    }
    const zdg::QuotientMatrix q = zdg::equitable_quotient_matrix(g, p);
    return py::make_tuple(q.a, zdg::char_poly(q).to_string());
  });
  m.def("multiplicity", [](const zdg::Graph& g, std::int64_t lambda) {
    return zdg::eigenvalue_multiplicity(g, lambda);
  });

  m.def(
      "verify",
      [](const std::string& suite, std::uint64_t orbit_n_max) {
        zdg::SuiteConfig c;
        c.suite = suite;
        c.orbit_n_max = orbit_n_max;
        const auto reports = zdg::run_all(c);
        return py::make_tuple(zdg::suite_passed(reports),
                              zdg::reports_to_jsonl(reports));
      },
      py::arg("suite") = "all", py::arg("orbit_n_max") = 300);
}
