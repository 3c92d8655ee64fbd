// Copyright 2026 The ksym Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ksym/catalog.hpp"
#include "ksym/families.hpp"
#include "ksym/graph.hpp"
#include "ksym/io.hpp"
#include "ksym/spectra.hpp"
#include "ksym/symmetry.hpp"
#include "ksym/verify.hpp"

namespace py = pybind11;

namespace ksym {
namespace {

py::int_ ToPy(const Integer& z) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

Integer FromPy(const py::int_& z) { return Integer(py::str(z).cast<std::string>()); }

// Ascending coefficients as Python ints.
py::list ToPy(const IntPolynomial& p) {
  py::list out;
  for (const auto& c : p.coeffs()) out.append(ToPy(c));
  return out;
}

py::object ToPy(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::dict SpectrumDict(const Spectrum& s) {
  py::list values;
  for (const auto& r : s.integer_eigenvalues) values.append(py::make_tuple(ToPy(r.value), r.multiplicity));
  py::dict d;
  d["order"] = s.order;
  d["integral"] = s.integral();
  d["integer"] = values;
  d["residual"] = ToPy(s.residual);
  return d;
}

py::dict MetricsDict(const Graph& g) {
  const GraphMetrics m = Metrics(g);
  const PrimalityVerdict v = PrimalityWitness(g);
  py::dict d;
  d["order"] = g.order();
  d["size"] = g.size();
  d["components"] = m.components;
  d["min_degree"] = m.min_degree;
  d["kappa"] = m.connectivity;
  d["pendants"] = m.pendants;
  d["quasi_pendants"] = m.quasi_pendants;
  d["two_connected"] = m.two_connected;
  d["prime"] = v.verdict == Primality::kPrime;
  return d;
}

std::vector<SymmetricPart> Parts(const std::vector<std::pair<Graph, Permutation>>& parts, int k) {
  std::vector<SymmetricPart> out;
  for (const auto& [g, sigma] : parts) out.push_back({g, VerifyKSymmetric(g, sigma, k)});
  return out;
}

}  // namespace
}  // namespace ksym

PYBIND11_MODULE(_ksym, m) {
  using namespace ksym;
  m.doc() = "Exact Laplacian spectra and k-symmetric graph constructions";

  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error;
  error.call_once_and_store_result(
      [&] { return py::exception<Error>(m, "KsymError", PyExc_ValueError); });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      const std::string message = std::string(ToString(e.code())) + ": " + e.what();
      py::set_error(error.get_stored(), message.c_str());
    }
  });

  py::class_<Graph>(m, "Graph")
      .def(py::init<int, const std::vector<Edge>&>(), py::arg("order"), py::arg("edges") = std::vector<Edge>{})
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def_property_readonly("edges", &Graph::edges)
      .def("degree", &Graph::degree)
      .def("neighbors", &Graph::neighbors)
      .def("adjacent", &Graph::adjacent)
      .def(py::self == py::self)
      .def("__repr__", [](const Graph& g) {
        return "Graph(order=" + std::to_string(g.order()) + ", size=" + std::to_string(g.size()) + ")";
      });

  m.def("parse_graph", py::overload_cast<const std::string&>(&ParseGraph), py::arg("text"));
  m.def("emit_graph", &EmitGraph);
  m.def("complete", &Complete);
  m.def("empty", &EmptyGraph);
  m.def("cycle", &Cycle);
  m.def("path", &Path);
  m.def("petersen", &Petersen);
  m.def("catalog", [] {
    py::dict d;
    for (const auto& [name, g] : Catalog()) d[py::str(name)] = g;
    return d;
  });
  m.def("complement", &Complement);
  m.def("disjoint_union", &DisjointUnion);
  m.def("cartesian_product", &CartesianProduct);
  m.def("join", &Join);
  m.def("metrics", &MetricsDict);
  m.def("vertex_connectivity", &VertexConnectivity);

  m.def("laplacian_charpoly", [](const Graph& g) { return ToPy(LaplacianCharpoly(g)); });
  m.def("spectrum", [](const Graph& g) { return SpectrumDict(ComputeSpectrum(g)); });
  m.def("is_laplacian_integral", &IsLaplacianIntegral);
  m.def("multiplicity", [](const Graph& g, const py::int_& lambda) { return Multiplicity(g, FromPy(lambda)); });
  m.def("spanning_trees", [](const Graph& g) { return ToPy(SpanningTrees(g)); });
  m.def("divisor_contained", [](const Graph& g, const std::vector<std::vector<Vertex>>& blocks) {
    return DivisorContained(g, VerifyEquitable(g, blocks));
  });

  m.def("build_cnm", &BuildCnm, py::arg("n"), py::arg("m"));
  m.def("build_cnkm", &BuildCnkm, py::arg("n"), py::arg("k"), py::arg("m"));
  m.def("closed_cnm_charpoly", [](int n, int mm) { return ToPy(ClosedCnmCharpoly(n, mm)); });
  m.def("closed_cnkm_charpoly", [](int n, int k, int mm) { return ToPy(ClosedCnkmCharpoly(n, k, mm)); });
  m.def("search_integral_cnm", &SearchIntegralCnm, py::arg("max_n"), py::arg("max_m"),
        py::arg("brute_force") = false);
  m.def("orbit_construction",
        [](int k, const std::vector<std::pair<Graph, Permutation>>& parts) {
          const OrbitConstruction oc = BuildOrbitConstruction(k, Parts(parts, k));
          return py::make_tuple(oc.graph, oc.action.sigma(), oc.partition.blocks);
        });

  m.def("rotation", &RotationBy, py::arg("n"), py::arg("step") = 1);
  m.def("parse_cycles", &ParseCycles, py::arg("text"), py::arg("n"));
  m.def("cycle_string", &CycleString);
  m.def("is_automorphism", &IsAutomorphism);
  m.def("verify_k_symmetric", [](const Graph& g, const Permutation& sigma, int k) {
    VerifyKSymmetric(g, sigma, k);
  });
  m.def("find_k_symmetric",
        [](const Graph& g, int k, std::uint64_t budget) {
          py::dict d = ToPy(ToJson(FindKSymmetric(g, k, budget)));
          d["expansions"] = py::int_(py::str(d["expansions"]));
          return d;
        },
        py::arg("g"), py::arg("k"), py::arg("budget") = kDefaultSearchBudget);
  m.def("k_join",
        [](const Graph& g1, const Permutation& s1, const Graph& g2, const Permutation& s2, int k,
           std::optional<Base> b1, std::optional<Base> b2) {
          const CyclicAction a1 = VerifyKSymmetric(g1, s1, k);
          const CyclicAction a2 = VerifyKSymmetric(g2, s2, k);
          const JoinResult r = KJoin(g1, a1, b1 ? *b1 : BaseOf(a1), g2, a2, b2 ? *b2 : BaseOf(a2));
          return py::make_tuple(r.graph, r.action.sigma());
        },
        py::arg("g1"), py::arg("sigma1"), py::arg("g2"), py::arg("sigma2"), py::arg("k"),
        py::arg("base1") = py::none(), py::arg("base2") = py::none());
  m.def("hamiltonian_from_action", [](const Graph& g, const Permutation& sigma) {
    const HostCycle c = HamiltonianFromAction(g, VerifyKSymmetric(g, sigma, g.order()));
    return py::make_tuple(c.host == CycleHost::kGraph ? "graph" : "complement", c.cycle);
  });

  m.def("suite_names", &SuiteNames);
  m.def("verify_suite",
        [](const std::string& name, const std::string& grid) {
          return ToPy(ToJson(VerifySuite(name, Grid::Parse(grid))));
        },
        py::arg("name"), py::arg("grid") = "");
}
