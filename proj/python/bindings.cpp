#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <limits>
#include <sstream>

#include "scx/cli.hpp"
#include "scx/equivariant.hpp"
#include "scx/error.hpp"
#include "scx/json_io.hpp"
#include "scx/knots.hpp"

namespace py = pybind11;
using namespace scx;

namespace {

SComplex specialize(const SComplex& C, const std::string& ring, const std::string& map) {
  Ring R = Ring::parse(ring);
  return base_change_complex(C, R, parse_varmap(R, map));
}

std::string rational_or_none(const std::optional<Rational>& r) { return r ? r->str() : "null"; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "S-complexes over Laurent rings and two-bridge knot invariants";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<RingMismatch>(m, "RingMismatch", base.ptr());
  py::register_exception<UnsupportedRing>(m, "UnsupportedRing", base.ptr());

  py::class_<SComplex>(m, "Complex")
      .def_static("from_json", &deserialize, py::arg("text"))
      .def("to_json", [](const SComplex& C) { return serialize(C); })
      .def_property_readonly("ring", [](const SComplex& C) { return C.ring.name(); })
      .def_property_readonly("v_trusted", [](const SComplex& C) { return C.v_trusted; })
      .def("__len__", &SComplex::size)
      .def("generators",
           [](const SComplex& C) {
             std::vector<std::tuple<std::string, int, std::string>> out;
             for (const auto& g : C.gens) out.emplace_back(g.name, g.gr, rational_or_none(g.deg_I));
             return out;
           })
      .def("delta1", [](const SComplex& C) {
        std::vector<std::string> out;
        for (std::size_t j = 0; j < C.size(); ++j) out.push_back(C.delta1(0, j).str());
        return out;
      })
      .def("__eq__", [](const SComplex& a, const SComplex& b) { return a == b; })
      .def("__repr__", [](const SComplex& C) {
        return "<Complex over " + C.ring.name() + " with " + std::to_string(C.size()) + " generators>";
      });

  m.def("trivial", [](const std::string& ring) { return SComplex::trivial(Ring::parse(ring)); }, py::arg("ring"));
  m.def("fixture", &fixture, py::arg("name"));
  m.def(
      "two_bridge",
      [](long long p, long long q, const std::string& ring) {
        Ring R = ring == "universal" ? Ring::universal(p) : Ring::parse(ring);
        auto rep = two_bridge(p, q, R);
        return py::make_tuple(rep.complex, rep.consistent);
      },
      py::arg("p"), py::arg("q"), py::arg("ring") = "universal",
      "Returns (complex, consistent).");
  m.def("specialize", &specialize, py::arg("complex"), py::arg("ring"), py::arg("map") = "");

  m.def("validate", [](const SComplex& C) {
    std::vector<std::string> out;
    for (const auto& i : validate(C).issues) out.push_back(i.relation);
    return out;
  });
  m.def("tensor", &tensor);
  m.def("dual", &dual);
  m.def("euler", &euler_characteristic);
  m.def("tilde_rank", [](const SComplex& C) { return total_rank(tilde_complex(C)); });
  m.def("sharp_rank", [](const SComplex& C, bool twisted) { return total_rank(sharp_complex(C, twisted)); },
        py::arg("complex"), py::arg("twisted") = false);

  m.def("h", [](const SComplex& C, const std::string& route) {
    if (route == "cycles") return h_invariant(C);
    if (route == "image") return h_invariant_via_image(C);
    throw DomainError("unknown route: " + route);
  }, py::arg("complex"), py::arg("route") = "cycles");
  m.def("j_ideals", [](const SComplex& C, int lo, int hi) {
    std::map<int, std::vector<std::string>> out;
    for (const auto& [i, J] : j_ideals(C, lo, hi)) {
      auto& g = out[i];
      for (const auto& p : J.gens) g.push_back(p.str());
    }
    return out;
  }, py::arg("complex"), py::arg("lo"), py::arg("hi"), "Generators of each ideal; empty list for the zero ideal.");
  m.def("gamma", [](const SComplex& C, int k) -> py::object {
    auto g = gamma(C, k);
    if (g.infinite) return py::float_(std::numeric_limits<double>::infinity());
    return py::module_::import("fractions").attr("Fraction")(g.value.str());
  }, py::arg("complex"), py::arg("k"));
  m.def("model_check", [](const SComplex& C, int N) { return verify_model_equivalence(C, N).ok(); },
        py::arg("complex"), py::arg("N") = 5);

  m.def("lens_sasahira", &lens_sasahira, py::arg("p"), py::arg("q"));
  m.def("signature_oracle", &two_bridge_signature_oracle, py::arg("p"), py::arg("q"));
  m.def("torus_signature", &torus_signature, py::arg("p"), py::arg("q"));
  m.def("torus_alexander", [](long long p, long long q) {
    auto a = torus_alexander(p, q);
    return py::make_tuple(a.delta.str(), a.abs_sum);
  }, py::arg("p"), py::arg("q"));
  m.def("vanishing", &vanishing_check, py::arg("p"), py::arg("q"));

  m.def("run", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int status = run(args, out, err);
    return py::make_tuple(status, out.str(), err.str());
  }, py::arg("args"), "Run a cli command; returns (status, stdout, stderr).");
}
