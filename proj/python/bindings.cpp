#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hb/chain_map.hpp"
#include "hb/construction.hpp"
#include "hb/helly.hpp"
#include "hb/homology.hpp"
#include "hb/io.hpp"
#include "hb/obstruction.hpp"

namespace py = pybind11;

namespace {

using Simplices = std::vector<std::vector<int>>;

hb::SimplicialComplex complex_of(const Simplices& tops) {
  std::vector<hb::Simplex> s;
  for (const auto& t : tops) s.emplace_back(t);
  return hb::SimplicialComplex::closure(s);
}

Simplices tops_of(const hb::SimplicialComplex& k) {
  Simplices out;
  for (const auto& s : k.maximal_simplices()) out.push_back(s.vertices());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Z2 homology, van Kampen obstructions, Helly numbers and constrained chain maps";

  py::register_exception<hb::BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception<hb::InsufficientFamily>(m, "InsufficientFamily", PyExc_RuntimeError);
  py::register_exception<hb::DegenerateConfiguration>(m, "DegenerateConfiguration", PyExc_RuntimeError);
  py::register_exception<hb::InvariantViolation>(m, "InvariantViolation", PyExc_AssertionError);
  py::register_exception<hb::InputError>(m, "InputError", PyExc_ValueError);

  m.def("closure", [](const Simplices& tops) { return tops_of(complex_of(tops)); }, py::arg("simplices"),
        "Maximal simplices of the downward closure.");
  m.def("f_vector", [](const Simplices& tops) { return complex_of(tops).f_vector(); }, py::arg("simplices"));
  m.def("betti", [](const Simplices& tops, bool reduced) { return hb::betti_vector(complex_of(tops), reduced); },
        py::arg("simplices"), py::arg("reduced") = false, "Betti numbers in degrees 0..dim.");
  m.def(
      "obstruction_nonzero",
      [](const Simplices& tops, int d, std::size_t budget) {
        hb::ObstructionOptions options;
        options.cell_budget = budget;
        return hb::obstruction_nonzero(complex_of(tops), d, options).nonzero;
      },
      py::arg("simplices"), py::arg("d"), py::arg("budget") = hb::kDefaultCellBudget);
  m.def(
      "deleted_product_betti",
      [](const Simplices& tops) { return hb::betti_vector(hb::deleted_product(complex_of(tops)).complex.chains); },
      py::arg("simplices"));
  m.def(
      "barycentric_subdivision",
      [](const Simplices& tops) {
        const auto sd = hb::barycentric_subdivision(complex_of(tops));
        Simplices labels;
        for (const auto& l : sd.labels) labels.push_back(l.vertices());
        return py::make_tuple(tops_of(sd.complex), labels);
      },
      py::arg("simplices"), "(maximal simplices of sd K, label of each new vertex).");
  m.def(
      "eml_triangulation", [](int p, int q) { return hb::eml_triangulation(p, q).simplices; }, py::arg("p"),
      py::arg("q"));
  m.def("eml_flip_check", &hb::eml_flip_check, py::arg("p"), py::arg("q"));

  m.def(
      "helly_number",
      [](const std::string& family, std::size_t budget) {
        return hb::helly_number(hb::family_from_json(hb::parse_json(family)), budget).helly;
      },
      py::arg("family_json"), py::arg("budget") = hb::kDefaultFamilyBudget);
  m.def(
      "generate",
      [](const std::string& kind, int b, int d, int n, int k) {
        if (kind == "gamma") return hb::to_json(hb::gamma_family(b, d)).dump();
        if (kind == "gamma3prime") return hb::to_json(hb::gamma3_prime()).dump();
        if (kind == "skeleton") return hb::to_json(hb::skeleton_family(n, k)).dump();
        if (kind == "interval") return hb::to_json(hb::interval_family(n)).dump();
        if (kind == "tight") return hb::to_json(hb::tight_family(d, k, n)).dump();
        throw hb::InputError("unknown example kind " + kind);
      },
      py::arg("kind"), py::arg("b") = 1, py::arg("d") = 2, py::arg("n") = 3, py::arg("k") = 1,
      "Example family (or complex, for gamma3prime) as JSON text.");

  m.def(
      "rescale",
      [](const std::vector<int>& positions, int w, const std::vector<int>& y, const std::vector<int>& z,
         const std::vector<std::vector<int>>& a) {
        const auto r = hb::rescale(hb::SelectionPattern{positions, w}, y, z, a);
        return py::make_tuple(r.pi, r.windows);
      },
      py::arg("positions"), py::arg("w"), py::arg("y"), py::arg("z"), py::arg("a"));

  m.def(
      "build_ccm",
      [](const std::string& complex, const std::string& family, int b) {
        const auto k = hb::complex_from_json(hb::parse_json(complex));
        auto f = std::make_shared<const hb::SetFamily>(hb::family_from_json(hb::parse_json(family)));
        return hb::to_json(hb::build_ccm(k, f, b)).dump();
      },
      py::arg("complex_json"), py::arg("family_json"), py::arg("b"), "Constrained chain map bundle as JSON text.");
  m.def(
      "verify_constrained",
      [](const std::string& bundle) {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& v : hb::verify_constrained(hb::bundle_from_json(hb::parse_json(bundle)))) {
          out.emplace_back(hb::kind_name(v.kind), v.message);
        }
        return out;
      },
      py::arg("bundle_json"), "List of (kind, message); empty when the bundle verifies.");
  m.def(
      "almost_embedding_verdict",
      [](const std::string& bundle) { return hb::almost_embedding_verdict(hb::bundle_from_json(hb::parse_json(bundle))); },
      py::arg("bundle_json"));
}
