#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "skewforge/error.hpp"
#include "skewforge/hecke.hpp"
#include "skewforge/parser.hpp"
#include "skewforge/presets.hpp"
#include "skewforge/suites.hpp"

namespace py = pybind11;
using namespace skewforge;

namespace {

// pybind11 holders cannot be shared_ptr<const T>; settings are never mutated.
using PySetting = std::shared_ptr<Setting>;

PySetting expose(SettingPtr s) { return std::const_pointer_cast<Setting>(std::move(s)); }

}  // namespace

PYBIND11_MODULE(_skewforge, m) {
  m.doc() = "Exact arithmetic in invariant skew group rings";

  py::register_exception<Error>(m, "SkewforgeError");

  py::class_<Setting, PySetting>(m, "Setting")
      .def_property_readonly("label", &Setting::label)
      .def_property_readonly("nvars", &Setting::nvars)
      .def_property_readonly("variables",
                             [](const Setting& s) {
                               std::vector<std::string> out;
                               for (const auto& v : s.variables()) out.push_back(v.name);
                               return out;
                             })
      .def_property_readonly("group_order", [](const Setting& s) { return s.group().order(); })
      .def_property_readonly("monoid_generators",
                             [](const Setting& s) {
                               std::vector<std::string> out;
                               for (const auto& g : s.monoid().generators()) out.push_back(to_string(g));
                               return out;
                             })
      .def_property_readonly("gamma",
                             [](const Setting& s) {
                               std::vector<std::string> out;
                               for (const auto& g : s.gamma_gens()) out.push_back(s.format(g));
                               return out;
                             })
      .def("__repr__", [](const Setting& s) { return "<Setting " + s.label() + ">"; });

  py::class_<SkewElement>(m, "Element")
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__mul__", [](const SkewElement& x, const SkewElement& y) { return skew_mul(x, y); })
      .def("__pow__", [](const SkewElement& x, int e) { return skew_pow(x, e); })
      .def("__str__", [](const SkewElement& x) { return format_element(x); })
      .def("__repr__", [](const SkewElement& x) { return "<Element " + format_element(x) + ">"; })
      .def_property_readonly("is_zero", &SkewElement::is_zero)
      .def_property_readonly("is_invariant", [](const SkewElement& x) { return is_invariant(x); })
      .def_property_readonly("terms",
                             [](const SkewElement& x) {
                               std::vector<std::pair<std::string, std::string>> out;
                               for (const auto& [a, c] : x.terms()) out.emplace_back(to_string(a), x.setting()->format(c));
                               return out;
                             })
      .def("to_json", [](const SkewElement& x) { return element_to_json(x).dump(); });

  m.def("preset", [](const std::string& spec) { return expose(build_preset(spec)); }, py::arg("spec"));
  m.def(
      "parse", [](const PySetting& s, const std::string& text) { return parse_element(s, text); }, py::arg("setting"), py::arg("text"));
  m.def("commutator", &commutator);
  m.def("format_element", &format_element);

  m.def(
      "gt_generator",
      [](const PySetting& s, int k, int sign) { return gt_generator_image(s, k, sign).element(); },
      py::arg("setting"), py::arg("k"), py::arg("sign"));
  m.def(
      "gt_relations",
      [](const PySetting& s) {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& c : gt_relation_checks(s)) out.emplace_back(c.name, format_element(c.residual));
        return out;
      },
      "(name, residual) for every gl_n relation");

  m.def(
      "hecke_mul",
      [](const PySetting& s, const std::string& phi, const std::string& psi) {
        const auto& g = s->group();
        const auto prod = hecke_mul(g, hecke_basis(g, parse_aut(s, phi)), hecke_basis(g, parse_aut(s, psi)));
        return format_hecke(hecke_scaled(prod, Rational(1, static_cast<long>(g.order()))));
      },
      "b_phi b_psi / |G|");
  m.def(
      "tensor_classes",
      [](const PySetting& s, const std::string& phi, const std::string& psi) {
        std::vector<std::tuple<std::string, long, std::size_t>> out;
        for (const auto& [c, mult] : tensor_decompose(s->group(), parse_aut(s, phi), parse_aut(s, psi))) {
          out.emplace_back(to_string(c.rep), mult.get_si(), c.orbit_size);
        }
        return out;
      },
      "(representative, multiplicity, dimension) per simple class");
  m.def("gk_bound", [](const PySetting& s) {
    const GkBound b = gk_bound(*s);
    return std::make_tuple(b.gkdim_gamma, b.growth, b.sum);
  });

  m.def(
      "run_suite_json",
      [](const std::string& name, std::optional<int> n, std::uint64_t seed, std::optional<std::string> a) {
        SuiteOptions o;
        o.n = n;
        o.seed = seed;
        o.a = std::move(a);
        return report_to_json(run_suite(name, o)).dump();
      },
      py::arg("name"), py::arg("n") = py::none(), py::arg("seed") = 1, py::arg("a") = py::none());
  m.def("suite_names", &suite_names);
}
