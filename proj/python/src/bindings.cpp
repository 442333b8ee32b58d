#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "palw/decompose.hpp"
#include "palw/errors.hpp"
#include "palw/io.hpp"
#include "palw/nilprod.hpp"
#include "palw/pal_width.hpp"
#include "palw/wreath.hpp"

namespace py = pybind11;
using namespace palw;

namespace {

FiniteGroup group_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(e.what());
  }
  return build_group(parse_group_spec(j));
}

std::vector<AbelianSpec> specs_from_moduli(const std::vector<std::vector<std::uint64_t>>& factors) {
  std::vector<AbelianSpec> specs;
  for (const auto& m : factors) specs.push_back(AbelianSpec{m});
  return specs;
}

}  // namespace

PYBIND11_MODULE(_palw, m) {
  m.doc() = "Palindromic and commutator width oracles";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);
  py::register_exception<InvariantBreach>(m, "InvariantBreach", PyExc_AssertionError);

  py::enum_<Notion>(m, "Notion").value("word", Notion::word).value("group", Notion::group);

  py::class_<FiniteGroup>(m, "FiniteGroup")
      .def_property_readonly("order", &FiniteGroup::order)
      .def_property_readonly("identity", &FiniteGroup::identity)
      .def("multiply", &FiniteGroup::multiply)
      .def("inverse", &FiniteGroup::inverse)
      .def("commutator", &FiniteGroup::commutator)
      .def("element_order", &FiniteGroup::element_order)
      .def("is_abelian", &FiniteGroup::is_abelian)
      .def("name", &FiniteGroup::name)
      .def("evaluate",
           [](const FiniteGroup& g, const std::string& word) {
             return evaluate(g, parse_monoid_word(word));
           })
      .def_property_readonly("generators", [](const FiniteGroup& g) {
        std::vector<std::pair<std::string, ElementId>> out;
        for (const auto& gen : g.generators()) out.emplace_back(gen.label, gen.element);
        return out;
      });

  m.def("cyclic", [](std::size_t n) { return cyclic(n); }, py::arg("n"));
  m.def("dihedral", [](std::size_t n) { return dihedral(n); }, py::arg("n"));
  m.def("sym3_fink", &sym3_fink);
  m.def("abelian", [](const std::vector<std::uint64_t>& moduli) { return abelian(moduli); },
        py::arg("moduli"));
  m.def("direct_product", [](const FiniteGroup& a, const FiniteGroup& b) { return direct_product(a, b); });
  m.def("group_from_spec", &group_from_json, py::arg("spec_json"),
        "Build a group from its JSON spec, e.g. '{\"kind\": \"cyclic\", \"n\": 4}'.");
  m.def("commutator_width", &commutator_width);

  py::class_<WidthReport>(m, "WidthReport")
      .def_readonly("notion", &WidthReport::notion)
      .def_readonly("width", &WidthReport::width)
      .def_readonly("length", &WidthReport::length)
      .def_readonly("palindromes", &WidthReport::palindromes)
      .def_readonly("layers", &WidthReport::layers);

  m.def("palindromic_width", &palindromic_width, py::arg("group"), py::arg("notion") = Notion::word,
        py::arg("state_cap") = kDefaultStateCap);

  m.def("tr", &tr);
  m.def("ql", [](const std::string& word, int rank) { return ql(parse_free_word(word, rank)); },
        py::arg("word"), py::arg("rank") = 2);
  m.def("reduce_word",
        [](const std::string& word, int rank) { return to_string(parse_free_word(word, rank)); },
        py::arg("word"), py::arg("rank") = 2);
  m.def("is_word_palindrome",
        [](const std::string& word) { return is_word_palindrome(parse_monoid_word(word)); });

  py::class_<WreathElement>(m, "WreathElement")
      .def_property_readonly("top", [](const WreathElement& e) { return e.top; })
      .def_property_readonly("base", [](const WreathElement& e) {
        std::vector<std::string> out;
        for (const auto& w : e.base) out.push_back(to_string(w));
        return out;
      })
      .def("__eq__", [](const WreathElement& a, const WreathElement& b) { return a == b; });

  py::class_<WreathGroup>(m, "WreathGroup")
      .def(py::init<int, FiniteGroup>(), py::arg("rank"), py::arg("top"))
      .def_property_readonly("rank", &WreathGroup::rank)
      .def_property_readonly("degree", &WreathGroup::degree)
      .def("identity", &WreathGroup::identity)
      .def("parse", [](const WreathGroup& g, const std::string& t) { return g.parse(t); })
      .def("to_text", &WreathGroup::to_text)
      .def("multiply", &WreathGroup::multiply)
      .def("invert", &WreathGroup::invert)
      .def("commutator", &WreathGroup::commutator);

  m.def("fink_wreath", &fink_wreath);
  m.def("delta", &delta);
  m.def("q_sequence", &q_sequence, py::arg("group"), py::arg("j"));
  m.def("commutator_delta_bound", &commutator_delta_bound, py::arg("degree"), py::arg("m"));
  m.def(
      "certify_commutator_length",
      [](const WreathGroup& g, const WreathElement& e) -> std::optional<std::int64_t> {
        auto cert = certify_cw_lower_bound(g, e);
        if (!cert) return std::nullopt;
        return cert->lower_bound;
      },
      "Certified lower bound on the commutator length, or None.");

  py::class_<DecompositionCertificate>(m, "DecompositionCertificate")
      .def_readonly("factor_count", &DecompositionCertificate::factor_count)
      .def_readonly("all_palindromic", &DecompositionCertificate::all_palindromic)
      .def_readonly("product_matches", &DecompositionCertificate::product_matches)
      .def_readonly("within_bound", &DecompositionCertificate::within_bound)
      .def_property_readonly("factors", [](const DecompositionCertificate& c) {
        std::vector<std::string> out;
        for (const auto& f : c.factors) out.push_back(to_string(f));
        return out;
      });

  m.def("decompose", [](const std::string& element) {
    return decompose(fink_wreath().parse(element));
  }, py::arg("element"), "Palindrome decomposition of an element of F2 wr S3 given as text.");

  py::class_<BoundReport>(m, "BoundReport")
      .def_readonly("lower", &BoundReport::lower)
      .def_readonly("upper", &BoundReport::upper)
      .def_readonly("exact", &BoundReport::exact)
      .def_readonly("branch", &BoundReport::branch)
      .def_readonly("widths", &BoundReport::widths)
      .def_readonly("m", &BoundReport::m);

  m.def("width_bounds", &width_bounds, py::arg("widths"), py::arg("m"));
  m.def("check_sandwich", py::overload_cast<const BoundReport&>(&check_sandwich));
  m.def("nilprod_group",
        [](const std::vector<std::vector<std::uint64_t>>& factors) {
          return nilprod2_multi(specs_from_moduli(factors));
        },
        py::arg("factors"), "2-nilpotent product of abelian groups given as lists of moduli.");
  m.def("nilprod_bounds",
        [](const std::vector<std::vector<std::uint64_t>>& factors, Notion notion) {
          return sandwich_report(NilpotentProduct(specs_from_moduli(factors)), notion);
        },
        py::arg("factors"), py::arg("notion") = Notion::word);
}
