#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "linideal/equification.hpp"
#include "linideal/hypergraph.hpp"
#include "linideal/io.hpp"
#include "linideal/linearization.hpp"
#include "linideal/oracle.hpp"
#include "linideal/squarefree.hpp"

namespace py = pybind11;
using namespace linideal;

namespace {

std::vector<std::pair<std::pair<int, long>, long long>>
table_entries(const BettiTable& t) {
  return {t.entries().begin(), t.entries().end()};
}

}  // namespace

PYBIND11_MODULE(_linideal, m) {
  m.doc() = "monomial ideal linearization, equification and Betti numbers";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ArgumentError>(m, "ArgumentError", PyExc_ValueError);
  py::register_exception<ContextError>(m, "ContextError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

  py::class_<RingContext, std::shared_ptr<RingContext>>(m, "Ring")
      .def_property_readonly("names", &RingContext::names)
      .def("__len__", &RingContext::size)
      .def("__repr__", [](const RingContext& r) {
        std::string out = "Ring(";
        for (std::size_t i = 0; i < r.size(); ++i)
          out += (i ? ", " : "") + r.name(i);
        return out + ")";
      });

  py::class_<Monomial>(m, "Monomial")
      .def_property_readonly("exponents", &Monomial::exponents)
      .def_property_readonly("degree", &Monomial::degree)
      .def("__eq__", [](const Monomial& a, const Monomial& b) { return a == b; })
      .def("__str__", [](const Monomial& u) { return render(u); })
      .def("__repr__", [](const Monomial& u) { return render(u); });

  py::class_<MonomialIdeal>(m, "Ideal")
      .def_property_readonly("ring",
                             [](const MonomialIdeal& I) {
                               return std::const_pointer_cast<RingContext>(
                                   I.ring());
                             })
      .def_property_readonly("generators", &MonomialIdeal::generators)
      .def("__len__", &MonomialIdeal::num_generators)
      .def("__eq__", [](const MonomialIdeal& a, const MonomialIdeal& b) {
        return a == b;
      })
      .def("__str__", [](const MonomialIdeal& I) { return render(I); })
      .def("__repr__", [](const MonomialIdeal& I) { return render(I); });

  py::class_<BettiTable>(m, "BettiTable")
      .def("at", &BettiTable::at)
      .def("totals", &BettiTable::totals)
      .def("entries", &table_entries)
      .def_property_readonly("projective_dimension",
                             &BettiTable::projective_dimension)
      .def("__str__", &BettiTable::render_ascii)
      .def("__eq__", [](const BettiTable& a, const BettiTable& b) {
        return a == b;
      });

  py::class_<Linearized>(m, "Linearized")
      .def_readonly("ideal", &Linearized::ideal)
      .def_readonly("ordered_generators", &Linearized::ordered_generators)
      .def_readonly("complete_count", &Linearized::complete_count);

  m.def("ring",
        [](const std::string& text) {
          return std::const_pointer_cast<RingContext>(parse_ring(text));
        },
        py::arg("text"), "parse a ring declaration body, e.g. 'x1..x5'");
  m.def("monomial", &parse_monomial, py::arg("ring"), py::arg("text"));
  m.def("parse_ideal", &parse_ideal, py::arg("ring"), py::arg("text"));
  m.def("to_json", &ideal_to_json);
  m.def("from_json", &ideal_from_json);

  m.def("lin", [](const MonomialIdeal& I) { return lin(I); });
  m.def("star_lin", [](const MonomialIdeal& I) { return star_lin(I); });
  m.def("retrieve_source", &retrieve_source);
  m.def("equify", &equify);
  m.def("deequify", &deequify);
  m.def("lin_general", &lin_general);
  m.def("lin_general_z1", &lin_general_z1);
  m.def("radical", &radical);
  m.def("alexander_dual", &alexander_dual);
  m.def("crop", [](const MonomialIdeal& I, const ExponentVec& bounds) {
    return crop(I, ExponentBound{bounds});
  });

  m.def("has_linear_quotients",
        [](const MonomialIdeal& I, const std::vector<std::size_t>& order) {
          return has_linear_quotients(I, order);
        });
  m.def("find_linear_quotient_order", [](const MonomialIdeal& I) {
    auto res = find_linear_quotient_order(I);
    return std::pair<int, std::optional<std::vector<std::size_t>>>(
        static_cast<int>(res.status), res.order);
  });
  m.def("betti_by_quotients",
        [](const MonomialIdeal& I, const std::vector<std::size_t>& order) {
          return betti_from_quotients(colon_sequence(I, order));
        });
  m.def("betti_canonical", [](const MonomialIdeal& I, bool star) {
    Linearized L = star ? star_lin(I) : lin(I);
    return betti_from_quotients(canonical_order(L));
  }, py::arg("ideal"), py::arg("star") = true);
  m.def("betti_closed_form", &betti_closed_form);
  m.def("betti_oracle",
        [](const MonomialIdeal& I, std::size_t cap) {
          return oracle_betti(I, cap).graded;
        },
        py::arg("ideal"), py::arg("cap") = 12);
  m.def("is_linear_resolution", &is_linear_resolution, py::arg("ideal"),
        py::arg("cap") = 12);
  m.def("betti_splitting_check", &betti_splitting_check, py::arg("whole"),
        py::arg("left"), py::arg("right"), py::arg("cap") = 12);
  m.def("is_polymatroidal", &is_polymatroidal);

  m.def("lcm_lattice_dot", [](const MonomialIdeal& I) {
    return lcm_lattice_dot(lcm_lattice(I));
  });
  m.def("lcm_lattice_size", [](const MonomialIdeal& I) {
    LcmLattice L = lcm_lattice(I);
    return std::pair<std::size_t, std::size_t>(L.elements.size(),
                                               L.covers.size());
  });
  m.def("rooted_complex", &rooted_complex);

  m.def("hypergraph_criterion", [](const MonomialIdeal& I) {
    switch (linear_resolution_criterion(from_ideal(I))) {
      case CriterionOutcome::Linear: return "linear";
      case CriterionOutcome::NotLinear: return "not linear";
      default: return "inapplicable";
    }
  });
  m.def("hypergraph_diameter", [](const MonomialIdeal& I) -> py::object {
    std::size_t d = diameter(from_ideal(I));
    if (d == kInfiniteDistance) return py::none();
    return py::int_(d);
  });
}
