#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "figeight/cfrac.hpp"
#include "figeight/classification.hpp"
#include "figeight/json.hpp"
#include "figeight/surgery_enum.hpp"
#include "figeight/tight_counts.hpp"
#include "figeight/torus_dynamics.hpp"

namespace py = pybind11;
using namespace figeight;

namespace {

// Slopes cross the boundary as text so that ints, Fractions and "inf" all work.
Slope slope_of(const py::handle& h) { return Slope::parse(py::str(h).cast<std::string>()); }
Rational rational_of(const py::handle& h) { return parse_rational(py::str(h).cast<std::string>()); }
py::object to_py(const Integer& v) {
  return py::module_::import("builtins").attr("int")(py::str(v.str()));
}

std::vector<std::string> strings(const std::vector<Slope>& v) {
  std::vector<std::string> out;
  for (const auto& s : v) out.push_back(s.str());
  return out;
}

py::object json_value(const Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_figeight, m) {
  m.doc() = "Tight contact structures on surgeries on the figure-eight knot";

  py::register_exception<std::domain_error>(m, "DomainError", PyExc_ValueError);

  m.def("phi", [](py::handle r) { return to_py(phi(rational_of(r)).value); });
  m.def("psi", [](py::handle r) { return to_py(psi(rational_of(r)).value); });
  m.def(
      "cfrac",
      [](py::handle x, const std::string& form) {
        const auto f = form == "st" ? CfracForm::solid_torus : CfracForm::standard;
        const auto expansion = neg_cfrac(rational_of(x), f);
        std::vector<py::object> out;
        for (const auto& c : expansion.coefficients()) out.push_back(to_py(c));
        return out;
      },
      py::arg("x"), py::arg("form") = "std");
  m.def("is_farey_adjacent",
        [](py::handle a, py::handle b) { return is_farey_adjacent(slope_of(a), slope_of(b)); });
  m.def(
      "bypass_step",
      [](py::handle s, py::handle arc, bool back) {
        return bypass_step(slope_of(s), {back ? AttachSide::back : AttachSide::front, slope_of(arc)})
            .str();
      },
      py::arg("s"), py::arg("arc"), py::arg("back") = false);
  m.def("thicken_path", [](py::handle s) { return json_value(to_json(thicken_path(slope_of(s)))); });
  m.def("slopes_in_window", [](py::handle r, long bound) {
    return strings(slopes_in_window({slope_of(r), Integer(bound)}));
  });
  m.def("solid_torus_count", [](py::handle meridian, py::handle dividing) {
    return to_py(solid_torus_count(SolidTorusSpec(slope_of(meridian), slope_of(dividing))));
  });
  m.def("smooth_framing_check", [](py::handle r) { return smooth_framing_check(rational_of(r)); });
  m.def("geometry", [](py::handle r) { return to_string(geometry_of(slope_of(r))); });
  m.def("tight_count", [](py::handle r) {
    const auto c = tight_count(slope_of(r));
    return py::make_tuple(to_string(c.kind),
                          c.kind == TightCount::Kind::infinite ? py::object(py::none())
                                                               : to_py(c.value));
  });
  m.def("classify", [](py::handle r) { return json_value(to_json(classify(slope_of(r)))); });
}
