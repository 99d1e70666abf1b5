#include <sstream>

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "conway/classify.hpp"
#include "conway/design.hpp"
#include "conway/enumerate.hpp"
#include "conway/moves.hpp"
#include "conway/perm_group.hpp"
#include "conway/report.hpp"

namespace py = pybind11;
using namespace conway;

namespace {

py::object ToInt(const GroupOrder& value) {
  return py::module_::import("builtins").attr("int")(value.str());
}

py::object ToDict(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Supersimple 2-(n,4,lambda) designs and their hole stabilizers";

  py::register_exception<Error>(m, "ConwayError", PyExc_ValueError);

  py::class_<Permutation>(m, "Permutation")
      .def(py::init<std::size_t>(), py::arg("degree"))
      .def_static("from_images", &Permutation::FromImages)
      .def_static("from_cycles", &Permutation::FromCycles, py::arg("degree"), py::arg("cycles"))
      .def_static("parse", &Permutation::Parse, py::arg("text"), py::arg("degree"))
      .def_property_readonly("degree", &Permutation::degree)
      .def_property_readonly("images", [](const Permutation& p) {
        return std::vector<Point>(p.images().begin(), p.images().end());
      })
      .def("apply", &Permutation::Apply)
      .def("inverse", &Permutation::Inverse)
      .def("is_identity", &Permutation::IsIdentity)
      .def("support", &Permutation::Support)
      .def("cycle_type", &Permutation::cycle_type)
      .def("is_even", [](const Permutation& p) { return p.parity() == Parity::kEven; })
      .def("cycles", &Permutation::ToCycles)
      .def("__mul__", &Compose)
      .def("__eq__", [](const Permutation& a, const Permutation& b) { return a == b; })
      .def("__lt__", [](const Permutation& a, const Permutation& b) { return a < b; })
      .def("__hash__", [](const Permutation& p) {
        return py::hash(py::tuple(py::cast(std::vector<Point>(p.images().begin(), p.images().end()))));
      })
      .def("__str__", &Permutation::ToString)
      .def("__repr__", [](const Permutation& p) { return "Permutation('" + p.ToString() + "')"; });

  py::class_<Design>(m, "Design")
      .def(py::init<std::size_t, std::size_t, std::vector<Line>>(), py::arg("n"),
           py::arg("lam"), py::arg("lines"))
      .def_property_readonly("n", &Design::n)
      .def_property_readonly("lam", &Design::lambda)
      .def_property_readonly("lines", &Design::lines)
      .def("lines_through_pair", &Design::LinesThroughPair)
      .def("overline", &Design::Overline)
      .def("is_collinear", &Design::IsCollinear)
      .def("__eq__", [](const Design& a, const Design& b) { return a == b; })
      .def("__str__", &SerializeDesign)
      .def("__repr__", [](const Design& d) {
        return "Design(n=" + std::to_string(d.n()) + ", lam=" + std::to_string(d.lambda()) +
               ", " + std::to_string(d.lines().size()) + " lines)";
      });

  m.def("builtin", &Builtin, py::arg("name"));
  m.def("builtin_names", &BuiltinNames);
  m.def("parse_design", [](const std::string& text) { return ParseDesign(text); });
  m.def("serialize_design", &SerializeDesign);
  m.def("load_design", &LoadDesign);
  m.def("boolean_quadruple_system", &BooleanQuadrupleSystem, py::arg("k"),
        py::arg("size_cap") = kDefaultSizeCap);
  m.def("projective_plane_3", &ProjectivePlane3);
  m.def("relabel", &Relabel);
  m.def("validate", [](const Design& d) { return ToDict(ToJson(Validate(d))); });

  py::class_<Group>(m, "Group")
      .def(py::init<std::size_t, std::vector<Permutation>>(), py::arg("degree"),
           py::arg("generators"))
      .def_property_readonly("degree", &Group::degree)
      .def_property_readonly("generators", &Group::generators)
      .def("order", [](const Group& g) { return ToInt(g.Order()); })
      .def("contains", &Group::Contains)
      .def("__contains__", &Group::Contains)
      .def("orbits", &Group::Orbits)
      .def("is_transitive", &Group::IsTransitive)
      .def("is_generously_transitive", &Group::IsGenerouslyTransitive)
      .def("is_primitive", &Group::IsPrimitive)
      .def("block_system", [](const Group& g) -> std::optional<std::vector<std::vector<Point>>> {
        auto blocks = g.FindBlockSystem();
        if (!blocks) return std::nullopt;
        return blocks->blocks;
      })
      .def("contains_alternating", &Group::ContainsAlternating)
      .def("elements", &Group::Elements, py::arg("cap") = kDefaultElementCap);

  m.def("elementary_move", &ElementaryMove, py::arg("design"), py::arg("x"), py::arg("y"));
  m.def("evaluate_moves", [](const Design& d, std::vector<Point> waypoints) {
    return EvaluateMoves(d, MoveSequence{std::move(waypoints)});
  }, py::arg("design"), py::arg("waypoints"));
  m.def("hole_stabilizer_generators", &HoleStabilizerGenerators);
  m.def("hole_stabilizer", &HoleStabilizer, py::arg("design"), py::arg("hole") = 0);

  m.def("signature", [](const Group& g) { return ToDict(ToJson(ComputeSignature(g))); });
  m.def("recognize", [](const Group& g) { return Recognize(g.degree(), g.Order()); });
  m.def("check_degree_bounds", [](const Design& d, const Group& g) {
    return ToDict(ToJson(CheckDegreeBounds(d.n(), d.lambda(), ComputeSignature(g))));
  });
  m.def("check_lambda3_classification", [](const Design& d, const Group& g) {
    return ToDict(ToJson(CheckLambda3Classification(d.n(), ComputeSignature(g))));
  });
  m.def("support_criterion", [](const Group& g, std::size_t lam, std::uint64_t cap) {
    return ToDict(ToJson(SupportCriterion(g, lam, cap)));
  }, py::arg("group"), py::arg("lam"), py::arg("cap") = kDefaultElementCap);
  m.def("hole_stabilizer_report", [](const Design& d, Point hole) {
    return ToDict(HoleStabilizerReport(d, hole, HoleStabilizer(d, hole)));
  }, py::arg("design"), py::arg("hole") = 0);

  m.def("canonical_form", [](const Design& d) { return CanonicalForm(d); });
  m.def("canonical_hash", &CanonicalHash);
  m.def("is_canonical", [](const Design& d) { return IsCanonical(d); });
  m.def("enumerate_designs", [](std::size_t n, std::size_t lam, std::size_t workers,
                                std::optional<std::uint64_t> seed) {
    EnumerationOptions opts;
    opts.workers = workers;
    opts.shuffle_seed = seed;
    py::gil_scoped_release release;
    return EnumerateDesigns(n, lam, opts).designs;
  }, py::arg("n"), py::arg("lam"), py::arg("workers") = 1, py::arg("seed") = std::nullopt);
  m.def("count_designs", [](std::size_t n, std::size_t lam, std::size_t workers) {
    py::gil_scoped_release release;
    return CountDesigns(n, lam, workers);
  }, py::arg("n"), py::arg("lam"), py::arg("workers") = 1);
}
