#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "unimon/apery.hpp"
#include "unimon/classify.hpp"
#include "unimon/cli.hpp"
#include "unimon/ideals.hpp"
#include "unimon/invariants.hpp"
#include "unimon/io.hpp"
#include "unimon/orders.hpp"

namespace py = pybind11;
using namespace unimon;

namespace {

Side parse_side(const std::string& s) { return io::side_from_string(s); }

std::string dump(const io::Json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact computations with unipotent numerical monoids";

  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  auto validation = py::register_exception<ValidationError>(m, "ValidationError", error.ptr());
  py::register_exception<Infeasible>(m, "Infeasible", error.ptr());
  py::register_exception<Undecided>(m, "Undecided", error.ptr());
  py::register_exception<Overflow>(m, "EntryOverflow", PyExc_OverflowError);
  py::register_exception<NotClosed>(m, "NotClosed", validation.ptr());

  py::class_<UnipotentMatrix>(m, "Matrix")
      .def(py::init(&UnipotentMatrix::from_upper), py::arg("n"), py::arg("upper"))
      .def_static("identity", &UnipotentMatrix::identity)
      .def_static("from_vector", &UnipotentMatrix::from_vector, py::arg("first_row"))
      .def_static("from_entries", &UnipotentMatrix::from_entries, py::arg("n"), py::arg("entries"))
      .def_property_readonly("n", &UnipotentMatrix::n)
      .def_property_readonly("upper", &UnipotentMatrix::upper)
      .def_property_readonly("first_row", &UnipotentMatrix::first_row)
      .def("at", &UnipotentMatrix::at)
      .def("is_identity", &UnipotentMatrix::is_identity)
      .def("inverse", [](const UnipotentMatrix& a) { return inverse(a); })
      .def("max_entry", [](const UnipotentMatrix& a) { return max_entry(a); })
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def(py::self < py::self)
      .def("__hash__", [](const UnipotentMatrix& a) { return MatrixHash{}(a); })
      .def("__repr__", &UnipotentMatrix::str);

  py::class_<PatternGroup>(m, "PatternGroup")
      .def_static("full", &PatternGroup::full)
      .def_static("first_row", &PatternGroup::first_row)
      .def_static("custom",
                  [](int n, const std::vector<std::pair<int, int>>& ps) {
                    std::vector<Position> positions;
                    for (auto [i, j] : ps) positions.push_back({i, j});
                    return PatternGroup::custom(n, positions);
                  })
      .def_property_readonly("n", &PatternGroup::n)
      .def_property_readonly("dimension", &PatternGroup::dimension)
      .def("contains", &PatternGroup::contains)
      .def(py::self == py::self)
      .def("__repr__", [](const PatternGroup& g) { return io::group_to_json(g).dump(); });

  py::class_<Monoid>(m, "Monoid")
      .def_static("from_gaps", &Monoid::from_gaps, py::arg("group"), py::arg("gaps"))
      .def_static("whole", &Monoid::whole)
      .def_static("from_json", [](const std::string& s) { return io::monoid_from_json(io::Json::parse(s)); })
      .def("to_json", [](const Monoid& s) { return dump(io::monoid_to_json(s)); })
      .def_property_readonly("group", &Monoid::group)
      .def_property_readonly("gaps", &Monoid::gaps)
      .def_property_readonly("genus", &Monoid::genus)
      .def_property_readonly("generating_number", &Monoid::generating_number)
      .def("__contains__", &Monoid::contains)
      .def("contains", &Monoid::contains)
      .def("is_gap", &Monoid::is_gap)
      .def(py::self == py::self)
      .def("__repr__", [](const Monoid& s) { return dump(io::monoid_to_json(s)); });

  m.def("from_generators",
        [](const PatternGroup& g, const std::vector<UnipotentMatrix>& gens, Entry bound)
            -> std::optional<Monoid> { return from_generators(g, gens, bound).monoid; },
        py::arg("group"), py::arg("generators"), py::arg("search_bound"),
        "Closure of a generator set, or None when the window does not certify it.");
  m.def("fundamental_monoid", &fundamental_monoid);
  m.def("minimal_generators", &minimal_generators);
  m.def("adjoin", &adjoin);
  m.def("intersect", &intersect);
  m.def("invariants_json", [](const Monoid& s) {
    const auto inv = invariants(s);
    return dump(io::Json{{"r", inv.r},
                         {"conductor", inv.conductor},
                         {"genus", inv.genus},
                         {"sporadicity", inv.sporadicity},
                         {"sporadic_set", io::matrices_to_json(inv.sporadic_set, s.group())}});
  });

  m.def("s_leq", [](const Monoid& s, const std::string& kind, const UnipotentMatrix& a,
                    const UnipotentMatrix& b) {
    if (kind == "entrywise") return leq_entrywise(a, b);
    return Order::for_side(parse_side(kind), s).leq(a, b);
  });

  m.def("frobenius", [](const Monoid& s, const std::string& side) { return frobenius(s, parse_side(side)); },
        py::arg("s"), py::arg("side") = "t");
  m.def("pseudo_frobenius",
        [](const Monoid& s, const std::string& side) { return pseudo_frobenius(s, parse_side(side)); },
        py::arg("s"), py::arg("side") = "t");
  m.def("special_gaps", &special_gaps);
  m.def("type_numbers", &type_numbers);

  m.def("apery_core", [](const Monoid& s, const UnipotentMatrix& a, const std::string& side) {
    return AperySet(s, a, parse_side(side)).core();
  });
  m.def("apery_contains",
        [](const Monoid& s, const UnipotentMatrix& a, const std::string& side,
           const UnipotentMatrix& b) { return AperySet(s, a, parse_side(side)).contains(b); });
  m.def("apery_maximal", [](const Monoid& s, const UnipotentMatrix& a, const std::string& side) {
    return apery_maximal(s, a, parse_side(side));
  });
  m.def("factor_via_apery", [](const Monoid& s, const UnipotentMatrix& a, const std::string& side,
                               const UnipotentMatrix& b) {
    const auto f = factor_via_apery(s, a, parse_side(side), b);
    return py::make_tuple(f.left_power, f.remainder, f.right_power);
  });

  m.def("ideal_min_generators",
        [](const Monoid& s, const std::string& side, const std::vector<UnipotentMatrix>& gens) {
          // Minimal elements of E S are among the generators themselves.
          Entry box = 1;
          for (const auto& g : gens) box = std::max(box, max_entry(g) + 1);
          return ideal_min_generators(RelativeIdeal::generated(s, parse_side(side), gens), box);
        });
  m.def("torsion_monoid", [](const Monoid& s) {
    std::vector<std::vector<UnipotentMatrix>> out;
    for (const auto& t : torsion_monoid(s)) out.push_back(t.gap_part());
    return out;
  });
  m.def("oversemigroups", [](const Monoid& s) { return oversemigroups(s); });
  m.def("idempotent_lattice_json", [](const Monoid& s) {
    return dump(io::lattice_to_json(torsion_idempotents(s), s.group()));
  });
  m.def("export_dot", [](const Monoid& s) { return io::export_dot(torsion_idempotents(s)); });

  m.def("is_irreducible",
        [](const Monoid& s, const std::string& method) {
          if (method != "torsion" && method != "oracle") throw InputError("unknown method " + method);
          return is_irreducible(s, method == "oracle" ? IrreducibilityMethod::oracle
                                                       : IrreducibilityMethod::torsion)
              .irreducible;
        },
        py::arg("s"), py::arg("method") = "torsion");
  m.def("classify_json", [](const Monoid& s) { return dump(io::report_to_json(classify(s), s.group())); });
  m.def("verify_json", [](const Monoid& s) { return dump(io::checks_to_json(verify_theorems(s))); });
  m.def("enumerate_monoids", [](const PatternGroup& g, std::size_t genus) { return enumerate_monoids(g, genus); });
  m.def("enumerate_irreducible",
        [](const PatternGroup& g, std::size_t genus) { return enumerate_irreducible(g, genus); });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
