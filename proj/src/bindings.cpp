// Python bindings for the core operations.  BigInt crosses the boundary as
// a plain Python int (converted through its decimal form).

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "rloop/analysis.hpp"
#include "rloop/dinf.hpp"
#include "rloop/errors.hpp"
#include "rloop/group.hpp"
#include "rloop/looptab.hpp"
#include "rloop/transversal.hpp"
#include "rloop/twist.hpp"

namespace py = pybind11;
using namespace rloop;

namespace pybind11 {
namespace detail {

template <>
struct type_caster<rloop::BigInt> {
  PYBIND11_TYPE_CASTER(rloop::BigInt, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    value = rloop::BigInt::from_string(py::str(src).cast<std::string>());
    return true;
  }

  static handle cast(const rloop::BigInt& src, return_value_policy, handle) {
    return PyLong_FromString(src.str().c_str(), nullptr, 10);
  }
};

}  // namespace detail
}  // namespace pybind11

namespace {

LoopFile parse_looptab_text(const std::string& text, const std::string& source) {
  std::istringstream in(text);
  return read_looptab(in, source);
}

std::string support_tag_name(SupportTag tag) {
  switch (tag) {
    case SupportTag::empty: return "empty";
    case SupportTag::all_integers: return "all-integers";
    case SupportTag::all_but_one: return "all-but-one";
  }
  return "?";
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "right-loop workbench: Cayley tables, twists, transversals, Z^B";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<StructuralError>(m, "StructuralError", PyExc_ValueError);
  py::register_exception<SpecViolation>(m, "SpecViolation", PyExc_ValueError);
  py::register_exception<PreconditionFailed>(m, "PreconditionFailed", PyExc_ValueError);
  py::register_exception<NotLeftSolvable>(m, "NotLeftSolvable", PyExc_ValueError);

  py::class_<Permutation>(m, "Permutation")
      .def(py::init<std::vector<int>>())
      .def_static("identity", &Permutation::identity)
      .def_property_readonly("degree", &Permutation::degree)
      .def("__call__", [](const Permutation& p, int x) { return p(x); })
      .def("images", &Permutation::images)
      .def("inverse", &Permutation::inverse)
      .def("is_identity", &Permutation::is_identity)
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def("__repr__", [](const Permutation& p) {
        std::string out = "Permutation([";
        for (std::size_t i = 0; i < p.images().size(); ++i)
          out += (i ? ", " : "") + std::to_string(p.images()[i]);
        return out + "])";
      });

  py::class_<CayleyTable>(m, "CayleyTable")
      .def(py::init<std::vector<std::string>, std::vector<int>>())
      .def_property_readonly("order", &CayleyTable::order)
      .def("entry", &CayleyTable::entry)
      .def("name", &CayleyTable::name, py::return_value_policy::copy)
      .def("names", &CayleyTable::names)
      .def("index_of",
           [](const CayleyTable& t, const std::string& name) { return t.index_of(name); })
      .def(py::self == py::self);

  py::enum_<TableKind>(m, "TableKind")
      .value("right_loop", TableKind::right_loop)
      .value("loop", TableKind::loop)
      .value("group", TableKind::group);

  py::class_<Violation>(m, "Violation")
      .def_readonly("axiom", &Violation::axiom)
      .def_readonly("message", &Violation::message)
      .def("__repr__", [](const Violation& v) { return v.axiom + ": " + v.message; });

  py::class_<ValidationReport>(m, "ValidationReport")
      .def_readonly("kind", &ValidationReport::kind)
      .def_readonly("violations", &ValidationReport::violations)
      .def_property_readonly("valid", &ValidationReport::valid);

  m.def("validate", &validate, py::arg("table"), py::arg("identity"), py::arg("kind"));

  py::class_<LeftTranslation>(m, "LeftTranslation")
      .def_readonly("images", &LeftTranslation::images)
      .def_readonly("bijective", &LeftTranslation::bijective)
      .def("perm", &LeftTranslation::perm);

  py::class_<RightLoopTable>(m, "RightLoopTable")
      .def(py::init<CayleyTable, int>())
      .def_property_readonly("table", &RightLoopTable::table)
      .def_property_readonly("identity", &RightLoopTable::identity)
      .def_property_readonly("order", &RightLoopTable::order)
      .def("op", &RightLoopTable::op)
      .def("name", &RightLoopTable::name, py::return_value_policy::copy)
      .def("right_divide", &RightLoopTable::right_divide, py::arg("y"), py::arg("x"))
      .def("left_divide", &RightLoopTable::left_divide, py::arg("x"), py::arg("y"))
      .def("right_translation", &RightLoopTable::right_translation)
      .def("left_translation", &RightLoopTable::left_translation)
      .def(py::self == py::self);

  // LOOPTAB I/O
  py::enum_<FileKind>(m, "FileKind")
      .value("looptab", FileKind::looptab)
      .value("grouptab", FileKind::grouptab);

  py::class_<LoopFile>(m, "LoopFile")
      .def_readonly("table", &LoopFile::table)
      .def_readonly("identity", &LoopFile::identity)
      .def_readonly("declared", &LoopFile::declared);

  m.def("parse_looptab", &parse_looptab_text, py::arg("text"), py::arg("source") = "<string>");
  m.def("read_looptab_file", &read_looptab_file, py::arg("path"));
  m.def("looptab_string", &looptab_string, py::arg("table"), py::arg("identity"),
        py::arg("kind") = FileKind::looptab);

  // twist
  py::class_<TwistSpec>(m, "TwistSpec")
      .def(py::init<std::vector<int>, Permutation>(), py::arg("b"), py::arg("eta"))
      .def_readonly("b", &TwistSpec::b)
      .def_readonly("eta", &TwistSpec::eta);

  m.def("twist", &twist, py::arg("loop"), py::arg("spec"));
  m.def(
      "translation_identities",
      [](const RightLoopTable& base, const TwistSpec& spec, const RightLoopTable& twisted) {
        return translation_identities(base, spec, twisted).failing;
      },
      py::arg("base"), py::arg("spec"), py::arg("twisted"),
      "indices whose twisted right translation differs from the predicted one (empty = ok)");

  // groups, transversals, c-groupoid data
  py::class_<FiniteGroup>(m, "FiniteGroup")
      .def_static("from_table", &FiniteGroup::from_table, py::arg("table"), py::arg("identity"))
      .def_property_readonly("order", &FiniteGroup::order)
      .def_property_readonly("identity", &FiniteGroup::identity)
      .def_property_readonly("table", &FiniteGroup::table)
      .def("op", &FiniteGroup::op)
      .def("inverse", &FiniteGroup::inverse)
      .def("name", &FiniteGroup::name, py::return_value_policy::copy);

  py::class_<Subgroup>(m, "Subgroup")
      .def_readonly("members", &Subgroup::members)
      .def_property_readonly("order", &Subgroup::order)
      .def("contains", &Subgroup::contains);

  m.def(
      "subgroup_closure",
      [](const FiniteGroup& g, const std::vector<int>& gens) {
        return subgroup_closure(g, gens);
      },
      py::arg("group"), py::arg("generators"));
  m.def(
      "right_cosets",
      [](const FiniteGroup& g, const Subgroup& h) { return right_cosets(g, h); },
      py::arg("group"), py::arg("subgroup"));

  py::class_<Transversal>(m, "Transversal").def_readonly("chosen", &Transversal::chosen);

  m.def(
      "transversal_from_elements",
      [](const FiniteGroup& g, const Subgroup& h, const std::vector<int>& elements) {
        return transversal_from_elements(g, h, elements);
      },
      py::arg("group"), py::arg("subgroup"), py::arg("elements"));

  py::class_<NrtEnumerator>(m, "NrtEnumerator")
      .def(py::init<const FiniteGroup&, const Subgroup&>(), py::keep_alive<1, 2>())
      .def_property_readonly("total", [](const NrtEnumerator& e) { return BigInt(e.total()); })
      .def("__iter__", [](NrtEnumerator& e) -> NrtEnumerator& { return e; })
      .def("__next__", [](NrtEnumerator& e) {
        auto t = e.next();
        if (!t) throw py::stop_iteration();
        return *t;
      });

  m.def("induced_operation", &induced_operation, py::arg("group"), py::arg("subgroup"),
        py::arg("transversal"));

  py::class_<CGroupoidData>(m, "CGroupoidData")
      .def_readonly("s_elements", &CGroupoidData::s_elements)
      .def_readonly("h_elements", &CGroupoidData::h_elements)
      .def("f_at", &CGroupoidData::f_at)
      .def("sigma_at", &CGroupoidData::sigma_at)
      .def("theta_at", &CGroupoidData::theta_at);

  m.def("c_groupoid", &c_groupoid, py::arg("group"), py::arg("subgroup"),
        py::arg("transversal"));
  m.def(
      "theta_action_check",
      [](const FiniteGroup& g, const CGroupoidData& data) {
        return theta_action_check(g, data).ok();
      },
      py::arg("group"), py::arg("data"));
  m.def(
      "cgroupoid_string",
      [](const FiniteGroup& g, const CGroupoidData& data) {
        std::ostringstream out;
        write_cgroupoid(out, g, data);
        return out.str();
      },
      py::arg("group"), py::arg("data"));

  // affine maps and Z^B
  py::class_<AffineMap>(m, "AffineMap")
      .def(py::init<int, BigInt>(), py::arg("sign"), py::arg("offset"))
      .def_static("identity", &AffineMap::identity)
      .def_static("translation", &AffineMap::translation)
      .def_static("reflection", &AffineMap::reflection)
      .def_property_readonly("sign", &AffineMap::sign)
      .def_property_readonly("offset", &AffineMap::offset)
      .def("apply", &AffineMap::apply)
      .def("inverse", &AffineMap::inverse)
      .def("is_identity", &AffineMap::is_identity)
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def("__repr__", [](const AffineMap& a) {
        std::ostringstream out;
        out << "AffineMap(" << a << ")";
        return out.str();
      });

  py::class_<SupportClass>(m, "SupportClass")
      .def_property_readonly("tag",
                             [](const SupportClass& s) { return support_tag_name(s.tag); })
      .def_property_readonly("fixed_point",
                             [](const SupportClass& s) { return s.fixed_point; })
      .def("is_finite", &SupportClass::is_finite);

  m.def("affine_support", &affine_support, py::arg("map"));

  py::class_<ZBLoop>(m, "ZBLoop")
      .def(py::init<std::vector<BigInt>>(), py::arg("b"))
      .def_property_readonly("b", &ZBLoop::b)
      .def("in_b", &ZBLoop::in_b)
      .def("op", &ZBLoop::op, py::arg("i"), py::arg("k"))
      .def("right_divide", &ZBLoop::right_divide, py::arg("z"), py::arg("k"))
      .def("right_translation", &ZBLoop::right_translation, py::arg("k"));

  py::class_<DinfElement>(m, "DinfElement")
      .def(py::init([](bool flip, BigInt power) {
             return DinfElement{flip, std::move(power)};
           }),
           py::arg("flip"), py::arg("power"))
      .def_readonly("flip", &DinfElement::flip)
      .def_readonly("power", &DinfElement::power)
      .def(py::self == py::self)
      .def("__repr__", [](const DinfElement& e) {
        std::ostringstream out;
        out << "DinfElement(" << e << ")";
        return out.str();
      });

  m.def("dinf_product", &dinf_product);
  m.def("dinf_inverse", &dinf_inverse);
  m.def("transversal_op", &transversal_op, py::arg("loop"), py::arg("i"), py::arg("k"));
  m.def(
      "isomorphism_check",
      [](const ZBLoop& loop, long window) {
        IsoReport report = isomorphism_check(loop, window);
        py::dict out;
        out["ok"] = report.ok();
        out["pairs_checked"] = report.pairs_checked;
        out["warnings"] = report.warnings;
        py::list mismatches;
        for (const auto& mm : report.mismatches)
          mismatches.append(py::make_tuple(mm.i, mm.k, mm.via_transversal, mm.via_loop));
        out["mismatches"] = mismatches;
        return out;
      },
      py::arg("loop"), py::arg("window"));

  // analysis
  py::enum_<LoopProperty>(m, "LoopProperty")
      .value("loop", LoopProperty::loop)
      .value("commutative", LoopProperty::commutative)
      .value("inverse_property", LoopProperty::inverse_property);

  py::class_<PropertyReport>(m, "PropertyReport")
      .def_readonly("property", &PropertyReport::property)
      .def_readonly("holds", &PropertyReport::holds)
      .def_readonly("witnesses", &PropertyReport::witnesses)
      .def_readonly("inverse_map", &PropertyReport::inverse_map);

  m.def("check_property", &check_property, py::arg("table"), py::arg("property"));
  m.def("left_inverse_map", &left_inverse_map, py::arg("table"));
  m.def(
      "lemma1_check",
      [](const RightLoopTable& table) {
        Lemma1Report report = lemma1_check(table);
        return py::make_tuple(report.ok(), report.failing, report.double_inverse_failing);
      },
      py::arg("table"), "returns (ok, failing, double_inverse_failing)");

  py::class_<TranslationWord>(m, "TranslationWord")
      .def_property_readonly("letters", [](const TranslationWord& w) {
        py::list out;
        for (const auto& letter : w.letters)
          out.append(py::make_tuple(letter.generator, letter.exponent));
        return out;
      });

  py::class_<AlphaResult>(m, "AlphaResult")
      .def_readonly("twisted", &AlphaResult::twisted)
      .def_readonly("word", &AlphaResult::word)
      .def_readonly("realized", &AlphaResult::realized);

  m.def("build_alpha", &build_alpha, py::arg("base"), py::arg("a"), py::arg("b"),
        py::arg("eta"));
  m.def(
      "alpha_identity_check",
      [](const RightLoopTable& base, int a, int b, const Permutation& eta) {
        return alpha_identity_check(base, a, b, eta).mismatch_points;
      },
      py::arg("base"), py::arg("a"), py::arg("b"), py::arg("eta"),
      "mismatching points (empty = identity holds)");

  py::class_<SupportReport>(m, "SupportReport")
      .def_readonly("moved_count", &SupportReport::moved_count)
      .def_readonly("moved_points", &SupportReport::moved_points)
      .def_readonly("is_identity", &SupportReport::is_identity);

  m.def("support", &support, py::arg("p"));

  py::class_<MulGroupResult>(m, "MulGroupResult")
      .def_readonly("order", &MulGroupResult::order)
      .def_readonly("generator_count", &MulGroupResult::generator_count)
      .def_readonly("closed", &MulGroupResult::closed);

  m.def("right_mult_group", &right_mult_group, py::arg("table"), py::arg("cap"));

  py::class_<HomogeneityMap>(m, "HomogeneityMap")
      .def_readonly("via", &HomogeneityMap::via)
      .def_readonly("images", &HomogeneityMap::images)
      .def_readonly("bijective", &HomogeneityMap::bijective);

  m.def("homogeneity_map", &homogeneity_map, py::arg("table"), py::arg("x"), py::arg("y"));

  py::class_<PermWitnessHit>(m, "PermWitnessHit")
      .def_readonly("word", &PermWitnessHit::word)
      .def_readonly("realized", &PermWitnessHit::realized)
      .def_readonly("moved", &PermWitnessHit::moved);

  py::class_<AffineWitnessHit>(m, "AffineWitnessHit")
      .def_readonly("word", &AffineWitnessHit::word)
      .def_readonly("realized", &AffineWitnessHit::realized)
      .def_readonly("moved", &AffineWitnessHit::moved);

  m.def(
      "witness_search",
      [](const std::vector<Permutation>& gens, int max_len, std::uint64_t max_support) {
        return witness_search(gens, max_len, max_support);
      },
      py::arg("generators"), py::arg("max_len"), py::arg("max_support"));
  m.def(
      "witness_search_affine",
      [](const std::vector<AffineMap>& gens, int max_len, std::uint64_t max_support) {
        return witness_search(gens, max_len, max_support);
      },
      py::arg("generators"), py::arg("max_len"), py::arg("max_support"));
  m.def(
      "affine_word_closure",
      [](const std::vector<AffineMap>& gens, int max_len) {
        return affine_word_closure(gens, max_len);
      },
      py::arg("generators"), py::arg("max_len"));

#ifdef VERSION_INFO
#define RLOOP_STR_INNER(x) #x
#define RLOOP_STR(x) RLOOP_STR_INNER(x)
  m.attr("__version__") = RLOOP_STR(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
