#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "shortdiff/catalog.hpp"
#include "shortdiff/cli.hpp"
#include "shortdiff/constructions.hpp"
#include "shortdiff/io.hpp"

namespace py = pybind11;
using namespace shortdiff;

namespace {

py::object to_py(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

using PyFamily = std::vector<std::pair<Label, std::vector<Element>>>;

LabeledFamily from_py(const PyFamily& f) {
  std::vector<Entry> entries;
  for (const auto& [label, block] : f) entries.push_back(Entry{label, Block(block)});
  return LabeledFamily(std::move(entries));
}

PyFamily family_py(const LabeledFamily& f) {
  PyFamily out;
  for (const auto& e : f.entries()) out.emplace_back(e.label, e.block.elements);
  return out;
}

py::dict cert_py(const SdfCertificate& c) { return to_py(io::certificate_to_json(c)); }

py::dict design_py(const Design& d) { return to_py(io::design_to_json(d)); }

py::dict construction_py(const LabeledFamily& f, const SdfCertificate& c, const Design* d) {
  py::dict out;
  out["entries"] = family_py(f);
  out["certificate"] = cert_py(c);
  if (d) out["design"] = design_py(*d);
  return out;
}

AutomorphismGroup closure_of(const FiniteGroup& g, const std::vector<Endomorphism>& gens) { return closure(g, gens); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Short difference families and block designs from fixed-point-free automorphism groups";

  // module-lifetime reference, never released
  static PyObject* error_type = PyErr_NewException("shortdiff._core.Error", PyExc_ValueError, nullptr);
  m.attr("Error") = py::handle(error_type);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error_type)(e.what());
      exc.attr("kind") = std::string(to_string(e.kind()));
      exc.attr("condition") = e.condition();
      exc.attr("witness") = to_py(e.witness());
      PyErr_SetObject(error_type, exc.ptr());
    }
  });

  py::class_<FiniteGroup>(m, "FiniteGroup")
      .def_static("cyclic", &FiniteGroup::cyclic, py::arg("n"))
      .def_static("elementary_abelian", &FiniteGroup::elementary_abelian, py::arg("p"), py::arg("k"))
      .def_static("from_cayley", &FiniteGroup::from_cayley, py::arg("table"),
                  py::arg("order_cap") = FiniteGroup::kDefaultOrderCap)
      .def_static("direct_product", [](const std::vector<FiniteGroup>& fs) { return FiniteGroup::direct_product(fs); })
      .def_property_readonly("order", &FiniteGroup::order)
      .def_property_readonly("commutative", &FiniteGroup::commutative)
      .def("add", &FiniteGroup::add)
      .def("neg", &FiniteGroup::neg)
      .def("sub", &FiniteGroup::sub)
      .def("element_order", &FiniteGroup::element_order)
      .def("cayley_table", &FiniteGroup::cayley_table)
      .def("name", &FiniteGroup::name)
      .def("__len__", &FiniteGroup::order)
      .def("__eq__", &FiniteGroup::operator==);

  py::class_<FiniteField>(m, "FiniteField")
      .def_static("build", &FiniteField::build, py::arg("p"), py::arg("n"), py::arg("modulus") = std::nullopt)
      .def_property_readonly("order", &FiniteField::order)
      .def_property_readonly("modulus", &FiniteField::modulus)
      .def_property_readonly("additive_group", &FiniteField::additive_group)
      .def("unit_subgroup", [](const FiniteField& f, int d) {
        std::vector<std::vector<int>> out;
        for (const auto& a : f.unit_subgroup_elements(d)) out.push_back(a.coeffs);
        return out;
      });

  py::class_<Endomorphism>(m, "Endomorphism")
      .def_static("make", &Endomorphism::make)
      .def_static("identity", &Endomorphism::identity)
      .def_static("zero", &Endomorphism::zero)
      .def_property_readonly("table", &Endomorphism::table)
      .def_property_readonly("bijective", &Endomorphism::is_bijective)
      .def("order", &Endomorphism::order)
      .def("__call__", &Endomorphism::operator())
      .def("__eq__", &Endomorphism::operator==);

  m.def("scalar", &scalar_endo, py::arg("group"), py::arg("c"));
  m.def("matrix", &matrix_endo, py::arg("group"), py::arg("matrix"));
  m.def("field_mult", [](const FiniteField& f, const std::vector<int>& a) { return field_mult_endo(f, f.element(a)); });
  m.def("one_minus", [](const Endomorphism& a) { return one_minus(a).table; });

  py::class_<AutomorphismGroup>(m, "AutomorphismGroup")
      .def_property_readonly("order", &AutomorphismGroup::order)
      .def_property_readonly("elements", &AutomorphismGroup::elements)
      .def("__len__", &AutomorphismGroup::order);

  m.def("closure", &closure_of, py::arg("group"), py::arg("generators"));
  m.def("is_fpf", [](const AutomorphismGroup& phi) {
    const FpfReport r = is_fpf(phi);
    py::dict out;
    out["fpf"] = r.fpf;
    out["witness"] = r.witness ? py::cast(*r.witness) : py::none();
    return out;
  });
  m.def("classification_check", [](const AutomorphismGroup& phi) {
    const ClassificationReport r = classification_check(phi);
    py::dict out;
    out["order"] = r.group_order;
    out["center_order"] = r.center_order;
    out["quotient_order"] = r.quotient_order;
    out["admissible"] = r.quotient_order_admissible;
    return out;
  });

  m.def("verify_sdf", [](const FiniteGroup& g, const PyFamily& f) -> py::object {
    const auto v = verify_sdf(g, from_py(f));
    if (v) return cert_py(v.value());
    return to_py(v.failure().to_json());
  });
  m.def("development", [](const FiniteGroup& g, const PyFamily& f) {
    std::vector<std::vector<Element>> out;
    for (const Block& b : development(g, from_py(f))) out.push_back(b.elements);
    return out;
  });
  m.def("verify_bibd", [](int v, const std::vector<std::vector<Element>>& blocks) -> py::object {
    std::vector<Block> bs;
    for (const auto& b : blocks) bs.emplace_back(b);
    const auto d = verify_bibd(v, std::move(bs));
    if (d) return design_py(d.value());
    return to_py(d.failure().to_json());
  });

  m.def("orbit_family", [](const FiniteGroup& g, const std::vector<Endomorphism>& s) {
    const OrbitFamily r = orbit_family(g, s);
    return construction_py(r.family, r.certificate, nullptr);
  });
  m.def("ferrero", [](const FiniteGroup& g, const std::vector<Endomorphism>& gens) {
    const DesignConstruction r = ferrero(g, closure(g, gens));
    return construction_py(r.family, r.certificate, &r.design);
  });
  m.def("ferrero_with_zero", [](const FiniteGroup& g, const std::vector<Endomorphism>& gens) {
    const FerreroWithZero r = ferrero_with_zero(g, closure(g, gens));
    py::dict out = construction_py(r.family, r.certificate, &r.design);
    out["case"] = std::string(to_string(r.subgroup_case));
    return out;
  });
  m.def("segments", [](const FiniteGroup& g, const std::vector<Endomorphism>& s) {
    const OrbitFamily r = segments(g, s);
    return construction_py(r.family, r.certificate, nullptr);
  });
  m.def("segments_order6", [](const FiniteGroup& g, const std::vector<Endomorphism>& gens) {
    const OrbitFamily r = segments_order6(g, closure(g, gens));
    return construction_py(r.family, r.certificate, nullptr);
  });
  m.def("transnormal", [](const FiniteGroup& g, const std::vector<Endomorphism>& s,
                          const std::vector<Endomorphism>& psi_gens) {
    const TransnormalResult r = transnormal(g, s, closure(g, psi_gens));
    py::dict out = construction_py(r.family, r.certificate, &r.design);
    out["pair_orbit_size"] = r.pair_orbit_size;
    out["doubly_transitive"] = r.doubly_transitive;
    return out;
  });

  m.def("catalog", [](int max_order, int cap) { return render_catalog(build_catalog(max_order, cap)); },
        py::arg("max_order"), py::arg("cap") = 64);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
