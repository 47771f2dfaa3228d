#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gds/autos.hpp"
#include "gds/error.hpp"
#include "gds/example.hpp"
#include "gds/filtration.hpp"
#include "gds/lnd.hpp"
#include "gds/parse.hpp"

namespace py = pybind11;
using namespace gds;

namespace {

// Python-side handles; the library hands out shared surfaces and value types.
struct PySurface {
  Surface s;
};

struct PyElement {
  BElement b;
};

BElement as_element(const PySurface& s, const py::object& v) {
  if (py::isinstance<PyElement>(v)) return v.cast<PyElement>().b;
  if (py::isinstance<py::int_>(v)) return BElement::constant(s.s, v.cast<long>());
  return normalize(s.s, parse_poly(s.s->field(), v.cast<std::string>()));
}

PySurface make_py_surface(const std::string& f, const std::string& phi, const std::string& modulus) {
  const FieldPtr k = parse_modulus(modulus);
  return {make_surface(k, parse_poly(k, f), parse_poly(k, phi))};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact algebra on generalized Danielewski surfaces";

  static py::exception<Error> error(m, "GdsError");
  static py::exception<ParseError> parse_error(m, "ParseError", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      py::object inst = py::reinterpret_borrow<py::object>(parse_error)(e.what());
      inst.attr("kind") = "ParseError";
      inst.attr("line") = e.line();
      inst.attr("column") = e.column();
      PyErr_SetObject(parse_error.ptr(), inst.ptr());
    } catch (const Error& e) {
      py::object inst = py::reinterpret_borrow<py::object>(error)(e.what());
      inst.attr("kind") = std::string(to_string(e.kind()));
      PyErr_SetObject(error.ptr(), inst.ptr());
    }
  });

  py::class_<PySurface>(m, "Surface")
      .def(py::init(&make_py_surface), py::arg("f"), py::arg("phi"), py::arg("modulus") = "t")
      .def_property_readonly("f", [](const PySurface& s) { return s.s->f().to_string(); })
      .def_property_readonly("phi", [](const PySurface& s) { return s.s->phi().to_string(); })
      .def_property_readonly("r", [](const PySurface& s) { return s.s->r(); })
      .def_property_readonly("d", [](const PySurface& s) { return s.s->d(); })
      .def_property_readonly("modulus", [](const PySurface& s) { return s.s->field()->to_string(); })
      .def("normalize", [](const PySurface& s, const std::string& p) { return PyElement{normalize(s.s, parse_poly(s.s->field(), p))}; })
      .def("x", [](const PySurface& s) { return PyElement{BElement::x(s.s)}; })
      .def("y", [](const PySurface& s) { return PyElement{BElement::y(s.s)}; })
      .def("z", [](const PySurface& s) { return PyElement{BElement::z(s.s)}; })
      .def("__repr__", [](const PySurface& s) {
        return "Surface(f='" + s.s->f().to_string() + "', phi='" + s.s->phi().to_string() + "')";
      });

  py::class_<PyElement>(m, "Element")
      .def("__str__", [](const PyElement& e) { return e.b.to_string(); })
      .def("__repr__", [](const PyElement& e) { return "Element('" + e.b.to_string() + "')"; })
      .def("__eq__", [](const PyElement& a, const PyElement& b) { return a.b == b.b; })
      .def("__add__", [](const PyElement& a, const PyElement& b) { return PyElement{a.b + b.b}; })
      .def("__sub__", [](const PyElement& a, const PyElement& b) { return PyElement{a.b - b.b}; })
      .def("__mul__", [](const PyElement& a, const PyElement& b) { return PyElement{a.b * b.b}; })
      .def("__neg__", [](const PyElement& a) { return PyElement{-a.b}; })
      .def("__pow__", [](const PyElement& a, unsigned e) { return PyElement{a.b.pow(e)}; })
      .def("is_zero", [](const PyElement& a) { return a.b.is_zero(); })
      .def("in_kx", [](const PyElement& a) -> std::optional<std::string> {
        const auto p = in_kx(a.b);
        if (!p) return std::nullopt;
        return p->to_string();
      });

  py::class_<Derivation>(m, "Derivation")
      .def(py::init([](const PySurface& s, const py::object& dx, const py::object& dy, const py::object& dz) {
             return make_derivation(s.s, as_element(s, dx), as_element(s, dy), as_element(s, dz));
           }),
           py::arg("surface"), py::arg("dx"), py::arg("dy"), py::arg("dz"))
      .def_property_readonly("dx", [](const Derivation& D) { return D.dx().to_string(); })
      .def_property_readonly("dy", [](const Derivation& D) { return D.dy().to_string(); })
      .def_property_readonly("dz", [](const Derivation& D) { return D.dz().to_string(); })
      .def("apply", [](const Derivation& D, const PyElement& b) { return PyElement{apply(D, b.b)}; })
      .def("scaled", [](const Derivation& D, const std::string& h) {
        return scale(from_kx(D.surface(), parse_poly(D.surface()->field(), h)), D);
      })
      .def("nilpotency_index",
           [](const Derivation& D, const PyElement& b, unsigned cap) { return nilpotency_index(D, b.b, cap); },
           py::arg("element"), py::arg("cap") = kDefaultNilpotencyCap)
      .def("classify", [](const Derivation& D) {
        const LndClass c = classify_lnd(D);
        py::dict out;
        out["kind"] = std::string(to_string(c.kind));
        out["h"] = c.h ? py::object(py::str(c.h->to_string())) : py::object(py::none());
        out["reason"] = c.reason;
        return out;
      })
      .def("kernel_member", [](const Derivation& D, const PyElement& b) { return kernel_member(D, b.b); });

  m.def("canonical_derivation", [](const PySurface& s) { return canonical_D(s.s); });
  m.def("invariants", [](const PySurface& s) {
    const InvariantsReport r = invariants_report(s.s);
    py::dict out;
    out["ML"] = r.ml_invariant;
    out["HD"] = r.hd_invariant;
    out["witness_h"] = r.witness_h.to_string();
    out["sample_size"] = r.sample_size;
    out["sample_in_kernel"] = r.sample_in_kernel;
    out["kernel_mismatches"] = r.kernel_mismatches;
    out["y_nilpotency"] = r.y_nilpotency;
    out["verified"] = r.verified();
    return out;
  });

  py::class_<Morphism>(m, "Morphism")
      .def_property_readonly("word", [](const Morphism& a) -> std::optional<std::string> {
        if (!a.word()) return std::nullopt;
        return word_to_string(*a.word());
      })
      .def("images", [](const Morphism& a) { return py::make_tuple(a.tx().to_string(), a.ty().to_string(), a.tz().to_string()); })
      .def("apply", [](const Morphism& a, const PyElement& b) { return PyElement{apply(a, b.b)}; })
      .def("compose", [](const Morphism& a, const Morphism& b) { return compose(a, b); })
      .def("inverse", [](const Morphism& a) { return invert(a); })
      .def("__eq__", [](const Morphism& a, const Morphism& b) { return morphism_equal(a, b); });

  m.def("automorphism", [](const PySurface& s, const std::string& word) {
    return from_word(s.s, parse_word(s.s->field(), word));
  }, py::arg("surface"), py::arg("word"));
  m.def("identity", [](const PySurface& s) { return identity(s.s); });

  m.def("unity_decompose", [](const std::string& g) {
    const UnityDecomposition u = unity_decompose(parse_poly(Field::rationals(), g));
    return py::make_tuple(u.i, u.s, u.h.to_string());
  });
  m.def("center", [](const PySurface& s) {
    const Centering c = center(s.s);
    return py::make_tuple(PySurface{c.surface}, c.a.to_string(), c.b.to_string());
  });

  m.def("fadic", [](const PySurface& s, const std::string& p) {
    std::map<unsigned, std::string> out;
    for (const auto& [n, digit] : fadic_expand(s.s, parse_poly(s.s->field(), p)).digits) out[n] = digit.to_string();
    return out;
  });
  m.def("weight", [](const PyElement& b, long mu, long nu) { return weight(embed_in_T(b.b), {mu, nu}); },
        py::arg("element"), py::arg("mu") = 1, py::arg("nu") = 0);
  m.def("leading_form",
        [](const PyElement& b, long mu, long nu) { return leading_form(embed_in_T(b.b), {mu, nu}).to_string(); },
        py::arg("element"), py::arg("mu") = 1, py::arg("nu") = 0);

  m.def("example_check", [] {
    const example::CheckResult r = example::run_check();
    py::dict out;
    out["passed"] = r.passed();
    out["H(z)"] = r.hz;
    out["H(y)"] = r.hy;
    out["relation_residue"] = r.residue;
    out["published_H(y)_matches"] = r.hy_matches_published;
    return out;
  });
}
