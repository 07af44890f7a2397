#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include "cliffroots/errors.hpp"
#include "cliffroots/golden.hpp"
#include "cliffroots/report.hpp"

namespace py = pybind11;
using namespace cliffroots;

namespace {

std::string dump(const Json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Square roots of -1 in real Clifford algebras";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<UnsupportedSignature>(m, "UnsupportedSignature", PyExc_ValueError);
  py::register_exception<InconsistencyError>(m, "InconsistencyError", PyExc_RuntimeError);

  py::class_<Signature>(m, "Signature")
      .def(py::init<int, int>(), py::arg("p"), py::arg("q"))
      .def_property_readonly("p", &Signature::p)
      .def_property_readonly("q", &Signature::q)
      .def_property_readonly("n", &Signature::n)
      .def_property_readonly("d", &Signature::d)
      .def_property_readonly("dim", &Signature::dim)
      .def_property_readonly("ring", [](const Signature& s) { return std::string(ring_name(s.ring())); })
      .def("__repr__", &Signature::name)
      .def(py::self == py::self);

  py::class_<MultiVector>(m, "MultiVector")
      .def(py::init([](const std::string& text, const Signature& sig) { return parse_multivector(text, sig); }),
           py::arg("text"), py::arg("signature"))
      .def_property_readonly("signature", &MultiVector::signature)
      .def("coefficients", [](const MultiVector& a) {
        std::map<std::string, std::string> out;
        for (const auto& [mask, c] : a.terms()) out[Blade(mask).name()] = to_string(c);
        return out;
      })
      .def("is_root", &is_root)
      .def("reversion", &reversion)
      .def("grade_involution", &grade_involution)
      .def("clifford_conjugation", &clifford_conjugation)
      .def("scal", [](const MultiVector& a) { return to_string(scal(a)); })
      .def("spec", [](const MultiVector& a) { return to_string(spec(a)); })
      .def("inverse", [](const MultiVector& a) { return inverse(a); })
      .def(py::self * py::self)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__str__", [](const MultiVector& a) { return to_string(a); })
      .def("__repr__", [](const MultiVector& a) { return "MultiVector('" + to_string(a) + "')"; });

  m.def("classify_json", [](int p, int q) { return dump(to_json(classify(p, q))); }, py::arg("p"), py::arg("q"));
  m.def("roots_json", [](int p, int q) {
    Json j = Json::array();
    for (const auto& r : root_classes(Signature(p, q))) j.push_back(to_json(r));
    return dump(j);
  }, py::arg("p"), py::arg("q"));
  m.def("represent_json", [](int p, int q) { return dump(to_json(MatrixRep(Signature(p, q)))); },
        py::arg("p"), py::arg("q"));
  m.def("class_of_json", [](const MultiVector& f) { return dump(to_json(class_of(f))); }, py::arg("f"));
  m.def("verify_golden_json", [](const std::string& path) {
    return dump(to_json(verify_golden(load_golden(path))));
  }, py::arg("path"));
  m.def("golden_files", [] {
    std::vector<std::string> out;
    for (const auto& f : golden_files(default_golden_dir())) out.push_back(f.string());
    return out;
  });
  m.def("representative_root", &representative_root, py::arg("signature"), py::arg("k"));
  m.def("centralizer", &centralizer, py::arg("f"));
  m.def("find_conjugator", &find_conjugator, py::arg("f"), py::arg("g"), py::arg("seed") = 0);
  m.def("manifold_csv", [](int p, int q, int grid) { return manifold_csv(sample_manifold(Signature(p, q), grid)); },
        py::arg("p"), py::arg("q"), py::arg("grid") = 41);
}
