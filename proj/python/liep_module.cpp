// Python bindings: field arithmetic plus the JSON-level entry points of the
// classifier and the verification oracle.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "liep/json_io.hpp"

namespace py = pybind11;
using namespace liep;

namespace {

Field build_field(int p, int k, const std::vector<int>& modulus) {
    if (!modulus.empty()) return Field(p, k, modulus);
    if (k == 1) return Field::prime(p);
    return Field::make(p, k);
}

// Python-facing field elements are coefficient lists (constant term first).
struct PyField {
    Field F;

    explicit PyField(int p, int k, const std::vector<int>& modulus)
        : F(build_field(p, k, modulus)) {}

    using C = std::vector<int>;
    Fe in(const C& c) const { return F.from_coeffs(c); }
    C out(Fe a) const { return F.coeffs(a); }

    C add(const C& a, const C& b) const { return out(F.add(in(a), in(b))); }
    C sub(const C& a, const C& b) const { return out(F.sub(in(a), in(b))); }
    C mul(const C& a, const C& b) const { return out(F.mul(in(a), in(b))); }
    C neg(const C& a) const { return out(F.neg(in(a))); }
    C inv(const C& a) const { return out(F.inv(in(a))); }
    C frobenius(const C& a) const { return out(F.frobenius(in(a))); }
    C frobenius_root(const C& a) const { return out(F.frobenius_root(in(a))); }
    bool is_square(const C& a) const { return F.is_square(in(a)); }
    C sqrt(const C& a) const { return out(F.sqrt(in(a))); }
    bool in_artin_schreier(const C& a) const { return F.in_artin_schreier(in(a)); }
    bool in_k_beta(const C& beta, const C& x) const { return F.in_k_beta(in(beta), in(x)); }
    std::vector<C> elements() const {
        std::vector<C> out_;
        for (Fe a : F.elements()) out_.push_back(out(a));
        return out_;
    }
};

std::string classify_json_str(const std::string& text) {
    RestrictedAlg R = restricted_from_json(json::parse(text));
    return label_to_json(R.alg.field(), classify(R)).dump();
}

std::string list_classes_json_str(int p, int k, const std::string& algebra,
                                  const std::vector<int>& modulus) {
    Field F = build_field(p, k, modulus);
    return classlist_to_json(F, list_classes(catalog_algebra(F, algebra))).dump();
}

std::string cross_check_json_str(int p, int k, const std::string& algebra,
                                 const std::vector<int>& modulus, std::uint64_t budget_pmaps,
                                 std::uint64_t budget_conj, unsigned workers) {
    Field F = build_field(p, k, modulus);
    VerifyOptions opts;
    opts.budget_pmaps = budget_pmaps;
    opts.budget_conj = budget_conj;
    opts.workers = workers;
    return report_to_json(F, cross_check(catalog_algebra(F, algebra), opts)).dump();
}

std::string class_database_str(int p, int k, const std::vector<int>& modulus) {
    return class_database(build_field(p, k, modulus)).dump(2);
}

std::vector<std::string> catalog_names() {
    return {"L_{1,1}", "L_{2,1}", "L_{3,1}", "L_{3,2}", "L_{4,1}", "L_{4,2}", "L_{4,3}"};
}

} // namespace

PYBIND11_MODULE(liep, m) {
    m.doc() = "restricted Lie algebras of dimension <= 4 over small finite fields: "
              "exact arithmetic, classification of [p]-nilpotent structures, and a "
              "brute-force orbit oracle";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);

    py::class_<PyField>(m, "Field")
        .def(py::init<int, int, const std::vector<int>&>(), py::arg("p"), py::arg("k") = 1,
             py::arg("modulus") = std::vector<int>{},
             "GF(p^k); elements are coefficient lists, constant term first")
        .def_property_readonly("p", [](const PyField& f) { return f.F.p(); })
        .def_property_readonly("k", [](const PyField& f) { return f.F.k(); })
        .def_property_readonly("order", [](const PyField& f) { return f.F.order(); })
        .def("add", &PyField::add)
        .def("sub", &PyField::sub)
        .def("mul", &PyField::mul)
        .def("neg", &PyField::neg)
        .def("inv", &PyField::inv)
        .def("frobenius", &PyField::frobenius)
        .def("frobenius_root", &PyField::frobenius_root)
        .def("is_square", &PyField::is_square)
        .def("sqrt", &PyField::sqrt)
        .def("in_artin_schreier", &PyField::in_artin_schreier)
        .def("in_k_beta", &PyField::in_k_beta)
        .def("elements", &PyField::elements);

    m.def("classify_json", &classify_json_str, py::arg("restricted_algebra_json"),
          "classify a restricted algebra given as JSON text; returns the label as JSON text");
    m.def("list_classes_json", &list_classes_json_str, py::arg("p"), py::arg("k"),
          py::arg("algebra"), py::arg("modulus") = std::vector<int>{});
    m.def("cross_check_json", &cross_check_json_str, py::arg("p"), py::arg("k"),
          py::arg("algebra"), py::arg("modulus") = std::vector<int>{},
          py::arg("budget_pmaps") = 100000000ull, py::arg("budget_conj") = 100000000ull,
          py::arg("workers") = 0u);
    m.def("class_database_json", &class_database_str, py::arg("p"), py::arg("k") = 1,
          py::arg("modulus") = std::vector<int>{});
    m.def("catalog_names", &catalog_names);
}
