#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mahler/analytics.hpp"

#include <complex>

namespace py = pybind11;
using namespace mahler;

namespace {
std::complex<double> to_std(const Complex& z) {
    return {z.re.convert_to<double>(), z.im.convert_to<double>()};
}

void set_precision(unsigned bits) { set_precision_bits(bits); }

std::string expand(const std::string& name, long order) {
    return to_string(FormRegistry::instance().expansion(form_id_from_name(name), order));
}

std::vector<std::string> expand_coeffs(const std::string& name, long order) {
    QSeries<Rational> s = FormRegistry::instance().expansion(form_id_from_name(name), order);
    std::vector<std::string> out;
    out.push_back(s.lead_exp().str());
    for (long i = 0; i <= s.order(); ++i) out.push_back(s[i].str());
    return out;
}

std::vector<std::string> cterms_py(int n, int M) {
    std::vector<std::string> out;
    for (const auto& a : constant_terms(n, M)) out.push_back(a.str());
    return out;
}

std::complex<double> eta(std::complex<double> tau) {
    return to_std(eta_value(Complex(Real(tau.real()), Real(tau.imag()))));
}

std::complex<double> form_value(const std::string& name, std::complex<double> z) {
    return to_std(FormRegistry::instance().value(form_id_from_name(name), Complex(Real(z.real()), Real(z.imag()))));
}

double dirichlet_l_py(long s) { return dirichlet_l(DirichletChar::chi_minus3(), s).value.convert_to<double>(); }

double chowla_selberg() { return chowla_selberg_omega15().convert_to<double>(); }

py::dict lvalue(const std::string& name, int p) {
    LValueResult r = lvalue_single(form_id_from_name(name), p);
    py::dict d;
    d["value"] = r.value.convert_to<double>();
    d["error_bound"] = r.error_bound.convert_to<double>();
    return d;
}

py::dict double_lvalue(int j) {
    QuadratureSpec spec;
    LValueResult r = double_l_merom(j, spec);
    py::dict d;
    d["value"] = r.value.convert_to<double>();
    d["error_bound"] = r.error_bound.convert_to<double>();
    return d;
}

py::dict cm_constants_py() {
    QuadratureSpec spec;
    CmConstants cm = cm_constants(spec);
    py::dict d;
    d["a_star_1"] = cm.a_star_1.convert_to<double>();
    d["theta_a_star_1"] = cm.theta_a_star_1.convert_to<double>();
    d["theta2_a_star_1"] = cm.theta2_a_star_1.convert_to<double>();
    d["c0_n2"] = cm.c0_n2.convert_to<double>();
    d["c0_n3"] = cm.c0_n3.convert_to<double>();
    d["c1_minus_4c0"] = cm.c1_minus_4c0.convert_to<double>();
    return d;
}

py::tuple mahler_direct_py(int n, std::uint64_t samples, std::uint64_t seed) {
    MahlerEstimate est = mahler_direct(n, samples, seed);
    return py::make_tuple(est.value, est.std_error);
}

py::list verify(unsigned precision, long order) {
    Config cfg;
    cfg.precision_bits = precision;
    cfg.series_order = order;
    py::list out;
    for (const CheckRow& r : verify_all(cfg)) {
        py::dict d;
        d["check"] = r.name;
        d["criterion"] = r.criterion;
        d["pass"] = r.pass;
        d["computed"] = r.computed;
        d["target"] = r.target;
        out.append(d);
    }
    return out;
}
}  // namespace

PYBIND11_MODULE(_mahler, m) {
    m.doc() = "q-series, Picard-Fuchs operators and double L-value verification";
    m.def("set_precision", &set_precision, py::arg("bits"));
    m.def("expand", &expand, py::arg("form"), py::arg("order") = 16);
    m.def("expand_coeffs", &expand_coeffs, py::arg("form"), py::arg("order") = 16);
    m.def("cterms", &cterms_py, py::arg("n"), py::arg("M") = 8);
    m.def("eta", &eta, py::arg("tau"));
    m.def("form_value", &form_value, py::arg("form"), py::arg("z"));
    m.def("dirichlet_l_chi3", &dirichlet_l_py, py::arg("s"));
    m.def("chowla_selberg", &chowla_selberg);
    m.def("lvalue", &lvalue, py::arg("form"), py::arg("p"));
    m.def("double_lvalue", &double_lvalue, py::arg("j"));
    m.def("cm_constants", &cm_constants_py);
    m.def("mahler_direct", &mahler_direct_py, py::arg("n"), py::arg("samples") = (1u << 22),
          py::arg("seed") = 1);
    m.def("verify", &verify, py::arg("precision") = 256, py::arg("order") = 200);
}
