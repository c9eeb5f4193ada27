#include "sptfn/bigfloat.hpp"
#include "sptfn/cmtrace.hpp"
#include "sptfn/dedekind.hpp"
#include "sptfn/kloosterman.hpp"
#include "sptfn/modfun.hpp"
#include "sptfn/partitions.hpp"
#include "sptfn/qforms.hpp"
#include "sptfn/series.hpp"
#include "sptfn/version.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>

namespace py = pybind11;

namespace {

py::int_ to_py(const sptfn::BigInt& z) {
    return py::cast<py::int_>(py::module_::import("builtins").attr("int")(z.get_str()));
}

py::object to_fraction(const sptfn::Rational& q) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(q.get_num().get_str(), q.get_den().get_str());
}

std::complex<double> to_cd(const sptfn::BigComplex& z) {
    return {z.re.to_double(), z.im.to_double()};
}

sptfn::BigComplex tau_from(std::complex<double> t, long prec) {
    return sptfn::BigComplex(sptfn::BigReal::of(t.real(), prec),
                             sptfn::BigReal::of(t.imag(), prec));
}

py::dict report_dict(const sptfn::SeriesReport& rep) {
    py::dict d;
    d["n"] = rep.n;
    d["method"] = rep.method;
    d["value"] = rep.value.str();
    d["rounded"] = to_py(rep.rounded);
    d["residual"] = rep.residual.to_double();
    d["terms"] = rep.terms_used;
    d["prec_bits"] = rep.prec_bits;
    if (rep.tail_bound) d["tail_bound"] = rep.tail_bound->to_double();
    if (rep.smoothing) d["smoothing"] = *rep.smoothing;
    return d;
}

py::dict trace_dict(const sptfn::TraceResult& r) {
    py::dict d;
    d["n"] = r.n;
    d["method"] = r.method;
    d["prec_bits"] = r.prec_bits;
    d["class_count"] = r.class_count;
    d["trace"] = to_cd(r.trace_value);
    if (r.rational_valued)
        d["rounded"] = to_fraction(r.rounded_rational);
    else
        d["rounded"] = to_py(r.rounded);
    d["residual"] = r.residual.to_double();
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "partition function and smallest-parts function calculators";
    m.attr("__version__") = sptfn::kVersion;

    m.def("p", [](long n) { return to_py(sptfn::p_oracle(n)); },
          py::arg("n"), "exact p(n) by the pentagonal recurrence");
    m.def("spt", [](long n) { return to_py(sptfn::spt_oracle_series(n)); },
          py::arg("n"), "exact spt(n) from the generating function");
    m.def("spt_enum", [](long n) { return to_py(sptfn::spt_oracle_enum(n)); },
          py::arg("n"), "exact spt(n) by partition enumeration (n <= 60)");
    m.def("s_coeff", [](long n) { return to_fraction(sptfn::s_coeff(n)); }, py::arg("n"));

    m.def(
        "p_rademacher",
        [](long n, long terms, long prec) {
            return report_dict(sptfn::p_rademacher(n, terms, prec));
        },
        py::arg("n"), py::arg("terms") = 0, py::arg("prec") = 64);
    m.def(
        "spt_series",
        [](long n, long terms, long prec, long window) {
            if (terms <= 0) terms = sptfn::spt_default_terms(n);
            if (window < 0) window = terms / 10;
            return report_dict(sptfn::spt_series(n, terms, prec, sptfn::TailAverage{window}));
        },
        py::arg("n"), py::arg("terms") = 0, py::arg("prec") = 64, py::arg("window") = -1);

    m.def("spt_trace",
          [](long n, long prec) { return trace_dict(sptfn::spt_trace(n, prec)); },
          py::arg("n"), py::arg("prec") = 256);
    m.def("p_trace", [](long n, long prec) { return trace_dict(sptfn::p_trace(n, prec)); },
          py::arg("n"), py::arg("prec") = 256);
    m.def("s_trace", [](long n, long prec) { return trace_dict(sptfn::s_trace(n, prec)); },
          py::arg("n"), py::arg("prec") = 256);

    m.def("a_direct",
          [](long n, long c, long prec) { return sptfn::a_direct(n, c, prec).to_double(); },
          py::arg("n"), py::arg("c"), py::arg("prec") = 64);
    m.def("a_selberg",
          [](long n, long c, long prec) { return sptfn::a_selberg(n, c, prec).to_double(); },
          py::arg("n"), py::arg("c"), py::arg("prec") = 64);
    m.def("k_classical",
          [](long m, long n, long c, long prec) {
              return sptfn::k_classical(m, n, c, prec).to_double();
          },
          py::arg("m"), py::arg("n"), py::arg("c"), py::arg("prec") = 64);
    m.def("s_eta",
          [](long m, long n, long c, long prec) { return to_cd(sptfn::s_eta(m, n, c, prec)); },
          py::arg("m"), py::arg("n"), py::arg("c"), py::arg("prec") = 64);
    m.def("lehmer_bound", [](long c) { return sptfn::lehmer_bound(c).to_double(); },
          py::arg("c"));
    m.def(
        "pentagonal_index",
        [](long m) -> py::object {
            auto w = sptfn::pentagonal_index(m);
            if (!w) return py::none();
            py::dict d;
            d["k"] = w->k;
            d["branch"] =
                w->branch == sptfn::PentagonalWitness::Branch::kMinus ? "3k-1" : "3k+1";
            d["sign"] = w->sign;
            return d;
        },
        py::arg("m"));

    m.def(
        "summatory",
        [](long n, long xmax, long prec) {
            sptfn::SummatorySeries s = sptfn::summatory(n, xmax, prec);
            py::list rows;
            for (const auto& r : s.rows)
                rows.append(py::make_tuple(r.c, r.a_c.to_double(), r.partial_sum.to_double()));
            py::dict d;
            d["n"] = n;
            d["main_term_coeff"] = s.main_term_coeff.to_double();
            d["rows"] = rows;
            return d;
        },
        py::arg("n"), py::arg("xmax"), py::arg("prec") = 64);

    m.def("dedekind_sum",
          [](long d, long c) {
              return to_fraction(sptfn::dedekind_sum(sptfn::BigInt(d), sptfn::BigInt(c)));
          },
          py::arg("d"), py::arg("c"));
    m.def("eta_multiplier",
          [](long a, long b, long c, long d, long prec) {
              return to_cd(sptfn::eta_multiplier(sptfn::SL2Matrix{a, b, c, d}, prec));
          },
          py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"), py::arg("prec") = 64);

    m.def(
        "class_reps",
        [](long n) {
            py::list out;
            for (const auto& q : sptfn::class_reps(n))
                out.append(py::make_tuple(to_py(q.a), to_py(q.b), to_py(q.c)));
            return out;
        },
        py::arg("n"));
    m.def(
        "class_polynomial",
        [](long n, long prec) {
            sptfn::ClassPolynomial poly = sptfn::class_polynomial(n, prec);
            py::dict d;
            d["n"] = n;
            d["degree"] = poly.degree;
            d["reconstructed"] = poly.reconstructed;
            d["polynomial"] = poly.display();
            py::list cs;
            if (poly.reconstructed)
                for (const auto& c : poly.coefficients) cs.append(to_fraction(c));
            d["coefficients"] = cs;
            return d;
        },
        py::arg("n"), py::arg("prec") = 256);

    m.def("eta",
          [](std::complex<double> tau, long prec) {
              return to_cd(sptfn::eta_eval(sptfn::make_context(tau_from(tau, prec), prec)));
          },
          py::arg("tau"), py::arg("prec") = 64);
    m.def("P",
          [](std::complex<double> tau, long prec) {
              return to_cd(sptfn::P_eval(tau_from(tau, prec), prec));
          },
          py::arg("tau"), py::arg("prec") = 64);
    m.def("f",
          [](std::complex<double> tau, long prec) {
              return to_cd(sptfn::f_eval(tau_from(tau, prec), prec));
          },
          py::arg("tau"), py::arg("prec") = 64);
    m.def("petersson_eta_norm",
          [](double tol) {
              return sptfn::petersson_eta_norm(sptfn::BigReal::of(tol, 128)).to_double();
          },
          py::arg("tol") = 1e-6);
}
