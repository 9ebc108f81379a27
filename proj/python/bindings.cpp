// Python bindings for the core operations: semigroups, Apéry tables, the
// bound formulas, interval specializations, Kummer covers and the
// brute-force oracle. Reports come back as plain dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "semibound/gm_bounds.hpp"
#include "semibound/interval.hpp"
#include "semibound/kummer.hpp"
#include "semibound/oracle.hpp"
#include "semibound/semigroup.hpp"
#include "semibound/verify.hpp"

namespace py = pybind11;
using namespace semibound;

namespace {

GMMethod method_from_name(const std::string& name) {
  if (name == "auto") return GMMethod::Auto;
  if (name == "general") return GMMethod::General;
  if (name == "two-generator") return GMMethod::TwoGenerator;
  if (name == "interval-sum") return GMMethod::IntervalSum;
  if (name == "interval-closed") return GMMethod::IntervalClosed;
  if (name == "oracle") return GMMethod::Oracle;
  throw DomainError("unknown method '" + name + "'");
}

py::dict bound_report_dict(const BoundReport& report) {
  py::dict out;
  out["gm"] = report.gm;
  out["lewittes"] = report.lewittes;
  out["equal"] = report.equal;
  out["method"] = std::string(to_string(report.method_used));
  out["genus"] = report.genus;
  return out;
}

py::dict yl_dict(const YLBound& yl) {
  py::dict out;
  out["upper"] = yl.upper;
  out["lower"] = yl.lower;
  out["coprime_branch"] = yl.coprime_branch;
  out["upper_if_coprime"] = yl.upper_if_coprime;
  out["upper_if_noncoprime"] = yl.upper_if_noncoprime;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Rational-point upper bounds from numerical-semigroup data";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ArithmeticOverflow& e) {
      PyErr_SetString(PyExc_OverflowError, e.what());
    } catch (const ComputeError& e) {
      PyErr_SetString(PyExc_RuntimeError, e.what());
    } catch (const ValidationError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  py::class_<AperyTable>(m, "AperyTable")
      .def_property_readonly("modulus", &AperyTable::modulus)
      .def_property_readonly("least",
                             [](const AperyTable& t) { return t.least(); })
      .def("quotient", &AperyTable::quotient, py::arg("residue"))
      .def("__len__", [](const AperyTable& t) { return t.modulus(); })
      .def("__getitem__",
           [](const AperyTable& t, int64_t i) { return t.least(i); })
      .def("__eq__", [](const AperyTable& a, const AperyTable& b) { return a == b; },
           py::is_operator())
      .def("__repr__", [](const AperyTable& t) {
        std::ostringstream out;
        out << "AperyTable(n=" << t.modulus() << ")";
        return out.str();
      });

  py::class_<NumericalSemigroup>(m, "NumericalSemigroup")
      .def(py::init<std::vector<int64_t>>(), py::arg("generators"))
      .def_property_readonly("generators", &NumericalSemigroup::generators)
      .def_property_readonly("multiplicity", &NumericalSemigroup::multiplicity)
      .def("contains", &NumericalSemigroup::contains, py::arg("value"))
      .def("__contains__", &NumericalSemigroup::contains)
      .def("genus", &NumericalSemigroup::genus)
      .def("frobenius", &NumericalSemigroup::frobenius)
      .def("minimal_generators", &NumericalSemigroup::minimal_generators)
      .def("elements_up_to", &NumericalSemigroup::elements_up_to, py::arg("bound"))
      .def("apery_set", &NumericalSemigroup::apery_set, py::arg("n"))
      .def("__eq__",
           [](const NumericalSemigroup& a, const NumericalSemigroup& b) {
             return a == b;
           },
           py::is_operator())
      .def("__repr__", [](const NumericalSemigroup& s) {
        std::ostringstream out;
        out << "NumericalSemigroup(<";
        const auto& gens = s.minimal_generators();
        for (size_t i = 0; i < gens.size(); ++i) out << (i ? "," : "") << gens[i];
        out << ">)";
        return out.str();
      });

  m.def("make_semigroup",
        [](std::vector<int64_t> gens) { return make_semigroup(std::move(gens)); },
        py::arg("generators"));

  m.def("lewittes", &lewittes, py::arg("s"), py::arg("q"));
  m.def(
      "gm_general",
      [](const NumericalSemigroup& s, int64_t q, std::optional<int64_t> base) {
        return gm_general(s, q, base);
      },
      py::arg("s"), py::arg("q"), py::arg("base") = py::none());
  m.def("gm_two_generators", &gm_two_generators, py::arg("a"), py::arg("b"),
        py::arg("q"));
  m.def("gm_equals_lewittes", &gm_equals_lewittes, py::arg("s"), py::arg("q"));
  m.def(
      "bound_report",
      [](const NumericalSemigroup& s, int64_t q, const std::string& method,
         int64_t resource_cap) {
        return bound_report_dict(
            bound_report(s, GMQuery{q, method_from_name(method), resource_cap}));
      },
      py::arg("s"), py::arg("q"), py::arg("method") = "auto",
      py::arg("resource_cap") = kDefaultResourceCap);

  m.def("apery_interval", &apery_interval, py::arg("n"), py::arg("t"));
  m.def("gm_interval_sum", &gm_interval_sum, py::arg("n"), py::arg("t"), py::arg("q"));
  m.def("gm_interval_setA", &gm_interval_setA, py::arg("n"), py::arg("t"),
        py::arg("q"));
  m.def("gm_interval_closed", &gm_interval_closed, py::arg("n"), py::arg("t"),
        py::arg("q"));
  m.def("interval_contains_q", &interval_contains_q, py::arg("n"), py::arg("t"),
        py::arg("q"));

  m.def(
      "kummer_apery",
      [](int64_t q, int64_t m, std::vector<int64_t> lambdas, int64_t s) {
        return kummer_apery(make_kummer(q, m, std::move(lambdas), s));
      },
      py::arg("q"), py::arg("m"), py::arg("lambdas"), py::arg("s") = 1);
  m.def(
      "weierstrass_semigroup",
      [](int64_t q, int64_t m, std::vector<int64_t> lambdas, int64_t s) {
        return weierstrass_semigroup(make_kummer(q, m, std::move(lambdas), s));
      },
      py::arg("q"), py::arg("m"), py::arg("lambdas"), py::arg("s") = 1);
  m.def("hws_bound", &hws_bound, py::arg("q"), py::arg("genus"));
  m.def("ihara_bound", &ihara_bound, py::arg("q"), py::arg("genus"));
  m.def(
      "yl_bound",
      [](int64_t q, int64_t m, std::vector<int64_t> lambdas, int64_t s) {
        return yl_dict(yl_bound_detail(make_kummer(q, m, std::move(lambdas), s)));
      },
      py::arg("q"), py::arg("m"), py::arg("lambdas"), py::arg("s") = 1);
  m.def(
      "cmq_semigroup",
      [](int64_t m, int64_t r) {
        IntervalSemigroup iv = cmq_semigroup(m, r);
        return py::make_tuple(iv.n, iv.t);
      },
      py::arg("m"), py::arg("r"));
  m.def("kummer_consecutive_bound", &kummer_consecutive_bound, py::arg("q"),
        py::arg("m"), py::arg("r"));
  m.def(
      "curve_report",
      [](int64_t q, int64_t m, std::vector<int64_t> lambdas, int64_t s) {
        CurveBoundReport report =
            curve_report(make_kummer(q, m, std::move(lambdas), s));
        py::dict out;
        out["generators"] = report.semigroup.generators();
        out["genus"] = report.genus;
        out["gm"] = report.gm;
        out["lewittes"] = report.lewittes;
        out["hws"] = report.hws;
        out["ihara"] = report.ihara;
        out["yl"] = report.yl;
        out["yl_detail"] = yl_dict(report.yl_detail);
        out["gm_method"] = std::string(to_string(report.gm_method));
        return out;
      },
      py::arg("q"), py::arg("m"), py::arg("lambdas"), py::arg("s") = 1);

  m.def("gm_bruteforce", &gm_bruteforce, py::arg("s"), py::arg("q"),
        py::arg("cap") = kDefaultResourceCap);
  m.def("gm_setdiff_bruteforce", &gm_setdiff_bruteforce, py::arg("s"), py::arg("q"),
        py::arg("cap") = kDefaultResourceCap);

  m.def(
      "verify",
      [](int64_t max_multiplicity, int64_t max_q, int64_t trials, uint64_t seed) {
        VerifyConfig config;
        config.max_multiplicity = max_multiplicity;
        config.max_q = max_q;
        config.trials = trials;
        config.seed = seed;
        py::list out;
        for (const Discrepancy& d : run_verification(config)) {
          py::dict item;
          item["generators"] = d.generators;
          item["q"] = d.q;
          item["formula"] = d.formula;
          item["expected"] = d.expected;
          item["actual"] = d.actual;
          out.append(item);
        }
        return out;
      },
      py::arg("max_multiplicity") = 12, py::arg("max_q") = 30,
      py::arg("trials") = 500, py::arg("seed") = 42);
}
