// Python bindings for the main operations: Stirling tables, tableaux,
// expansions, and the verification sweeps. Exact values cross the boundary
// as strings or Python ints; structured results as JSON strings.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "iterlog/expansions.hpp"
#include "iterlog/identities.hpp"
#include "iterlog/json_io.hpp"
#include "iterlog/tableau.hpp"

namespace py = pybind11;
using namespace iterlog;

namespace {

StirlingKind kind_from(int kind) {
  if (kind != 1 && kind != 2)
    throw py::value_error("kind must be 1 or 2");
  return kind == 1 ? StirlingKind::First : StirlingKind::Second;
}

py::object to_py(const BigInt& v) {
  return py::module_::import("builtins").attr("int")(py::str(v.str()));
}

std::string stirling_str(int kind, unsigned m, unsigned n,
                         const std::string& method) {
  bool first = kind_from(kind) == StirlingKind::First;
  BigInt v;
  if (method == "explicit")
    v = first ? stirling1_explicit(m, n) : stirling2_explicit(m, n);
  else if (method == "composition" || method == "partition")
    v = first ? stirling1_composition(m, n) : stirling2_partition(m, n);
  else if (method == "recurrence")
    v = first ? stirling1_recurrence(m, n) : stirling2_recurrence(m, n);
  else if (method == "genfunc")
    v = first ? stirling1_genfunc(m, n) : stirling2_genfunc(m, n);
  else
    throw py::value_error("unknown method: " + method);
  return v.str();
}

TranslationSeries expansion_by(const std::string& method, long long level,
                               unsigned order) {
  if (method == "1") return method1_expansion(level, order);
  if (method == "2") return method2_expansion(level, order);
  if (method == "oracle") return oracle_expansion(level, order);
  throw py::value_error("unknown method: " + method);
}

}  // namespace

PYBIND11_MODULE(_iterlog, m) {
  m.doc() = "Exact symbolic engine for formal iterated logarithms and "
            "exponentials";

  m.def(
      "stirling",
      [](int kind, unsigned mm, unsigned nn, const std::string& method) {
        return to_py(BigInt(stirling_str(kind, mm, nn, method)));
      },
      py::arg("kind"), py::arg("m"), py::arg("n"),
      py::arg("method") = "recurrence");

  m.def(
      "stirling_table",
      [](int kind, unsigned max_m, const std::string& method) {
        py::list rows;
        for (unsigned mm = 0; mm <= max_m; ++mm) {
          py::list row;
          for (unsigned nn = 0; nn <= mm; ++nn)
            row.append(to_py(BigInt(stirling_str(kind, mm, nn, method))));
          rows.append(row);
        }
        return rows;
      },
      py::arg("kind"), py::arg("max_m"), py::arg("method") = "recurrence");

  m.def(
      "expand_json",
      [](long long level, const std::string& exponent, unsigned order,
         const std::string& method) {
        TranslationSeries s = expansion_by(method, level, order);
        if (exponent != "r") {
          auto r = parse_rational(exponent);
          if (!r) throw py::value_error("malformed rational: " + exponent);
          s = specialize(s, *r);
        }
        return expansion_report(level, exponent, method, s).dump();
      },
      py::arg("level"), py::arg("exponent") = "r", py::arg("order") = 3,
      py::arg("method") = "oracle");

  m.def(
      "derive_json",
      [](long long level, unsigned times) {
        AlgebraElement a =
            AlgebraElement::variable(level, AffineExponent(1, 0));
        return to_json(derive_power(a, times)).dump();
      },
      py::arg("level"), py::arg("times") = 1);

  m.def(
      "tableaux",
      [](const std::vector<unsigned>& shape, int kind) {
        std::vector<std::vector<std::vector<unsigned>>> out;
        for (const auto& t :
             tableau_enumerate(TableauShape{shape}, kind_from(kind)))
          out.push_back(t.columns);
        return out;
      },
      py::arg("shape"), py::arg("kind") = 1);

  m.def(
      "tableau_polynomial_str",
      [](const std::vector<unsigned>& shape, int kind) {
        return tableau_polynomial(TableauShape{shape}, kind_from(kind)).str();
      },
      py::arg("shape"), py::arg("kind") = 1);

  m.def(
      "factored_constant",
      [](const std::vector<unsigned>& shape, int kind) {
        return to_py(
            iterlog::factored_constant(TableauShape{shape}, kind_from(kind)));
      },
      py::arg("shape"), py::arg("kind") = 1);

  m.def(
      "check_identities_json",
      [](unsigned max_m, unsigned max_total, unsigned order) {
        nlohmann::json reports = nlohmann::json::array();
        reports.push_back(to_json(check_four_way(StirlingKind::First, max_m)));
        reports.push_back(to_json(check_four_way(StirlingKind::Second, max_m)));
        reports.push_back(to_json(check_classical_first_kind(max_m)));
        reports.push_back(to_json(check_classical_second_kind(max_m)));
        reports.push_back(
            to_json(check_factorization(StirlingKind::First, max_total)));
        reports.push_back(
            to_json(check_factorization(StirlingKind::Second, max_total)));
        reports.push_back(to_json(check_methods_equal(-3, 3, order)));
        return reports.dump();
      },
      py::arg("max_m") = 10, py::arg("max_total") = 8, py::arg("order") = 4);
}
