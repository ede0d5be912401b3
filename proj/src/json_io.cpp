#include "iterlog/json_io.hpp"

namespace iterlog {

using nlohmann::json;

json to_json(const ParamPoly& p) {
  json arr = json::array();
  for (const auto& c : p.coeffs()) arr.push_back(to_string(c));
  return arr;
}

json to_json(const Monomial& m) {
  json obj = json::object();
  for (const auto& [level, e] : m.exponents())
    obj[std::to_string(level)] = {to_string(e.r_coeff), to_string(e.const_term)};
  return obj;
}

json to_json(const AlgebraElement& a) {
  json arr = json::array();
  for (const auto& [m, c] : a.terms())
    arr.push_back({{"coeff", to_json(c)}, {"monomial", to_json(m)}});
  return arr;
}

json to_json(const TranslationSeries& s) {
  json coeffs = json::array();
  for (unsigned k = 0; k <= s.order(); ++k)
    coeffs.push_back(to_json(s.coefficient(k)));
  return {{"order", s.order()}, {"coeffs", coeffs}};
}

json to_json(const Tableau& t) {
  json cols = json::array();
  for (const auto& col : t.columns) cols.push_back(col);
  return cols;
}

json to_json(const IdentityReport& r) {
  json out = {{"id", r.id},
              {"range", r.range},
              {"status", r.pass ? "pass" : "fail"}};
  if (r.counterexample)
    out["counterexample"] = *r.counterexample;
  else
    out["counterexample"] = nullptr;
  return out;
}

json expansion_report(long long level, const std::string& exponent,
                      const std::string& method, const TranslationSeries& s) {
  return {{"level", level},
          {"exponent", exponent},
          {"order", s.order()},
          {"method", method},
          {"series", to_json(s)}};
}

}  // namespace iterlog
