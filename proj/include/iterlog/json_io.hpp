#ifndef ITERLOG_JSON_IO_HPP
#define ITERLOG_JSON_IO_HPP

#include <json.hpp>

#include "iterlog/algebra.hpp"
#include "iterlog/identities.hpp"
#include "iterlog/series.hpp"
#include "iterlog/tableau.hpp"

namespace iterlog {

// JSON renderings. Rationals are exact "p/q" strings, ParamPoly an array of
// such strings in ascending degree. All orderings are the canonical ones so
// output is byte-stable.

nlohmann::json to_json(const ParamPoly& p);
nlohmann::json to_json(const Monomial& m);
nlohmann::json to_json(const AlgebraElement& a);
nlohmann::json to_json(const TranslationSeries& s);
nlohmann::json to_json(const Tableau& t);
nlohmann::json to_json(const IdentityReport& r);

nlohmann::json expansion_report(long long level, const std::string& exponent,
                                const std::string& method,
                                const TranslationSeries& s);

}  // namespace iterlog

#endif
