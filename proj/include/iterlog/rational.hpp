#ifndef ITERLOG_RATIONAL_HPP
#define ITERLOG_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace iterlog {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar. cpp_rational keeps values in lowest terms with a
/// positive denominator, which is exactly the canonical form we need.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return f;
}

/// Renders "p/q", or just "p" when q = 1.
inline std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

/// Parses "p" or "p/q" with optional sign. Returns nullopt on malformed input.
std::optional<Rational> parse_rational(const std::string& text);

}  // namespace iterlog

#endif
