#ifndef ITERLOG_PARAM_POLY_HPP
#define ITERLOG_PARAM_POLY_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "iterlog/rational.hpp"

namespace iterlog {

/// Univariate polynomial in the symbolic parameter r with exact rational
/// coefficients. Trailing zeros are always stripped; the zero polynomial has
/// an empty coefficient vector.
class ParamPoly {
 public:
  ParamPoly() = default;
  ParamPoly(const Rational& constant);  // NOLINT: implicit by design
  ParamPoly(std::vector<Rational> coeffs);
  ParamPoly(std::initializer_list<Rational> coeffs);

  static ParamPoly variable();  // the polynomial r

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  // Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Rational(0);
  }

  ParamPoly operator-() const;
  ParamPoly& operator+=(const ParamPoly& other);
  ParamPoly& operator-=(const ParamPoly& other);
  ParamPoly& operator*=(const ParamPoly& other);

  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);

  bool operator==(const ParamPoly& other) const { return coeffs_ == other.coeffs_; }
  bool operator!=(const ParamPoly& other) const { return !(*this == other); }
  // Total order for use as a map key; not a numeric comparison.
  bool operator<(const ParamPoly& other) const;

  Rational eval(const Rational& at) const;

  /// Rendering with "r" as the variable, e.g. "1/2*r^2 - 1/2*r".
  std::string str(const std::string& var = "r") const;

 private:
  void strip();
  std::vector<Rational> coeffs_;
};

ParamPoly poly_add(const ParamPoly& p, const ParamPoly& q);
ParamPoly poly_mul(const ParamPoly& p, const ParamPoly& q);
ParamPoly poly_scale(const ParamPoly& p, const Rational& c);
Rational poly_eval(const ParamPoly& p, const Rational& at);

/// C(r, m) = r(r-1)...(r-m+1)/m! as a degree-m polynomial in r.
ParamPoly binomial_poly(unsigned m);

/// r^k as a ParamPoly.
ParamPoly param_power(unsigned k);

}  // namespace iterlog

#endif
