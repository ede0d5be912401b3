#ifndef ITERLOG_SERIES_HPP
#define ITERLOG_SERIES_HPP

#include <vector>

#include "iterlog/algebra.hpp"

namespace iterlog {

/// Truncated formal power series in y with AlgebraElement coefficients.
/// The truncation order is inclusive and explicit; binary operations demand
/// matching orders.
class TranslationSeries {
 public:
  explicit TranslationSeries(unsigned order);
  TranslationSeries(unsigned order, std::vector<AlgebraElement> coeffs);

  static TranslationSeries constant(const AlgebraElement& a, unsigned order);
  /// The series y truncated at the given order (order >= 1).
  static TranslationSeries y(unsigned order);

  unsigned order() const { return order_; }
  const AlgebraElement& coefficient(unsigned k) const;
  void set_coefficient(unsigned k, AlgebraElement a);
  bool is_zero() const;

  TranslationSeries& operator+=(const TranslationSeries& o);
  TranslationSeries& operator-=(const TranslationSeries& o);
  friend TranslationSeries operator+(TranslationSeries a,
                                     const TranslationSeries& b) {
    return a += b;
  }
  friend TranslationSeries operator-(TranslationSeries a,
                                     const TranslationSeries& b) {
    return a -= b;
  }

  bool operator==(const TranslationSeries& o) const {
    return order_ == o.order_ && coeffs_ == o.coeffs_;
  }
  bool operator!=(const TranslationSeries& o) const { return !(*this == o); }

  std::string str() const;

 private:
  unsigned order_;
  std::vector<AlgebraElement> coeffs_;
};

/// e^{y d/dx} a, truncated at the given order: coefficient of y^k is
/// derive_power(a, k)/k!. This is the formal translation a(x+y).
TranslationSeries exp_derivation(const AlgebraElement& a, unsigned order);

/// Cauchy product truncated at the common order. Throws on order mismatch.
TranslationSeries series_mul(const TranslationSeries& a,
                             const TranslationSeries& b);

TranslationSeries series_scale(const TranslationSeries& a, const ParamPoly& c);
TranslationSeries series_scale(const TranslationSeries& a,
                               const AlgebraElement& c);

/// log(1 + u) - truncated composition; u must have zero constant term.
TranslationSeries log1p_compose(const TranslationSeries& u);

/// e^u - 1 truncated; u must have zero constant term.
TranslationSeries expm1_compose(const TranslationSeries& u);

/// Substitutes a rational for r in every coefficient.
TranslationSeries specialize(const TranslationSeries& s, const Rational& r_value);

}  // namespace iterlog

#endif
