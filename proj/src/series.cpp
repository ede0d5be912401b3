#include "iterlog/series.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace iterlog {

TranslationSeries::TranslationSeries(unsigned order)
    : order_(order), coeffs_(order + 1) {}

TranslationSeries::TranslationSeries(unsigned order,
                                     std::vector<AlgebraElement> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != static_cast<std::size_t>(order_) + 1)
    throw std::invalid_argument("series coefficient count must be order + 1");
}

TranslationSeries TranslationSeries::constant(const AlgebraElement& a,
                                              unsigned order) {
  TranslationSeries s(order);
  s.coeffs_[0] = a;
  return s;
}

TranslationSeries TranslationSeries::y(unsigned order) {
  if (order < 1) throw std::invalid_argument("the series y needs order >= 1");
  TranslationSeries s(order);
  s.coeffs_[1] = AlgebraElement::scalar(ParamPoly(Rational(1)));
  return s;
}

const AlgebraElement& TranslationSeries::coefficient(unsigned k) const {
  if (k > order_)
    throw std::out_of_range("coefficient index exceeds truncation order");
  return coeffs_[k];
}

void TranslationSeries::set_coefficient(unsigned k, AlgebraElement a) {
  if (k > order_)
    throw std::out_of_range("coefficient index exceeds truncation order");
  coeffs_[k] = std::move(a);
}

bool TranslationSeries::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

namespace {
void require_same_order(const TranslationSeries& a, const TranslationSeries& b) {
  if (a.order() != b.order())
    throw std::invalid_argument("series order mismatch: " +
                                std::to_string(a.order()) + " vs " +
                                std::to_string(b.order()));
}
}  // namespace

TranslationSeries& TranslationSeries::operator+=(const TranslationSeries& o) {
  require_same_order(*this, o);
  for (unsigned k = 0; k <= order_; ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

TranslationSeries& TranslationSeries::operator-=(const TranslationSeries& o) {
  require_same_order(*this, o);
  for (unsigned k = 0; k <= order_; ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

std::string TranslationSeries::str() const {
  std::ostringstream out;
  bool first = true;
  for (unsigned k = 0; k <= order_; ++k) {
    if (coeffs_[k].is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    out << "(" << coeffs_[k].str() << ")";
    if (k == 1) out << "*y";
    if (k > 1) out << "*y^" << k;
  }
  if (first) out << "0";
  out << "  [order " << order_ << "]";
  return out.str();
}

TranslationSeries exp_derivation(const AlgebraElement& a, unsigned order) {
  TranslationSeries s(order);
  AlgebraElement d = a;
  BigInt kfact = 1;
  for (unsigned k = 0; k <= order; ++k) {
    if (k > 0) {
      d = derive(d);
      kfact *= k;
    }
    s.set_coefficient(k, elem_scale(d, ParamPoly(Rational(1, kfact))));
  }
  return s;
}

TranslationSeries series_mul(const TranslationSeries& a,
                             const TranslationSeries& b) {
  require_same_order(a, b);
  TranslationSeries out(a.order());
  for (unsigned i = 0; i <= a.order(); ++i) {
    if (a.coefficient(i).is_zero()) continue;
    for (unsigned j = 0; i + j <= a.order(); ++j) {
      if (b.coefficient(j).is_zero()) continue;
      AlgebraElement c = out.coefficient(i + j);
      c += a.coefficient(i) * b.coefficient(j);
      out.set_coefficient(i + j, std::move(c));
    }
  }
  return out;
}

TranslationSeries series_scale(const TranslationSeries& a, const ParamPoly& c) {
  TranslationSeries out(a.order());
  for (unsigned k = 0; k <= a.order(); ++k)
    out.set_coefficient(k, elem_scale(a.coefficient(k), c));
  return out;
}

TranslationSeries series_scale(const TranslationSeries& a,
                               const AlgebraElement& c) {
  TranslationSeries out(a.order());
  for (unsigned k = 0; k <= a.order(); ++k)
    out.set_coefficient(k, a.coefficient(k) * c);
  return out;
}

namespace {

// Sum of c_n * u^n for n = 1..order; u must have zero constant term so that
// u^n contributes nothing below y^n and every coefficient is a finite sum.
TranslationSeries compose_positive_powers(
    const TranslationSeries& u, const std::function<Rational(unsigned)>& cn,
    const char* what) {
  if (!u.coefficient(0).is_zero())
    throw std::invalid_argument(std::string(what) +
                                ": coefficient not finitely computable "
                                "(nonzero constant term)");
  TranslationSeries out(u.order());
  TranslationSeries power = u;
  for (unsigned n = 1; n <= u.order(); ++n) {
    if (n > 1) power = series_mul(power, u);
    out += series_scale(power, ParamPoly(cn(n)));
    if (power.is_zero()) break;
  }
  return out;
}

}  // namespace

TranslationSeries log1p_compose(const TranslationSeries& u) {
  return compose_positive_powers(
      u,
      [](unsigned n) {
        return Rational(n % 2 == 1 ? 1 : -1, n);
      },
      "log1p_compose");
}

TranslationSeries expm1_compose(const TranslationSeries& u) {
  return compose_positive_powers(
      u, [](unsigned n) { return Rational(1, factorial(n)); },
      "expm1_compose");
}

TranslationSeries specialize(const TranslationSeries& s,
                             const Rational& r_value) {
  TranslationSeries out(s.order());
  for (unsigned k = 0; k <= s.order(); ++k)
    out.set_coefficient(k, specialize(s.coefficient(k), r_value));
  return out;
}

}  // namespace iterlog
