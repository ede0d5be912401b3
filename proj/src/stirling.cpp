#include "iterlog/stirling.hpp"

#include <stdexcept>
#include <vector>

#include "iterlog/series.hpp"

namespace iterlog {

namespace {

std::optional<StirlingCorruption> g_corruption;

void require_range(unsigned m, unsigned n) {
  if (n > m)
    throw std::invalid_argument("stirling: need 0 <= n <= m, got m=" +
                                std::to_string(m) + " n=" + std::to_string(n));
}

BigInt apply_corruption(StirlingKind kind, unsigned m, unsigned n, BigInt v) {
  if (g_corruption && g_corruption->kind == kind && g_corruption->m == m &&
      g_corruption->n == n)
    v += g_corruption->delta;
  return v;
}

// Sum of entry products over strictly increasing tuples
// lo <= t_1 < ... < t_len < hi.
BigInt strict_tuple_sum(unsigned lo, unsigned hi, unsigned len) {
  if (len == 0) return 1;
  BigInt total = 0;
  for (unsigned t = lo; t + len <= hi; ++t)
    total += t * strict_tuple_sum(t + 1, hi, len - 1);
  return total;
}

// Sum of entry products over weakly increasing tuples
// lo <= i_1 <= ... <= i_len <= hi. Entries equal to zero kill the product,
// so callers start at lo = 1.
BigInt weak_tuple_sum(unsigned lo, unsigned hi, unsigned len) {
  if (len == 0) return 1;
  BigInt total = 0;
  for (unsigned t = lo; t <= hi; ++t)
    total += t * weak_tuple_sum(t, hi, len - 1);
  return total;
}

// Sum over compositions of m into n positive parts of weight(part) products,
// where weight(i) is 1/i (first kind) or 1/i! (second kind).
template <typename Weight>
Rational composition_sum(unsigned m, unsigned n, Weight weight) {
  if (n == 0) return m == 0 ? Rational(1) : Rational(0);
  if (n == 1) return m >= 1 ? weight(m) : Rational(0);
  Rational total(0);
  for (unsigned first = 1; first + (n - 1) <= m; ++first)
    total += weight(first) * composition_sum(m - first, n - 1, weight);
  return total;
}

BigInt to_integer(const Rational& q, const char* what) {
  if (denominator(q) != 1)
    throw std::logic_error(std::string(what) + ": non-integral result " +
                           to_string(q));
  return numerator(q);
}

// Coefficient of y^m in f(y)^n for f = log1p or expm1 applied to y.
Rational genfunc_coefficient(unsigned m, unsigned n, bool second_kind) {
  if (m == 0) return n == 0 ? Rational(1) : Rational(0);
  TranslationSeries base = TranslationSeries::y(m);
  TranslationSeries f = second_kind ? expm1_compose(base) : log1p_compose(base);
  TranslationSeries power = TranslationSeries::constant(
      AlgebraElement::scalar(ParamPoly(Rational(1))), m);
  for (unsigned k = 0; k < n; ++k) power = series_mul(power, f);
  const AlgebraElement& c = power.coefficient(m);
  if (c.is_zero()) return Rational(0);
  return c.coeff(Monomial()).coeff(0);
}

}  // namespace

void set_stirling_corruption(std::optional<StirlingCorruption> c) {
  g_corruption = c;
}

std::optional<StirlingCorruption> stirling_corruption() { return g_corruption; }

BigInt stirling1_explicit(unsigned m, unsigned n) {
  require_range(m, n);
  return apply_corruption(StirlingKind::First, m, n,
                          strict_tuple_sum(0, m, m - n));
}

BigInt stirling1_composition(unsigned m, unsigned n) {
  require_range(m, n);
  Rational sum =
      composition_sum(m, n, [](unsigned i) { return Rational(1, i); });
  Rational value = Rational(factorial(m), factorial(n)) * sum;
  return to_integer(value, "stirling1_composition");
}

BigInt stirling1_recurrence(unsigned m, unsigned n) {
  require_range(m, n);
  // Row-by-row DP on S(m,n) = (m-1) S(m-1,n) + S(m-1,n-1).
  std::vector<BigInt> row{1};
  for (unsigned mm = 1; mm <= m; ++mm) {
    std::vector<BigInt> next(mm + 1, 0);
    for (unsigned nn = 1; nn <= mm; ++nn) {
      next[nn] = (nn < mm ? BigInt(mm - 1) * row[nn] : BigInt(0)) + row[nn - 1];
    }
    row = std::move(next);
  }
  return row[n];
}

BigInt stirling1_genfunc(unsigned m, unsigned n) {
  require_range(m, n);
  // (log(1+y))^n has y^m coefficient (-1)^(m-n) (n!/m!) S1(m,n).
  Rational c = genfunc_coefficient(m, n, false);
  Rational sign((m - n) % 2 == 0 ? 1 : -1);
  return to_integer(c * sign * Rational(factorial(m), factorial(n)),
                    "stirling1_genfunc");
}

BigInt stirling2_explicit(unsigned m, unsigned n) {
  require_range(m, n);
  return apply_corruption(StirlingKind::Second, m, n,
                          weak_tuple_sum(1, n, m - n));
}

BigInt stirling2_partition(unsigned m, unsigned n) {
  require_range(m, n);
  Rational sum = composition_sum(
      m, n, [](unsigned i) { return Rational(1, factorial(i)); });
  return to_integer(Rational(factorial(m), factorial(n)) * sum,
                    "stirling2_partition");
}

BigInt stirling2_recurrence(unsigned m, unsigned n) {
  require_range(m, n);
  std::vector<BigInt> row{1};
  for (unsigned mm = 1; mm <= m; ++mm) {
    std::vector<BigInt> next(mm + 1, 0);
    for (unsigned nn = 1; nn <= mm; ++nn) {
      next[nn] = (nn < mm ? BigInt(nn) * row[nn] : BigInt(0)) + row[nn - 1];
    }
    row = std::move(next);
  }
  return row[n];
}

BigInt stirling2_genfunc(unsigned m, unsigned n) {
  require_range(m, n);
  // (e^y - 1)^n has y^m coefficient (n!/m!) S2(m,n).
  Rational c = genfunc_coefficient(m, n, true);
  return to_integer(c * Rational(factorial(m), factorial(n)),
                    "stirling2_genfunc");
}

BigInt stirling(StirlingKind kind, unsigned m, unsigned n) {
  return kind == StirlingKind::First ? stirling1_recurrence(m, n)
                                     : stirling2_recurrence(m, n);
}

ParamPoly recurrence_M(unsigned m, unsigned j) {
  require_range(m, j);
  const ParamPoly s = ParamPoly::variable();
  std::vector<ParamPoly> row{ParamPoly(Rational(1))};
  for (unsigned mm = 1; mm <= m; ++mm) {
    std::vector<ParamPoly> next(mm + 1);
    next[0] = row[0] * (ParamPoly(Rational(mm - 1)) - s);
    for (unsigned jj = 1; jj < mm; ++jj)
      next[jj] = (ParamPoly(Rational(mm - 1)) - s) * row[jj] + row[jj - 1];
    next[mm] = ParamPoly(Rational(1));
    row = std::move(next);
  }
  return row[j];
}

ParamPoly recurrence_N(unsigned m, unsigned j) {
  require_range(m, j);
  const ParamPoly s = ParamPoly::variable();
  std::vector<ParamPoly> row{ParamPoly(Rational(1))};
  for (unsigned mm = 1; mm <= m; ++mm) {
    std::vector<ParamPoly> next(mm + 1);
    next[0] = row[0] * s;
    for (unsigned jj = 1; jj < mm; ++jj)
      next[jj] = (s + ParamPoly(Rational(jj))) * row[jj] + row[jj - 1];
    next[mm] = ParamPoly(Rational(1));
    row = std::move(next);
  }
  return row[j];
}

}  // namespace iterlog
