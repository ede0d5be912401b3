#include "iterlog/expansions.hpp"

#include <functional>

#include "iterlog/stirling.hpp"

namespace iterlog {

namespace {

// Enumerates tuples (j_0,...,j_{count-1}) of nonnegative integers with the
// given sum.
void for_each_composition(unsigned sum, unsigned count,
                          std::vector<unsigned>& tuple,
                          const std::function<void(const std::vector<unsigned>&)>& fn) {
  if (count == 0) {
    if (sum == 0) fn(tuple);
    return;
  }
  for (unsigned j = 0; j <= sum; ++j) {
    tuple.push_back(j);
    for_each_composition(sum - j, count - 1, tuple, fn);
    tuple.pop_back();
  }
}

// Enumerates weakly increasing chains 0 <= c_0 <= ... <= c_{count-1} <= cap.
void for_each_chain(unsigned count, unsigned cap, unsigned lo,
                    std::vector<unsigned>& chain,
                    const std::function<void(const std::vector<unsigned>&)>& fn) {
  if (chain.size() == count) {
    fn(chain);
    return;
  }
  for (unsigned v = lo; v <= cap; ++v) {
    chain.push_back(v);
    for_each_chain(count, cap, v, chain, fn);
    chain.pop_back();
  }
}

}  // namespace

TranslationSeries method1_log(unsigned level, unsigned order) {
  const unsigned N = level;
  TranslationSeries out(order);
  for (unsigned m = 0; m <= order; ++m) {
    AlgebraElement coeff;
    std::vector<unsigned> tuple;
    for_each_composition(m, N + 1, tuple, [&](const std::vector<unsigned>& j) {
      // alpha_i = j_i + ... + j_N; weakly decreasing with alpha_0 = m.
      std::vector<unsigned> alpha(N + 1);
      unsigned acc = 0;
      for (unsigned i = N + 1; i-- > 0;) {
        acc += j[i];
        alpha[i] = acc;
      }
      BigInt stirl = 1;
      for (unsigned i = 0; i < N; ++i)
        stirl *= stirling1_explicit(alpha[i], alpha[i + 1]);
      if (stirl == 0) return;
      Rational scalar(stirl * factorial(j[N]), 1);
      if ((alpha[0] - alpha[N]) % 2 == 1) scalar = -scalar;
      ParamPoly c = poly_scale(binomial_poly(j[N]), scalar);
      Monomial mono = Monomial::variable(
          N, AffineExponent(1, -static_cast<long long>(alpha[N])));
      for (unsigned i = 0; i < N; ++i)
        mono.shift(i, AffineExponent::constant(-static_cast<long long>(alpha[i])));
      coeff.add_term(mono, c);
    });
    out.set_coefficient(m, elem_scale(coeff, ParamPoly(Rational(1, factorial(m)))));
  }
  return out;
}

TranslationSeries method1_exp(unsigned depth, unsigned order) {
  if (depth == 0) return method1_log(0, order);
  const unsigned N = depth;
  TranslationSeries out(order);
  for (unsigned m = 0; m <= order; ++m) {
    AlgebraElement coeff;
    std::vector<unsigned> tuple;
    for_each_composition(m, N, tuple, [&](const std::vector<unsigned>& j) {
      // j holds (j_1,...,j_N); alpha[i] = j_i + ... + j_N for i = 1..N.
      std::vector<unsigned> alpha(N + 1, 0);
      unsigned acc = 0;
      for (unsigned i = N; i >= 1; --i) {
        acc += j[i - 1];
        alpha[i] = acc;
      }
      BigInt stirl = 1;
      for (unsigned i = 1; i < N; ++i)
        stirl *= stirling2_explicit(alpha[i], alpha[i + 1]);
      if (stirl == 0) return;
      ParamPoly c = poly_scale(param_power(j[N - 1]), Rational(stirl));
      Monomial mono =
          Monomial::variable(-static_cast<long long>(N), AffineExponent(1, 0));
      for (unsigned i = 1; i < N; ++i)
        mono.shift(-static_cast<long long>(i),
                   AffineExponent::constant(alpha[i + 1]));
      coeff.add_term(mono, c);
    });
    out.set_coefficient(m, elem_scale(coeff, ParamPoly(Rational(1, factorial(m)))));
  }
  return out;
}

TranslationSeries method2_log(unsigned level, unsigned order) {
  // Chains are enumerated with weak inequalities s_N <= ... <= s_0, matching
  // the derivation; see the unit tests for the agreement with the
  // strict-chain reading plus diagonal terms.
  const unsigned N = level;
  TranslationSeries out(order);
  std::vector<unsigned> chain;
  for_each_chain(N + 1, order, 0, chain, [&](const std::vector<unsigned>& c) {
    // c = (s_N, s_{N-1}, ..., s_0) in weakly increasing order.
    const unsigned sN = c.front();
    const unsigned s0 = c.back();
    BigInt stirl = 1;
    for (unsigned i = 0; i < N; ++i) {
      // s_i is c[N - i].
      stirl *= stirling1_genfunc(c[N - i], c[N - i - 1]);
    }
    if (stirl == 0) return;
    Rational scalar(stirl * factorial(sN), factorial(s0));
    if ((s0 - sN) % 2 == 1) scalar = -scalar;
    ParamPoly p = poly_scale(binomial_poly(sN), scalar);
    Monomial mono = Monomial::variable(
        N, AffineExponent(1, -static_cast<long long>(sN)));
    for (unsigned i = 0; i < N; ++i)
      mono.shift(i, AffineExponent::constant(
                        -static_cast<long long>(c[N - i])));
    AlgebraElement term = out.coefficient(s0);
    term.add_term(mono, p);
    out.set_coefficient(s0, std::move(term));
  });
  return out;
}

TranslationSeries method2_exp(unsigned depth, unsigned order) {
  if (depth == 0) return method2_log(0, order);
  const unsigned N = depth;
  TranslationSeries out(order);
  std::vector<unsigned> chain;
  for_each_chain(N, order, 0, chain, [&](const std::vector<unsigned>& l) {
    // l = (l_1, ..., l_N), weakly increasing.
    const unsigned l1 = l.front();
    const unsigned lN = l.back();
    BigInt stirl = 1;
    for (unsigned i = 1; i < N; ++i) stirl *= stirling2_genfunc(l[i], l[i - 1]);
    if (stirl == 0) return;
    ParamPoly p =
        poly_scale(param_power(l1), Rational(stirl, factorial(lN)));
    Monomial mono =
        Monomial::variable(-static_cast<long long>(N), AffineExponent(1, 0));
    for (unsigned i = 1; i < N; ++i)
      mono.shift(-static_cast<long long>(i),
                 AffineExponent::constant(l[N - i - 1]));
    AlgebraElement term = out.coefficient(lN);
    term.add_term(mono, p);
    out.set_coefficient(lN, std::move(term));
  });
  return out;
}

TranslationSeries oracle_expansion(long long level, unsigned order) {
  return exp_derivation(AlgebraElement::variable(level, AffineExponent(1, 0)),
                        order);
}

TranslationSeries method1_expansion(long long level, unsigned order) {
  return level >= 0 ? method1_log(static_cast<unsigned>(level), order)
                    : method1_exp(static_cast<unsigned>(-level), order);
}

TranslationSeries method2_expansion(long long level, unsigned order) {
  return level >= 0 ? method2_log(static_cast<unsigned>(level), order)
                    : method2_exp(static_cast<unsigned>(-level), order);
}

TranslationSeries recursion_step_up(long long level,
                                    const TranslationSeries& series) {
  const AlgebraElement ell_n = AlgebraElement::variable(level);
  const AlgebraElement ell_n_inv =
      AlgebraElement::variable(level, AffineExponent::constant(-1));
  TranslationSeries u = series;
  u.set_coefficient(0, u.coefficient(0) - ell_n);
  for (unsigned k = 0; k <= u.order(); ++k)
    u.set_coefficient(k, u.coefficient(k) * ell_n_inv);
  TranslationSeries out = log1p_compose(u);
  out.set_coefficient(0, out.coefficient(0) + AlgebraElement::variable(level + 1));
  return out;
}

TranslationSeries recursion_step_down(long long level,
                                      const TranslationSeries& series) {
  const AlgebraElement ell_np1 = AlgebraElement::variable(level + 1);
  const AlgebraElement ell_n = AlgebraElement::variable(level);
  TranslationSeries v = series;
  v.set_coefficient(0, v.coefficient(0) - ell_np1);
  TranslationSeries out = series_scale(expm1_compose(v), ell_n);
  out.set_coefficient(0, out.coefficient(0) + ell_n);
  return out;
}

}  // namespace iterlog
