#ifndef ITERLOG_EXPANSIONS_HPP
#define ITERLOG_EXPANSIONS_HPP

#include "iterlog/series.hpp"

namespace iterlog {

// Closed-form expansions of l[level](x+y)^r as truncated series, built
// directly from coefficient formulas. The exponent is the symbolic parameter
// r throughout; use specialize() for a concrete rational exponent.

/// Composition-sum expansion for levels N >= 0 (iterated logarithms).
TranslationSeries method1_log(unsigned level, unsigned order);

/// Composition-sum expansion for level -N, N >= 0 (iterated exponentials).
/// N = 0 delegates to method1_log(0, order).
TranslationSeries method1_exp(unsigned depth, unsigned order);

/// Chain-sum expansion for levels N >= 0 via the recursion + log series.
TranslationSeries method2_log(unsigned level, unsigned order);

/// Chain-sum expansion for level -N via the recursion + exp series.
/// N = 0 delegates to method2_log(0, order).
TranslationSeries method2_exp(unsigned depth, unsigned order);

/// Brute-force reference: exp_derivation(l[level]^r, order). Independent of
/// all closed-form machinery above.
TranslationSeries oracle_expansion(long long level, unsigned order);

/// Dispatches on the sign of the true level n (method 1 / method 2).
TranslationSeries method1_expansion(long long level, unsigned order);
TranslationSeries method2_expansion(long long level, unsigned order);

/// Builds l[n+1](x+y) at the same order from a series for l[n](x+y) with
/// plain exponent 1, via u = (series - l[n]) / l[n] and log(1+u).
/// Throws if u has a nonzero constant term.
TranslationSeries recursion_step_up(long long level,
                                    const TranslationSeries& series);

/// Builds l[n](x+y) from a series for l[n+1](x+y):
/// l[n] * (1 + expm1(series - l[n+1])).
TranslationSeries recursion_step_down(long long level,
                                      const TranslationSeries& series);

}  // namespace iterlog

#endif
