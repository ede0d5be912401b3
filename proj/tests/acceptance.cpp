// End-to-end acceptance suite. Each criterion runs an exhaustive sweep at
// pinned bounds with exact equality and prints one pass/fail line; the
// process exits nonzero if any criterion fails.

#include <cstdio>
#include <functional>
#include <random>
#include <vector>

#include "iterlog/expansions.hpp"
#include "iterlog/identities.hpp"
#include "iterlog/series.hpp"
#include "iterlog/stirling.hpp"
#include "iterlog/tableau.hpp"

using namespace iterlog;

namespace {

int failures = 0;

void report(int criterion, const char* label, bool ok) {
  std::printf("criterion %2d (%s): %s\n", criterion, label,
              ok ? "PASS" : "FAIL");
  if (!ok) ++failures;
}

// 1. All definitional routes agree for both kinds, 0 <= n <= m <= 12.
bool four_way_agreement() {
  return check_four_way(StirlingKind::First, 12).pass &&
         check_four_way(StirlingKind::Second, 12).pass;
}

// 2. exp_derivation is multiplicative on >= 100 random element pairs.
bool automorphism_property() {
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<int> level(-3, 3);
  std::uniform_int_distribution<int> small(-2, 2);
  auto random_element = [&]() {
    AffineExponent e(Rational(rng() % 2), Rational(small(rng)));
    if (e.is_zero()) e = AffineExponent::constant(1);
    AlgebraElement a(Monomial::variable(level(rng), e),
                     ParamPoly(Rational(small(rng) * 2 + 1)));
    a.add_term(Monomial::variable(level(rng)), ParamPoly::variable());
    return a;
  };
  const unsigned order = 6;
  for (int i = 0; i < 100; ++i) {
    AlgebraElement a = random_element();
    AlgebraElement b = random_element();
    if (exp_derivation(a * b, order) !=
        series_mul(exp_derivation(a, order), exp_derivation(b, order)))
      return false;
  }
  return true;
}

// 3. k! times the k-th series coefficient equals the k-th derivative,
//    for |level| <= 3 and k <= 8.
bool taylor_consistency() {
  for (long long level = -3; level <= 3; ++level) {
    AlgebraElement a = AlgebraElement::variable(level,
                                                AffineExponent::symbolic_r());
    TranslationSeries s = exp_derivation(a, 8);
    BigInt kfact = 1;
    for (unsigned k = 0; k <= 8; ++k) {
      if (k > 0) kfact *= k;
      if (elem_scale(s.coefficient(k), ParamPoly(Rational(kfact))) !=
          derive_power(a, k))
        return false;
    }
  }
  return true;
}

// 4. Two-column factored constants reproduce the Stirling numbers with the
//    first-kind sign law, m <= 8.
bool tableau_bridge() {
  for (unsigned m = 0; m <= 8; ++m) {
    for (unsigned j = 0; j <= m; ++j) {
      BigInt c1 =
          factored_constant(TableauShape{{m - j, j}}, StirlingKind::First);
      BigInt signed_c1 = (m - j) % 2 == 0 ? c1 : -c1;
      if (signed_c1 != stirling1_explicit(m, j)) return false;
      if (signed_c1 < 0) return false;
      if (factored_constant(TableauShape{{m - j, j}}, StirlingKind::Second) !=
          stirling2_explicit(m, j))
        return false;
    }
  }
  return true;
}

// 5. Factored constants factor into pairwise constants for every shape with
//    positive heights and total <= 8, both kinds.
bool factorization() {
  return check_factorization(StirlingKind::First, 8).pass &&
         check_factorization(StirlingKind::Second, 8).pass;
}

// 6. Both closed-form methods reproduce the brute-force expansion with the
//    exponent kept symbolic, |level| <= 3, order 6.
bool methods_match_oracle() {
  for (long long level = -3; level <= 3; ++level) {
    TranslationSeries ref = oracle_expansion(level, 6);
    if (method1_expansion(level, 6) != ref) return false;
    if (method2_expansion(level, 6) != ref) return false;
  }
  return true;
}

// 7. One recursion step up or down maps the expansion at one level to the
//    expansion at the adjacent level, and the two steps are mutual inverses,
//    for n in [-2, 2] and orders <= 6.
bool recursion_steps() {
  for (long long n = -2; n <= 2; ++n) {
    for (unsigned M = 0; M <= 6; ++M) {
      TranslationSeries lo = oracle_expansion(n, M);
      TranslationSeries hi = oracle_expansion(n + 1, M);
      TranslationSeries lo1 = specialize(lo, 1);
      TranslationSeries hi1 = specialize(hi, 1);
      if (recursion_step_up(n, lo1) != hi1) return false;
      if (recursion_step_down(n, hi1) != lo1) return false;
      if (recursion_step_down(n, recursion_step_up(n, lo1)) != lo1)
        return false;
    }
  }
  return true;
}

// 8. The parameterized recurrences specialize at s = 0 to the Stirling
//    numbers for m <= 10, and match the closed boundary forms.
bool parameterized_recurrences() {
  if (recurrence_M(2, 0) != ParamPoly({0, -1, 1})) return false;   // s^2 - s
  if (recurrence_N(3, 0) != ParamPoly({0, 0, 0, 1})) return false; // s^3
  for (unsigned m = 0; m <= 10; ++m) {
    for (unsigned j = 0; j <= m; ++j) {
      if (poly_eval(recurrence_M(m, j), 0) !=
          Rational(stirling1_recurrence(m, j)))
        return false;
      if (poly_eval(recurrence_N(m, j), 0) !=
          Rational(stirling2_recurrence(m, j)))
        return false;
    }
  }
  return true;
}

// 9. Classical sum identities for m <= 10 plus exact agreement of the two
//    methods across levels -3..3 at order 6.
bool classical_and_cross_method() {
  return check_classical_first_kind(10).pass &&
         check_classical_second_kind(10).pass &&
         check_methods_equal(-3, 3, 6).pass;
}

void for_each_composition(
    unsigned sum, unsigned count, std::vector<unsigned>& tuple,
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

AlgebraElement tableau_route_log(const std::vector<Rational>& c, unsigned m) {
  const unsigned N = static_cast<unsigned>(c.size()) - 1;
  AlgebraElement out;
  std::vector<unsigned> tuple;
  for_each_composition(m, N + 1, tuple, [&](const std::vector<unsigned>& j) {
    Rational coeff =
        tableau_polynomial(TableauShape{j}, StirlingKind::First).eval(c);
    if (coeff == 0) return;
    Monomial mono;
    unsigned alpha = 0;
    for (unsigned i = N + 1; i-- > 0;) {
      alpha += j[i];
      mono.shift(i, AffineExponent::constant(c[i] - alpha));
    }
    out.add_term(mono, ParamPoly(coeff));
  });
  return out;
}

AlgebraElement tableau_route_exp(const std::vector<Rational>& c, unsigned k) {
  const unsigned N = static_cast<unsigned>(c.size());
  AlgebraElement out;
  std::vector<unsigned> tuple;
  for_each_composition(k, N, tuple, [&](const std::vector<unsigned>& j) {
    Rational coeff =
        tableau_polynomial(TableauShape{j}, StirlingKind::Second).eval(c);
    if (coeff == 0) return;
    std::vector<unsigned> alpha(N + 2, 0);
    for (unsigned i = N; i >= 1; --i) alpha[i] = alpha[i + 1] + j[i - 1];
    Monomial mono;
    mono.shift(-static_cast<long long>(N), AffineExponent::constant(c[N - 1]));
    for (unsigned i = 1; i < N; ++i)
      mono.shift(-static_cast<long long>(i),
                 AffineExponent::constant(c[i - 1] + alpha[i + 1]));
    out.add_term(mono, ParamPoly(coeff));
  });
  return out;
}

// 10. General-product derivative formulas against the tableau-polynomial
//     route, on 24 rational exponent tuples, derivative order <= 5.
bool general_product_formulas() {
  std::vector<std::vector<Rational>> log_tuples = {
      {Rational(1, 2)},
      {Rational(-3, 4)},
      {Rational(5)},
      {Rational(1, 2), Rational(3)},
      {Rational(-2), Rational(5, 3)},
      {Rational(0), Rational(7, 2)},
      {Rational(1), Rational(-1)},
      {Rational(2, 5), Rational(1, 3)},
      {Rational(7, 2), Rational(-1, 3), Rational(2)},
      {Rational(1), Rational(1), Rational(-5, 2)},
      {Rational(-1, 2), Rational(0), Rational(4, 3)},
      {Rational(3), Rational(2), Rational(1)},
  };
  std::vector<std::vector<Rational>> exp_tuples = {
      {Rational(1, 2)},
      {Rational(-2)},
      {Rational(7, 3)},
      {Rational(1, 2), Rational(3)},
      {Rational(-2), Rational(5, 3)},
      {Rational(4), Rational(-1, 2)},
      {Rational(0), Rational(2, 7)},
      {Rational(1), Rational(1)},
      {Rational(3, 2), Rational(-1, 3), Rational(2)},
      {Rational(-1), Rational(2), Rational(1, 2)},
      {Rational(5, 4), Rational(0), Rational(-3)},
      {Rational(2), Rational(2), Rational(2)},
  };
  auto product = [](const std::vector<Rational>& c, bool log_side) {
    Monomial m;
    for (unsigned i = 0; i < c.size(); ++i) {
      long long level = log_side ? static_cast<long long>(i)
                                 : -static_cast<long long>(i + 1);
      m.shift(level, AffineExponent::constant(c[i]));
    }
    return AlgebraElement(m);
  };
  for (const auto& c : log_tuples)
    for (unsigned m = 0; m <= 5; ++m)
      if (derive_power(product(c, true), m) != tableau_route_log(c, m))
        return false;
  for (const auto& c : exp_tuples)
    for (unsigned k = 0; k <= 5; ++k)
      if (derive_power(product(c, false), k) != tableau_route_exp(c, k))
        return false;
  return true;
}

// 11. Negative control: a deliberately corrupted table must make the
//     cross-checks fail and report the minimal breaking cell.
bool negative_control() {
  set_stirling_corruption(StirlingCorruption{StirlingKind::First, 4, 2, 1});
  IdentityReport four = check_four_way(StirlingKind::First, 12);
  IdentityReport classical = check_classical_first_kind(10);
  set_stirling_corruption(std::nullopt);

  bool ok = !four.pass && four.counterexample.has_value() &&
            *four.counterexample == std::vector<long long>{4, 2} &&
            !classical.pass && classical.counterexample.has_value() &&
            *classical.counterexample == std::vector<long long>{4, 2};
  // and the fixture must leave no residue
  return ok && check_four_way(StirlingKind::First, 12).pass;
}

}  // namespace

int main() {
  report(1, "definitional routes agree", four_way_agreement());
  report(2, "translation is multiplicative", automorphism_property());
  report(3, "series coefficients are Taylor coefficients",
         taylor_consistency());
  report(4, "tableau constants give Stirling numbers", tableau_bridge());
  report(5, "tableau constants factor pairwise", factorization());
  report(6, "closed-form methods match brute force", methods_match_oracle());
  report(7, "level recursion steps invert each other", recursion_steps());
  report(8, "parameterized recurrences specialize",
         parameterized_recurrences());
  report(9, "classical identities and cross-method agreement",
         classical_and_cross_method());
  report(10, "general-product derivative formulas",
         general_product_formulas());
  report(11, "corrupted table is detected", negative_control());
  return failures == 0 ? 0 : 1;
}
