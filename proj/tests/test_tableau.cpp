#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "iterlog/tableau.hpp"

using namespace iterlog;

namespace {

bool contains(const std::vector<Tableau>& all,
              const std::vector<std::vector<unsigned>>& columns) {
  return std::any_of(all.begin(), all.end(),
                     [&](const Tableau& t) { return t.columns == columns; });
}

}  // namespace

TEST_CASE("kind-1 validity on the worked examples") {
  TableauShape shape{{4, 3, 5}};
  auto all = tableau_enumerate(shape, StirlingKind::First);
  CHECK(contains(all, {{0, 2, 8, 11}, {5, 6, 7}, {0, 1, 2, 3, 4}}));
  CHECK(!contains(all, {{0, 8, 2, 11}, {3, 5, 6}, {0, 1, 2, 3, 4}}));
  CHECK(!contains(all, {{0, 2, 8, 11}, {3, 5, 20}, {0, 1, 2, 3, 4}}));

  Tableau good{shape, {{0, 2, 8, 11}, {5, 6, 7}, {0, 1, 2, 3, 4}}};
  CHECK(tableau_valid(good, StirlingKind::First));
  Tableau bad{shape, {{0, 8, 2, 11}, {3, 5, 6}, {0, 1, 2, 3, 4}}};
  CHECK(!tableau_valid(bad, StirlingKind::First));
}

TEST_CASE("kind-2 validity on the worked examples") {
  TableauShape shape{{4, 3, 5}};
  auto all = tableau_enumerate(shape, StirlingKind::Second);
  CHECK(contains(all, {{0, 2, 6, 8}, {4, 5, 5}, {0, 0, 0, 0, 0}}));
  CHECK(!contains(all, {{0, 8, 2, 8}, {3, 5, 5}, {0, 0, 0, 0, 0}}));
  CHECK(!contains(all, {{0, 2, 8, 8}, {3, 5, 6}, {0, 0, 0, 0, 0}}));
}

TEST_CASE("single-column shapes have exactly one tableau") {
  for (unsigned m = 0; m <= 6; ++m) {
    auto k1 = tableau_enumerate(TableauShape{{m}}, StirlingKind::First);
    REQUIRE(k1.size() == 1);
    // the rightmost (here only) column is forced to 0..m-1 for kind 1
    for (unsigned k = 0; k < m; ++k) CHECK(k1[0].columns[0][k] == k);

    auto k2 = tableau_enumerate(TableauShape{{m}}, StirlingKind::Second);
    REQUIRE(k2.size() == 1);
    for (unsigned k = 0; k < m; ++k) CHECK(k2[0].columns[0][k] == 0);
  }
}

TEST_CASE("empty shape yields the single empty tableau") {
  auto all = tableau_enumerate(TableauShape{}, StirlingKind::First);
  REQUIRE(all.size() == 1);
  CHECK(all[0].columns.empty());
}

TEST_CASE("enumeration order is lexicographic by concatenated entries") {
  auto all = tableau_enumerate(TableauShape{{2, 1}}, StirlingKind::First);
  std::vector<std::vector<unsigned>> flat;
  for (const auto& t : all) {
    std::vector<unsigned> f;
    for (const auto& col : t.columns) f.insert(f.end(), col.begin(), col.end());
    flat.push_back(f);
  }
  CHECK(std::is_sorted(flat.begin(), flat.end()));
  CHECK(!flat.empty());
}

TEST_CASE("tableau polynomials") {
  // shape (1) kind 1: single tableau with sole entry 0 -> x1
  TableauPolynomial p1 = tableau_polynomial(TableauShape{{1}}, StirlingKind::First);
  CHECK(p1.str() == "x1");

  // shape (2) kind 1: sole tableau entries (0,1) -> x1(x1-1)
  TableauPolynomial p2 = tableau_polynomial(TableauShape{{2}}, StirlingKind::First);
  CHECK(p2.eval(std::vector<BigInt>{5}) == 20);
  CHECK(p2.str() == "x1^2 - x1");

  // shape (1,1) kind 2: left entry in {0,1}, right entry 0
  //   -> x1*x2 + (x1+1)*x2 = 2 x1 x2 + x2
  TableauPolynomial p3 =
      tableau_polynomial(TableauShape{{1, 1}}, StirlingKind::Second);
  CHECK(p3.eval(std::vector<BigInt>{3, 7}) == 2 * 3 * 7 + 7);
}

TEST_CASE("tableau polynomial degree in x_i equals the column height") {
  TableauPolynomial p =
      tableau_polynomial(TableauShape{{2, 3}}, StirlingKind::First);
  unsigned deg0 = 0, deg1 = 0;
  for (const auto& [exps, c] : p.terms()) {
    deg0 = std::max(deg0, exps[0]);
    deg1 = std::max(deg1, exps[1]);
  }
  CHECK(deg0 == 2);
  CHECK(deg1 == 3);
}

TEST_CASE("factored constants specialize to Stirling numbers") {
  // (2;1)_1 = 2 = (-1)^2 S1(3,1)
  CHECK(factored_constant(TableauShape{{2, 1}}, StirlingKind::First) == 2);
  // (1;2)_2 = 3 = S2(3,2)
  CHECK(factored_constant(TableauShape{{1, 2}}, StirlingKind::Second) == 3);
  // single column -> 1 (empty product)
  CHECK(factored_constant(TableauShape{{0}}, StirlingKind::First) == 1);
  CHECK(factored_constant(TableauShape{{4}}, StirlingKind::Second) == 1);
  CHECK_THROWS_AS(factored_constant(TableauShape{}, StirlingKind::First),
                  std::invalid_argument);
}

TEST_CASE("tableau-Stirling bridge for m <= 8") {
  for (unsigned m = 0; m <= 8; ++m) {
    for (unsigned j = 0; j <= m; ++j) {
      BigInt c1 = factored_constant(TableauShape{{m - j, j}}, StirlingKind::First);
      BigInt signed_c1 = (m - j) % 2 == 0 ? c1 : -c1;
      CHECK(signed_c1 == stirling1_explicit(m, j));
      // sign law: (-1)^(m-j) (m-j;j)_1 >= 0
      CHECK(signed_c1 >= 0);

      CHECK(factored_constant(TableauShape{{m - j, j}}, StirlingKind::Second) ==
            stirling2_explicit(m, j));
    }
  }
}

TEST_CASE("factorization product law on small shapes") {
  // kind 1, shape (1,1,1)
  BigInt whole = factored_constant(TableauShape{{1, 1, 1}}, StirlingKind::First);
  BigInt parts =
      factored_constant(TableauShape{{1, 2}}, StirlingKind::First) *
      factored_constant(TableauShape{{1, 1}}, StirlingKind::First);
  CHECK(whole == parts);

  BigInt whole2 =
      factored_constant(TableauShape{{2, 1, 2}}, StirlingKind::Second);
  BigInt parts2 =
      factored_constant(TableauShape{{2, 3}}, StirlingKind::Second) *
      factored_constant(TableauShape{{1, 2}}, StirlingKind::Second);
  CHECK(whole2 == parts2);
}
