#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "iterlog/stirling.hpp"

using namespace iterlog;

TEST_CASE("first kind, explicit sum") {
  CHECK(stirling1_explicit(0, 0) == 1);
  CHECK(stirling1_explicit(1, 0) == 0);
  CHECK(stirling1_explicit(3, 1) == 2);   // pairs (0,1),(0,2),(1,2)
  CHECK(stirling1_explicit(4, 2) == 11);
  CHECK_THROWS_AS(stirling1_explicit(2, 3), std::invalid_argument);
}

TEST_CASE("first kind, composition sum") {
  CHECK(stirling1_composition(4, 2) == 11);  // 12*(1/3 + 1/4 + 1/3)
  CHECK(stirling1_composition(6, 6) == 1);
  CHECK(stirling1_composition(1, 0) == 0);
  CHECK(stirling1_composition(0, 0) == 1);
}

TEST_CASE("first kind, recurrence") {
  CHECK(stirling1_recurrence(0, 0) == 1);
  CHECK(stirling1_recurrence(7, 7) == 1);
  CHECK(stirling1_recurrence(5, 1) == 24);
  CHECK(stirling1_recurrence(4, 3) == 6);
  CHECK(stirling1_recurrence(4, 0) == 0);
}

TEST_CASE("first kind, generating function") {
  CHECK(stirling1_genfunc(2, 1) == 1);
  CHECK(stirling1_genfunc(3, 2) == 3);
  CHECK(stirling1_genfunc(5, 5) == 1);
  CHECK(stirling1_genfunc(0, 0) == 1);
  CHECK(stirling1_genfunc(3, 0) == 0);
}

TEST_CASE("second kind quartet") {
  CHECK(stirling2_explicit(3, 2) == 3);  // i1 in {0,1,2}
  CHECK(stirling2_explicit(0, 0) == 1);
  CHECK(stirling2_explicit(5, 0) == 0);
  CHECK(stirling2_recurrence(4, 2) == 7);
  CHECK(stirling2_partition(4, 2) == 7);
  CHECK(stirling2_genfunc(4, 2) == 7);
  CHECK_THROWS_AS(stirling2_partition(1, 2), std::invalid_argument);
}

TEST_CASE("four-way agreement for both kinds up to m = 12") {
  for (unsigned m = 0; m <= 12; ++m) {
    for (unsigned n = 0; n <= m; ++n) {
      BigInt s1 = stirling1_explicit(m, n);
      CHECK(stirling1_composition(m, n) == s1);
      CHECK(stirling1_recurrence(m, n) == s1);
      CHECK(stirling1_genfunc(m, n) == s1);

      BigInt s2 = stirling2_explicit(m, n);
      CHECK(stirling2_partition(m, n) == s2);
      CHECK(stirling2_recurrence(m, n) == s2);
      CHECK(stirling2_genfunc(m, n) == s2);
    }
  }
}

TEST_CASE("recurrence_M boundary and specialization") {
  CHECK(recurrence_M(0, 0) == ParamPoly(Rational(1)));
  CHECK(recurrence_M(5, 5) == ParamPoly(Rational(1)));
  // M(2,0) = (-s)(1-s) = s^2 - s
  CHECK(recurrence_M(2, 0) == ParamPoly({0, -1, 1}));
  for (unsigned m = 0; m <= 10; ++m)
    for (unsigned j = 0; j <= m; ++j)
      CHECK(poly_eval(recurrence_M(m, j), 0) ==
            Rational(stirling1_recurrence(m, j)));
  CHECK_THROWS_AS(recurrence_M(2, 3), std::invalid_argument);
}

TEST_CASE("recurrence_N boundary and specialization") {
  CHECK(recurrence_N(4, 4) == ParamPoly(Rational(1)));
  // N(3,0) = s^3
  CHECK(recurrence_N(3, 0) == ParamPoly({0, 0, 0, 1}));
  for (unsigned m = 0; m <= 10; ++m)
    for (unsigned j = 0; j <= m; ++j)
      CHECK(poly_eval(recurrence_N(m, j), 0) ==
            Rational(stirling2_recurrence(m, j)));
  CHECK_THROWS_AS(recurrence_N(1, 2), std::invalid_argument);
}

TEST_CASE("corruption hook offsets only the explicit route") {
  set_stirling_corruption(StirlingCorruption{StirlingKind::First, 4, 2, 1});
  CHECK(stirling1_explicit(4, 2) == 12);
  CHECK(stirling1_recurrence(4, 2) == 11);
  set_stirling_corruption(std::nullopt);
  CHECK(stirling1_explicit(4, 2) == 11);
}
