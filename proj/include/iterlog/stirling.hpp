#ifndef ITERLOG_STIRLING_HPP
#define ITERLOG_STIRLING_HPP

#include <optional>

#include "iterlog/param_poly.hpp"
#include "iterlog/rational.hpp"

namespace iterlog {

enum class StirlingKind { First, Second };

// Signless Stirling numbers of the first kind, four constructive routes.
// All require 0 <= n <= m and agree exactly.

/// Sum of products t_1...t_{m-n} over 0 <= t_1 < ... < t_{m-n} < m.
BigInt stirling1_explicit(unsigned m, unsigned n);
/// (m!/n!) * sum over compositions of m into n positive parts of 1/(i_1...i_n).
BigInt stirling1_composition(unsigned m, unsigned n);
/// S(m,n) = (m-1) S(m-1,n) + S(m-1,n-1) with the usual boundary.
BigInt stirling1_recurrence(unsigned m, unsigned n);
/// Coefficient extraction from (log(1+y))^n at order m.
BigInt stirling1_genfunc(unsigned m, unsigned n);

// Stirling numbers of the second kind, mirroring the first-kind quartet.

/// Sum of products over weakly increasing 0 <= i_1 <= ... <= i_{m-n} <= n.
BigInt stirling2_explicit(unsigned m, unsigned n);
/// (m!/n!) * sum over compositions of 1/(i_1! ... i_n!).
BigInt stirling2_partition(unsigned m, unsigned n);
/// S(m,n) = n S(m-1,n) + S(m-1,n-1).
BigInt stirling2_recurrence(unsigned m, unsigned n);
/// Coefficient extraction from (e^y - 1)^n at order m.
BigInt stirling2_genfunc(unsigned m, unsigned n);

BigInt stirling(StirlingKind kind, unsigned m, unsigned n);

// Parameterized recurrences; ParamPoly here is a polynomial in the recurrence
// parameter s. At s = 0 they specialize to the Stirling numbers.

/// M(m,j) = (m-1-s) M(m-1,j) + M(m-1,j-1), M(m,0) = (-s)(1-s)...(m-1-s),
/// M(m,m) = 1.
ParamPoly recurrence_M(unsigned m, unsigned j);
/// N(m,j) = (s+j) N(m-1,j) + N(m-1,j-1), N(m,0) = s^m, N(m,m) = 1.
ParamPoly recurrence_N(unsigned m, unsigned j);

// Test fixture: when set, the explicit-sum routes for the matching (kind, m, n)
// report a value offset by delta. Never set outside negative-control tests.
struct StirlingCorruption {
  StirlingKind kind;
  unsigned m;
  unsigned n;
  long long delta;
};
void set_stirling_corruption(std::optional<StirlingCorruption> c);
std::optional<StirlingCorruption> stirling_corruption();

}  // namespace iterlog

#endif
