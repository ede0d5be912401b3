#ifndef ITERLOG_IDENTITIES_HPP
#define ITERLOG_IDENTITIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "iterlog/stirling.hpp"

namespace iterlog {

/// Outcome of one exhaustive identity sweep. Sweeps ascend lexicographically
/// over their parameter range and stop at the first failure, so a recorded
/// counterexample is the minimal one.
struct IdentityReport {
  std::string id;
  std::string range;
  bool pass = true;
  std::optional<std::vector<long long>> counterexample;

  std::string str() const;
};

/// (m!/n!) sum 1/(i_1...i_n) = sum t_1...t_{m-n} for 1 <= n <= m <= max_m.
IdentityReport check_classical_first_kind(unsigned max_m);

/// (m!/n!) sum 1/(i_1!...i_n!) = sum i_1...i_{m-n} on the same range.
IdentityReport check_classical_second_kind(unsigned max_m);

/// Four-way agreement of the definitional routes for one kind,
/// 0 <= n <= m <= max_m.
IdentityReport check_four_way(StirlingKind kind, unsigned max_m);

/// factored_constant(shape) equals the product of pairwise factored
/// constants, for every shape with positive column heights and total
/// entries <= max_total.
IdentityReport check_factorization(StirlingKind kind, unsigned max_total);

/// method1 and method2 series agree exactly for each level in
/// [min_level, max_level] at the given order. A failing cell records
/// (level, y-power).
IdentityReport check_methods_equal(long long min_level, long long max_level,
                                   unsigned order);

}  // namespace iterlog

#endif
