#include "iterlog/identities.hpp"

#include <sstream>

#include "iterlog/expansions.hpp"
#include "iterlog/tableau.hpp"

namespace iterlog {

std::string IdentityReport::str() const {
  std::ostringstream out;
  out << id << " [" << range << "]: " << (pass ? "pass" : "FAIL");
  if (counterexample) {
    out << " at (";
    for (std::size_t i = 0; i < counterexample->size(); ++i) {
      if (i) out << ", ";
      out << (*counterexample)[i];
    }
    out << ")";
  }
  return out.str();
}

namespace {

IdentityReport fail(IdentityReport r, std::vector<long long> where) {
  r.pass = false;
  r.counterexample = std::move(where);
  return r;
}

}  // namespace

IdentityReport check_classical_first_kind(unsigned max_m) {
  IdentityReport r{"classical-first-kind",
                   "1 <= n <= m <= " + std::to_string(max_m)};
  for (unsigned m = 1; m <= max_m; ++m)
    for (unsigned n = 1; n <= m; ++n)
      if (stirling1_composition(m, n) != stirling1_explicit(m, n))
        return fail(r, {m, n});
  return r;
}

IdentityReport check_classical_second_kind(unsigned max_m) {
  IdentityReport r{"classical-second-kind",
                   "1 <= n <= m <= " + std::to_string(max_m)};
  for (unsigned m = 1; m <= max_m; ++m)
    for (unsigned n = 1; n <= m; ++n)
      if (stirling2_partition(m, n) != stirling2_explicit(m, n))
        return fail(r, {m, n});
  return r;
}

IdentityReport check_four_way(StirlingKind kind, unsigned max_m) {
  IdentityReport r{kind == StirlingKind::First ? "four-way-first"
                                               : "four-way-second",
                   "0 <= n <= m <= " + std::to_string(max_m)};
  for (unsigned m = 0; m <= max_m; ++m) {
    for (unsigned n = 0; n <= m; ++n) {
      BigInt a, b, c, d;
      if (kind == StirlingKind::First) {
        a = stirling1_explicit(m, n);
        b = stirling1_composition(m, n);
        c = stirling1_recurrence(m, n);
        d = stirling1_genfunc(m, n);
      } else {
        a = stirling2_explicit(m, n);
        b = stirling2_partition(m, n);
        c = stirling2_recurrence(m, n);
        d = stirling2_genfunc(m, n);
      }
      if (!(a == b && b == c && c == d)) return fail(r, {m, n});
    }
  }
  return r;
}

namespace {

// Enumerates shapes with positive heights summing to <= max_total, in
// lexicographic order of (total, heights).
bool factorization_holds(const TableauShape& shape, StirlingKind kind) {
  BigInt lhs = factored_constant(shape, kind);
  BigInt rhs = 1;
  unsigned suffix = 0;
  for (unsigned i = shape.columns(); i-- > 1;) {
    suffix += shape.heights[i];
    rhs *= factored_constant(TableauShape{{shape.heights[i - 1], suffix}}, kind);
  }
  return lhs == rhs;
}

bool sweep_shapes(unsigned total, std::vector<unsigned>& heights,
                  StirlingKind kind, std::vector<long long>& where) {
  if (!heights.empty()) {
    TableauShape shape{heights};
    if (!factorization_holds(shape, kind)) {
      where.assign(heights.begin(), heights.end());
      return false;
    }
  }
  for (unsigned h = 1; h <= total; ++h) {
    heights.push_back(h);
    if (!sweep_shapes(total - h, heights, kind, where)) return false;
    heights.pop_back();
  }
  return true;
}

}  // namespace

IdentityReport check_factorization(StirlingKind kind, unsigned max_total) {
  IdentityReport r{kind == StirlingKind::First ? "factorization-first"
                                               : "factorization-second",
                   "shapes with total <= " + std::to_string(max_total)};
  std::vector<unsigned> heights;
  std::vector<long long> where;
  if (!sweep_shapes(max_total, heights, kind, where)) return fail(r, where);
  return r;
}

IdentityReport check_methods_equal(long long min_level, long long max_level,
                                   unsigned order) {
  IdentityReport r{"methods-equal", "levels " + std::to_string(min_level) +
                                        ".." + std::to_string(max_level) +
                                        ", order " + std::to_string(order)};
  for (long long level = min_level; level <= max_level; ++level) {
    TranslationSeries m1 = method1_expansion(level, order);
    TranslationSeries m2 = method2_expansion(level, order);
    for (unsigned k = 0; k <= order; ++k)
      if (m1.coefficient(k) != m2.coefficient(k))
        return fail(r, {level, static_cast<long long>(k)});
  }
  return r;
}

}  // namespace iterlog
