#ifndef ITERLOG_TABLEAU_HPP
#define ITERLOG_TABLEAU_HPP

#include <map>
#include <string>
#include <vector>

#include "iterlog/rational.hpp"
#include "iterlog/stirling.hpp"

namespace iterlog {

/// Column heights, left to right. Heights may be zero; the empty shape is
/// allowed.
struct TableauShape {
  std::vector<unsigned> heights;

  unsigned columns() const { return static_cast<unsigned>(heights.size()); }
  unsigned total() const;
  bool operator==(const TableauShape& o) const { return heights == o.heights; }
};

/// A filled grid: entries per column, top to bottom.
struct Tableau {
  TableauShape shape;
  std::vector<std::vector<unsigned>> columns;
};

/// Validity rules:
///   kind 1 - entries strictly increase down each column, and every entry is
///     at most (entries above it in its column) + (total entries in columns
///     strictly to its right);
///   kind 2 - entries weakly increase down each column, and every entry is at
///     most the total number of entries in columns strictly to its right.
bool tableau_valid(const Tableau& t, StirlingKind kind);

/// All valid tableaux of the shape, ordered lexicographically by the
/// column-concatenated entry list. The empty shape yields one empty tableau.
std::vector<Tableau> tableau_enumerate(const TableauShape& shape,
                                       StirlingKind kind);

/// Multivariate polynomial in x_1..x_n with integer coefficients, sparse
/// exponent-vector form.
class TableauPolynomial {
 public:
  using ExponentVector = std::vector<unsigned>;

  explicit TableauPolynomial(unsigned n_vars = 0) : n_vars_(n_vars) {}

  unsigned n_vars() const { return n_vars_; }
  const std::map<ExponentVector, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const ExponentVector& exps, const BigInt& c);

  BigInt eval(const std::vector<BigInt>& at) const;
  Rational eval(const std::vector<Rational>& at) const;

  bool operator==(const TableauPolynomial& o) const {
    return n_vars_ == o.n_vars_ && terms_ == o.terms_;
  }

  std::string str() const;

 private:
  unsigned n_vars_;
  std::map<ExponentVector, BigInt> terms_;
};

/// Sum over valid tableaux of the product over entries of (x_i - entry) for
/// kind 1, (x_i + entry) for kind 2, with i the column index.
TableauPolynomial tableau_polynomial(const TableauShape& shape,
                                     StirlingKind kind);

/// The integer (m_1,...,m_{n-1}; m_n)_k: the rightmost-column factor of the
/// tableau polynomial divided out, remaining variables set to zero.
/// (m-j; j)_1 = (-1)^{m-j} S1(m,j) and (m-n; n)_2 = S2(m,n).
BigInt factored_constant(const TableauShape& shape, StirlingKind kind);

}  // namespace iterlog

#endif
