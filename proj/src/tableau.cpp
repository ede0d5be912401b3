#include "iterlog/tableau.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace iterlog {

unsigned TableauShape::total() const {
  unsigned t = 0;
  for (unsigned h : heights) t += h;
  return t;
}

namespace {

// Total entries in columns strictly to the right of column c.
unsigned right_count(const TableauShape& shape, unsigned c) {
  unsigned t = 0;
  for (unsigned i = c + 1; i < shape.columns(); ++i) t += shape.heights[i];
  return t;
}

bool column_valid(const std::vector<unsigned>& col, unsigned right,
                  StirlingKind kind) {
  for (unsigned k = 0; k < col.size(); ++k) {
    if (kind == StirlingKind::First) {
      if (k > 0 && col[k] <= col[k - 1]) return false;
      if (col[k] > k + right) return false;
    } else {
      if (k > 0 && col[k] < col[k - 1]) return false;
      if (col[k] > right) return false;
    }
  }
  return true;
}

// All valid fillings of one column, in lexicographic order.
void enumerate_column(unsigned height, unsigned right, StirlingKind kind,
                      std::vector<unsigned>& partial,
                      std::vector<std::vector<unsigned>>& out) {
  if (partial.size() == height) {
    out.push_back(partial);
    return;
  }
  unsigned k = static_cast<unsigned>(partial.size());
  unsigned lo = 0;
  if (!partial.empty())
    lo = kind == StirlingKind::First ? partial.back() + 1 : partial.back();
  unsigned hi = kind == StirlingKind::First ? k + right : right;
  for (unsigned v = lo; v <= hi; ++v) {
    partial.push_back(v);
    enumerate_column(height, right, kind, partial, out);
    partial.pop_back();
  }
}

std::vector<std::vector<unsigned>> column_fillings(unsigned height,
                                                   unsigned right,
                                                   StirlingKind kind) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> partial;
  enumerate_column(height, right, kind, partial, out);
  return out;
}

}  // namespace

bool tableau_valid(const Tableau& t, StirlingKind kind) {
  if (t.columns.size() != t.shape.columns()) return false;
  for (unsigned c = 0; c < t.shape.columns(); ++c) {
    if (t.columns[c].size() != t.shape.heights[c]) return false;
    if (!column_valid(t.columns[c], right_count(t.shape, c), kind))
      return false;
  }
  return true;
}

std::vector<Tableau> tableau_enumerate(const TableauShape& shape,
                                       StirlingKind kind) {
  // Columns are constrained independently (the bound depends only on the
  // count of entries to the right), so take the Cartesian product of
  // per-column fillings, leftmost column varying slowest.
  std::vector<std::vector<std::vector<unsigned>>> per_column;
  per_column.reserve(shape.columns());
  for (unsigned c = 0; c < shape.columns(); ++c)
    per_column.push_back(
        column_fillings(shape.heights[c], right_count(shape, c), kind));

  std::vector<Tableau> out;
  Tableau current{shape, std::vector<std::vector<unsigned>>(shape.columns())};
  std::function<void(unsigned)> rec = [&](unsigned c) {
    if (c == shape.columns()) {
      out.push_back(current);
      return;
    }
    for (const auto& filling : per_column[c]) {
      current.columns[c] = filling;
      rec(c + 1);
    }
  };
  rec(0);
  return out;
}

void TableauPolynomial::add_term(const ExponentVector& exps, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt TableauPolynomial::eval(const std::vector<BigInt>& at) const {
  BigInt total = 0;
  for (const auto& [exps, c] : terms_) {
    BigInt term = c;
    for (unsigned i = 0; i < exps.size(); ++i)
      for (unsigned k = 0; k < exps[i]; ++k) term *= at.at(i);
    total += term;
  }
  return total;
}

Rational TableauPolynomial::eval(const std::vector<Rational>& at) const {
  Rational total = 0;
  for (const auto& [exps, c] : terms_) {
    Rational term(c);
    for (unsigned i = 0; i < exps.size(); ++i)
      for (unsigned k = 0; k < exps[i]; ++k) term *= at.at(i);
    total += term;
  }
  return total;
}

std::string TableauPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& exps = it->first;
    const BigInt& c = it->second;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    bool any_var = false;
    std::ostringstream vars;
    for (unsigned i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      if (any_var) vars << "*";
      any_var = true;
      vars << "x" << (i + 1);
      if (exps[i] > 1) vars << "^" << exps[i];
    }
    if (!any_var) {
      out << mag.str();
    } else {
      if (mag != 1) out << mag.str() << "*";
      out << vars.str();
    }
  }
  return out.str();
}

namespace {

// poly *= (x_var + shift), sparse in place.
TableauPolynomial mul_linear(const TableauPolynomial& p, unsigned var,
                             const BigInt& shift) {
  TableauPolynomial out(p.n_vars());
  for (const auto& [exps, c] : p.terms()) {
    TableauPolynomial::ExponentVector bumped = exps;
    bumped[var] += 1;
    out.add_term(bumped, c);
    out.add_term(exps, c * shift);
  }
  return out;
}

}  // namespace

TableauPolynomial tableau_polynomial(const TableauShape& shape,
                                     StirlingKind kind) {
  TableauPolynomial total(shape.columns());
  const int sign = kind == StirlingKind::First ? -1 : 1;
  for (const Tableau& t : tableau_enumerate(shape, kind)) {
    TableauPolynomial term(shape.columns());
    term.add_term(TableauPolynomial::ExponentVector(shape.columns(), 0), 1);
    for (unsigned c = 0; c < shape.columns(); ++c)
      for (unsigned entry : t.columns[c])
        term = mul_linear(term, c, BigInt(sign) * entry);
    for (const auto& [exps, coeff] : term.terms()) total.add_term(exps, coeff);
  }
  return total;
}

BigInt factored_constant(const TableauShape& shape, StirlingKind kind) {
  if (shape.columns() == 0)
    throw std::invalid_argument("factored_constant: empty shape");
  // The rightmost column is forced, so its polynomial factor is common to
  // every tableau; dropping it and setting the remaining variables to zero
  // leaves the product of (-entry) / (+entry) over the other columns.
  const int sign = kind == StirlingKind::First ? -1 : 1;
  BigInt total = 0;
  for (const Tableau& t : tableau_enumerate(shape, kind)) {
    BigInt prod = 1;
    for (unsigned c = 0; c + 1 < shape.columns(); ++c)
      for (unsigned entry : t.columns[c]) prod *= BigInt(sign) * entry;
    total += prod;
  }
  return total;
}

}  // namespace iterlog
