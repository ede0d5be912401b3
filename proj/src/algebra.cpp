#include "iterlog/algebra.hpp"

#include <sstream>

namespace iterlog {

std::string AffineExponent::str() const {
  // Renders a*r+b compactly: "r", "r-2", "-1", "1/2*r+3", ...
  std::ostringstream out;
  if (r_coeff != 0) {
    if (r_coeff == 1) {
      out << "r";
    } else if (r_coeff == -1) {
      out << "-r";
    } else {
      out << to_string(r_coeff) << "*r";
    }
    if (const_term != 0) {
      out << (const_term < 0 ? "-" : "+")
          << to_string(const_term < 0 ? Rational(-const_term) : const_term);
    }
  } else {
    out << to_string(const_term);
  }
  return out.str();
}

Monomial Monomial::variable(long long level, AffineExponent e) {
  Monomial m;
  if (!e.is_zero()) m.exps_[level] = e;
  return m;
}

AffineExponent Monomial::exponent(long long level) const {
  auto it = exps_.find(level);
  return it == exps_.end() ? AffineExponent() : it->second;
}

void Monomial::shift(long long level, const AffineExponent& delta) {
  if (delta.is_zero()) return;
  auto it = exps_.find(level);
  if (it == exps_.end()) {
    exps_[level] = delta;
    return;
  }
  it->second = it->second + delta;
  if (it->second.is_zero()) exps_.erase(it);
}

std::string Monomial::str() const {
  if (exps_.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const auto& [level, e] : exps_) {
    if (!first) out << "*";
    first = false;
    out << "l[" << level << "]";
    if (!(e.r_coeff == 0 && e.const_term == 1)) out << "^(" << e.str() << ")";
  }
  return out.str();
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (const auto& [level, e] : b.exponents()) out.shift(level, e);
  return out;
}

AlgebraElement::AlgebraElement(const Monomial& m, ParamPoly coeff) {
  if (!coeff.is_zero()) terms_[m] = std::move(coeff);
}

AlgebraElement AlgebraElement::scalar(const ParamPoly& p) {
  return AlgebraElement(Monomial(), p);
}

AlgebraElement AlgebraElement::variable(long long level, AffineExponent e) {
  return AlgebraElement(Monomial::variable(level, e));
}

ParamPoly AlgebraElement::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? ParamPoly() : it->second;
}

void AlgebraElement::add_term(const Monomial& m, const ParamPoly& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement out;
  for (const auto& [m, c] : terms_) out.terms_[m] = -c;
  return out;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_)
      out.add_term(mono_mul(ma, mb), ca * cb);
  return out;
}

std::string AlgebraElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string cs = c.str();
    bool negated = cs.size() > 1 && cs[0] == '-' && cs.find(' ') == std::string::npos &&
                   cs.find('+') == std::string::npos;
    if (first) {
      first = false;
      if (negated) {
        out << "-";
        cs = cs.substr(1);
      }
    } else {
      if (negated) {
        out << " - ";
        cs = cs.substr(1);
      } else {
        out << " + ";
      }
    }
    bool unit_coeff = (cs == "1");
    bool simple = cs.find_first_of("+- ") == std::string::npos;
    if (m.is_unit()) {
      out << (simple ? cs : "(" + cs + ")");
    } else {
      if (!unit_coeff) out << (simple ? cs : "(" + cs + ")") << "*";
      out << m.str();
    }
  }
  return out.str();
}

AlgebraElement elem_add(const AlgebraElement& a, const AlgebraElement& b) {
  return a + b;
}

AlgebraElement elem_mul(const AlgebraElement& a, const AlgebraElement& b) {
  return a * b;
}

AlgebraElement elem_scale(const AlgebraElement& a, const ParamPoly& c) {
  AlgebraElement out;
  for (const auto& [m, p] : a.terms()) out.add_term(m, p * c);
  return out;
}

namespace {

// Derivative of the single factor l[level]^e, applied in place onto a copy of
// the host monomial. Returns the coefficient factor (e promoted to a poly).
ParamPoly derive_factor(Monomial& m, long long level, const AffineExponent& e) {
  const AffineExponent minus_one = AffineExponent::constant(-1);
  const AffineExponent plus_one = AffineExponent::constant(1);
  if (level == 0) {
    m.shift(0, minus_one);
  } else if (level > 0) {
    m.shift(level, minus_one);
    for (long long i = 0; i < level; ++i) m.shift(i, minus_one);
  } else {
    // d/dx l[-n]^e = e * l[-n]^e * prod_{i=-1}^{-(n-1)} l[i]; the exponent on
    // l[-n] is unchanged in this absorbed form.
    for (long long i = -1; i > level; --i) m.shift(i, plus_one);
  }
  return e.to_poly();
}

}  // namespace

AlgebraElement derive(const AlgebraElement& a) {
  AlgebraElement out;
  for (const auto& [mono, coeff] : a.terms()) {
    for (const auto& [level, e] : mono.exponents()) {
      Monomial m = mono;
      ParamPoly factor = derive_factor(m, level, e);
      out.add_term(m, coeff * factor);
    }
  }
  return out;
}

AlgebraElement derive_power(const AlgebraElement& a, unsigned m) {
  AlgebraElement out = a;
  for (unsigned k = 0; k < m; ++k) out = derive(out);
  return out;
}

AlgebraElement specialize(const AlgebraElement& a, const Rational& r_value) {
  AlgebraElement out;
  for (const auto& [mono, coeff] : a.terms()) {
    Monomial m;
    for (const auto& [level, e] : mono.exponents())
      m.shift(level, AffineExponent::constant(e.r_coeff * r_value + e.const_term));
    out.add_term(m, ParamPoly(coeff.eval(r_value)));
  }
  return out;
}

}  // namespace iterlog
