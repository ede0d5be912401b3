#ifndef ITERLOG_ALGEBRA_HPP
#define ITERLOG_ALGEBRA_HPP

#include <map>
#include <string>
#include <tuple>

#include "iterlog/param_poly.hpp"
#include "iterlog/rational.hpp"

namespace iterlog {

/// Exponent of a formal variable, affine in the symbolic parameter:
/// r_coeff * r + const_term.
struct AffineExponent {
  Rational r_coeff{0};
  Rational const_term{0};

  AffineExponent() = default;
  AffineExponent(Rational rc, Rational ct)
      : r_coeff(std::move(rc)), const_term(std::move(ct)) {}

  static AffineExponent symbolic_r() { return {1, 0}; }
  static AffineExponent constant(const Rational& c) { return {0, c}; }

  bool is_zero() const { return r_coeff == 0 && const_term == 0; }

  AffineExponent operator+(const AffineExponent& o) const {
    return {r_coeff + o.r_coeff, const_term + o.const_term};
  }
  AffineExponent operator-(const AffineExponent& o) const {
    return {r_coeff - o.r_coeff, const_term - o.const_term};
  }
  bool operator==(const AffineExponent& o) const {
    return r_coeff == o.r_coeff && const_term == o.const_term;
  }
  bool operator!=(const AffineExponent& o) const { return !(*this == o); }
  bool operator<(const AffineExponent& o) const {
    return std::tie(r_coeff, const_term) < std::tie(o.r_coeff, o.const_term);
  }

  /// Promotes the exponent to the polynomial r_coeff*r + const_term.
  ParamPoly to_poly() const { return ParamPoly({const_term, r_coeff}); }

  std::string str() const;
};

/// Sparse monomial prod_i l[i]^(e_i) over levels i in Z. Zero exponents are
/// never stored; the empty map is the unit monomial.
class Monomial {
 public:
  using Map = std::map<long long, AffineExponent>;

  Monomial() = default;

  /// l[level]^e, the unit monomial when e is zero.
  static Monomial variable(long long level,
                           AffineExponent e = AffineExponent::constant(1));

  const Map& exponents() const { return exps_; }
  bool is_unit() const { return exps_.empty(); }
  AffineExponent exponent(long long level) const;

  /// Adds delta to the exponent at the given level, dropping it if it
  /// cancels to zero.
  void shift(long long level, const AffineExponent& delta);

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }
  bool operator<(const Monomial& o) const { return exps_ < o.exps_; }

  std::string str() const;

 private:
  Map exps_;
};

Monomial mono_mul(const Monomial& a, const Monomial& b);

/// Finite ParamPoly-linear combination of monomials; the algebra of formal
/// iterated logarithmic and exponential variables.
class AlgebraElement {
 public:
  using Terms = std::map<Monomial, ParamPoly>;

  AlgebraElement() = default;
  AlgebraElement(const Monomial& m, ParamPoly coeff = ParamPoly(Rational(1)));

  static AlgebraElement scalar(const ParamPoly& p);
  static AlgebraElement variable(long long level,
                                 AffineExponent e = AffineExponent::constant(1));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  ParamPoly coeff(const Monomial& m) const;

  void add_term(const Monomial& m, const ParamPoly& coeff);

  AlgebraElement operator-() const;
  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) {
    return a += b;
  }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) {
    return a -= b;
  }
  friend AlgebraElement operator*(const AlgebraElement& a,
                                  const AlgebraElement& b);

  bool operator==(const AlgebraElement& o) const { return terms_ == o.terms_; }
  bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

  std::string str() const;

 private:
  Terms terms_;
};

AlgebraElement elem_add(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement elem_mul(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement elem_scale(const AlgebraElement& a, const ParamPoly& c);

/// The derivation d/dx of the algebra, extended by Leibniz over monomials.
/// Per-level rules:
///   level 0:   l0^e      -> e * l0^(e-1)
///   level n>0: ln^e      -> e * ln^(e-1) * prod_{i=0..n-1} l_i^(-1)
///   level -n:  l_{-n}^e  -> e * l_{-n}^e * prod_{i=-1..-(n-1)} l_i
AlgebraElement derive(const AlgebraElement& a);

/// m-fold application of derive.
AlgebraElement derive_power(const AlgebraElement& a, unsigned m);

/// Substitutes a rational value for the parameter r in every coefficient and
/// every monomial exponent.
AlgebraElement specialize(const AlgebraElement& a, const Rational& r_value);

}  // namespace iterlog

#endif
