#include "iterlog/param_poly.hpp"

#include <cctype>
#include <sstream>

namespace iterlog {

std::optional<Rational> parse_rational(const std::string& text) {
  if (text.empty()) return std::nullopt;
  auto parse_int = [](const std::string& s) -> std::optional<BigInt> {
    if (s.empty()) return std::nullopt;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return std::nullopt;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
    return BigInt(s[0] == '+' ? s.substr(1) : s);
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    auto n = parse_int(text);
    if (!n) return std::nullopt;
    return Rational(*n);
  }
  auto num = parse_int(text.substr(0, slash));
  auto den = parse_int(text.substr(slash + 1));
  if (!num || !den || *den == 0) return std::nullopt;
  // divide instead of the two-argument constructor: the backend rejects a
  // negative denominator there
  return Rational(*num) / Rational(*den);
}

ParamPoly::ParamPoly(const Rational& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

ParamPoly::ParamPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  strip();
}

ParamPoly::ParamPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) {
  strip();
}

ParamPoly ParamPoly::variable() { return ParamPoly({Rational(0), Rational(1)}); }

bool ParamPoly::is_one() const {
  return coeffs_.size() == 1 && coeffs_[0] == 1;
}

void ParamPoly::strip() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k)
    coeffs_[k] += other.coeffs_[k];
  strip();
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k)
    coeffs_[k] -= other.coeffs_[k];
  strip();
  return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return ParamPoly(std::move(out));
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& other) {
  *this = *this * other;
  return *this;
}

bool ParamPoly::operator<(const ParamPoly& other) const {
  return coeffs_ < other.coeffs_;
}

Rational ParamPoly::eval(const Rational& at) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * at + *it;
  return acc;
}

std::string ParamPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    bool unit_mag = (mag == 1) && k > 0;
    if (!unit_mag) out << to_string(mag);
    if (k > 0) {
      if (!unit_mag) out << "*";
      out << var;
      if (k > 1) out << "^" << k;
    }
  }
  return out.str();
}

ParamPoly poly_add(const ParamPoly& p, const ParamPoly& q) { return p + q; }
ParamPoly poly_mul(const ParamPoly& p, const ParamPoly& q) { return p * q; }

ParamPoly poly_scale(const ParamPoly& p, const Rational& c) {
  return p * ParamPoly(c);
}

Rational poly_eval(const ParamPoly& p, const Rational& at) { return p.eval(at); }

ParamPoly binomial_poly(unsigned m) {
  ParamPoly out{Rational(1)};
  for (unsigned k = 0; k < m; ++k)
    out *= ParamPoly({Rational(-static_cast<long long>(k)), Rational(1)});
  return out * ParamPoly(Rational(1, factorial(m)));
}

ParamPoly param_power(unsigned k) {
  std::vector<Rational> c(k + 1, Rational(0));
  c[k] = 1;
  return ParamPoly(std::move(c));
}

}  // namespace iterlog
