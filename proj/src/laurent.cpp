#include "purebetti/laurent.hpp"

#include <sstream>

namespace purebetti {

LaurentPolynomial::LaurentPolynomial(std::initializer_list<std::pair<const int, Rational>> terms) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

LaurentPolynomial LaurentPolynomial::monomial(int exponent, const Rational& coefficient) {
  LaurentPolynomial p;
  p.add_term(exponent, coefficient);
  return p;
}

LaurentPolynomial LaurentPolynomial::one_minus_z_pow(unsigned n) {
  LaurentPolynomial p;
  for (unsigned k = 0; k <= n; ++k) {
    Rational c(binomial(n, k));
    p.add_term(static_cast<int>(k), k % 2 ? -c : c);
  }
  return p;
}

Rational LaurentPolynomial::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational() : it->second;
}

void LaurentPolynomial::add_term(int exponent, const Rational& coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (inserted) return;
  it->second += coefficient;
  if (it->second.is_zero()) terms_.erase(it);
}

Rational LaurentPolynomial::evaluate(const Rational& z) const {
  Rational sum;
  for (const auto& [e, c] : terms_) {
    Rational power = e >= 0 ? z.pow(static_cast<unsigned>(e))
                            : Rational(1) / z.pow(static_cast<unsigned>(-e));
    sum += c * power;
  }
  return sum;
}

LaurentPolynomial LaurentPolynomial::derivative() const {
  LaurentPolynomial out;
  for (const auto& [e, c] : terms_) out.add_term(e - 1, c * Rational(e));
  return out;
}

std::optional<LaurentPolynomial> LaurentPolynomial::divide_by_one_minus_z() const {
  if (is_zero()) return LaurentPolynomial();
  // h = (1 - z) q  =>  q_k = sum_{m <= k} h_m, for k in [lo, hi - 1]
  LaurentPolynomial quotient;
  Rational running;
  const int hi = max_exponent();
  for (int k = min_exponent(); k < hi; ++k) {
    running += coefficient(k);
    quotient.add_term(k, running);
  }
  running += coefficient(hi);
  if (!running.is_zero()) return std::nullopt;
  return quotient;
}

std::string LaurentPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational magnitude = c.abs();
    if (first)
      os << (c.sign() < 0 ? "-" : "");
    else
      os << (c.sign() < 0 ? " - " : " + ");
    first = false;
    const bool unit = magnitude == Rational(1);
    if (e == 0) {
      os << magnitude;
      continue;
    }
    if (!unit) os << magnitude << "*";
    os << "z";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

}  // namespace purebetti
