#ifndef PUREBETTI_LAURENT_HPP
#define PUREBETTI_LAURENT_HPP

#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "purebetti/rational.hpp"

namespace purebetti {

/// Finite sum of c_k z^k with k in Z. Zero coefficients are never stored.
class LaurentPolynomial {
 public:
  using Map = std::map<int, Rational>;

  LaurentPolynomial() = default;
  LaurentPolynomial(std::initializer_list<std::pair<const int, Rational>> terms);

  static LaurentPolynomial monomial(int exponent, const Rational& coefficient = Rational(1));
  static LaurentPolynomial one() { return monomial(0); }
  /// (1 - z)^n
  static LaurentPolynomial one_minus_z_pow(unsigned n);

  Rational coefficient(int exponent) const;
  void add_term(int exponent, const Rational& coefficient);

  bool is_zero() const noexcept { return terms_.empty(); }
  const Map& terms() const noexcept { return terms_; }
  int min_exponent() const { return terms_.begin()->first; }
  int max_exponent() const { return terms_.rbegin()->first; }

  Rational evaluate(const Rational& z) const;
  LaurentPolynomial derivative() const;

  /// Exact quotient by (1 - z), or nullopt when h(1) != 0.
  std::optional<LaurentPolynomial> divide_by_one_minus_z() const;

  std::string to_string() const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  LaurentPolynomial& operator*=(const Rational& c);

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(LaurentPolynomial a, const Rational& c) { return a *= c; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

 private:
  Map terms_;
};

}  // namespace purebetti

#endif
