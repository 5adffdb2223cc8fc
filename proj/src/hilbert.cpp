#include "purebetti/hilbert.hpp"

#include <algorithm>
#include <string>

#include "purebetti/error.hpp"

namespace purebetti {

HilbertSeries::HilbertSeries(LaurentPolynomial numerator, int pole_order)
    : numerator_(std::move(numerator)), pole_order_(pole_order) {
  if (pole_order_ < 0) fail(Errc::NegativeDimension, "pole order " + std::to_string(pole_order_) + " < 0");
  if (numerator_.is_zero()) {
    pole_order_ = 0;
    return;
  }
  while (pole_order_ > 0) {
    auto quotient = numerator_.divide_by_one_minus_z();
    if (!quotient) break;
    numerator_ = std::move(*quotient);
    --pole_order_;
  }
}

Rational HilbertSeries::coefficient(int k) const {
  Rational sum;
  for (const auto& [e, c] : numerator_.terms()) {
    const long long offset = static_cast<long long>(k) - e;
    if (offset < 0) continue;
    if (pole_order_ == 0) {
      if (offset == 0) sum += c;
      continue;
    }
    // [z^m] (1 - z)^{-r} = binom(m + r - 1, r - 1)
    sum += c * Rational(binomial(offset + pole_order_ - 1, pole_order_ - 1));
  }
  return sum;
}

std::vector<Rational> HilbertSeries::coefficients(int lo, int hi) const {
  std::vector<Rational> out;
  for (int k = lo; k <= hi; ++k) out.push_back(coefficient(k));
  return out;
}

std::string HilbertSeries::to_string() const {
  std::string s = "(" + numerator_.to_string() + ")";
  if (pole_order_ > 0) s += " / (1 - z)^" + std::to_string(pole_order_);
  return s;
}

HilbertSeries operator*(const HilbertSeries& s, const LaurentPolynomial& p) {
  return HilbertSeries(s.numerator_ * p, s.pole_order_);
}

LaurentPolynomial numerator_at_pole_order(const HilbertSeries& s, int target) {
  if (target < s.pole_order())
    fail(Errc::NegativeDimension, "cannot lower pole order below " + std::to_string(s.pole_order()));
  return s.numerator() * LaurentPolynomial::one_minus_z_pow(static_cast<unsigned>(target - s.pole_order()));
}

HilbertSeries polynomial_ring_hilbert(int n) {
  if (n < 0) fail(Errc::NegativeDimension, "polynomial ring in " + std::to_string(n) + " variables");
  return HilbertSeries(LaurentPolynomial::one(), n);
}

LaurentPolynomial alternating_poly(const BettiTable& t) {
  LaurentPolynomial h;
  for (const auto& [key, value] : t.entries())
    h.add_term(key.second, key.first % 2 ? -value : value);
  return h;
}

int vanishing_order_at_one(const LaurentPolynomial& h) {
  if (h.is_zero()) fail(Errc::ZeroPolynomial, "vanishing order of the zero polynomial");
  int order = 0;
  LaurentPolynomial current = h;
  while (auto quotient = current.divide_by_one_minus_z()) {
    current = std::move(*quotient);
    ++order;
  }
  return order;
}

int codim_from_table(const BettiTable& t) { return vanishing_order_at_one(alternating_poly(t)); }

HilbertSeries module_hilbert_from_betti(const HilbertSeries& ring, const BettiTable& t) {
  return ring * alternating_poly(t);
}

PureBetti pure_betti_from_hilbert(const HilbertSeries& ring, const HilbertSeries& module, int max_steps) {
  if (module.is_zero()) fail(Errc::NotPure, "zero Hilbert series");
  if (ring.is_zero()) fail(Errc::NotPure, "zero ring series");
  // Work over a common denominator (1 - z)^r; the residual series is then
  // N(z) / (1 - z)^r and its order is the lowest exponent of N.
  const int r = std::max(ring.pole_order(), module.pole_order());
  const LaurentPolynomial ring_num = numerator_at_pole_order(ring, r);
  const LaurentPolynomial module_num = numerator_at_pole_order(module, r);

  std::vector<int> degrees;
  std::vector<Rational> betti;
  LaurentPolynomial partial;  // sum_{k<i} (-1)^k beta_k z^{d_k}
  for (int i = 0;; ++i) {
    const LaurentPolynomial residual = module_num - ring_num * partial;
    if (residual.is_zero()) break;
    if (i >= max_steps)
      fail(Errc::NoTermination,
           "residual series still nonzero after " + std::to_string(max_steps) + " steps");
    const int d = residual.min_exponent();
    // H_K = (-1)^i (H_M - H_R * partial); its leading coefficient is beta_i
    const Rational leading = residual.coefficient(d);
    const Rational beta = i % 2 ? -leading : leading;
    if (beta.sign() <= 0)
      fail(Errc::NotPure, "syzygy " + std::to_string(i) + " has leading coefficient " +
                              beta.to_string() + " at degree " + std::to_string(d));
    if (!degrees.empty() && d <= degrees.back())
      fail(Errc::NotPure, "degree " + std::to_string(d) + " of syzygy " + std::to_string(i) +
                              " does not exceed " + std::to_string(degrees.back()));
    degrees.push_back(d);
    betti.push_back(beta);
    partial.add_term(d, i % 2 ? -beta : beta);
  }
  return {DegreeSequence(std::move(degrees)), std::move(betti)};
}

Rational multiplicity(const HilbertSeries& h) { return h.numerator().evaluate(Rational(1)); }

Rational multiplicity_from_table(const Rational& ring_multiplicity, const BettiTable& t) {
  const int c = codim_from_table(t);
  Rational sum;
  for (const auto& [key, value] : t.entries()) {
    const auto& [i, j] = key;
    Rational term = int_pow(j, static_cast<unsigned>(c)) * value;
    sum += (i + c) % 2 ? -term : term;
  }
  return ring_multiplicity * sum / Rational(factorial(static_cast<unsigned>(c)));
}

ModuleFacts module_facts(const HilbertSeries& ring, int ring_depth, const BettiTable& t) {
  ModuleFacts facts;
  facts.ambient_dim = ring.pole_order();
  facts.codim = codim_from_table(t);
  facts.dim = facts.ambient_dim - facts.codim;
  facts.pdim = t.pdim();
  facts.depth = ring_depth - facts.pdim;
  facts.cmd = facts.dim - facts.depth;
  facts.multiplicity = multiplicity_from_table(multiplicity(ring), t);
  if (ring_depth > facts.ambient_dim)
    fail(Errc::InconsistentTable, "ring depth exceeds ring dimension");
  if (facts.dim < 0 || facts.depth < 0 || facts.cmd < 0)
    fail(Errc::InconsistentTable, "table gives dim " + std::to_string(facts.dim) + ", depth " +
                                      std::to_string(facts.depth) + " over this ring");
  return facts;
}

}  // namespace purebetti
