#ifndef PUREBETTI_HILBERT_HPP
#define PUREBETTI_HILBERT_HPP

#include <vector>

#include "purebetti/diagram.hpp"
#include "purebetti/laurent.hpp"

namespace purebetti {

/*
 * Rational generating function f(z) / (1 - z)^r kept in canonical form:
 * while r > 0 and f(1) = 0 a factor (1 - z) is cancelled. Once r reaches 0
 * the series is a Laurent polynomial and f is left as is. The zero series
 * has r = 0.
 */
class HilbertSeries {
 public:
  HilbertSeries() = default;
  /// Throws NegativeDimension when pole_order < 0.
  HilbertSeries(LaurentPolynomial numerator, int pole_order);

  const LaurentPolynomial& numerator() const noexcept { return numerator_; }
  int pole_order() const noexcept { return pole_order_; }
  bool is_zero() const noexcept { return numerator_.is_zero(); }

  /// Coefficient of z^k in the power series expansion.
  Rational coefficient(int k) const;
  /// Coefficients for k = lo..hi inclusive.
  std::vector<Rational> coefficients(int lo, int hi) const;

  std::string to_string() const;

  friend HilbertSeries operator*(const HilbertSeries& s, const LaurentPolynomial& p);
  friend bool operator==(const HilbertSeries&, const HilbertSeries&) = default;

 private:
  LaurentPolynomial numerator_;
  int pole_order_ = 0;
};

/// Numerator and pole order of a series lifted to the given pole order
/// (f * (1 - z)^(target - r)); requires target >= pole_order().
LaurentPolynomial numerator_at_pole_order(const HilbertSeries& s, int target);

/// 1 / (1 - z)^n, the series of a polynomial ring in n variables.
HilbertSeries polynomial_ring_hilbert(int n);

/// h(z) = sum (-1)^i beta_{i,j} z^j
LaurentPolynomial alternating_poly(const BettiTable& t);

/// Largest n with (1 - z)^n | h. Throws ZeroPolynomial for h = 0.
int vanishing_order_at_one(const LaurentPolynomial& h);

/// Codimension of a module whose minimal resolution has table t.
int codim_from_table(const BettiTable& t);

/// H_R(z) * h(z) in canonical form.
HilbertSeries module_hilbert_from_betti(const HilbertSeries& ring, const BettiTable& t);

struct PureBetti {
  DegreeSequence type;
  std::vector<Rational> betti;
};

inline constexpr int kDefaultMaxSteps = 64;

/*
 * Recovers the type and Betti numbers of a pure module from its Hilbert
 * series by peeling off one syzygy per step. At step i the residual
 * H_K = (-1)^i (H_M - H_R * sum_{k<i} (-1)^k beta_k z^{d_k}) is the series
 * of the i-th syzygy module; d_i is its order and beta_i its leading
 * coefficient. Stops when the residual vanishes.
 *
 * Throws NotPure when a leading coefficient is not positive or the degrees
 * fail to increase, NoTermination after max_steps nonzero residuals.
 */
PureBetti pure_betti_from_hilbert(const HilbertSeries& ring, const HilbertSeries& module,
                                  int max_steps = kDefaultMaxSteps);

/// e = f(1)
Rational multiplicity(const HilbertSeries& h);

/// e(M) = e(R)/c! * sum (-1)^(i+c) j^c beta_{i,j}, c = codim_from_table(t).
Rational multiplicity_from_table(const Rational& ring_multiplicity, const BettiTable& t);

struct ModuleFacts {
  int ambient_dim = 0;
  int codim = 0;
  int dim = 0;
  int pdim = 0;
  int depth = 0;
  int cmd = 0;
  Rational multiplicity;
};

/// Dimension data of a module with table t over a ring with series `ring`
/// and the given depth; depth comes from Auslander-Buchsbaum. Throws
/// InconsistentTable if the numbers cannot belong to a module.
ModuleFacts module_facts(const HilbertSeries& ring, int ring_depth, const BettiTable& t);

}  // namespace purebetti

#endif
