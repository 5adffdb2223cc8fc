#ifndef PUREBETTI_DECOMPOSITION_HPP
#define PUREBETTI_DECOMPOSITION_HPP

#include <optional>
#include <string>
#include <vector>

#include "purebetti/diagram.hpp"

namespace purebetti {

struct DecompositionTerm {
  Rational coefficient;
  DegreeSequence type;

  friend bool operator==(const DecompositionTerm&, const DecompositionTerm&) = default;
};

/*
 * sum c_d * pi(d) + residual == input. A complete decomposition has an
 * empty residual; otherwise `failure` explains where the greedy stopped and
 * `terms` holds what had been extracted up to that point.
 */
struct Decomposition {
  std::vector<DecompositionTerm> terms;
  BettiTable residual;
  std::optional<std::string> failure;

  bool complete() const { return !failure && residual.empty(); }
  /// Lengths p of the extracted degree sequences, in order.
  std::vector<int> lengths() const;
};

/*
 * Greedy Boij-Soederberg decomposition. Each round takes the strand of
 * minimal degrees over consecutive nonempty columns 0, 1, ..., subtracts the
 * largest multiple of pi(strand) that keeps the table non-negative, and
 * repeats. Every round clears at least one entry, so the loop terminates.
 */
Decomposition bs_decompose(const BettiTable& t);

/// Rescales coefficients to the pi' normalisation: c' = c * pi(d)_{p,d_p}.
std::vector<DecompositionTerm> to_pi_prime_coeffs(const Decomposition& dec);

/// sum c * pi(d), or sum c * pi'(d) when `prime` is set.
BettiTable resum(const std::vector<DecompositionTerm>& terms, bool prime = false);

}  // namespace purebetti

#endif
