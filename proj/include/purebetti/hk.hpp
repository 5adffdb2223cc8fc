#ifndef PUREBETTI_HK_HPP
#define PUREBETTI_HK_HPP

#include <optional>
#include <vector>

#include "purebetti/diagram.hpp"

namespace purebetti {

/// residual_l = sum (-1)^i j^l beta_{i,j} for l = 0..l_max-1, with 0^0 = 1.
std::vector<Rational> hk_residuals(const BettiTable& t, int l_max);

struct HKReport {
  std::vector<Rational> residuals;  // l = 0..pdim-1
  bool satisfied = false;
  int pdim = 0;
  int codim = 0;
  bool cm_equal_defect = false;  // codim == pdim
};

/// Evaluates the Herzog-Kuehl equations up to l = pdim - 1 alongside the
/// codimension read off the alternating polynomial.
HKReport satisfies_hk(const BettiTable& t);

/// beta_i = beta0 * prod_{j != 0,i} |(d_j - d_0)/(d_j - d_i)|, i = 0..p.
std::vector<Rational> hk_betti_solution(const DegreeSequence& d, const Rational& beta0);

// Equivalent characterisations of a pure Cohen-Macaulay table, each
// evaluated on its own.
struct Thm2Report {
  DegreeSequence type;
  int pdim = 0;
  int codim = 0;
  bool codim_equals_pdim = false;
  bool satisfies_hk = false;
  bool matches_pi = false;         // t == beta_0 * pi(d)
  bool matches_pi_prime = false;   // t == beta_p * pi'(d)
  bool verdict = false;
  HKReport hk{};
};

/// Throws NotPureTable if t is not pure, InternalConsistency if the four
/// conditions disagree.
Thm2Report check_thm2(const BettiTable& t);

/// e(M) = e(R) * beta0 / p! * prod_{j=1..p} (d_j - d_0)
Rational multiplicity_pure(const Rational& ring_multiplicity, const DegreeSequence& d,
                           const Rational& beta0);

struct CyclicClassification {
  DegreeSequence type;
  Rational pi_prime_00{};
  bool gorenstein_forced = false;  // pi'(d)_{0,0} >= 1
  std::vector<int> diffs{};        // e_i = d_i - d_{i-1}
  bool ci_forced = false;          // diffs non-decreasing
  bool diffs_equal = false;
  // false when the degree conditions rule out any pure cyclic quotient of
  // this type: pi'_{0,0} > 1, or non-decreasing but unequal diffs
  bool cyclic_realizable = true;
  std::optional<BettiTable> predicted_table{};  // Koszul table when ci_forced and realizable
};

/// Degree-sequence conditions forcing a pure cyclic quotient of a polynomial
/// ring to be Gorenstein or a complete intersection. Requires d_0 = 0
/// (NonzeroFirstDegree otherwise).
CyclicClassification classify_pure_cyclic(const DegreeSequence& d);

struct CmSufficiency {
  Rational pi_prime_00;
  bool applies = false;  // pi'_{0,0} >= 1 and beta0 <= betap
  // populated when applies:
  bool consistent = false;  // beta0 == betap and pi'_{0,0} == 1
  std::optional<BettiTable> forced_table;  // betap * pi'(d)
};

/// Sufficient condition for a pure module over a polynomial ring to be
/// Cohen-Macaulay. Throws NonPositiveScalar on non-positive Betti values.
CmSufficiency cm_sufficiency(const DegreeSequence& d, const Rational& beta0, const Rational& betap);

/// Table of R/(g1, g2)^d for a regular sequence of forms of degree r:
/// {(0,0):1, (1,rd):d+1, (2,rd+r):d}.
BettiTable power_ci_table(int r, int d);

/// Koszul complex on p forms of degree r: (i, i*r) -> binom(p, i).
BettiTable koszul_table(int p, int r);

}  // namespace purebetti

#endif
