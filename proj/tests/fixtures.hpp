#ifndef PUREBETTI_TESTS_FIXTURES_HPP
#define PUREBETTI_TESTS_FIXTURES_HPP

#include <string>
#include <vector>

#include "purebetti/oracle.hpp"
#include "purebetti/parser.hpp"

namespace purebetti::testing {

inline HomogeneousIdeal ideal(int n, const std::string& gens) { return HomogeneousIdeal(n, parse_generators(gens, n)); }

inline HomogeneousIdeal two_generator_ideal() { return ideal(2, "x1^2, x1*x2"); }
inline HomogeneousIdeal triangle_ideal() { return ideal(3, "x1*x2, x2*x3, x1*x3"); }
inline HomogeneousIdeal gorenstein_ideal() { return ideal(3, "x1*x2, x2*x3, x1*x3, x1^2 - x2^2, x1^2 - x3^2"); }

/// (x^r, y^r)^d in two variables.
inline HomogeneousIdeal power_ideal(int r, int d) {
  std::vector<HomogeneousPolynomial> gens;
  for (int a = 0; a <= d; ++a) gens.push_back(HomogeneousPolynomial::monomial({r * a, r * (d - a)}));
  return HomogeneousIdeal(2, gens);
}

/// (x1^r, ..., xp^r) in p variables.
inline HomogeneousIdeal koszul_ideal(int p, int r) {
  std::vector<HomogeneousPolynomial> gens;
  for (int k = 0; k < p; ++k) {
    std::vector<int> e(static_cast<std::size_t>(p), 0);
    e[static_cast<std::size_t>(k)] = r;
    gens.push_back(HomogeneousPolynomial::monomial(e));
  }
  return HomogeneousIdeal(p, gens);
}

}  // namespace purebetti::testing

#endif
