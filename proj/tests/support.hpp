#ifndef PUREBETTI_TESTS_SUPPORT_HPP
#define PUREBETTI_TESTS_SUPPORT_HPP

#include <initializer_list>
#include <random>
#include <tuple>
#include <vector>

#include "purebetti/decomposition.hpp"
#include "purebetti/diagram.hpp"

namespace purebetti::testing {

inline Rational q(long long num, long long den = 1) { return Rational(mpz_class(std::to_string(num)), mpz_class(std::to_string(den))); }

inline BettiTable table(std::initializer_list<std::tuple<int, int, Rational>> entries) {
  BettiTable t;
  for (const auto& [i, j, v] : entries) t.set(i, j, v);
  return t;
}

/// Pure table with the given Betti numbers at the degrees of d.
inline BettiTable pure_table(const DegreeSequence& d, const std::vector<Rational>& betti) {
  BettiTable t;
  for (std::size_t i = 0; i < d.size(); ++i) t.set(static_cast<int>(i), d[i], betti.at(i));
  return t;
}

/// (1; 2, 1) at (0, 2, 3): S/(x1^2, x1 x2)
inline BettiTable non_cm_example() { return table({{0, 0, 1}, {1, 2, 2}, {2, 3, 1}}); }
/// (1; 3, 2) at (0, 2, 3): the triangle ideal
inline BettiTable triangle_table() { return table({{0, 0, 1}, {1, 2, 3}, {2, 3, 2}}); }

inline std::vector<int> strand(const DegreeSequence& d) { return {d.degrees().begin(), d.degrees().end()}; }

class Generator {
 public:
  explicit Generator(unsigned seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Rational positive_rational(int max_num = 9, int max_den = 4) {
    return q(uniform(1, max_num), uniform(1, max_den));
  }

  DegreeSequence degree_sequence(int min_p, int max_p, int lo = -3, int hi = 4) {
    const int p = uniform(min_p, max_p);
    std::vector<int> d{uniform(lo, hi)};
    for (int i = 0; i < p; ++i) d.push_back(d.back() + uniform(1, 4));
    return DegreeSequence(d);
  }

  // Chain d^1 <= d^2 <= ... in the termwise order where a shorter sequence
  // sits above its truncations' parents: each step truncates or raises
  // entries while keeping the sequence strictly increasing.
  std::vector<DegreeSequence> chain(int max_len, int min_p = 0, int max_p = 4) {
    std::vector<DegreeSequence> out{degree_sequence(min_p, max_p)};
    const int len = uniform(1, max_len);
    for (int step = 1; step < len; ++step) {
      std::vector<int> d = strand(out.back());
      if (d.size() > 1 && uniform(0, 2) == 0) {
        d.pop_back();
      } else {
        // raise one entry, pushing later entries up to stay strictly increasing
        const auto i = static_cast<std::size_t>(uniform(0, static_cast<int>(d.size()) - 1));
        d[i] += uniform(1, 3);
        for (std::size_t k = i + 1; k < d.size(); ++k) d[k] = std::max(d[k], d[k - 1] + 1);
      }
      if (static_cast<int>(d.size()) - 1 < min_p) break;
      out.emplace_back(d);
    }
    return out;
  }

  std::vector<DecompositionTerm> chain_terms(int max_len, int min_p = 0, int max_p = 4) {
    std::vector<DecompositionTerm> terms;
    for (const auto& d : chain(max_len, min_p, max_p)) terms.push_back({positive_rational(), d});
    return terms;
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace purebetti::testing

#endif
