#ifndef PUREBETTI_ORACLE_HPP
#define PUREBETTI_ORACLE_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "purebetti/diagram.hpp"
#include "purebetti/laurent.hpp"

namespace purebetti {

/// Exponent vector over a fixed number of variables.
struct Monomial {
  std::vector<int> exponents;

  int degree() const noexcept;
  std::size_t variables() const noexcept { return exponents.size(); }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// All monomials of degree `degree` in n variables, lex-descending
/// (x1^degree first).
std::vector<Monomial> monomials_of_degree(int n, int degree);

/// Nonzero polynomial whose terms all share one total degree.
class HomogeneousPolynomial {
 public:
  using Terms = std::map<Monomial, Rational>;

  /// Throws ZeroPolynomial, VariableCountMismatch or NotHomogeneous.
  HomogeneousPolynomial(int n, const Terms& terms);

  static HomogeneousPolynomial monomial(std::vector<int> exponents,
                                        const Rational& coefficient = Rational(1));

  int variables() const noexcept { return n_; }
  int degree() const noexcept { return degree_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_monomial() const noexcept { return terms_.size() == 1; }

  std::string to_string() const;

  friend bool operator==(const HomogeneousPolynomial&, const HomogeneousPolynomial&) = default;

 private:
  int n_ = 0;
  int degree_ = 0;
  Terms terms_;
};

class HomogeneousIdeal {
 public:
  /// Throws VariableCountMismatch when a generator lives in another ring.
  HomogeneousIdeal(int n, std::vector<HomogeneousPolynomial> generators);

  int variables() const noexcept { return n_; }
  const std::vector<HomogeneousPolynomial>& generators() const noexcept { return generators_; }
  bool is_monomial() const noexcept;
  int max_generator_degree() const noexcept;
  int generator_degree_sum() const noexcept;

 private:
  int n_;
  std::vector<HomogeneousPolynomial> generators_;
};

/// dim_Q I_j: rank of {m * f : deg(m f) = j} over the monomial basis of S_j.
std::int64_t ideal_degree_dim(const HomogeneousIdeal& ideal, int j);

/// dim (S/I)_j for j = 0..j_max.
std::vector<std::int64_t> quotient_hilbert_values(const HomogeneousIdeal& ideal, int j_max);

/// K-polynomial of S/I for a monomial ideal by inclusion-exclusion over lcms
/// of generator subsets. Throws NotMonomial or TooManyGenerators.
LaurentPolynomial monomial_hilbert_numerator(const HomogeneousIdeal& ideal);

inline constexpr std::size_t kMaxInclusionExclusionGenerators = 24;

/// Degree of the lcm of all generators; no beta_{i,j} is nonzero beyond it.
/// Throws NotMonomial.
int certified_degree_bound(const HomogeneousIdeal& ideal);

struct KoszulOptions {
  bool parallel = true;
};

/*
 * Graded Betti numbers of S/I computed as the homology of the Koszul complex
 * on x1..xn tensored with S/I, degree by degree up to j_max, over Q.
 *
 * The result is certified complete when I is monomial and j_max reaches the
 * lcm bound, or when (S/I)_q = 0 for some q with q + n - 1 <= j_max. Without
 * a certificate a nonzero beta in degree j_max throws DegreeBoundTooSmall, as
 * does j_max below the largest generator degree.
 */
BettiTable koszul_betti(const HomogeneousIdeal& ideal, int j_max, KoszulOptions options = {});

}  // namespace purebetti

#endif
