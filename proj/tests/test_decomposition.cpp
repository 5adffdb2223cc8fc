#include <doctest.h>

#include "purebetti/decomposition.hpp"
#include "purebetti/error.hpp"
#include "support.hpp"

using namespace purebetti;
using namespace purebetti::testing;

namespace {

// d <= e in the Boij-Soederberg order: e no longer than d and termwise >=.
bool precedes(const DegreeSequence& d, const DegreeSequence& e) {
  if (e.size() > d.size()) return false;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] < d[i]) return false;
  return true;
}

}  // namespace

TEST_CASE("decompose a scaled pure diagram") {
  const Decomposition dec = bs_decompose(triangle_table());
  CHECK(dec.complete());
  CHECK(dec.terms == std::vector<DecompositionTerm>{{1, {0, 2, 3}}});
}

TEST_CASE("decompose the non-CM example") {
  const Decomposition dec = bs_decompose(non_cm_example());
  REQUIRE(dec.complete());
  CHECK(dec.terms == std::vector<DecompositionTerm>{{q(1, 2), {0, 2, 3}}, {q(1, 2), {0, 2}}});
  CHECK(resum(dec.terms) == non_cm_example());
  CHECK(dec.lengths() == std::vector<int>{2, 1});
}

TEST_CASE("decompose a Koszul table") {
  const Decomposition dec = bs_decompose(table({{0, 0, 1}, {1, 1, 3}, {2, 2, 3}, {3, 3, 1}}));
  CHECK(dec.complete());
  CHECK(dec.terms == std::vector<DecompositionTerm>{{1, {0, 1, 2, 3}}});
}

TEST_CASE("to_pi_prime_coeffs") {
  Decomposition one;
  one.terms = {{1, {0, 2, 3}}};
  CHECK(to_pi_prime_coeffs(one) == std::vector<DecompositionTerm>{{2, {0, 2, 3}}});

  const Decomposition two = bs_decompose(non_cm_example());
  const auto primed = to_pi_prime_coeffs(two);
  CHECK(primed == std::vector<DecompositionTerm>{{1, {0, 2, 3}}, {q(1, 2), {0, 2}}});
  CHECK(resum(primed, true) == non_cm_example());

  Decomposition free;
  free.terms = {{1, {0}}};
  CHECK(to_pi_prime_coeffs(free) == free.terms);
}

TEST_CASE("failures are reported with the partial result") {
  // column 0 empty
  const Decomposition a = bs_decompose(table({{1, 2, 1}}));
  CHECK_FALSE(a.complete());
  CHECK(a.failure);
  CHECK(a.terms.empty());

  // minimal strand not increasing: (0,3) then (1,2)
  const Decomposition b = bs_decompose(table({{0, 3, 1}, {1, 2, 1}}));
  CHECK_FALSE(b.complete());
  CHECK(b.residual == table({{0, 3, 1}, {1, 2, 1}}));

  // first strand succeeds, then the leftover has an empty column 0
  const Decomposition c = bs_decompose(table({{0, 0, 1}, {1, 1, 1}, {1, 5, 1}}));
  CHECK_FALSE(c.complete());
  CHECK(c.terms == std::vector<DecompositionTerm>{{1, {0, 1}}});
  CHECK(c.residual == table({{1, 5, 1}}));
  CHECK(resum(c.terms) + c.residual == table({{0, 0, 1}, {1, 1, 1}, {1, 5, 1}}));
}

TEST_CASE("chain-built tables decompose back to their terms") {
  Generator gen(4242);
  for (int trial = 0; trial < 300; ++trial) {
    const auto terms = gen.chain_terms(5);
    const BettiTable t = resum(terms);
    const Decomposition dec = bs_decompose(t);
    REQUIRE(dec.complete());
    CHECK(dec.terms == terms);
    CHECK(resum(dec.terms) == t);
    CHECK(resum(to_pi_prime_coeffs(dec), true) == t);
  }
}

TEST_CASE("emitted strands rise in the Boij-Soederberg order") {
  Generator gen(9);
  for (int trial = 0; trial < 200; ++trial) {
    BettiTable t = resum(gen.chain_terms(4));
    // extra positive mass may break decomposability; whatever is emitted
    // must still be a chain
    t.add(gen.uniform(0, t.pdim()), gen.uniform(-2, 10), gen.positive_rational());
    const Decomposition dec = bs_decompose(t);
    for (std::size_t k = 1; k < dec.terms.size(); ++k) {
      CHECK(precedes(dec.terms[k - 1].type, dec.terms[k].type));
      CHECK_FALSE(dec.terms[k - 1].type == dec.terms[k].type);
    }
    for (const auto& term : dec.terms) CHECK(term.coefficient.sign() > 0);
    BettiTable rebuilt = resum(dec.terms) + dec.residual;
    CHECK(rebuilt == t);
  }
}
