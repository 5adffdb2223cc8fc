// One PASS/FAIL line per acceptance criterion; exits nonzero on any failure.

#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "purebetti/decomposition.hpp"
#include "purebetti/error.hpp"
#include "purebetti/hilbert.hpp"
#include "purebetti/hk.hpp"
#include "purebetti/oracle.hpp"
#include "fixtures.hpp"
#include "support.hpp"

using namespace purebetti;
using namespace purebetti::testing;

namespace {

struct OracleRun {
  HomogeneousIdeal ideal;
  int j_max;
  BettiTable table;
};

std::vector<OracleRun>& oracle_runs() {
  static std::vector<OracleRun> runs;
  return runs;
}

BettiTable run_oracle(const HomogeneousIdeal& I, int j_max) {
  BettiTable t = koszul_betti(I, j_max);
  oracle_runs().push_back({I, j_max, t});
  return t;
}

BettiTable run_oracle(const HomogeneousIdeal& I) { return run_oracle(I, certified_degree_bound(I)); }

struct Check {
  std::string detail;
  bool ok = true;
  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

bool same(const std::vector<Rational>& a, std::initializer_list<long long> b) {
  std::vector<Rational> bb;
  for (auto v : b) bb.emplace_back(v);
  return a == bb;
}

Check two_generator_example() {
  Check c;
  const BettiTable t = run_oracle(two_generator_ideal());
  c.require(t == table({{0, 0, 1}, {1, 2, 2}, {2, 3, 1}}), "oracle table differs from (1;2,1) at (0,2,3)");
  const HKReport hk = satisfies_hk(t);
  c.require(!hk.satisfied, "HK equations reported satisfied");
  c.require(same(hk.residuals, {0, -1}), "residuals differ from (0,-1)");
  const BettiTable scaled = scale(pi({0, 2, 3}).table, 1);
  c.require(scaled == table({{0, 0, 1}, {1, 2, 3}, {2, 3, 2}}), "pi(0,2,3) differs from (1;3,2)");
  c.require(scaled != t, "pi(0,2,3) coincides with the table");
  return c;
}

Check triangle_example() {
  Check c;
  const BettiTable t = run_oracle(triangle_ideal());
  c.require(t == table({{0, 0, 1}, {1, 2, 3}, {2, 3, 2}}), "oracle table differs from (1;3,2) at (0,2,3)");
  const Thm2Report r = check_thm2(t);
  c.require(r.codim_equals_pdim && r.satisfies_hk && r.matches_pi && r.matches_pi_prime && r.verdict,
            "not all four conditions hold");
  c.require(t == power_ci_table(1, 2), "table differs from power_ci_table(1,2)");
  return c;
}

Check gorenstein_example() {
  Check c;
  const BettiTable t = run_oracle(gorenstein_ideal(), 5);
  const auto type = is_pure(t);
  c.require(type && *type == DegreeSequence{0, 2, 3, 5}, "table is not pure of type (0,2,3,5)");
  c.require(t.at(1, 2) == Rational(5), "beta_1 != 5");
  c.require(t == table({{0, 0, 1}, {1, 2, 5}, {2, 3, 5}, {3, 5, 1}}), "betti numbers differ from (1,5,5,1)");
  const CyclicClassification cls = classify_pure_cyclic({0, 2, 3, 5});
  c.require(cls.pi_prime_00 == Rational(1), "pi'_{0,0} != 1");
  c.require(cls.gorenstein_forced, "gorenstein_forced is false");
  return c;
}

Check multiplicity_cross_check() {
  Check c;
  const Rational closed_triangle = multiplicity_pure(1, {0, 2, 3}, 1);
  const HilbertSeries triangle(monomial_hilbert_numerator(triangle_ideal()), 3);
  const BettiTable triangle_table = run_oracle(triangle_ideal());
  c.require(closed_triangle == Rational(3), "closed form for (0,2,3) != 3");
  c.require(multiplicity(triangle) == closed_triangle, "triangle series multiplicity differs");
  c.require(multiplicity_from_table(1, triangle_table) == closed_triangle, "table formula differs for the triangle");

  const Rational closed_gor = multiplicity_pure(1, {0, 2, 3, 5}, 1);
  const auto values = quotient_hilbert_values(gorenstein_ideal(), 4);
  LaurentPolynomial f;
  for (std::size_t k = 0; k < values.size(); ++k) f.add_term(static_cast<int>(k), Rational(static_cast<long long>(values[k])));
  c.require(values == std::vector<std::int64_t>{1, 3, 1, 0, 0}, "Gorenstein Hilbert values differ from (1,3,1)");
  c.require(closed_gor == Rational(5), "closed form for (0,2,3,5) != 5");
  c.require(multiplicity(HilbertSeries(f, 0)) == closed_gor, "f(1) differs for the Gorenstein ideal");
  c.require(multiplicity_from_table(1, run_oracle(gorenstein_ideal(), 5)) == closed_gor,
            "table formula differs for the Gorenstein ideal");
  return c;
}

Check cyclic_family() {
  Check c;
  for (int r = 1; r <= 2; ++r)
    for (int d = 1; d <= 3; ++d) {
      const BettiTable t = run_oracle(power_ideal(r, d));
      const std::string tag = "(r,d)=(" + std::to_string(r) + "," + std::to_string(d) + ")";
      c.require(t == power_ci_table(r, d), tag + ": oracle differs from power_ci_table");
      c.require(t == table({{0, 0, 1}, {1, r * d, d + 1}, {2, r * d + r, d}}), tag + ": unexpected entries");
    }
  return c;
}

Check koszul_family() {
  Check c;
  for (int p = 2; p <= 3; ++p)
    for (int r = 1; r <= 2; ++r) {
      const BettiTable t = run_oracle(koszul_ideal(p, r));
      BettiTable binomials;
      for (int i = 0; i <= p; ++i) binomials.set(i, i * r, binomial(p, i));
      c.require(t == koszul_table(p, r) && t == binomials,
                "(p,r)=(" + std::to_string(p) + "," + std::to_string(r) + ") differs");
    }
  return c;
}

Check hk_codim_duality() {
  Check c;
  Generator gen(20240601);
  int satisfied = 0;
  for (int trial = 0; trial < 200; ++trial) {
    BettiTable t = resum(gen.chain_terms(4, 0, 4));
    if (trial % 2 == 1) t.add(gen.uniform(0, t.pdim() + 1), gen.uniform(-2, 10), gen.positive_rational());
    const HKReport hk = satisfies_hk(t);
    satisfied += hk.satisfied;
    c.require(hk.satisfied == (codim_from_table(t) == t.pdim()), "duality fails on trial " + std::to_string(trial));
  }
  c.require(satisfied > 0 && satisfied < 200, "generator produced only one kind of table");
  return c;
}

Check decomposition_round_trip() {
  Check c;
  for (const auto& run : oracle_runs()) {
    if (!satisfies_hk(run.table).cm_equal_defect) continue;
    const Decomposition dec = bs_decompose(run.table);
    c.require(dec.complete() && resum(dec.terms) == run.table, "oracle CM table does not re-sum");
  }
  Generator gen(777);
  for (int trial = 0; trial < 200; ++trial) {
    const auto terms = gen.chain_terms(5);
    const BettiTable t = resum(terms);
    const Decomposition dec = bs_decompose(t);
    c.require(dec.complete() && dec.residual.empty() && resum(dec.terms) == t, "chain table does not re-sum");
  }
  const Decomposition ex = bs_decompose(table({{0, 0, 1}, {1, 2, 2}, {2, 3, 1}}));
  c.require(ex.complete() && ex.terms == std::vector<DecompositionTerm>{{q(1, 2), {0, 2, 3}}, {q(1, 2), {0, 2}}},
            "(1;2,1) does not decompose as 1/2 pi(0,2,3) + 1/2 pi(0,2)");
  return c;
}

Check hilbert_round_trips() {
  Check c;
  std::vector<std::pair<int, BettiTable>> pure;  // (variables, table)
  for (const auto& run : oracle_runs())
    if (is_pure(run.table)) pure.emplace_back(run.ideal.variables(), run.table);
  for (const auto& d : std::vector<DegreeSequence>{{0, 2, 3}, {0, 2, 3, 5}, {0, 1, 2, 3}, {1, 4}, {-1, 0, 4}})
    pure.emplace_back(d.p() + 1, scale(pi(d).table, q(3, 2)));
  for (const auto& [n, t] : pure) {
    const HilbertSeries ring = polynomial_ring_hilbert(n);
    const PureBetti back = pure_betti_from_hilbert(ring, module_hilbert_from_betti(ring, t));
    BettiTable rebuilt;
    for (std::size_t i = 0; i < back.betti.size(); ++i) rebuilt.set(static_cast<int>(i), back.type[i], back.betti[i]);
    c.require(rebuilt == t, "pure round trip fails");
  }
  for (const auto& run : oracle_runs())
    if (run.ideal.is_monomial())
      c.require(monomial_hilbert_numerator(run.ideal) == alternating_poly(run.table),
                "K-polynomial differs from the alternating polynomial");
  return c;
}

Check euler_characteristic() {
  Check c;
  for (const auto& run : oracle_runs()) {
    const int n = run.ideal.variables();
    const auto values = quotient_hilbert_values(run.ideal, run.j_max);
    for (int k = 0; k <= run.j_max; ++k) {
      Rational s;
      for (const auto& [key, v] : run.table.entries()) {
        if (key.second > k) continue;
        const Rational term = v * binomial(k - key.second + n - 1, n - 1);
        s += key.first % 2 ? -term : term;
      }
      c.require(s == Rational(static_cast<long long>(values[static_cast<std::size_t>(k)])),
                "mismatch in degree " + std::to_string(k));
    }
  }
  c.require(!oracle_runs().empty(), "no oracle runs recorded");
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria = {
      {"two-generator example", two_generator_example},
      {"triangle example", triangle_example},
      {"Gorenstein example", gorenstein_example},
      {"multiplicity cross-check", multiplicity_cross_check},
      {"power complete-intersection family", cyclic_family},
      {"Koszul family", koszul_family},
      {"HK/codim duality", hk_codim_duality},
      {"decomposition round trip", decomposition_round_trip},
      {"Hilbert round trips", hilbert_round_trips},
      {"Euler characteristic per degree", euler_characteristic},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Check result;
    try {
      result = criteria[k].second();
    } catch (const std::exception& e) {
      result.ok = false;
      result.detail = std::string("exception: ") + e.what();
    }
    failures += !result.ok;
    std::printf("[%s] %2zu. %s%s%s\n", result.ok ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(),
                result.ok ? "" : " -- ", result.detail.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failures), criteria.size());
  return failures == 0 ? 0 : 1;
}
