#include "purebetti/hk.hpp"

#include <string>

#include "purebetti/error.hpp"
#include "purebetti/hilbert.hpp"

namespace purebetti {

std::vector<Rational> hk_residuals(const BettiTable& t, int l_max) {
  if (l_max < 0) fail(Errc::NonPositiveParameter, "l_max = " + std::to_string(l_max));
  std::vector<Rational> residuals(static_cast<std::size_t>(l_max));
  for (const auto& [key, value] : t.entries()) {
    const auto& [i, j] = key;
    for (int l = 0; l < l_max; ++l) {
      Rational term = int_pow(j, static_cast<unsigned>(l)) * value;
      residuals[static_cast<std::size_t>(l)] += i % 2 ? -term : term;
    }
  }
  return residuals;
}

HKReport satisfies_hk(const BettiTable& t) {
  HKReport report;
  report.pdim = t.pdim();
  report.residuals = hk_residuals(t, report.pdim);
  report.satisfied = true;
  for (const auto& r : report.residuals) report.satisfied = report.satisfied && r.is_zero();
  report.codim = codim_from_table(t);
  report.cm_equal_defect = report.codim == report.pdim;
  return report;
}

std::vector<Rational> hk_betti_solution(const DegreeSequence& d, const Rational& beta0) {
  const BettiTable table = scale(pi(d).table, beta0);
  std::vector<Rational> betti;
  for (std::size_t i = 0; i < d.size(); ++i) betti.push_back(table.at(static_cast<int>(i), d[i]));
  return betti;
}

Thm2Report check_thm2(const BettiTable& t) {
  auto type = is_pure(t);
  if (!type) fail(Errc::NotPureTable, "table is not pure");
  const DegreeSequence& d = *type;
  Thm2Report report{.type = d};
  report.hk = satisfies_hk(t);
  report.pdim = report.hk.pdim;
  report.codim = report.hk.codim;
  report.codim_equals_pdim = report.hk.cm_equal_defect;
  report.satisfies_hk = report.hk.satisfied;
  const Rational beta0 = t.at(0, d.front());
  const Rational betap = t.at(d.p(), d.back());
  report.matches_pi = t == scale(pi(d).table, beta0);
  report.matches_pi_prime = t == scale(pi_prime(d).table, betap);
  report.verdict = report.codim_equals_pdim;
  if (report.satisfies_hk != report.verdict || report.matches_pi != report.verdict ||
      report.matches_pi_prime != report.verdict)
    fail(Errc::InternalConsistency, "equivalent conditions disagree on a pure table");
  return report;
}

Rational multiplicity_pure(const Rational& ring_multiplicity, const DegreeSequence& d,
                           const Rational& beta0) {
  Rational product(1);
  for (std::size_t j = 1; j < d.size(); ++j) product *= Rational(d[j] - d[0]);
  return ring_multiplicity * beta0 * product / Rational(factorial(static_cast<unsigned>(d.p())));
}

CyclicClassification classify_pure_cyclic(const DegreeSequence& d) {
  if (d.front() != 0) fail(Errc::NonzeroFirstDegree, "d_0 = " + std::to_string(d.front()));
  CyclicClassification c{.type = d};
  c.pi_prime_00 = pi_prime(d).table.at(0, 0);
  c.gorenstein_forced = c.pi_prime_00 >= Rational(1);
  for (std::size_t i = 1; i < d.size(); ++i) c.diffs.push_back(d[i] - d[i - 1]);
  c.ci_forced = true;
  c.diffs_equal = true;
  for (std::size_t i = 1; i < c.diffs.size(); ++i) {
    c.ci_forced = c.ci_forced && c.diffs[i - 1] <= c.diffs[i];
    c.diffs_equal = c.diffs_equal && c.diffs[i - 1] == c.diffs[i];
  }
  c.cyclic_realizable = c.pi_prime_00 <= Rational(1) && (!c.ci_forced || c.diffs_equal);
  if (c.ci_forced && c.cyclic_realizable) {
    c.predicted_table =
        d.p() == 0 ? BettiTable{{{0, 0}, Rational(1)}} : koszul_table(d.p(), c.diffs.front());
  }
  return c;
}

CmSufficiency cm_sufficiency(const DegreeSequence& d, const Rational& beta0, const Rational& betap) {
  if (beta0.sign() <= 0 || betap.sign() <= 0)
    fail(Errc::NonPositiveScalar, "Betti numbers must be positive");
  CmSufficiency v;
  const PureDiagram normalized = pi_prime(d);
  v.pi_prime_00 = normalized.table.at(0, d.front());
  v.applies = v.pi_prime_00 >= Rational(1) && beta0 <= betap;
  if (v.applies) {
    v.consistent = beta0 == betap && v.pi_prime_00 == Rational(1);
    v.forced_table = scale(normalized.table, betap);
  }
  return v;
}

BettiTable power_ci_table(int r, int d) {
  if (r < 1 || d < 1)
    fail(Errc::NonPositiveParameter, "power_ci_table needs r, d >= 1 (got " + std::to_string(r) +
                                         ", " + std::to_string(d) + ")");
  BettiTable t;
  t.set(0, 0, 1);
  t.set(1, r * d, d + 1);
  t.set(2, r * d + r, d);
  return t;
}

BettiTable koszul_table(int p, int r) {
  if (p < 1 || r < 1)
    fail(Errc::NonPositiveParameter, "koszul_table needs p, r >= 1 (got " + std::to_string(p) +
                                         ", " + std::to_string(r) + ")");
  BettiTable t;
  for (int i = 0; i <= p; ++i) t.set(i, i * r, Rational(binomial(p, i)));
  return t;
}

}  // namespace purebetti
