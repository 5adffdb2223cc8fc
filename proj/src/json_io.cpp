#include "purebetti/json_io.hpp"

#include <set>
#include <string>

#include "purebetti/error.hpp"

namespace purebetti::json {

namespace {

[[noreturn]] void invalid(const std::string& what) { fail(Errc::InvalidJson, what); }

const json& member(const json& object, const char* key) {
  if (!object.is_object()) invalid(std::string("expected an object with key '") + key + "'");
  auto it = object.find(key);
  if (it == object.end()) invalid(std::string("missing key '") + key + "'");
  return *it;
}

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) invalid(std::string(what) + " must be an integer");
  const auto v = j.get<long long>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    invalid(std::string(what) + " out of range");
  return static_cast<int>(v);
}

json rational_list(const std::vector<Rational>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(to_json(v));
  return out;
}

}  // namespace

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    invalid(e.what());
  }
}

json to_json(const Rational& r) { return r.to_string(); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) invalid("rational must be a string \"p/q\" or an integer");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const Error& e) {
    invalid(e.what());
  }
}

json to_json(const DegreeSequence& d) {
  return json(std::vector<int>(d.degrees().begin(), d.degrees().end()));
}

DegreeSequence degree_sequence_from_json(const json& j) {
  if (!j.is_array()) invalid("degree sequence must be an array of integers");
  std::vector<int> values;
  for (const auto& v : j) values.push_back(as_int(v, "degree"));
  return DegreeSequence(std::move(values));
}

json to_json(const BettiTable& t) {
  json entries = json::array();
  for (const auto& [key, value] : t.entries())
    entries.push_back({{"i", key.first}, {"j", key.second}, {"v", to_json(value)}});
  return {{"entries", entries}};
}

BettiTable betti_table_from_json(const json& j) {
  const json& entries = j.is_array() ? j : member(j, "entries");
  if (!entries.is_array()) invalid("'entries' must be an array");
  BettiTable t;
  std::set<std::pair<int, int>> seen;
  for (const auto& e : entries) {
    const int i = as_int(member(e, "i"), "i");
    const int deg = as_int(member(e, "j"), "j");
    const Rational v = rational_from_json(member(e, "v"));
    if (!seen.insert({i, deg}).second)
      invalid("duplicate entry (" + std::to_string(i) + "," + std::to_string(deg) + ")");
    if (v.sign() <= 0 || i < 0)
      fail(Errc::NonPositiveEntry, "entry (" + std::to_string(i) + "," + std::to_string(deg) +
                                       ") = " + v.to_string() + " must be positive with i >= 0");
    t.set(i, deg, v);
  }
  return t;
}

json to_json(const LaurentPolynomial& p) {
  json out = json::object();
  for (const auto& [e, c] : p.terms()) out[std::to_string(e)] = to_json(c);
  return out;
}

LaurentPolynomial laurent_from_json(const json& j) {
  if (!j.is_object()) invalid("polynomial must be an object mapping exponents to rationals");
  LaurentPolynomial p;
  for (const auto& [key, value] : j.items()) {
    std::size_t used = 0;
    int exponent = 0;
    try {
      exponent = std::stoi(key, &used);
    } catch (const std::exception&) {
      invalid("exponent key '" + key + "' is not an integer");
    }
    if (used != key.size()) invalid("exponent key '" + key + "' is not an integer");
    p.add_term(exponent, rational_from_json(value));
  }
  return p;
}

json to_json(const HilbertSeries& h) {
  return {{"numerator", to_json(h.numerator())}, {"pole_order", h.pole_order()}};
}

HilbertSeries hilbert_series_from_json(const json& j) {
  return HilbertSeries(laurent_from_json(member(j, "numerator")), as_int(member(j, "pole_order"), "pole_order"));
}

json to_json(const HomogeneousIdeal& ideal) {
  json gens = json::array();
  for (const auto& g : ideal.generators()) {
    json terms = json::array();
    for (const auto& [m, c] : g.terms()) terms.push_back({{"exp", m.exponents}, {"c", to_json(c)}});
    gens.push_back(terms);
  }
  return {{"n", ideal.variables()}, {"generators", gens}};
}

HomogeneousIdeal ideal_from_json(const json& j) {
  const int n = as_int(member(j, "n"), "n");
  const json& gens = member(j, "generators");
  if (!gens.is_array()) invalid("'generators' must be an array");
  std::vector<HomogeneousPolynomial> generators;
  for (const auto& g : gens) {
    if (!g.is_array()) invalid("each generator must be an array of terms");
    HomogeneousPolynomial::Terms terms;
    for (const auto& term : g) {
      const json& exp = member(term, "exp");
      if (!exp.is_array()) invalid("'exp' must be an array");
      Monomial m;
      for (const auto& e : exp) {
        const int v = as_int(e, "exponent");
        if (v < 0) invalid("negative exponent");
        m.exponents.push_back(v);
      }
      terms[m] += rational_from_json(member(term, "c"));
    }
    generators.emplace_back(n, terms);
  }
  return HomogeneousIdeal(n, std::move(generators));
}

json to_json(const HKReport& r) {
  return {{"residuals", rational_list(r.residuals)},
          {"satisfied", r.satisfied},
          {"pdim", r.pdim},
          {"codim", r.codim},
          {"cm_equal_defect", r.cm_equal_defect}};
}

json to_json(const Thm2Report& r) {
  return {{"type", to_json(r.type)},
          {"pdim", r.pdim},
          {"codim", r.codim},
          {"codim_equals_pdim", r.codim_equals_pdim},
          {"satisfies_hk", r.satisfies_hk},
          {"matches_pi", r.matches_pi},
          {"matches_pi_prime", r.matches_pi_prime},
          {"verdict", r.verdict},
          {"hk", to_json(r.hk)}};
}

json to_json(const CyclicClassification& c) {
  json out = {{"type", to_json(c.type)},
              {"pi_prime_00", to_json(c.pi_prime_00)},
              {"gorenstein_forced", c.gorenstein_forced},
              {"diffs", c.diffs},
              {"ci_forced", c.ci_forced},
              {"diffs_equal", c.diffs_equal},
              {"cyclic_realizable", c.cyclic_realizable}};
  out["predicted_table"] = c.predicted_table ? to_json(*c.predicted_table) : json(nullptr);
  return out;
}

json to_json(const CmSufficiency& v) {
  json out = {{"pi_prime_00", to_json(v.pi_prime_00)}, {"applies", v.applies}, {"consistent", v.consistent}};
  out["forced_table"] = v.forced_table ? to_json(*v.forced_table) : json(nullptr);
  return out;
}

json to_json(const std::vector<DecompositionTerm>& terms) {
  json out = json::array();
  for (const auto& t : terms) out.push_back({{"c", to_json(t.coefficient)}, {"d", to_json(t.type)}});
  return out;
}

json to_json(const Decomposition& d) {
  json out = {{"terms", to_json(d.terms)}, {"residual", to_json(d.residual)}, {"lengths", d.lengths()}};
  out["failure"] = d.failure ? json(*d.failure) : json(nullptr);
  return out;
}

json to_json(const PureBetti& p) { return {{"type", to_json(p.type)}, {"betti", rational_list(p.betti)}}; }

json to_json(const ModuleFacts& f) {
  return {{"ambient_dim", f.ambient_dim}, {"codim", f.codim}, {"dim", f.dim},
          {"pdim", f.pdim},               {"depth", f.depth}, {"cmd", f.cmd},
          {"multiplicity", to_json(f.multiplicity)}};
}

}  // namespace purebetti::json
