#include "purebetti/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "purebetti/decomposition.hpp"
#include "purebetti/error.hpp"
#include "purebetti/format.hpp"
#include "purebetti/hilbert.hpp"
#include "purebetti/hk.hpp"
#include "purebetti/json_io.hpp"
#include "purebetti/oracle.hpp"
#include "purebetti/parser.hpp"

namespace purebetti::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Inputs {
  bool json = false;
  std::optional<std::string> table, file, series, ring, gens, ring_mult, beta0, betap;
  std::vector<int> d;
  std::string variant = "pi";
  std::optional<int> n, depth, jmax, lmax, r, power, p;
  int max_steps = kDefaultMaxSteps;
  bool sequential = false;
};

class Session {
 public:
  Session(Inputs& in, std::istream& stdin_stream, std::ostream& out)
      : in_(in), stdin_(stdin_stream), out_(out) {}

  std::string read_file() const {
    const std::string& path = *in_.file;
    std::ostringstream buffer;
    if (path == "-") {
      buffer << stdin_.rdbuf();
    } else {
      std::ifstream f(path);
      if (!f) throw UsageError("cannot read file '" + path + "'");
      buffer << f.rdbuf();
    }
    return buffer.str();
  }

  // Exactly one of the inline flag or --file supplies the main input.
  json main_input(const std::optional<std::string>& inline_value, const char* flag) const {
    if (inline_value && in_.file) throw UsageError(std::string("give either ") + flag + " or --file, not both");
    if (inline_value) return purebetti::json::parse(*inline_value);
    if (in_.file) return purebetti::json::parse(read_file());
    throw UsageError(std::string(flag) + " or --file is required");
  }

  BettiTable table() const { return purebetti::json::betti_table_from_json(main_input(in_.table, "--table")); }

  DegreeSequence degrees() const {
    if (in_.d.empty()) throw UsageError("--d is required");
    return DegreeSequence(in_.d);
  }

  HilbertSeries ring_series() const {
    if (in_.ring && in_.n) throw UsageError("give either --ring or --n, not both");
    if (in_.ring) return purebetti::json::hilbert_series_from_json(purebetti::json::parse(*in_.ring));
    if (in_.n) return polynomial_ring_hilbert(*in_.n);
    throw UsageError("--n or --ring is required");
  }

  HomogeneousIdeal ideal() const {
    if (in_.gens && in_.file) throw UsageError("give either --gens or --file, not both");
    if (in_.gens) {
      if (!in_.n) throw UsageError("--gens needs --n");
      return HomogeneousIdeal(*in_.n, parse_generators(*in_.gens, *in_.n));
    }
    if (in_.file) return purebetti::json::ideal_from_json(purebetti::json::parse(read_file()));
    throw UsageError("--gens or --file is required");
  }

  int degree_bound(const HomogeneousIdeal& ideal) const {
    if (in_.jmax) return *in_.jmax;
    if (ideal.is_monomial()) return certified_degree_bound(ideal);
    return ideal.generator_degree_sum();
  }

  Rational rational_flag(const std::optional<std::string>& value, const char* fallback) const {
    return Rational::parse(value ? *value : fallback);
  }

  void emit(const json& value, const std::string& text) const {
    if (in_.json)
      out_ << value.dump(2) << '\n';
    else
      out_ << text;
  }

  void emit_table(const BettiTable& t) const { emit(purebetti::json::to_json(t), render_betti_diagram(t)); }

  const Inputs& inputs() const { return in_; }

 private:
  Inputs& in_;
  std::istream& stdin_;
  std::ostream& out_;
};

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string join(const std::vector<Rational>& values) {
  std::string s = "(";
  for (std::size_t k = 0; k < values.size(); ++k) s += (k ? ", " : "") + values[k].to_string();
  return s + ")";
}

std::string join(std::span<const int> values) {
  std::string s = "(";
  for (std::size_t k = 0; k < values.size(); ++k) s += (k ? "," : "") + std::to_string(values[k]);
  return s + ")";
}

std::string describe_terms(const std::vector<DecompositionTerm>& terms, const char* diagram) {
  if (terms.empty()) return "0";
  std::string s;
  for (std::size_t k = 0; k < terms.size(); ++k)
    s += (k ? " + " : "") + terms[k].coefficient.to_string() + " * " + diagram + join(terms[k].type.degrees());
  return s;
}

std::string hk_text(const HKReport& r) {
  std::ostringstream os;
  os << "residuals: " << join(r.residuals) << "\n"
     << "satisfied: " << yes_no(r.satisfied) << "\n"
     << "pdim: " << r.pdim << "\n"
     << "codim: " << r.codim << "\n"
     << "cm_equal_defect: " << yes_no(r.cm_equal_defect) << "\n";
  return os.str();
}

void cmd_pure_diagram(const Session& s) {
  const auto& in = s.inputs();
  if (in.variant != "pi" && in.variant != "pi-prime") throw UsageError("--variant must be pi or pi-prime");
  const DegreeSequence d = s.degrees();
  s.emit_table(in.variant == "pi" ? pi(d).table : pi_prime(d).table);
}

void cmd_hk_check(const Session& s) {
  const auto& in = s.inputs();
  const BettiTable t = s.table();
  HKReport report = satisfies_hk(t);
  if (in.lmax) report.residuals = hk_residuals(t, *in.lmax);
  json j = purebetti::json::to_json(report);
  std::string text = hk_text(report);
  if (in.n || in.ring) {
    const HilbertSeries ring = s.ring_series();
    const ModuleFacts facts = module_facts(ring, in.depth.value_or(ring.pole_order()), t);
    j["facts"] = purebetti::json::to_json(facts);
    text += "dim: " + std::to_string(facts.dim) + "\ndepth: " + std::to_string(facts.depth) +
            "\ncmd: " + std::to_string(facts.cmd) + "\nmultiplicity: " + facts.multiplicity.to_string() + "\n";
  }
  s.emit(j, text);
}

void cmd_thm2_check(const Session& s) {
  const Thm2Report r = check_thm2(s.table());
  std::ostringstream os;
  os << "type: " << join(r.type.degrees()) << "\n"
     << "codim == pdim: " << yes_no(r.codim_equals_pdim) << " (codim " << r.codim << ", pdim " << r.pdim << ")\n"
     << "Herzog-Kuehl equations: " << yes_no(r.satisfies_hk) << "\n"
     << "table == beta_0 * pi(d): " << yes_no(r.matches_pi) << "\n"
     << "table == beta_p * pi'(d): " << yes_no(r.matches_pi_prime) << "\n"
     << "verdict: " << yes_no(r.verdict) << "\n";
  s.emit(purebetti::json::to_json(r), os.str());
}

void cmd_decompose(const Session& s) {
  const Decomposition dec = bs_decompose(s.table());
  json j = purebetti::json::to_json(dec);
  std::string text = "pi terms: " + describe_terms(dec.terms, "pi") + "\n";
  if (dec.complete()) {
    const auto primed = to_pi_prime_coeffs(dec);
    j["pi_prime_terms"] = purebetti::json::to_json(primed);
    text += "pi' terms: " + describe_terms(primed, "pi'") + "\n";
  } else {
    text += "residual:\n" + render_betti_diagram(dec.residual);
  }
  s.emit(j, text);
  if (!dec.complete()) fail(Errc::NotDecomposable, dec.failure.value_or("nonzero residual"));
}

void cmd_multiplicity(const Session& s) {
  const auto& in = s.inputs();
  const int modes = (in.series ? 1 : 0) + (in.table || in.file ? 1 : 0) + (in.d.empty() ? 0 : 1);
  if (modes != 1) throw UsageError("give exactly one of --series, --table/--file or --d");
  const Rational ring_mult = s.rational_flag(in.ring_mult, "1");
  Rational e;
  if (in.series)
    e = multiplicity(purebetti::json::hilbert_series_from_json(purebetti::json::parse(*in.series)));
  else if (!in.d.empty())
    e = multiplicity_pure(ring_mult, s.degrees(), s.rational_flag(in.beta0, "1"));
  else
    e = multiplicity_from_table(ring_mult, s.table());
  s.emit({{"multiplicity", purebetti::json::to_json(e)}}, "multiplicity: " + e.to_string() + "\n");
}

void cmd_hilbert_from_betti(const Session& s) {
  const HilbertSeries h = module_hilbert_from_betti(s.ring_series(), s.table());
  s.emit(purebetti::json::to_json(h), "H(z) = " + h.to_string() + "\n");
}

void cmd_betti_from_hilbert(const Session& s) {
  const auto& in = s.inputs();
  const HilbertSeries module =
      purebetti::json::hilbert_series_from_json(s.main_input(in.series, "--series"));
  const PureBetti result = pure_betti_from_hilbert(s.ring_series(), module, in.max_steps);
  BettiTable t;
  for (std::size_t i = 0; i < result.betti.size(); ++i) t.set(static_cast<int>(i), result.type[i], result.betti[i]);
  json j = purebetti::json::to_json(result);
  j["table"] = purebetti::json::to_json(t);
  s.emit(j, "type: " + join(result.type.degrees()) + "\nbetti: " + join(result.betti) + "\n" +
                render_betti_diagram(t));
}

void cmd_oracle_betti(const Session& s) {
  const HomogeneousIdeal ideal = s.ideal();
  s.emit_table(koszul_betti(ideal, s.degree_bound(ideal), {.parallel = !s.inputs().sequential}));
}

void cmd_oracle_hilbert(const Session& s) {
  const HomogeneousIdeal ideal = s.ideal();
  const auto values = quotient_hilbert_values(ideal, s.degree_bound(ideal));
  json j = {{"values", values}};
  std::string text = "values:";
  for (auto v : values) text += " " + std::to_string(v);
  text += "\n";
  if (ideal.is_monomial()) {
    const LaurentPolynomial k = monomial_hilbert_numerator(ideal);
    j["numerator"] = purebetti::json::to_json(k);
    j["pole_order"] = ideal.variables();
    text += "numerator over (1 - z)^" + std::to_string(ideal.variables()) + ": " + k.to_string() + "\n";
  }
  s.emit(j, text);
}

void cmd_power_table(const Session& s) {
  const auto& in = s.inputs();
  if (!in.r || !in.power) throw UsageError("--r and --d are required");
  s.emit_table(power_ci_table(*in.r, *in.power));
}

void cmd_koszul_table(const Session& s) {
  const auto& in = s.inputs();
  if (!in.p || !in.r) throw UsageError("--p and --r are required");
  s.emit_table(koszul_table(*in.p, *in.r));
}

void cmd_classify(const Session& s) {
  const CyclicClassification c = classify_pure_cyclic(s.degrees());
  std::ostringstream os;
  os << "pi'(d)_{0,0}: " << c.pi_prime_00 << "\n"
     << "gorenstein_forced: " << yes_no(c.gorenstein_forced) << "\n"
     << "diffs: " << join(c.diffs) << "\n"
     << "ci_forced: " << yes_no(c.ci_forced) << "\n"
     << "diffs_equal: " << yes_no(c.diffs_equal) << "\n"
     << "cyclic_realizable: " << yes_no(c.cyclic_realizable) << "\n";
  if (c.predicted_table) os << "predicted table:\n" << render_betti_diagram(*c.predicted_table);
  s.emit(purebetti::json::to_json(c), os.str());
}

void cmd_cm_sufficiency(const Session& s) {
  const auto& in = s.inputs();
  if (!in.beta0 || !in.betap) throw UsageError("--beta0 and --betap are required");
  const CmSufficiency v = cm_sufficiency(s.degrees(), Rational::parse(*in.beta0), Rational::parse(*in.betap));
  std::ostringstream os;
  os << "pi'(d)_{0,d_0}: " << v.pi_prime_00 << "\n"
     << "applies: " << yes_no(v.applies) << "\n";
  if (v.applies) {
    os << "consistent: " << yes_no(v.consistent) << "\n"
       << "forced table:\n" << render_betti_diagram(*v.forced_table);
  }
  s.emit(purebetti::json::to_json(v), os.str());
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Inputs inputs;
  CLI::App app{"Exact Betti-table calculus: pure diagrams, Herzog-Kuehl equations, "
               "Hilbert series and Boij-Soederberg decomposition, with a Koszul-homology oracle",
               "purebetti"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", inputs.json, "Emit JSON instead of text");

  std::function<void(const Session&)> action;
  auto sub = [&](const char* name, const char* help, void (*fn)(const Session&)) {
    CLI::App* cmd = app.add_subcommand(name, help);
    cmd->callback([&action, fn] { action = fn; });
    return cmd;
  };
  auto add_table = [&](CLI::App* cmd) {
    cmd->add_option("--table", inputs.table, "Betti table JSON (object with 'entries', or the entries array)");
    cmd->add_option("--file", inputs.file, "Read the main JSON input from a file ('-' for stdin)");
  };
  auto add_degrees = [&](CLI::App* cmd) {
    cmd->add_option("--d", inputs.d, "Degree sequence, comma separated")->delimiter(',');
  };
  auto add_ring = [&](CLI::App* cmd) {
    cmd->add_option("--n", inputs.n, "Ambient ring is a polynomial ring in n variables");
    cmd->add_option("--ring", inputs.ring, "Ambient ring Hilbert series JSON");
  };
  auto add_ideal = [&](CLI::App* cmd) {
    cmd->add_option("--n", inputs.n, "Number of variables");
    cmd->add_option("--gens", inputs.gens, "Comma-separated generators, e.g. \"x1*x2,x1^2-x2^2\"");
    cmd->add_option("--file", inputs.file, "Ideal JSON file ('-' for stdin)");
    cmd->add_option("--jmax", inputs.jmax, "Top internal degree to compute");
  };

  auto* pd = sub("pure-diagram", "Pure diagram pi(d) or pi'(d)", cmd_pure_diagram);
  add_degrees(pd);
  pd->add_option("--variant", inputs.variant, "pi or pi-prime");

  auto* hkc = sub("hk-check", "Herzog-Kuehl residuals and codimension of a table", cmd_hk_check);
  add_table(hkc);
  hkc->add_option("--lmax", inputs.lmax, "Report residuals for l = 0..lmax-1");
  add_ring(hkc);
  hkc->add_option("--depth", inputs.depth, "Depth of the ambient ring (default: its dimension)");

  add_table(sub("thm2-check", "Equivalent conditions for a pure table", cmd_thm2_check));
  add_table(sub("decompose", "Greedy Boij-Soederberg decomposition", cmd_decompose));

  auto* mult = sub("multiplicity", "Multiplicity from a series, a table or a degree sequence", cmd_multiplicity);
  mult->add_option("--series", inputs.series, "Hilbert series JSON");
  add_table(mult);
  add_degrees(mult);
  mult->add_option("--beta0", inputs.beta0, "beta_0 for --d (default 1)");
  mult->add_option("--ring-mult", inputs.ring_mult, "Multiplicity of the ambient ring (default 1)");

  auto* hfb = sub("hilbert-from-betti", "Hilbert series of a module from its Betti table", cmd_hilbert_from_betti);
  add_table(hfb);
  add_ring(hfb);

  auto* bfh = sub("betti-from-hilbert", "Type and Betti numbers of a pure module from its series", cmd_betti_from_hilbert);
  bfh->add_option("--series", inputs.series, "Module Hilbert series JSON");
  bfh->add_option("--file", inputs.file, "Read the module series from a file ('-' for stdin)");
  add_ring(bfh);
  bfh->add_option("--max-steps", inputs.max_steps, "Iteration bound");

  auto* ob = sub("oracle-betti", "Graded Betti numbers of S/I by Koszul homology", cmd_oracle_betti);
  add_ideal(ob);
  ob->add_flag("--sequential", inputs.sequential, "Do not compute degrees in parallel");

  add_ideal(sub("oracle-hilbert", "Hilbert function of S/I", cmd_oracle_hilbert));

  auto* pt = sub("power-table", "Betti table of R/(g1,g2)^d for forms of degree r", cmd_power_table);
  pt->add_option("--r", inputs.r, "Degree of g1, g2");
  pt->add_option("--d", inputs.power, "Power d");

  auto* kt = sub("koszul-table", "Koszul table of p forms of degree r", cmd_koszul_table);
  kt->add_option("--p", inputs.p, "Number of forms");
  kt->add_option("--r", inputs.r, "Degree of each form");

  add_degrees(sub("classify-degseq", "Gorenstein / complete-intersection conditions on a degree sequence",
                  cmd_classify));

  auto* cms = sub("cm-sufficiency", "Sufficient Cohen-Macaulay criterion for a pure module", cmd_cm_sufficiency);
  add_degrees(cms);
  cms->add_option("--beta0", inputs.beta0, "beta_{0,d_0}");
  cms->add_option("--betap", inputs.betap, "beta_{p,d_p}");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    Session session(inputs, in, out);
    action(session);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.name() << ": " << e.what() << "\n";
    return kExitDomainError;
  }
  return kExitOk;
}

}  // namespace purebetti::cli
