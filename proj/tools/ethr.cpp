#include <bit>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ethr/ethr.hpp"

using namespace ethr;
using nlohmann::ordered_json;

namespace {

struct CodeOptions {
  std::string name = "steane";
  std::string parity;
};

void add_code_options(CLI::App* cmd, CodeOptions& o) {
  cmd->add_option("--code", o.name, "Built-in code")->check(CLI::IsMember({"steane", "grassl"}));
  cmd->add_option("--parity", o.parity, "Parity check matrix file (rows of 0/1) for a CSS code")
      ->check(CLI::ExistingFile);
}

StabilizerCode load_code(const CodeOptions& o) {
  if (!o.parity.empty()) return css_from_parity_check(ClassicalCode::load(o.parity), o.parity);
  return o.name == "grassl" ? grassl() : steane();
}

PermutationGroup load_group(const StabilizerCode& code, const std::string& generators) {
  if (!generators.empty()) return PermutationGroup::load(code.n(), generators);
  return permutation_automorphisms(code);
}

ordered_json poly_json(const FailurePolynomial& p) {
  ordered_json terms = ordered_json::array();
  for (const auto& t : p.terms()) {
    terms.push_back({{"deg_eps", t.deg_eps},
                     {"deg_delta", t.deg_delta},
                     {"numerator", t.coeff.get_num().get_str()},
                     {"denominator", t.coeff.get_den().get_str()}});
  }
  return terms;
}

ordered_json row_json(const ClassRow& row) {
  ordered_json out = ordered_json::object();
  for (const auto& [label, p] : row) out[label] = p.str();
  return out;
}

double parse_probability(const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad number '" + text + "'");
  }
  if (used != text.size() || !(v >= 0.0 && v < 1.0)) {
    throw std::invalid_argument("probability '" + text + "' outside [0, 1)");
  }
  return v;
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(parse_probability(item));
  }
  if (out.empty()) throw std::invalid_argument("empty epsilon grid");
  return out;
}

Chain analytic_chain(Model model, const std::string& kind, const DeltaSpec& delta) {
  if (kind == "procedure") return build_procedure_chain(Procedure(steane(), model)).with_delta(delta);
  return model == Model::Ideal ? build_ideal_chain() : build_lossy_chain(delta);
}

// correctability

struct CorrectabilityArgs {
  CodeOptions code;
  std::string pattern;
  std::vector<std::size_t> weights;
  std::string kind = "Z";
};

int run_correctability(const CorrectabilityArgs& a) {
  const auto code = load_code(a.code);
  ordered_json out;
  out["code"] = code.name();
  out["n"] = code.n();
  out["k"] = code.k();
  if (!a.pattern.empty()) {
    const auto p = ErasurePattern::from_string(a.pattern);
    out["pattern"] = p.str();
    out["correctable"] = is_correctable(code, p);
    out["correctable_rank"] = is_correctable_rank(code, p);
  } else {
    const ErasureMark mark = a.kind == "E" ? ErasureMark::Full : ErasureMark::Z;
    std::vector<std::size_t> weights = a.weights;
    if (weights.empty()) {
      for (std::size_t w = 0; w <= code.n(); ++w) weights.push_back(w);
    }
    ordered_json counts = ordered_json::array();
    for (auto w : weights) {
      const auto c = count_correctable(code, w, mark);
      counts.push_back({{"weight", w}, {"correctable", c.correctable}, {"total", c.total}});
    }
    out["kind"] = a.kind;
    out["counts"] = counts;
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

// orbits

struct OrbitArgs {
  CodeOptions code;
  std::string generators;
  std::string model = "ideal";
  bool members = false;
};

int run_orbits(const OrbitArgs& a) {
  const auto code = load_code(a.code);
  const auto group = load_group(code, a.generators);
  const Procedure proc(code, parse_model(a.model));
  ordered_json out;
  out["code"] = code.name();
  out["group_order"] = group.order();
  ordered_json gens = ordered_json::array();
  for (const auto& g : group.generators()) gens.push_back(g.cycles());
  out["generators"] = gens;
  ordered_json classes = ordered_json::array();
  for (const auto& cls : classify_all(group, proc)) {
    ordered_json orbits = ordered_json::array();
    for (const auto& o : cls.orbits) {
      ordered_json j{{"representative", o.representative.str()},
                     {"size", o.size()},
                     {"correctable", o.correctable}};
      if (a.members) {
        ordered_json m = ordered_json::array();
        for (const auto& p : o.members) m.push_back(p.str());
        j["members"] = m;
      }
      orbits.push_back(j);
    }
    classes.push_back({{"label", cls.label}, {"size", cls.size()}, {"orbits", orbits}});
  }
  out["classes"] = classes;
  std::cout << out.dump(2) << "\n";
  return 0;
}

// analyze

struct AnalyzeArgs {
  std::string model = "ideal";
  std::optional<std::size_t> rounds;
  std::string delta = "0";
  std::string chain = "table";
  bool text = false;
};

int run_analyze(const AnalyzeArgs& a) {
  const Model model = parse_model(a.model);
  const DeltaSpec delta = DeltaSpec::parse(a.delta);
  const std::size_t rounds = a.rounds.value_or(default_rounds(model));
  const auto poly = recursion_polynomial(analytic_chain(model, a.chain, delta), rounds);
  if (a.text) {
    std::cout << poly.str() << "\n";
    return 0;
  }
  ordered_json out{{"model", a.model},
                   {"rounds", rounds},
                   {"delta_mode", model == Model::Ideal ? "none" : delta.str()},
                   {"chain", a.chain},
                   {"terms", poly_json(poly)}};
  std::cout << out.dump(2) << "\n";
  return 0;
}

// threshold

struct ThresholdArgs {
  std::string model = "ideal";
  std::optional<std::size_t> rounds;
  std::string delta = "0";
  std::string chain = "table";
  double tol = 1e-6;
  bool measurement = false;
};

int run_threshold(const ThresholdArgs& a) {
  ThresholdResult r;
  if (a.measurement) {
    r = measurement_threshold(a.tol);
  } else {
    const Model model = parse_model(a.model);
    const DeltaSpec delta = DeltaSpec::parse(a.delta);
    if (model == Model::Lossy && delta.mode == DeltaSpec::Mode::Symbolic) {
      throw std::invalid_argument("threshold needs a concrete delta (0, eps or a value)");
    }
    const std::size_t rounds = a.rounds.value_or(default_rounds(model));
    ThresholdOptions opt;
    opt.tolerance = a.tol;
    const auto poly = recursion_polynomial(analytic_chain(model, a.chain, delta), rounds);
    r = solve_threshold(poly, model == Model::Ideal ? Criterion::BreakEven : Criterion::HalfBreakEven, opt);
    r.label = a.model;
    r.delta_mode = model == Model::Ideal ? "none" : delta.str();
    r.rounds = rounds;
  }
  ordered_json crossings = ordered_json::array();
  for (const auto& [lo, hi] : r.other_crossings) crossings.push_back({lo, hi});
  ordered_json out{{"model", r.label},
                   {"delta_mode", r.delta_mode},
                   {"rounds", r.rounds},
                   {"criterion", r.criterion == Criterion::BreakEven ? "break_even" : "half_break_even"},
                   {"threshold", r.value()},
                   {"lo", r.lo.get_str()},
                   {"hi", r.hi.get_str()},
                   {"width", r.width()},
                   {"sign_lo", r.sign_lo},
                   {"sign_hi", r.sign_hi},
                   {"other_crossings", crossings}};
  std::cout << out.dump(2) << "\n";
  return 0;
}

// simulate

struct SimulateArgs {
  std::string model = "ideal";
  std::string grid = "0.02,0.05,0.1";
  std::string delta = "0";
  std::optional<std::size_t> rounds;
  std::size_t seeds = 20;
  std::uint64_t master_seed = 1;
  std::size_t threads = 1;
  std::size_t min_failures = 1000;
  std::size_t min_trials = 0;
  std::size_t max_trials = 0;
  int coins = 1;
  std::string out;
};

int run_simulate(const SimulateArgs& a) {
  const Model model = parse_model(a.model);
  SimConfig cfg = SimConfig::defaults(model);
  if (a.rounds) cfg.max_rounds = *a.rounds;
  cfg.seeds = a.seeds;
  cfg.master_seed = a.master_seed;
  cfg.threads = a.threads;
  cfg.min_failures = a.min_failures;
  cfg.min_trials = a.min_trials;
  cfg.max_trials = a.max_trials;
  cfg.coins = a.coins;
  const bool delta_eq = a.delta == "eps";
  if (!delta_eq) cfg.delta = parse_probability(a.delta);
  const Procedure proc(steane(), model);
  const auto rows = sweep(proc, cfg, parse_grid(a.grid), delta_eq);
  if (a.out.empty()) {
    write_csv(std::cout, rows);
  } else {
    std::ofstream f(a.out);
    if (!f) throw std::runtime_error("cannot write " + a.out);
    write_csv(f, rows);
  }
  return 0;
}

// compare

struct CompareArgs {
  std::string in;
  std::string chain = "procedure";
  std::string out;
};

int run_compare(const CompareArgs& a) {
  std::ifstream f(a.in);
  if (!f) throw std::runtime_error("cannot read " + a.in);
  const auto rows = read_csv(f);
  std::map<std::pair<std::string, std::size_t>, FailurePolynomial> cache;
  std::ostringstream csv;
  csv << "model,eps,delta,rounds,analytic_rate,mc_mean,mc_std,z_score\n";
  for (const auto& r : rows) {
    const Model model = parse_model(r.model);
    auto key = std::pair{r.model, r.rounds};
    auto it = cache.find(key);
    if (it == cache.end()) {
      const DeltaSpec d = model == Model::Ideal ? DeltaSpec::zero() : DeltaSpec::symbolic();
      it = cache.emplace(key, recursion_polynomial(analytic_chain(model, a.chain, d), r.rounds)).first;
    }
    const double exact = it->second.evaluate_double(r.eps, r.delta);
    const double pooled = r.trials ? static_cast<double>(r.failures) / r.trials : 0.0;
    const double sigma = std::sqrt(exact * (1 - exact) / static_cast<double>(r.trials));
    const double z = sigma > 0 ? (pooled - exact) / sigma : 0.0;
    csv << r.model << ',' << format_double(r.eps) << ',' << format_double(r.delta) << ',' << r.rounds
        << ',' << format_double(exact) << ',' << format_double(r.rate_mean) << ','
        << format_double(r.rate_std) << ',' << format_double(z) << '\n';
  }
  if (a.out.empty()) {
    std::cout << csv.str();
  } else {
    std::ofstream o(a.out);
    if (!o) throw std::runtime_error("cannot write " + a.out);
    o << csv.str();
  }
  return 0;
}

// oracle

struct OracleArgs {
  std::string model = "ideal";
  std::string from;
  int coins = 1;
};

int run_oracle(const OracleArgs& a) {
  const Model model = parse_model(a.model);
  const Procedure proc(steane(), model);
  const Chain table = model == Model::Ideal ? build_ideal_chain() : build_lossy_chain(DeltaSpec::symbolic());
  ordered_json out;
  out["model"] = a.model;
  ordered_json rows = ordered_json::array();
  for (const auto& s : table.matrix.states()) {
    if (s == table.fail) continue;
    if (!a.from.empty() && s != a.from) continue;
    const auto r = derive_transitions_by_bruteforce(proc, s);
    ordered_json tab = ordered_json::object();
    for (const auto& to : table.matrix.states()) {
      const auto& p = table.matrix.at(to, s);
      if (!p.is_zero()) tab[to] = p.str();
    }
    rows.push_back({{"from", s},
                    {"patterns", r.patterns},
                    {"choices", r.choices},
                    {"uniform", r.uniform},
                    {"oracle", row_json(r.row)},
                    {"table", tab}});
  }
  if (!a.from.empty() && rows.empty()) throw std::invalid_argument("unknown class '" + a.from + "'");
  out["rows"] = rows;
  if (a.from.empty()) {
    out["initial"] = row_json(derive_initial_by_bruteforce(proc, a.coins));
    ordered_json diffs = ordered_json::array();
    for (const auto& d : compare_chains(table, build_procedure_chain(proc, a.coins))) {
      diffs.push_back({{"from", d.from}, {"to", d.to}, {"table", d.tabulated.str()}, {"oracle", d.oracle.str()}});
    }
    out["discrepancies"] = diffs;
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Erasure threshold analysis for the Steane code"};
  app.require_subcommand(1);

  CorrectabilityArgs ca;
  auto* corr = app.add_subcommand("correctability", "Correctability of a pattern or counts by weight");
  add_code_options(corr, ca.code);
  corr->add_option("--pattern", ca.pattern, "Pattern such as E.Z....");
  corr->add_option("--weight", ca.weights, "Weights to count (default all)");
  corr->add_option("--kind", ca.kind, "Mark used when counting")->check(CLI::IsMember({"Z", "E"}));

  OrbitArgs oa;
  auto* orb = app.add_subcommand("orbits", "Orbits of erasure patterns under the automorphism group");
  add_code_options(orb, oa.code);
  orb->add_option("--generators", oa.generators, "Permutation generators in cycle notation, one per line")
      ->check(CLI::ExistingFile);
  orb->add_option("--model", oa.model, "ideal (Z marks) or lossy (Z and full marks)")
      ->check(CLI::IsMember({"ideal", "lossy"}));
  orb->add_flag("--members", oa.members, "List orbit members");

  AnalyzeArgs an;
  auto* ana = app.add_subcommand("analyze", "Recursion polynomial as JSON");
  ana->add_option("--model", an.model)->check(CLI::IsMember({"ideal", "lossy"}));
  ana->add_option("--rounds", an.rounds, "Correction rounds (default 6 ideal, 20 lossy)")
      ->check(CLI::PositiveNumber);
  ana->add_option("--delta", an.delta, "0, eps, symbolic or a value");
  ana->add_option("--chain", an.chain, "table or procedure")->check(CLI::IsMember({"table", "procedure"}));
  ana->add_flag("--text", an.text, "Print the polynomial as text");

  ThresholdArgs ta;
  auto* thr = app.add_subcommand("threshold", "Break-even threshold as JSON");
  thr->add_option("--model", ta.model)->check(CLI::IsMember({"ideal", "lossy"}));
  thr->add_option("--rounds", ta.rounds)->check(CLI::PositiveNumber);
  thr->add_option("--delta", ta.delta, "0, eps or a value");
  thr->add_option("--chain", ta.chain)->check(CLI::IsMember({"table", "procedure"}));
  thr->add_option("--tol", ta.tol, "Interval width")->check(CLI::PositiveNumber);
  thr->add_flag("--measurement", ta.measurement, "Detector threshold of the classical measurement code");

  SimulateArgs sa;
  auto* sim = app.add_subcommand("simulate", "Monte Carlo sweep, CSV output");
  sim->add_option("--model", sa.model)->check(CLI::IsMember({"ideal", "lossy"}));
  sim->add_option("--eps-grid", sa.grid, "Comma separated epsilon values");
  sim->add_option("--delta", sa.delta, "0, eps or a value");
  sim->add_option("--rounds", sa.rounds)->check(CLI::PositiveNumber);
  sim->add_option("--seeds", sa.seeds)->check(CLI::PositiveNumber);
  sim->add_option("--master-seed", sa.master_seed);
  sim->add_option("--threads", sa.threads)->check(CLI::PositiveNumber);
  sim->add_option("--min-failures", sa.min_failures);
  sim->add_option("--min-trials", sa.min_trials, "Per seed");
  sim->add_option("--max-trials", sa.max_trials, "Per seed; 0 means max(1e6, 10/eps)");
  sim->add_option("--coins", sa.coins, "Initial coins per qubit (ideal)")->check(CLI::Range(1, 2));
  sim->add_option("--out", sa.out, "CSV file (default stdout)");

  CompareArgs co;
  auto* cmp = app.add_subcommand("compare", "Join a simulation CSV with analytic rates");
  cmp->add_option("--in", co.in, "Simulation CSV")->required()->check(CLI::ExistingFile);
  cmp->add_option("--analytic", co.chain, "table or procedure")
      ->check(CLI::IsMember({"table", "procedure"}));
  cmp->add_option("--out", co.out, "CSV file (default stdout)");

  OracleArgs ora;
  auto* orc = app.add_subcommand("oracle", "Brute-force transition rows next to the tabulated ones");
  orc->add_option("--model", ora.model)->check(CLI::IsMember({"ideal", "lossy"}));
  orc->add_option("--from", ora.from, "Single source class, e.g. 1 or [0,1]");
  orc->add_option("--coins", ora.coins)->check(CLI::Range(1, 2));

  CLI11_PARSE(app, argc, argv);

  try {
    if (corr->parsed()) return run_correctability(ca);
    if (orb->parsed()) return run_orbits(oa);
    if (ana->parsed()) return run_analyze(an);
    if (thr->parsed()) return run_threshold(ta);
    if (sim->parsed()) return run_simulate(sa);
    if (cmp->parsed()) return run_compare(co);
    if (orc->parsed()) return run_oracle(ora);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
