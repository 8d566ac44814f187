#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ethr/ethr.hpp"

using namespace ethr;

namespace {

// Pinned tolerances.
constexpr double kIdealThreshold = 0.115;
constexpr double kIdealThresholdTol = 0.001;
constexpr double kLossyZeroThreshold = 0.0324;
constexpr double kLossyEqThreshold = 0.0178;
constexpr double kLossyThresholdTol = 0.0005;
constexpr double kMeasurementThreshold = 0.25;
constexpr double kMeasurementThresholdTol = 0.005;
constexpr double kSolverTol = 1e-7;
constexpr double kMcSigmas = 3.0;
constexpr double kMcRelStd = 0.05;
constexpr double kMcStdFloor = 1e-4;
constexpr std::uint64_t kMcMinTrialsPerPoint = 1000000;

struct Report {
  std::vector<std::string> lines;
  void note(const std::string& s) { lines.push_back(s); }
};

std::string fmt(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::string join(const std::vector<mpq_class>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ", ") + x.get_str();
  return s;
}

std::vector<mpq_class> leading(const FailurePolynomial& p) {
  std::vector<mpq_class> out;
  for (std::size_t k = 3; k <= 7; ++k) out.push_back(p.coeff(k));
  return out;
}

std::vector<mpq_class> ints(std::initializer_list<long> v) {
  std::vector<mpq_class> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

std::string set_str(const std::set<int>& s) {
  std::string out = "{";
  for (int q : s) out += (out.size() > 1 ? "," : "") + std::to_string(q);
  return out + "}";
}

std::set<int> support_set(std::uint64_t m) {
  std::set<int> s;
  for (int q = 0; q < 64; ++q) {
    if (m >> q & 1u) s.insert(q + 1);
  }
  return s;
}

bool c1(Report& r) {
  const auto code = steane();
  bool ok = code.generators().size() == 6;
  for (const auto& g : code.generators()) ok = ok && g.weight() == 4;
  for (const auto& a : code.generators()) {
    for (const auto& b : code.generators()) ok = ok && commutes(a, b);
  }
  const auto& z = code.logical_z().front();
  ok = ok && z.weight() == 3 && in_normalizer(code, z) && !in_stabilizer(code, z);
  r.note("generators " + std::to_string(code.generators().size()) + ", logical Z " + z.str());
  return ok;
}

bool c2(Report& r) {
  const auto code = steane();
  const CorrectableCount want[] = {{7, 7}, {21, 21}, {28, 35}};
  bool counts_ok = true;
  for (std::size_t w = 1; w <= 3; ++w) {
    auto c = count_correctable(code, w, ErasureMark::Z);
    r.note("weight " + std::to_string(w) + ": " + std::to_string(c.correctable) + "/" +
           std::to_string(c.total));
    counts_ok = counts_ok && c == want[w - 1];
  }
  const std::set<std::set<int>> listed{{5, 6, 7}, {3, 4, 7}, {2, 4, 6}, {1, 2, 7},
                                       {2, 3, 6}, {1, 3, 6}, {1, 4, 5}};
  std::set<std::set<int>> found;
  for (std::uint64_t m = 0; m < 128; ++m) {
    if (std::popcount(m) == 3 && !is_correctable(code, ErasurePattern::z_marks(7, m))) {
      found.insert(support_set(m));
    }
  }
  bool listing_ok = found == listed;
  for (const auto& s : listed) {
    if (!found.count(s)) r.note("listed but correctable: " + set_str(s));
  }
  for (const auto& s : found) {
    if (!listed.count(s)) r.note("uncorrectable but not listed: " + set_str(s));
  }
  r.note(std::string("counts ") + (counts_ok ? "match" : "differ") + "; support listing " +
         (listing_ok ? "matches" : "differs"));
  return counts_ok && listing_ok;
}

bool c3(Report& r) {
  const auto group = steane_permutation_group();
  const auto code = steane();
  std::map<std::size_t, int> sizes;
  std::set<std::string> seen;
  bool constant = true;
  for (std::uint64_t m = 0; m < 128; ++m) {
    if (std::popcount(m) != 3) continue;
    auto o = orbit(group, ErasurePattern::z_marks(7, m));
    if (!seen.insert(o.representative.str()).second) continue;
    ++sizes[o.size()];
    const bool rep = is_correctable(code, o.representative);
    for (const auto& p : o.members) constant = constant && is_correctable(code, p) == rep;
  }
  Procedure lossy(code, Model::Lossy);
  for (const auto& cls : classify_all(group, lossy)) {
    for (const auto& o : cls.orbits) {
      for (const auto& p : o.members) constant = constant && is_correctable(code, p) == o.correctable;
    }
  }
  std::string s = "order " + std::to_string(group.order()) + ", weight-3 orbit sizes";
  for (const auto& [k, n] : sizes) s += " " + std::to_string(k) + "x" + std::to_string(n);
  r.note(s);
  return group.order() == 168 && sizes == std::map<std::size_t, int>{{7, 1}, {28, 1}} && constant;
}

bool c4(Report& r) {
  const auto want = ints({56, 406, 3878, -129675, 1164815});
  const auto got = leading(recursion_polynomial(Model::Ideal, 6));
  r.note("6 rounds: " + join(got));
  r.note("7 rounds: " + join(leading(recursion_polynomial(Model::Ideal, 7))));
  return got == want;
}

bool c5(Report& r) {
  const auto zero = leading(recursion_polynomial(Model::Lossy, 20, DeltaSpec::zero()));
  const auto eq = leading(recursion_polynomial(Model::Lossy, 20, DeltaSpec::equal_eps()));
  r.note("delta=0:   " + join(zero));
  r.note("delta=eps: " + join(eq));
  return zero == ints({350, 4739, -12404, -355600, -3087110}) &&
         eq == ints({1050, 33173, -46242, -6861701, -118743847});
}

bool within(Report& r, const std::string& label, double got, double want, double tol) {
  const bool ok = std::abs(got - want) <= tol;
  r.note(label + " " + fmt(got, 7) + " (target " + fmt(want) + " +- " + fmt(tol) + ") " +
         (ok ? "ok" : "out of tolerance"));
  return ok;
}

bool c6(Report& r) {
  ThresholdOptions opt;
  opt.tolerance = kSolverTol;
  bool ok = true;
  ok &= within(r, "ideal 6 rounds:",
               solve_threshold(recursion_polynomial(Model::Ideal, 6), Criterion::BreakEven, opt).value(),
               kIdealThreshold, kIdealThresholdTol);
  ok &= within(r, "lossy delta=0:",
               solve_threshold(recursion_polynomial(Model::Lossy, 20, DeltaSpec::zero()),
                               Criterion::HalfBreakEven, opt)
                   .value(),
               kLossyZeroThreshold, kLossyThresholdTol);
  ok &= within(r, "lossy delta=eps:",
               solve_threshold(recursion_polynomial(Model::Lossy, 20, DeltaSpec::equal_eps()),
                               Criterion::HalfBreakEven, opt)
                   .value(),
               kLossyEqThreshold, kLossyThresholdTol);
  ok &= within(r, "measurement:", measurement_threshold(kSolverTol).value(), kMeasurementThreshold,
               kMeasurementThresholdTol);
  r.note("ideal 7 rounds (diagnostic): " +
         fmt(solve_threshold(recursion_polynomial(Model::Ideal, 7), Criterion::BreakEven, opt).value(),
             7));
  return ok;
}

bool c7(Report& r) {
  const auto chain = build_procedure_chain(Procedure(steane(), Model::Ideal));
  const auto parts = failure_by_start(chain, default_rounds(Model::Ideal));
  const auto& states = chain.matrix.states();
  std::map<std::string, mpq_class> cubic;
  for (std::size_t i = 0; i < states.size(); ++i) cubic[states[i]] = parts[i].coeff(3);
  r.note("direct weight 3: " + cubic["fail"].get_str() + ", weight 2 + one failure: " +
         cubic["2"].get_str() + ", weight 1 + two failures: " + cubic["1"].get_str() + ", total " +
         mpq_class(cubic["fail"] + cubic["2"] + cubic["1"] + cubic["3"]).get_str());
  return cubic["fail"] == 7 && cubic["2"] == 21 && cubic["1"] == 28 && cubic["3"] == 0;
}

bool c8(Report& r) {
  const auto ideal_tab = build_ideal_chain();
  const auto ideal_orc = build_procedure_chain(Procedure(steane(), Model::Ideal));
  const auto ideal_diff = compare_chains(ideal_tab, ideal_orc);
  for (const auto& d : ideal_diff) {
    r.note("ideal " + d.to + "|" + d.from + ": table " + d.tabulated.str() + " ; oracle " +
           d.oracle.str());
  }
  const auto lossy_tab = build_lossy_chain(DeltaSpec::symbolic());
  const auto lossy_orc = build_procedure_chain(Procedure(steane(), Model::Lossy));
  const auto lossy_diff = compare_chains(lossy_tab, lossy_orc);
  for (const auto& d : lossy_diff) {
    r.note("lossy " + d.to + "|" + d.from + ": table " + d.tabulated.str() + " ; oracle " +
           d.oracle.str());
  }
  std::size_t lossy_rows = 0;
  std::set<std::string> bad_from;
  for (const auto& d : lossy_diff) bad_from.insert(d.from);
  for (const auto& s : lossy_tab.matrix.states()) {
    if (!bad_from.count(s)) ++lossy_rows;
  }
  r.note("ideal entries differing: " + std::to_string(ideal_diff.size()) + "; lossy rows identical: " +
         std::to_string(lossy_rows) + "/" + std::to_string(lossy_tab.matrix.size()) +
         ", remaining rows itemized above");
  // Lossy rows may be itemized instead of reproduced; the ideal rows must match.
  return ideal_diff.empty();
}

struct McPoint {
  Model model;
  double eps;
  bool delta_eq;
};

bool c9(Report& r) {
  const std::vector<McPoint> points{{Model::Ideal, 0.02, false},  {Model::Ideal, 0.05, false},
                                    {Model::Ideal, 0.1, false},   {Model::Lossy, 0.005, false},
                                    {Model::Lossy, 0.01, false},  {Model::Lossy, 0.02, false},
                                    {Model::Lossy, 0.005, true},  {Model::Lossy, 0.01, true},
                                    {Model::Lossy, 0.02, true}};
  const Procedure ideal(steane(), Model::Ideal);
  const Procedure lossy(steane(), Model::Lossy);
  const auto ideal_proc = recursion_polynomial(build_procedure_chain(ideal), 6);
  const auto lossy_proc = recursion_polynomial(build_procedure_chain(lossy), 20);
  const auto ideal_tab = recursion_polynomial(Model::Ideal, 6);
  const auto lossy_tab = recursion_polynomial(Model::Lossy, 20, DeltaSpec::symbolic());
  bool ok = true;
  int tab_agree = 0;
  for (const auto& pt : points) {
    SimConfig cfg = SimConfig::defaults(pt.model);
    cfg.eps = pt.eps;
    cfg.delta = pt.delta_eq ? pt.eps : 0.0;
    cfg.min_trials = kMcMinTrialsPerPoint / cfg.seeds;
    cfg.max_trials = 10000000;
    cfg.master_seed = 20240601;
    const auto& proc = pt.model == Model::Ideal ? ideal : lossy;
    const auto s = simulate(proc, cfg);
    const auto& proc_poly = pt.model == Model::Ideal ? ideal_proc : lossy_proc;
    const auto& tab_poly = pt.model == Model::Ideal ? ideal_tab : lossy_tab;
    const double exact = proc_poly.evaluate_double(cfg.eps, cfg.delta);
    const double table = tab_poly.evaluate_double(cfg.eps, cfg.delta);
    const double n = static_cast<double>(s.trials());
    const double z = (s.pooled_rate() - exact) / std::sqrt(exact * (1 - exact) / n);
    const double zt = (s.pooled_rate() - table) / std::sqrt(table * (1 - table) / n);
    const bool spread_ok = s.rate_mean() <= kMcStdFloor || s.rate_std() < kMcRelStd * s.rate_mean();
    const bool point_ok = std::abs(z) <= kMcSigmas && s.trials() >= kMcMinTrialsPerPoint && spread_ok;
    tab_agree += std::abs(zt) <= kMcSigmas;
    ok = ok && point_ok;
    r.note(to_string(pt.model) + (pt.model == Model::Lossy ? (pt.delta_eq ? " d=eps" : " d=0  ") : "") +
           " eps=" + fmt(pt.eps) + " trials=" + std::to_string(s.trials()) + " mc=" +
           fmt(s.pooled_rate()) + " exact=" + fmt(exact) + " z=" + fmt(z, 3) + " std/mean=" +
           fmt(s.rate_mean() > 0 ? s.rate_std() / s.rate_mean() : 0.0, 3) + " | table=" +
           fmt(table) + " z_table=" + fmt(zt, 3) + (point_ok ? "" : "  <-- miss"));
  }
  r.note("reference: chain built from the simulated procedure; table-chain agreement " +
         std::to_string(tab_agree) + "/" + std::to_string(points.size()) + " points");
  return ok;
}

bool c10(Report& r) {
  const Procedure lossy(steane(), Model::Lossy);
  const Procedure ideal(steane(), Model::Ideal);
  auto run = [&](std::size_t threads) {
    std::ostringstream out;
    SimConfig li = SimConfig::defaults(Model::Lossy);
    li.threads = threads;
    li.master_seed = 99;
    li.max_trials = 100000;
    SimConfig id = SimConfig::defaults(Model::Ideal);
    id.threads = threads;
    id.master_seed = 99;
    id.max_trials = 100000;
    auto rows = sweep(lossy, li, {0.01, 0.02}, true);
    auto more = sweep(ideal, id, {0.05, 0.1});
    rows.insert(rows.end(), more.begin(), more.end());
    write_csv(out, rows);
    return out.str();
  };
  const auto a = run(1);
  const auto b = run(4);
  const auto c = run(1);
  r.note("csv bytes " + std::to_string(a.size()) + ", 1 vs 4 threads " + (a == b ? "identical" : "differ") +
         ", rerun " + (a == c ? "identical" : "differ"));
  return a == b && a == c;
}

const std::vector<std::pair<std::string, std::function<bool(Report&)>>> kCriteria{
    {"Steane structure", c1},
    {"correctability counts and uncorrectable supports", c2},
    {"automorphism group and weight-3 orbits", c3},
    {"ideal recursion coefficients, 6 rounds", c4},
    {"lossy recursion coefficients, 20 rounds", c5},
    {"thresholds", c6},
    {"counting decomposition of the cubic coefficient", c7},
    {"oracle equivalence of transition rows", c8},
    {"Monte Carlo agreement", c9},
    {"determinism", c10},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance checks"};
  std::vector<int> selected;
  bool quiet = false;
  app.add_option("-c,--criterion", selected, "Criterion number (repeatable); all when omitted")
      ->check(CLI::Range(1, static_cast<int>(kCriteria.size())));
  app.add_flag("-q,--quiet", quiet, "Only print pass/fail lines");
  CLI11_PARSE(app, argc, argv);
  if (selected.empty()) {
    for (int i = 1; i <= static_cast<int>(kCriteria.size()); ++i) selected.push_back(i);
  }
  int failures = 0;
  for (int id : selected) {
    const auto& [name, fn] = kCriteria[id - 1];
    Report rep;
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = fn(rep);
    } catch (const std::exception& e) {
      rep.note(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << "C" << id << " " << (ok ? "PASS" : "FAIL") << "  " << name << "  (" << fmt(secs, 3)
              << " s)\n";
    if (!quiet) {
      for (const auto& l : rep.lines) std::cout << "    " << l << "\n";
    }
    failures += !ok;
  }
  std::cout.flush();
  return failures == 0 ? 0 : 1;
}
