#include "ethr/montecarlo.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "ethr/automorphism.hpp"

namespace ethr {

std::uint64_t trial_stream_seed(std::uint64_t master_seed, std::uint64_t seed_index,
                                std::uint64_t trial_index) {
  SplitMix64 a(master_seed);
  std::uint64_t h = a.next();
  SplitMix64 b(h ^ (seed_index * 0xd1b54a32d192ed03ULL));
  h = b.next();
  SplitMix64 c(h ^ (trial_index * 0x8cb92ba72f3d8dd7ULL));
  return c.next();
}

SimConfig SimConfig::defaults(Model m) {
  SimConfig c;
  c.model = m;
  c.max_rounds = m == Model::Ideal ? 6 : 20;
  return c;
}

std::size_t SimConfig::effective_min_trials() const {
  double scaled = eps > 0 ? std::ceil(min_trials_scale / eps) : 0.0;
  return std::max(min_trials, static_cast<std::size_t>(scaled));
}

std::size_t SimConfig::effective_max_trials() const {
  if (max_trials) return max_trials;
  double scaled = eps > 0 ? std::ceil(10.0 / eps) : 0.0;
  return std::max<std::size_t>(1'000'000, static_cast<std::size_t>(scaled));
}

void SimConfig::validate() const {
  if (!(eps >= 0 && eps < 1)) throw std::invalid_argument("eps must lie in [0, 1)");
  if (!(delta >= 0 && delta < 1)) throw std::invalid_argument("delta must lie in [0, 1)");
  if (max_rounds < 1) throw std::invalid_argument("max_rounds must be at least 1");
  if (seeds < 1) throw std::invalid_argument("need at least one seed");
  if (batch < 1) throw std::invalid_argument("batch must be positive");
  if (coins < 1) throw std::invalid_argument("coins must be positive");
}

std::uint64_t SimStats::trials() const {
  std::uint64_t t = 0;
  for (const auto& s : per_seed) t += s.trials;
  return t;
}

std::uint64_t SimStats::failures() const {
  std::uint64_t f = 0;
  for (const auto& s : per_seed) f += s.failures;
  return f;
}

double SimStats::pooled_rate() const {
  const auto t = trials();
  return t ? static_cast<double>(failures()) / t : 0.0;
}

double SimStats::rate_mean() const {
  if (per_seed.empty()) return 0.0;
  double s = 0;
  for (const auto& x : per_seed) s += x.rate();
  return s / per_seed.size();
}

double SimStats::rate_std() const {
  if (per_seed.size() < 2) return 0.0;
  const double m = rate_mean();
  double s = 0;
  for (const auto& x : per_seed) s += (x.rate() - m) * (x.rate() - m);
  return std::sqrt(s / (per_seed.size() - 1));
}

SeedStats run_seed(const Procedure& proc, const SimConfig& config, std::uint64_t seed_index) {
  config.validate();
  if (proc.model() != config.model) throw std::invalid_argument("procedure and config models differ");
  const std::size_t min_trials = config.effective_min_trials();
  const std::size_t max_trials = config.effective_max_trials();
  SeedStats s;
  while (s.trials < max_trials) {
    const std::uint64_t end = std::min<std::uint64_t>(s.trials + config.batch, max_trials);
    for (std::uint64_t t = s.trials; t < end; ++t) {
      RandomSource src(trial_stream_seed(config.master_seed, seed_index, t), config.eps,
                       config.delta);
      if (run_block(proc, config.max_rounds, src, config.coins) != BlockResult::Clean) {
        ++s.failures;
      }
    }
    s.trials = end;
    if (s.failures >= config.min_failures && s.trials >= min_trials) break;
  }
  return s;
}

SimStats simulate(const Procedure& proc, const SimConfig& config) {
  config.validate();
  SimStats out;
  out.model = config.model;
  out.eps = config.eps;
  out.delta = config.delta;
  out.rounds = config.max_rounds;
  out.per_seed.resize(config.seeds);
  const std::size_t threads = std::max<std::size_t>(1, std::min(config.threads, config.seeds));
  if (threads == 1) {
    for (std::size_t i = 0; i < config.seeds; ++i) out.per_seed[i] = run_seed(proc, config, i);
    return out;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  for (std::size_t w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < config.seeds; i += threads) {
          out.per_seed[i] = run_seed(proc, config, i);
        }
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

std::vector<SimStats> sweep(const Procedure& proc, const SimConfig& config,
                            const std::vector<double>& eps_grid, bool delta_equals_eps) {
  std::vector<SimStats> out;
  for (double e : eps_grid) {
    if (!(e > 0 && e < 0.5)) throw std::invalid_argument("grid values must lie in (0, 0.5)");
    SimConfig c = config;
    c.eps = e;
    if (delta_equals_eps) c.delta = e;
    out.push_back(simulate(proc, c));
  }
  return out;
}

std::map<std::string, std::uint64_t> sample_transitions(const Procedure& proc,
                                                        const ErasurePattern& from, double eps,
                                                        double delta, std::uint64_t steps,
                                                        std::uint64_t seed) {
  std::map<std::string, std::uint64_t> counts;
  for (std::uint64_t i = 0; i < steps; ++i) {
    RandomSource src(trial_stream_seed(seed, 0, i), eps, delta);
    ++counts[class_label(proc, proc.step(from, src).pattern)];
  }
  return counts;
}

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void write_csv(std::ostream& out, const std::vector<SimStats>& rows) {
  out << "model,eps,delta,rounds,trials,failures,rate_mean,rate_std,seed_count\n";
  for (const auto& r : rows) {
    out << to_string(r.model) << ',' << format_double(r.eps) << ',' << format_double(r.delta)
        << ',' << r.rounds << ',' << r.trials() << ',' << r.failures() << ','
        << format_double(r.rate_mean()) << ',' << format_double(r.rate_std()) << ','
        << r.per_seed.size() << '\n';
  }
}

std::vector<CsvRow> read_csv(std::istream& in) {
  std::vector<CsvRow> rows;
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty CSV");
  if (line.rfind("model,eps,delta,rounds,trials,failures", 0) != 0) {
    throw std::runtime_error("unexpected CSV header: " + line);
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    if (f.size() != 9) throw std::runtime_error("CSV row has " + std::to_string(f.size()) + " fields");
    CsvRow r;
    r.model = f[0];
    r.eps = std::stod(f[1]);
    r.delta = std::stod(f[2]);
    r.rounds = std::stoull(f[3]);
    r.trials = std::stoull(f[4]);
    r.failures = std::stoull(f[5]);
    r.rate_mean = std::stod(f[6]);
    r.rate_std = std::stod(f[7]);
    r.seed_count = std::stoull(f[8]);
    rows.push_back(r);
  }
  return rows;
}

}  // namespace ethr
