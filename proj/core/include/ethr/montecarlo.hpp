#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "ethr/procedure.hpp"

namespace ethr {

/// SplitMix64 generator.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

/// Seed of the stream for one trial, a hash of (master seed, seed index, trial index).
std::uint64_t trial_stream_seed(std::uint64_t master_seed, std::uint64_t seed_index,
                                std::uint64_t trial_index);

/// Failure source drawing independent coins: gates at rate eps, detectors at rate delta.
class RandomSource {
 public:
  RandomSource(std::uint64_t seed, double eps, double delta) : rng_(seed), eps_(eps), delta_(delta) {}
  bool fail(Event e) { return rng_.uniform() < (e == Event::Gate ? eps_ : delta_); }

 private:
  SplitMix64 rng_;
  double eps_;
  double delta_;
};

struct SimConfig {
  Model model = Model::Ideal;
  double eps = 0.0;
  double delta = 0.0;
  std::size_t max_rounds = 6;
  std::size_t min_failures = 1000;
  /// Per seed: at least max(min_trials, min_trials_scale / eps) trials before stopping on failures.
  std::size_t min_trials = 0;
  double min_trials_scale = 10.0;
  /// Per seed hard cap; 0 means max(10^6, 10 / eps).
  std::size_t max_trials = 0;
  std::size_t seeds = 20;
  std::uint64_t master_seed = 1;
  int coins = 1;
  std::size_t threads = 1;
  /// Stopping is checked only at batch boundaries, which keeps results thread-independent.
  std::size_t batch = 8192;

  static SimConfig defaults(Model m);
  std::size_t effective_min_trials() const;
  std::size_t effective_max_trials() const;
  void validate() const;
};

enum class BlockResult { Clean, Fail, Residual };

/// Initial pattern, then up to max_rounds correction steps.
template <class Source>
BlockResult run_block(const Procedure& proc, std::size_t max_rounds, Source& src, int coins = 1) {
  ErasurePattern p = proc.initial_pattern(src, coins);
  for (std::size_t r = 0;; ++r) {
    switch (proc.classify(p)) {
      case Terminal::Clean:
        return BlockResult::Clean;
      case Terminal::Fail:
        return BlockResult::Fail;
      case Terminal::Continue:
        break;
    }
    if (r == max_rounds) return BlockResult::Residual;
    p = proc.step(p, src).pattern;
  }
}

struct SeedStats {
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;  // failed or residual blocks
  double rate() const { return trials ? static_cast<double>(failures) / trials : 0.0; }
};

struct SimStats {
  Model model = Model::Ideal;
  double eps = 0.0;
  double delta = 0.0;
  std::size_t rounds = 0;
  std::vector<SeedStats> per_seed;

  std::uint64_t trials() const;
  std::uint64_t failures() const;
  /// Failures over trials, all seeds pooled.
  double pooled_rate() const;
  /// Mean and sample standard deviation of the per-seed rates.
  double rate_mean() const;
  double rate_std() const;
};

/// Runs one seed until its stopping rule fires.
SeedStats run_seed(const Procedure& proc, const SimConfig& config, std::uint64_t seed_index);

/// All seeds of one configuration; seeds are spread across config.threads threads.
SimStats simulate(const Procedure& proc, const SimConfig& config);

/// One SimStats per grid value of eps. When delta_equals_eps is set, delta follows eps.
std::vector<SimStats> sweep(const Procedure& proc, const SimConfig& config,
                            const std::vector<double>& eps_grid, bool delta_equals_eps = false);

/// Counts destination class labels of single correction steps from a fixed pattern.
std::map<std::string, std::uint64_t> sample_transitions(const Procedure& proc,
                                                        const ErasurePattern& from, double eps,
                                                        double delta, std::uint64_t steps,
                                                        std::uint64_t seed);

/// Header: model,eps,delta,rounds,trials,failures,rate_mean,rate_std,seed_count
void write_csv(std::ostream& out, const std::vector<SimStats>& rows);

/// Shortest round-trip decimal form of a double.
std::string format_double(double v);

struct CsvRow {
  std::string model;
  double eps = 0.0;
  double delta = 0.0;
  std::size_t rounds = 0;
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  double rate_mean = 0.0;
  double rate_std = 0.0;
  std::size_t seed_count = 0;
};

std::vector<CsvRow> read_csv(std::istream& in);

}  // namespace ethr
