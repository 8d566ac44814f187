#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "ethr/polynomial.hpp"
#include "ethr/procedure.hpp"

namespace ethr {

/// How delta enters a lossy polynomial.
struct DeltaSpec {
  enum class Mode { Zero, EqualEps, Symbolic, Value };
  Mode mode = Mode::Zero;
  mpq_class value = 0;

  static DeltaSpec zero() { return {Mode::Zero, 0}; }
  static DeltaSpec equal_eps() { return {Mode::EqualEps, 0}; }
  static DeltaSpec symbolic() { return {Mode::Symbolic, 0}; }
  static DeltaSpec fixed(const mpq_class& v) { return {Mode::Value, v}; }
  /// "0", "eps", "symbolic" or a decimal / fraction such as "0.01" or "1/100".
  static DeltaSpec parse(const std::string& text);

  std::string str() const;
  FailurePolynomial apply(const FailurePolynomial& p) const;
};

/// Parses "0.01", "1e-3" or "1/100" exactly.
mpq_class parse_rational(const std::string& text);

/// Column-stochastic matrix: at(i, j) = Pr(state i | state j).
class TransitionMatrix {
 public:
  TransitionMatrix() = default;
  explicit TransitionMatrix(std::vector<std::string> states);

  const std::vector<std::string>& states() const { return states_; }
  std::size_t size() const { return states_.size(); }
  std::size_t index(const std::string& label) const;

  const FailurePolynomial& at(std::size_t to, std::size_t from) const { return p_[to][from]; }
  FailurePolynomial& at(std::size_t to, std::size_t from) { return p_[to][from]; }
  const FailurePolynomial& at(const std::string& to, const std::string& from) const {
    return p_[index(to)][index(from)];
  }
  void set(const std::string& to, const std::string& from, FailurePolynomial v) {
    p_[index(to)][index(from)] = std::move(v);
  }

  FailurePolynomial column_sum(std::size_t from) const;
  TransitionMatrix map(const DeltaSpec& d) const;

 private:
  std::vector<std::string> states_;
  std::vector<std::vector<FailurePolynomial>> p_;
};

using InitialDistribution = std::vector<FailurePolynomial>;

struct Chain {
  Model model = Model::Ideal;
  TransitionMatrix matrix;
  InitialDistribution initial;
  std::string clean = "0";
  std::string fail = "fail";

  Chain with_delta(const DeltaSpec& d) const;
};

std::size_t default_rounds(Model m);

/// States 0, 1, 2, 3, fail with the tabulated ideal transitions and initial distribution.
Chain build_ideal_chain();

/// States [0,0] .. [1,2], fail with the tabulated lossy transitions; delta substituted per spec.
Chain build_lossy_chain(const DeltaSpec& delta);

/// P^rounds * init.
InitialDistribution iterate(const TransitionMatrix& m, const InitialDistribution& init,
                            std::size_t rounds);

/// Sum of all non-clean state probabilities after `rounds` applications.
FailurePolynomial recursion_polynomial(const Chain& chain, std::size_t rounds);
FailurePolynomial recursion_polynomial(Model model, std::size_t rounds,
                                       const DeltaSpec& delta = DeltaSpec::zero());

/// Failure probability split by starting state: entry s is init[s] * (1 - Pr(clean after N | s)).
std::vector<FailurePolynomial> failure_by_start(const Chain& chain, std::size_t rounds);

}  // namespace ethr
