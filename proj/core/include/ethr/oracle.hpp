#pragma once

#include <cstddef>
#include <map>
#include <tuple>
#include <string>
#include <vector>

#include "ethr/chain.hpp"
#include "ethr/polynomial.hpp"
#include "ethr/procedure.hpp"

namespace ethr {

/// Replays a fixed prefix of failure decisions, then answers "no failure" and records each query.
class ScriptedSource {
 public:
  explicit ScriptedSource(const std::vector<bool>& prefix) : prefix_(prefix) {}

  bool fail(Event e) {
    const bool v = trace_.size() < prefix_.size() ? prefix_[trace_.size()] : false;
    trace_.push_back({e, v});
    return v;
  }

  struct Decision {
    Event event;
    bool failed;
  };
  const std::vector<Decision>& trace() const { return trace_; }

 private:
  const std::vector<bool>& prefix_;
  std::vector<Decision> trace_;
};

/// Distribution over destination labels, exact in eps and delta.
using ClassRow = std::map<std::string, FailurePolynomial>;

/// Runs `body(source) -> label` over every leaf of the decision tree and sums path weights.
template <class Body>
ClassRow enumerate_paths(Body&& body);

struct OracleRow {
  std::string from;
  ClassRow row;                    // averaged over every pattern in the class
  std::size_t patterns = 0;        // patterns in the class
  std::size_t choices = 0;         // (pattern, admissible selection) pairs examined
  bool uniform = true;             // every pattern and selection gave the same row
  std::vector<std::string> notes;  // first few non-uniform cases
};

/// Enumerates every elementary failure combination of one correction round from every pattern of
/// the class (and every admissible stabilizer choice) and classifies each outcome.
OracleRow derive_transitions_by_bruteforce(const Procedure& proc, const std::string& from);

/// Distribution of the class of the initial pattern.
ClassRow derive_initial_by_bruteforce(const Procedure& proc, int coins = 1);

/// Chain whose rows and initial distribution come from the brute-force oracle.
/// States and their order match the tabulated chain of the same model.
Chain build_procedure_chain(const Procedure& proc, int coins = 1);

struct RowDiscrepancy {
  std::string from;
  std::string to;
  FailurePolynomial tabulated;
  FailurePolynomial oracle;
};

/// Entries where the two chains differ, column by column.
std::vector<RowDiscrepancy> compare_chains(const Chain& tabulated, const Chain& oracle);

// --- implementation ---

template <class Body>
ClassRow enumerate_paths(Body&& body) {
  struct Key {
    std::string label;
    std::size_t ef, eo, df, dok;
    bool operator<(const Key& o) const {
      return std::tie(label, ef, eo, df, dok) < std::tie(o.label, o.ef, o.eo, o.df, o.dok);
    }
  };
  std::map<Key, long> counts;
  std::vector<bool> prefix;
  for (;;) {
    ScriptedSource src(prefix);
    std::string label = body(src);
    Key k{std::move(label), 0, 0, 0, 0};
    for (const auto& d : src.trace()) {
      if (d.event == Event::Gate) {
        (d.failed ? k.ef : k.eo)++;
      } else {
        (d.failed ? k.df : k.dok)++;
      }
    }
    ++counts[k];
    // Advance to the next leaf: flip the deepest unflipped "no failure" decision.
    const auto& t = src.trace();
    std::size_t i = t.size();
    while (i > 0 && t[i - 1].failed) --i;
    if (i == 0) break;
    prefix.assign(i, false);
    for (std::size_t j = 0; j + 1 < i; ++j) prefix[j] = t[j].failed;
    prefix[i - 1] = true;
  }
  ClassRow row;
  for (const auto& [k, n] : counts) {
    row[k.label] += FailurePolynomial(n) * path_weight(k.ef, k.eo, k.df, k.dok);
  }
  return row;
}

}  // namespace ethr
