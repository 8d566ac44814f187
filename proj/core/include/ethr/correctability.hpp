#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ethr/code.hpp"
#include "ethr/erasure.hpp"

namespace ethr {

/// Knill-Laflamme test: false iff some compatible Pauli lies in N(S) \ S.
bool is_correctable(const StabilizerCode& code, const ErasurePattern& p);

/// Independent check by dimension counting: dim(V ∩ N(S)) == dim(V ∩ S), V the erasable span.
bool is_correctable_rank(const StabilizerCode& code, const ErasurePattern& p);

struct CorrectableCount {
  std::size_t correctable = 0;
  std::size_t total = 0;
  friend bool operator==(const CorrectableCount&, const CorrectableCount&) = default;
};

/// Enumerates every pattern of the given weight whose marks are all `kind`.
CorrectableCount count_correctable(const StabilizerCode& code, std::size_t weight,
                                   ErasureMark kind);

/// Precomputed correctability of every (x_flags, z_flags) pair; requires n <= 10.
class CorrectabilityTable {
 public:
  explicit CorrectabilityTable(const StabilizerCode& code);

  std::size_t n() const { return n_; }
  bool correctable(const ErasurePattern& p) const {
    return bits_[(p.x_flags() << n_) | p.z_flags()];
  }
  bool correctable(std::uint64_t x_flags, std::uint64_t z_flags) const {
    return bits_[(x_flags << n_) | z_flags];
  }

 private:
  std::size_t n_;
  std::vector<bool> bits_;
};

/// One admissible (start pattern, target, stabilizer) choice and its single-failure outcomes.
struct ReachableChoice {
  ErasurePattern start;
  std::size_t target = 0;
  std::uint64_t stabilizer_support = 0;
  std::size_t correctable = 0;
  std::size_t total = 0;
};

struct ReachableReport {
  mpq_class fraction;
  std::vector<ReachableChoice> choices;
  /// True when every choice yields the same fraction.
  bool uniform = true;
};

/// Starts from every Z pattern of weight `start_weight`, every target and every minimal-overlap
/// X-type stabilizer through the target; one teleportation failure Z-marks one companion.
ReachableReport reachable_fraction_after_one_failure(const StabilizerCode& code,
                                                     std::size_t start_weight = 2);

}  // namespace ethr
