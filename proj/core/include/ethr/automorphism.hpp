#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "ethr/code.hpp"
#include "ethr/erasure.hpp"
#include "ethr/procedure.hpp"

namespace ethr {

/// Qubit permutation; image()[i] is where 0-based qubit i is sent.
class Permutation {
 public:
  explicit Permutation(std::size_t n = 0);
  explicit Permutation(std::vector<std::uint8_t> image);

  /// Cycle notation with 1-based points, e.g. "(2,3)(4,6,5,7)"; (a,b,c) sends a to b to c to a.
  static Permutation from_cycles(std::size_t n, std::string_view cycles);

  std::size_t n() const { return image_.size(); }
  const std::vector<std::uint8_t>& image() const { return image_; }
  std::size_t operator()(std::size_t q) const { return image_[q]; }

  std::uint64_t apply(std::uint64_t mask) const;
  PauliOperator apply(const PauliOperator& p) const;
  ErasurePattern apply(const ErasurePattern& p) const;

  Permutation inverse() const;
  bool is_identity() const;
  std::string cycles() const;

  /// (a * b)(q) = a(b(q)): b acts first.
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint8_t> image_;
};

class PermutationGroup {
 public:
  PermutationGroup(std::size_t n, std::vector<Permutation> generators);

  /// One generator per non-empty line in cycle notation; '#' starts a comment.
  static PermutationGroup load(std::size_t n, const std::filesystem::path& path);

  std::size_t degree() const { return n_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  /// Sorted element list, computed on first use.
  const std::vector<Permutation>& elements() const;
  std::size_t order() const { return elements().size(); }
  bool contains(const Permutation& p) const;

 private:
  std::size_t n_;
  std::vector<Permutation> generators_;
  mutable std::vector<Permutation> elements_;
};

/// True iff the permutation maps every stabilizer generator into the stabilizer group.
bool preserves_stabilizer(const StabilizerCode& code, const Permutation& p);

/// All stabilizer-preserving qubit permutations by exhaustive search (n <= 9).
PermutationGroup permutation_automorphisms(const StabilizerCode& code);

/// Permutation automorphism group of steane(); order 168.
PermutationGroup steane_permutation_group();

/// Generators (1,2)(5,6), (2,4)(3,5), (2,3)(4,6,5,7), (4,5)(6,7), (4,6)(5,7).
/// They preserve the CSS code of ClassicalCode::hamming7_binary().
std::vector<Permutation> binary_hamming_generators();

struct PatternOrbit {
  ErasurePattern representative;
  std::vector<ErasurePattern> members;
  std::size_t size() const { return members.size(); }
  std::size_t weight() const { return representative.weight(); }
  ClassTuple tuple() const { return classify_tuple(representative); }
  bool correctable = false;
};

/// Orbit of p; the representative is the lexicographically least string form.
PatternOrbit orbit(const PermutationGroup& group, const ErasurePattern& p);

/// A chain state: merged orbits sharing one label.
struct PatternClass {
  std::string label;  // "0".."3" (ideal), "[m,n]" (lossy) or "fail"
  std::vector<PatternOrbit> orbits;
  std::size_t size() const;
  bool is_fail() const { return label == "fail"; }
};

/// Label of a pattern in the chain state space ("fail" when uncorrectable or too heavy).
std::string class_label(const Procedure& proc, const ErasurePattern& p);

/// Partitions all Z-marked (ideal) or Z/full-marked (lossy) patterns into orbits and merges them
/// into chain states, ordered by weight then label, with "fail" last.
std::vector<PatternClass> classify_all(const PermutationGroup& group, const Procedure& proc);

/// Every pattern of the mark family used by the model.
std::vector<ErasurePattern> all_patterns(std::size_t n, Model model);

}  // namespace ethr
