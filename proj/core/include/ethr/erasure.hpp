#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ethr/pauli.hpp"

namespace ethr {

/// Per-qubit erasure mark. Bit 0 flags a possible X, bit 1 a possible Z.
enum class ErasureMark : std::uint8_t { None = 0, X = 1, Z = 2, Full = 3 };

inline ErasureMark compose(ErasureMark a, ErasureMark b) {
  return static_cast<ErasureMark>(static_cast<std::uint8_t>(a) | static_cast<std::uint8_t>(b));
}

char mark_char(ErasureMark m);

/// Erasure pattern over n qubits stored as the two flag arrays.
class ErasurePattern {
 public:
  explicit ErasurePattern(std::size_t n = 0) : ErasurePattern(n, 0, 0) {}
  ErasurePattern(std::size_t n, std::uint64_t x_flags, std::uint64_t z_flags);

  /// "E.Z....": E full, Z phase erasure, X bit-flip erasure, '.' clean.
  static ErasurePattern from_string(std::string_view text);
  static ErasurePattern z_marks(std::size_t n, std::uint64_t mask) { return {n, 0, mask}; }
  static ErasurePattern full_marks(std::size_t n, std::uint64_t mask) { return {n, mask, mask}; }

  std::size_t n() const { return n_; }
  std::uint64_t x_flags() const { return x_; }
  std::uint64_t z_flags() const { return z_; }
  std::uint64_t support() const { return x_ | z_; }
  std::uint64_t full_mask() const { return x_ & z_; }
  std::uint64_t z_only_mask() const { return z_ & ~x_; }
  std::uint64_t x_only_mask() const { return x_ & ~z_; }

  ErasureMark mark(std::size_t q) const;
  void set_mark(std::size_t q, ErasureMark m);
  void add_mark(std::size_t q, ErasureMark m) { set_mark(q, compose(mark(q), m)); }

  std::size_t weight() const;
  bool is_clean() const { return (x_ | z_) == 0; }

  std::string str() const;

  friend bool operator==(const ErasurePattern&, const ErasurePattern&) = default;
  friend std::strong_ordering operator<=>(const ErasurePattern& a, const ErasurePattern& b) {
    return a.str() <=> b.str();
  }

 private:
  std::size_t n_;
  std::uint64_t x_;
  std::uint64_t z_;
};

ErasurePattern compose(const ErasurePattern& p, const ErasurePattern& q);

/// Every Pauli with Z-part on marked qubits and X-part on X-flagged qubits (identity first).
std::vector<PauliOperator> compatible_paulis(const ErasurePattern& p);

/// [m, n]: m full erasures, n Z erasures.
struct ClassTuple {
  int full = 0;
  int z = 0;
  friend auto operator<=>(const ClassTuple&, const ClassTuple&) = default;
  std::string str() const;
};

ClassTuple classify_tuple(const ErasurePattern& p);

}  // namespace ethr
