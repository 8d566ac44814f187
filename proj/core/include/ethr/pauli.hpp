#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>

namespace ethr {

/// Global phase of a Pauli operator, stored as a power of i.
enum class Phase : std::uint8_t { PlusOne = 0, PlusI = 1, MinusOne = 2, MinusI = 3 };

Phase operator*(Phase a, Phase b);

/// An n-qubit Pauli operator i^k * X^x Z^z in symplectic form.
///
/// Bit q of x_mask / z_mask refers to qubit q (0-based). Each qubit carries
/// X^x_q Z^z_q, so a qubit with both bits set carries Y = XZ, and Y*Y = -I.
class PauliOperator {
 public:
  static constexpr std::size_t kMaxQubits = 64;

  explicit PauliOperator(std::size_t n = 0);
  PauliOperator(std::size_t n, std::uint64_t x_mask, std::uint64_t z_mask,
                Phase phase = Phase::PlusOne);

  static PauliOperator identity(std::size_t n) { return PauliOperator(n); }

  /// Parses "XIZY", optionally prefixed by "+", "-", "i", "+i" or "-i".
  /// The tensor form "X⊗I⊗Z" is accepted as well.
  static PauliOperator from_string(std::string_view text);

  /// X (or Z) on the listed 1-based qubits.
  static PauliOperator x_on(std::size_t n, std::initializer_list<int> qubits);
  static PauliOperator z_on(std::size_t n, std::initializer_list<int> qubits);
  static PauliOperator x_on_mask(std::size_t n, std::uint64_t mask) { return {n, mask, 0}; }
  static PauliOperator z_on_mask(std::size_t n, std::uint64_t mask) { return {n, 0, mask}; }

  std::size_t n() const { return n_; }
  std::uint64_t x_mask() const { return x_; }
  std::uint64_t z_mask() const { return z_; }
  Phase phase() const { return phase_; }
  std::uint64_t support() const { return x_ | z_; }
  std::size_t weight() const;
  bool is_identity() const { return x_ == 0 && z_ == 0 && phase_ == Phase::PlusOne; }

  /// 'I', 'X', 'Y' or 'Z' at 0-based qubit q.
  char at(std::size_t q) const;

  PauliOperator with_phase(Phase p) const { return {n_, x_, z_, p}; }

  /// Compact form, e.g. "-XIZ".
  std::string str() const;
  /// Tensor form, e.g. "-X⊗I⊗Z".
  std::string tensor_str() const;

  friend bool operator==(const PauliOperator&, const PauliOperator&) = default;

 private:
  std::size_t n_ = 0;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
  Phase phase_ = Phase::PlusOne;
};

PauliOperator multiply(const PauliOperator& a, const PauliOperator& b);
inline PauliOperator operator*(const PauliOperator& a, const PauliOperator& b) {
  return multiply(a, b);
}

/// True iff the symplectic product of a and b vanishes.
bool commutes(const PauliOperator& a, const PauliOperator& b);

std::size_t weight(const PauliOperator& a);

/// Mask with the low n bits set.
constexpr std::uint64_t low_bits(std::size_t n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

}  // namespace ethr
