#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ethr/pauli.hpp"

namespace ethr::gf2 {

/// Bit vector over GF(2) with room for 128 coordinates (a symplectic 64-qubit vector).
class Vec {
 public:
  static constexpr std::size_t kBits = 128;

  Vec() = default;
  static Vec from_words(std::uint64_t lo, std::uint64_t hi = 0) {
    Vec v;
    v.w_ = {lo, hi};
    return v;
  }

  bool bit(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool value = true) {
    std::uint64_t m = std::uint64_t{1} << (i & 63);
    if (value) {
      w_[i >> 6] |= m;
    } else {
      w_[i >> 6] &= ~m;
    }
  }
  void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  bool any() const { return (w_[0] | w_[1]) != 0; }
  std::size_t popcount() const { return std::popcount(w_[0]) + std::popcount(w_[1]); }
  /// Index of the lowest set bit; kBits when zero.
  std::size_t lowest() const {
    if (w_[0]) return std::countr_zero(w_[0]);
    if (w_[1]) return 64 + std::countr_zero(w_[1]);
    return kBits;
  }
  bool dot(const Vec& o) const { return ((*this & o).popcount() & 1u) != 0; }

  std::uint64_t lo() const { return w_[0]; }
  std::uint64_t hi() const { return w_[1]; }

  Vec& operator^=(const Vec& o) {
    w_[0] ^= o.w_[0];
    w_[1] ^= o.w_[1];
    return *this;
  }
  friend Vec operator^(Vec a, const Vec& b) { return a ^= b; }
  friend Vec operator&(const Vec& a, const Vec& b) {
    return from_words(a.w_[0] & b.w_[0], a.w_[1] & b.w_[1]);
  }
  friend bool operator==(const Vec&, const Vec&) = default;

 private:
  std::array<std::uint64_t, 2> w_{};
};

/// Symplectic image of a Pauli operator: x bits at [0, n), z bits at [n, 2n). Phase dropped.
Vec symplectic(const PauliOperator& p);
PauliOperator from_symplectic(std::size_t n, const Vec& v);

/// Incrementally built echelon basis of a subspace.
class Basis {
 public:
  /// Adds v; returns false if v was already in the span.
  bool insert(Vec v);
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const { return !reduce(v).any(); }
  std::size_t rank() const { return rows_.size(); }

 private:
  struct Row {
    std::size_t pivot;
    Vec bits;
  };
  std::vector<Row> rows_;
};

std::size_t rank(std::span<const Vec> rows);

/// Basis of {v : row . v = 0 for every row}, over the first `cols` coordinates.
std::vector<Vec> nullspace(std::span<const Vec> rows, std::size_t cols);

/// Inverse of a k x k matrix given as rows (bit j of row i is entry (i, j)).
std::optional<std::vector<Vec>> inverse(std::span<const Vec> rows, std::size_t k);

}  // namespace ethr::gf2
