#include "ethr/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace ethr {

namespace {

void require_same_size(const PauliOperator& a, const PauliOperator& b) {
  if (a.n() != b.n()) {
    throw std::invalid_argument("Pauli size mismatch: " + std::to_string(a.n()) + " vs " +
                                std::to_string(b.n()));
  }
}

std::uint64_t mask_from_qubits(std::size_t n, std::initializer_list<int> qubits) {
  std::uint64_t mask = 0;
  for (int q : qubits) {
    if (q < 1 || static_cast<std::size_t>(q) > n) {
      throw std::out_of_range("qubit index " + std::to_string(q) + " outside 1.." +
                              std::to_string(n));
    }
    mask |= std::uint64_t{1} << (q - 1);
  }
  return mask;
}

std::string phase_prefix(Phase p) {
  switch (p) {
    case Phase::PlusOne:
      return "";
    case Phase::PlusI:
      return "i";
    case Phase::MinusOne:
      return "-";
    case Phase::MinusI:
      return "-i";
  }
  return "";
}

}  // namespace

Phase operator*(Phase a, Phase b) {
  return static_cast<Phase>((static_cast<unsigned>(a) + static_cast<unsigned>(b)) & 3u);
}

PauliOperator::PauliOperator(std::size_t n) : PauliOperator(n, 0, 0) {}

PauliOperator::PauliOperator(std::size_t n, std::uint64_t x_mask, std::uint64_t z_mask,
                             Phase phase)
    : n_(n), x_(x_mask), z_(z_mask), phase_(phase) {
  if (n > kMaxQubits) {
    throw std::invalid_argument("PauliOperator supports at most 64 qubits");
  }
  if (((x_mask | z_mask) & ~low_bits(n)) != 0) {
    throw std::invalid_argument("Pauli mask has bits beyond qubit count");
  }
}

PauliOperator PauliOperator::from_string(std::string_view text) {
  Phase phase = Phase::PlusOne;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    if (text.front() == '-') phase = Phase::MinusOne;
    text.remove_prefix(1);
  }
  if (!text.empty() && text.front() == 'i') {
    phase = phase * Phase::PlusI;
    text.remove_prefix(1);
  }

  std::size_t n = 0;
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  static constexpr std::string_view kTensor = "⊗";
  while (!text.empty()) {
    if (text.starts_with(kTensor)) {
      text.remove_prefix(kTensor.size());
      continue;
    }
    char c = text.front();
    text.remove_prefix(1);
    if (n >= kMaxQubits) throw std::invalid_argument("Pauli string longer than 64 qubits");
    std::uint64_t bit = std::uint64_t{1} << n;
    switch (c) {
      case 'I':
      case '_':
        break;
      case 'X':
        x |= bit;
        break;
      case 'Z':
        z |= bit;
        break;
      case 'Y':
        x |= bit;
        z |= bit;
        break;
      default:
        throw std::invalid_argument(std::string("bad Pauli character '") + c + "'");
    }
    ++n;
  }
  return {n, x, z, phase};
}

PauliOperator PauliOperator::x_on(std::size_t n, std::initializer_list<int> qubits) {
  return {n, mask_from_qubits(n, qubits), 0};
}

PauliOperator PauliOperator::z_on(std::size_t n, std::initializer_list<int> qubits) {
  return {n, 0, mask_from_qubits(n, qubits)};
}

std::size_t PauliOperator::weight() const { return std::popcount(x_ | z_); }

char PauliOperator::at(std::size_t q) const {
  bool x = (x_ >> q) & 1u;
  bool z = (z_ >> q) & 1u;
  if (x && z) return 'Y';
  if (x) return 'X';
  if (z) return 'Z';
  return 'I';
}

std::string PauliOperator::str() const {
  std::string out = phase_prefix(phase_);
  for (std::size_t q = 0; q < n_; ++q) out += at(q);
  return out;
}

std::string PauliOperator::tensor_str() const {
  std::string out = phase_prefix(phase_);
  for (std::size_t q = 0; q < n_; ++q) {
    if (q) out += "⊗";
    out += at(q);
  }
  return out;
}

PauliOperator multiply(const PauliOperator& a, const PauliOperator& b) {
  require_same_size(a, b);
  // (X^a Z^b)(X^c Z^d) = (-1)^{b.c} X^{a+c} Z^{b+d} per qubit.
  unsigned swaps = std::popcount(a.z_mask() & b.x_mask());
  Phase sign = (swaps & 1u) ? Phase::MinusOne : Phase::PlusOne;
  return {a.n(), a.x_mask() ^ b.x_mask(), a.z_mask() ^ b.z_mask(),
          a.phase() * b.phase() * sign};
}

bool commutes(const PauliOperator& a, const PauliOperator& b) {
  require_same_size(a, b);
  int form = std::popcount(a.x_mask() & b.z_mask()) + std::popcount(a.z_mask() & b.x_mask());
  return (form & 1) == 0;
}

std::size_t weight(const PauliOperator& a) { return a.weight(); }

}  // namespace ethr
