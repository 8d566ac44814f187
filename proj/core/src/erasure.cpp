#include "ethr/erasure.hpp"

#include <bit>
#include <stdexcept>

namespace ethr {

char mark_char(ErasureMark m) {
  switch (m) {
    case ErasureMark::None:
      return '.';
    case ErasureMark::X:
      return 'X';
    case ErasureMark::Z:
      return 'Z';
    case ErasureMark::Full:
      return 'E';
  }
  return '?';
}

ErasurePattern::ErasurePattern(std::size_t n, std::uint64_t x_flags, std::uint64_t z_flags)
    : n_(n), x_(x_flags), z_(z_flags) {
  if (n > PauliOperator::kMaxQubits) throw std::invalid_argument("pattern longer than 64 qubits");
  if ((x_flags | z_flags) & ~low_bits(n)) {
    throw std::invalid_argument("erasure flags beyond qubit count");
  }
}

ErasurePattern ErasurePattern::from_string(std::string_view text) {
  if (text.size() > PauliOperator::kMaxQubits) {
    throw std::invalid_argument("pattern longer than 64 qubits");
  }
  ErasurePattern p(text.size());
  for (std::size_t q = 0; q < text.size(); ++q) {
    switch (text[q]) {
      case '.':
      case 'I':
        break;
      case 'Z':
        p.set_mark(q, ErasureMark::Z);
        break;
      case 'X':
        p.set_mark(q, ErasureMark::X);
        break;
      case 'E':
        p.set_mark(q, ErasureMark::Full);
        break;
      default:
        throw std::invalid_argument(std::string("bad erasure character '") + text[q] + "'");
    }
  }
  return p;
}

ErasureMark ErasurePattern::mark(std::size_t q) const {
  if (q >= n_) throw std::out_of_range("qubit index out of range");
  return static_cast<ErasureMark>(((x_ >> q) & 1u) | (((z_ >> q) & 1u) << 1));
}

void ErasurePattern::set_mark(std::size_t q, ErasureMark m) {
  if (q >= n_) throw std::out_of_range("qubit index out of range");
  const std::uint64_t bit = std::uint64_t{1} << q;
  const auto v = static_cast<std::uint8_t>(m);
  x_ = (v & 1u) ? (x_ | bit) : (x_ & ~bit);
  z_ = (v & 2u) ? (z_ | bit) : (z_ & ~bit);
}

std::size_t ErasurePattern::weight() const { return std::popcount(x_ | z_); }

std::string ErasurePattern::str() const {
  std::string s(n_, '.');
  for (std::size_t q = 0; q < n_; ++q) s[q] = mark_char(mark(q));
  return s;
}

ErasurePattern compose(const ErasurePattern& p, const ErasurePattern& q) {
  if (p.n() != q.n()) throw std::invalid_argument("pattern size mismatch");
  return {p.n(), p.x_flags() | q.x_flags(), p.z_flags() | q.z_flags()};
}

std::vector<PauliOperator> compatible_paulis(const ErasurePattern& p) {
  // Enumerate submasks of the X flags and of the Z flags.
  std::vector<std::uint64_t> xs;
  std::vector<std::uint64_t> zs;
  for (std::uint64_t s = p.x_flags();; s = (s - 1) & p.x_flags()) {
    xs.push_back(s);
    if (s == 0) break;
  }
  for (std::uint64_t s = p.z_flags();; s = (s - 1) & p.z_flags()) {
    zs.push_back(s);
    if (s == 0) break;
  }
  std::vector<PauliOperator> out;
  out.reserve(xs.size() * zs.size());
  for (auto xi = xs.rbegin(); xi != xs.rend(); ++xi) {
    for (auto zi = zs.rbegin(); zi != zs.rend(); ++zi) out.emplace_back(p.n(), *xi, *zi);
  }
  return out;
}

std::string ClassTuple::str() const {
  return "[" + std::to_string(full) + "," + std::to_string(z) + "]";
}

ClassTuple classify_tuple(const ErasurePattern& p) {
  if (p.x_only_mask() != 0) {
    throw std::invalid_argument("pattern " + p.str() + " has a bare X erasure");
  }
  return {std::popcount(p.full_mask()), std::popcount(p.z_only_mask())};
}

}  // namespace ethr
