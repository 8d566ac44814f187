#include "ethr/gf2.hpp"

#include <stdexcept>

namespace ethr::gf2 {

Vec symplectic(const PauliOperator& p) {
  const std::size_t n = p.n();
  if (n == 64) return Vec::from_words(p.x_mask(), p.z_mask());
  // x occupies [0, n), z occupies [n, 2n).
  std::uint64_t lo = p.x_mask() | (p.z_mask() << n);
  std::uint64_t hi = n == 0 ? 0 : (p.z_mask() >> (64 - n));
  return Vec::from_words(lo, hi);
}

PauliOperator from_symplectic(std::size_t n, const Vec& v) {
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  for (std::size_t q = 0; q < n; ++q) {
    if (v.bit(q)) x |= std::uint64_t{1} << q;
    if (v.bit(n + q)) z |= std::uint64_t{1} << q;
  }
  return PauliOperator(n, x, z);
}

Vec Basis::reduce(Vec v) const {
  for (const Row& r : rows_) {
    if (v.bit(r.pivot)) v ^= r.bits;
  }
  return v;
}

bool Basis::insert(Vec v) {
  v = reduce(v);
  if (!v.any()) return false;
  rows_.push_back({v.lowest(), v});
  return true;
}

std::size_t rank(std::span<const Vec> rows) {
  Basis b;
  for (const Vec& r : rows) b.insert(r);
  return b.rank();
}

std::vector<Vec> nullspace(std::span<const Vec> rows, std::size_t cols) {
  if (cols > Vec::kBits) throw std::invalid_argument("nullspace: too many columns");
  std::vector<Vec> m(rows.begin(), rows.end());
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t sel = r;
    while (sel < m.size() && !m[sel].bit(c)) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[r], m[sel]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i != r && m[i].bit(c)) m[i] ^= m[r];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivot_cols) is_pivot[c] = true;

  std::vector<Vec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v;
    v.set(free);
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
      if (m[i].bit(free)) v.set(pivot_cols[i]);
    }
    basis.push_back(v);
  }
  return basis;
}

std::optional<std::vector<Vec>> inverse(std::span<const Vec> rows, std::size_t k) {
  if (rows.size() != k || k > 64) throw std::invalid_argument("inverse: bad dimensions");
  std::vector<Vec> a(rows.begin(), rows.end());
  std::vector<Vec> inv(k);
  for (std::size_t i = 0; i < k; ++i) inv[i].set(i);
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t sel = c;
    while (sel < k && !a[sel].bit(c)) ++sel;
    if (sel == k) return std::nullopt;
    std::swap(a[c], a[sel]);
    std::swap(inv[c], inv[sel]);
    for (std::size_t i = 0; i < k; ++i) {
      if (i != c && a[i].bit(c)) {
        a[i] ^= a[c];
        inv[i] ^= inv[c];
      }
    }
  }
  return inv;
}

}  // namespace ethr::gf2
