#include "ethr/code.hpp"

#include <bit>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ethr/gf2.hpp"

namespace ethr {

namespace {

std::uint64_t mask_of(std::initializer_list<int> qubits) {
  std::uint64_t m = 0;
  for (int q : qubits) m |= std::uint64_t{1} << (q - 1);
  return m;
}

bool parity(std::uint64_t v) { return (std::popcount(v) & 1) != 0; }

}  // namespace

ClassicalCode::ClassicalCode(std::size_t n, std::vector<std::uint64_t> rows)
    : n_(n), rows_(std::move(rows)) {
  if (n == 0 || n > PauliOperator::kMaxQubits) {
    throw std::invalid_argument("classical code length must be in 1..64");
  }
  gf2::Basis basis;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r] & ~low_bits(n)) throw std::invalid_argument("parity row wider than code length");
    if (!basis.insert(gf2::Vec::from_words(rows_[r]))) {
      throw std::invalid_argument("parity check row " + std::to_string(r + 1) +
                                  " is linearly dependent on earlier rows");
    }
  }
}

ClassicalCode ClassicalCode::parse(std::string_view text) {
  std::vector<std::uint64_t> rows;
  std::size_t n = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::uint64_t row = 0;
    std::size_t width = 0;
    bool comment = false;
    for (char c : line) {
      if (c == '#') {
        comment = true;
        break;
      }
      if (c == ' ' || c == '\t' || c == '\r') continue;
      if (c != '0' && c != '1') throw std::invalid_argument(std::string("bad matrix character '") + c + "'");
      if (width >= PauliOperator::kMaxQubits) throw std::invalid_argument("matrix row longer than 64");
      if (c == '1') row |= std::uint64_t{1} << width;
      ++width;
    }
    if (width == 0) {
      if (comment || line.find_first_not_of(" \t\r") == std::string::npos) continue;
    }
    if (n == 0) n = width;
    if (width != n) throw std::invalid_argument("matrix rows have differing lengths");
    rows.push_back(row);
  }
  if (rows.empty()) throw std::invalid_argument("matrix has no rows");
  return {n, std::move(rows)};
}

ClassicalCode ClassicalCode::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

ClassicalCode ClassicalCode::hamming7() {
  return {7, {mask_of({1, 2, 3, 4}), mask_of({1, 2, 5, 6}), mask_of({1, 3, 5, 7})}};
}

ClassicalCode ClassicalCode::hamming7_binary() {
  std::vector<std::uint64_t> rows(3, 0);
  for (int j = 1; j <= 7; ++j) {
    for (int b = 0; b < 3; ++b) {
      if ((j >> b) & 1) rows[b] |= std::uint64_t{1} << (j - 1);
    }
  }
  return {7, rows};
}

bool ClassicalCode::self_orthogonal() const {
  for (auto a : rows_) {
    for (auto b : rows_) {
      if (parity(a & b)) return false;
    }
  }
  return true;
}

StabilizerCode::StabilizerCode(std::string name, std::size_t n,
                               std::vector<PauliOperator> generators,
                               std::vector<PauliOperator> logical_x,
                               std::vector<PauliOperator> logical_z)
    : name_(std::move(name)),
      n_(n),
      generators_(std::move(generators)),
      logical_x_(std::move(logical_x)),
      logical_z_(std::move(logical_z)) {
  auto check_size = [&](const PauliOperator& p) {
    if (p.n() != n_) throw std::invalid_argument("operator size differs from code length");
  };
  for (const auto& g : generators_) check_size(g);
  for (const auto& g : logical_x_) check_size(g);
  for (const auto& g : logical_z_) check_size(g);
  if (generators_.size() >= 64) throw std::invalid_argument("too many generators");
  if (logical_x_.size() != logical_z_.size()) {
    throw std::invalid_argument("logical X and Z counts differ");
  }
  if (generators_.size() + logical_x_.size() != n_) {
    throw std::invalid_argument("generator and logical counts do not add up to n");
  }

  gf2::Basis basis;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    for (std::size_t j = i + 1; j < generators_.size(); ++j) {
      if (!commutes(generators_[i], generators_[j])) {
        throw std::invalid_argument("generators " + std::to_string(i + 1) + " and " +
                                    std::to_string(j + 1) + " anticommute");
      }
    }
    if (!basis.insert(gf2::symplectic(generators_[i]))) {
      throw std::invalid_argument("generator " + std::to_string(i + 1) + " is not independent");
    }
  }

  for (std::size_t i = 0; i < k(); ++i) {
    for (const auto& g : generators_) {
      if (!commutes(g, logical_x_[i]) || !commutes(g, logical_z_[i])) {
        throw std::invalid_argument("logical operator outside the normalizer");
      }
    }
    for (std::size_t j = 0; j < k(); ++j) {
      if (!commutes(logical_x_[i], logical_x_[j]) || !commutes(logical_z_[i], logical_z_[j])) {
        throw std::invalid_argument("logical operators of the same type anticommute");
      }
      if (commutes(logical_x_[i], logical_z_[j]) == (i == j)) {
        throw std::invalid_argument("logical X/Z pairing is not canonical");
      }
    }
  }

  const std::size_t r = generators_.size();
  group_.reserve(std::size_t{1} << r);
  for (std::uint64_t c = 0; c < (std::uint64_t{1} << r); ++c) {
    PauliOperator p(n_);
    for (std::size_t g = 0; g < r; ++g) {
      if ((c >> g) & 1u) p = p * generators_[g];
    }
    group_.push_back(p);
  }
}

bool StabilizerCode::in_normalizer(const PauliOperator& p) const {
  if (p.n() != n_) throw std::invalid_argument("operator size differs from code length");
  for (const auto& g : generators_) {
    if (!commutes(g, p)) return false;
  }
  return true;
}

bool StabilizerCode::in_stabilizer(const PauliOperator& p) const {
  if (p.n() != n_) throw std::invalid_argument("operator size differs from code length");
  if (p.phase() == Phase::PlusI || p.phase() == Phase::MinusI) return false;
  gf2::Basis basis;
  for (const auto& g : generators_) basis.insert(gf2::symplectic(g));
  return basis.contains(gf2::symplectic(p));
}

bool in_normalizer(const StabilizerCode& code, const PauliOperator& p) {
  return code.in_normalizer(p);
}

bool in_stabilizer(const StabilizerCode& code, const PauliOperator& p) {
  return code.in_stabilizer(p);
}

StabilizerCode steane() {
  const auto h = ClassicalCode::hamming7().rows();
  std::vector<PauliOperator> gens;
  for (auto r : h) gens.push_back(PauliOperator::x_on_mask(7, r));
  for (auto r : h) gens.push_back(PauliOperator::z_on_mask(7, r));
  return {"steane", 7, gens, {PauliOperator::x_on(7, {5, 6, 7})},
          {PauliOperator::z_on(7, {5, 6, 7})}};
}

StabilizerCode grassl() {
  using P = PauliOperator;
  return {"grassl",
          4,
          {P::from_string("XXXX"), P::from_string("ZZZZ")},
          {P::from_string("XXII"), P::from_string("XIIX")},
          {P::from_string("ZIIZ"), P::from_string("ZZII")}};
}

StabilizerCode css_from_parity_check(const ClassicalCode& h, std::string name) {
  const std::size_t n = h.n();
  const auto& rows = h.rows();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i; j < rows.size(); ++j) {
      if (parity(rows[i] & rows[j])) {
        throw std::invalid_argument("parity check rows " + std::to_string(i + 1) + " and " +
                                    std::to_string(j + 1) +
                                    " have odd overlap; the dual code is not contained in the code");
      }
    }
  }

  // Logical representatives: ker H modulo rowspace H.
  std::vector<gf2::Vec> hv;
  gf2::Basis span;
  for (auto r : rows) {
    hv.push_back(gf2::Vec::from_words(r));
    span.insert(hv.back());
  }
  std::vector<std::uint64_t> reps;
  for (const auto& v : gf2::nullspace(hv, n)) {
    if (span.insert(v)) reps.push_back(v.lo());
  }
  const std::size_t k = reps.size();

  // Pair X and Z logicals through the inverse Gram matrix.
  std::vector<gf2::Vec> gram(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) gram[i].set(j, parity(reps[i] & reps[j]));
  }
  auto inv = gf2::inverse(gram, k);
  if (!inv) throw std::logic_error("logical Gram matrix is singular");

  std::vector<PauliOperator> gens;
  for (auto r : rows) gens.push_back(PauliOperator::x_on_mask(n, r));
  for (auto r : rows) gens.push_back(PauliOperator::z_on_mask(n, r));
  std::vector<PauliOperator> lx;
  std::vector<PauliOperator> lz;
  for (std::size_t i = 0; i < k; ++i) {
    lx.push_back(PauliOperator::x_on_mask(n, reps[i]));
    std::uint64_t z = 0;
    for (std::size_t j = 0; j < k; ++j) {
      if ((*inv)[i].bit(j)) z ^= reps[j];
    }
    lz.push_back(PauliOperator::z_on_mask(n, z));
  }
  return {std::move(name), n, gens, lx, lz};
}

}  // namespace ethr
