#include "ethr/correctability.hpp"

#include <bit>
#include <stdexcept>

#include "ethr/gf2.hpp"
#include "ethr/procedure.hpp"

namespace ethr {

namespace {

void require_size(const StabilizerCode& code, const ErasurePattern& p) {
  if (code.n() != p.n()) throw std::invalid_argument("pattern size differs from code length");
}

gf2::Basis stabilizer_basis(const StabilizerCode& code) {
  gf2::Basis b;
  for (const auto& g : code.generators()) b.insert(gf2::symplectic(g));
  return b;
}

bool correctable_with(const StabilizerCode& code, const gf2::Basis& stab, const ErasurePattern& p) {
  for (const auto& a : compatible_paulis(p)) {
    if (a.is_identity()) continue;
    if (code.in_normalizer(a) && !stab.contains(gf2::symplectic(a))) return false;
  }
  return true;
}

}  // namespace

bool is_correctable(const StabilizerCode& code, const ErasurePattern& p) {
  require_size(code, p);
  return correctable_with(code, stabilizer_basis(code), p);
}

bool is_correctable_rank(const StabilizerCode& code, const ErasurePattern& p) {
  require_size(code, p);
  const std::size_t n = code.n();
  // Basis of V: unit vectors on flagged coordinates.
  std::vector<gf2::Vec> v;
  for (std::size_t q = 0; q < n; ++q) {
    if ((p.x_flags() >> q) & 1u) {
      gf2::Vec e;
      e.set(q);
      v.push_back(e);
    }
    if ((p.z_flags() >> q) & 1u) {
      gf2::Vec e;
      e.set(n + q);
      v.push_back(e);
    }
  }
  // dim(V ∩ N(S)) = dim V - rank of the symplectic pairing between generators and V.
  std::vector<gf2::Vec> pairing;
  for (const auto& g : code.generators()) {
    gf2::Vec row;
    for (std::size_t i = 0; i < v.size(); ++i) {
      PauliOperator e = gf2::from_symplectic(n, v[i]);
      if (!commutes(g, e)) row.set(i);
    }
    pairing.push_back(row);
  }
  const std::size_t dim_vn = v.size() - gf2::rank(pairing);

  // dim(V ∩ S) = dim V + dim S - dim(V + S).
  std::vector<gf2::Vec> all = v;
  for (const auto& g : code.generators()) all.push_back(gf2::symplectic(g));
  const std::size_t dim_vs = v.size() + code.generators().size() - gf2::rank(all);
  return dim_vn == dim_vs;
}

CorrectableCount count_correctable(const StabilizerCode& code, std::size_t weight,
                                   ErasureMark kind) {
  const std::size_t n = code.n();
  if (weight > n) throw std::invalid_argument("weight exceeds code length");
  const auto stab = stabilizer_basis(code);
  CorrectableCount c;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    if (static_cast<std::size_t>(std::popcount(s)) != weight) continue;
    const auto m = static_cast<std::uint8_t>(kind);
    ErasurePattern p(n, (m & 1u) ? s : 0, (m & 2u) ? s : 0);
    ++c.total;
    if (correctable_with(code, stab, p)) ++c.correctable;
  }
  return c;
}

CorrectabilityTable::CorrectabilityTable(const StabilizerCode& code) : n_(code.n()) {
  if (n_ > 10) throw std::invalid_argument("correctability table limited to 10 qubits");
  const auto stab = stabilizer_basis(code);
  const std::uint64_t side = std::uint64_t{1} << n_;
  bits_.assign(side * side, false);
  for (std::uint64_t x = 0; x < side; ++x) {
    for (std::uint64_t z = 0; z < side; ++z) {
      bits_[(x << n_) | z] = correctable_with(code, stab, ErasurePattern(n_, x, z));
    }
  }
}

ReachableReport reachable_fraction_after_one_failure(const StabilizerCode& code,
                                                     std::size_t start_weight) {
  const std::size_t n = code.n();
  const auto stab = stabilizer_basis(code);
  ReachableReport report;
  std::size_t good = 0;
  std::size_t total = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    if (static_cast<std::size_t>(std::popcount(s)) != start_weight) continue;
    const auto start = ErasurePattern::z_marks(n, s);
    for (const auto& sel : admissible_selections(code, start, CorrectionKind::Z)) {
      ReachableChoice choice{start, sel.target, sel.support, 0, 0};
      std::uint64_t companions = sel.support & ~(std::uint64_t{1} << sel.target);
      for (std::uint64_t rest = companions; rest; rest &= rest - 1) {
        std::uint64_t c = rest & (~rest + 1);
        ErasurePattern out = ErasurePattern::z_marks(n, s | c);
        ++choice.total;
        if (out.weight() == start_weight + 1 && correctable_with(code, stab, out)) {
          ++choice.correctable;
        }
      }
      good += choice.correctable;
      total += choice.total;
      report.choices.push_back(choice);
    }
  }
  if (report.choices.empty()) {
    throw std::invalid_argument("no stabilizer acts on any marked qubit");
  }
  report.fraction = mpq_class(good, total);
  report.fraction.canonicalize();
  const auto& f0 = report.choices.front();
  for (const auto& c : report.choices) {
    if (c.correctable * f0.total != f0.correctable * c.total) report.uniform = false;
  }
  return report;
}

}  // namespace ethr
