#include "ethr/procedure.hpp"

#include <algorithm>

namespace ethr {

std::string to_string(Model m) { return m == Model::Ideal ? "ideal" : "lossy"; }

Model parse_model(const std::string& s) {
  if (s == "ideal") return Model::Ideal;
  if (s == "lossy") return Model::Lossy;
  throw std::invalid_argument("unknown model '" + s + "' (expected ideal or lossy)");
}

std::vector<std::pair<std::size_t, std::uint64_t>> pure_stabilizers(const StabilizerCode& code,
                                                                     CorrectionKind kind) {
  std::vector<std::pair<std::size_t, std::uint64_t>> out;
  const auto& group = code.stabilizer_group();
  for (std::size_t c = 1; c < group.size(); ++c) {
    const auto& s = group[c];
    if (kind == CorrectionKind::Z && s.z_mask() == 0) out.emplace_back(c, s.x_mask());
    if (kind == CorrectionKind::X && s.x_mask() == 0) out.emplace_back(c, s.z_mask());
  }
  return out;
}

namespace {

std::uint64_t eligible_targets(const ErasurePattern& p, CorrectionKind kind) {
  return kind == CorrectionKind::Z ? p.z_only_mask() : (p.full_mask() | p.x_only_mask());
}

std::vector<Selection> minimal_selections(
    const ErasurePattern& p, CorrectionKind kind,
    const std::vector<std::pair<std::size_t, std::uint64_t>>& elements, bool first_only) {
  std::vector<Selection> best;
  const std::uint64_t marked = p.support();
  for (std::uint64_t rest = eligible_targets(p, kind); rest; rest &= rest - 1) {
    const auto t = static_cast<std::size_t>(std::countr_zero(rest));
    const std::uint64_t tbit = std::uint64_t{1} << t;
    std::vector<Selection> here;
    for (const auto& [index, support] : elements) {
      if (!(support & tbit)) continue;
      Selection s{t, support, index,
                  static_cast<std::size_t>(std::popcount(support & marked & ~tbit)), kind};
      here.push_back(s);
    }
    for (const auto& s : here) {
      if (!best.empty() && s.overlap > best.front().overlap) continue;
      if (!best.empty() && s.overlap < best.front().overlap) best.clear();
      best.push_back(s);
    }
  }
  std::stable_sort(best.begin(), best.end(), [](const Selection& a, const Selection& b) {
    if (a.target != b.target) return a.target < b.target;
    int wa = std::popcount(a.support);
    int wb = std::popcount(b.support);
    if (wa != wb) return wa < wb;
    return a.element < b.element;
  });
  if (first_only && best.size() > 1) best.resize(1);
  return best;
}

}  // namespace

std::vector<Selection> admissible_selections(const StabilizerCode& code,
                                             const ErasurePattern& pattern, CorrectionKind kind) {
  if (pattern.n() != code.n()) throw std::invalid_argument("pattern size differs from code length");
  return minimal_selections(pattern, kind, pure_stabilizers(code, kind), false);
}

PauliOperator select_stabilizer(const StabilizerCode& code, const ErasurePattern& pattern,
                                std::size_t target, CorrectionKind kind) {
  if (pattern.n() != code.n()) throw std::invalid_argument("pattern size differs from code length");
  if (target >= code.n() || pattern.mark(target) == ErasureMark::None) {
    throw std::invalid_argument("target qubit is not marked in " + pattern.str());
  }
  const std::uint64_t tbit = std::uint64_t{1} << target;
  const std::uint64_t others = pattern.support() & ~tbit;
  const std::pair<std::size_t, std::uint64_t>* best = nullptr;
  auto key = [&](std::uint64_t support) {
    return std::pair{std::popcount(support & others), std::popcount(support)};
  };
  const auto elements = pure_stabilizers(code, kind);
  for (const auto& e : elements) {
    if (!(e.second & tbit)) continue;
    if (!best || key(e.second) < key(best->second)) best = &e;
  }
  if (!best) throw std::invalid_argument("no stabilizer element acts on the target");
  return code.stabilizer_group()[best->first];
}

Procedure::Procedure(StabilizerCode code, Model model, std::size_t max_tracked_weight)
    : code_(std::move(code)),
      model_(model),
      max_weight_(max_tracked_weight),
      table_(code_),
      x_type_(pure_stabilizers(code_, CorrectionKind::Z)),
      z_type_(pure_stabilizers(code_, CorrectionKind::X)) {}

Terminal Procedure::classify(const ErasurePattern& p) const {
  if (p.is_clean()) return Terminal::Clean;
  if (max_weight_ && p.weight() > max_weight_) return Terminal::Fail;
  return table_.correctable(p) ? Terminal::Continue : Terminal::Fail;
}

CorrectionKind Procedure::next_kind(const ErasurePattern& p) const {
  if (model_ == Model::Ideal || p.z_only_mask() != 0) return CorrectionKind::Z;
  return CorrectionKind::X;
}

std::vector<Selection> Procedure::selections(const ErasurePattern& p, CorrectionKind kind,
                                             bool first_only) const {
  return minimal_selections(p, kind, kind == CorrectionKind::Z ? x_type_ : z_type_, first_only);
}

std::vector<Selection> Procedure::admissible(const ErasurePattern& p) const {
  return selections(p, next_kind(p), false);
}

Selection Procedure::select(const ErasurePattern& p) const {
  if (p.is_clean()) throw std::invalid_argument("no erasure to correct in a clean pattern");
  const CorrectionKind kind = next_kind(p);
  const auto& elements = kind == CorrectionKind::Z ? x_type_ : z_type_;
  const std::uint64_t marked = p.support();
  Selection best;
  bool found = false;
  int best_overlap = 0;
  int best_weight = 0;
  for (std::uint64_t rest = eligible_targets(p, kind); rest; rest &= rest - 1) {
    const auto t = static_cast<std::size_t>(std::countr_zero(rest));
    const std::uint64_t tbit = std::uint64_t{1} << t;
    for (const auto& [index, support] : elements) {
      if (!(support & tbit)) continue;
      const int overlap = std::popcount(support & marked & ~tbit);
      const int weight = std::popcount(support);
      const bool lighter = overlap == best_overlap && t == best.target && weight < best_weight;
      if (!found || overlap < best_overlap || lighter) {
        best = {t, support, index, static_cast<std::size_t>(overlap), kind};
        best_overlap = overlap;
        best_weight = weight;
        found = true;
      }
    }
  }
  if (!found) throw std::logic_error("no stabilizer acts on a correctable mark of " + p.str());
  return best;
}

}  // namespace ethr
