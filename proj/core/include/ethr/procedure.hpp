#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ethr/code.hpp"
#include "ethr/correctability.hpp"
#include "ethr/erasure.hpp"

namespace ethr {

enum class Model { Ideal, Lossy };

std::string to_string(Model m);
Model parse_model(const std::string& s);

/// Z-correction measures an X-type stabilizer; X-correction measures a Z-type one.
enum class CorrectionKind { Z, X };

/// Elementary failure events: gate sides fail at rate eps, detectors at rate delta.
enum class Event : std::uint8_t { Gate, Detector };

enum class Terminal { Clean, Fail, Continue };

struct Selection {
  std::size_t target = 0;        // 0-based qubit
  std::uint64_t support = 0;     // stabilizer support, includes target
  std::size_t element = 0;       // generator-combination index of the stabilizer element
  std::size_t overlap = 0;       // other marked qubits inside the support
  CorrectionKind kind = CorrectionKind::Z;
};

struct StepOutcome {
  ErasurePattern pattern;
  Terminal status = Terminal::Continue;
};

/// Pure-type stabilizer elements: X-type for Z-correction, Z-type for X-correction.
/// Each entry is (combination index, support), sorted by index, identity excluded.
std::vector<std::pair<std::size_t, std::uint64_t>> pure_stabilizers(const StabilizerCode& code,
                                                                     CorrectionKind kind);

/// All (target, stabilizer) pairs of minimal overlap over eligible targets of the given kind.
/// Ordered by target, then weight, then element index.
std::vector<Selection> admissible_selections(const StabilizerCode& code,
                                             const ErasurePattern& pattern, CorrectionKind kind);

/// Stabilizer through `target` (0-based) minimizing overlap with the other marks; ties go to
/// lower weight, then lower element index.
PauliOperator select_stabilizer(const StabilizerCode& code, const ErasurePattern& pattern,
                                std::size_t target, CorrectionKind kind = CorrectionKind::Z);

/// Erasure correction procedure for one code and error model.
class Procedure {
 public:
  /// Patterns heavier than `max_tracked_weight` are treated as failed (0 disables this).
  Procedure(StabilizerCode code, Model model, std::size_t max_tracked_weight = 3);

  const StabilizerCode& code() const { return code_; }
  Model model() const { return model_; }
  std::size_t max_tracked_weight() const { return max_weight_; }

  Terminal classify(const ErasurePattern& p) const;
  bool correctable(const ErasurePattern& p) const { return table_.correctable(p); }

  /// Z erasures are corrected first; with only full erasures the X part is corrected.
  CorrectionKind next_kind(const ErasurePattern& p) const;
  std::vector<Selection> admissible(const ErasurePattern& p) const;
  Selection select(const ErasurePattern& p) const;

  /// Ideal: one coin per qubit per pass, `coins` passes, any failure leaves a Z mark.
  /// Lossy: a full-erasure pass over all qubits, then a Z pass over the unaffected ones.
  template <class Source>
  ErasurePattern initial_pattern(Source& src, int coins = 1) const;

  template <class Source>
  StepOutcome step(const ErasurePattern& p, Source& src) const {
    return step(p, select(p), src);
  }
  template <class Source>
  StepOutcome step(const ErasurePattern& p, const Selection& sel, Source& src) const;

 private:
  StabilizerCode code_;
  Model model_;
  std::size_t max_weight_;
  CorrectabilityTable table_;
  std::vector<std::pair<std::size_t, std::uint64_t>> x_type_;
  std::vector<std::pair<std::size_t, std::uint64_t>> z_type_;

  std::vector<Selection> selections(const ErasurePattern& p, CorrectionKind kind,
                                    bool first_only) const;
  StepOutcome finish(ErasurePattern p) const { return {p, classify(p)}; }
};

template <class Source>
ErasurePattern Procedure::initial_pattern(Source& src, int coins) const {
  const std::size_t n = code_.n();
  ErasurePattern p(n);
  if (model_ == Model::Ideal) {
    if (coins < 1) throw std::invalid_argument("coin count must be positive");
    for (int pass = 0; pass < coins; ++pass) {
      for (std::size_t q = 0; q < n; ++q) {
        if (src.fail(Event::Gate)) p.add_mark(q, ErasureMark::Z);
      }
    }
    return p;
  }
  for (std::size_t q = 0; q < n; ++q) {
    if (src.fail(Event::Gate)) p.set_mark(q, ErasureMark::Full);
  }
  for (std::size_t q = 0; q < n; ++q) {
    if (p.mark(q) == ErasureMark::None && src.fail(Event::Gate)) p.set_mark(q, ErasureMark::Z);
  }
  return p;
}

template <class Source>
StepOutcome Procedure::step(const ErasurePattern& p, const Selection& sel, Source& src) const {
  if (classify(p) != Terminal::Continue) {
    throw std::logic_error("correction step on a clean or failed pattern " + p.str());
  }
  ErasurePattern out = p;
  const std::size_t t = sel.target;
  const std::uint64_t companions = sel.support & ~(std::uint64_t{1} << t);

  if (sel.kind == CorrectionKind::Z) {
    if (model_ == Model::Ideal) {
      bool failed = false;
      for (std::uint64_t rest = companions; rest; rest &= rest - 1) {
        if (src.fail(Event::Gate)) {
          out.add_mark(static_cast<std::size_t>(std::countr_zero(rest)), ErasureMark::Z);
          failed = true;
        }
      }
      if (!failed) out.set_mark(t, ErasureMark::None);
      return finish(out);
    }
    // Lossy: measure the target, then teleport through each companion.
    if (src.fail(Event::Detector)) {
      out.set_mark(t, ErasureMark::Full);
      return finish(out);
    }
    bool failed = false;
    for (std::uint64_t rest = companions; rest; rest &= rest - 1) {
      bool lost = src.fail(Event::Gate) || src.fail(Event::Detector) || src.fail(Event::Detector);
      if (lost) {
        out.set_mark(static_cast<std::size_t>(std::countr_zero(rest)), ErasureMark::Full);
        failed = true;
      }
    }
    if (!failed) out.set_mark(t, ErasureMark::None);
    return finish(out);
  }

  // X-correction: one CSIGN per support qubit, data side then ancilla side, then detectors.
  if (model_ != Model::Lossy) throw std::logic_error("X-correction only arises in the lossy model");
  bool failed = false;
  for (std::uint64_t rest = sel.support; rest; rest &= rest - 1) {
    const auto q = static_cast<std::size_t>(std::countr_zero(rest));
    if (src.fail(Event::Gate)) {
      out.set_mark(q, ErasureMark::Full);
      failed = true;
    }
    if (src.fail(Event::Gate)) {
      out.add_mark(q, ErasureMark::Z);
      failed = true;
    }
  }
  if (!failed) {
    for (int d = 0; d < std::popcount(sel.support); ++d) {
      if (src.fail(Event::Detector)) {
        failed = true;
        break;
      }
    }
  }
  if (!failed) out.set_mark(t, ErasureMark::Z);
  return finish(out);
}

}  // namespace ethr
