#include "ethr/oracle.hpp"

#include <stdexcept>

#include "ethr/automorphism.hpp"

namespace ethr {

namespace {

std::string row_str(const ClassRow& row) {
  std::string s;
  for (const auto& [label, p] : row) {
    if (p.is_zero()) continue;
    if (!s.empty()) s += "; ";
    s += label + ": " + p.str();
  }
  return s;
}

ClassRow prune(ClassRow row) {
  for (auto it = row.begin(); it != row.end();) {
    it = it->second.is_zero() ? row.erase(it) : std::next(it);
  }
  return row;
}

}  // namespace

OracleRow derive_transitions_by_bruteforce(const Procedure& proc, const std::string& from) {
  OracleRow out;
  out.from = from;
  ClassRow sum;
  bool have_first = false;
  ClassRow first;
  for (const auto& p : all_patterns(proc.code().n(), proc.model())) {
    if (class_label(proc, p) != from) continue;
    ++out.patterns;
    if (proc.classify(p) != Terminal::Continue) {
      sum[from] += 1;
      ++out.choices;
      continue;
    }
    const Selection chosen = proc.select(p);
    for (const auto& sel : proc.admissible(p)) {
      ClassRow row = prune(enumerate_paths([&](ScriptedSource& src) {
        return class_label(proc, proc.step(p, sel, src).pattern);
      }));
      ++out.choices;
      if (!have_first) {
        first = row;
        have_first = true;
      } else if (row != first) {
        out.uniform = false;
        if (out.notes.size() < 4) {
          out.notes.push_back(p.str() + " target " + std::to_string(sel.target + 1) + ": " +
                              row_str(row));
        }
      }
      if (sel.target == chosen.target && sel.element == chosen.element) {
        for (const auto& [label, poly] : row) sum[label] += poly;
      }
    }
  }
  if (out.patterns == 0) throw std::invalid_argument("no pattern belongs to class '" + from + "'");
  const FailurePolynomial scale(mpq_class(1, static_cast<long>(out.patterns)));
  for (auto& [label, poly] : sum) poly *= scale;
  out.row = prune(std::move(sum));
  return out;
}

ClassRow derive_initial_by_bruteforce(const Procedure& proc, int coins) {
  return prune(enumerate_paths(
      [&](ScriptedSource& src) { return class_label(proc, proc.initial_pattern(src, coins)); }));
}

Chain build_procedure_chain(const Procedure& proc, int coins) {
  Chain c = proc.model() == Model::Ideal ? build_ideal_chain() : build_lossy_chain(DeltaSpec::symbolic());
  const auto states = c.matrix.states();
  c.matrix = TransitionMatrix(states);
  c.matrix.set(c.fail, c.fail, 1);
  for (const auto& from : states) {
    if (from == c.fail) continue;
    for (const auto& [to, p] : derive_transitions_by_bruteforce(proc, from).row) {
      c.matrix.set(to, from, p);
    }
  }
  c.initial.assign(states.size(), FailurePolynomial());
  for (const auto& [label, p] : derive_initial_by_bruteforce(proc, coins)) {
    c.initial[c.matrix.index(label)] = p;
  }
  return c;
}

std::vector<RowDiscrepancy> compare_chains(const Chain& tabulated, const Chain& oracle) {
  const auto& states = tabulated.matrix.states();
  if (states != oracle.matrix.states()) throw std::invalid_argument("chains have different states");
  std::vector<RowDiscrepancy> out;
  for (const auto& from : states) {
    for (const auto& to : states) {
      const auto& a = tabulated.matrix.at(to, from);
      const auto& b = oracle.matrix.at(to, from);
      if (!(a == b)) out.push_back({from, to, a, b});
    }
  }
  return out;
}

}  // namespace ethr
