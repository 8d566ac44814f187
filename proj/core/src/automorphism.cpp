#include "ethr/automorphism.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "ethr/correctability.hpp"

namespace ethr {

Permutation::Permutation(std::size_t n) : image_(n) {
  std::iota(image_.begin(), image_.end(), std::uint8_t{0});
}

Permutation::Permutation(std::vector<std::uint8_t> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (auto v : image_) {
    if (v >= image_.size() || seen[v]) throw std::invalid_argument("not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::from_cycles(std::size_t n, std::string_view text) {
  std::vector<std::uint8_t> image(n);
  std::iota(image.begin(), image.end(), std::uint8_t{0});
  std::vector<bool> used(n, false);
  std::vector<std::size_t> cycle;
  std::size_t value = 0;
  bool have_value = false;
  bool open = false;
  auto push_value = [&] {
    if (!have_value) return;
    if (value < 1 || value > n) throw std::invalid_argument("cycle point out of range");
    if (used[value - 1]) throw std::invalid_argument("point repeated in cycle notation");
    used[value - 1] = true;
    cycle.push_back(value - 1);
    value = 0;
    have_value = false;
  };
  for (char c : text) {
    if (c >= '0' && c <= '9') {
      if (!open) throw std::invalid_argument("digit outside a cycle");
      value = value * 10 + static_cast<std::size_t>(c - '0');
      have_value = true;
    } else if (c == '(') {
      if (open) throw std::invalid_argument("nested cycle");
      open = true;
    } else if (c == ',' || c == ' ') {
      push_value();
    } else if (c == ')') {
      push_value();
      if (!open) throw std::invalid_argument("unbalanced ')'");
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        image[cycle[i]] = static_cast<std::uint8_t>(cycle[(i + 1) % cycle.size()]);
      }
      cycle.clear();
      open = false;
    } else {
      throw std::invalid_argument(std::string("bad character in cycle notation: '") + c + "'");
    }
  }
  if (open) throw std::invalid_argument("unterminated cycle");
  return Permutation(image);
}

std::uint64_t Permutation::apply(std::uint64_t mask) const {
  std::uint64_t out = 0;
  for (std::size_t q = 0; q < image_.size(); ++q) {
    if ((mask >> q) & 1u) out |= std::uint64_t{1} << image_[q];
  }
  return out;
}

PauliOperator Permutation::apply(const PauliOperator& p) const {
  return {p.n(), apply(p.x_mask()), apply(p.z_mask()), p.phase()};
}

ErasurePattern Permutation::apply(const ErasurePattern& p) const {
  return {p.n(), apply(p.x_flags()), apply(p.z_flags())};
}

Permutation Permutation::inverse() const {
  std::vector<std::uint8_t> inv(image_.size());
  for (std::size_t q = 0; q < image_.size(); ++q) inv[image_[q]] = static_cast<std::uint8_t>(q);
  return Permutation(inv);
}

bool Permutation::is_identity() const {
  for (std::size_t q = 0; q < image_.size(); ++q) {
    if (image_[q] != q) return false;
  }
  return true;
}

std::string Permutation::cycles() const {
  std::string out;
  std::vector<bool> seen(image_.size(), false);
  for (std::size_t start = 0; start < image_.size(); ++start) {
    if (seen[start] || image_[start] == start) continue;
    out += "(";
    std::size_t q = start;
    bool first = true;
    while (!seen[q]) {
      seen[q] = true;
      if (!first) out += ",";
      out += std::to_string(q + 1);
      first = false;
      q = image_[q];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.n() != b.n()) throw std::invalid_argument("permutation degree mismatch");
  std::vector<std::uint8_t> image(a.n());
  for (std::size_t q = 0; q < a.n(); ++q) image[q] = a.image_[b.image_[q]];
  return Permutation(image);
}

PermutationGroup::PermutationGroup(std::size_t n, std::vector<Permutation> generators)
    : n_(n), generators_(std::move(generators)) {
  for (const auto& g : generators_) {
    if (g.n() != n) throw std::invalid_argument("generator degree differs from group degree");
  }
}

PermutationGroup PermutationGroup::load(std::size_t n, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::vector<Permutation> gens;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line.erase(std::remove_if(line.begin(), line.end(),
                              [](char c) { return c == '\r' || c == '\t'; }),
               line.end());
    if (line.find_first_not_of(' ') == std::string::npos) continue;
    gens.push_back(Permutation::from_cycles(n, line));
  }
  return {n, std::move(gens)};
}

const std::vector<Permutation>& PermutationGroup::elements() const {
  if (!elements_.empty()) return elements_;
  std::set<Permutation> seen{Permutation(n_)};
  std::vector<Permutation> frontier{Permutation(n_)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : frontier) {
      for (const auto& g : generators_) {
        Permutation y = g * x;
        if (seen.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  elements_.assign(seen.begin(), seen.end());
  return elements_;
}

bool PermutationGroup::contains(const Permutation& p) const {
  const auto& e = elements();
  return std::binary_search(e.begin(), e.end(), p);
}

bool preserves_stabilizer(const StabilizerCode& code, const Permutation& p) {
  if (p.n() != code.n()) throw std::invalid_argument("permutation degree differs from code length");
  for (const auto& g : code.generators()) {
    if (!code.in_stabilizer(p.apply(g))) return false;
  }
  return true;
}

PermutationGroup permutation_automorphisms(const StabilizerCode& code) {
  const std::size_t n = code.n();
  if (n > 9) throw std::invalid_argument("exhaustive automorphism search limited to 9 qubits");
  std::vector<std::uint8_t> image(n);
  std::iota(image.begin(), image.end(), std::uint8_t{0});
  std::vector<Permutation> found;
  do {
    Permutation p(image);
    if (preserves_stabilizer(code, p)) found.push_back(p);
  } while (std::next_permutation(image.begin(), image.end()));
  // Every element is listed as a generator; closure is then immediate.
  return {n, std::move(found)};
}

PermutationGroup steane_permutation_group() { return permutation_automorphisms(steane()); }

std::vector<Permutation> binary_hamming_generators() {
  std::vector<Permutation> gens;
  for (const char* c : {"(1,2)(5,6)", "(2,4)(3,5)", "(2,3)(4,6,5,7)", "(4,5)(6,7)", "(4,6)(5,7)"}) {
    gens.push_back(Permutation::from_cycles(7, c));
  }
  return gens;
}

PatternOrbit orbit(const PermutationGroup& group, const ErasurePattern& p) {
  if (p.n() != group.degree()) throw std::invalid_argument("pattern size differs from group degree");
  std::set<ErasurePattern> members;
  for (const auto& g : group.elements()) members.insert(g.apply(p));
  PatternOrbit o;
  o.members.assign(members.begin(), members.end());
  o.representative = o.members.front();
  return o;
}

std::size_t PatternClass::size() const {
  std::size_t s = 0;
  for (const auto& o : orbits) s += o.size();
  return s;
}

std::string class_label(const Procedure& proc, const ErasurePattern& p) {
  if (proc.classify(p) == Terminal::Fail) return "fail";
  if (proc.model() == Model::Ideal) return std::to_string(p.weight());
  return classify_tuple(p).str();
}

std::vector<ErasurePattern> all_patterns(std::size_t n, Model model) {
  std::vector<ErasurePattern> out;
  if (model == Model::Ideal) {
    for (std::uint64_t z = 0; z < (std::uint64_t{1} << n); ++z) {
      out.push_back(ErasurePattern::z_marks(n, z));
    }
    return out;
  }
  // Full marks on f, Z-only marks on a disjoint set.
  for (std::uint64_t f = 0; f < (std::uint64_t{1} << n); ++f) {
    for (std::uint64_t z = 0; z < (std::uint64_t{1} << n); ++z) {
      if (f & z) continue;
      out.emplace_back(n, f, f | z);
    }
  }
  return out;
}

std::vector<PatternClass> classify_all(const PermutationGroup& group, const Procedure& proc) {
  if (group.degree() != proc.code().n()) {
    throw std::invalid_argument("group degree differs from code length");
  }
  std::set<ErasurePattern> done;
  std::map<std::pair<std::size_t, std::string>, PatternClass> merged;
  for (const auto& p : all_patterns(proc.code().n(), proc.model())) {
    if (done.count(p)) continue;
    PatternOrbit o = orbit(group, p);
    o.correctable = proc.correctable(o.representative);
    done.insert(o.members.begin(), o.members.end());
    const std::string label = class_label(proc, o.representative);
    const std::size_t order_key = label == "fail" ? SIZE_MAX : o.weight();
    auto& cls = merged[{order_key, label}];
    cls.label = label;
    cls.orbits.push_back(std::move(o));
  }
  std::vector<PatternClass> out;
  for (auto& [key, cls] : merged) out.push_back(std::move(cls));
  return out;
}

}  // namespace ethr
