#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "ethr/pauli.hpp"

namespace ethr {

/// Binary linear code given by a parity check matrix. Row r is a bit mask over n columns.
class ClassicalCode {
 public:
  ClassicalCode(std::size_t n, std::vector<std::uint64_t> rows);

  /// Parses rows of '0'/'1' characters. Blank lines and lines starting with '#' are skipped.
  static ClassicalCode parse(std::string_view text);
  static ClassicalCode load(const std::filesystem::path& path);

  /// [7,4,3] Hamming code with checks on {1,2,3,4}, {1,2,5,6}, {1,3,5,7}.
  static ClassicalCode hamming7();
  /// Hamming code whose column j is the binary expansion of j.
  static ClassicalCode hamming7_binary();

  std::size_t n() const { return n_; }
  const std::vector<std::uint64_t>& rows() const { return rows_; }
  bool self_orthogonal() const;

 private:
  std::size_t n_;
  std::vector<std::uint64_t> rows_;
};

class StabilizerCode {
 public:
  /// Validates commutation, independence and the logical operator relations.
  StabilizerCode(std::string name, std::size_t n, std::vector<PauliOperator> generators,
                 std::vector<PauliOperator> logical_x, std::vector<PauliOperator> logical_z);

  const std::string& name() const { return name_; }
  std::size_t n() const { return n_; }
  std::size_t k() const { return logical_x_.size(); }
  const std::vector<PauliOperator>& generators() const { return generators_; }
  const std::vector<PauliOperator>& logical_x() const { return logical_x_; }
  const std::vector<PauliOperator>& logical_z() const { return logical_z_; }

  bool in_normalizer(const PauliOperator& p) const;
  /// Phase +-1 is ignored; operators with phase +-i are never stabilizers.
  bool in_stabilizer(const PauliOperator& p) const;

  /// All 2^(n-k) stabilizer elements. Element c is the product of generators whose bit is set in c.
  const std::vector<PauliOperator>& stabilizer_group() const { return group_; }

 private:
  std::string name_;
  std::size_t n_;
  std::vector<PauliOperator> generators_;
  std::vector<PauliOperator> logical_x_;
  std::vector<PauliOperator> logical_z_;
  std::vector<PauliOperator> group_;
};

StabilizerCode steane();
StabilizerCode grassl();

/// X-type and Z-type generators from the rows of H. Requires H H^T = 0 and independent rows.
StabilizerCode css_from_parity_check(const ClassicalCode& h, std::string name = "css");

bool in_normalizer(const StabilizerCode& code, const PauliOperator& p);
bool in_stabilizer(const StabilizerCode& code, const PauliOperator& p);

}  // namespace ethr
