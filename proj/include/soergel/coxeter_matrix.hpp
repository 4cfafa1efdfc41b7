#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace soergel {

/// Generators are 0-based internally; user-facing words are 1-based.
using Generator = int;
using Word = std::vector<Generator>;

/// Symmetric matrix of bond orders m_st. Off-diagonal entries are >= 2, or 0
/// for an infinite bond; the diagonal is 1.
class CoxeterMatrix {
 public:
  static constexpr int kInfinity = 0;

  CoxeterMatrix() = default;
  /// Validates; throws InvalidMatrix.
  CoxeterMatrix(int rank, std::vector<int> entries);

  /// "A3", "b4", "D5", "F4", "H3", "H4", "I2(7)", products such as "A1xA1".
  static CoxeterMatrix from_type(std::string_view type);
  /// {"rank": n, "m": [[...], ...]} with 0 meaning infinity.
  static CoxeterMatrix from_json_text(std::string_view text);
  static CoxeterMatrix from_json_file(const std::string& path);

  int rank() const { return rank_; }
  int operator()(int s, int t) const { return entries_[static_cast<std::size_t>(s * rank_ + t)]; }
  bool is_infinite(int s, int t) const { return (*this)(s, t) == kInfinity; }
  bool has_infinite_bond() const;
  /// Least common multiple of the finite bond orders (at least 1).
  int bond_lcm() const;
  /// True for the A_n pattern s_i -- s_{i+1} used by the bimodule lab.
  bool is_type_a() const;
  const std::vector<int>& entries() const { return entries_; }

  std::string to_json_text() const;

  friend bool operator==(const CoxeterMatrix&, const CoxeterMatrix&) = default;

 private:
  int rank_ = 0;
  std::vector<int> entries_;
};

/// Parses "2,1,3,2" (1-based) into a 0-based word; "e" or "" is the empty word.
Word parse_word(std::string_view text, int rank);
/// Inverse of parse_word; the empty word prints as "e".
std::string format_word(const Word& w);

}  // namespace soergel
