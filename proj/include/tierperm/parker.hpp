// Parker sequences and their bijection with permutations.
//
// A Parker sequence of length n is written a_n a_{n-1} ... a_1 with
// 1 <= a_i <= n - i + 1, so the entry at written (left-to-right) offset j,
// counting from 1, is at most j. Indices i in a_i are counted from the right.
//
// Under the bijection, value i of the permutation goes to the a_i-th still
// free position counting from the right, for i = 1, 2, ..., n. A descent
// a_j > a_{j-1} at right-based index j corresponds exactly to the separated
// pair (j, j-1) of the image.

#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tierperm/permutation.hpp"

namespace tierperm {

class ParkerSequence {
 public:
  ParkerSequence() = default;

  /// Entries in written order. Throws std::invalid_argument if a bound fails.
  explicit ParkerSequence(std::vector<int> written);

  int size() const { return static_cast<int>(entries_.size()); }
  std::span<const int> written() const { return entries_; }

  /// a_i, right-based index 1..n.
  int a(int i) const { return entries_[static_cast<std::size_t>(size() - i)]; }

  /// Compact digits when every entry is at most 9, else space-separated.
  std::string str() const;

  friend bool operator==(const ParkerSequence&, const ParkerSequence&) = default;
  friend auto operator<=>(const ParkerSequence&, const ParkerSequence&) = default;

 private:
  std::vector<int> entries_;
};

/// Written offset (0-based) of the right-based index i in a length-n sequence.
constexpr int right_index_to_offset(int n, int i) { return n - i; }

bool is_parker(std::span<const int> written);

ParkerSequence parse_parker(std::string_view text);

/// Right-based indices j with a_j > a_{j-1}, ascending.
std::vector<int> descents(const ParkerSequence& seq);

Permutation parker_to_perm(const ParkerSequence& seq);
ParkerSequence perm_to_parker(const Permutation& p);

inline constexpr int kParkerEnumerationCap = 10;

/// All length-n sequences with exactly t descents, lexicographic in written
/// order. Throws LimitExceeded for n above kParkerEnumerationCap.
std::vector<ParkerSequence> enumerate_parker(int n, int t);

/// Number of length-n Parker sequences with each descent count (index = t),
/// by dynamic programming over the last written entry. n <= 20.
std::vector<long long> count_parker_by_descents(int n);

}  // namespace tierperm
