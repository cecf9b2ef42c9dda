// Permutations of 1..n, pattern containment, separated pairs and the
// plus/minus (direct/skew sum) decompositions.
//
// Positions and values are 1-based everywhere they leave this module
// (witness positions, interval starts). The value storage itself is a plain
// 0-indexed vector, exposed as a span.

#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tierperm {

class Permutation {
 public:
  Permutation() = default;

  /// Throws std::invalid_argument unless `values` is a rearrangement of 1..n.
  explicit Permutation(std::vector<int> values);

  static Permutation identity(int n);

  /// Order-isomorphic rescaling of any sequence of distinct integers.
  static Permutation standardize(std::span<const int> distinct_values);

  int size() const { return static_cast<int>(values_.size()); }
  bool empty() const { return values_.empty(); }

  /// 1-based position.
  int at(int position) const { return values_[static_cast<std::size_t>(position - 1)]; }
  std::span<const int> values() const { return values_; }

  /// inverse()[v - 1] is the 1-based position of value v.
  std::vector<int> inverse() const;

  /// Delete the entry at a 1-based position and rescale to 1..n-1.
  Permutation remove_at(int position) const;

  /// Space-separated values; the empty permutation renders as "".
  std::string str() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) = default;

 private:
  std::vector<int> values_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& p);

/// Accepts a compact digit string ("356124", only for n <= 9) or integers
/// separated by whitespace and/or commas. Blank input is the empty permutation.
Permutation parse_permutation(std::string_view text);

/// Splits `text` into integer tokens using the same rules as
/// parse_permutation, without checking that the result is a permutation.
std::vector<int> parse_integer_list(std::string_view text);

/// Canonical order: length first, then lexicographic on the values.
bool shortlex_less(const Permutation& a, const Permutation& b);

bool contains_pattern(const Permutation& host, const Permutation& pattern);

/// (large, small) = (i + 1, i) with some value greater than i + 1 between
/// them, large occurring first.
struct SeparatedPair {
  int small = 0;
  int large = 0;
  int witness_position = 0;  // leftmost separator after large

  friend bool operator==(const SeparatedPair&, const SeparatedPair&) = default;
};

std::vector<SeparatedPair> separated_pairs(const Permutation& p);

/// Count only; works on raw value spans so exhaustive scans avoid
/// constructing Permutation objects. `values` must be a permutation of 1..n.
int count_separated_pairs(std::span<const int> values);

struct Interval {
  int start = 0;  // 1-based position
  int length = 0;

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Partition of the positions into maximal proper intervals when those are
/// pairwise disjoint (always the case for plus- and minus-indecomposable
/// permutations); otherwise the whole permutation is a single block.
std::vector<Interval> maximal_intervals(const Permutation& p);

enum class DecompositionKind { plus, minus };

struct Decomposition {
  DecompositionKind kind = DecompositionKind::plus;
  std::vector<Permutation> components;
};

/// p = c1 (+) c2 (+) ... with every component plus-indecomposable.
/// Throws std::invalid_argument on the empty permutation.
Decomposition plus_decompose(const Permutation& p);

/// p = c1 (-) c2 (-) ... with every component minus-indecomposable.
Decomposition minus_decompose(const Permutation& p);

Permutation direct_sum(const Permutation& lower, const Permutation& upper);
Permutation skew_sum(const Permutation& upper, const Permutation& lower);
Permutation recombine(const Decomposition& d);

bool is_plus_indecomposable(const Permutation& p);
bool is_minus_indecomposable(const Permutation& p);

}  // namespace tierperm
