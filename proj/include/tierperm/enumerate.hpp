// The triangle T(n, t) of permutations by length and exact tier, computed
// independently by exhaustive search, by the insertion recurrence on the
// position of 1, by counting Parker sequences, and by coefficient extraction
// from the generating function.

#pragma once

#include <string>
#include <vector>

#include "tierperm/series.hpp"

namespace tierperm {

class TierTable {
 public:
  TierTable() = default;
  /// Rows 1..max_n with columns t = 0..width-1 (default max_n), all zero.
  explicit TierTable(int max_n, int width = -1);

  int max_n() const { return max_n_; }
  int width() const { return width_; }
  /// Zero outside the stored triangle.
  BigInt at(int n, int t) const;
  void set(int n, int t, BigInt value);
  BigInt row_sum(int n) const;
  /// Largest t with a nonzero entry in any row (0 for an empty table).
  int max_nonzero_column() const;

  friend bool operator==(const TierTable&, const TierTable&) = default;

 private:
  int max_n_ = 0;
  int width_ = 0;
  std::vector<std::vector<BigInt>> rows_;  // rows_[n - 1][t]
};

/// P(n, t, k): length n, tier t, value 1 at position k.
class PositionTable {
 public:
  explicit PositionTable(int max_n);

  int max_n() const { return max_n_; }
  BigInt at(int n, int t, int k) const;
  void set(int n, int t, int k, BigInt value);

 private:
  int max_n_ = 0;
  std::vector<std::vector<std::vector<BigInt>>> entries_;  // [n-1][t][k-1]
};

inline constexpr int kBruteForceCap = 11;

/// Tier histogram over all of S_n, n = 1..max_n. Throws LimitExceeded above
/// kBruteForceCap.
TierTable table_bruteforce(int max_n, unsigned threads = 1);

struct RecurrenceTables {
  TierTable tiers;
  PositionTable positions;
};

/// P(n+1, t, k) = sum_{j >= k-1} P(n, t, j) + sum_{j <= k-2} P(n, t-1, j),
/// seeded with P(1, 0, 1) = 1, evaluated with prefix sums.
RecurrenceTables table_recurrence(int max_n);

/// Parker sequences of length n counted by descents (n <= 20).
TierTable table_parker(int max_n);

/// Coefficient extraction for columns t = 0..max_t (capped at max_n - 1).
TierTable table_generating_function(int max_n, int max_t, int order = kDefaultSeriesOrder);

/// Entry (n, t) becomes sum_{j <= t} T(n, j), for t up to the last nonzero
/// column of the input; every row saturates at n!.
TierTable cumulative(const TierTable& table);

enum class TableFormat { text, csv, json, bfile };

/// Aligned rows n, columns t. Zero entries past the last nonzero column of
/// a row are left blank unless `cumulative` is set.
std::string render_table_text(const TierTable& table, bool cumulative);
std::string render_table_csv(const TierTable& table);
std::string render_table_json(const TierTable& table);
/// Rows n = 1..max_n, t = 0..n-1, read by rows, `index value` from 1.
std::string render_table_bfile(const TierTable& table);
/// One column: `n value` for n = 1..max_n.
std::string render_column_bfile(const TierTable& table, int t);

}  // namespace tierperm
