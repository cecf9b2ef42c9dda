#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "tierperm/enumerate.hpp"
#include "tierperm/errors.hpp"
#include "tierperm/tier.hpp"

using namespace tierperm;

namespace {

BigInt factorial(int n) {
  BigInt f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

BigInt binomial(int n, int k) {
  BigInt b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

}  // namespace

TEST_CASE("brute-force table entries") {
  const TierTable t = table_bruteforce(7);
  CHECK(t.at(1, 0) == 1);
  CHECK(t.at(3, 1) == 1);
  CHECK(t.at(5, 2) == 8);
  CHECK(t.at(6, 3) == 4);
  const std::vector<int> row7{429, 2382, 1978, 250, 1, 0, 0};
  for (int k = 0; k < 7; ++k) CHECK(t.at(7, k) == row7[static_cast<std::size_t>(k)]);
  CHECK(t.at(7, 7) == 0);
  CHECK(t.at(8, 0) == 0);
}

TEST_CASE("recurrence position table small values") {
  const auto r = table_recurrence(4);
  CHECK(r.positions.at(1, 0, 1) == 1);
  CHECK(r.positions.at(2, 0, 1) == 1);
  CHECK(r.positions.at(2, 0, 2) == 1);
  CHECK(r.positions.at(3, 0, 1) == 2);
  CHECK(r.positions.at(3, 0, 2) == 2);
  CHECK(r.positions.at(3, 0, 3) == 1);
  CHECK(r.positions.at(3, 1, 1) == 0);
  CHECK(r.positions.at(3, 1, 2) == 0);
  CHECK(r.positions.at(3, 1, 3) == 1);
}

TEST_CASE("position table matches a scan by position of 1 up to length 8") {
  const auto r = table_recurrence(8);
  for (int n = 1; n <= 8; ++n) {
    std::vector<std::vector<long long>> counts(static_cast<std::size_t>(n),
                                               std::vector<long long>(static_cast<std::size_t>(n), 0));
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    do {
      const auto one = std::find(v.begin(), v.end(), 1) - v.begin();
      ++counts[static_cast<std::size_t>(count_separated_pairs(v))][static_cast<std::size_t>(one)];
    } while (std::next_permutation(v.begin(), v.end()));
    for (int t = 0; t < n; ++t) {
      for (int k = 1; k <= n; ++k) {
        REQUIRE(r.positions.at(n, t, k) == counts[static_cast<std::size_t>(t)][static_cast<std::size_t>(k - 1)]);
      }
    }
  }
}

TEST_CASE("four methods agree") {
  const TierTable brute = table_bruteforce(9);
  CHECK(table_recurrence(9).tiers == brute);
  CHECK(table_parker(9) == brute);
  CHECK(table_generating_function(9, 8, 9) == brute);

  const TierTable rec = table_recurrence(14).tiers;
  CHECK(table_parker(14) == rec);
  const TierTable gf = table_generating_function(14, 5, 14);
  for (int n = 1; n <= 14; ++n) {
    for (int t = 0; t <= 5; ++t) REQUIRE(gf.at(n, t) == rec.at(n, t));
  }
}

TEST_CASE("row sums are n! and column 0 is Catalan") {
  const TierTable rec = table_recurrence(25).tiers;
  for (int n = 1; n <= 25; ++n) {
    CHECK(rec.row_sum(n) == factorial(n));
    CHECK(rec.at(n, 0) == binomial(2 * n, n) / (n + 1));
    CHECK(rec.at(n, max_tier(n)) != 0);
    CHECK(rec.at(n, max_tier(n) + 1) == 0);
  }
}

TEST_CASE("the brute-force table is independent of thread count") {
  CHECK(table_bruteforce(8, 3) == table_bruteforce(8, 1));
}

TEST_CASE("cumulative counts") {
  const TierTable c = cumulative(table_recurrence(10).tiers);
  CHECK(c.at(7, 2) == 4789);
  CHECK(c.at(10, 5) == 3628556);
  CHECK(c.at(4, 3) == 24);
  CHECK(c.at(10, 6) == 3628800);
  CHECK(c.width() == 7);
  for (int n = 1; n <= 10; ++n) CHECK(c.at(n, 6) == factorial(n));
}

TEST_CASE("caps and argument errors") {
  CHECK_THROWS_AS(table_bruteforce(kBruteForceCap + 1), LimitExceeded);
  CHECK_THROWS_AS(table_bruteforce(0), std::invalid_argument);
  CHECK_THROWS_AS(table_generating_function(10, 3, 9), std::invalid_argument);
  TierTable t(3);
  CHECK_THROWS_AS(t.set(4, 0, 1), std::out_of_range);
}

TEST_CASE("text renderer") {
  const TierTable t = table_recurrence(4).tiers;
  CHECK(render_table_text(t, false) ==
        "n      t = 0  t = 1\n"
        "n = 1      1\n"
        "n = 2      2\n"
        "n = 3      5      1\n"
        "n = 4     14     10\n");
  CHECK(render_table_text(cumulative(t), true) ==
        "n      t = 0  t <= 1\n"
        "n = 1      1       1\n"
        "n = 2      2       2\n"
        "n = 3      5       6\n"
        "n = 4     14      24\n");
}

TEST_CASE("csv, json and b-file renderers") {
  const TierTable t = table_recurrence(3).tiers;
  CHECK(render_table_csv(t) == "n,t0,t1\n1,1,0\n2,2,0\n3,5,1\n");
  CHECK(render_table_json(t) == "{\"max_n\": 3, \"rows\": [[1, 0], [2, 0], [5, 1]]}\n");
  CHECK(render_table_bfile(t) == "1 1\n2 2\n3 0\n4 5\n5 1\n6 0\n");
  CHECK(render_column_bfile(t, 0) == "1 1\n2 2\n3 5\n");
}

TEST_CASE("json keeps big counts exact") {
  const TierTable t = table_recurrence(22).tiers;
  const std::string json = render_table_json(t);
  CHECK(json.find(t.at(22, 10).str()) != std::string::npos);
  CHECK(t.row_sum(22) == factorial(22));
}
