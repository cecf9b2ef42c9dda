#include <doctest.h>

#include <stdexcept>

#include "tierperm/enumerate.hpp"
#include "tierperm/series.hpp"

using namespace tierperm;

namespace {

RationalSeries linear(const Rational& c0, const Rational& c1, int order) {
  RationalSeries s = RationalSeries::constant(c0, order);
  s[1] = c1;
  return s;
}

BigInt catalan(int n) {
  BigInt c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

}  // namespace

TEST_CASE("arithmetic basics") {
  const auto x = RationalSeries::variable(4);
  const auto one = RationalSeries::constant(1, 4);
  const auto inv = one / (one - x);
  for (int k = 0; k <= 4; ++k) CHECK(inv[k] == 1);
  CHECK((inv * (one - x)) == one);
  CHECK((x * x).coefficient(2) == 1);
  CHECK((x * x).coefficient(9) == 0);
  CHECK(x.divide_by_variable() == RationalSeries::constant(1, 3));
  CHECK_THROWS_AS(one.divide_by_variable(), std::domain_error);
  CHECK_THROWS_AS(one / x, std::domain_error);
  // A nonzero constant other than 1 is a valid divisor.
  CHECK((one / RationalSeries::constant(2, 4))[0] == Rational(1, 2));
}

TEST_CASE("series_sqrt") {
  CHECK(series_sqrt(RationalSeries::constant(1, 8)) == RationalSeries::constant(1, 8));

  const auto one_plus = linear(1, 1, 10);
  CHECK(series_sqrt(one_plus * one_plus) == one_plus);

  const auto r = series_sqrt(linear(1, -4, 20));
  CHECK(r * r == linear(1, -4, 20));
  CHECK(r[1] == -2);
  CHECK(r[2] == -2);

  CHECK_THROWS_AS(series_sqrt(RationalSeries::constant(4, 5)), std::domain_error);
  CHECK_THROWS_AS(series_sqrt(RationalSeries::variable(5)), std::domain_error);
}

TEST_CASE("catalan_series") {
  const auto c = catalan_series(12);
  CHECK(c[0] == 1);
  CHECK(c[5] == 42);
  CHECK(c[9] == 4862);
  for (int n = 0; n <= 12; ++n) CHECK(c[n] == Rational(catalan(n)));
}

TEST_CASE("psi tower shape") {
  const auto tower = psi_tower(5, 16);
  CHECK(tower.top() == 5);
  CHECK(tower.level(0) == linear(1, -2, 16));
  CHECK(tower.level(1)[1] == -2);
  for (int j = 0; j <= 5; ++j) CHECK(tower.level(j)[0] == 1);
  CHECK_THROWS_AS(psi_tower(0, 4), std::invalid_argument);
}

TEST_CASE("psi tower squaring identity modulo u^32") {
  const int order = 31;
  const auto tower = psi_tower(6, order);
  const auto one = RationalSeries::constant(1, order);
  CHECK(tower.level(1) * tower.level(1) == linear(1, -4, order));
  for (int j = 2; j <= 6; ++j) {
    CHECK(tower.level(j) * tower.level(j) == tower.level(j - 1) * Rational(2) - one);
  }
}

TEST_CASE("rho product telescopes") {
  const int order = 16;
  const auto tower = psi_tower(5, order + 1);
  const auto one = RationalSeries::constant(1, order + 1);
  std::vector<RationalSeries> reduced;
  for (int j = 0; j <= 5; ++j) reduced.push_back((one - tower.level(j)).divide_by_variable());
  RationalSeries product = RationalSeries::constant(1, order);
  for (int j = 1; j <= 4; ++j) {
    product = product * (reduced[static_cast<std::size_t>(j)] / reduced[static_cast<std::size_t>(j - 1)]);
    CHECK(product == reduced[static_cast<std::size_t>(j)] * Rational(1, 2));
  }
}

TEST_CASE("T_0 is the Catalan series without its constant term") {
  const auto t0 = tier_generating_function(0, 12);
  REQUIRE(t0.size() == 13);
  CHECK(t0[0] == 0);
  for (int n = 1; n <= 12; ++n) CHECK(t0[static_cast<std::size_t>(n)] == catalan(n));
}

TEST_CASE("T_1 and T_2 displayed coefficients") {
  const auto t1 = tier_generating_function(1, 10);
  const std::vector<BigInt> expected1{0, 0, 0, 1, 10, 70, 424, 2382, 12804, 66946, 343772};
  CHECK(t1 == expected1);

  const auto t2 = tier_generating_function(2, 11);
  const std::vector<BigInt> expected2{0, 0, 0, 0, 0, 8, 160, 1978, 19508, 168608, 1337684, 10003422};
  CHECK(t2 == expected2);
}

TEST_CASE("T_1 closed form") {
  const int order = 15;
  const auto root = series_sqrt(linear(1, -4, order));
  const auto one = RationalSeries::constant(1, order);
  const auto nested = series_sqrt(root * Rational(2) - one);
  const auto closed =
      (one - nested).divide_by_variable() * Rational(1, 2) - (one / root).with_order(order - 1);
  const auto t1 = tier_generating_function(1, order - 1);
  for (int n = 0; n < order; ++n) CHECK(closed[n] == Rational(t1[static_cast<std::size_t>(n)]));
}

TEST_CASE("T_coefficient") {
  CHECK(T_coefficient(10, 3) == 1445208);
  CHECK(T_coefficient(9, 5) == 298);
  CHECK(T_coefficient(7, 4) == 1);
  CHECK(T_coefficient(7, 5) == 0);
  CHECK(T_coefficient(11, 2, 11) == 10003422);
  CHECK(T_coefficient(0, 0, 0) == 0);
  CHECK(T_coefficient(1, 0, 1) == 1);
  CHECK_THROWS_AS(T_coefficient(12, 2, 11), std::invalid_argument);
  CHECK_THROWS_AS(tier_generating_function(-1, 4), std::invalid_argument);
}

TEST_CASE("generating function agrees with the recurrence for n <= 16, t <= 6") {
  const TierTable rec = table_recurrence(16).tiers;
  for (int t = 0; t <= 6; ++t) {
    const auto column = tier_generating_function(t, 16);
    for (int n = 1; n <= 16; ++n) REQUIRE(column[static_cast<std::size_t>(n)] == rec.at(n, t));
  }
}

TEST_CASE("render_series") {
  CHECK(render_series(tier_generating_function(1, 5)) == "1 * z^3\n10 * z^4\n70 * z^5\n");
  CHECK(render_series(std::vector<Rational>{Rational(1, 2), 0, -3}, "u") == "1/2 * u^0\n-3 * u^2\n");
}
