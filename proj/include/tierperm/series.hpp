// Truncated power series with exact rational coefficients, and the nested
// radical generating function of permutations by length and tier.
//
// The bivariate generating function sum T(n,t) w^t z^n is
//
//   sum_j w^j (psi_j - psi_{j+1}) / (2 z (1 - w)),
//   psi_0 = 1 - 2u,  psi_1 = sqrt(1 - 4u),  psi_j = sqrt(2 psi_{j-1} - 1),
//
// with u = z(1 - w). Every psi_j depends on z and w only through u, so the
// tower is computed as univariate series in u. Writing
// g_j(u) = (psi_j - psi_{j+1}) / (2u) = sum_m g_{j,m} u^m and expanding
// u^m = z^m (1 - w)^m gives
//
//   T(n, t) = sum_{j=0}^{t} (-1)^(t-j) binomial(n, t-j) g_{j,n}.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace tierperm {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Coefficients c_0..c_N; arithmetic is exact modulo x^(N+1).
class RationalSeries {
 public:
  RationalSeries() : RationalSeries(0) {}
  explicit RationalSeries(int order);
  RationalSeries(std::vector<Rational> coefficients, int order);

  static RationalSeries constant(const Rational& c, int order);
  /// The series x.
  static RationalSeries variable(int order);

  int order() const { return order_; }
  const Rational& operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
  Rational& operator[](int k) { return coeffs_[static_cast<std::size_t>(k)]; }
  /// Zero beyond the truncation order.
  Rational coefficient(int k) const;

  /// Same coefficients reinterpreted at a lower (or padded to a higher) order.
  RationalSeries with_order(int order) const;

  /// Divide by x; requires c_0 == 0. The result loses one order of precision.
  RationalSeries divide_by_variable() const;

  RationalSeries& operator+=(const RationalSeries& rhs);
  RationalSeries& operator-=(const RationalSeries& rhs);
  RationalSeries& operator*=(const Rational& s);

  friend RationalSeries operator+(RationalSeries a, const RationalSeries& b) { return a += b; }
  friend RationalSeries operator-(RationalSeries a, const RationalSeries& b) { return a -= b; }
  friend RationalSeries operator*(RationalSeries a, const Rational& s) { return a *= s; }
  friend RationalSeries operator*(const RationalSeries& a, const RationalSeries& b);
  /// Requires a nonzero constant term in the divisor.
  friend RationalSeries operator/(const RationalSeries& a, const RationalSeries& b);

  friend bool operator==(const RationalSeries&, const RationalSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
  int order_ = 0;
};

/// Square root with constant term 1, by Newton iteration r <- (r + s/r)/2,
/// doubling the number of correct coefficients per step. Throws
/// std::domain_error if the constant term is not 1.
RationalSeries series_sqrt(const RationalSeries& s);

/// sum_k Catalan(k) z^k, through z^order.
RationalSeries catalan_series(int order);

class PsiTower {
 public:
  PsiTower(std::vector<RationalSeries> levels) : levels_(std::move(levels)) {}

  int top() const { return static_cast<int>(levels_.size()) - 1; }
  const RationalSeries& level(int j) const { return levels_.at(static_cast<std::size_t>(j)); }

 private:
  std::vector<RationalSeries> levels_;
};

/// psi_0 .. psi_top in u, each through u^order. Requires top >= 1.
PsiTower psi_tower(int top, int order);

inline constexpr int kDefaultSeriesOrder = 32;

/// Coefficients of T_t(z) for n = 0..order. Throws std::logic_error if an
/// extracted coefficient is not an integer.
std::vector<BigInt> tier_generating_function(int t, int order = kDefaultSeriesOrder);

/// [w^t z^n]; throws std::invalid_argument when order < n.
BigInt T_coefficient(int n, int t, int order = kDefaultSeriesOrder);

/// One `c_k * z^k` line per nonzero coefficient; non-integers print as p/q.
std::string render_series(const std::vector<Rational>& coefficients, const std::string& var = "z");
std::string render_series(const std::vector<BigInt>& coefficients, const std::string& var = "z");

}  // namespace tierperm
