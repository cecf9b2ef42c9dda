#include "tierperm/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace tierperm {

RationalSeries::RationalSeries(int order) : order_(order) {
  if (order < 0) throw std::invalid_argument("series order must be nonnegative");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

RationalSeries::RationalSeries(std::vector<Rational> coefficients, int order)
    : RationalSeries(order) {
  const std::size_t n = std::min(coefficients.size(), coeffs_.size());
  std::move(coefficients.begin(), coefficients.begin() + static_cast<std::ptrdiff_t>(n),
            coeffs_.begin());
}

RationalSeries RationalSeries::constant(const Rational& c, int order) {
  RationalSeries s(order);
  s[0] = c;
  return s;
}

RationalSeries RationalSeries::variable(int order) {
  RationalSeries s(order);
  if (order >= 1) s[1] = 1;
  return s;
}

Rational RationalSeries::coefficient(int k) const {
  if (k < 0 || k > order_) return Rational(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

RationalSeries RationalSeries::with_order(int order) const {
  return RationalSeries(coeffs_, order);
}

RationalSeries RationalSeries::divide_by_variable() const {
  if (coeffs_[0] != 0) throw std::domain_error("cannot divide by x: nonzero constant term");
  if (order_ == 0) throw std::domain_error("cannot divide an order-0 series by x");
  return RationalSeries(std::vector<Rational>(coeffs_.begin() + 1, coeffs_.end()), order_ - 1);
}

RationalSeries& RationalSeries::operator+=(const RationalSeries& rhs) {
  if (rhs.order_ < order_) *this = with_order(rhs.order_);
  for (int k = 0; k <= order_; ++k) (*this)[k] += rhs[k];
  return *this;
}

RationalSeries& RationalSeries::operator-=(const RationalSeries& rhs) {
  if (rhs.order_ < order_) *this = with_order(rhs.order_);
  for (int k = 0; k <= order_; ++k) (*this)[k] -= rhs[k];
  return *this;
}

RationalSeries& RationalSeries::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

RationalSeries operator*(const RationalSeries& a, const RationalSeries& b) {
  const int order = std::min(a.order(), b.order());
  RationalSeries out(order);
  for (int i = 0; i <= order; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= order; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

RationalSeries operator/(const RationalSeries& a, const RationalSeries& b) {
  if (b[0] == 0) throw std::domain_error("series division needs a nonzero constant term");
  const int order = std::min(a.order(), b.order());
  RationalSeries q(order);
  for (int k = 0; k <= order; ++k) {
    Rational acc = a[k];
    for (int i = 1; i <= k; ++i) acc -= b[i] * q[k - i];
    q[k] = acc / b[0];
  }
  return q;
}

RationalSeries series_sqrt(const RationalSeries& s) {
  if (s[0] != 1) throw std::domain_error("series_sqrt needs constant term 1");
  const int target = s.order() + 1;  // number of coefficients wanted
  RationalSeries r = RationalSeries::constant(1, 0);
  int correct = 1;
  const Rational half(1, 2);
  while (correct < target) {
    correct = std::min(2 * correct, target);
    const RationalSeries r_ext = r.with_order(correct - 1);
    r = (r_ext + s.with_order(correct - 1) / r_ext) * half;
  }
  return r.with_order(s.order());
}

RationalSeries catalan_series(int order) {
  if (order < 0) throw std::invalid_argument("series order must be nonnegative");
  // C(z) = (1 - sqrt(1 - 4z)) / (2z): take the root one order higher so the
  // division by z keeps `order` exact coefficients.
  RationalSeries radicand = RationalSeries::constant(1, order + 1);
  radicand[1] = -4;
  RationalSeries numerator = RationalSeries::constant(1, order + 1) - series_sqrt(radicand);
  return numerator.divide_by_variable() * Rational(1, 2);
}

PsiTower psi_tower(int top, int order) {
  if (top < 1) throw std::invalid_argument("psi tower needs at least levels 0 and 1");
  std::vector<RationalSeries> levels;
  RationalSeries psi0 = RationalSeries::constant(1, order);
  if (order >= 1) psi0[1] = -2;
  levels.push_back(psi0);

  RationalSeries radicand = RationalSeries::constant(1, order);
  if (order >= 1) radicand[1] = -4;
  levels.push_back(series_sqrt(radicand));

  const RationalSeries one = RationalSeries::constant(1, order);
  for (int j = 2; j <= top; ++j) {
    levels.push_back(series_sqrt(levels.back() * Rational(2) - one));
  }
  return PsiTower(std::move(levels));
}

namespace {

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt b = 1;
  for (int i = 1; i <= k; ++i) {
    b *= n - k + i;
    b /= i;
  }
  return b;
}

BigInt to_integer(const Rational& q, int n, int t) {
  if (boost::multiprecision::denominator(q) != 1) {
    throw std::logic_error("non-integral coefficient at n=" + std::to_string(n) +
                           ", t=" + std::to_string(t));
  }
  return boost::multiprecision::numerator(q);
}

}  // namespace

std::vector<BigInt> tier_generating_function(int t, int order) {
  if (t < 0) throw std::invalid_argument("tier must be nonnegative");
  if (order < 0) throw std::invalid_argument("series order must be nonnegative");
  // g_j needs psi_j and psi_{j+1} one order past the last extracted power.
  const PsiTower tower = psi_tower(t + 1, order + 1);
  std::vector<RationalSeries> g;
  for (int j = 0; j <= t; ++j) {
    g.push_back((tower.level(j) - tower.level(j + 1)).divide_by_variable() * Rational(1, 2));
  }

  std::vector<BigInt> coefficients;
  for (int n = 0; n <= order; ++n) {
    Rational acc = 0;
    for (int j = 0; j <= t; ++j) {
      const Rational term = Rational(binomial(n, t - j)) * g[static_cast<std::size_t>(j)][n];
      if ((t - j) % 2 == 0) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    coefficients.push_back(to_integer(acc, n, t));
  }
  return coefficients;
}

BigInt T_coefficient(int n, int t, int order) {
  if (n < 0) throw std::invalid_argument("length must be nonnegative");
  if (order < n) {
    throw std::invalid_argument("truncation order " + std::to_string(order) +
                                " too small for z^" + std::to_string(n));
  }
  return tier_generating_function(t, n)[static_cast<std::size_t>(n)];
}

namespace {

template <typename Number>
std::string render_terms(const std::vector<Number>& coefficients, const std::string& var) {
  std::string out;
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    if (coefficients[k] == 0) continue;
    out += coefficients[k].str() + " * " + var + "^" + std::to_string(k) + "\n";
  }
  return out;
}

}  // namespace

std::string render_series(const std::vector<Rational>& coefficients, const std::string& var) {
  return render_terms(coefficients, var);
}

std::string render_series(const std::vector<BigInt>& coefficients, const std::string& var) {
  return render_terms(coefficients, var);
}

}  // namespace tierperm
