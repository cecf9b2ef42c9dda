#include "tierperm/tier.hpp"

#include <bit>
#include <cassert>
#include <stdexcept>
#include <string>

namespace tierperm {

int tier(const Permutation& p) { return count_separated_pairs(p.values()); }

TierProfile tier_profile(const Permutation& p) {
  auto pairs = separated_pairs(p);
  const int t = static_cast<int>(pairs.size());
  return {p, t, std::move(pairs)};
}

namespace {

void require_positive(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("length must be positive, got " + std::to_string(n));
}

}  // namespace

std::int64_t max_tier(std::int64_t n) {
  require_positive(n);
  const int floor_log2 = std::bit_width(static_cast<std::uint64_t>(n)) - 1;
  return n - 1 - floor_log2;
}

std::int64_t max_tier_recursive(std::int64_t n) {
  require_positive(n);
  std::int64_t total = 0;
  for (; n > 1; n /= 2) total += (n - 1) / 2;
  return total;
}

std::int64_t max_tier_binary_sum(std::int64_t n) {
  require_positive(n);
  std::int64_t total = 0;
  // Terms vanish once 2^(j-1) > n.
  for (std::int64_t half = 1; half <= n; half *= 2) total += (n - half) / (2 * half);
  return total;
}

Permutation max_tier_witness(int n) {
  require_positive(n);
  if (n <= 2) return Permutation::identity(n);

  const int k = n / 2;
  const Permutation separators = max_tier_witness(k);
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n));
  if (n % 2 == 1) {
    for (int i = 0; i < k; ++i) {
      out.push_back(k + 1 - i);
      out.push_back(separators.values()[static_cast<std::size_t>(i)] + k + 1);
    }
    out.push_back(1);
  } else {
    for (int i = 0; i < k; ++i) {
      out.push_back(k - i);
      out.push_back(separators.values()[static_cast<std::size_t>(i)] + k);
    }
  }
  return Permutation(std::move(out));
}

int tier_of_minus_chain(const std::vector<Permutation>& components) {
  if (components.empty()) throw std::invalid_argument("minus chain is empty");
  const int p = static_cast<int>(components.size());
  int r = 0;
  int sum = 0;
  for (int i = 0; i < p; ++i) {
    const auto& c = components[static_cast<std::size_t>(i)];
    if (!is_minus_indecomposable(c)) {
      throw std::invalid_argument("component " + std::to_string(i + 1) + " (" + c.str() +
                                  ") is not minus-indecomposable");
    }
    if (i < p - 1 && c.size() == 1) ++r;
    sum += tier(c);
  }
  const int result = p - r - 1 + sum;
#ifndef NDEBUG
  assert(result == tier(recombine({DecompositionKind::minus, components})));
#endif
  return result;
}

}  // namespace tierperm
