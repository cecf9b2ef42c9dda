// Tier of a permutation (number of extra passes through the stack) and the
// maximum tier attainable at a given length.

#pragma once

#include <cstdint>
#include <vector>

#include "tierperm/permutation.hpp"

namespace tierperm {

struct TierProfile {
  Permutation permutation;
  int tier = 0;
  std::vector<SeparatedPair> pairs;
};

/// Number of separated pairs.
int tier(const Permutation& p);

TierProfile tier_profile(const Permutation& p);

/// n - 1 - floor(log2 n). Throws std::invalid_argument for n < 1.
std::int64_t max_tier(std::int64_t n);

/// floor((n-1)/2) + max_tier_recursive(floor(n/2)), with the value 0 at n = 1.
std::int64_t max_tier_recursive(std::int64_t n);

/// sum_{j >= 1} floor((n - 2^(j-1)) / 2^j), the binary-expansion form.
std::int64_t max_tier_binary_sum(std::int64_t n);

/// A length-n permutation of tier max_tier(n).
///
/// Odd n = 2k+1: the descending run k+1, k, ..., 1 with one separator between
/// each neighbouring pair; the separators k+2..n carry a shifted witness of
/// length k. Even n = 2k: the run k, ..., 1 followed in turn by each of the
/// k separators k+1..n, again arranged as a length-k witness.
Permutation max_tier_witness(int n);

/// p - r - 1 + sum of component tiers for a chain c1 (-) c2 (-) ... (-) cp of
/// minus-indecomposable components, r counting the length-one components
/// other than the last. Throws std::invalid_argument on an empty chain or a
/// component that is empty or minus-decomposable.
int tier_of_minus_chain(const std::vector<Permutation>& components);

}  // namespace tierperm
