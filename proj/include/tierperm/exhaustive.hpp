// Exhaustive scans over S_n, partitioned by the first entry.
//
// Worker w handles the first entries v with (v - 1) % workers == w and walks
// the remaining entries in lexicographic successor order, so each worker's
// visiting order is fixed regardless of scheduling. Callers merge the
// per-worker accumulators, which are returned in worker order.

#pragma once

#include <algorithm>
#include <numeric>
#include <span>
#include <thread>
#include <vector>

namespace tierperm {

template <typename Accumulator, typename Visit>
std::vector<Accumulator> scan_permutations(int n, unsigned threads, Visit visit) {
  if (n <= 0) {
    std::vector<Accumulator> single(1);
    const std::vector<int> empty;
    visit(single[0], std::span<const int>(empty));
    return single;
  }
  const unsigned workers = std::clamp(threads, 1u, static_cast<unsigned>(n));
  std::vector<Accumulator> accs(workers);

  auto work = [n, workers, &accs, &visit](unsigned w) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int first = static_cast<int>(w) + 1; first <= n; first += static_cast<int>(workers)) {
      perm[0] = first;
      int next = 1;
      for (int v = 1; v <= n; ++v) {
        if (v != first) perm[static_cast<std::size_t>(next++)] = v;
      }
      do {
        visit(accs[w], std::span<const int>(perm));
      } while (std::next_permutation(perm.begin() + 1, perm.end()));
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  return accs;
}

}  // namespace tierperm
