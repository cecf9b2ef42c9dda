#include "tierperm/parker.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "tierperm/errors.hpp"

namespace tierperm {

ParkerSequence::ParkerSequence(std::vector<int> written) : entries_(std::move(written)) {
  for (std::size_t j = 0; j < entries_.size(); ++j) {
    const int bound = static_cast<int>(j) + 1;
    if (entries_[j] < 1 || entries_[j] > bound) {
      throw std::invalid_argument("entry " + std::to_string(j + 1) + " of Parker sequence is " +
                                  std::to_string(entries_[j]) + ", expected 1.." +
                                  std::to_string(bound));
    }
  }
}

std::string ParkerSequence::str() const {
  bool compact = true;
  for (const int e : entries_) compact = compact && e <= 9;
  std::string out;
  for (std::size_t j = 0; j < entries_.size(); ++j) {
    if (!compact && j != 0) out += ' ';
    out += std::to_string(entries_[j]);
  }
  return out;
}

bool is_parker(std::span<const int> written) {
  for (std::size_t j = 0; j < written.size(); ++j) {
    if (written[j] < 1 || written[j] > static_cast<int>(j) + 1) return false;
  }
  return true;
}

ParkerSequence parse_parker(std::string_view text) {
  return ParkerSequence(parse_integer_list(text));
}

std::vector<int> descents(const ParkerSequence& seq) {
  std::vector<int> out;
  for (int j = 2; j <= seq.size(); ++j) {
    if (seq.a(j) > seq.a(j - 1)) out.push_back(j);
  }
  return out;
}

Permutation parker_to_perm(const ParkerSequence& seq) {
  const int n = seq.size();
  // slots[r] is the value at right-based position r + 1; 0 means free.
  std::vector<int> slots(static_cast<std::size_t>(n), 0);
  for (int value = 1; value <= n; ++value) {
    int remaining = seq.a(value);
    for (std::size_t r = 0; r < slots.size(); ++r) {
      if (slots[r] != 0) continue;
      if (--remaining == 0) {
        slots[r] = value;
        break;
      }
    }
  }
  return Permutation(std::vector<int>(slots.rbegin(), slots.rend()));
}

ParkerSequence perm_to_parker(const Permutation& p) {
  const int n = p.size();
  const auto pos = p.inverse();
  std::vector<int> written(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    // Rank of i from the right among the values >= i.
    int rank = 1;
    for (int k = pos[static_cast<std::size_t>(i - 1)] + 1; k <= n; ++k) {
      if (p.at(k) > i) ++rank;
    }
    written[static_cast<std::size_t>(right_index_to_offset(n, i))] = rank;
  }
  return ParkerSequence(std::move(written));
}

namespace {

void check_cap(int n, int cap) {
  if (n < 0) throw std::invalid_argument("length must be nonnegative");
  if (n > cap) throw LimitExceeded("length " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
}

}  // namespace

std::vector<ParkerSequence> enumerate_parker(int n, int t) {
  check_cap(n, kParkerEnumerationCap);
  std::vector<ParkerSequence> out;
  if (t < 0) return out;
  std::vector<int> written(static_cast<std::size_t>(n));

  // Written offset j holds a value in 1..j+1; a descent is written[j-1] > written[j].
  std::function<void(int, int)> extend = [&](int j, int descents_so_far) {
    if (j == n) {
      if (descents_so_far == t) out.emplace_back(written);
      return;
    }
    // Each remaining adjacency can add at most one descent.
    if (descents_so_far + (n - j) < t) return;
    for (int v = 1; v <= j + 1; ++v) {
      const int d = descents_so_far + (j > 0 && written[static_cast<std::size_t>(j - 1)] > v);
      if (d > t) continue;
      written[static_cast<std::size_t>(j)] = v;
      extend(j + 1, d);
    }
  };
  extend(0, 0);
  return out;
}

std::vector<long long> count_parker_by_descents(int n) {
  // 20! still fits in a signed 64-bit count.
  check_cap(n, 20);
  std::vector<long long> counts(static_cast<std::size_t>(std::max(n, 1)), 0);
  // ways[v][d]: prefixes ending in value v with d descents.
  std::vector<std::vector<long long>> ways(2, std::vector<long long>(counts.size(), 0));
  if (n == 0) {
    counts[0] = 1;
    return counts;
  }
  ways[1][0] = 1;
  for (int j = 1; j < n; ++j) {
    std::vector<std::vector<long long>> next(static_cast<std::size_t>(j + 2),
                                             std::vector<long long>(counts.size(), 0));
    for (int prev = 1; prev <= j; ++prev) {
      for (std::size_t d = 0; d < counts.size(); ++d) {
        const long long w = ways[static_cast<std::size_t>(prev)][d];
        if (w == 0) continue;
        for (int v = 1; v <= j + 1; ++v) {
          const std::size_t nd = d + (prev > v ? 1 : 0);
          if (nd < counts.size()) next[static_cast<std::size_t>(v)][nd] += w;
        }
      }
    }
    ways = std::move(next);
  }
  for (const auto& row : ways) {
    for (std::size_t d = 0; d < counts.size(); ++d) counts[d] += row[d];
  }
  return counts;
}

}  // namespace tierperm
