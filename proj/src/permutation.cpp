#include "tierperm/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace tierperm {

namespace {

bool is_separator(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0 || c == ',';
}

}  // namespace

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const int n = size();
  std::vector<bool> seen(values_.size() + 1, false);
  for (const int v : values_) {
    if (v < 1 || v > n) {
      throw std::invalid_argument("value " + std::to_string(v) + " out of range 1.." +
                                  std::to_string(n));
    }
    if (seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("duplicate value " + std::to_string(v));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::standardize(std::span<const int> distinct_values) {
  std::vector<int> order(distinct_values.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return distinct_values[a] < distinct_values[b]; });
  std::vector<int> out(distinct_values.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    out[static_cast<std::size_t>(order[rank])] = static_cast<int>(rank) + 1;
  }
  return Permutation(std::move(out));
}

std::vector<int> Permutation::inverse() const {
  std::vector<int> pos(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) {
    pos[static_cast<std::size_t>(values_[i] - 1)] = static_cast<int>(i) + 1;
  }
  return pos;
}

Permutation Permutation::remove_at(int position) const {
  if (position < 1 || position > size()) {
    throw std::out_of_range("position out of range");
  }
  const int removed = at(position);
  std::vector<int> out;
  out.reserve(values_.size() - 1);
  for (int i = 1; i <= size(); ++i) {
    if (i == position) continue;
    const int v = at(i);
    out.push_back(v > removed ? v - 1 : v);
  }
  return Permutation(std::move(out));
}

std::string Permutation::str() const {
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i != 0) out += ' ';
    out += std::to_string(values_[i]);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << p.str(); }

std::vector<int> parse_integer_list(std::string_view text) {
  std::vector<std::string_view> tokens;
  bool has_separator = false;
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_separator(text[i])) {
      has_separator = true;
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !is_separator(text[j])) ++j;
    tokens.push_back(text.substr(i, j - i));
    i = j;
  }

  // Consecutive commas (or a leading/trailing comma) leave an empty token.
  {
    bool pending_comma = false;
    bool seen_token = false;
    for (const char c : text) {
      if (c == ',') {
        if (pending_comma || !seen_token) throw std::invalid_argument("empty token");
        pending_comma = true;
      } else if (!std::isspace(static_cast<unsigned char>(c))) {
        seen_token = true;
        pending_comma = false;
      }
    }
    if (pending_comma) throw std::invalid_argument("empty token");
  }

  std::vector<int> values;
  if (tokens.size() == 1 && !has_separator && tokens[0].size() > 1) {
    for (const char c : tokens[0]) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw std::invalid_argument("malformed token '" + std::string(tokens[0]) + "'");
      }
      values.push_back(c - '0');
    }
    return values;
  }
  for (const auto tok : tokens) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw std::invalid_argument("malformed token '" + std::string(tok) + "'");
    }
    values.push_back(v);
  }
  return values;
}

Permutation parse_permutation(std::string_view text) {
  auto values = parse_integer_list(text);
  // A compact digit string longer than 9 cannot be a permutation; the
  // constructor reports it as an out-of-range or duplicate value.
  return Permutation(std::move(values));
}

bool shortlex_less(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.values().begin(), a.values().end(), b.values().begin(),
                                      b.values().end());
}

namespace {

// Depth-first embedding search. chosen[j] is the host index matched to
// pattern entry j; each extension is checked against all earlier choices.
bool embed(std::span<const int> host, std::span<const int> pattern, std::vector<int>& chosen,
           std::size_t depth, std::size_t next_host) {
  if (depth == pattern.size()) return true;
  const std::size_t remaining = pattern.size() - depth;
  for (std::size_t h = next_host; h + remaining <= host.size(); ++h) {
    bool ok = true;
    for (std::size_t j = 0; j < depth; ++j) {
      const bool host_less = host[h] < host[static_cast<std::size_t>(chosen[j])];
      const bool pattern_less = pattern[depth] < pattern[j];
      if (host_less != pattern_less) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    chosen[depth] = static_cast<int>(h);
    if (embed(host, pattern, chosen, depth + 1, h + 1)) return true;
  }
  return false;
}

}  // namespace

bool contains_pattern(const Permutation& host, const Permutation& pattern) {
  if (pattern.size() > host.size()) return false;
  std::vector<int> chosen(static_cast<std::size_t>(pattern.size()));
  return embed(host.values(), pattern.values(), chosen, 0, 0);
}

std::vector<SeparatedPair> separated_pairs(const Permutation& p) {
  const auto pos = p.inverse();
  std::vector<SeparatedPair> pairs;
  for (int small = 1; small < p.size(); ++small) {
    const int large = small + 1;
    const int from = pos[static_cast<std::size_t>(large - 1)];
    const int to = pos[static_cast<std::size_t>(small - 1)];
    if (from > to) continue;
    for (int k = from + 1; k < to; ++k) {
      if (p.at(k) > large) {
        pairs.push_back({small, large, k});
        break;
      }
    }
  }
  return pairs;
}

int count_separated_pairs(std::span<const int> values) {
  const int n = static_cast<int>(values.size());
  // Small fixed buffer for the exhaustive-scan sizes; falls back to heap.
  int stack_pos[32];
  std::vector<int> heap_pos;
  int* pos = stack_pos;
  if (n > 31) {
    heap_pos.resize(static_cast<std::size_t>(n) + 1);
    pos = heap_pos.data();
  }
  for (int i = 0; i < n; ++i) pos[values[static_cast<std::size_t>(i)]] = i;

  int count = 0;
  for (int small = 1; small < n; ++small) {
    const int from = pos[small + 1];
    const int to = pos[small];
    for (int k = from + 1; k < to; ++k) {
      if (values[static_cast<std::size_t>(k)] > small + 1) {
        ++count;
        break;
      }
    }
  }
  return count;
}

std::vector<Interval> maximal_intervals(const Permutation& p) {
  const int n = p.size();
  if (n == 0) return {};
  if (n == 1) return {{1, 1}};

  // All proper windows [s, e] whose values form a run of consecutive integers.
  std::vector<Interval> proper;
  for (int s = 1; s <= n; ++s) {
    int lo = p.at(s);
    int hi = p.at(s);
    for (int e = s; e <= n; ++e) {
      lo = std::min(lo, p.at(e));
      hi = std::max(hi, p.at(e));
      const int len = e - s + 1;
      if (len == n) break;
      if (hi - lo == len - 1) proper.push_back({s, len});
    }
  }

  auto contains = [](const Interval& outer, const Interval& inner) {
    return outer.start <= inner.start &&
           inner.start + inner.length <= outer.start + outer.length &&
           outer.length > inner.length;
  };
  std::vector<Interval> maximal;
  for (const auto& iv : proper) {
    const bool dominated = std::any_of(proper.begin(), proper.end(),
                                       [&](const Interval& o) { return contains(o, iv); });
    if (!dominated) maximal.push_back(iv);
  }
  std::sort(maximal.begin(), maximal.end(),
            [](const Interval& a, const Interval& b) { return a.start < b.start; });

  for (std::size_t i = 1; i < maximal.size(); ++i) {
    if (maximal[i - 1].start + maximal[i - 1].length > maximal[i].start) {
      return {{1, n}};
    }
  }
  return maximal;
}

namespace {

Decomposition decompose(const Permutation& p, DecompositionKind kind) {
  if (p.empty()) throw std::invalid_argument("cannot decompose the empty permutation");
  const int n = p.size();
  Decomposition d{kind, {}};
  int block_start = 1;
  int lo = n + 1;
  int hi = 0;
  for (int i = 1; i <= n; ++i) {
    lo = std::min(lo, p.at(i));
    hi = std::max(hi, p.at(i));
    // The prefix 1..i is a block boundary when it holds exactly the lowest
    // (plus) or highest (minus) i values.
    const bool boundary = kind == DecompositionKind::plus ? hi == i : lo == n - i + 1;
    if (boundary) {
      std::vector<int> block(p.values().begin() + (block_start - 1), p.values().begin() + i);
      d.components.push_back(Permutation::standardize(block));
      block_start = i + 1;
    }
  }
  return d;
}

}  // namespace

Decomposition plus_decompose(const Permutation& p) {
  return decompose(p, DecompositionKind::plus);
}

Decomposition minus_decompose(const Permutation& p) {
  return decompose(p, DecompositionKind::minus);
}

Permutation direct_sum(const Permutation& lower, const Permutation& upper) {
  std::vector<int> v(lower.values().begin(), lower.values().end());
  for (const int x : upper.values()) v.push_back(x + lower.size());
  return Permutation(std::move(v));
}

Permutation skew_sum(const Permutation& upper, const Permutation& lower) {
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(upper.size() + lower.size()));
  for (const int x : upper.values()) v.push_back(x + lower.size());
  v.insert(v.end(), lower.values().begin(), lower.values().end());
  return Permutation(std::move(v));
}

Permutation recombine(const Decomposition& d) {
  if (d.components.empty()) return Permutation{};
  if (d.kind == DecompositionKind::plus) {
    Permutation acc = d.components.front();
    for (std::size_t i = 1; i < d.components.size(); ++i) acc = direct_sum(acc, d.components[i]);
    return acc;
  }
  Permutation acc = d.components.back();
  for (std::size_t i = d.components.size() - 1; i-- > 0;) acc = skew_sum(d.components[i], acc);
  return acc;
}

bool is_plus_indecomposable(const Permutation& p) {
  return !p.empty() && plus_decompose(p).components.size() == 1;
}

bool is_minus_indecomposable(const Permutation& p) {
  return !p.empty() && minus_decompose(p).components.size() == 1;
}

}  // namespace tierperm
