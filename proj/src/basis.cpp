#include "tierperm/basis.hpp"

#include <algorithm>
#include <json.hpp>

#include "tierperm/exhaustive.hpp"
#include "tierperm/tier.hpp"

namespace tierperm {

std::map<int, std::size_t> Basis::counts_by_length() const {
  std::map<int, std::size_t> counts;
  for (const auto& e : elements) ++counts[e.size()];
  return counts;
}

bool is_k_pass_sortable(const Permutation& p, int k) {
  if (k < 1) throw std::invalid_argument("pass count must be at least 1");
  return tier(p) <= k - 1;
}

namespace {

// Tier of the one-point deletion at `skip`, without allocating. Lengths
// are capped well below the buffer size.
int tier_without(std::span<const int> values, std::size_t skip) {
  const int n = static_cast<int>(values.size());
  const int removed = values[skip];
  int buffer[32];
  int m = 0;
  for (int i = 0; i < n; ++i) {
    if (static_cast<std::size_t>(i) == skip) continue;
    const int v = values[static_cast<std::size_t>(i)];
    buffer[m++] = v > removed ? v - 1 : v;
  }
  return count_separated_pairs(std::span<const int>(buffer, static_cast<std::size_t>(m)));
}

}  // namespace

Basis compute_basis(int t, int max_len, const BasisSearchOptions& options) {
  if (t < 0) throw std::invalid_argument("tier bound must be nonnegative");
  if (max_len < 1) throw std::invalid_argument("maximum length must be positive");
  const int bound = 3 * (t + 1);
  const int len_limit = std::min(max_len, bound);
  const int cap = options.allow_large ? kLargeBasisLengthCap : kDefaultBasisLengthCap;
  if (len_limit > cap) {
    throw LimitExceeded("basis search up to length " + std::to_string(len_limit) +
                        " exceeds the cap of " + std::to_string(cap) +
                        (options.allow_large ? "" : " (pass --allow-large to raise it to 12)"));
  }

  Basis basis{t, {}};
  for (int len = 1; len <= len_limit; ++len) {
    if (max_tier(len) < t + 1) continue;
    auto found = scan_permutations<std::vector<Permutation>>(
        len, options.threads, [t](std::vector<Permutation>& out, std::span<const int> perm) {
          if (count_separated_pairs(perm) != t + 1) return;
          for (std::size_t i = 0; i < perm.size(); ++i) {
            if (tier_without(perm, i) > t) return;
          }
          out.emplace_back(std::vector<int>(perm.begin(), perm.end()));
        });
    for (auto& chunk : found) {
      basis.elements.insert(basis.elements.end(), std::make_move_iterator(chunk.begin()),
                            std::make_move_iterator(chunk.end()));
    }
  }
  std::sort(basis.elements.begin(), basis.elements.end(), shortlex_less);
  return basis;
}

bool avoids_basis(const Permutation& p, const Basis& b) {
  return std::none_of(b.elements.begin(), b.elements.end(),
                      [&](const Permutation& e) { return contains_pattern(p, e); });
}

Basis basis_b0() { return {0, {parse_permutation("231")}}; }

Basis basis_b1() {
  Basis b{1, {}};
  for (const char* text : {"24153", "24513", "24531", "34251", "35241", "42513", "42531", "45231",
                           "231564", "261453", "523164"}) {
    b.elements.push_back(parse_permutation(text));
  }
  std::sort(b.elements.begin(), b.elements.end(), shortlex_less);
  return b;
}

std::string render_basis_text(const Basis& b) {
  std::string out;
  for (const auto& e : b.elements) out += e.str() + "\n";
  return out;
}

std::string render_basis_json(const Basis& b) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& e : b.elements) {
    arr.push_back(std::vector<int>(e.values().begin(), e.values().end()));
  }
  return arr.dump() + "\n";
}

std::string render_basis_counts(const Basis& b) {
  std::string out;
  for (const auto& [len, count] : b.counts_by_length()) {
    out += std::to_string(len) + " " + std::to_string(count) + "\n";
  }
  return out;
}

}  // namespace tierperm
