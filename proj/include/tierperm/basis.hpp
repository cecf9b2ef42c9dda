// Membership in the k-pass sortable classes and their finite bases.
//
// The permutations of tier at most t form a class; its basis B_t consists of
// the permutations of tier exactly t+1 all of whose one-point deletions have
// tier at most t. Every basis element has length at most 3(t+1), so an
// exhaustive search up to that length is complete.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "tierperm/errors.hpp"
#include "tierperm/permutation.hpp"

namespace tierperm {

struct Basis {
  int tier_bound = 0;
  std::vector<Permutation> elements;  // shortlex order

  std::map<int, std::size_t> counts_by_length() const;
};

bool is_k_pass_sortable(const Permutation& p, int k);

struct BasisSearchOptions {
  bool allow_large = false;  // lengths 10..12
  unsigned threads = 1;
};

inline constexpr int kDefaultBasisLengthCap = 9;
inline constexpr int kLargeBasisLengthCap = 12;

/// Exhaustive search over lengths 1..min(max_len, 3(t+1)).
Basis compute_basis(int t, int max_len, const BasisSearchOptions& options = {});

bool avoids_basis(const Permutation& p, const Basis& b);

/// {231}
Basis basis_b0();

/// The eleven basis elements of the 2-pass sortable class.
Basis basis_b1();

/// One element per line, space-separated values.
std::string render_basis_text(const Basis& b);
std::string render_basis_json(const Basis& b);
std::string render_basis_counts(const Basis& b);

}  // namespace tierperm
