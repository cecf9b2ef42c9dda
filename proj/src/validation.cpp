#include "tierperm/validation.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "tierperm/basis.hpp"
#include "tierperm/exhaustive.hpp"
#include "tierperm/enumerate.hpp"
#include "tierperm/parker.hpp"
#include "tierperm/permutation.hpp"
#include "tierperm/series.hpp"
#include "tierperm/stack_machine.hpp"
#include "tierperm/tier.hpp"

namespace tierperm {

namespace {

// Stops at the first visit returning false; returns that permutation's text.
std::string find_counterexample(int max_n, const std::function<bool(const Permutation&)>& ok) {
  for (int n = 0; n <= max_n; ++n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    do {
      Permutation p(v);
      if (!ok(p)) return "counterexample: " + (p.empty() ? std::string("(empty)") : p.str());
    } while (std::next_permutation(v.begin(), v.end()));
  }
  return {};
}

CheckResult from_search(std::string name, int max_n,
                        const std::function<bool(const Permutation&)>& ok) {
  auto detail = find_counterexample(max_n, ok);
  const bool passed = detail.empty();
  if (passed) detail = "n <= " + std::to_string(max_n);
  return {std::move(name), passed, std::move(detail)};
}

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt catalan(int n) {
  BigInt c = 1;  // C_0
  for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

std::vector<Permutation> all_of_length(int n) {
  std::vector<Permutation> out;
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::string compare_tables(const TierTable& a, const TierTable& b, int max_n, int max_t) {
  for (int n = 1; n <= max_n; ++n) {
    for (int t = 0; t <= std::min(max_t, n - 1); ++t) {
      if (a.at(n, t) != b.at(n, t)) {
        return "mismatch at (" + std::to_string(n) + ", " + std::to_string(t) + "): " +
               a.at(n, t).str() + " vs " + b.at(n, t).str();
      }
    }
  }
  return {};
}

CheckResult table_check(std::string name, const std::string& mismatch, const std::string& scope) {
  return {std::move(name), mismatch.empty(), mismatch.empty() ? scope : mismatch};
}

}  // namespace

std::vector<CheckResult> run_validation(const ValidationOptions& options) {
  const int N = std::max(options.max_n, 1);
  const int n8 = std::min(N, 8);
  const int n7 = std::min(N, 7);
  std::vector<CheckResult> results;

  results.push_back(from_search("tier by separated pairs equals tier by simulation", N,
                                [](const Permutation& p) { return tier(p) == tier_by_simulation(p); }));

  const Permutation p231 = parse_permutation("231");
  results.push_back(from_search("separated pair exists iff 231 is contained", n8,
                                [&](const Permutation& p) {
                                  return separated_pairs(p).empty() != contains_pattern(p, p231);
                                }));

  results.push_back(from_search("separated pairs never increase under deletion", n8,
                                [](const Permutation& p) {
                                  const int t = tier(p);
                                  for (int i = 1; i <= p.size(); ++i) {
                                    if (tier(p.remove_at(i)) > t) return false;
                                  }
                                  return true;
                                }));

  results.push_back(from_search("separated pair witnesses are valid", n7, [](const Permutation& p) {
    const auto pos = p.inverse();
    for (const auto& pair : separated_pairs(p)) {
      if (pair.large != pair.small + 1) return false;
      const int from = pos[static_cast<std::size_t>(pair.large - 1)];
      const int to = pos[static_cast<std::size_t>(pair.small - 1)];
      if (!(from < pair.witness_position && pair.witness_position < to)) return false;
      if (p.at(pair.witness_position) <= pair.large) return false;
    }
    return true;
  }));

  results.push_back(from_search("plus/minus decompositions recombine", n7, [](const Permutation& p) {
    if (p.empty()) return true;
    const auto plus = plus_decompose(p);
    const auto minus = minus_decompose(p);
    for (const auto& c : plus.components) {
      if (!is_plus_indecomposable(c)) return false;
    }
    for (const auto& c : minus.components) {
      if (!is_minus_indecomposable(c)) return false;
    }
    return recombine(plus) == p && recombine(minus) == p;
  }));

  results.push_back(from_search("simulation trace invariants", n7, [](const Permutation& p) {
    const auto trace = sort_with_trace(p);
    std::vector<int> output;
    std::vector<int> input(p.values().begin(), p.values().end());
    for (const auto& pass : trace.passes) {
      int pops = 0;
      for (const auto& e : pass.events) {
        if (e.kind == EventKind::pop) {
          output.push_back(e.value);
          ++pops;
        }
      }
      if (pops == 0) return false;
      // Leftover is the unpopped part of this pass's input, in order.
      std::vector<int> expected;
      for (const int v : input) {
        if (std::find(output.begin(), output.end(), v) == output.end()) expected.push_back(v);
      }
      if (expected != pass.leftover) return false;
      input = pass.leftover;
    }
    std::vector<int> sorted(output.size());
    std::iota(sorted.begin(), sorted.end(), 1);
    return output == sorted && trace.tier() == tier(p);
  }));

  {
    const int limit = std::min(N, 10);
    std::string detail;
    for (int n = 1; n <= limit && detail.empty(); ++n) {
      auto parts = scan_permutations<int>(n, options.threads, [](int& best, std::span<const int> v) {
        best = std::max(best, count_separated_pairs(v));
      });
      const int best = *std::max_element(parts.begin(), parts.end());
      if (best != max_tier(n)) {
        detail = "n=" + std::to_string(n) + ": exhaustive " + std::to_string(best) +
                 ", formula " + std::to_string(max_tier(n));
      }
    }
    results.push_back({"exhaustive maximum tier equals n - 1 - floor(log2 n)", detail.empty(),
                       detail.empty() ? "n <= " + std::to_string(limit) : detail});
  }

  {
    std::string detail;
    for (std::int64_t n = 1; n <= 1'000'000 && detail.empty(); ++n) {
      const int closed = max_tier(n);
      if (max_tier_recursive(n) != closed || max_tier_binary_sum(n) != closed) {
        detail = "n=" + std::to_string(n);
      }
      if (n > 1 && closed > max_tier(n - 1) + 1) detail = "step > 1 at n=" + std::to_string(n);
      if (closed < (n - 1) / 2) detail = "below floor((n-1)/2) at n=" + std::to_string(n);
    }
    results.push_back({"maximum tier: recursive, binary-sum and closed forms agree",
                       detail.empty(), detail.empty() ? "n <= 1000000" : detail});
  }

  {
    std::string detail;
    for (int n = 1; n <= 64 && detail.empty(); ++n) {
      if (tier(max_tier_witness(n)) != max_tier(n)) detail = "n=" + std::to_string(n);
    }
    results.push_back({"maximum-tier witness attains the maximum", detail.empty(),
                       detail.empty() ? "n <= 64" : detail});
  }

  {
    const int total = std::min(N, 9);
    std::vector<std::vector<Permutation>> by_length(static_cast<std::size_t>(total));
    for (int n = 1; n < total; ++n) by_length[static_cast<std::size_t>(n)] = all_of_length(n);
    std::string detail;
    for (int a = 1; a < total && detail.empty(); ++a) {
      for (int b = 1; a + b <= total && detail.empty(); ++b) {
        for (const auto& s : by_length[static_cast<std::size_t>(a)]) {
          const int ts = tier(s);
          const int bonus = s.values().back() == 1 ? 0 : 1;
          for (const auto& u : by_length[static_cast<std::size_t>(b)]) {
            const int tu = tier(u);
            if (tier(direct_sum(s, u)) != ts + tu) {
              detail = "plus: " + s.str() + " / " + u.str();
              break;
            }
            if (tier(skew_sum(s, u)) != ts + tu + bonus) {
              detail = "minus: " + s.str() + " / " + u.str();
              break;
            }
          }
          if (!detail.empty()) break;
        }
      }
    }
    results.push_back({"tier of plus and minus sums", detail.empty(),
                       detail.empty() ? "total length <= " + std::to_string(total) : detail});
  }

  {
    std::mt19937 rng(20240601);
    std::string detail;
    for (int trial = 0; trial < 2000 && detail.empty(); ++trial) {
      int remaining = std::uniform_int_distribution<int>(1, 14)(rng);
      std::vector<Permutation> chain;
      while (remaining > 0) {
        const int len = std::uniform_int_distribution<int>(1, remaining)(rng);
        std::vector<int> v(static_cast<std::size_t>(len));
        std::iota(v.begin(), v.end(), 1);
        Permutation c;
        do {
          std::shuffle(v.begin(), v.end(), rng);
          c = Permutation(v);
        } while (!is_minus_indecomposable(c));
        chain.push_back(c);
        remaining -= len;
      }
      const Permutation whole = recombine({DecompositionKind::minus, chain});
      if (tier_of_minus_chain(chain) != tier(whole)) detail = "chain for " + whole.str();
    }
    results.push_back({"minus-chain tier formula on random chains", detail.empty(),
                       detail.empty() ? "2000 chains, total length <= 14" : detail});
  }

  {
    const Basis searched = compute_basis(1, 6);
    const Basis literal = basis_b1();
    results.push_back({"computed B1 equals the eleven listed patterns",
                       searched.elements == literal.elements,
                       std::to_string(searched.elements.size()) + " elements"});
    results.push_back(from_search("Av(B1) is exactly tier <= 1", n8, [&](const Permutation& p) {
      return avoids_basis(p, literal) == (tier(p) <= 1);
    }));

    std::string detail;
    for (const Basis& b : {basis_b0(), literal}) {
      for (const auto& e : b.elements) {
        if (tier(e) != b.tier_bound + 1) detail = "tier of " + e.str();
        for (int i = 1; i <= e.size(); ++i) {
          if (tier(e.remove_at(i)) > b.tier_bound) detail = "not minimal: " + e.str();
        }
        if (e.size() > 3 * (b.tier_bound + 1)) detail = "too long: " + e.str();
        for (const auto& other : b.elements) {
          if (!(other == e) && contains_pattern(other, e)) detail = "comparable: " + e.str();
        }
      }
    }
    results.push_back({"B0 and B1 are minimal antichains of tier t+1", detail.empty(), detail});
  }

  const TierTable brute = table_bruteforce(std::min(N, kBruteForceCap), options.threads);
  const int brute_n = brute.max_n();
  const auto recurrence = table_recurrence(std::max(brute_n, 12));
  results.push_back(table_check("T(n,t): brute force equals recurrence",
                                compare_tables(brute, recurrence.tiers, brute_n, brute_n),
                                "n <= " + std::to_string(brute_n)));
  const int parker_n = std::min(brute_n, 9);
  results.push_back(table_check("T(n,t): brute force equals Parker descent counts",
                                compare_tables(brute, table_parker(parker_n), parker_n, parker_n),
                                "n <= " + std::to_string(parker_n)));
  results.push_back(table_check("T(n,t): recurrence equals generating function",
                                compare_tables(recurrence.tiers, table_generating_function(12, 4), 12, 4),
                                "n <= 12, t <= 4"));
  {
    std::string detail;
    for (int n = 1; n <= recurrence.tiers.max_n(); ++n) {
      if (recurrence.tiers.row_sum(n) != factorial(n)) detail = "row sum at n=" + std::to_string(n);
      if (recurrence.tiers.at(n, 0) != catalan(n)) detail = "Catalan at n=" + std::to_string(n);
      BigInt by_position = 0;
      for (int t = 0; t < n; ++t) {
        for (int k = 1; k <= n; ++k) by_position += recurrence.positions.at(n, t, k);
      }
      if (by_position != factorial(n)) detail = "P(n,t,k) sum at n=" + std::to_string(n);
    }
    results.push_back({"row sums are n! and column 0 is Catalan", detail.empty(),
                       detail.empty() ? "n <= " + std::to_string(recurrence.tiers.max_n()) : detail});
  }

  results.push_back(from_search("Parker bijection round-trips and carries descents to pairs", n8,
                                [](const Permutation& p) {
                                  const auto seq = perm_to_parker(p);
                                  if (!(parker_to_perm(seq) == p)) return false;
                                  if (!(perm_to_parker(parker_to_perm(seq)) == seq)) return false;
                                  std::vector<int> larges;
                                  for (const auto& pair : separated_pairs(p)) larges.push_back(pair.large);
                                  return descents(seq) == larges;
                                }));

  {
    const int order = kDefaultSeriesOrder;
    const PsiTower tower = psi_tower(8, order);
    const RationalSeries one = RationalSeries::constant(1, order);
    std::string detail;
    for (int j = 1; j <= tower.top(); ++j) {
      // psi_1^2 = 1 - 4u, and 2 psi_{j-1} - 1 above that.
      RationalSeries expected = tower.level(j - 1) * Rational(2) - one;
      if (j == 1) {
        expected = one;
        expected[1] = -4;
      }
      if (!(tower.level(j) * tower.level(j) == expected)) detail = "level " + std::to_string(j);
    }
    results.push_back({"psi tower squaring identity through u^32", detail.empty(), detail});
  }

  {
    // prod_{i<j} rho_i = (1 - psi_j) / (2u), with rho_i = (1-psi_{i+1})/(1-psi_i);
    // each factor is formed after cancelling u from numerator and denominator.
    const int order = 24;
    const PsiTower tower = psi_tower(6, order + 1);
    const RationalSeries one = RationalSeries::constant(1, order + 1);
    std::vector<RationalSeries> reduced;  // (1 - psi_j) / u
    for (int j = 0; j <= 6; ++j) reduced.push_back((one - tower.level(j)).divide_by_variable());
    std::string detail;
    RationalSeries product = RationalSeries::constant(1, order);
    for (int j = 1; j <= 5; ++j) {
      product = product * (reduced[static_cast<std::size_t>(j)] / reduced[static_cast<std::size_t>(j - 1)]);
      if (!(product == reduced[static_cast<std::size_t>(j)] * Rational(1, 2))) {
        detail = "j=" + std::to_string(j);
      }
    }
    results.push_back({"rho product identity", detail.empty(), detail.empty() ? "j <= 5" : detail});
  }

  {
    // (1 - sqrt(2 sqrt(1-4z) - 1)) / (2z) - 1/sqrt(1-4z)
    const int order = 13;
    RationalSeries radicand = RationalSeries::constant(1, order);
    radicand[1] = -4;
    const RationalSeries root = series_sqrt(radicand);
    const RationalSeries one = RationalSeries::constant(1, order);
    const RationalSeries nested = series_sqrt(root * Rational(2) - one);
    const RationalSeries closed =
        (one - nested).divide_by_variable() * Rational(1, 2) - (one / root).with_order(order - 1);
    const auto extracted = tier_generating_function(1, 12);
    std::string detail;
    for (int n = 0; n <= 12; ++n) {
      if (closed[n] != Rational(extracted[static_cast<std::size_t>(n)])) detail = "n=" + std::to_string(n);
    }
    results.push_back({"T_1 matches its closed form", detail.empty(), detail.empty() ? "n <= 12" : detail});
  }

  return results;
}

}  // namespace tierperm
