#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "tierperm/permutation.hpp"
#include "tierperm/stack_machine.hpp"

using namespace tierperm;

namespace {

Permutation P(const char* text) { return parse_permutation(text); }

using Ints = std::vector<int>;

}  // namespace

TEST_CASE("run_single_pass examples") {
  auto r = run_single_pass(Ints{3, 5, 6, 1, 2, 4}, 1);
  CHECK(r.popped == Ints{1, 2});
  CHECK(r.leftover == Ints{3, 5, 6, 4});

  r = run_single_pass(Ints{3, 5, 6, 4}, 3);
  CHECK(r.popped == Ints{3, 4});
  CHECK(r.leftover == Ints{5, 6});

  r = run_single_pass(Ints{1, 2, 3}, 1);
  CHECK(r.popped == Ints{1, 2, 3});
  CHECK(r.leftover.empty());

  r = run_single_pass(Ints{}, 1);
  CHECK(r.popped.empty());
  CHECK(r.events.empty());
}

TEST_CASE("sort_with_trace pass structure") {
  const auto t = sort_with_trace(P("356124"));
  CHECK(t.total_passes() == 3);
  CHECK(t.tier() == 2);
  CHECK(t.passes[0].leftover == Ints{3, 5, 6, 4});
  CHECK(t.passes[1].leftover == Ints{5, 6});
  CHECK(t.passes[2].leftover.empty());

  const auto u = sort_with_trace(P("231"));
  REQUIRE(u.total_passes() == 2);
  CHECK(u.passes[0].leftover == Ints{2, 3});
  CHECK(u.tier() == 1);

  CHECK(sort_with_trace(P("12345")).total_passes() == 1);
  CHECK(sort_with_trace(Permutation{}).total_passes() == 0);
  CHECK(sort_with_trace(Permutation{}).tier() == 0);
}

TEST_CASE("trace rendering of 356124 is bit-exact") {
  const std::string expected =
      "-- pass 1 --\n"
      "push 3\npush 5\npush 6\npush 1\npop 1\npush 2\npop 2\npush 4\n"
      "-- pass 2 --\n"
      "push 3\npop 3\npush 5\npush 6\npush 4\npop 4\n"
      "-- pass 3 --\n"
      "push 5\npop 5\npush 6\npop 6\n"
      "tier 2\n";
  CHECK(render_trace(sort_with_trace(P("356124"))) == expected);
  CHECK(render_trace(sort_with_trace(Permutation{})) == "tier 0\n");
}

TEST_CASE("tier_by_simulation examples") {
  CHECK(tier_by_simulation(P("231")) == 1);
  CHECK(tier_by_simulation(P("356124")) == 2);
  CHECK(tier_by_simulation(P("4637251")) == 4);
  CHECK(tier_by_simulation(Permutation{}) == 0);
}

TEST_CASE("trace invariants hold for every permutation up to length 7") {
  for (int n = 0; n <= 7; ++n) {
    Ints v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    do {
      const auto trace = sort_with_trace(Permutation(v));
      Ints output;
      Ints input = v;
      for (const auto& pass : trace.passes) {
        int next = static_cast<int>(output.size()) + 1;
        std::size_t pushed = 0;
        int pops = 0;
        for (const auto& e : pass.events) {
          if (e.kind == EventKind::push) {
            REQUIRE(e.value == input[pushed]);
            ++pushed;
          } else {
            REQUIRE(e.value == next);
            ++next;
            ++pops;
            output.push_back(e.value);
          }
        }
        REQUIRE(pops > 0);
        // Leftover is a subsequence of this pass's input.
        auto it = input.begin();
        for (const int x : pass.leftover) {
          it = std::find(it, input.end(), x);
          REQUIRE(it != input.end());
        }
        input = pass.leftover;
      }
      Ints identity(static_cast<std::size_t>(n));
      std::iota(identity.begin(), identity.end(), 1);
      REQUIRE(output == identity);
      REQUIRE(trace.tier() == tier_by_simulation(Permutation(v)));
    } while (std::next_permutation(v.begin(), v.end()));
  }
}
