// Multi-pass sorting with a single stack.
//
// Entries are pushed in input order and an entry is popped only when it is
// the next value the output needs. Whatever is still on the stack when the
// input runs out is fed back, bottom to top, as the input of the next pass.

#pragma once

#include <span>
#include <string>
#include <vector>

#include "tierperm/permutation.hpp"

namespace tierperm {

enum class EventKind { push, pop };

struct Event {
  EventKind kind = EventKind::push;
  int value = 0;

  friend bool operator==(const Event&, const Event&) = default;
};

struct Pass {
  std::vector<Event> events;
  std::vector<int> leftover;  // bottom to top
};

struct SinglePassResult {
  std::vector<int> popped;
  std::vector<int> leftover;
  std::vector<Event> events;
};

/// One pass over `input`; pops greedily whenever the top equals the next
/// needed value.
SinglePassResult run_single_pass(std::span<const int> input, int next_needed);

struct SortTrace {
  Permutation input;
  std::vector<Pass> passes;

  int total_passes() const { return static_cast<int>(passes.size()); }
  int tier() const { return passes.empty() ? 0 : total_passes() - 1; }
};

SortTrace sort_with_trace(const Permutation& p);

/// Pass count minus one, without recording events. 0 for the empty input.
int tier_by_simulation(std::span<const int> values);
int tier_by_simulation(const Permutation& p);

/// `-- pass k --` headers, one `push v` / `pop v` line per event, and a
/// closing `tier t` line. Every line ends with '\n'.
std::string render_trace(const SortTrace& trace);

}  // namespace tierperm
