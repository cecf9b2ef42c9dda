#include "tierperm/stack_machine.hpp"

#include <stdexcept>
#include <string>

namespace tierperm {

SinglePassResult run_single_pass(std::span<const int> input, int next_needed) {
  SinglePassResult result;
  std::vector<int>& stack = result.leftover;
  std::size_t next_input = 0;
  for (;;) {
    if (!stack.empty() && stack.back() == next_needed) {
      result.events.push_back({EventKind::pop, stack.back()});
      result.popped.push_back(stack.back());
      stack.pop_back();
      ++next_needed;
    } else if (next_input < input.size()) {
      stack.push_back(input[next_input]);
      result.events.push_back({EventKind::push, input[next_input]});
      ++next_input;
    } else {
      break;
    }
  }
  return result;
}

SortTrace sort_with_trace(const Permutation& p) {
  SortTrace trace{p, {}};
  std::vector<int> input(p.values().begin(), p.values().end());
  int next_needed = 1;
  while (!input.empty()) {
    auto pass = run_single_pass(input, next_needed);
    next_needed += static_cast<int>(pass.popped.size());
    input = pass.leftover;
    trace.passes.push_back({std::move(pass.events), std::move(pass.leftover)});
  }
  return trace;
}

int tier_by_simulation(std::span<const int> values) {
  std::vector<int> input(values.begin(), values.end());
  std::vector<int> stack;
  stack.reserve(input.size());
  int next_needed = 1;
  int passes = 0;
  while (!input.empty()) {
    ++passes;
    stack.clear();
    const int before = next_needed;
    for (const int v : input) {
      stack.push_back(v);
      while (!stack.empty() && stack.back() == next_needed) {
        stack.pop_back();
        ++next_needed;
      }
    }
    if (next_needed == before) {
      throw std::invalid_argument("tier_by_simulation: input is not a permutation");
    }
    input.swap(stack);
  }
  return passes == 0 ? 0 : passes - 1;
}

int tier_by_simulation(const Permutation& p) { return tier_by_simulation(p.values()); }

std::string render_trace(const SortTrace& trace) {
  std::string out;
  for (std::size_t k = 0; k < trace.passes.size(); ++k) {
    out += "-- pass " + std::to_string(k + 1) + " --\n";
    for (const auto& e : trace.passes[k].events) {
      out += e.kind == EventKind::push ? "push " : "pop ";
      out += std::to_string(e.value);
      out += '\n';
    }
  }
  out += "tier " + std::to_string(trace.tier()) + "\n";
  return out;
}

}  // namespace tierperm
