#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "tierperm/basis.hpp"
#include "tierperm/enumerate.hpp"
#include "tierperm/parker.hpp"
#include "tierperm/permutation.hpp"
#include "tierperm/series.hpp"
#include "tierperm/stack_machine.hpp"
#include "tierperm/tier.hpp"
#include "tierperm/validation.hpp"

namespace tierperm::cli {

namespace {

inline constexpr int kRecurrenceCap = 100;

class InconsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string join(const std::vector<std::string>& tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t;
  }
  return out;
}

std::string join_values(const std::vector<int>& values) {
  std::string out;
  for (const int v : values) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

struct Settings {
  unsigned threads = 1;

  std::vector<std::string> perm_tokens;
  std::string method;
  bool trace = false;

  int max_n = 10;
  bool cumulative = false;
  std::string format = "text";
  int column = -1;

  int tier_bound = 0;
  int max_len = -1;
  bool allow_large = false;
  bool counts = false;

  long long length = 0;
  bool witness = false;

  std::vector<std::string> to_perm;
  std::vector<std::string> to_seq;

  int order = kDefaultSeriesOrder;
};

void cmd_tier(const Settings& s, std::ostream& out) {
  const Permutation p = parse_permutation(join(s.perm_tokens));
  const std::string method = s.method.empty() ? "pairs" : s.method;
  if (method == "pairs") {
    out << tier(p) << '\n';
  } else if (method == "sim") {
    out << tier_by_simulation(p) << '\n';
  } else {
    const int by_pairs = tier(p);
    const int by_sim = tier_by_simulation(p);
    if (by_pairs != by_sim) {
      throw InconsistencyError("internal consistency failure: separated pairs give " +
                               std::to_string(by_pairs) + ", simulation gives " +
                               std::to_string(by_sim));
    }
    out << by_pairs << '\n';
  }
}

void cmd_sort(const Settings& s, std::ostream& out) {
  const auto trace = sort_with_trace(parse_permutation(join(s.perm_tokens)));
  if (s.trace) {
    out << render_trace(trace);
    return;
  }
  for (std::size_t k = 0; k < trace.passes.size(); ++k) {
    std::vector<int> popped;
    for (const auto& e : trace.passes[k].events) {
      if (e.kind == EventKind::pop) popped.push_back(e.value);
    }
    out << "pass " << k + 1 << ": output " << join_values(popped) << "; leftover "
        << join_values(trace.passes[k].leftover) << '\n';
  }
  out << "tier " << trace.tier() << '\n';
}

void cmd_pairs(const Settings& s, std::ostream& out) {
  const Permutation p = parse_permutation(join(s.perm_tokens));
  for (const auto& pair : separated_pairs(p)) {
    out << '(' << pair.large << ',' << pair.small << ") separated by " << p.at(pair.witness_position)
        << " at position " << pair.witness_position << '\n';
  }
}

void cmd_table(const Settings& s, std::ostream& out) {
  const std::string method = s.method.empty() ? "brute" : s.method;
  TierTable table;
  if (method == "brute") {
    table = table_bruteforce(s.max_n, s.threads);
  } else if (method == "recurrence") {
    if (s.max_n > kRecurrenceCap) {
      throw LimitExceeded("recurrence table is capped at n = " + std::to_string(kRecurrenceCap));
    }
    table = table_recurrence(s.max_n).tiers;
  } else if (method == "parker") {
    table = table_parker(s.max_n);
  } else {
    table = table_generating_function(s.max_n, s.max_n - 1, std::max(s.order, s.max_n));
  }
  if (s.cumulative) table = cumulative(table);

  if (s.format == "text") {
    out << render_table_text(table, s.cumulative);
  } else if (s.format == "csv") {
    out << render_table_csv(table);
  } else if (s.format == "json") {
    out << render_table_json(table);
  } else if (s.column >= 0) {
    out << render_column_bfile(table, s.column);
  } else {
    out << render_table_bfile(table);
  }
}

void cmd_basis(const Settings& s, std::ostream& out) {
  const int default_len = std::min(3 * (s.tier_bound + 1), kDefaultBasisLengthCap);
  const int max_len = s.max_len > 0 ? s.max_len : default_len;
  const Basis b = compute_basis(s.tier_bound, max_len, {s.allow_large, s.threads});
  if (s.counts) {
    out << render_basis_counts(b);
  } else if (s.format == "json") {
    out << render_basis_json(b);
  } else {
    out << render_basis_text(b);
  }
}

void cmd_maxtier(const Settings& s, std::ostream& out) {
  out << max_tier(s.length) << '\n';
  if (s.witness) {
    if (s.length > 1'000'000) throw LimitExceeded("witness length is capped at 1000000");
    out << max_tier_witness(static_cast<int>(s.length)) << '\n';
  }
}

void cmd_bijection(const Settings& s, std::ostream& out) {
  if (!s.to_perm.empty()) {
    out << parker_to_perm(parse_parker(join(s.to_perm))) << '\n';
  } else {
    out << perm_to_parker(parse_permutation(join(s.to_seq))).str() << '\n';
  }
}

void cmd_gf(const Settings& s, std::ostream& out) {
  out << render_series(tier_generating_function(s.tier_bound, s.order));
}

bool cmd_check(const Settings& s, std::ostream& out) {
  bool all = true;
  for (const auto& r : run_validation({s.max_n, s.threads})) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name;
    if (!r.detail.empty()) out << " (" << r.detail << ')';
    out << '\n';
    all = all && r.passed;
  }
  return all;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multi-pass stack sorting: tiers, bases, Parker sequences and enumeration",
               "tierperm"};
  app.require_subcommand(1);
  app.fallthrough();
  Settings s;
  app.add_option("--threads", s.threads, "Worker threads for exhaustive scans")
      ->check(CLI::Range(1u, 256u));

  auto* tier_cmd = app.add_subcommand("tier", "Tier of a permutation");
  tier_cmd->add_option("perm", s.perm_tokens, "Permutation")->required();
  tier_cmd->add_option("--method", s.method, "pairs | sim | both")
      ->check(CLI::IsMember({"pairs", "sim", "both"}));

  auto* sort_cmd = app.add_subcommand("sort", "Sort through the stack pass by pass");
  sort_cmd->add_option("perm", s.perm_tokens, "Permutation")->required();
  sort_cmd->add_flag("--trace", s.trace, "Print every push and pop");

  auto* pairs_cmd = app.add_subcommand("pairs", "Separated pairs with witnesses");
  pairs_cmd->add_option("perm", s.perm_tokens, "Permutation")->required();

  auto* table_cmd = app.add_subcommand("table", "Counts by length and tier");
  table_cmd->add_option("--max-n", s.max_n, "Largest length")->check(CLI::PositiveNumber);
  table_cmd->add_flag("--cumulative", s.cumulative, "Counts of tier at most t");
  table_cmd->add_option("--method", s.method, "brute | recurrence | gf | parker")
      ->check(CLI::IsMember({"brute", "recurrence", "gf", "parker"}));
  table_cmd->add_option("--format", s.format, "text | csv | json | bfile")
      ->check(CLI::IsMember({"text", "csv", "json", "bfile"}));
  table_cmd->add_option("--column", s.column, "b-file of a single column t")
      ->check(CLI::NonNegativeNumber);
  table_cmd->add_option("--order", s.order, "Series truncation order for --method gf")
      ->check(CLI::PositiveNumber);

  auto* basis_cmd = app.add_subcommand("basis", "Basis of the tier <= t class");
  basis_cmd->add_option("--tier", s.tier_bound, "Tier bound t")->required()->check(CLI::NonNegativeNumber);
  basis_cmd->add_option("--max-len", s.max_len, "Longest candidate length")->check(CLI::PositiveNumber);
  basis_cmd->add_flag("--allow-large", s.allow_large, "Permit lengths 10..12");
  basis_cmd->add_flag("--counts", s.counts, "Print per-length counts only");
  basis_cmd->add_option("--format", s.format, "text | json")->check(CLI::IsMember({"text", "json"}));

  auto* maxtier_cmd = app.add_subcommand("maxtier", "Maximum tier at length n");
  maxtier_cmd->add_option("n", s.length, "Length")->required()->check(CLI::PositiveNumber);
  maxtier_cmd->add_flag("--witness", s.witness, "Also print a permutation attaining it");

  auto* bijection_cmd = app.add_subcommand("bijection", "Parker sequence <-> permutation");
  auto* to_perm = bijection_cmd->add_option("--to-perm", s.to_perm, "Parker sequence to map");
  auto* to_seq = bijection_cmd->add_option("--to-seq", s.to_seq, "Permutation to map");
  to_perm->excludes(to_seq);
  bijection_cmd->require_option(1);

  auto* gf_cmd = app.add_subcommand("gf", "Series T_t(z)");
  gf_cmd->add_option("--tier", s.tier_bound, "Tier t")->required()->check(CLI::NonNegativeNumber);
  gf_cmd->add_option("--order", s.order, "Truncation order")->check(CLI::NonNegativeNumber);

  auto* check_cmd = app.add_subcommand("check", "Run the cross-oracle validation suite");
  check_cmd->add_option("--max-n", s.max_n, "Exhaustive length bound")->check(CLI::Range(1, 11));

  // Subcommand defaults that differ from the table defaults.
  check_cmd->preparse_callback([&s](std::size_t) { s.max_n = 9; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsageError;
  }

  try {
    if (tier_cmd->parsed()) cmd_tier(s, out);
    if (sort_cmd->parsed()) cmd_sort(s, out);
    if (pairs_cmd->parsed()) cmd_pairs(s, out);
    if (table_cmd->parsed()) cmd_table(s, out);
    if (basis_cmd->parsed()) cmd_basis(s, out);
    if (maxtier_cmd->parsed()) cmd_maxtier(s, out);
    if (bijection_cmd->parsed()) cmd_bijection(s, out);
    if (gf_cmd->parsed()) cmd_gf(s, out);
    if (check_cmd->parsed() && !cmd_check(s, out)) return kExitDomainError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
  return kExitOk;
}

}  // namespace tierperm::cli
