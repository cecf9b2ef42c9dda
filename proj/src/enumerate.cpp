#include "tierperm/enumerate.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "tierperm/errors.hpp"
#include "tierperm/exhaustive.hpp"
#include "tierperm/parker.hpp"
#include "tierperm/permutation.hpp"

namespace tierperm {

namespace {

void require_length(int max_n) {
  if (max_n < 1) throw std::invalid_argument("maximum length must be positive");
}

}  // namespace

TierTable::TierTable(int max_n, int width)
    : max_n_(max_n),
      width_(width < 0 ? max_n : width),
      rows_(static_cast<std::size_t>(std::max(max_n, 0)),
            std::vector<BigInt>(static_cast<std::size_t>(width < 0 ? max_n : width), 0)) {}

BigInt TierTable::at(int n, int t) const {
  if (n < 1 || n > max_n_ || t < 0 || t >= width_) return 0;
  return rows_[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(t)];
}

void TierTable::set(int n, int t, BigInt value) {
  if (n < 1 || n > max_n_ || t < 0 || t >= width_) {
    throw std::out_of_range("table entry (" + std::to_string(n) + ", " + std::to_string(t) +
                            ") outside the table");
  }
  rows_[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(t)] = std::move(value);
}

BigInt TierTable::row_sum(int n) const {
  BigInt sum = 0;
  for (int t = 0; t < width_; ++t) sum += at(n, t);
  return sum;
}

int TierTable::max_nonzero_column() const {
  int last = 0;
  for (const auto& row : rows_) {
    for (int t = 0; t < width_; ++t) {
      if (row[static_cast<std::size_t>(t)] != 0) last = std::max(last, t);
    }
  }
  return last;
}

PositionTable::PositionTable(int max_n) : max_n_(max_n) {
  for (int n = 1; n <= max_n; ++n) {
    entries_.emplace_back(static_cast<std::size_t>(n),
                          std::vector<BigInt>(static_cast<std::size_t>(n), 0));
  }
}

BigInt PositionTable::at(int n, int t, int k) const {
  if (n < 1 || n > max_n_ || t < 0 || t >= n || k < 1 || k > n) return 0;
  return entries_[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(t)]
                 [static_cast<std::size_t>(k - 1)];
}

void PositionTable::set(int n, int t, int k, BigInt value) {
  if (n < 1 || n > max_n_ || t < 0 || t >= n || k < 1 || k > n) {
    throw std::out_of_range("position table index out of range");
  }
  entries_[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(t)]
          [static_cast<std::size_t>(k - 1)] = std::move(value);
}

TierTable table_bruteforce(int max_n, unsigned threads) {
  require_length(max_n);
  if (max_n > kBruteForceCap) {
    throw LimitExceeded("brute-force table is capped at n = " + std::to_string(kBruteForceCap));
  }
  TierTable table(max_n);
  for (int n = 1; n <= max_n; ++n) {
    using Histogram = std::vector<long long>;
    auto parts = scan_permutations<Histogram>(n, threads, [n](Histogram& h, std::span<const int> perm) {
      if (h.empty()) h.assign(static_cast<std::size_t>(n), 0);
      ++h[static_cast<std::size_t>(count_separated_pairs(perm))];
    });
    for (const auto& h : parts) {
      for (std::size_t t = 0; t < h.size(); ++t) {
        table.set(n, static_cast<int>(t), table.at(n, static_cast<int>(t)) + h[t]);
      }
    }
  }
  return table;
}

RecurrenceTables table_recurrence(int max_n) {
  require_length(max_n);
  RecurrenceTables out{TierTable(max_n), PositionTable(max_n)};
  out.positions.set(1, 0, 1, 1);

  for (int n = 1; n < max_n; ++n) {
    // prefix[t][j] = sum_{i <= j} P(n, t, i), j = 0..n.
    std::vector<std::vector<BigInt>> prefix(static_cast<std::size_t>(n),
                                            std::vector<BigInt>(static_cast<std::size_t>(n) + 1, 0));
    for (int t = 0; t < n; ++t) {
      for (int j = 1; j <= n; ++j) {
        prefix[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)] =
            prefix[static_cast<std::size_t>(t)][static_cast<std::size_t>(j - 1)] +
            out.positions.at(n, t, j);
      }
    }
    auto upto = [&](int t, int j) -> BigInt {
      if (t < 0 || t >= n || j < 1) return 0;
      return prefix[static_cast<std::size_t>(t)][static_cast<std::size_t>(std::min(j, n))];
    };
    for (int t = 0; t <= n; ++t) {
      for (int k = 1; k <= n + 1; ++k) {
        // j >= k-1 over 1..n, plus j <= k-2 one tier down.
        const BigInt value = (upto(t, n) - upto(t, k - 2)) + upto(t - 1, k - 2);
        out.positions.set(n + 1, t, k, value);
      }
    }
  }

  for (int n = 1; n <= max_n; ++n) {
    for (int t = 0; t < n; ++t) {
      BigInt sum = 0;
      for (int k = 1; k <= n; ++k) sum += out.positions.at(n, t, k);
      out.tiers.set(n, t, sum);
    }
  }
  return out;
}

TierTable table_parker(int max_n) {
  require_length(max_n);
  TierTable table(max_n);
  for (int n = 1; n <= max_n; ++n) {
    const auto counts = count_parker_by_descents(n);
    for (std::size_t t = 0; t < counts.size(); ++t) table.set(n, static_cast<int>(t), counts[t]);
  }
  return table;
}

TierTable table_generating_function(int max_n, int max_t, int order) {
  require_length(max_n);
  if (order < max_n) {
    throw std::invalid_argument("series order " + std::to_string(order) +
                                " is smaller than the table length " + std::to_string(max_n));
  }
  TierTable table(max_n);
  const int last = std::min(max_t, max_n - 1);
  for (int t = 0; t <= last; ++t) {
    const auto column = tier_generating_function(t, order);
    for (int n = 1; n <= max_n; ++n) table.set(n, t, column[static_cast<std::size_t>(n)]);
  }
  return table;
}

TierTable cumulative(const TierTable& table) {
  const int width = table.max_nonzero_column() + 1;
  TierTable out(table.max_n(), width);
  for (int n = 1; n <= table.max_n(); ++n) {
    BigInt running = 0;
    for (int t = 0; t < width; ++t) {
      running += table.at(n, t);
      out.set(n, t, running);
    }
  }
  return out;
}

std::string render_table_text(const TierTable& table, bool cumulative) {
  const int columns = table.max_nonzero_column() + 1;
  std::vector<std::string> headers;
  for (int t = 0; t < columns; ++t) {
    headers.push_back((cumulative && t > 0 ? "t <= " : "t = ") + std::to_string(t));
  }

  std::vector<std::vector<std::string>> cells;
  for (int n = 1; n <= table.max_n(); ++n) {
    int last = -1;
    for (int t = 0; t < columns; ++t) {
      if (table.at(n, t) != 0) last = t;
    }
    std::vector<std::string> row;
    for (int t = 0; t < columns; ++t) {
      row.push_back(cumulative || t <= last ? table.at(n, t).str() : "");
    }
    cells.push_back(std::move(row));
  }

  std::vector<std::size_t> widths(static_cast<std::size_t>(columns));
  for (std::size_t c = 0; c < widths.size(); ++c) {
    widths[c] = headers[c].size();
    for (const auto& row : cells) widths[c] = std::max(widths[c], row[c].size());
  }
  const std::string first_header = "n";
  const std::size_t label_width = std::string("n = ").size() + std::to_string(table.max_n()).size();

  auto pad_left = [](const std::string& s, std::size_t w) { return std::string(w - s.size(), ' ') + s; };
  auto pad_right = [](const std::string& s, std::size_t w) { return s + std::string(w - s.size(), ' '); };

  std::ostringstream os;
  auto emit = [&](const std::string& label, const std::vector<std::string>& row) {
    std::string line = pad_right(label, label_width);
    for (std::size_t c = 0; c < row.size(); ++c) line += "  " + pad_left(row[c], widths[c]);
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  };
  emit(first_header, headers);
  for (int n = 1; n <= table.max_n(); ++n) {
    emit("n = " + std::to_string(n), cells[static_cast<std::size_t>(n - 1)]);
  }
  return os.str();
}

std::string render_table_csv(const TierTable& table) {
  const int columns = table.max_nonzero_column() + 1;
  std::ostringstream os;
  os << "n";
  for (int t = 0; t < columns; ++t) os << ",t" << t;
  os << '\n';
  for (int n = 1; n <= table.max_n(); ++n) {
    os << n;
    for (int t = 0; t < columns; ++t) os << ',' << table.at(n, t).str();
    os << '\n';
  }
  return os.str();
}

std::string render_table_json(const TierTable& table) {
  // Hand-written so that counts beyond 64 bits stay exact JSON numbers.
  const int columns = table.max_nonzero_column() + 1;
  std::ostringstream os;
  os << "{\"max_n\": " << table.max_n() << ", \"rows\": [";
  for (int n = 1; n <= table.max_n(); ++n) {
    os << (n > 1 ? ", " : "") << '[';
    for (int t = 0; t < columns; ++t) os << (t > 0 ? ", " : "") << table.at(n, t).str();
    os << ']';
  }
  os << "]}\n";
  return os.str();
}

std::string render_table_bfile(const TierTable& table) {
  std::ostringstream os;
  long long index = 1;
  for (int n = 1; n <= table.max_n(); ++n) {
    for (int t = 0; t < n; ++t) os << index++ << ' ' << table.at(n, t).str() << '\n';
  }
  return os.str();
}

std::string render_column_bfile(const TierTable& table, int t) {
  std::ostringstream os;
  for (int n = 1; n <= table.max_n(); ++n) os << n << ' ' << table.at(n, t).str() << '\n';
  return os.str();
}

}  // namespace tierperm
