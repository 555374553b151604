#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "citerank/error.hpp"
#include "citerank/journal_graph.hpp"

namespace citerank {

/// What normalize_columns does with a journal that cites no other journal.
enum class DanglingPolicy { Uniform, Error };

/**
 * Sparse column-stochastic matrix over an ordered journal list. Column `j`
 * holds the distribution of citations made by journal `j` over cited
 * journals. Construction validates stochasticity.
 */
class StochasticMatrix {
public:
  using Index = JournalGraph::Index;

  struct Entry {
    Index row;
    double probability;

    friend bool operator==(const Entry&, const Entry&) = default;
  };

  static constexpr double column_sum_tolerance = 1e-12;

  StochasticMatrix(std::vector<JournalId> order, std::vector<std::vector<Entry>> columns)
      : order_(std::move(order)), columns_(std::move(columns)) {
    if (columns_.size() != order_.size())
      throw InvalidArgument("matrix has " + std::to_string(columns_.size()) + " columns for " +
                            std::to_string(order_.size()) + " journals");
    for (std::size_t c = 0; c < columns_.size(); ++c) {
      double sum = 0.0;
      for (const auto& e : columns_[c]) {
        if (e.row >= order_.size())
          throw InvalidArgument("row index out of range in column " + order_[c].str());
        if (!(e.probability > 0.0 && e.probability <= 1.0))
          throw InvalidArgument("probability outside (0, 1] in column " + order_[c].str());
        sum += e.probability;
      }
      if (std::abs(sum - 1.0) > column_sum_tolerance)
        throw InvalidArgument("column " + order_[c].str() + " sums to " + std::to_string(sum));
    }
  }

  std::size_t size() const noexcept { return order_.size(); }
  const std::vector<JournalId>& order() const noexcept { return order_; }
  std::span<const Entry> column(Index c) const { return columns_.at(c); }

  double at(Index row, Index col) const {
    for (const auto& e : columns_.at(col))
      if (e.row == row) return e.probability;
    return 0.0;
  }

  /// out = M * in
  void multiply(std::span<const double> in, std::span<double> out) const {
    std::fill(out.begin(), out.end(), 0.0);
    for (std::size_t c = 0; c < columns_.size(); ++c) {
      const double x = in[c];
      for (const auto& e : columns_[c]) out[e.row] += e.probability * x;
    }
  }

  std::vector<double> multiply(std::span<const double> in) const {
    std::vector<double> out(size());
    multiply(in, out);
    return out;
  }

  friend bool operator==(const StochasticMatrix&, const StochasticMatrix&) = default;

private:
  std::vector<JournalId> order_;
  std::vector<std::vector<Entry>> columns_;
};

/// Column-normalizes the cross-journal citation weights of `jg`: entry (t, s)
/// is weight(s, t) / (cross-journal out-weight of s). Self-loops are ignored.
inline StochasticMatrix normalize_columns(const JournalGraph& jg, DanglingPolicy dangling) {
  using Index = JournalGraph::Index;
  const std::size_t n = jg.size();
  if (n == 0) throw InvalidArgument("cannot normalize an empty journal graph");

  std::vector<std::vector<StochasticMatrix::Entry>> columns(n);
  for (Index s = 0; s < n; ++s) {
    const std::uint64_t total = jg.cross_out_weight(s);
    if (total == 0) {
      if (dangling == DanglingPolicy::Error) throw DanglingJournal(jg.journal(s).str());
      columns[s].reserve(n);
      for (Index t = 0; t < n; ++t) columns[s].push_back({t, 1.0 / static_cast<double>(n)});
      continue;
    }
    for (const auto& e : jg.out_edges(s)) {
      if (e.target == s) continue;
      columns[s].push_back({e.target, static_cast<double>(e.weight) / static_cast<double>(total)});
    }
  }
  return StochasticMatrix(jg.journals(), std::move(columns));
}

}  // namespace citerank
