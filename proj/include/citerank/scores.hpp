#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "citerank/error.hpp"
#include "citerank/ids.hpp"

namespace citerank {

/// Declared normalization of a ScoreVector.
enum class Normalization {
  SumToOne,  ///< nonnegative, sums to 1 within 1e-9
  None,      ///< nonnegative only (rates, per-article values)
};

/// Nonnegative per-journal scores, parallel to an ordered journal list.
class ScoreVector {
public:
  static constexpr double sum_tolerance = 1e-9;

  ScoreVector() = default;

  ScoreVector(std::vector<JournalId> order, std::vector<double> scores,
              Normalization normalization = Normalization::SumToOne)
      : order_(std::move(order)), scores_(std::move(scores)), normalization_(normalization) {
    if (order_.size() != scores_.size())
      throw InvalidArgument("score vector has " + std::to_string(scores_.size()) + " scores for " +
                            std::to_string(order_.size()) + " journals");
    double sum = 0.0;
    for (std::size_t i = 0; i < scores_.size(); ++i) {
      if (!std::isfinite(scores_[i]) || scores_[i] < 0.0)
        throw InvalidArgument("score of journal '" + order_[i].str() + "' is negative or not finite");
      sum += scores_[i];
    }
    if (normalization_ == Normalization::SumToOne && std::abs(sum - 1.0) > sum_tolerance)
      throw InvalidArgument("scores sum to " + std::to_string(sum) + ", expected 1");
  }

  std::size_t size() const noexcept { return scores_.size(); }
  bool empty() const noexcept { return scores_.empty(); }
  const std::vector<JournalId>& order() const noexcept { return order_; }
  const std::vector<double>& values() const noexcept { return scores_; }
  Normalization normalization() const noexcept { return normalization_; }

  double operator[](const JournalId& j) const {
    auto it = std::find(order_.begin(), order_.end(), j);
    if (it == order_.end()) throw UnknownJournal(j.str());
    return scores_[static_cast<std::size_t>(it - order_.begin())];
  }

  friend bool operator==(const ScoreVector&, const ScoreVector&) = default;

private:
  std::vector<JournalId> order_;
  std::vector<double> scores_;
  Normalization normalization_ = Normalization::SumToOne;
};

struct ConvergenceDiagnostics {
  std::size_t iterations = 0;
  double residual_l1 = 0.0;
  double tolerance = 0.0;
  bool converged = false;
};

struct RankResult {
  ScoreVector scores;
  ConvergenceDiagnostics diagnostics;
};

/// Iteration budget exhausted. Carries the last iterate; callers may still use it.
class NotConverged : public Error {
public:
  explicit NotConverged(RankResult partial)
      : Error("no convergence after " + std::to_string(partial.diagnostics.iterations) +
              " iterations (residual " + std::to_string(partial.diagnostics.residual_l1) + ")"),
        partial_(std::move(partial)) {}

  const RankResult& partial() const noexcept { return partial_; }

private:
  RankResult partial_;
};

struct RankedJournal {
  std::size_t rank;  // 1-based
  JournalId journal;
  double score;
};

/// Descending by score; ties broken by ascending journal identifier.
inline std::vector<RankedJournal> rank_order(const ScoreVector& scores) {
  std::vector<std::size_t> idx(scores.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  const auto& v = scores.values();
  const auto& ids = scores.order();
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (v[a] != v[b]) return v[a] > v[b];
    return ids[a] < ids[b];
  });
  std::vector<RankedJournal> out;
  out.reserve(idx.size());
  for (std::size_t r = 0; r < idx.size(); ++r) out.push_back({r + 1, ids[idx[r]], v[idx[r]]});
  return out;
}

/// Ranked scores plus how they were produced.
struct RankReport {
  std::string method;
  std::vector<RankedJournal> entries;
  std::optional<ConvergenceDiagnostics> diagnostics;
};

inline RankReport make_report(std::string method, const ScoreVector& scores,
                              std::optional<ConvergenceDiagnostics> diagnostics = std::nullopt) {
  return RankReport{std::move(method), rank_order(scores), diagnostics};
}

}  // namespace citerank
