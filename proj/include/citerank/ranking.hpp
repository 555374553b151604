#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "citerank/citation_graph.hpp"
#include "citerank/error.hpp"
#include "citerank/journal_graph.hpp"
#include "citerank/scc.hpp"
#include "citerank/scores.hpp"
#include "citerank/stochastic_matrix.hpp"

namespace citerank {

inline constexpr double default_tolerance = 1e-12;
inline constexpr std::size_t default_max_iterations = 100000;
inline constexpr double default_damping = 0.85;

namespace detail {

inline double l1_distance(const std::vector<double>& a, const std::vector<double>& b) {
  double r = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) r += std::abs(a[i] - b[i]);
  return r;
}

inline void normalize_sum(std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  for (double& x : v) x /= s;
}

inline void check_iteration_params(double tol, std::size_t max_iter) {
  if (!(tol > 0.0) || !std::isfinite(tol)) throw InvalidArgument("tolerance must be a positive number");
  if (max_iter == 0) throw InvalidArgument("max_iter must be positive");
}

}  // namespace detail

/**
 * Dominant eigenvector of a column-stochastic matrix.
 *
 * Starts from the uniform vector and applies the lazy operator (M + I) / 2,
 * which shares its fixed points with M but does not oscillate on periodic
 * chains. Convergence is declared when the residual ||Mv - v||_1, measured
 * against M itself, is at most `tol`; the returned vector is the one that
 * residual was measured on.
 *
 * Throws NotConverged, carrying the last iterate, after `max_iter` updates.
 */
inline RankResult power_iteration(const StochasticMatrix& m, double tol = default_tolerance,
                                  std::size_t max_iter = default_max_iterations) {
  detail::check_iteration_params(tol, max_iter);
  const std::size_t n = m.size();
  if (n == 0) throw InvalidArgument("power iteration on an empty matrix");

  std::vector<double> v(n, 1.0 / static_cast<double>(n));
  std::vector<double> mv(n);
  for (std::size_t it = 0;; ++it) {
    m.multiply(v, mv);
    const double residual = detail::l1_distance(mv, v);
    if (residual <= tol)
      return {ScoreVector(m.order(), v), {it, residual, tol, true}};
    if (it == max_iter) throw NotConverged({ScoreVector(m.order(), v), {it, residual, tol, false}});
    for (std::size_t i = 0; i < n; ++i) v[i] = 0.5 * (v[i] + mv[i]);
    detail::normalize_sum(v);
  }
}

/// Undamped spectral journal scores: the stationary distribution of the
/// reference-normalized journal matrix (self-loops dropped). Requires a
/// strongly connected journal graph.
inline RankResult invariant_scores(const JournalGraph& jg, double tol = default_tolerance,
                                   std::size_t max_iter = default_max_iterations) {
  if (jg.empty()) throw InvalidArgument("cannot rank an empty journal graph");
  if (jg.size() == 1)
    return power_iteration(StochasticMatrix(jg.journals(), {{{0, 1.0}}}), tol, max_iter);

  auto components = strongly_connected_components(jg);
  if (components.size() > 1) {
    std::vector<std::vector<std::string>> named;
    for (const auto& c : components) {
      auto& names = named.emplace_back();
      for (auto j : c) names.push_back(jg.journal(j).str());
    }
    throw NotStronglyConnected(std::move(named));
  }
  return power_iteration(normalize_columns(jg, DanglingPolicy::Error), tol, max_iter);
}

/// Damped variant: fixed point of v = d M v + (1 - d) u with uniform u and
/// dangling journals redistributed uniformly.
inline RankResult pagerank(const JournalGraph& jg, double damping = default_damping,
                           double tol = default_tolerance,
                           std::size_t max_iter = default_max_iterations) {
  if (!(damping > 0.0 && damping < 1.0)) throw InvalidArgument("damping must lie in (0, 1)");
  detail::check_iteration_params(tol, max_iter);
  if (jg.empty()) throw InvalidArgument("cannot rank an empty journal graph");

  const StochasticMatrix m = normalize_columns(jg, DanglingPolicy::Uniform);
  const std::size_t n = m.size();
  const double teleport = (1.0 - damping) / static_cast<double>(n);

  std::vector<double> v(n, 1.0 / static_cast<double>(n));
  std::vector<double> next(n);
  for (std::size_t it = 0;; ++it) {
    m.multiply(v, next);
    for (double& x : next) x = damping * x + teleport;
    const double residual = detail::l1_distance(next, v);
    if (residual <= tol) return {ScoreVector(m.order(), v), {it, residual, tol, true}};
    if (it == max_iter) throw NotConverged({ScoreVector(m.order(), v), {it, residual, tol, false}});
    v.swap(next);
    detail::normalize_sum(v);
  }
}

/// Journal score divided by the journal's article count. Not renormalized.
inline ScoreVector per_article_scores(const ScoreVector& journal_scores, const JournalGraph& jg) {
  std::vector<double> out;
  out.reserve(journal_scores.size());
  for (std::size_t i = 0; i < journal_scores.size(); ++i) {
    const JournalId& j = journal_scores.order()[i];
    const double s = journal_scores.values()[i];
    const std::uint64_t count = jg.article_count(j);
    if (count == 0) {
      if (s > 0.0) throw EmptyJournal(j.str());
      out.push_back(0.0);
      continue;
    }
    out.push_back(s / static_cast<double>(count));
  }
  return ScoreVector(journal_scores.order(), std::move(out), Normalization::None);
}

/// Incoming citations per article, impact-factor style. Intra-journal
/// citations count only when `include_intra` is set.
inline ScoreVector citation_rate(const CitationGraph& g, bool include_intra = false) {
  const JournalGraph jg = aggregate(g, include_intra ? SelfLoopPolicy::Keep : SelfLoopPolicy::Drop);
  std::vector<double> rates;
  rates.reserve(jg.size());
  for (JournalGraph::Index j = 0; j < jg.size(); ++j) {
    if (jg.article_count(j) == 0) throw EmptyJournal(jg.journal(j).str());
    rates.push_back(static_cast<double>(jg.in_weight(j)) / static_cast<double>(jg.article_count(j)));
  }
  return ScoreVector(jg.journals(), std::move(rates), Normalization::None);
}

}  // namespace citerank
