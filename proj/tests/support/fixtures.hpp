#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "citerank/citerank.hpp"

namespace citerank::testing {

/// Three journals v1, v2, v3 holding 5, 5 and 4 articles; three citations
/// v1 -> v3, one v3 -> v2, one v2 -> v1. Mirrors data/three_journals/.
inline CitationGraph three_journal_sample() {
  CitationGraph g;
  const std::pair<const char*, int> journals[] = {{"v1", 5}, {"v2", 5}, {"v3", 4}};
  for (auto [j, n] : journals)
    for (int i = 1; i <= n; ++i) g.add_article(ArticleId(std::string(j) + "_a" + std::to_string(i)), JournalId(j));
  auto cite = [&](const char* a, const char* b) { g.add_citation(ArticleId(a), ArticleId(b)); };
  cite("v1_a1", "v3_a2");
  cite("v1_a4", "v3_a1");
  cite("v1_a5", "v3_a3");
  cite("v3_a1", "v2_a3");
  cite("v2_a1", "v1_a5");
  return g;
}

inline JournalId jid(const char* s) { return JournalId(s); }
inline ArticleId aid(const char* s) { return ArticleId(s); }

/// Journal graph from (source, target, weight) triples; roster article
/// counts default to 1.
inline JournalGraph journal_graph(std::vector<std::tuple<std::string, std::string, std::uint64_t>> edges,
                                  std::vector<std::string> extra_journals = {}) {
  std::vector<JournalGraph::RosterEntry> roster;
  std::vector<JournalGraph::NamedEdge> named;
  for (auto& [s, t, w] : edges) {
    roster.push_back({JournalId(s), 1});
    roster.push_back({JournalId(t), 1});
    named.push_back({JournalId(s), JournalId(t), w});
  }
  for (auto& j : extra_journals) roster.push_back({JournalId(j), 1});
  return JournalGraph::from_edges(std::move(roster), named);
}

/// Reachability closure, independent of the library's SCC routine.
inline bool strongly_connected_by_closure(const JournalGraph& jg) {
  const std::size_t n = jg.size();
  if (n == 0) return false;
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) reach[i][i] = true;
  for (const auto& e : jg.edges()) reach[e.source][e.target] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (reach[i][k] && reach[k][j]) reach[i][j] = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!reach[i][j]) return false;
  return true;
}

/// Random journal graph with `n` journals, weights in [1, max_weight],
/// occasional self-loops, and article counts in [1, 6].
inline JournalGraph random_journal_graph(std::mt19937_64& rng, std::size_t n, std::uint64_t max_weight,
                                         double density) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<std::uint64_t> weight(1, max_weight);
  std::uniform_int_distribution<std::uint64_t> articles(1, 6);
  std::vector<JournalGraph::RosterEntry> roster;
  for (std::size_t j = 0; j < n; ++j) roster.push_back({JournalId("J" + std::to_string(j)), articles(rng)});
  std::vector<JournalGraph::NamedEdge> edges;
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) {
      const double p = (s == t) ? 0.15 : density;
      if (coin(rng) < p) edges.push_back({roster[s].journal, roster[t].journal, weight(rng)});
    }
  return JournalGraph::from_edges(roster, edges);
}

/// Rejection-samples a strongly connected journal graph with 1..max_n journals.
inline JournalGraph random_strongly_connected(std::mt19937_64& rng, std::size_t max_n = 6,
                                              std::uint64_t max_weight = 9) {
  std::uniform_int_distribution<std::size_t> size(1, max_n);
  std::uniform_real_distribution<double> density(0.25, 0.9);
  for (;;) {
    JournalGraph jg = random_journal_graph(rng, size(rng), max_weight, density(rng));
    if (strongly_connected_by_closure(jg)) return jg;
  }
}

/// Random citation graph from the synthetic generator.
inline CitationGraph random_citation_graph(std::mt19937_64& rng, bool strongly_connected = false) {
  SynthConfig cfg;
  cfg.journals = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
  cfg.min_articles = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
  cfg.max_articles = cfg.min_articles + std::uniform_int_distribution<std::size_t>(0, 5)(rng);
  cfg.citations = std::uniform_int_distribution<std::uint64_t>(0, 60)(rng);
  if (cfg.journals * cfg.min_articles < 2) cfg.citations = 0;
  cfg.seed = rng();
  cfg.strongly_connected = strongly_connected;
  return generate(cfg);
}

}  // namespace citerank::testing
