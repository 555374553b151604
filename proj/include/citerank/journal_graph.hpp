#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "citerank/citation_graph.hpp"
#include "citerank/error.hpp"
#include "citerank/ids.hpp"

namespace citerank {

/// What aggregation does with citations between two articles of the same journal.
enum class SelfLoopPolicy { Keep, Drop };

/**
 * Weighted directed graph over journals.
 *
 * Journals are held in lexicographic order and that order defines the dense
 * journal index used by every matrix and export. Edges are stored sorted by
 * (source, target); only positive weights are stored. Immutable once built.
 */
class JournalGraph {
public:
  using Index = std::uint32_t;

  struct Edge {
    Index source;
    Index target;
    std::uint64_t weight;

    friend bool operator==(const Edge&, const Edge&) = default;
  };

  struct RosterEntry {
    JournalId journal;
    std::uint64_t articles;
  };

  struct NamedEdge {
    JournalId source;
    JournalId target;
    std::uint64_t weight;
  };

  JournalGraph() = default;

  /// Builds a graph from a journal roster and named edges. Edge endpoints
  /// missing from the roster are added with an article count of zero.
  /// Duplicate (source, target) pairs and zero weights are rejected.
  static JournalGraph from_edges(std::vector<RosterEntry> roster, std::span<const NamedEdge> edges) {
    for (const auto& e : edges) {
      roster.push_back({e.source, 0});
      roster.push_back({e.target, 0});
    }
    // Keep the first (declared) entry for each journal.
    std::stable_sort(roster.begin(), roster.end(),
                     [](const RosterEntry& a, const RosterEntry& b) { return a.journal < b.journal; });
    JournalGraph g;
    for (auto& r : roster) {
      if (!g.journals_.empty() && g.journals_.back() == r.journal) continue;
      g.journals_.push_back(r.journal);
      g.article_counts_.push_back(r.articles);
    }
    std::vector<Edge> indexed;
    indexed.reserve(edges.size());
    for (const auto& e : edges) {
      if (e.weight == 0)
        throw InvalidArgument("edge " + e.source.str() + " -> " + e.target.str() + " has weight 0");
      indexed.push_back({*g.find(e.source), *g.find(e.target), e.weight});
    }
    std::sort(indexed.begin(), indexed.end(), [](const Edge& a, const Edge& b) {
      return std::tie(a.source, a.target) < std::tie(b.source, b.target);
    });
    for (std::size_t i = 1; i < indexed.size(); ++i) {
      if (indexed[i].source == indexed[i - 1].source && indexed[i].target == indexed[i - 1].target)
        throw InvalidArgument("duplicate edge " + g.journals_[indexed[i].source].str() + " -> " +
                              g.journals_[indexed[i].target].str());
    }
    g.edges_ = std::move(indexed);
    g.finalize();
    return g;
  }

  std::size_t size() const noexcept { return journals_.size(); }
  bool empty() const noexcept { return journals_.empty(); }

  const std::vector<JournalId>& journals() const noexcept { return journals_; }
  const JournalId& journal(Index i) const { return journals_.at(i); }

  std::optional<Index> find(const JournalId& j) const {
    auto it = std::lower_bound(journals_.begin(), journals_.end(), j);
    if (it == journals_.end() || *it != j) return std::nullopt;
    return static_cast<Index>(it - journals_.begin());
  }

  Index index_of(const JournalId& j) const {
    auto i = find(j);
    if (!i) throw UnknownJournal(j.str());
    return *i;
  }

  std::uint64_t article_count(Index j) const { return article_counts_.at(j); }
  std::uint64_t article_count(const JournalId& j) const { return article_counts_[index_of(j)]; }
  const std::vector<std::uint64_t>& article_counts() const noexcept { return article_counts_; }

  /// All stored edges sorted by (source, target).
  std::span<const Edge> edges() const noexcept { return edges_; }

  std::span<const Edge> out_edges(Index j) const {
    return std::span<const Edge>(edges_).subspan(offsets_.at(j), offsets_.at(j + 1) - offsets_[j]);
  }

  std::uint64_t weight(Index s, Index t) const {
    auto out = out_edges(s);
    auto it = std::lower_bound(out.begin(), out.end(), t,
                               [](const Edge& e, Index target) { return e.target < target; });
    return (it != out.end() && it->target == t) ? it->weight : 0;
  }
  std::uint64_t weight(const JournalId& s, const JournalId& t) const {
    return weight(index_of(s), index_of(t));
  }

  std::uint64_t out_weight(Index j) const { return out_weight_.at(j); }
  std::uint64_t out_weight(const JournalId& j) const { return out_weight_[index_of(j)]; }
  std::uint64_t in_weight(Index j) const { return in_weight_.at(j); }
  std::uint64_t in_weight(const JournalId& j) const { return in_weight_[index_of(j)]; }

  /// Out-weight excluding any self-loop.
  std::uint64_t cross_out_weight(Index j) const { return out_weight(j) - weight(j, j); }

  std::uint64_t total_weight() const noexcept {
    return std::accumulate(out_weight_.begin(), out_weight_.end(), std::uint64_t{0});
  }

  bool has_self_loops() const noexcept {
    return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.source == e.target; });
  }

  friend bool operator==(const JournalGraph&, const JournalGraph&) = default;

private:
  friend JournalGraph aggregate(const CitationGraph&, SelfLoopPolicy);

  void finalize() {
    const std::size_t n = journals_.size();
    offsets_.assign(n + 1, 0);
    out_weight_.assign(n, 0);
    in_weight_.assign(n, 0);
    for (const auto& e : edges_) {
      ++offsets_[e.source + 1];
      out_weight_[e.source] += e.weight;
      in_weight_[e.target] += e.weight;
    }
    std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  }

  std::vector<JournalId> journals_;
  std::vector<std::uint64_t> article_counts_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<std::uint64_t> out_weight_;
  std::vector<std::uint64_t> in_weight_;
};

/// Collapses a citation graph along its article -> journal partition, summing
/// citation multiplicities between journals.
inline JournalGraph aggregate(const CitationGraph& g, SelfLoopPolicy policy = SelfLoopPolicy::Drop) {
  using Index = JournalGraph::Index;
  const std::size_t n = g.journal_count();

  // Insertion index -> lexicographic rank.
  std::vector<Index> by_name(n);
  std::iota(by_name.begin(), by_name.end(), Index{0});
  std::sort(by_name.begin(), by_name.end(),
            [&](Index a, Index b) { return g.journal(a) < g.journal(b); });
  std::vector<Index> rank(n);
  for (Index r = 0; r < n; ++r) rank[by_name[r]] = r;

  JournalGraph jg;
  jg.journals_.reserve(n);
  jg.article_counts_.reserve(n);
  for (Index r = 0; r < n; ++r) {
    jg.journals_.push_back(g.journal(by_name[r]));
    jg.article_counts_.push_back(g.journal_size(by_name[r]));
  }

  std::unordered_map<std::uint64_t, std::uint64_t> sums;
  for (const auto& c : g.citations()) {
    Index s = rank[g.journal_index_of_article(c.citing)];
    Index t = rank[g.journal_index_of_article(c.cited)];
    if (s == t && policy == SelfLoopPolicy::Drop) continue;
    sums[(std::uint64_t{s} << 32) | t] += c.multiplicity;
  }
  jg.edges_.reserve(sums.size());
  for (const auto& [key, w] : sums)
    jg.edges_.push_back({static_cast<Index>(key >> 32), static_cast<Index>(key & 0xffffffffu), w});
  std::sort(jg.edges_.begin(), jg.edges_.end(), [](const auto& a, const auto& b) {
    return std::tie(a.source, a.target) < std::tie(b.source, b.target);
  });
  jg.finalize();
  return jg;
}

}  // namespace citerank
