#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "citerank/error.hpp"
#include "citerank/ids.hpp"

namespace citerank {

/**
 * Article-level citation multigraph together with the article -> journal
 * partition.
 *
 * Articles and journals are interned into dense indices in insertion order;
 * the indexed accessors expose that layout for algorithms that need to walk
 * millions of citations. Repeated (citing, cited) pairs are stored once with
 * a multiplicity.
 *
 * Construction is single-writer. A finished graph is a plain value and may be
 * read concurrently.
 */
class CitationGraph {
public:
  using Index = std::uint32_t;

  struct Citation {
    Index citing;
    Index cited;
    std::uint64_t multiplicity;
  };

  CitationGraph() = default;

  /// Declares a journal. Journals may hold zero articles.
  void add_journal(const JournalId& journal) { intern_journal(journal); }

  /// Assigns `article` to `journal`, declaring the journal if needed. Repeating
  /// an identical assignment is a no-op.
  void add_article(const ArticleId& article, const JournalId& journal) {
    if (auto it = article_index_.find(article); it != article_index_.end()) {
      const JournalId& existing = journals_[article_journal_[it->second]];
      if (existing != journal)
        throw ConflictingMembership(article.str(), existing.str(), journal.str());
      return;
    }
    Index j = intern_journal(journal);
    auto idx = static_cast<Index>(articles_.size());
    articles_.push_back(article);
    article_journal_.push_back(j);
    article_index_.emplace(article, idx);
    ++journal_sizes_[j];
  }

  /// Adds `count` copies of the citation citing -> cited.
  void add_citation(const ArticleId& citing, const ArticleId& cited, std::uint64_t count = 1) {
    if (citing == cited) throw SelfCitation(citing.str());
    Index from = index_of(citing);
    Index to = index_of(cited);
    add_citation(from, to, count);
  }

  /// Index-level variant of add_citation for bulk construction.
  void add_citation(Index citing, Index cited, std::uint64_t count = 1) {
    if (citing >= articles_.size() || cited >= articles_.size())
      throw InvalidArgument("article index out of range");
    if (citing == cited) throw SelfCitation(articles_[citing].str());
    if (count == 0) return;
    std::uint64_t key = (std::uint64_t{citing} << 32) | cited;
    auto [it, inserted] = citation_index_.try_emplace(key, citations_.size());
    if (inserted)
      citations_.push_back({citing, cited, count});
    else
      citations_[it->second].multiplicity += count;
    total_citations_ += count;
  }

  std::size_t journal_count() const noexcept { return journals_.size(); }
  std::size_t article_count() const noexcept { return articles_.size(); }
  std::size_t distinct_citation_count() const noexcept { return citations_.size(); }
  /// Sum of all citation multiplicities.
  std::uint64_t citation_total() const noexcept { return total_citations_; }

  bool has_article(const ArticleId& a) const { return article_index_.contains(a); }
  bool has_journal(const JournalId& j) const { return journal_index_.contains(j); }

  /// Journals in lexicographic order.
  std::vector<JournalId> journals() const {
    std::vector<JournalId> out = journals_;
    std::sort(out.begin(), out.end());
    return out;
  }

  const JournalId& journal_of(const ArticleId& a) const {
    return journals_[article_journal_[index_of(a)]];
  }

  /// Articles assigned to `j`, in lexicographic order.
  std::vector<ArticleId> articles_of(const JournalId& j) const {
    Index ji = journal_index_of(j);
    std::vector<ArticleId> out;
    for (Index a = 0; a < articles_.size(); ++a)
      if (article_journal_[a] == ji) out.push_back(articles_[a]);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::size_t articles_in(const JournalId& j) const { return journal_sizes_[journal_index_of(j)]; }

  std::uint64_t multiplicity(const ArticleId& citing, const ArticleId& cited) const {
    auto a = article_index_.find(citing);
    auto b = article_index_.find(cited);
    if (a == article_index_.end() || b == article_index_.end()) return 0;
    auto it = citation_index_.find((std::uint64_t{a->second} << 32) | b->second);
    return it == citation_index_.end() ? 0 : citations_[it->second].multiplicity;
  }

  // Indexed view.
  Index index_of(const ArticleId& a) const {
    auto it = article_index_.find(a);
    if (it == article_index_.end()) throw UnknownArticle(a.str());
    return it->second;
  }
  Index journal_index_of(const JournalId& j) const {
    auto it = journal_index_.find(j);
    if (it == journal_index_.end()) throw UnknownJournal(j.str());
    return it->second;
  }
  const ArticleId& article(Index a) const { return articles_.at(a); }
  const JournalId& journal(Index j) const { return journals_.at(j); }
  Index journal_index_of_article(Index a) const { return article_journal_.at(a); }
  std::size_t journal_size(Index j) const { return journal_sizes_.at(j); }
  std::span<const Citation> citations() const noexcept { return citations_; }

  /// Structural equality: same journals, memberships and citation multiset,
  /// independent of insertion order.
  friend bool operator==(const CitationGraph& x, const CitationGraph& y) {
    return x.journals() == y.journals() && x.canonical_membership() == y.canonical_membership() &&
           x.canonical_citations() == y.canonical_citations();
  }

  std::vector<std::pair<std::string, std::string>> canonical_membership() const {
    std::vector<std::pair<std::string, std::string>> out;
    out.reserve(articles_.size());
    for (Index a = 0; a < articles_.size(); ++a)
      out.emplace_back(articles_[a].str(), journals_[article_journal_[a]].str());
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<std::tuple<std::string, std::string, std::uint64_t>> canonical_citations() const {
    std::vector<std::tuple<std::string, std::string, std::uint64_t>> out;
    out.reserve(citations_.size());
    for (const auto& c : citations_)
      out.emplace_back(articles_[c.citing].str(), articles_[c.cited].str(), c.multiplicity);
    std::sort(out.begin(), out.end());
    return out;
  }

private:
  Index intern_journal(const JournalId& j) {
    auto [it, inserted] = journal_index_.try_emplace(j, static_cast<Index>(journals_.size()));
    if (inserted) {
      journals_.push_back(j);
      journal_sizes_.push_back(0);
    }
    return it->second;
  }

  std::vector<JournalId> journals_;
  std::vector<std::size_t> journal_sizes_;
  std::unordered_map<JournalId, Index> journal_index_;

  std::vector<ArticleId> articles_;
  std::vector<Index> article_journal_;
  std::unordered_map<ArticleId, Index> article_index_;

  std::vector<Citation> citations_;
  std::unordered_map<std::uint64_t, std::size_t> citation_index_;
  std::uint64_t total_citations_ = 0;
};

}  // namespace citerank
