#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "citerank/citation_graph.hpp"
#include "citerank/error.hpp"
#include "citerank/random.hpp"

namespace citerank {

/// Parameters of a synthetic citation network.
struct SynthConfig {
  std::size_t journals = 1;
  std::size_t min_articles = 1;  ///< articles per journal drawn uniformly from [min, max]
  std::size_t max_articles = 1;
  std::uint64_t citations = 0;   ///< random citations, in addition to any cycle scaffold
  std::uint64_t seed = 0;
  bool strongly_connected = false;
};

inline JournalId synth_journal_name(std::size_t k) { return JournalId("j" + std::to_string(k)); }

inline ArticleId synth_article_name(std::size_t k, std::size_t i) {
  return ArticleId("j" + std::to_string(k) + "_a" + std::to_string(i));
}

/**
 * Generates a reproducible citation network.
 *
 * Journals are j0..j<n-1>, articles j<k>_a<i>. Draw order is fixed: one
 * article count per journal, then (with `strongly_connected` and n >= 2) one
 * citation from a random article of j<k> to a random article of j<k+1 mod n>
 * for every k, then `citations` pairs with a uniform citing article and a
 * uniform distinct cited article.
 */
inline CitationGraph generate(const SynthConfig& cfg) {
  if (cfg.journals == 0) throw InfeasibleConfig("at least one journal is required");
  if (cfg.min_articles == 0) throw InfeasibleConfig("every journal needs at least one article");
  if (cfg.min_articles > cfg.max_articles) throw InfeasibleConfig("empty articles-per-journal range");

  Xoshiro256 rng(cfg.seed);
  CitationGraph g;
  std::vector<CitationGraph::Index> first(cfg.journals);
  std::vector<std::size_t> sizes(cfg.journals);
  for (std::size_t k = 0; k < cfg.journals; ++k) {
    sizes[k] = static_cast<std::size_t>(rng.between(cfg.min_articles, cfg.max_articles));
    const JournalId journal = synth_journal_name(k);
    first[k] = static_cast<CitationGraph::Index>(g.article_count());
    for (std::size_t i = 0; i < sizes[k]; ++i) g.add_article(synth_article_name(k, i), journal);
  }
  const std::uint64_t total = g.article_count();
  if (cfg.citations > 0 && total < 2)
    throw InfeasibleConfig("citations need at least two articles, found " + std::to_string(total));

  if (cfg.strongly_connected && cfg.journals >= 2) {
    for (std::size_t k = 0; k < cfg.journals; ++k) {
      const std::size_t next = (k + 1) % cfg.journals;
      auto citing = first[k] + static_cast<CitationGraph::Index>(rng.below(sizes[k]));
      auto cited = first[next] + static_cast<CitationGraph::Index>(rng.below(sizes[next]));
      g.add_citation(citing, cited);
    }
  }
  for (std::uint64_t c = 0; c < cfg.citations; ++c) {
    auto citing = static_cast<CitationGraph::Index>(rng.below(total));
    auto cited = static_cast<CitationGraph::Index>(rng.below(total - 1));
    if (cited >= citing) ++cited;
    g.add_citation(citing, cited);
  }
  return g;
}

/// Copy of `g` with every journal renamed through `rename`. Several journals
/// may map to the same name, which merges them.
inline CitationGraph relabel_journals(const CitationGraph& g,
                                      const std::function<JournalId(const JournalId&)>& rename) {
  CitationGraph out;
  for (const auto& j : g.journals()) out.add_journal(rename(j));
  for (const auto& [article, journal] : g.canonical_membership())
    out.add_article(ArticleId(article), rename(JournalId(journal)));
  for (const auto& c : g.citations())
    out.add_citation(g.article(c.citing), g.article(c.cited), c.multiplicity);
  return out;
}

/// Copy of `g` with every citation multiplicity multiplied by `k`.
inline CitationGraph scale_citations(const CitationGraph& g, std::uint64_t k) {
  if (k == 0) throw InvalidArgument("scale factor must be at least 1");
  CitationGraph out;
  for (const auto& j : g.journals()) out.add_journal(j);
  for (const auto& [article, journal] : g.canonical_membership())
    out.add_article(ArticleId(article), JournalId(journal));
  for (const auto& c : g.citations())
    out.add_citation(g.article(c.citing), g.article(c.cited), c.multiplicity * k);
  return out;
}

inline JournalId split_part_name(const JournalId& j, std::size_t part) {
  return JournalId(j.str() + "#" + std::to_string(part));
}

/**
 * Splits journal `j` into `parts` journals named j#1..j#parts.
 *
 * The articles of `j`, in lexicographic order, are shuffled with a generator
 * seeded by `seed` and cut into consecutive slices whose sizes differ by at
 * most one; the lowest-numbered parts take the extra articles. Citations are
 * untouched.
 */
inline CitationGraph split_journal(const CitationGraph& g, const JournalId& j, std::size_t parts,
                                   std::uint64_t seed) {
  if (!g.has_journal(j)) throw UnknownJournal(j.str());
  if (parts < 2) throw InvalidArgument("a split needs at least two parts");
  std::vector<ArticleId> articles = g.articles_of(j);
  if (articles.size() < parts) throw TooFewArticles(j.str(), articles.size(), parts);
  for (std::size_t p = 1; p <= parts; ++p)
    if (g.has_journal(split_part_name(j, p)))
      throw InvalidArgument("journal '" + split_part_name(j, p).str() + "' already exists");

  Xoshiro256 rng(seed);
  rng.shuffle(std::span<ArticleId>(articles));

  CitationGraph out;
  for (const auto& other : g.journals())
    if (other != j) out.add_journal(other);
  const std::size_t base = articles.size() / parts;
  const std::size_t extra = articles.size() % parts;
  std::size_t next = 0;
  for (std::size_t p = 1; p <= parts; ++p) {
    const JournalId part = split_part_name(j, p);
    out.add_journal(part);
    const std::size_t size = base + (p <= extra ? 1 : 0);
    for (std::size_t i = 0; i < size; ++i) out.add_article(articles[next++], part);
  }
  for (const auto& [article, journal] : g.canonical_membership())
    if (journal != j.str()) out.add_article(ArticleId(article), JournalId(journal));
  for (const auto& c : g.citations())
    out.add_citation(g.article(c.citing), g.article(c.cited), c.multiplicity);
  return out;
}

}  // namespace citerank
