#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "citerank/citerank.hpp"
#include "support/fixtures.hpp"

using namespace citerank;
using citerank::testing::jid;

TEST(Random, SplitMix64ReferenceStream) {
  std::uint64_t state = 1234567;
  EXPECT_EQ(Xoshiro256::splitmix64(state), 6457827717110365317ULL);
  EXPECT_EQ(Xoshiro256::splitmix64(state), 3203168211198807973ULL);
  EXPECT_EQ(Xoshiro256::splitmix64(state), 9817491932198370423ULL);
}

TEST(Random, XoshiroReferenceStream) {
  // Frozen from an independent Python implementation of the same algorithm.
  Xoshiro256 zero(0);
  EXPECT_EQ(zero(), 11091344671253066420ULL);
  EXPECT_EQ(zero(), 13793997310169335082ULL);
  EXPECT_EQ(zero(), 1900383378846508768ULL);
  EXPECT_EQ(zero(), 7684712102626143532ULL);
  Xoshiro256 answer(42);
  EXPECT_EQ(answer(), 1546998764402558742ULL);
  EXPECT_EQ(answer(), 6990951692964543102ULL);
}

TEST(Random, BelowStaysInRange) {
  Xoshiro256 rng(5);
  std::vector<int> hits(7, 0);
  for (int i = 0; i < 7000; ++i) ++hits[rng.below(7)];
  for (int h : hits) EXPECT_GT(h, 800);
  EXPECT_EQ(rng.below(1), 0u);
  for (int i = 0; i < 100; ++i) {
    auto x = rng.between(3, 5);
    EXPECT_GE(x, 3u);
    EXPECT_LE(x, 5u);
  }
}

TEST(Generate, CycleScaffold) {
  SynthConfig cfg;
  cfg.journals = 3;
  cfg.strongly_connected = true;
  const CitationGraph g = generate(cfg);
  EXPECT_EQ(g.journals(), (std::vector<JournalId>{jid("j0"), jid("j1"), jid("j2")}));
  EXPECT_EQ(g.article_count(), 3u);
  const JournalGraph jg = aggregate(g);
  EXPECT_EQ(jg.edges().size(), 3u);
  EXPECT_EQ(jg.weight(jid("j0"), jid("j1")), 1u);
  EXPECT_EQ(jg.weight(jid("j1"), jid("j2")), 1u);
  EXPECT_EQ(jg.weight(jid("j2"), jid("j0")), 1u);
}

TEST(Generate, Deterministic) {
  SynthConfig cfg{6, 2, 9, 200, 99, true};
  const CitationGraph a = generate(cfg), b = generate(cfg);
  EXPECT_EQ(a, b);
  std::ostringstream ca, cb;
  export_citations_csv(a, ca);
  export_citations_csv(b, cb);
  EXPECT_EQ(ca.str(), cb.str());
  cfg.seed = 100;
  EXPECT_FALSE(generate(cfg) == a);
}

TEST(Generate, InfeasibleConfigs) {
  EXPECT_THROW(generate(SynthConfig{1, 1, 1, 1, 0, false}), InfeasibleConfig);
  EXPECT_THROW(generate(SynthConfig{0, 1, 1, 0, 0, false}), InfeasibleConfig);
  EXPECT_THROW(generate(SynthConfig{2, 3, 2, 0, 0, false}), InfeasibleConfig);
  EXPECT_THROW(generate(SynthConfig{2, 0, 2, 0, 0, false}), InfeasibleConfig);
  EXPECT_NO_THROW(generate(SynthConfig{1, 2, 2, 5, 0, false}));
}

TEST(Generate, RespectsCountsAndRanges) {
  const CitationGraph g = generate(SynthConfig{10, 2, 5, 300, 7, true});
  EXPECT_EQ(g.journal_count(), 10u);
  EXPECT_EQ(g.citation_total(), 310u);
  for (const auto& j : g.journals()) {
    EXPECT_GE(g.articles_in(j), 2u);
    EXPECT_LE(g.articles_in(j), 5u);
  }
  EXPECT_TRUE(is_strongly_connected(aggregate(g)));
}

TEST(ScaleCitations, Examples) {
  const CitationGraph g = citerank::testing::three_journal_sample();
  EXPECT_EQ(scale_citations(g, 1), g);
  const JournalGraph tripled = aggregate(scale_citations(g, 3));
  EXPECT_EQ(tripled.weight(jid("v1"), jid("v3")), 9u);
  EXPECT_EQ(tripled.weight(jid("v3"), jid("v2")), 3u);
  EXPECT_EQ(tripled.weight(jid("v2"), jid("v1")), 3u);
  EXPECT_EQ(scale_citations(CitationGraph{}, 4), CitationGraph{});
  EXPECT_THROW(scale_citations(g, 0), InvalidArgument);
}

TEST(ScaleCitationsProperty, CommutesWithAggregate) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 100; ++i) {
    const CitationGraph g = citerank::testing::random_citation_graph(rng);
    const std::uint64_t k = 1 + rng() % 7;
    for (auto policy : {SelfLoopPolicy::Keep, SelfLoopPolicy::Drop}) {
      const JournalGraph base = aggregate(g, policy), scaled = aggregate(scale_citations(g, k), policy);
      ASSERT_EQ(base.edges().size(), scaled.edges().size());
      for (std::size_t e = 0; e < base.edges().size(); ++e)
        EXPECT_EQ(scaled.edges()[e].weight, k * base.edges()[e].weight);
    }
  }
}

TEST(SplitJournal, SampleIntoTwo) {
  const CitationGraph g = citerank::testing::three_journal_sample();
  const CitationGraph s = split_journal(g, jid("v1"), 2, 17);
  EXPECT_FALSE(s.has_journal(jid("v1")));
  EXPECT_EQ(s.articles_in(jid("v1#1")), 3u);
  EXPECT_EQ(s.articles_in(jid("v1#2")), 2u);
  const JournalGraph jg = aggregate(s);
  EXPECT_EQ(jg.weight(jid("v1#1"), jid("v3")) + jg.weight(jid("v1#2"), jid("v3")), 3u);
  EXPECT_EQ(jg.weight(jid("v2"), jid("v1#1")) + jg.weight(jid("v2"), jid("v1#2")), 1u);
}

TEST(SplitJournal, OneArticlePerPart) {
  const CitationGraph s = split_journal(citerank::testing::three_journal_sample(), jid("v3"), 4, 3);
  for (int p = 1; p <= 4; ++p) EXPECT_EQ(s.articles_in(JournalId("v3#" + std::to_string(p))), 1u);
}

TEST(SplitJournal, Errors) {
  const CitationGraph g = citerank::testing::three_journal_sample();
  EXPECT_THROW(split_journal(g, jid("nope"), 2, 0), UnknownJournal);
  EXPECT_THROW(split_journal(g, jid("v3"), 5, 0), TooFewArticles);
  EXPECT_THROW(split_journal(g, jid("v3"), 1, 0), InvalidArgument);
  CitationGraph lone;
  lone.add_article(ArticleId("a"), jid("j"));
  EXPECT_THROW(split_journal(lone, jid("j"), 2, 0), TooFewArticles);
}

TEST(SplitJournal, DeterministicPerSeed) {
  const CitationGraph g = generate(SynthConfig{3, 8, 8, 40, 1, true});
  EXPECT_EQ(split_journal(g, jid("j1"), 3, 5), split_journal(g, jid("j1"), 3, 5));
}

TEST(SplitJournalProperty, ConservesCitationsAndMergesBack) {
  std::mt19937_64 rng(42);
  int checked = 0;
  while (checked < 100) {
    const CitationGraph g = citerank::testing::random_citation_graph(rng);
    const auto journals = g.journals();
    const JournalId j = journals[rng() % journals.size()];
    const std::size_t size = g.articles_in(j);
    if (size < 2) continue;
    const std::size_t parts = 2 + rng() % (size - 1);
    const CitationGraph s = split_journal(g, j, parts, rng());
    EXPECT_EQ(s.citation_total(), g.citation_total());
    EXPECT_EQ(s.canonical_citations(), g.canonical_citations());

    std::vector<std::size_t> sizes;
    for (std::size_t p = 1; p <= parts; ++p) sizes.push_back(s.articles_in(split_part_name(j, p)));
    EXPECT_TRUE(std::is_sorted(sizes.rbegin(), sizes.rend()));
    EXPECT_LE(sizes.front() - sizes.back(), 1u);

    const CitationGraph merged = relabel_journals(s, [&](const JournalId& x) {
      return x.str().rfind(j.str() + "#", 0) == 0 ? j : x;
    });
    for (auto policy : {SelfLoopPolicy::Keep, SelfLoopPolicy::Drop})
      EXPECT_EQ(aggregate(merged, policy), aggregate(g, policy));
    ++checked;
  }
}
