#pragma once

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "citerank/citation_graph.hpp"
#include "citerank/error.hpp"
#include "citerank/ids.hpp"
#include "citerank/journal_graph.hpp"

namespace citerank {

inline constexpr std::string_view citations_header = "citing,cited";
inline constexpr std::string_view membership_header = "article,journal";
inline constexpr std::string_view journal_graph_header = "source,target,weight";

struct CitationRecord {
  ArticleId citing;
  ArticleId cited;
  std::size_t line = 0;
};

struct MembershipRecord {
  ArticleId article;
  JournalId journal;
  std::size_t line = 0;
};

struct JournalEdgeRecord {
  JournalId source;
  JournalId target;
  std::uint64_t weight;
  std::size_t line = 0;
};

namespace detail {

/// Reads a header-led comma-separated stream. No quoting: every field is a
/// trimmed, non-empty token. Blank lines are skipped but still counted, so
/// reported line numbers are physical ones.
template <typename OnRow>
void read_csv(std::istream& in, std::string_view header, std::size_t field_count, OnRow&& on_row) {
  std::string line;
  if (!std::getline(in, line) || line != header) throw BadHeader(std::string(header), line);

  std::vector<std::string_view> fields;
  fields.reserve(field_count);
  for (std::size_t line_no = 2; std::getline(in, line); ++line_no) {
    if (trim(line).empty()) continue;
    fields.clear();
    std::string_view rest = line;
    for (;;) {
      auto comma = rest.find(',');
      fields.push_back(trim(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (fields.size() != field_count)
      throw MalformedLine(line_no, line,
                          "expected " + std::to_string(field_count) + " fields, found " +
                              std::to_string(fields.size()));
    for (auto f : fields)
      if (f.empty()) throw MalformedLine(line_no, line, "empty field");
    try {
      on_row(line_no, fields);
    } catch (const InvalidIdentifier& e) {
      throw MalformedLine(line_no, line, e.what());
    }
  }
  if (in.bad()) throw IoError("read failure");
}

}  // namespace detail

inline std::vector<CitationRecord> parse_citations(std::istream& in) {
  std::vector<CitationRecord> out;
  detail::read_csv(in, citations_header, 2, [&](std::size_t line, const auto& f) {
    out.push_back({ArticleId(f[0]), ArticleId(f[1]), line});
  });
  return out;
}

inline std::vector<MembershipRecord> parse_membership(std::istream& in) {
  std::vector<MembershipRecord> out;
  detail::read_csv(in, membership_header, 2, [&](std::size_t line, const auto& f) {
    out.push_back({ArticleId(f[0]), JournalId(f[1]), line});
  });
  return out;
}

inline std::vector<JournalEdgeRecord> parse_journal_graph_csv(std::istream& in) {
  std::vector<JournalEdgeRecord> out;
  detail::read_csv(in, journal_graph_header, 3, [&](std::size_t line, const auto& f) {
    std::uint64_t w = 0;
    auto [end, ec] = std::from_chars(f[2].data(), f[2].data() + f[2].size(), w);
    if (ec != std::errc() || end != f[2].data() + f[2].size() || w == 0)
      throw MalformedLine(line, std::string(f[0]) + "," + std::string(f[1]) + "," + std::string(f[2]),
                          "weight must be a positive integer");
    out.push_back({JournalId(f[0]), JournalId(f[1]), w, line});
  });
  return out;
}

/// Rebuilds a journal graph from parsed edge rows. The edge file carries no
/// article counts or isolated journals; pass them via `roster`.
inline JournalGraph journal_graph_from_records(const std::vector<JournalEdgeRecord>& records,
                                               std::vector<JournalGraph::RosterEntry> roster = {}) {
  std::vector<JournalGraph::NamedEdge> edges;
  edges.reserve(records.size());
  for (const auto& r : records) edges.push_back({r.source, r.target, r.weight});
  try {
    return JournalGraph::from_edges(std::move(roster), edges);
  } catch (const InvalidArgument& e) {
    // Locate the offending row for the message.
    for (std::size_t i = 0; i < records.size(); ++i)
      for (std::size_t k = 0; k < i; ++k)
        if (records[k].source == records[i].source && records[k].target == records[i].target)
          throw MalformedLine(records[i].line,
                              records[i].source.str() + "," + records[i].target.str() + "," +
                                  std::to_string(records[i].weight),
                              "duplicate edge");
    throw;
  }
}

enum class RecordPolicy { Error, Skip };

struct IngestPolicy {
  RecordPolicy unknown_article = RecordPolicy::Error;
  RecordPolicy self_citation = RecordPolicy::Error;
  // Conflicting memberships are always fatal.
};

struct IngestWarning {
  std::size_t line;
  std::string message;
};

struct IngestReport {
  std::size_t membership_records_read = 0;
  std::size_t citation_records_read = 0;
  std::size_t citations_kept = 0;
  std::size_t citations_skipped = 0;
  std::size_t articles = 0;
  std::size_t journals = 0;
  std::vector<IngestWarning> warnings;
};

struct BuildResult {
  CitationGraph graph;
  IngestReport report;
};

/// Builds a citation graph from parsed records. Identical duplicate
/// membership rows merge; conflicting ones throw. Unknown endpoints and
/// self-citations throw or are skipped with a warning, per `policy`.
inline BuildResult build_graph(const std::vector<MembershipRecord>& memberships,
                               const std::vector<CitationRecord>& citations,
                               const IngestPolicy& policy = {}) {
  BuildResult result;
  CitationGraph& g = result.graph;
  IngestReport& report = result.report;

  for (const auto& m : memberships) {
    try {
      g.add_article(m.article, m.journal);
    } catch (const ConflictingMembership& e) {
      throw ConflictingMembership(e.article(), e.existing_journal(), e.requested_journal(), m.line);
    }
  }
  report.membership_records_read = memberships.size();

  for (const auto& c : citations) {
    ++report.citation_records_read;
    const bool citing_known = g.has_article(c.citing);
    if (!citing_known || !g.has_article(c.cited)) {
      const std::string& missing = citing_known ? c.cited.str() : c.citing.str();
      if (policy.unknown_article == RecordPolicy::Error) throw UnknownArticle(missing, c.line);
      report.warnings.push_back({c.line, "skipped citation: article '" + missing + "' has no journal membership"});
      ++report.citations_skipped;
      continue;
    }
    if (c.citing == c.cited) {
      if (policy.self_citation == RecordPolicy::Error) throw SelfCitation(c.citing.str(), c.line);
      report.warnings.push_back({c.line, "skipped self-citation of article '" + c.citing.str() + "'"});
      ++report.citations_skipped;
      continue;
    }
    g.add_citation(g.index_of(c.citing), g.index_of(c.cited));
    ++report.citations_kept;
  }
  report.articles = g.article_count();
  report.journals = g.journal_count();
  return result;
}

}  // namespace citerank
