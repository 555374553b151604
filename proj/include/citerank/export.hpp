#pragma once

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <string>
#include <tuple>
#include <vector>

#include "citerank/citation_graph.hpp"
#include "citerank/error.hpp"
#include "citerank/ingest.hpp"
#include "citerank/journal_graph.hpp"
#include "citerank/scores.hpp"

namespace citerank {

namespace detail {

inline void check_sink(const std::ostream& out) {
  if (!out) throw IoError("write failure");
}

inline std::string dot_quote(const std::string& s) {
  std::string q = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') q += '\\';
    q += c;
  }
  q += '"';
  return q;
}

}  // namespace detail

/// Scores are printed with 12 significant digits, shortest form (%.12g).
inline std::string format_score(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

/// `source,target,weight`, one row per stored edge in (source, target) order.
inline void export_journal_graph_csv(const JournalGraph& jg, std::ostream& out) {
  out << journal_graph_header << '\n';
  for (const auto& e : jg.edges())
    out << jg.journal(e.source) << ',' << jg.journal(e.target) << ',' << e.weight << '\n';
  detail::check_sink(out);
}

/// Graphviz digraph: node labels carry article counts, edge labels weights.
inline void export_dot(const JournalGraph& jg, std::ostream& out) {
  out << "digraph journals {\n";
  for (JournalGraph::Index j = 0; j < jg.size(); ++j) {
    const std::string& id = jg.journal(j).str();
    out << "  " << detail::dot_quote(id) << " [label="
        << detail::dot_quote(id + " (" + std::to_string(jg.article_count(j)) + ")") << "];\n";
  }
  for (const auto& e : jg.edges())
    out << "  " << detail::dot_quote(jg.journal(e.source).str()) << " -> "
        << detail::dot_quote(jg.journal(e.target).str()) << " [label=\"" << e.weight << "\"];\n";
  out << "}\n";
  detail::check_sink(out);
}

inline void export_scores_csv(const RankReport& report, std::ostream& out) {
  out << "rank,journal,score\n";
  for (const auto& r : report.entries) out << r.rank << ',' << r.journal << ',' << format_score(r.score) << '\n';
  detail::check_sink(out);
}

/// Membership rows sorted by article identifier.
inline void export_membership_csv(const CitationGraph& g, std::ostream& out) {
  out << membership_header << '\n';
  for (const auto& [article, journal] : g.canonical_membership()) out << article << ',' << journal << '\n';
  detail::check_sink(out);
}

/// One row per citation (multiplicities expanded), sorted by (citing, cited).
inline void export_citations_csv(const CitationGraph& g, std::ostream& out) {
  out << citations_header << '\n';
  for (const auto& [citing, cited, count] : g.canonical_citations())
    for (std::uint64_t k = 0; k < count; ++k) out << citing << ',' << cited << '\n';
  detail::check_sink(out);
}

}  // namespace citerank
