#pragma once

// Command-line driver. Kept in a header so tests can run it in-process.
//
// Exit codes: 0 success, 1 data/validation error, 2 usage error,
// 3 non-convergence (partial scores are still written).

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include <CLI11.hpp>

#include "citerank/citerank.hpp"

namespace citerank::cli {

enum ExitCode : int { ok = 0, data_error = 1, usage_error = 2, not_converged = 3 };

struct InputOptions {
  std::string citations;
  std::string membership;
  std::string on_unknown = "error";
  std::string on_self_cite = "error";
  std::string self_loops = "drop";
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void add_input_options(CLI::App& cmd, InputOptions& opt) {
  cmd.add_option("citations", opt.citations, "Citations CSV (header citing,cited)")->required();
  cmd.add_option("membership", opt.membership, "Membership CSV (header article,journal)")->required();
  cmd.add_option("--on-unknown", opt.on_unknown, "Citations of unmapped articles: error|skip")
      ->check(CLI::IsMember({"error", "skip"}))
      ->capture_default_str();
  cmd.add_option("--on-self-cite", opt.on_self_cite, "Article self-citations: error|skip")
      ->check(CLI::IsMember({"error", "skip"}))
      ->capture_default_str();
  cmd.add_option("--self-loops", opt.self_loops, "Intra-journal citations: keep|drop")
      ->check(CLI::IsMember({"keep", "drop"}))
      ->capture_default_str();
}

inline SelfLoopPolicy self_loop_policy(const InputOptions& opt) {
  return opt.self_loops == "keep" ? SelfLoopPolicy::Keep : SelfLoopPolicy::Drop;
}

inline BuildResult load_inputs(const InputOptions& opt, std::ostream& err) {
  auto open = [](const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    return in;
  };
  std::vector<MembershipRecord> memberships;
  std::vector<CitationRecord> citations;
  {
    auto in = open(opt.membership);
    try {
      memberships = parse_membership(in);
    } catch (const Error& e) {
      throw IoError(opt.membership + ": " + e.what());
    }
  }
  {
    auto in = open(opt.citations);
    try {
      citations = parse_citations(in);
    } catch (const Error& e) {
      throw IoError(opt.citations + ": " + e.what());
    }
  }
  IngestPolicy policy;
  policy.unknown_article = opt.on_unknown == "skip" ? RecordPolicy::Skip : RecordPolicy::Error;
  policy.self_citation = opt.on_self_cite == "skip" ? RecordPolicy::Skip : RecordPolicy::Error;

  BuildResult built;
  try {
    built = build_graph(memberships, citations, policy);
  } catch (const ConflictingMembership& e) {
    throw IoError(opt.membership + ": " + e.what());
  } catch (const Error& e) {
    throw IoError(opt.citations + ": " + e.what());
  }
  const IngestReport& r = built.report;
  for (const auto& w : r.warnings) err << "warning: " << opt.citations << ": line " << w.line << ": " << w.message << '\n';
  err << "ingest: membership_rows=" << r.membership_records_read << " citation_rows=" << r.citation_records_read
      << " kept=" << r.citations_kept << " skipped=" << r.citations_skipped << " articles=" << r.articles
      << " journals=" << r.journals << '\n';
  return built;
}

/// Writes through `write` to `path`, or to `out` when path is "-".
template <typename Write>
void write_output(const std::string& path, std::ostream& out, Write&& write) {
  if (path == "-") {
    write(out);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  write(file);
  file.flush();
  if (!file) throw IoError("write failure on '" + path + "'");
}

inline void print_diagnostics(std::ostream& err, const std::string& method, const ConvergenceDiagnostics& d) {
  err << "method=" << method << " iterations=" << d.iterations << " residual_l1=" << format_score(d.residual_l1)
      << " tolerance=" << format_score(d.tolerance) << " converged=" << (d.converged ? "true" : "false") << '\n';
}

// --- aggregate ---------------------------------------------------------------

struct AggregateOptions {
  InputOptions input;
  std::string out = "-";
  std::string format = "csv";
};

inline int run_aggregate(const AggregateOptions& opt, std::ostream& out, std::ostream& err) {
  const BuildResult built = load_inputs(opt.input, err);
  const JournalGraph jg = aggregate(built.graph, self_loop_policy(opt.input));
  write_output(opt.out, out, [&](std::ostream& s) {
    if (opt.format == "dot")
      export_dot(jg, s);
    else
      export_journal_graph_csv(jg, s);
  });
  return ok;
}

// --- rank --------------------------------------------------------------------

struct RankOptions {
  InputOptions input;
  std::string method = "invariant";
  bool per_article = false;
  double damping = default_damping;
  double tol = default_tolerance;
  std::size_t max_iter = default_max_iterations;
  std::string out = "-";
};

inline int run_rank(const RankOptions& opt, std::ostream& out, std::ostream& err) {
  if (opt.method == "citation-rate" && opt.per_article)
    throw UsageError("--per-article does not apply to citation-rate, which is already per article");

  const BuildResult built = load_inputs(opt.input, err);
  int status = ok;
  ScoreVector scores;
  std::optional<ConvergenceDiagnostics> diagnostics;
  std::string method = opt.method;

  if (opt.method == "citation-rate") {
    scores = citation_rate(built.graph, self_loop_policy(opt.input) == SelfLoopPolicy::Keep);
  } else {
    const JournalGraph jg = aggregate(built.graph, self_loop_policy(opt.input));
    RankResult result;
    try {
      result = opt.method == "pagerank" ? pagerank(jg, opt.damping, opt.tol, opt.max_iter)
                                        : invariant_scores(jg, opt.tol, opt.max_iter);
    } catch (const NotConverged& e) {
      err << "error: " << e.what() << "; writing partial scores\n";
      result = e.partial();
      status = not_converged;
    }
    diagnostics = result.diagnostics;
    print_diagnostics(err, method, result.diagnostics);
    scores = opt.per_article ? per_article_scores(result.scores, jg) : result.scores;
    if (opt.per_article) method += "/per-article";
  }
  const RankReport report = make_report(method, scores, diagnostics);
  write_output(opt.out, out, [&](std::ostream& s) { export_scores_csv(report, s); });
  return status;
}

// --- synth -------------------------------------------------------------------

struct SynthOptions {
  std::size_t journals = 3;
  std::string articles = "1";
  std::uint64_t citations = 0;
  std::uint64_t seed = 0;
  bool strongly_connected = false;
  std::string out_citations;
  std::string out_membership;
};

/// Accepts "N" or "MIN:MAX".
inline std::pair<std::size_t, std::size_t> parse_article_range(const std::string& text) {
  auto parse = [&](const std::string& s) {
    std::size_t value = 0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || end != s.data() + s.size())
      throw UsageError("--articles expects N or MIN:MAX, got '" + text + "'");
    return value;
  };
  auto colon = text.find(':');
  if (colon == std::string::npos) {
    auto n = parse(text);
    return {n, n};
  }
  return {parse(text.substr(0, colon)), parse(text.substr(colon + 1))};
}

inline int run_synth(const SynthOptions& opt, std::ostream& out, std::ostream& err) {
  SynthConfig cfg;
  cfg.journals = opt.journals;
  std::tie(cfg.min_articles, cfg.max_articles) = parse_article_range(opt.articles);
  cfg.citations = opt.citations;
  cfg.seed = opt.seed;
  cfg.strongly_connected = opt.strongly_connected;

  CitationGraph g;
  try {
    g = generate(cfg);
  } catch (const InfeasibleConfig& e) {
    throw UsageError(std::string("infeasible configuration: ") + e.what());
  }
  write_output(opt.out_citations, out, [&](std::ostream& s) { export_citations_csv(g, s); });
  write_output(opt.out_membership, out, [&](std::ostream& s) { export_membership_csv(g, s); });
  err << "synth: journals=" << g.journal_count() << " articles=" << g.article_count()
      << " citations=" << g.citation_total() << " seed=" << cfg.seed << '\n';
  return ok;
}

// --- stats -------------------------------------------------------------------

struct StatsOptions {
  InputOptions input;
  std::string out = "-";
};

inline int run_stats(const StatsOptions& opt, std::ostream& out, std::ostream& err) {
  const BuildResult built = load_inputs(opt.input, err);
  const CitationGraph& g = built.graph;
  const JournalGraph with_loops = aggregate(g, SelfLoopPolicy::Keep);
  const JournalGraph cross = aggregate(g, SelfLoopPolicy::Drop);
  const std::uint64_t cross_total = cross.total_weight();
  const std::size_t components = cross.empty() ? 0 : strongly_connected_components(cross).size();

  write_output(opt.out, out, [&](std::ostream& s) {
    s << "journals=" << g.journal_count() << '\n'
      << "articles=" << g.article_count() << '\n'
      << "citations=" << g.citation_total() << '\n'
      << "cross=" << cross_total << '\n'
      << "intra=" << g.citation_total() - cross_total << '\n'
      << "scc=" << components << '\n';
    for (JournalGraph::Index j = 0; j < cross.size(); ++j) {
      const std::string& id = cross.journal(j).str();
      s << "journal." << id << ".articles=" << cross.article_count(j) << '\n'
        << "journal." << id << ".in=" << cross.in_weight(j) << '\n'
        << "journal." << id << ".out=" << cross.out_weight(j) << '\n'
        << "journal." << id << ".intra=" << with_loops.weight(j, j) << '\n';
    }
  });
  return ok;
}

// --- entry point ---------------------------------------------------------------

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"citerank: aggregate citation networks into journal graphs and rank journals"};
  app.require_subcommand(1);

  AggregateOptions agg;
  auto* agg_cmd = app.add_subcommand("aggregate", "Collapse an article citation graph into a journal graph");
  add_input_options(*agg_cmd, agg.input);
  agg_cmd->add_option("--out", agg.out, "Output path, '-' for stdout")->capture_default_str();
  agg_cmd->add_option("--format", agg.format, "csv|dot")
      ->check(CLI::IsMember({"csv", "dot"}))
      ->capture_default_str();

  RankOptions rank;
  auto* rank_cmd = app.add_subcommand("rank", "Rank journals");
  add_input_options(*rank_cmd, rank.input);
  rank_cmd->add_option("--method", rank.method, "invariant|pagerank|citation-rate")
      ->check(CLI::IsMember({"invariant", "pagerank", "citation-rate"}))
      ->capture_default_str();
  rank_cmd->add_flag("--per-article", rank.per_article, "Divide journal scores by article counts");
  rank_cmd->add_option("--damping", rank.damping, "Damping factor in (0, 1), pagerank only")
      ->check(CLI::Validator(
          [](const std::string& s) {
            double d = 0.0;
            try {
              d = std::stod(s);
            } catch (const std::exception&) {
              return std::string("damping must be a number");
            }
            return (d > 0.0 && d < 1.0) ? std::string() : std::string("damping must lie in (0, 1)");
          },
          "(0,1)"))
      ->capture_default_str();
  rank_cmd->add_option("--tol", rank.tol, "L1 residual tolerance (> 0)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  rank_cmd->add_option("--max-iter", rank.max_iter, "Iteration budget (>= 1)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  rank_cmd->add_option("--out", rank.out, "Output path, '-' for stdout")->capture_default_str();

  SynthOptions synth;
  auto* synth_cmd = app.add_subcommand("synth", "Generate a reproducible synthetic citation network");
  synth_cmd->add_option("--journals", synth.journals, "Number of journals (>= 1)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  synth_cmd->add_option("--articles", synth.articles, "Articles per journal: N or MIN:MAX")->capture_default_str();
  synth_cmd->add_option("--citations", synth.citations, "Random citations to draw")->capture_default_str();
  synth_cmd->add_option("--seed", synth.seed, "Generator seed")->capture_default_str();
  synth_cmd->add_flag("--strongly-connected", synth.strongly_connected,
                      "Add a cycle of citations through all journals first");
  synth_cmd->add_option("--out-citations", synth.out_citations, "Citations CSV output path")->required();
  synth_cmd->add_option("--out-membership", synth.out_membership, "Membership CSV output path")->required();

  StatsOptions stats;
  auto* stats_cmd = app.add_subcommand("stats", "Summarize a citation dataset as key=value lines");
  add_input_options(*stats_cmd, stats.input);
  stats_cmd->add_option("--out", stats.out, "Output path, '-' for stdout")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return usage_error;
  }

  try {
    if (*agg_cmd) return run_aggregate(agg, out, err);
    if (*rank_cmd) return run_rank(rank, out, err);
    if (*synth_cmd) return run_synth(synth, out, err);
    if (*stats_cmd) return run_stats(stats, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return usage_error;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return data_error;
  }
  return usage_error;
}

}  // namespace citerank::cli
