#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace citerank {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class InvalidIdentifier : public Error {
public:
  using Error::Error;
};

class InvalidArgument : public Error {
public:
  using Error::Error;
};

namespace detail {
inline std::string at_line(std::size_t line) {
  return line ? "line " + std::to_string(line) + ": " : std::string();
}
}  // namespace detail

// Membership and citation errors optionally carry the 1-based input line
// (0 when the error did not come from a file).

class ConflictingMembership : public Error {
public:
  ConflictingMembership(std::string article, std::string existing, std::string requested,
                        std::size_t line = 0)
      : Error(detail::at_line(line) + "article '" + article + "' is already assigned to journal '" + existing +
              "', cannot reassign it to '" + requested + "'"),
        article_(std::move(article)), existing_(std::move(existing)),
        requested_(std::move(requested)), line_(line) {}

  const std::string& article() const noexcept { return article_; }
  std::size_t line() const noexcept { return line_; }
  const std::string& existing_journal() const noexcept { return existing_; }
  const std::string& requested_journal() const noexcept { return requested_; }

private:
  std::string article_;
  std::string existing_;
  std::string requested_;
  std::size_t line_;
};

class SelfCitation : public Error {
public:
  explicit SelfCitation(const std::string& article, std::size_t line = 0)
      : Error(detail::at_line(line) + "article '" + article + "' cannot cite itself") {}
};

class UnknownArticle : public Error {
public:
  explicit UnknownArticle(const std::string& article, std::size_t line = 0)
      : Error(detail::at_line(line) + "article '" + article + "' has no journal membership") {}
};

class UnknownJournal : public Error {
public:
  explicit UnknownJournal(const std::string& journal)
      : Error("unknown journal '" + journal + "'") {}
};

class EmptyJournal : public Error {
public:
  explicit EmptyJournal(const std::string& journal)
      : Error("journal '" + journal + "' has no articles") {}
};

class DanglingJournal : public Error {
public:
  explicit DanglingJournal(std::string journal)
      : Error("journal '" + journal + "' has no outgoing cross-journal citations"),
        journal_(std::move(journal)) {}

  const std::string& journal() const noexcept { return journal_; }

private:
  std::string journal_;
};

class NotStronglyConnected : public Error {
public:
  explicit NotStronglyConnected(std::vector<std::vector<std::string>> components)
      : Error(describe(components)), components_(std::move(components)) {}

  const std::vector<std::vector<std::string>>& components() const noexcept {
    return components_;
  }

private:
  static std::string describe(const std::vector<std::vector<std::string>>& components) {
    std::string msg = "journal graph is not strongly connected; " +
                      std::to_string(components.size()) + " components:";
    for (const auto& c : components) {
      msg += " {";
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) msg += ", ";
        msg += c[i];
      }
      msg += "}";
    }
    return msg;
  }

  std::vector<std::vector<std::string>> components_;
};

class TooFewArticles : public Error {
public:
  TooFewArticles(const std::string& journal, std::size_t articles, std::size_t parts)
      : Error("journal '" + journal + "' has " + std::to_string(articles) +
              " articles, cannot split it into " + std::to_string(parts) + " parts") {}
};

class InfeasibleConfig : public Error {
public:
  using Error::Error;
};

/// Raised by the CSV readers. Carries the 1-based physical line number.
class ParseError : public Error {
public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

class BadHeader : public ParseError {
public:
  BadHeader(const std::string& expected, const std::string& found)
      : ParseError(1, "expected header '" + expected + "', found '" + found + "'") {}
};

class MalformedLine : public ParseError {
public:
  MalformedLine(std::size_t line, std::string content, const std::string& reason)
      : ParseError(line, reason + ": '" + content + "'"), content_(std::move(content)) {}

  const std::string& content() const noexcept { return content_; }

private:
  std::string content_;
};

class IoError : public Error {
public:
  using Error::Error;
};

}  // namespace citerank
