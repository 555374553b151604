#pragma once

#include <compare>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include "citerank/error.hpp"

namespace citerank {

namespace detail {

inline bool is_space(char c) noexcept {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f';
}

inline std::string_view trim(std::string_view s) noexcept {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

// Identifiers are trimmed, non-empty, and must stay representable in the
// comma-separated file formats.
inline std::string normalize_identifier(std::string_view raw, const char* kind) {
  std::string_view s = trim(raw);
  if (s.empty()) throw InvalidIdentifier(std::string(kind) + " identifier is empty");
  for (char c : s) {
    if (c == ',' || c == '\n' || c == '\r')
      throw InvalidIdentifier(std::string(kind) + " identifier '" + std::string(s) +
                              "' contains a comma or line break");
  }
  return std::string(s);
}

}  // namespace detail

/// Strongly typed, normalized identifier. Tag distinguishes articles from journals.
template <typename Tag>
class Identifier {
public:
  explicit Identifier(std::string_view raw)
      : value_(detail::normalize_identifier(raw, Tag::kind)) {}

  const std::string& str() const noexcept { return value_; }

  friend auto operator<=>(const Identifier&, const Identifier&) = default;
  friend bool operator==(const Identifier&, const Identifier&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Identifier& id) {
    return os << id.value_;
  }

private:
  std::string value_;
};

struct ArticleTag {
  static constexpr const char* kind = "article";
};
struct JournalTag {
  static constexpr const char* kind = "journal";
};

using ArticleId = Identifier<ArticleTag>;
using JournalId = Identifier<JournalTag>;

}  // namespace citerank

template <typename Tag>
struct std::hash<citerank::Identifier<Tag>> {
  std::size_t operator()(const citerank::Identifier<Tag>& id) const noexcept {
    return std::hash<std::string>{}(id.str());
  }
};
