#pragma once

#include <charconv>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "seppart/error.hpp"

namespace seppart {

/// One part. Parts compare by value, and for equal values the overlined copy
/// is the larger one: 1 < 1~ < 2 < 2~ < ...
struct OverPart {
  int value = 1;
  bool overlined = false;

  friend auto operator<=>(const OverPart&, const OverPart&) = default;
};

/// Parts in display order (largest first). Plain partitions are
/// overpartitions with no overlined part.
struct Overpartition {
  std::vector<OverPart> parts;

  Overpartition() = default;
  explicit Overpartition(std::vector<OverPart> p) : parts(std::move(p)) {}

  static Overpartition plain(const std::vector<int>& values) {
    Overpartition out;
    out.parts.reserve(values.size());
    for (int v : values) out.parts.push_back({v, false});
    return out;
  }

  std::size_t length() const { return parts.size(); }
  bool empty() const { return parts.empty(); }

  long long weight() const {
    long long w = 0;
    for (const auto& p : parts) w += p.value;
    return w;
  }

  int overlined_count() const {
    int n = 0;
    for (const auto& p : parts) n += p.overlined ? 1 : 0;
    return n;
  }

  std::vector<int> values() const {
    std::vector<int> out;
    out.reserve(parts.size());
    for (const auto& p : parts) out.push_back(p.value);
    return out;
  }

  friend auto operator<=>(const Overpartition&, const Overpartition&) = default;
};

/// Comma-separated values, overline marked by a trailing tilde: "9~,7,3~,1".
/// The empty partition prints as "()".
inline std::string to_text(const Overpartition& p) {
  if (p.empty()) return "()";
  std::string out;
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p.parts[i].value);
    if (p.parts[i].overlined) out += '~';
  }
  return out;
}

/// Inverse of to_text. Surrounding parentheses and blanks are accepted; the
/// parts are kept in the order given.
inline Overpartition parse_overpartition(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')') text = trim(text.substr(1, text.size() - 2));
  Overpartition out;
  if (text.empty()) return out;
  while (true) {
    const auto comma = text.find(',');
    std::string_view token = trim(text.substr(0, comma));
    OverPart part;
    if (!token.empty() && token.back() == '~') {
      part.overlined = true;
      token.remove_suffix(1);
    }
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), part.value);
    if (token.empty() || ec != std::errc{} || end != token.data() + token.size() || part.value < 1) {
      throw Error(ErrorCode::Parse, "bad part '" + std::string(token) + "'");
    }
    out.parts.push_back(part);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace seppart
