#pragma once

#include <charconv>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "schubert/errors.hpp"

namespace schubert::detail {

inline std::string_view trim(std::string_view text) {
  constexpr std::string_view blanks = " \t\r\n";
  const auto first = text.find_first_not_of(blanks);
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(blanks);
  return text.substr(first, last - first + 1);
}

/// Strips one layer of matching brackets or parentheses.
inline std::string_view strip_brackets(std::string_view text) {
  text = trim(text);
  if (text.size() >= 2 && ((text.front() == '[' && text.back() == ']') ||
                           (text.front() == '(' && text.back() == ')'))) {
    text = trim(text.substr(1, text.size() - 2));
  }
  return text;
}

/// Fields separated by commas and/or blanks. An empty field between two
/// commas is an error.
inline std::vector<std::string_view> split_fields(std::string_view text) {
  std::vector<std::string_view> fields;
  if (trim(text).empty()) return fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos
                                              ? std::string_view::npos
                                              : comma - start);
    if (trim(piece).empty()) {
      throw ParseError("empty field in '" + std::string(text) + "'");
    }
    std::size_t from = 0;
    for (std::size_t i = 0; i <= piece.size(); ++i) {
      if (i == piece.size() || piece[i] == ' ' || piece[i] == '\t' ||
          piece[i] == '\r' || piece[i] == '\n') {
        if (i > from) fields.push_back(piece.substr(from, i - from));
        from = i + 1;
      }
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

inline int parse_int(std::string_view field, std::string_view what) {
  int value = 0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last) {
    throw ParseError("invalid " + std::string(what) + " entry '" +
                     std::string(field) + "'");
  }
  return value;
}

/// Parses "1,-2,3", "[1, -2, 3]" or "1 -2 3".
inline std::vector<int> parse_int_list(std::string_view text,
                                       std::string_view what) {
  std::vector<int> out;
  for (auto field : split_fields(strip_brackets(text))) {
    out.push_back(parse_int(field, what));
  }
  return out;
}

inline std::string join_ints(std::span<const int> values,
                             std::string_view sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace schubert::detail
