#include "deloop/notation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <vector>

#include "deloop/cycles.hpp"

namespace deloop {

namespace {

[[noreturn]] void fail(std::string_view text, const std::string& why) {
  throw Error(ErrorKind::ParseError, "\"" + std::string(text) + "\": " + why);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::uint32_t parse_atom(std::string_view whole, std::string_view token) {
  std::uint32_t value = 0;
  auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || end != token.data() + token.size())
    fail(whole, "expected a non-negative integer, got '" + std::string(token) + "'");
  return value;
}

/// Splits on whitespace and commas, dropping empty pieces.
std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == ',')) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j])) && s[j] != ',') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

Permutation parse_cycles(std::string_view text, std::optional<std::size_t> n) {
  std::vector<std::vector<std::uint32_t>> cycles;
  std::string_view rest = text;
  std::uint32_t largest = 0;
  bool any = false;
  while (!(rest = trim(rest)).empty()) {
    if (rest.front() != '(') fail(text, "expected '('");
    auto close = rest.find(')');
    if (close == std::string_view::npos) fail(text, "unbalanced parenthesis");
    auto body = rest.substr(1, close - 1);
    if (body.find('(') != std::string_view::npos) fail(text, "nested parenthesis");
    auto& cycle = cycles.emplace_back();
    for (auto t : tokens(body)) {
      cycle.push_back(parse_atom(text, t));
      largest = std::max(largest, cycle.back());
      any = true;
    }
    rest.remove_prefix(close + 1);
  }
  const std::size_t size = n ? *n : (any ? std::size_t{largest} + 1 : 0);
  if (any && largest >= size) fail(text, "label " + std::to_string(largest) + " exceeds n");

  std::vector<std::uint32_t> images(size);
  for (std::size_t i = 0; i < size; ++i) images[i] = static_cast<std::uint32_t>(i);
  std::vector<bool> used(size, false);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (used[cycle[k]]) fail(text, "label " + std::to_string(cycle[k]) + " appears twice");
      used[cycle[k]] = true;
      images[cycle[k]] = cycle[(k + 1) % cycle.size()];
    }
  }
  return Bijection::permutation(std::move(images));
}

Permutation parse_one_line(std::string_view text, std::optional<std::size_t> n) {
  std::vector<std::uint32_t> images;
  for (auto t : tokens(text)) images.push_back(parse_atom(text, t));
  if (images.empty()) fail(text, "empty permutation");
  if (n && images.size() != *n)
    fail(text, "has " + std::to_string(images.size()) + " entries, expected " + std::to_string(*n));
  std::vector<bool> seen(images.size(), false);
  for (auto v : images) {
    if (v >= images.size() || seen[v]) fail(text, "not a rearrangement of 0.." + std::to_string(images.size() - 1));
    seen[v] = true;
  }
  return Bijection::permutation(std::move(images));
}

}  // namespace

Permutation parse_permutation(std::string_view text, std::optional<std::size_t> n) {
  auto t = trim(text);
  if (t.empty()) fail(text, "empty permutation");
  return t.front() == '(' ? parse_cycles(t, n) : parse_one_line(t, n);
}

std::string format_cycles(const Permutation& e) {
  std::ostringstream out;
  for (const auto& cycle : canonical_form(cycle_decompose(e))) {
    if (cycle.size() < 2) continue;
    out << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) out << (i ? " " : "") << cycle[i];
    out << ')';
  }
  auto s = out.str();
  return s.empty() ? "()" : s;
}

std::string format_one_line(const Permutation& e) {
  std::ostringstream out;
  for (std::size_t i = 0; i < e.size(); ++i) out << (i ? "," : "") << e.codomain()[e.image_index(i)];
  return out.str();
}

std::string format_transpositions(const TranspositionList& factors) {
  std::ostringstream out;
  for (const auto& t : factors) out << '(' << t.members()[0] << ' ' << t.members()[1] << ')';
  auto s = out.str();
  return s.empty() ? "()" : s;
}

}  // namespace deloop
