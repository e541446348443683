#include "ontoscope/normalize.hpp"

#include <array>
#include <cctype>

namespace ontoscope {

namespace {

// Multi-byte UTF-8 punctuation stripped from term boundaries. Curly quotes,
// en/em dashes, ellipsis, guillemets.
constexpr std::array<std::string_view, 9> kWidePunct = {
    "‘", "’", "“", "”", "–",
    "—", "…", "«", "»"};

constexpr std::string_view kAsciiPunct = "'\"`,.;:!?()[]{}<>-*_/@~+=|\\";

bool is_ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v';
}

// Length of a boundary punctuation mark starting at pos, 0 if none.
std::size_t punct_len_at(std::string_view s, std::size_t pos) {
  for (std::string_view wide : kWidePunct) {
    if (s.substr(pos, wide.size()) == wide) {
      return wide.size();
    }
  }
  if (kAsciiPunct.find(s[pos]) != std::string_view::npos) {
    return 1;
  }
  return 0;
}

// Length of a boundary punctuation mark ending right before `end`, 0 if none.
std::size_t punct_len_before(std::string_view s, std::size_t end) {
  for (std::string_view wide : kWidePunct) {
    if (end >= wide.size() && s.substr(end - wide.size(), wide.size()) == wide) {
      return wide.size();
    }
  }
  if (kAsciiPunct.find(s[end - 1]) != std::string_view::npos) {
    return 1;
  }
  return 0;
}

}  // namespace

std::string normalize_term(std::string_view raw) {
  std::size_t begin = 0;
  std::size_t end = raw.size();

  // Strip surrounding whitespace and punctuation until stable.
  bool changed = true;
  while (changed && begin < end) {
    changed = false;
    while (begin < end && is_ascii_space(raw[begin])) {
      ++begin;
      changed = true;
    }
    while (begin < end && is_ascii_space(raw[end - 1])) {
      --end;
      changed = true;
    }
    if (begin < end) {
      if (std::size_t n = punct_len_at(raw, begin); n > 0) {
        begin += n;
        changed = true;
      }
    }
    if (begin < end) {
      if (std::size_t n = punct_len_before(raw, end); n > 0) {
        end -= n;
        changed = true;
      }
    }
  }

  // Lowercase and collapse internal whitespace in one pass.
  std::string out;
  out.reserve(end - begin);
  bool pending_space = false;
  for (std::size_t i = begin; i < end; ++i) {
    char c = raw[i];
    if (is_ascii_space(c)) {
      pending_space = true;
      continue;
    }
    if (pending_space && !out.empty()) {
      out.push_back(' ');
    }
    pending_space = false;
    out.push_back(static_cast<char>(
        std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

bool quote_mark_at(std::string_view text, std::size_t pos, std::size_t& len) {
  if (pos >= text.size()) {
    return false;
  }
  char c = text[pos];
  if (c == '\'' || c == '"') {
    len = 1;
    return true;
  }
  static constexpr std::array<std::string_view, 4> kCurly = {
      "‘", "’", "“", "”"};
  for (std::string_view q : kCurly) {
    if (text.substr(pos, q.size()) == q) {
      len = q.size();
      return true;
    }
  }
  return false;
}

}  // namespace ontoscope
