#include "ontoscope/ingest.hpp"

#include <algorithm>
#include <cctype>

#include "ontoscope/error.hpp"
#include "ontoscope/normalize.hpp"

namespace ontoscope {

namespace {

constexpr std::string_view kAnnotationOpen = "@term{";

bool is_word_byte(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0;
}

bool all_whitespace(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) != 0;
  });
}

int kind_precedence(CaptureKind kind) {
  switch (kind) {
    case CaptureKind::Annotated: return 2;
    case CaptureKind::Quoted: return 1;
    case CaptureKind::LexiconKey: return 0;
  }
  return 0;
}

struct QuoteMark {
  std::string_view open;
  std::string_view close;
  bool straight;  // straight marks double as apostrophes, need boundary checks
};

constexpr QuoteMark kQuoteMarks[] = {
    {"\"", "\"", true},
    {"'", "'", true},
    {"“", "”", false},
    {"‘", "’", false},
};

void scan_annotations(const Utterance& u, std::vector<Phenomenon>& out) {
  const std::string& text = u.text;
  std::size_t pos = 0;
  while ((pos = text.find(kAnnotationOpen, pos)) != std::string::npos) {
    std::size_t inner_begin = pos + kAnnotationOpen.size();
    std::size_t close = text.find('}', inner_begin);
    if (close == std::string::npos) {
      throw Error(ErrorCode::UnterminatedAnnotation,
                  "unterminated @term{ annotation in utterance " +
                      std::to_string(u.index));
    }
    std::string surface =
        normalize_term(std::string_view(text).substr(inner_begin, close - inner_begin));
    if (!surface.empty()) {
      out.push_back(Phenomenon{std::move(surface), u.index,
                               Span{inner_begin, close},
                               Span{pos, close + 1}, CaptureKind::Annotated});
    }
    pos = close + 1;
  }
}

void scan_quotes(const Utterance& u, std::vector<Phenomenon>& out) {
  const std::string& text = u.text;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const QuoteMark* mark = nullptr;
    for (const QuoteMark& m : kQuoteMarks) {
      if (std::string_view(text).substr(pos, m.open.size()) == m.open) {
        mark = &m;
        break;
      }
    }
    if (mark == nullptr) {
      ++pos;
      continue;
    }
    // A straight mark only opens at a word boundary (otherwise it is an
    // apostrophe).
    if (mark->straight && pos > 0 && is_word_byte(text[pos - 1])) {
      ++pos;
      continue;
    }
    std::size_t inner_begin = pos + mark->open.size();
    std::size_t search = inner_begin;
    std::size_t close = std::string::npos;
    while (search < text.size()) {
      std::size_t hit = text.find(mark->close.data(), search, mark->close.size());
      if (hit == std::string::npos) {
        break;
      }
      std::size_t after = hit + mark->close.size();
      if (mark->straight && after < text.size() && is_word_byte(text[after])) {
        search = hit + 1;  // apostrophe inside a word, keep looking
        continue;
      }
      close = hit;
      break;
    }
    if (close == std::string::npos) {
      pos = inner_begin;
      continue;
    }
    std::string surface =
        normalize_term(std::string_view(text).substr(inner_begin, close - inner_begin));
    if (!surface.empty()) {
      out.push_back(Phenomenon{std::move(surface), u.index,
                               Span{inner_begin, close},
                               Span{pos, close + mark->close.size()},
                               CaptureKind::Quoted});
    }
    pos = close + mark->close.size();
  }
}

// Matches `key` (normalized: lowercase, single spaces) against text at `pos`.
// A space in the key consumes a whitespace run in the text. Returns the end
// offset on a word-boundary match, npos otherwise.
std::size_t match_key_at(std::string_view text, std::size_t pos, std::string_view key) {
  std::size_t i = pos;
  std::size_t j = 0;
  while (j < key.size()) {
    if (key[j] == ' ') {
      std::size_t start = i;
      while (i < text.size() &&
             std::isspace(static_cast<unsigned char>(text[i])) != 0) {
        ++i;
      }
      if (i == start) {
        return std::string_view::npos;
      }
      ++j;
      continue;
    }
    if (i >= text.size()) {
      return std::string_view::npos;
    }
    char c = static_cast<char>(
        std::tolower(static_cast<unsigned char>(text[i])));
    if (c != key[j]) {
      return std::string_view::npos;
    }
    ++i;
    ++j;
  }
  if (i < text.size() && is_word_byte(text[i])) {
    return std::string_view::npos;  // key ends inside a larger word
  }
  return i;
}

void scan_lexicon(const Utterance& u, const std::set<std::string>& keys,
                  std::vector<Phenomenon>& out) {
  if (keys.empty()) {
    return;
  }
  const std::string& text = u.text;
  std::size_t pos = 0;
  while (pos < text.size()) {
    bool at_word_start = pos == 0 || !is_word_byte(text[pos - 1]);
    if (!at_word_start || !is_word_byte(text[pos])) {
      ++pos;
      continue;
    }
    std::size_t best_end = std::string_view::npos;
    for (const std::string& key : keys) {
      std::size_t end = match_key_at(text, pos, key);
      if (end != std::string_view::npos &&
          (best_end == std::string_view::npos || end > best_end)) {
        best_end = end;
      }
    }
    if (best_end == std::string_view::npos) {
      ++pos;
      continue;
    }
    std::string surface =
        normalize_term(std::string_view(text).substr(pos, best_end - pos));
    out.push_back(Phenomenon{std::move(surface), u.index, Span{pos, best_end},
                             Span{pos, best_end}, CaptureKind::LexiconKey});
    pos = best_end;
  }
}

}  // namespace

const char* capture_kind_name(CaptureKind kind) {
  switch (kind) {
    case CaptureKind::Quoted: return "Quoted";
    case CaptureKind::LexiconKey: return "LexiconKey";
    case CaptureKind::Annotated: return "Annotated";
  }
  return "Unknown";
}

Transcript parse_transcript(std::string_view raw, std::string source_name) {
  Transcript transcript;
  transcript.source_name = std::move(source_name);

  // Byte-order mark, if any, is not part of the first line.
  if (raw.substr(0, 3) == "\xEF\xBB\xBF") {
    raw.remove_prefix(3);
  }

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= raw.size()) {
    std::size_t nl = raw.find('\n', pos);
    std::string_view line;
    if (nl == std::string_view::npos) {
      if (pos == raw.size()) {
        break;
      }
      line = raw.substr(pos);
      pos = raw.size() + 1;
    } else {
      line = raw.substr(pos, nl - pos);
      pos = nl + 1;
    }
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.remove_suffix(1);
    }
    if (line.empty() || all_whitespace(line)) {
      continue;
    }
    if (line.front() == '#') {
      continue;
    }
    if (line.front() != '[') {
      throw Error(ErrorCode::MalformedLine,
                  "expected `[speaker] text` line", transcript.source_name,
                  line_no);
    }
    std::size_t bracket = line.find(']');
    if (bracket == std::string_view::npos) {
      throw Error(ErrorCode::MalformedLine, "unterminated speaker id",
                  transcript.source_name, line_no);
    }
    std::string_view speaker = line.substr(1, bracket - 1);
    if (speaker.empty() || all_whitespace(speaker)) {
      throw Error(ErrorCode::MalformedLine, "empty speaker id",
                  transcript.source_name, line_no);
    }
    if (bracket + 1 >= line.size() || line[bracket + 1] != ' ') {
      throw Error(ErrorCode::MalformedLine,
                  "expected a single space after the speaker id",
                  transcript.source_name, line_no);
    }
    std::string_view text = line.substr(bracket + 2);
    if (text.empty() || all_whitespace(text)) {
      throw Error(ErrorCode::MalformedLine, "empty utterance text",
                  transcript.source_name, line_no);
    }
    transcript.utterances.push_back(Utterance{transcript.utterances.size(),
                                              std::string(speaker),
                                              std::string(text)});
  }
  return transcript;
}

std::vector<Phenomenon> capture_phenomena(const Transcript& transcript,
                                          const std::set<std::string>& lexicon_keys,
                                          bool annotations_enabled) {
  std::vector<Phenomenon> result;
  for (const Utterance& u : transcript.utterances) {
    std::vector<Phenomenon> per_utterance;
    if (annotations_enabled) {
      scan_annotations(u, per_utterance);
    }
    scan_quotes(u, per_utterance);
    scan_lexicon(u, lexicon_keys, per_utterance);

    std::stable_sort(per_utterance.begin(), per_utterance.end(),
                     [](const Phenomenon& a, const Phenomenon& b) {
                       if (a.span != b.span) {
                         return a.span < b.span;
                       }
                       return kind_precedence(a.kind) > kind_precedence(b.kind);
                     });
    // Identical (utterance, span) captures collapse to the highest-precedence
    // kind; the sort above puts that one first.
    for (std::size_t i = 0; i < per_utterance.size(); ++i) {
      if (i > 0 && per_utterance[i].span == per_utterance[i - 1].span) {
        continue;
      }
      result.push_back(std::move(per_utterance[i]));
    }
  }
  return result;
}

}  // namespace ontoscope
