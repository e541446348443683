#include "ontoscope/rules.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "ontoscope/error.hpp"

namespace ontoscope {

namespace {

bool is_word_byte(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0;
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (true) {
    std::size_t tab = line.find('\t', pos);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(pos));
      return fields;
    }
    fields.push_back(line.substr(pos, tab - pos));
    pos = tab + 1;
  }
}

std::vector<PatternToken> tokenize_pattern(std::string_view pattern,
                                           std::string_view source,
                                           std::size_t line_no) {
  std::vector<PatternToken> tokens;
  std::size_t pos = 0;
  std::string literal;
  auto flush_literal = [&]() {
    if (!literal.empty()) {
      tokens.push_back(PatternToken{PatternToken::Kind::Literal, literal});
      literal.clear();
    }
  };
  while (pos < pattern.size()) {
    if (pattern.substr(pos, 3) == "<A>") {
      flush_literal();
      tokens.push_back(PatternToken{PatternToken::Kind::SubjectSlot, {}});
      pos += 3;
    } else if (pattern.substr(pos, 3) == "<B>") {
      flush_literal();
      tokens.push_back(PatternToken{PatternToken::Kind::ObjectSlot, {}});
      pos += 3;
    } else if (pattern.substr(pos, 3) == "...") {
      flush_literal();
      tokens.push_back(PatternToken{PatternToken::Kind::Wildcard, {}});
      pos += 3;
    } else {
      literal.push_back(pattern[pos]);
      ++pos;
    }
  }
  flush_literal();

  std::size_t subjects = 0;
  std::size_t objects = 0;
  for (const PatternToken& t : tokens) {
    subjects += t.kind == PatternToken::Kind::SubjectSlot ? 1 : 0;
    objects += t.kind == PatternToken::Kind::ObjectSlot ? 1 : 0;
  }
  if (tokens.empty() || tokens.front().kind != PatternToken::Kind::SubjectSlot) {
    throw Error(ErrorCode::MalformedRule, "pattern must start with <A>",
                std::string(source), line_no);
  }
  if (subjects != 1 || objects > 1) {
    throw Error(ErrorCode::MalformedRule,
                "pattern needs exactly one <A> and at most one <B>",
                std::string(source), line_no);
  }
  if (objects == 0 && tokens.size() < 2) {
    throw Error(ErrorCode::MalformedRule,
                "reflexive pattern needs literal text after <A>",
                std::string(source), line_no);
  }
  return tokens;
}

// Case-insensitive literal match; a space in the literal consumes a
// whitespace run in the text. Returns npos on mismatch.
std::size_t match_literal(std::string_view text, std::size_t pos,
                          std::string_view literal) {
  std::size_t i = pos;
  for (std::size_t j = 0; j < literal.size(); ++j) {
    if (literal[j] == ' ') {
      std::size_t start = i;
      while (i < text.size() &&
             std::isspace(static_cast<unsigned char>(text[i])) != 0) {
        ++i;
      }
      if (i == start) {
        return std::string_view::npos;
      }
      continue;
    }
    if (i >= text.size()) {
      return std::string_view::npos;
    }
    char a = static_cast<char>(std::tolower(static_cast<unsigned char>(text[i])));
    char b = static_cast<char>(
        std::tolower(static_cast<unsigned char>(literal[j])));
    if (a != b) {
      return std::string_view::npos;
    }
    ++i;
  }
  return i;
}

struct MatchState {
  std::size_t end = 0;
  const Phenomenon* object = nullptr;
};

// Phenomenon starting exactly at `pos`; prefers the longest span, then the
// higher-precedence capture kind.
const Phenomenon* phenomenon_at(const std::vector<const Phenomenon*>& phens,
                                std::size_t pos) {
  const Phenomenon* best = nullptr;
  for (const Phenomenon* p : phens) {
    if (p->outer_span.begin != pos) {
      continue;
    }
    if (best == nullptr || p->outer_span.end > best->outer_span.end) {
      best = p;
    }
  }
  return best;
}

bool match_tokens(std::string_view text,
                  const std::vector<const Phenomenon*>& phens,
                  const std::vector<PatternToken>& tokens, std::size_t index,
                  std::size_t pos, MatchState& state) {
  if (index == tokens.size()) {
    state.end = pos;
    return true;
  }
  const PatternToken& token = tokens[index];
  switch (token.kind) {
    case PatternToken::Kind::Literal: {
      std::size_t next = match_literal(text, pos, token.literal);
      if (next == std::string_view::npos) {
        return false;
      }
      bool last = index + 1 == tokens.size();
      if (last && !token.literal.empty() && is_word_byte(token.literal.back()) &&
          next < text.size() && is_word_byte(text[next])) {
        return false;  // literal would end inside a larger word
      }
      return match_tokens(text, phens, tokens, index + 1, next, state);
    }
    case PatternToken::Kind::Wildcard: {
      for (std::size_t p = pos; p <= text.size(); ++p) {
        if (match_tokens(text, phens, tokens, index + 1, p, state)) {
          return true;
        }
      }
      return false;
    }
    case PatternToken::Kind::ObjectSlot: {
      const Phenomenon* b = phenomenon_at(phens, pos);
      if (b == nullptr) {
        return false;
      }
      if (!match_tokens(text, phens, tokens, index + 1, b->outer_span.end,
                        state)) {
        return false;
      }
      state.object = b;
      return true;
    }
    case PatternToken::Kind::SubjectSlot:
      return false;  // only valid as the leading token, handled by the caller
  }
  return false;
}

}  // namespace

RuleTable RuleTable::parse(std::string_view text, std::string_view source_name) {
  RuleTable table;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line;
    if (nl == std::string_view::npos) {
      if (pos == text.size()) {
        break;
      }
      line = text.substr(pos);
      pos = text.size() + 1;
    } else {
      line = text.substr(pos, nl - pos);
      pos = nl + 1;
    }
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.remove_suffix(1);
    }
    if (line.empty() || line.front() == '#') {
      continue;
    }
    bool blank = std::all_of(line.begin(), line.end(), [](char c) {
      return std::isspace(static_cast<unsigned char>(c)) != 0;
    });
    if (blank) {
      continue;
    }
    std::vector<std::string_view> fields = split_tabs(line);
    if (fields.size() != 3) {
      throw Error(ErrorCode::MalformedRule,
                  "expected `PRIORITY<tab>PATTERN<tab>RELATION`",
                  std::string(source_name), line_no);
    }
    ExtractionRule rule;
    auto [ptr, ec] = std::from_chars(fields[0].data(),
                                     fields[0].data() + fields[0].size(),
                                     rule.priority);
    if (ec != std::errc{} || ptr != fields[0].data() + fields[0].size()) {
      throw Error(ErrorCode::MalformedRule, "priority is not an integer",
                  std::string(source_name), line_no);
    }
    rule.pattern_text = std::string(fields[1]);
    rule.tokens = tokenize_pattern(fields[1], source_name, line_no);
    rule.reflexive = std::none_of(
        rule.tokens.begin(), rule.tokens.end(), [](const PatternToken& t) {
          return t.kind == PatternToken::Kind::ObjectSlot;
        });
    std::optional<Relation> relation = relation_from_name(fields[2]);
    if (!relation) {
      throw Error(ErrorCode::MalformedRule,
                  "unknown relation `" + std::string(fields[2]) + "`",
                  std::string(source_name), line_no);
    }
    rule.relation = *relation;
    table.rules_.push_back(std::move(rule));
  }
  std::stable_sort(table.rules_.begin(), table.rules_.end(),
                   [](const ExtractionRule& a, const ExtractionRule& b) {
                     return a.priority < b.priority;
                   });
  return table;
}

RuleTable RuleTable::load_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::IoError, "cannot open rule table", path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path.string());
}

std::vector<Assertion> extract_assertions(const Transcript& transcript,
                                          const std::vector<Phenomenon>& phenomena,
                                          const RuleTable& rules) {
  std::vector<std::vector<const Phenomenon*>> by_utterance(
      transcript.utterances.size());
  for (const Phenomenon& p : phenomena) {
    if (p.utterance_index < by_utterance.size()) {
      by_utterance[p.utterance_index].push_back(&p);
    }
  }

  std::vector<Assertion> assertions;
  for (const Utterance& u : transcript.utterances) {
    const std::vector<const Phenomenon*>& phens = by_utterance[u.index];
    if (phens.empty()) {
      continue;
    }
    for (const ExtractionRule& rule : rules.rules()) {
      for (const Phenomenon* a : phens) {
        MatchState state;
        if (!match_tokens(u.text, phens, rule.tokens, 1, a->outer_span.end,
                          state)) {
          continue;
        }
        if (!rule.reflexive && state.object == nullptr) {
          continue;
        }
        Assertion assertion;
        assertion.subject = a->surface;
        assertion.relation = rule.relation;
        assertion.object = rule.reflexive ? a->surface : state.object->surface;
        assertion.fragment =
            u.text.substr(a->outer_span.begin, state.end - a->outer_span.begin);
        assertion.utterance_index = u.index;
        assertions.push_back(std::move(assertion));
      }
    }
  }
  return assertions;
}

}  // namespace ontoscope
