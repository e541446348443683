#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ontoscope {

struct Utterance {
  std::size_t index = 0;
  std::string speaker;
  std::string text;
};

struct Transcript {
  std::string source_name;
  std::vector<Utterance> utterances;
};

/// Byte offsets into an utterance's text, 0-based half-open.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  bool operator==(const Span&) const = default;
  auto operator<=>(const Span&) const = default;
};

enum class CaptureKind { Quoted, LexiconKey, Annotated };

const char* capture_kind_name(CaptureKind kind);

/// A captured term mention awaiting interpretation. Carries no relation and
/// no mode. `span` covers the bare term text; `outer_span` additionally
/// covers the capture delimiters (quote marks, `@term{...}` wrapper) and is
/// what pattern rules anchor on.
struct Phenomenon {
  std::string surface;  // normalized form of the spanned text
  std::size_t utterance_index = 0;
  Span span;
  Span outer_span;
  CaptureKind kind = CaptureKind::Quoted;
};

/// Parses transcript text. One utterance per non-comment, non-blank line;
/// line grammar: `[` speaker-id `]` single space, remainder = text.
/// Throws Error(MalformedLine) with the 1-based line number otherwise.
Transcript parse_transcript(std::string_view raw, std::string source_name);

/// Captures, in document order: quoted spans, longest-match lexicon key
/// occurrences, and `@term{...}` annotations. Duplicates at an identical
/// (utterance, span) collapse to one phenomenon with precedence
/// Annotated > Quoted > LexiconKey.
/// Throws Error(UnterminatedAnnotation) on `@term{` without a closing brace.
std::vector<Phenomenon> capture_phenomena(const Transcript& transcript,
                                          const std::set<std::string>& lexicon_keys,
                                          bool annotations_enabled);

}  // namespace ontoscope
