#include <doctest.h>

#include <random>
#include <set>

#include "ontoscope/error.hpp"
#include "ontoscope/ingest.hpp"
#include "ontoscope/normalize.hpp"

using namespace ontoscope;

namespace {

Transcript single(const std::string& text) {
  return parse_transcript("[A] " + text, "test");
}

}  // namespace

TEST_CASE("parse_transcript splits speaker-tagged lines") {
  Transcript t = parse_transcript(
      "[S1] Who are we?\n[S2] 'We' is a system with subjectivity.", "dlg");
  REQUIRE(t.utterances.size() == 2);
  CHECK(t.utterances[0].speaker == "S1");
  CHECK(t.utterances[0].text == "Who are we?");
  CHECK(t.utterances[1].speaker == "S2");
  CHECK(t.utterances[0].index == 0);
  CHECK(t.utterances[1].index == 1);
  CHECK(t.source_name == "dlg");
}

TEST_CASE("empty input yields an empty transcript") {
  Transcript t = parse_transcript("", "empty");
  CHECK(t.utterances.empty());
}

TEST_CASE("comments and blank lines are skipped") {
  Transcript t = parse_transcript("# note\n\n[A] hi", "c");
  REQUIRE(t.utterances.size() == 1);
  CHECK(t.utterances[0].text == "hi");
  CHECK(t.utterances[0].index == 0);
}

TEST_CASE("CRLF input parses like LF") {
  Transcript t = parse_transcript("[A] one\r\n[B] two\r\n", "crlf");
  REQUIRE(t.utterances.size() == 2);
  CHECK(t.utterances[1].text == "two");
}

TEST_CASE("malformed lines raise MalformedLine with the line number") {
  CHECK_THROWS_WITH_AS(parse_transcript("free text", "f"),
                       doctest::Contains("f:1"), Error);
  try {
    parse_transcript("[A] ok\nnope", "f");
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MalformedLine);
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_transcript("[A]missing space", "f"), Error);
  CHECK_THROWS_AS(parse_transcript("[] no speaker", "f"), Error);
  CHECK_THROWS_AS(parse_transcript("[A]    ", "f"), Error);
  CHECK_THROWS_AS(parse_transcript("[unclosed speaker", "f"), Error);
}

TEST_CASE("quoted spans capture as pre-categorical phenomena") {
  Transcript t = single("Who are 'we' in this context?");
  auto phens = capture_phenomena(t, {}, true);
  REQUIRE(phens.size() == 1);
  CHECK(phens[0].surface == "we");
  CHECK(phens[0].kind == CaptureKind::Quoted);
  CHECK(phens[0].utterance_index == 0);
  // span covers the bare term, outer_span includes the quote marks
  CHECK(t.utterances[0].text.substr(phens[0].span.begin,
                                    phens[0].span.end - phens[0].span.begin) ==
        "we");
  CHECK(t.utterances[0].text.substr(
            phens[0].outer_span.begin,
            phens[0].outer_span.end - phens[0].outer_span.begin) == "'we'");
}

TEST_CASE("curly quotes capture like straight ones") {
  Transcript t = single("Who are ‘we’ here? And “they”?");
  auto phens = capture_phenomena(t, {}, true);
  REQUIRE(phens.size() == 2);
  CHECK(phens[0].surface == "we");
  CHECK(phens[1].surface == "they");
}

TEST_CASE("apostrophes inside words do not open quotes") {
  Transcript t = single("it's a fine day, isn't it");
  CHECK(capture_phenomena(t, {}, true).empty());
}

TEST_CASE("no capture sources means no phenomena") {
  Transcript t = single("nothing notable here");
  CHECK(capture_phenomena(t, {}, true).empty());
}

TEST_CASE("lexicon keys capture every longest-match occurrence") {
  Transcript t = single("subjectivity shapes subjectivity");
  auto phens = capture_phenomena(t, {"subjectivity"}, true);
  REQUIRE(phens.size() == 2);
  CHECK(phens[0].kind == CaptureKind::LexiconKey);
  // hand-applied longest-match scan: [0,12) and [20,32)
  CHECK(phens[0].span == Span{0, 12});
  CHECK(phens[1].span == Span{20, 32});
}

TEST_CASE("longest lexicon key wins at a shared start") {
  Transcript t = single("data flows matter");
  auto phens = capture_phenomena(t, {"data", "data flows"}, true);
  REQUIRE(phens.size() == 1);
  CHECK(phens[0].surface == "data flows");
}

TEST_CASE("lexicon keys respect word boundaries") {
  Transcript t = single("subsystems and systems");
  auto phens = capture_phenomena(t, {"system"}, true);
  CHECK(phens.empty());
}

TEST_CASE("multi-word lexicon keys tolerate extra whitespace") {
  Transcript t = single("see module  design here");
  auto phens = capture_phenomena(t, {"module design"}, true);
  REQUIRE(phens.size() == 1);
  CHECK(phens[0].surface == "module design");
}

TEST_CASE("annotations capture without braces") {
  Transcript t = single("ship the @term{module design} soon");
  auto phens = capture_phenomena(t, {}, true);
  REQUIRE(phens.size() == 1);
  CHECK(phens[0].kind == CaptureKind::Annotated);
  CHECK(phens[0].surface == "module design");
  CHECK(t.utterances[0].text.substr(
            phens[0].outer_span.begin,
            phens[0].outer_span.end - phens[0].outer_span.begin) ==
        "@term{module design}");
}

TEST_CASE("annotations can be disabled") {
  Transcript t = single("ship the @term{module design} soon");
  auto phens = capture_phenomena(t, {}, false);
  CHECK(phens.empty());
}

TEST_CASE("unterminated annotation raises with the utterance index") {
  Transcript t = parse_transcript("[A] fine line\n[B] bad @term{oops", "u");
  try {
    capture_phenomena(t, {}, true);
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnterminatedAnnotation);
    CHECK(std::string(e.what()).find("utterance 1") != std::string::npos);
  }
}

TEST_CASE("identical spans collapse with precedence Annotated > Quoted > LexiconKey") {
  SUBCASE("quoted beats lexicon") {
    Transcript t = single("consider 'we' now");
    auto phens = capture_phenomena(t, {"we"}, true);
    REQUIRE(phens.size() == 1);
    CHECK(phens[0].kind == CaptureKind::Quoted);
  }
  SUBCASE("annotated beats lexicon") {
    Transcript t = single("consider @term{we} now");
    auto phens = capture_phenomena(t, {"we"}, true);
    REQUIRE(phens.size() == 1);
    CHECK(phens[0].kind == CaptureKind::Annotated);
  }
}

TEST_CASE("phenomena re-slice to their surface and capture is deterministic") {
  std::mt19937 rng(7);
  const std::vector<std::string> words = {"alpha", "beta",  "gamma", "delta",
                                          "epsilon", "zeta", "theta"};
  std::set<std::string> lexicon = {"alpha", "gamma theta"};
  std::uniform_int_distribution<std::size_t> word(0, words.size() - 1);
  std::uniform_int_distribution<int> style(0, 3);
  for (int round = 0; round < 50; ++round) {
    std::string text;
    int tokens = 3 + static_cast<int>(rng() % 8);
    for (int i = 0; i < tokens; ++i) {
      if (i > 0) {
        text += ' ';
      }
      const std::string& w = words[word(rng)];
      switch (style(rng)) {
        case 0: text += "'" + w + "'"; break;
        case 1: text += "@term{" + w + "}"; break;
        case 2: text += "\"" + w + "\""; break;
        default: text += w; break;
      }
    }
    Transcript t = single(text);
    auto phens = capture_phenomena(t, lexicon, true);
    for (const Phenomenon& p : phens) {
      std::string sliced = t.utterances[0].text.substr(
          p.span.begin, p.span.end - p.span.begin);
      CHECK(normalize_term(sliced) == p.surface);
      CHECK(p.span.end <= t.utterances[0].text.size());
    }
    auto again = capture_phenomena(t, lexicon, true);
    REQUIRE(again.size() == phens.size());
    for (std::size_t i = 0; i < phens.size(); ++i) {
      CHECK(again[i].surface == phens[i].surface);
      CHECK(again[i].span == phens[i].span);
      CHECK(again[i].kind == phens[i].kind);
    }
  }
}
