#include <doctest.h>

#include "ontoscope/normalize.hpp"

using ontoscope::normalize_term;

TEST_CASE("lowercases, trims, strips surrounding quotes and punctuation") {
  CHECK(normalize_term("'We'") == "we");
  CHECK(normalize_term("  Subjectivity,") == "subjectivity");
  CHECK(normalize_term("\"Module Design\".") == "module design");
  CHECK(normalize_term("(consciousness)") == "consciousness");
  CHECK(normalize_term("'we'.") == "we");
}

TEST_CASE("curly quotes and wide dashes strip at boundaries") {
  CHECK(normalize_term("‘we’") == "we");
  CHECK(normalize_term("“experience”") == "experience");
  CHECK(normalize_term("—aside—") == "aside");
}

TEST_CASE("internal hyphens and dashes survive") {
  CHECK(normalize_term("Right–Left") == "right–left");
  CHECK(normalize_term("earth-sky") == "earth-sky");
  CHECK(normalize_term("-edge-") == "edge");
}

TEST_CASE("internal whitespace collapses to single spaces") {
  CHECK(normalize_term("universality \t of   concepts") ==
        "universality of concepts");
  CHECK(normalize_term(" a  b ") == "a b");
}

TEST_CASE("degenerate inputs normalize to empty") {
  CHECK(normalize_term("") == "");
  CHECK(normalize_term("  ") == "");
  CHECK(normalize_term("''") == "");
  CHECK(normalize_term("...") == "");
}

TEST_CASE("no stemming") {
  CHECK(normalize_term("defines") == "defines");
  CHECK(normalize_term("definitions") == "definitions");
}
