#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "ontoscope/graph.hpp"
#include "ontoscope/ingest.hpp"

namespace ontoscope {

struct PatternToken {
  enum class Kind { SubjectSlot, ObjectSlot, Wildcard, Literal };

  Kind kind = Kind::Literal;
  std::string literal;  // set when kind == Literal
};

/// A pattern rule. Patterns are token sequences over `<A>`, `<B>`, `...`
/// (any run of text) and literal segments; they must start with `<A>`, and
/// slots only ever match captured phenomena. A pattern without `<B>` asserts
/// a reflexive relation on `<A>`.
struct ExtractionRule {
  int priority = 0;
  std::string pattern_text;
  std::vector<PatternToken> tokens;
  Relation relation = Relation::DefinedThrough;
  bool reflexive = false;
};

class RuleTable {
 public:
  /// Parses `PRIORITY <tab> PATTERN <tab> RELATION` lines; `#` comments and
  /// blank lines are skipped. Rules sort by ascending priority, file order
  /// breaking ties. Throws Error(MalformedRule) with line context.
  static RuleTable parse(std::string_view text, std::string_view source_name);
  static RuleTable load_file(const std::filesystem::path& path);

  const std::vector<ExtractionRule>& rules() const { return rules_; }

 private:
  std::vector<ExtractionRule> rules_;
};

/// Applies each rule left-to-right per utterance, anchoring `<A>`/`<B>` on
/// captured phenomena. Emission order is (utterance, rule priority, position).
/// Unmatched text yields no assertions.
std::vector<Assertion> extract_assertions(const Transcript& transcript,
                                          const std::vector<Phenomenon>& phenomena,
                                          const RuleTable& rules);

}  // namespace ontoscope
