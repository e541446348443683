#pragma once

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ontoscope/detection.hpp"
#include "ontoscope/existential.hpp"
#include "ontoscope/graph.hpp"

namespace ontoscope {

/// Curated map from cycle-participating terms to non-circular replacement
/// categories. File grammar: `term => alt1 | alt2 | ...`, `#` comments.
class SubstitutionLexicon {
 public:
  static SubstitutionLexicon parse(std::string_view text,
                                   std::string_view source_name);
  static SubstitutionLexicon load_file(const std::filesystem::path& path);

  const std::vector<std::string>* find(std::string_view term) const;
  const std::map<std::string, std::vector<std::string>>& entries() const {
    return entries_;
  }

  /// Entry terms, normalized — these double as capture lexicon keys.
  std::set<std::string> keys() const;

 private:
  std::map<std::string, std::vector<std::string>> entries_;
};

/// Substitute phrases naming a catalog mode would leak the existential layer
/// into user-facing output; reported so `check-layers` can fail on them.
std::vector<LayerViolation> check_lexicon_purity(const SubstitutionLexicon& lexicon);

struct ReductionSuggestion {
  RelationEdge break_edge;
  NodeId pivot = 0;
  std::vector<std::string> substitutes;
  ExistentialMode rationale_mode = ExistentialMode::Undetermined;  // internal only
};

struct RecursionFinding {
  Cycle cycle;
  RecursionClass recursion_class;
  ReductionSuggestion suggestion;
  std::string rendered;  // filled by the report layer
};

/// Lifts a cycle into the mode layer to pick a break point. The pivot is the
/// cycle node with the highest existential load (ties to the smallest node
/// id); for a MetaphorLoop it is the metaphor-flagged node regardless of
/// load. The break edge is the cycle edge leaving the pivot; substitutes come
/// from the lexicon entry of that edge's target term.
ReductionSuggestion reduce(const Cycle& cycle, const RecursionClass& cls,
                           const ConceptGraph& graph, const ModeAssignment& modes,
                           const SubstitutionLexicon& lexicon);

/// One finding per cycle, in the detector's order, rendered text left empty.
std::vector<RecursionFinding> reduce_all(const std::vector<Cycle>& cycles,
                                         const ConceptGraph& graph,
                                         const ModeAssignment& modes,
                                         const SubstitutionLexicon& lexicon);

}  // namespace ontoscope
