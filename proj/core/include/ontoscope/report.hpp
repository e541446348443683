#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ontoscope/existential.hpp"
#include "ontoscope/graph.hpp"
#include "ontoscope/reduction.hpp"

namespace ontoscope {

struct GraphStats {
  std::size_t node_count = 0;
  std::size_t edge_count = 0;
  std::size_t finding_count = 0;
  bool mode_totality = false;  // audited: every node carries exactly one mode
};

/// User-facing result of a run. Rendered text is categorical vocabulary
/// only; no existential mode name ever appears in it.
struct Report {
  std::string source_name;
  std::vector<RecursionFinding> findings;
  GraphStats stats;
  std::string tool_version;
  std::vector<std::string> node_labels;  // by node id, for self-contained emission
};

/// Canonical one-paragraph rendering per cycle length. Length 2:
/// `Detected recursion: '<A>' is tied to '<B>', which depends on '<A>'.
/// Consider '<A>' through '<s1>' or '<s2>' instead of '<B>'.` Longer cycles
/// list the chain in order starting at the pivot; with no substitutes the
/// second sentence becomes `Consider re-grounding '<A>' in non-circular
/// categories.`
std::string render_finding(const RecursionFinding& finding, const ConceptGraph& graph);

/// DOT digraph with deterministic node order. Cycle edges carry a highlight
/// color; each break edge is dashed and tagged breakpoint=true.
std::string export_graph_dot(const ConceptGraph& graph,
                             const std::vector<RecursionFinding>& findings);

/// Fills rendered text, computes stats (including the mode-totality audit),
/// and verifies output purity. Throws Error(LayerViolation) if any rendered
/// finding leaks a mode name.
Report make_report(std::string source_name, const ConceptGraph& graph,
                   std::vector<RecursionFinding> findings,
                   const ModeAssignment& modes);

/// Stable-key structured text document; byte-identical across runs on
/// identical input.
std::string emit_report(const Report& report);

/// Lowercased alphanumeric token runs of the text.
std::vector<std::string> report_tokens(std::string_view text);

/// Tokens of `text` that collide with the mode catalog, case-insensitive.
/// Empty result means the output-purity invariant holds.
std::vector<std::string> find_mode_tokens(std::string_view text);

}  // namespace ontoscope
