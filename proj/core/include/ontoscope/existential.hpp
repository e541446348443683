#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <regex>
#include <string>
#include <string_view>
#include <vector>

#include "ontoscope/graph.hpp"

namespace ontoscope {

/// The closed mode catalog. Fixed at build time; Undetermined is a
/// legitimate mode, not an error, so assignment can stay total.
enum class ExistentialMode : std::uint8_t {
  Dasein,
  Care,
  Openness,
  Temporality,
  Understanding,
  BeingInTheWorld,
  NonSpatioTemporal,
  Disclosure,
  Undetermined,
};

inline constexpr std::size_t kModeCount = 9;

inline constexpr std::array<std::string_view, kModeCount> kModeNames = {
    "Dasein",          "Care",           "Openness",
    "Temporality",     "Understanding",  "BeingInTheWorld",
    "NonSpatioTemporal", "Disclosure",   "Undetermined",
};

std::string_view mode_name(ExistentialMode mode);
std::optional<ExistentialMode> mode_from_name(std::string_view name);

/// Case-insensitive membership test against the catalog names.
bool is_mode_token(std::string_view token);

/// Pivot-selection ordering; smaller rank means higher existential load.
int existential_load_rank(ExistentialMode mode);

struct ModeMatcher {
  enum class Kind { ExactLabel, LabelRegex, Flag, PronounClass };

  Kind kind = Kind::ExactLabel;
  std::string text;  // label, regex source, flag name, or class name
  std::regex regex;  // compiled when kind == LabelRegex
};

struct ModeRule {
  std::string id;
  ModeMatcher matcher;
  ExistentialMode mode = ExistentialMode::Undetermined;
};

/// Ordered mapping rules, `RULE_ID <tab> MATCHER <tab> MODE` per line.
/// Matcher forms: `flag:MetaphorTerm`, `re:<regex>` (full match on the
/// normalized label), `pronoun:agentive`, or a bare normalized label.
class ModeMap {
 public:
  static ModeMap parse(std::string_view text, std::string_view source_name);
  static ModeMap load_file(const std::filesystem::path& path);

  const std::vector<ModeRule>& rules() const { return rules_; }

 private:
  std::vector<ModeRule> rules_;
};

/// Total node-to-mode map, stored apart from the graph. Indexed by node id.
struct ModeAssignment {
  std::vector<ExistentialMode> modes;
  std::vector<std::string> rule_provenance;  // matched rule id or "Default"

  ExistentialMode mode_of(NodeId id) const { return modes.at(id); }
  bool total_for(const ConceptGraph& graph) const {
    return modes.size() == graph.node_count() &&
           rule_provenance.size() == graph.node_count();
  }
};

/// First matching rule wins, in map order; unmatched nodes get Undetermined
/// with provenance "Default". The result is total by construction.
ModeAssignment assign_modes(const ConceptGraph& graph, const ModeMap& mapping);

struct LayerViolation {
  enum class Kind { NodeLabelIsMode, AssignmentNotTotal, EdgeProvenanceMode };

  Kind kind = Kind::NodeLabelIsMode;
  std::string detail;
};

const char* layer_violation_kind_name(LayerViolation::Kind kind);

struct LayerCheck {
  std::vector<LayerViolation> violations;

  bool ok() const { return violations.empty(); }
};

/// Ok when no node label collides with a catalog mode name, the assignment
/// is total over the graph, and no edge provenance references a mode.
LayerCheck check_layer_separation(const ConceptGraph& graph,
                                  const ModeAssignment& assignment);

}  // namespace ontoscope
