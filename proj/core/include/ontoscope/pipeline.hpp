#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ontoscope/detection.hpp"
#include "ontoscope/existential.hpp"
#include "ontoscope/graph.hpp"
#include "ontoscope/ingest.hpp"
#include "ontoscope/reduction.hpp"
#include "ontoscope/report.hpp"
#include "ontoscope/rules.hpp"

namespace ontoscope {

struct PipelineConfig {
  RuleTable rules;
  ModeMap mode_map;
  SubstitutionLexicon lexicon;
  std::size_t max_cycle_len = kDefaultMaxCycleLen;
  std::size_t cycle_budget = kDefaultCycleBudget;
  bool annotations_enabled = true;
  /// Optional triple text merged into the graph after extraction.
  std::optional<std::string> triples_text;
  std::string triples_source;
};

struct AnalysisResult {
  Transcript transcript;
  std::vector<Phenomenon> phenomena;
  std::vector<Assertion> assertions;
  ConceptGraph graph;
  ModeAssignment modes;
  std::vector<RecursionFinding> findings;
  Report report;
};

/// Ingest -> capture -> extract -> graph -> modes -> detect -> reduce ->
/// report. The lexicon's entry terms double as capture keys. Deterministic;
/// no shared mutable state.
AnalysisResult analyze_text(std::string_view raw, std::string source_name,
                            const PipelineConfig& config);

AnalysisResult analyze_file(const std::filesystem::path& path,
                            const PipelineConfig& config);

/// Whole-file read; throws Error(IoError) when unreadable.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace ontoscope
