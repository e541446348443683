#include "ontoscope/pipeline.hpp"

#include <fstream>
#include <sstream>

#include "ontoscope/error.hpp"
#include "ontoscope/triples.hpp"

namespace ontoscope {

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::IoError, "cannot open file", path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

AnalysisResult analyze_text(std::string_view raw, std::string source_name,
                            const PipelineConfig& config) {
  AnalysisResult result;
  result.transcript = parse_transcript(raw, std::move(source_name));
  result.phenomena = capture_phenomena(result.transcript, config.lexicon.keys(),
                                       config.annotations_enabled);
  result.assertions =
      extract_assertions(result.transcript, result.phenomena, config.rules);
  result.graph = build_graph(result.assertions);
  if (config.triples_text) {
    result.graph =
        import_triples(*config.triples_text, result.graph, config.triples_source);
  }
  result.modes = assign_modes(result.graph, config.mode_map);
  std::vector<Cycle> cycles =
      find_cycles(result.graph, config.max_cycle_len, config.cycle_budget);
  result.findings =
      reduce_all(cycles, result.graph, result.modes, config.lexicon);
  result.report = make_report(result.transcript.source_name, result.graph,
                              std::move(result.findings), result.modes);
  result.findings = result.report.findings;
  return result;
}

AnalysisResult analyze_file(const std::filesystem::path& path,
                            const PipelineConfig& config) {
  return analyze_text(read_text_file(path), path.filename().string(), config);
}

}  // namespace ontoscope
