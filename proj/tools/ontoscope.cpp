#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ontoscope/ontoscope.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitClean = 0;
constexpr int kExitFindings = 1;
constexpr int kExitError = 2;

constexpr const char* kConfigDirEnv = "ONTOSCOPE_CONFIG_DIR";

#ifndef ONTOSCOPE_SOURCE_CONFIG_DIR
#define ONTOSCOPE_SOURCE_CONFIG_DIR ""
#endif

fs::path executable_dir() {
  std::error_code ec;
  fs::path exe = fs::read_symlink("/proc/self/exe", ec);
  if (ec) {
    return {};
  }
  return exe.parent_path();
}

// Default config directory: $ONTOSCOPE_CONFIG_DIR, then the installed
// share/ directory next to the binary, then the source tree fallback.
fs::path default_config_dir() {
  if (const char* env = std::getenv(kConfigDirEnv); env != nullptr && *env != '\0') {
    return fs::path(env);
  }
  fs::path exe_dir = executable_dir();
  if (!exe_dir.empty()) {
    fs::path installed = exe_dir / ".." / "share" / "ontoscope" / "configs";
    std::error_code ec;
    if (fs::is_directory(installed, ec)) {
      return installed.lexically_normal();
    }
  }
  fs::path source_dir(ONTOSCOPE_SOURCE_CONFIG_DIR);
  if (!source_dir.empty()) {
    std::error_code ec;
    if (fs::is_directory(source_dir, ec)) {
      return source_dir;
    }
  }
  return {};
}

struct PathOptions {
  std::string rules;
  std::string modes;
  std::string lexicon;
  std::string triples;
};

fs::path resolve(const std::string& explicit_path, const fs::path& config_dir,
                 const char* default_name, const char* what) {
  if (!explicit_path.empty()) {
    return fs::path(explicit_path);
  }
  if (config_dir.empty()) {
    throw ontoscope::Error(ontoscope::ErrorCode::ConfigError,
                           std::string("no ") + what +
                               " given and no config directory found (set " +
                               kConfigDirEnv + ")");
  }
  return config_dir / default_name;
}

ontoscope::PipelineConfig load_pipeline_config(const PathOptions& paths,
                                               std::size_t max_len,
                                               std::size_t budget) {
  fs::path config_dir = default_config_dir();
  ontoscope::PipelineConfig config;
  config.rules = ontoscope::RuleTable::load_file(
      resolve(paths.rules, config_dir, "default.rules", "rule table"));
  config.mode_map = ontoscope::ModeMap::load_file(
      resolve(paths.modes, config_dir, "default.modes", "mode map"));
  config.lexicon = ontoscope::SubstitutionLexicon::load_file(
      resolve(paths.lexicon, config_dir, "default.lexicon", "lexicon"));
  config.max_cycle_len = max_len;
  config.cycle_budget = budget;
  if (!paths.triples.empty()) {
    config.triples_text = ontoscope::read_text_file(paths.triples);
    config.triples_source = paths.triples;
  }
  return config;
}

void write_output(const std::string& content, const std::string& out_path,
                  bool append) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path,
                    append ? std::ios::binary | std::ios::app : std::ios::binary);
  if (!out) {
    throw ontoscope::Error(ontoscope::ErrorCode::IoError, "cannot write output",
                           out_path);
  }
  out << content;
}

int run_analyze(const std::vector<std::string>& files, const PathOptions& paths,
                const std::string& format, std::size_t max_len,
                std::size_t budget, const std::string& out_path) {
  ontoscope::PipelineConfig config = load_pipeline_config(paths, max_len, budget);
  int worst = kExitClean;
  bool first = true;
  for (const std::string& file : files) {
    try {
      ontoscope::AnalysisResult result =
          ontoscope::analyze_file(fs::path(file), config);
      std::string content;
      if (format == "structured") {
        content = ontoscope::emit_report(result.report);
        if (!first) {
          content = "---\n" + content;
        }
      } else if (format == "dot") {
        content = ontoscope::export_graph_dot(result.graph, result.findings);
      } else {
        if (result.findings.empty()) {
          content = "no recursion detected in " +
                    result.transcript.source_name + "\n";
        } else {
          for (const ontoscope::RecursionFinding& finding : result.findings) {
            content += finding.rendered;
            content.push_back('\n');
          }
        }
      }
      std::vector<std::string> leaked = ontoscope::find_mode_tokens(content);
      if (!leaked.empty() && format != "dot") {
        throw ontoscope::Error(ontoscope::ErrorCode::LayerViolation,
                               "report output leaks mode name `" +
                                   leaked.front() + "`");
      }
      write_output(content, out_path, !first);
      first = false;
      if (!result.findings.empty()) {
        worst = std::max(worst, kExitFindings);
      }
    } catch (const ontoscope::Error& e) {
      std::cerr << "ontoscope: " << e.what() << "\n";
      worst = std::max(worst, kExitError);
    }
  }
  return worst;
}

int run_check_layers(const std::string& file, const PathOptions& paths) {
  ontoscope::PipelineConfig config = load_pipeline_config(
      paths, ontoscope::kDefaultMaxCycleLen, ontoscope::kDefaultCycleBudget);

  std::string raw = ontoscope::read_text_file(file);
  ontoscope::Transcript transcript =
      ontoscope::parse_transcript(raw, fs::path(file).filename().string());
  std::vector<ontoscope::Phenomenon> phenomena = ontoscope::capture_phenomena(
      transcript, config.lexicon.keys(), config.annotations_enabled);
  std::vector<ontoscope::Assertion> assertions =
      ontoscope::extract_assertions(transcript, phenomena, config.rules);
  ontoscope::ConceptGraph graph = ontoscope::build_graph(assertions);
  if (config.triples_text) {
    graph = ontoscope::import_triples(*config.triples_text, graph,
                                      config.triples_source);
  }
  ontoscope::ModeAssignment modes =
      ontoscope::assign_modes(graph, config.mode_map);

  ontoscope::LayerCheck check = ontoscope::check_layer_separation(graph, modes);
  std::vector<ontoscope::LayerViolation> lexicon_violations =
      ontoscope::check_lexicon_purity(config.lexicon);
  check.violations.insert(check.violations.end(), lexicon_violations.begin(),
                          lexicon_violations.end());

  if (check.ok()) {
    std::cout << "layers separated: " << transcript.source_name << "\n";
    return kExitClean;
  }
  for (const ontoscope::LayerViolation& violation : check.violations) {
    std::cout << "violation ["
              << ontoscope::layer_violation_kind_name(violation.kind)
              << "]: " << violation.detail << "\n";
  }
  return kExitFindings;
}

int run_export_dot(const std::string& file, const PathOptions& paths,
                   std::size_t max_len, std::size_t budget,
                   const std::string& out_path) {
  ontoscope::PipelineConfig config = load_pipeline_config(paths, max_len, budget);
  ontoscope::AnalysisResult result =
      ontoscope::analyze_file(fs::path(file), config);
  write_output(ontoscope::export_graph_dot(result.graph, result.findings),
               out_path, false);
  return kExitClean;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Circular-definition detector for dialogue transcripts"};
  app.set_version_flag("--version", ontoscope::kVersion);
  app.require_subcommand(1);

  PathOptions paths;
  std::string format = "text";
  std::size_t max_len = ontoscope::kDefaultMaxCycleLen;
  std::size_t budget = ontoscope::kDefaultCycleBudget;
  std::string out_path;
  std::vector<std::string> analyze_files;
  std::string single_file;

  CLI::App* analyze = app.add_subcommand(
      "analyze", "Detect definitional cycles and suggest break points");
  analyze->add_option("files", analyze_files, "transcript file(s)")
      ->required()
      ->expected(-1);
  analyze->add_option("--rules", paths.rules, "rule table path");
  analyze->add_option("--modes", paths.modes, "mode map path");
  analyze->add_option("--lexicon", paths.lexicon, "substitution lexicon path");
  analyze->add_option("--triples", paths.triples, "triple file merged into the graph");
  analyze->add_option("--format", format, "text|structured|dot")
      ->check(CLI::IsMember({"text", "structured", "dot"}));
  analyze->add_option("--max-len", max_len, "maximum cycle length")
      ->check(CLI::PositiveNumber);
  analyze->add_option("--budget", budget, "cycle enumeration budget")
      ->check(CLI::PositiveNumber);
  analyze->add_option("--out", out_path, "write output to this path");

  CLI::App* check_layers = app.add_subcommand(
      "check-layers", "Verify categorical/existential layer separation");
  check_layers->add_option("file", single_file, "transcript file")->required();
  check_layers->add_option("--rules", paths.rules, "rule table path");
  check_layers->add_option("--modes", paths.modes, "mode map path");
  check_layers->add_option("--lexicon", paths.lexicon, "substitution lexicon path");
  check_layers->add_option("--triples", paths.triples, "triple file merged into the graph");

  CLI::App* export_dot = app.add_subcommand(
      "export-dot", "Emit the concept graph as DOT with break points marked");
  export_dot->add_option("file", single_file, "transcript file")->required();
  export_dot->add_option("--rules", paths.rules, "rule table path");
  export_dot->add_option("--modes", paths.modes, "mode map path");
  export_dot->add_option("--lexicon", paths.lexicon, "substitution lexicon path");
  export_dot->add_option("--triples", paths.triples, "triple file merged into the graph");
  export_dot->add_option("--max-len", max_len, "maximum cycle length")
      ->check(CLI::PositiveNumber);
  export_dot->add_option("--budget", budget, "cycle enumeration budget")
      ->check(CLI::PositiveNumber);
  export_dot->add_option("--out", out_path, "write output to this path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) {
      return run_analyze(analyze_files, paths, format, max_len, budget, out_path);
    }
    if (check_layers->parsed()) {
      return run_check_layers(single_file, paths);
    }
    if (export_dot->parsed()) {
      return run_export_dot(single_file, paths, max_len, budget, out_path);
    }
  } catch (const ontoscope::Error& e) {
    std::cerr << "ontoscope: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "ontoscope: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
