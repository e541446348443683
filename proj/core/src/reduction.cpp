#include "ontoscope/reduction.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "ontoscope/error.hpp"
#include "ontoscope/normalize.hpp"

namespace ontoscope {

SubstitutionLexicon SubstitutionLexicon::parse(std::string_view text,
                                               std::string_view source_name) {
  SubstitutionLexicon lexicon;
  std::string source(source_name);
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line;
    if (nl == std::string_view::npos) {
      if (pos == text.size()) {
        break;
      }
      line = text.substr(pos);
      pos = text.size() + 1;
    } else {
      line = text.substr(pos, nl - pos);
      pos = nl + 1;
    }
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.remove_suffix(1);
    }
    bool blank = std::all_of(line.begin(), line.end(), [](char c) {
      return std::isspace(static_cast<unsigned char>(c)) != 0;
    });
    if (blank || line.front() == '#') {
      continue;
    }
    std::size_t arrow = line.find("=>");
    if (arrow == std::string_view::npos) {
      throw Error(ErrorCode::ConfigError, "expected `term => alt1 | alt2`",
                  source, line_no);
    }
    std::string term = normalize_term(line.substr(0, arrow));
    if (term.empty()) {
      throw Error(ErrorCode::ConfigError, "empty lexicon term", source, line_no);
    }
    std::vector<std::string> substitutes;
    std::string_view rest = line.substr(arrow + 2);
    std::size_t cursor = 0;
    while (cursor <= rest.size()) {
      std::size_t bar = rest.find('|', cursor);
      std::string_view piece = bar == std::string_view::npos
                                   ? rest.substr(cursor)
                                   : rest.substr(cursor, bar - cursor);
      std::string phrase = normalize_term(piece);
      if (phrase.empty()) {
        throw Error(ErrorCode::ConfigError, "empty substitute phrase", source,
                    line_no);
      }
      substitutes.push_back(std::move(phrase));
      if (bar == std::string_view::npos) {
        break;
      }
      cursor = bar + 1;
    }
    lexicon.entries_[term] = std::move(substitutes);
  }
  return lexicon;
}

SubstitutionLexicon SubstitutionLexicon::load_file(
    const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::IoError, "cannot open substitution lexicon",
                path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path.string());
}

const std::vector<std::string>* SubstitutionLexicon::find(
    std::string_view term) const {
  auto it = entries_.find(std::string(term));
  if (it == entries_.end()) {
    return nullptr;
  }
  return &it->second;
}

std::set<std::string> SubstitutionLexicon::keys() const {
  std::set<std::string> keys;
  for (const auto& [term, substitutes] : entries_) {
    keys.insert(term);
  }
  return keys;
}

std::vector<LayerViolation> check_lexicon_purity(
    const SubstitutionLexicon& lexicon) {
  std::vector<LayerViolation> violations;
  for (const auto& [term, substitutes] : lexicon.entries()) {
    for (const std::string& phrase : substitutes) {
      if (is_mode_token(phrase)) {
        violations.push_back(LayerViolation{
            LayerViolation::Kind::NodeLabelIsMode,
            "lexicon entry `" + term + "` offers mode name `" + phrase + "`"});
      }
    }
  }
  return violations;
}

ReductionSuggestion reduce(const Cycle& cycle, const RecursionClass& cls,
                           const ConceptGraph& graph, const ModeAssignment& modes,
                           const SubstitutionLexicon& lexicon) {
  auto highest_load = [&]() {
    NodeId best = cycle.node_sequence.front();
    int best_rank = existential_load_rank(modes.mode_of(best));
    for (NodeId id : cycle.node_sequence) {
      int rank = existential_load_rank(modes.mode_of(id));
      if (rank < best_rank || (rank == best_rank && id < best)) {
        best = id;
        best_rank = rank;
      }
    }
    return best;
  };

  NodeId pivot;
  if (cls.kind == RecursionClass::Kind::MetaphorLoop) {
    // The metaphor-flagged node wins regardless of load; smallest id breaks
    // ties. A MetaphorOf edge always flags its source, so one exists unless
    // the classification came from outside this cycle's nodes.
    NodeId flagged = cycle.node_sequence.front();
    bool found = false;
    for (NodeId id : cycle.node_sequence) {
      if (graph.node(id).flags.metaphor_term && (!found || id < flagged)) {
        flagged = id;
        found = true;
      }
    }
    pivot = found ? flagged : highest_load();
  } else {
    pivot = highest_load();
  }

  ReductionSuggestion suggestion;
  suggestion.pivot = pivot;
  suggestion.rationale_mode = modes.mode_of(pivot);

  // The edge leaving the pivot along the cycle.
  std::size_t pivot_pos = 0;
  for (std::size_t i = 0; i < cycle.node_sequence.size(); ++i) {
    if (cycle.node_sequence[i] == pivot) {
      pivot_pos = i;
      break;
    }
  }
  suggestion.break_edge = cycle.edge_sequence[pivot_pos];

  const std::string& target = graph.node(suggestion.break_edge.to).label;
  if (const std::vector<std::string>* subs = lexicon.find(target)) {
    suggestion.substitutes = *subs;
  }
  return suggestion;
}

std::vector<RecursionFinding> reduce_all(const std::vector<Cycle>& cycles,
                                         const ConceptGraph& graph,
                                         const ModeAssignment& modes,
                                         const SubstitutionLexicon& lexicon) {
  std::vector<RecursionFinding> findings;
  findings.reserve(cycles.size());
  for (const Cycle& cycle : cycles) {
    RecursionFinding finding;
    finding.cycle = cycle;
    finding.recursion_class = classify(cycle, graph);
    finding.suggestion =
        reduce(cycle, finding.recursion_class, graph, modes, lexicon);
    findings.push_back(std::move(finding));
  }
  return findings;
}

}  // namespace ontoscope
