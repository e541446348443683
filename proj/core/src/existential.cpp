#include "ontoscope/existential.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "ontoscope/error.hpp"
#include "ontoscope/normalize.hpp"

namespace ontoscope {

namespace {

std::string ascii_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

// Agentive pronouns and self-referring terms; the `pronoun:agentive` matcher
// class.
constexpr std::string_view kAgentivePronouns[] = {
    "i",  "we",  "you", "he",      "she",       "they",
    "us", "me",  "who", "oneself", "ourselves", "myself",
};

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (true) {
    std::size_t tab = line.find('\t', pos);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(pos));
      return fields;
    }
    fields.push_back(line.substr(pos, tab - pos));
    pos = tab + 1;
  }
}

bool matches(const ModeMatcher& matcher, const ConceptNode& node) {
  switch (matcher.kind) {
    case ModeMatcher::Kind::ExactLabel:
      return node.label == matcher.text;
    case ModeMatcher::Kind::LabelRegex:
      return std::regex_match(node.label, matcher.regex);
    case ModeMatcher::Kind::Flag:
      return node.flags.metaphor_term;  // MetaphorTerm is the only flag
    case ModeMatcher::Kind::PronounClass:
      return std::any_of(std::begin(kAgentivePronouns),
                         std::end(kAgentivePronouns),
                         [&](std::string_view p) { return node.label == p; });
  }
  return false;
}

}  // namespace

std::string_view mode_name(ExistentialMode mode) {
  return kModeNames[static_cast<std::size_t>(mode)];
}

std::optional<ExistentialMode> mode_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kModeNames.size(); ++i) {
    if (kModeNames[i] == name) {
      return static_cast<ExistentialMode>(i);
    }
  }
  return std::nullopt;
}

bool is_mode_token(std::string_view token) {
  std::string lower = ascii_lower(token);
  return std::any_of(kModeNames.begin(), kModeNames.end(),
                     [&](std::string_view name) {
                       return ascii_lower(name) == lower;
                     });
}

int existential_load_rank(ExistentialMode mode) {
  switch (mode) {
    case ExistentialMode::Dasein: return 0;
    case ExistentialMode::Care: return 1;
    case ExistentialMode::Disclosure: return 2;
    case ExistentialMode::Openness: return 3;
    case ExistentialMode::BeingInTheWorld: return 4;
    case ExistentialMode::Understanding: return 5;
    case ExistentialMode::Temporality: return 6;
    case ExistentialMode::NonSpatioTemporal: return 7;
    case ExistentialMode::Undetermined: return 8;
  }
  return 8;
}

ModeMap ModeMap::parse(std::string_view text, std::string_view source_name) {
  ModeMap map;
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
    if (line.empty() || line.front() == '#') {
      continue;
    }
    bool blank = std::all_of(line.begin(), line.end(), [](char c) {
      return std::isspace(static_cast<unsigned char>(c)) != 0;
    });
    if (blank) {
      continue;
    }
    std::vector<std::string_view> fields = split_tabs(line);
    if (fields.size() != 3 || fields[0].empty()) {
      throw Error(ErrorCode::InvalidMatcher,
                  "expected `RULE_ID<tab>MATCHER<tab>MODE`", source, line_no);
    }
    ModeRule rule;
    rule.id = std::string(fields[0]);
    std::string_view matcher = fields[1];
    if (matcher.rfind("flag:", 0) == 0) {
      std::string_view flag = matcher.substr(5);
      if (flag != "MetaphorTerm") {
        throw Error(ErrorCode::InvalidMatcher,
                    "unknown flag `" + std::string(flag) + "` in rule " + rule.id,
                    source, line_no);
      }
      rule.matcher.kind = ModeMatcher::Kind::Flag;
      rule.matcher.text = std::string(flag);
    } else if (matcher.rfind("re:", 0) == 0) {
      rule.matcher.kind = ModeMatcher::Kind::LabelRegex;
      rule.matcher.text = std::string(matcher.substr(3));
      try {
        rule.matcher.regex = std::regex(rule.matcher.text, std::regex::ECMAScript);
      } catch (const std::regex_error& e) {
        throw Error(ErrorCode::InvalidMatcher,
                    "bad regex in rule " + rule.id + ": " + e.what(), source,
                    line_no);
      }
    } else if (matcher.rfind("pronoun:", 0) == 0) {
      std::string_view cls = matcher.substr(8);
      if (cls != "agentive") {
        throw Error(ErrorCode::InvalidMatcher,
                    "unknown pronoun class `" + std::string(cls) + "` in rule " +
                        rule.id,
                    source, line_no);
      }
      rule.matcher.kind = ModeMatcher::Kind::PronounClass;
      rule.matcher.text = std::string(cls);
    } else {
      rule.matcher.kind = ModeMatcher::Kind::ExactLabel;
      rule.matcher.text = normalize_term(matcher);
      if (rule.matcher.text.empty()) {
        throw Error(ErrorCode::InvalidMatcher, "empty label matcher in rule " +
                        rule.id, source, line_no);
      }
    }
    std::optional<ExistentialMode> mode = mode_from_name(fields[2]);
    if (!mode) {
      throw Error(ErrorCode::InvalidModeName,
                  "rule " + rule.id + " names unknown mode `" +
                      std::string(fields[2]) + "`",
                  source, line_no);
    }
    rule.mode = *mode;
    map.rules_.push_back(std::move(rule));
  }
  return map;
}

ModeMap ModeMap::load_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::IoError, "cannot open mode map", path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path.string());
}

ModeAssignment assign_modes(const ConceptGraph& graph, const ModeMap& mapping) {
  ModeAssignment assignment;
  assignment.modes.reserve(graph.node_count());
  assignment.rule_provenance.reserve(graph.node_count());
  for (const ConceptNode& node : graph.nodes()) {
    ExistentialMode mode = ExistentialMode::Undetermined;
    std::string provenance = "Default";
    for (const ModeRule& rule : mapping.rules()) {
      if (matches(rule.matcher, node)) {
        mode = rule.mode;
        provenance = rule.id;
        break;
      }
    }
    assignment.modes.push_back(mode);
    assignment.rule_provenance.push_back(std::move(provenance));
  }
  return assignment;
}

const char* layer_violation_kind_name(LayerViolation::Kind kind) {
  switch (kind) {
    case LayerViolation::Kind::NodeLabelIsMode: return "NodeLabelIsMode";
    case LayerViolation::Kind::AssignmentNotTotal: return "AssignmentNotTotal";
    case LayerViolation::Kind::EdgeProvenanceMode: return "EdgeProvenanceMode";
  }
  return "Unknown";
}

LayerCheck check_layer_separation(const ConceptGraph& graph,
                                  const ModeAssignment& assignment) {
  LayerCheck check;
  for (const ConceptNode& node : graph.nodes()) {
    if (is_mode_token(node.label)) {
      check.violations.push_back(LayerViolation{
          LayerViolation::Kind::NodeLabelIsMode,
          "node `" + node.label + "` collides with a mode name"});
    }
  }
  if (!assignment.total_for(graph)) {
    check.violations.push_back(LayerViolation{
        LayerViolation::Kind::AssignmentNotTotal,
        "assignment covers " + std::to_string(assignment.modes.size()) +
            " of " + std::to_string(graph.node_count()) + " nodes"});
  }
  for (const RelationEdge& edge : graph.edges()) {
    if (edge.provenance.kind != Provenance::Kind::Utterance &&
        edge.provenance.kind != Provenance::Kind::ImportedTriple) {
      check.violations.push_back(LayerViolation{
          LayerViolation::Kind::EdgeProvenanceMode,
          "edge " + std::to_string(edge.from) + "->" + std::to_string(edge.to) +
              " carries non-categorical provenance"});
    }
  }
  return check;
}

}  // namespace ontoscope
