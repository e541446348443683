#include "ontoscope/report.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <tuple>

#include "ontoscope/error.hpp"
#include "ontoscope/version.hpp"

namespace ontoscope {

namespace {

std::string squote(std::string_view term) {
  std::string out = "'";
  for (char c : term) {
    if (c == '\'') {
      out += "\\'";
    } else {
      out.push_back(c);
    }
  }
  out.push_back('\'');
  return out;
}

std::string double_quoted(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') {
      out.push_back('\\');
    }
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string join_substitutes(const std::vector<std::string>& substitutes) {
  std::string out;
  for (std::size_t i = 0; i < substitutes.size(); ++i) {
    if (i > 0) {
      bool last = i + 1 == substitutes.size();
      if (substitutes.size() > 2) {
        out += last ? ", or " : ", ";
      } else {
        out += " or ";
      }
    }
    out += squote(substitutes[i]);
  }
  return out;
}

std::string dot_escaped(std::string_view label) {
  std::string out;
  for (char c : label) {
    if (c == '"' || c == '\\') {
      out.push_back('\\');
    }
    out.push_back(c);
  }
  return out;
}

using EdgeKey = std::tuple<NodeId, NodeId, Relation>;

EdgeKey edge_key(const RelationEdge& edge) {
  return {edge.from, edge.to, edge.relation};
}

}  // namespace

std::string render_finding(const RecursionFinding& finding,
                           const ConceptGraph& graph) {
  const Cycle& cycle = finding.cycle;
  const std::size_t len = cycle.length();

  // Chain rotated to start at the pivot, cycle order preserved.
  std::size_t pivot_pos = 0;
  for (std::size_t i = 0; i < len; ++i) {
    if (cycle.node_sequence[i] == finding.suggestion.pivot) {
      pivot_pos = i;
      break;
    }
  }
  auto label_at = [&](std::size_t i) -> const std::string& {
    return graph.node(cycle.node_sequence[(pivot_pos + i) % len]).label;
  };

  std::string text = "Detected recursion: ";
  if (len == 1) {
    text += squote(label_at(0)) + " depends on itself.";
  } else {
    text += squote(label_at(0)) + " is tied to " + squote(label_at(1));
    for (std::size_t i = 2; i < len; ++i) {
      text += ", which depends on " + squote(label_at(i));
    }
    text += ", which depends on " + squote(label_at(0)) + ".";
  }

  const std::string& pivot_label = graph.node(finding.suggestion.pivot).label;
  if (finding.suggestion.substitutes.empty()) {
    text += " Consider re-grounding " + squote(pivot_label) +
            " in non-circular categories.";
  } else {
    const std::string& target_label =
        graph.node(finding.suggestion.break_edge.to).label;
    text += " Consider " + squote(pivot_label) + " through " +
            join_substitutes(finding.suggestion.substitutes) + " instead of " +
            squote(target_label) + ".";
  }
  return text;
}

std::string export_graph_dot(const ConceptGraph& graph,
                             const std::vector<RecursionFinding>& findings) {
  std::set<EdgeKey> cycle_edges;
  std::set<EdgeKey> break_edges;
  for (const RecursionFinding& finding : findings) {
    for (const RelationEdge& edge : finding.cycle.edge_sequence) {
      cycle_edges.insert(edge_key(edge));
    }
    break_edges.insert(edge_key(finding.suggestion.break_edge));
  }

  std::ostringstream out;
  out << "digraph G {\n";
  for (const ConceptNode& node : graph.nodes()) {
    out << "  n" << node.id << " [label=\"" << dot_escaped(node.label) << "\"";
    if (node.flags.metaphor_term) {
      out << ", shape=diamond";
    }
    out << "];\n";
  }
  for (const RelationEdge& edge : graph.edges()) {
    out << "  n" << edge.from << " -> n" << edge.to << " [label=\""
        << relation_name(edge.relation) << "\"";
    if (cycle_edges.count(edge_key(edge)) > 0) {
      out << ", color=\"firebrick\", penwidth=2.0";
    }
    if (break_edges.count(edge_key(edge)) > 0) {
      out << ", style=dashed, breakpoint=true";
    }
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

Report make_report(std::string source_name, const ConceptGraph& graph,
                   std::vector<RecursionFinding> findings,
                   const ModeAssignment& modes) {
  Report report;
  report.source_name = std::move(source_name);
  report.tool_version = kVersion;
  for (RecursionFinding& finding : findings) {
    finding.rendered = render_finding(finding, graph);
    std::vector<std::string> leaked = find_mode_tokens(finding.rendered);
    if (!leaked.empty()) {
      throw Error(ErrorCode::LayerViolation,
                  "rendered finding leaks mode name `" + leaked.front() + "`");
    }
  }
  report.findings = std::move(findings);
  report.stats.node_count = graph.node_count();
  report.stats.edge_count = graph.edges().size();
  report.stats.finding_count = report.findings.size();
  report.stats.mode_totality = modes.total_for(graph);
  report.node_labels.reserve(graph.node_count());
  for (const ConceptNode& node : graph.nodes()) {
    report.node_labels.push_back(node.label);
  }
  return report;
}

std::string emit_report(const Report& report) {
  std::ostringstream out;
  out << "source: " << report.source_name << "\n";
  out << "version: " << report.tool_version << "\n";
  out << "stats:\n";
  out << "  nodes: " << report.stats.node_count << "\n";
  out << "  edges: " << report.stats.edge_count << "\n";
  out << "  findings: " << report.stats.finding_count << "\n";
  out << "  mode_totality: " << (report.stats.mode_totality ? "true" : "false")
      << "\n";
  if (report.findings.empty()) {
    out << "findings: []\n";
    return out.str();
  }
  auto label_of = [&](NodeId id) -> const std::string& {
    return report.node_labels.at(id);
  };
  out << "findings:\n";
  for (const RecursionFinding& finding : report.findings) {
    out << "  - cycle: [";
    for (std::size_t i = 0; i < finding.cycle.node_sequence.size(); ++i) {
      if (i > 0) {
        out << ", ";
      }
      out << squote(label_of(finding.cycle.node_sequence[i]));
    }
    out << "]\n";
    out << "    class: " << recursion_class_name(finding.recursion_class) << "\n";
    const RelationEdge& break_edge = finding.suggestion.break_edge;
    out << "    break_edge: " << squote(label_of(break_edge.from)) << " -> "
        << squote(label_of(break_edge.to)) << " ("
        << relation_name(break_edge.relation) << ")\n";
    out << "    substitutes: [";
    for (std::size_t i = 0; i < finding.suggestion.substitutes.size(); ++i) {
      if (i > 0) {
        out << ", ";
      }
      out << squote(finding.suggestion.substitutes[i]);
    }
    out << "]\n";
    out << "    text: " << double_quoted(finding.rendered) << "\n";
  }
  return out.str();
}

std::vector<std::string> report_tokens(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : text) {
    if (std::isalnum(static_cast<unsigned char>(c)) != 0) {
      current.push_back(static_cast<char>(
          std::tolower(static_cast<unsigned char>(c))));
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) {
    tokens.push_back(std::move(current));
  }
  return tokens;
}

std::vector<std::string> find_mode_tokens(std::string_view text) {
  std::vector<std::string> hits;
  for (std::string& token : report_tokens(text)) {
    if (is_mode_token(token)) {
      hits.push_back(std::move(token));
    }
  }
  return hits;
}

}  // namespace ontoscope
