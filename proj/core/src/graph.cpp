#include "ontoscope/graph.hpp"

#include <cassert>

namespace ontoscope {

std::string_view relation_name(Relation relation) {
  switch (relation) {
    case Relation::DefinedThrough: return "DefinedThrough";
    case Relation::DependsOn: return "DependsOn";
    case Relation::LinkedTo: return "LinkedTo";
    case Relation::MetaphorOf: return "MetaphorOf";
  }
  return "Unknown";
}

std::optional<Relation> relation_from_name(std::string_view name) {
  if (name == "DefinedThrough" || name == "defined_through") {
    return Relation::DefinedThrough;
  }
  if (name == "DependsOn" || name == "depends_on") {
    return Relation::DependsOn;
  }
  if (name == "LinkedTo" || name == "linked_to") {
    return Relation::LinkedTo;
  }
  if (name == "MetaphorOf" || name == "metaphor_of") {
    return Relation::MetaphorOf;
  }
  return std::nullopt;
}

bool relation_in_cycle_filter(Relation relation) {
  return relation != Relation::LinkedTo;
}

NodeId ConceptGraph::ensure_node(std::string_view label) {
  assert(!label.empty());
  auto it = label_index_.find(std::string(label));
  if (it != label_index_.end()) {
    return it->second;
  }
  NodeId id = static_cast<NodeId>(nodes_.size());
  nodes_.push_back(ConceptNode{id, std::string(label), NodeFlags{}});
  label_index_.emplace(std::string(label), id);
  return id;
}

bool ConceptGraph::add_edge(NodeId from, NodeId to, Relation relation,
                            Provenance provenance) {
  assert(from < nodes_.size() && to < nodes_.size());
  auto [it, inserted] = edge_keys_.emplace(from, to, relation);
  if (!inserted) {
    return false;
  }
  edges_.push_back(RelationEdge{from, to, relation, provenance});
  if (relation == Relation::MetaphorOf) {
    nodes_[from].flags.metaphor_term = true;
  }
  return true;
}

void ConceptGraph::set_metaphor_flag(NodeId id) {
  nodes_.at(id).flags.metaphor_term = true;
}

std::optional<NodeId> ConceptGraph::find_node(std::string_view label) const {
  auto it = label_index_.find(std::string(label));
  if (it == label_index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

ConceptGraph build_graph(const std::vector<Assertion>& assertions) {
  ConceptGraph graph;
  for (const Assertion& a : assertions) {
    NodeId from = graph.ensure_node(a.subject);
    NodeId to = graph.ensure_node(a.object);
    graph.add_edge(from, to, a.relation,
                   Provenance::from_utterance(a.utterance_index));
  }
  return graph;
}

}  // namespace ontoscope
