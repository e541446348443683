#pragma once

#include <random>
#include <string>
#include <vector>

#include "ontoscope/existential.hpp"
#include "ontoscope/graph.hpp"

namespace ontoscope::testing {

inline std::string node_label(std::size_t i) {
  return "t" + std::to_string(i);
}

inline ConceptGraph graph_with_nodes(std::size_t n) {
  ConceptGraph graph;
  for (std::size_t i = 0; i < n; ++i) {
    graph.ensure_node(node_label(i));
  }
  return graph;
}

// Digraph from an adjacency bitmask over n*n ordered pairs (self-loops
// included), all DependsOn. Bit i*n+j set means edge i -> j.
inline ConceptGraph graph_from_mask(std::size_t n, std::size_t mask) {
  ConceptGraph graph = graph_with_nodes(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if ((mask >> (i * n + j)) & 1U) {
        graph.add_edge(static_cast<NodeId>(i), static_cast<NodeId>(j),
                       Relation::DependsOn, Provenance::imported());
      }
    }
  }
  return graph;
}

inline ConceptGraph random_digraph(std::mt19937& rng, std::size_t n,
                                   double edge_prob, bool mixed_relations) {
  ConceptGraph graph = graph_with_nodes(n);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> rel(0, 3);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (coin(rng) >= edge_prob) {
        continue;
      }
      Relation relation = Relation::DependsOn;
      if (mixed_relations) {
        switch (rel(rng)) {
          case 0: relation = Relation::DefinedThrough; break;
          case 1: relation = Relation::DependsOn; break;
          case 2: relation = Relation::MetaphorOf; break;
          case 3: relation = Relation::LinkedTo; break;
        }
      }
      graph.add_edge(static_cast<NodeId>(i), static_cast<NodeId>(j), relation,
                     Provenance::imported());
    }
  }
  return graph;
}

// Adds a definitional cycle over `length` distinct random nodes and returns
// its node sequence in traversal order.
inline std::vector<NodeId> plant_cycle(std::mt19937& rng, ConceptGraph& graph,
                                       std::size_t length) {
  std::vector<NodeId> nodes(graph.node_count());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    nodes[i] = static_cast<NodeId>(i);
  }
  std::shuffle(nodes.begin(), nodes.end(), rng);
  nodes.resize(length);
  std::uniform_int_distribution<int> rel(0, 2);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    Relation relation = Relation::DependsOn;
    switch (rel(rng)) {
      case 0: relation = Relation::DefinedThrough; break;
      case 1: relation = Relation::DependsOn; break;
      case 2: relation = Relation::MetaphorOf; break;
    }
    graph.add_edge(nodes[i], nodes[(i + 1) % nodes.size()], relation,
                   Provenance::imported());
  }
  return nodes;
}

inline ModeAssignment random_modes(std::mt19937& rng, const ConceptGraph& graph) {
  ModeAssignment assignment;
  std::uniform_int_distribution<int> pick(0, static_cast<int>(kModeCount) - 1);
  for (std::size_t i = 0; i < graph.node_count(); ++i) {
    assignment.modes.push_back(static_cast<ExistentialMode>(pick(rng)));
    assignment.rule_provenance.push_back("Default");
  }
  return assignment;
}

// Rebuilds the graph without one specific edge, preserving node order.
inline ConceptGraph without_edge(const ConceptGraph& graph, NodeId from,
                                 NodeId to, Relation relation) {
  ConceptGraph copy;
  for (const ConceptNode& node : graph.nodes()) {
    NodeId id = copy.ensure_node(node.label);
    if (node.flags.metaphor_term) {
      copy.set_metaphor_flag(id);
    }
  }
  bool dropped = false;
  for (const RelationEdge& edge : graph.edges()) {
    if (!dropped && edge.from == from && edge.to == to &&
        edge.relation == relation) {
      dropped = true;
      continue;
    }
    copy.add_edge(edge.from, edge.to, edge.relation, edge.provenance);
  }
  return copy;
}

}  // namespace ontoscope::testing
