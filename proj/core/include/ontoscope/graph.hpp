#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <vector>

namespace ontoscope {

using NodeId = std::uint32_t;

enum class Relation { DefinedThrough, DependsOn, LinkedTo, MetaphorOf };

std::string_view relation_name(Relation relation);

/// Accepts the canonical name ("DependsOn") or the triple-file predicate
/// spelling ("depends_on").
std::optional<Relation> relation_from_name(std::string_view name);

/// LinkedTo records association, not definitional dependence; it never
/// participates in cycle search.
bool relation_in_cycle_filter(Relation relation);

struct Provenance {
  enum class Kind { Utterance, ImportedTriple };

  Kind kind = Kind::Utterance;
  std::size_t utterance_index = 0;  // valid when kind == Utterance

  static Provenance from_utterance(std::size_t index) {
    return Provenance{Kind::Utterance, index};
  }
  static Provenance imported() {
    return Provenance{Kind::ImportedTriple, 0};
  }
};

struct NodeFlags {
  bool metaphor_term = false;
};

struct ConceptNode {
  NodeId id = 0;
  std::string label;  // normalized, unique within a graph
  NodeFlags flags;
};

struct RelationEdge {
  NodeId from = 0;
  NodeId to = 0;
  Relation relation = Relation::DefinedThrough;
  Provenance provenance;
};

/// One extracted statement. `fragment` is the raw text slice the statement
/// came from (the data); `intended` is an optional gloss of the idea behind
/// it (the meaning), kept apart from the fragment.
struct Assertion {
  std::string subject;
  Relation relation = Relation::DefinedThrough;
  std::string object;
  std::string fragment;
  std::optional<std::string> intended;
  std::size_t utterance_index = 0;
};

/// The categorical layer: terms and typed definitional relations. Holds no
/// existential-mode data. Treat as immutable once built.
class ConceptGraph {
 public:
  /// Returns the node with this label, creating it with the next dense id on
  /// first mention. Labels must be normalized and non-empty.
  NodeId ensure_node(std::string_view label);

  /// Adds the edge unless an identical (from, to, relation) already exists.
  /// The first insertion's provenance wins. Returns true when added.
  bool add_edge(NodeId from, NodeId to, Relation relation, Provenance provenance);

  void set_metaphor_flag(NodeId id);

  const std::vector<ConceptNode>& nodes() const { return nodes_; }
  const std::vector<RelationEdge>& edges() const { return edges_; }
  std::size_t node_count() const { return nodes_.size(); }
  const ConceptNode& node(NodeId id) const { return nodes_.at(id); }
  std::optional<NodeId> find_node(std::string_view label) const;

 private:
  std::vector<ConceptNode> nodes_;
  std::vector<RelationEdge> edges_;
  std::unordered_map<std::string, NodeId> label_index_;
  std::set<std::tuple<NodeId, NodeId, Relation>> edge_keys_;
};

/// One node per distinct term, one edge per distinct (subject, object,
/// relation), node ids in first-mention order. Flags MetaphorTerm on every
/// node appearing as the source of a MetaphorOf edge.
ConceptGraph build_graph(const std::vector<Assertion>& assertions);

}  // namespace ontoscope
