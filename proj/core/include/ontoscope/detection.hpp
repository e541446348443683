#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ontoscope/graph.hpp"

namespace ontoscope {

inline constexpr std::size_t kDefaultMaxCycleLen = 8;
inline constexpr std::size_t kDefaultCycleBudget = 10'000;

/// An elementary cycle in canonical rotation: node_sequence starts at the
/// smallest node id and implicitly closes back to it; edge_sequence[i] runs
/// node_sequence[i] -> node_sequence[(i+1) % length].
struct Cycle {
  std::vector<NodeId> node_sequence;
  std::vector<RelationEdge> edge_sequence;

  std::size_t length() const { return node_sequence.size(); }
};

/// Comparable identity of a cycle: canonical node sequence plus the relation
/// along each hop.
std::pair<std::vector<NodeId>, std::vector<Relation>> cycle_key(const Cycle& cycle);

struct RecursionClass {
  enum class Kind { SelfReference, MutualDefinition, DefinitionalLoop, MetaphorLoop };

  Kind kind = Kind::DefinitionalLoop;
  std::size_t length = 0;
};

/// "SelfReference", "MutualDefinition", "MetaphorLoop", "DefinitionalLoop(4)".
std::string recursion_class_name(const RecursionClass& cls);

/// Every elementary cycle of length <= max_len over DefinedThrough/DependsOn/
/// MetaphorOf edges, canonical rotation, ordered by (length, node sequence,
/// relation sequence). SCC decomposition first, then bounded enumeration
/// inside each nontrivial component. Throws Error(CycleBudgetExceeded) when
/// more than cycle_budget cycles would be returned.
std::vector<Cycle> find_cycles(const ConceptGraph& graph,
                               std::size_t max_len = kDefaultMaxCycleLen,
                               std::size_t cycle_budget = kDefaultCycleBudget);

/// MetaphorLoop wins over the length-based kinds; then SelfReference at
/// length 1, MutualDefinition at length 2, DefinitionalLoop(n) otherwise.
RecursionClass classify(const Cycle& cycle, const ConceptGraph& graph);

}  // namespace ontoscope
