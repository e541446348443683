#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "ontoscope/graph.hpp"

namespace ontoscope::testing {

using CycleSig = std::pair<std::vector<NodeId>, std::vector<Relation>>;

// Exhaustive elementary-cycle enumeration by combinatorial construction:
// every node subset, every cyclic order anchored at the subset's minimum,
// every combination of parallel edges along the hops. Deliberately takes a
// different route than the library's SCC + DFS so the two can check each
// other.
inline std::vector<CycleSig> enumerate_cycles_brute(
    std::size_t node_count, const std::vector<RelationEdge>& edges,
    std::size_t max_len) {
  std::map<std::pair<NodeId, NodeId>, std::vector<Relation>> candidates;
  for (const RelationEdge& edge : edges) {
    if (relation_in_cycle_filter(edge.relation)) {
      candidates[{edge.from, edge.to}].push_back(edge.relation);
    }
  }

  std::vector<CycleSig> result;

  auto expand = [&](const std::vector<NodeId>& sequence) {
    std::vector<const std::vector<Relation>*> hop_choices;
    for (std::size_t i = 0; i < sequence.size(); ++i) {
      NodeId from = sequence[i];
      NodeId to = sequence[(i + 1) % sequence.size()];
      auto it = candidates.find({from, to});
      if (it == candidates.end()) {
        return;
      }
      hop_choices.push_back(&it->second);
    }
    std::vector<Relation> chosen(sequence.size(), Relation::DefinedThrough);
    auto emit = [&](auto&& self, std::size_t hop) -> void {
      if (hop == hop_choices.size()) {
        result.emplace_back(sequence, chosen);
        return;
      }
      for (Relation relation : *hop_choices[hop]) {
        chosen[hop] = relation;
        self(self, hop + 1);
      }
    };
    emit(emit, 0);
  };

  for (std::size_t mask = 1; mask < (std::size_t{1} << node_count); ++mask) {
    std::vector<NodeId> members;
    for (std::size_t bit = 0; bit < node_count; ++bit) {
      if ((mask >> bit) & 1U) {
        members.push_back(static_cast<NodeId>(bit));
      }
    }
    if (members.size() > max_len) {
      continue;
    }
    NodeId anchor = members.front();
    std::vector<NodeId> rest(members.begin() + 1, members.end());
    std::sort(rest.begin(), rest.end());
    do {
      std::vector<NodeId> sequence;
      sequence.reserve(members.size());
      sequence.push_back(anchor);
      sequence.insert(sequence.end(), rest.begin(), rest.end());
      expand(sequence);
    } while (std::next_permutation(rest.begin(), rest.end()));
  }

  std::sort(result.begin(), result.end(),
            [](const CycleSig& a, const CycleSig& b) {
              if (a.first.size() != b.first.size()) {
                return a.first.size() < b.first.size();
              }
              return a < b;
            });
  return result;
}

}  // namespace ontoscope::testing
