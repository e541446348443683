#include "ontoscope/detection.hpp"

#include <algorithm>

#include "ontoscope/error.hpp"

namespace ontoscope {

namespace {

// Iterative Tarjan over the filtered adjacency. Returns component id per node.
std::vector<int> strongly_connected_components(
    std::size_t node_count, const std::vector<std::vector<std::size_t>>& adjacency,
    const std::vector<RelationEdge>& edges) {
  std::vector<int> component(node_count, -1);
  std::vector<int> index(node_count, -1);
  std::vector<int> lowlink(node_count, 0);
  std::vector<bool> on_stack(node_count, false);
  std::vector<NodeId> stack;
  int next_index = 0;
  int next_component = 0;

  struct Frame {
    NodeId node;
    std::size_t edge_pos;
  };

  for (NodeId root = 0; root < node_count; ++root) {
    if (index[root] != -1) {
      continue;
    }
    std::vector<Frame> frames;
    frames.push_back(Frame{root, 0});
    index[root] = lowlink[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;

    while (!frames.empty()) {
      Frame& frame = frames.back();
      NodeId u = frame.node;
      if (frame.edge_pos < adjacency[u].size()) {
        NodeId v = edges[adjacency[u][frame.edge_pos]].to;
        ++frame.edge_pos;
        if (index[v] == -1) {
          index[v] = lowlink[v] = next_index++;
          stack.push_back(v);
          on_stack[v] = true;
          frames.push_back(Frame{v, 0});
        } else if (on_stack[v]) {
          lowlink[u] = std::min(lowlink[u], index[v]);
        }
        continue;
      }
      if (lowlink[u] == index[u]) {
        while (true) {
          NodeId w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          component[w] = next_component;
          if (w == u) {
            break;
          }
        }
        ++next_component;
      }
      frames.pop_back();
      if (!frames.empty()) {
        NodeId parent = frames.back().node;
        lowlink[parent] = std::min(lowlink[parent], lowlink[u]);
      }
    }
  }
  return component;
}

struct Enumerator {
  const std::vector<RelationEdge>& edges;
  const std::vector<std::vector<std::size_t>>& adjacency;
  const std::vector<int>& component;
  std::size_t max_len;
  std::size_t budget;
  std::vector<Cycle>& out;

  NodeId root = 0;
  std::vector<NodeId> path_nodes;
  std::vector<std::size_t> path_edges;
  std::vector<bool> on_path;

  void record(std::size_t closing_edge) {
    if (out.size() >= budget) {
      throw Error(ErrorCode::CycleBudgetExceeded,
                  "cycle enumeration exceeded the budget of " +
                      std::to_string(budget) + " cycles");
    }
    Cycle cycle;
    cycle.node_sequence = path_nodes;
    cycle.edge_sequence.reserve(path_edges.size() + 1);
    for (std::size_t e : path_edges) {
      cycle.edge_sequence.push_back(edges[e]);
    }
    cycle.edge_sequence.push_back(edges[closing_edge]);
    out.push_back(std::move(cycle));
  }

  // Rooted DFS restricted to the root's component and to ids > root, so
  // every cycle is found exactly once, anchored at its smallest node.
  void visit(NodeId u) {
    for (std::size_t e : adjacency[u]) {
      NodeId v = edges[e].to;
      if (v == root) {
        record(e);
        continue;
      }
      if (v <= root || component[v] != component[root] || on_path[v]) {
        continue;
      }
      if (path_nodes.size() >= max_len) {
        continue;
      }
      path_nodes.push_back(v);
      path_edges.push_back(e);
      on_path[v] = true;
      visit(v);
      on_path[v] = false;
      path_edges.pop_back();
      path_nodes.pop_back();
    }
  }
};

}  // namespace

std::pair<std::vector<NodeId>, std::vector<Relation>> cycle_key(const Cycle& cycle) {
  std::vector<Relation> relations;
  relations.reserve(cycle.edge_sequence.size());
  for (const RelationEdge& edge : cycle.edge_sequence) {
    relations.push_back(edge.relation);
  }
  return {cycle.node_sequence, relations};
}

std::string recursion_class_name(const RecursionClass& cls) {
  switch (cls.kind) {
    case RecursionClass::Kind::SelfReference: return "SelfReference";
    case RecursionClass::Kind::MutualDefinition: return "MutualDefinition";
    case RecursionClass::Kind::MetaphorLoop: return "MetaphorLoop";
    case RecursionClass::Kind::DefinitionalLoop:
      return "DefinitionalLoop(" + std::to_string(cls.length) + ")";
  }
  return "Unknown";
}

std::vector<Cycle> find_cycles(const ConceptGraph& graph, std::size_t max_len,
                               std::size_t cycle_budget) {
  if (max_len < 1) {
    throw Error(ErrorCode::ConfigError, "max cycle length must be >= 1");
  }
  const std::vector<RelationEdge>& edges = graph.edges();
  std::vector<std::vector<std::size_t>> adjacency(graph.node_count());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (relation_in_cycle_filter(edges[i].relation)) {
      adjacency[edges[i].from].push_back(i);
    }
  }

  std::vector<int> component =
      strongly_connected_components(graph.node_count(), adjacency, edges);

  std::vector<Cycle> cycles;
  Enumerator enumerator{edges,        adjacency, component, max_len,
                        cycle_budget, cycles,    0,         {},
                        {},           {}};
  enumerator.on_path.assign(graph.node_count(), false);
  for (NodeId root = 0; root < graph.node_count(); ++root) {
    enumerator.root = root;
    enumerator.path_nodes = {root};
    enumerator.path_edges.clear();
    enumerator.on_path[root] = true;
    enumerator.visit(root);
    enumerator.on_path[root] = false;
  }

  std::sort(cycles.begin(), cycles.end(), [](const Cycle& a, const Cycle& b) {
    if (a.length() != b.length()) {
      return a.length() < b.length();
    }
    return cycle_key(a) < cycle_key(b);
  });
  return cycles;
}

RecursionClass classify(const Cycle& cycle, const ConceptGraph& graph) {
  bool metaphor = std::any_of(
      cycle.node_sequence.begin(), cycle.node_sequence.end(),
      [&](NodeId id) { return graph.node(id).flags.metaphor_term; });
  metaphor = metaphor || std::any_of(cycle.edge_sequence.begin(),
                                     cycle.edge_sequence.end(),
                                     [](const RelationEdge& edge) {
                                       return edge.relation == Relation::MetaphorOf;
                                     });
  RecursionClass cls;
  cls.length = cycle.length();
  if (metaphor) {
    cls.kind = RecursionClass::Kind::MetaphorLoop;
  } else if (cycle.length() == 1) {
    cls.kind = RecursionClass::Kind::SelfReference;
  } else if (cycle.length() == 2) {
    cls.kind = RecursionClass::Kind::MutualDefinition;
  } else {
    cls.kind = RecursionClass::Kind::DefinitionalLoop;
  }
  return cls;
}

}  // namespace ontoscope
