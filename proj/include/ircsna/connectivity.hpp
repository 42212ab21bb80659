#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "ircsna/max_flow.hpp"
#include "ircsna/mention_graph.hpp"

namespace ircsna {

struct BlockReport {
  std::vector<NodeId> cutpoints;              // sorted
  std::vector<std::vector<NodeId>> blocks;    // members sorted; size desc, then lexicographic
  std::size_t largest_block_size = 0;
};

/// Articulation points and biconnected components from one depth-first
/// search with low points. Isolated nodes form singleton blocks.
BlockReport articulation_points_and_blocks(const UndirectedView& u);

/// lambda(a, b): maximum flow between a and b, with unit or weighted
/// capacities. 0 for a disconnected pair; throws InvalidArgument if a == b.
Capacity edge_connectivity(const UndirectedView& u, NodeId a, NodeId b, CapacityMode mode);

struct TreeEdge {
  NodeId child;
  NodeId parent;
  Capacity capacity;

  bool operator==(const TreeEdge&) const = default;
};

/// Equivalent flow tree: for any two nodes of one connected component the
/// smallest capacity on their tree path equals their edge connectivity.
/// Disconnected graphs give one tree per component.
class GomoryHuTree {
 public:
  static constexpr NodeId kRoot = std::numeric_limits<NodeId>::max();

  GomoryHuTree() = default;
  GomoryHuTree(std::vector<NodeId> parent, std::vector<Capacity> capacity);

  std::size_t node_count() const noexcept { return parent_.size(); }
  NodeId parent(NodeId v) const { return parent_.at(v); }
  Capacity capacity_to_parent(NodeId v) const { return capacity_.at(v); }
  std::vector<TreeEdge> edges() const;

  /// Minimum capacity on the tree path; 0 across components.
  Capacity min_cut(NodeId a, NodeId b) const;

 private:
  std::vector<NodeId> parent_;
  std::vector<Capacity> capacity_;
  std::vector<std::size_t> depth_;
};

/// Gusfield's construction: n - c max-flow computations for c components,
/// no node contraction.
GomoryHuTree gomory_hu(const UndirectedView& u, CapacityMode mode);

struct LambdaLevel {
  Capacity lambda;
  std::vector<std::vector<NodeId>> sets;  // members sorted; size desc, then lexicographic
};

struct LambdaHierarchy {
  std::vector<LambdaLevel> levels;  // lambda descending
};

/// For every positive connectivity value k present in the flow tree, the
/// non-singleton node sets whose members are pairwise at least k-connected.
/// The result is laminar and every set is a lambda set.
LambdaHierarchy lambda_sets(const GomoryHuTree& tree);
LambdaHierarchy lambda_sets(const UndirectedView& u, CapacityMode mode = CapacityMode::unit);

struct RankedLink {
  NodeId a;  // a < b
  NodeId b;
  Weight weight;
  Capacity score;

  bool operator==(const RankedLink&) const = default;
};

/// Edges ranked by the weighted edge connectivity of their endpoints, then by
/// weight, then by (a, b). Returns min(k, m) links; throws if k == 0.
std::vector<RankedLink> top_links(const UndirectedView& u, std::size_t k);
/// Same ranking from an already built weighted flow tree.
std::vector<RankedLink> top_links(const UndirectedView& u, const GomoryHuTree& weighted_tree, std::size_t k);

}  // namespace ircsna
