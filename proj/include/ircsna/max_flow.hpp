#pragma once

#include <cstdint>
#include <vector>

#include "ircsna/mention_graph.hpp"

namespace ircsna {

using Capacity = std::int64_t;

enum class CapacityMode { unit, weighted };

/// Dinic max-flow on an undirected capacitated graph. Each undirected edge is
/// a pair of opposing arcs sharing one capacity. The network is built once
/// and may be solved for many terminal pairs; integer capacities give exact
/// integer flows.
class MaxFlow {
 public:
  MaxFlow(const UndirectedView& u, CapacityMode mode);

  /// Maximum s-t flow value. Throws InvalidArgument when source == sink.
  Capacity solve(NodeId source, NodeId sink);

  /// Nodes reachable from the source in the residual graph of the last
  /// solve(): the source side of a minimum cut.
  std::vector<char> source_side() const;

 private:
  bool build_levels(NodeId source, NodeId sink);
  Capacity push(NodeId v, NodeId sink, Capacity limit);

  std::vector<std::size_t> first_arc_;  // CSR offsets, size n + 1
  std::vector<NodeId> head_;
  std::vector<Capacity> capacity_;
  std::vector<Capacity> residual_;
  std::vector<std::size_t> partner_;
  std::vector<int> level_;
  std::vector<std::size_t> cursor_;
  NodeId last_source_ = 0;
};

}  // namespace ircsna
