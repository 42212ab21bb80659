#pragma once

#include <array>
#include <cstddef>
#include <string_view>
#include <vector>

#include "ircsna/mention_graph.hpp"

namespace ircsna {

/// Maximal strongly connected components (Tarjan). Members of each component
/// are sorted; components are ordered by smallest member.
std::vector<std::vector<NodeId>> strongly_connected_components(const MentionGraph& g);

/// Largest SCC by size; among equals, the one holding the smallest nick.
/// Empty only for an empty graph.
std::vector<NodeId> core_component(const MentionGraph& g);

enum class BowTieLabel { scc, in, out, tubes, in_tendrils, out_tendrils, others };
inline constexpr std::size_t kBowTieLabelCount = 7;

std::string_view to_string(BowTieLabel label) noexcept;

struct BowTiePartition {
  std::vector<BowTieLabel> label;  // indexed by node id
  std::vector<NodeId> core;        // the SCC the decomposition is taken around

  std::array<std::size_t, kBowTieLabelCount> sizes() const;
};

/// Bow-tie decomposition around core_component(g). Labels are assigned with
/// precedence SCC, IN, OUT, TUBES, INTENDRILS, OUTTENDRILS, OTHERS:
///
///   IN          S reachable from v
///   OUT         v reachable from S
///   TUBES       reachable from IN and reaches OUT
///   INTENDRILS  reachable from IN, cannot reach OUT
///   OUTTENDRILS not reachable from IN, reaches OUT
BowTiePartition bowtie(const MentionGraph& g);

enum class Component { a, b, c, d };
inline constexpr std::size_t kComponentCount = 4;

std::string_view to_string(Component c) noexcept;

struct SkeletonPartition {
  std::vector<Component> label;  // indexed by node id

  std::array<std::size_t, kComponentCount> sizes() const;
  std::vector<NodeId> members(Component c) const;
};

/// Four-way skeleton. A is the core SCC. Of the remaining nodes, C holds pure
/// senders (in 0, out > 0), B pure receivers (out 0, in > 0) and D the rest,
/// including isolates. C and B therefore never have internal links.
SkeletonPartition abcd_skeleton(const MentionGraph& g);

struct LinkMatrix {
  /// counts[from][to], in A, B, C, D order.
  std::array<std::array<Weight, kComponentCount>, kComponentCount> counts{};

  Weight total() const noexcept;
};

/// Counts edges between skeleton components (edge weights summed when
/// `weighted`). Throws InvalidArgument naming the first unlabeled node.
LinkMatrix link_matrix(const MentionGraph& g, const SkeletonPartition& p, bool weighted = false);

/// Percent of nodes per component; all zero for an empty graph.
std::array<double, kComponentCount> composition_percent(const SkeletonPartition& p);

}  // namespace ircsna
