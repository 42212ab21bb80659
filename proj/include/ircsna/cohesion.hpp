#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "ircsna/mention_graph.hpp"

namespace ircsna {

struct CliqueReport {
  /// Each clique sorted ascending; list ordered by size descending, then
  /// lexicographically by members.
  std::vector<std::vector<NodeId>> cliques;
  std::size_t min_size = 3;
  /// Largest maximal clique in the graph, whether or not it passed min_size.
  std::size_t max_clique_size = 0;
};

/// All maximal cliques with at least `min_size` members, enumerated by
/// Bron-Kerbosch with Tomita pivoting over a degeneracy ordering.
CliqueReport maximal_cliques(const UndirectedView& u, std::size_t min_size = 3);

class CoMembershipMatrix {
 public:
  struct Pair {
    NodeId a;
    NodeId b;
    std::size_t count;

    bool operator==(const Pair&) const = default;
  };

  CoMembershipMatrix() = default;
  explicit CoMembershipMatrix(std::size_t node_count) : node_count_(node_count) {}

  std::size_t node_count() const noexcept { return node_count_; }
  /// Number of cliques holding both nodes; count(v, v) is v's clique count.
  std::size_t count(NodeId a, NodeId b) const;
  void add(NodeId a, NodeId b);

  /// Off-diagonal pairs by count descending, then (a, b) ascending.
  std::vector<Pair> top_pairs(std::size_t k) const;
  std::optional<Pair> max_pair() const;

 private:
  std::size_t node_count_ = 0;
  std::map<std::pair<NodeId, NodeId>, std::size_t> counts_;
};

/// Tallies pairwise clique co-membership. Throws InvalidArgument when a clique
/// mentions a node id >= node_count.
CoMembershipMatrix clique_comembership(const CliqueReport& report, std::size_t node_count);

/// participation[q][v] = share of clique q's members other than v that v is
/// adjacent to. Members score 1.
std::vector<std::vector<double>> clique_participation(const CliqueReport& report, const UndirectedView& u);

struct EgoNetwork {
  NodeId ego = 0;
  std::vector<NodeId> alters;  // in- and out-neighbours, sorted
  std::vector<Edge> edges;     // directed edges induced on ego + alters
  std::size_t size = 0;        // 1 + alters
  double density = 0.0;        // edges / (size (size - 1)), 0 for size 1
};

EgoNetwork ego_network(const MentionGraph& g, NodeId ego);
/// Throws InvalidArgument naming an unknown ego.
EgoNetwork ego_network(const MentionGraph& g, std::string_view ego);

}  // namespace ircsna
