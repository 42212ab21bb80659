#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "ircsna/chatlog.hpp"

namespace ircsna {

using NodeId = std::uint32_t;
using Weight = std::int64_t;

struct Arc {
  NodeId node;
  Weight weight;

  bool operator==(const Arc&) const = default;
};

struct Edge {
  NodeId source;
  NodeId target;
  Weight weight;

  auto operator<=>(const Edge&) const = default;
};

/// Directed weighted graph keyed by canonical nicknames.
///
/// Node ids are dense and assigned in lexicographic nick order, so comparing
/// ids is the same as comparing nicks. At most one edge is stored per ordered
/// pair; adding weight to an existing pair accumulates. Self-loops and
/// non-positive weights are rejected.
class MentionGraph {
 public:
  MentionGraph() = default;

  /// `nicks` need not be sorted; duplicates are rejected.
  explicit MentionGraph(std::vector<std::string> nicks);

  /// Convenience for tests and CSV import: nodes are the union of endpoints
  /// and `extra_nodes`.
  static MentionGraph from_edges(
      const std::vector<std::tuple<std::string, std::string, Weight>>& edges,
      const std::vector<std::string>& extra_nodes = {});

  void add_weight(NodeId source, NodeId target, Weight weight = 1);

  std::size_t node_count() const noexcept { return nicks_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  const std::string& nick(NodeId id) const { return nicks_.at(id); }
  const std::vector<std::string>& nicks() const noexcept { return nicks_; }
  std::optional<NodeId> find(std::string_view nick) const;
  /// Like find() but throws InvalidArgument naming the missing nick.
  NodeId require(std::string_view nick) const;

  /// Sorted by neighbour id.
  std::span<const Arc> out_arcs(NodeId id) const { return out_.at(id); }
  std::span<const Arc> in_arcs(NodeId id) const { return in_.at(id); }

  /// 0 when the edge is absent.
  Weight weight(NodeId source, NodeId target) const;

  /// All edges ordered by (source, target).
  std::vector<Edge> edges() const;
  Weight total_weight() const noexcept { return total_weight_; }

  bool operator==(const MentionGraph&) const = default;

 private:
  std::vector<std::string> nicks_;
  std::vector<std::vector<Arc>> out_;
  std::vector<std::vector<Arc>> in_;
  std::size_t edge_count_ = 0;
  Weight total_weight_ = 0;
};

struct DegreeSummary {
  std::size_t min = 0;
  double mean = 0.0;
  std::size_t max = 0;
};

struct GraphStats {
  std::size_t node_count = 0;
  std::size_t edge_count = 0;
  /// m / (n (n - 1)); 0 when n <= 1.
  double density = 0.0;
  DegreeSummary in_degree;
  DegreeSummary out_degree;
  Weight total_weight = 0;
};

GraphStats stats(const MentionGraph& g);

struct UndirectedEdge {
  NodeId low;
  NodeId high;
  Weight weight;

  auto operator<=>(const UndirectedEdge&) const = default;
};

/// Symmetric view of a graph. Parallel input edges between the same pair are
/// merged by summing weights; self-loops are rejected.
class UndirectedView {
 public:
  UndirectedView() = default;
  UndirectedView(std::size_t node_count, const std::vector<UndirectedEdge>& edges);

  std::size_t node_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  /// Sorted by neighbour id.
  std::span<const Arc> neighbors(NodeId id) const { return adjacency_.at(id); }
  std::size_t degree(NodeId id) const { return adjacency_.at(id).size(); }
  bool adjacent(NodeId a, NodeId b) const;
  Weight weight(NodeId a, NodeId b) const;

  /// Ordered by (low, high) with low < high.
  const std::vector<UndirectedEdge>& edges() const noexcept { return edges_; }

 private:
  std::vector<std::vector<Arc>> adjacency_;
  std::vector<UndirectedEdge> edges_;
};

/// weight(u, v) = w(u -> v) + w(v -> u).
UndirectedView to_undirected(const MentionGraph& g);

/// Keeps only reciprocated pairs; weight is the sum of both directions.
UndirectedView mutual_view(const MentionGraph& g);

/// Connected component index per node, numbered in order of smallest member.
std::vector<std::size_t> connected_components(const UndirectedView& u, std::size_t* count = nullptr);

struct ExtractionOptions {
  /// Roster nicks shorter than this are never matched.
  std::size_t min_nick_length = 1;
  /// Drop roster nicks of at most two characters that are also common short
  /// English words or chat fillers ("a", "ok", "np", ...).
  bool filter_short_words = true;
  bool case_insensitive = true;
  /// Keep roster members without any tie as isolated nodes.
  bool include_isolates = false;
};

/// The built-in short-word list consulted when filter_short_words is set.
const std::set<std::string, std::less<>>& common_short_words();

/// Builds the mention network: for each user message by s, every distinct
/// roster nick appearing in the body as a whole token adds 1 to s -> nick.
/// Self mentions are ignored. Throws Error("no participants") for an empty
/// roster.
MentionGraph extract_network(const ChatCorpus& corpus, const Roster& roster,
                             const ExtractionOptions& options = {});

}  // namespace ircsna
