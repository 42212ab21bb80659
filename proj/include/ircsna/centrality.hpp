#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ircsna/mention_graph.hpp"

namespace ircsna {

struct HitsOptions {
  double tolerance = 1e-10;
  int max_iterations = 1000;
  /// Use edge weights instead of the 0/1 adjacency matrix.
  bool weighted = false;
};

struct HitsScores {
  std::vector<double> authority;
  std::vector<double> hub;
  int iterations_used = 0;
  bool converged = false;
};

/// Kleinberg hubs and authorities by mutual reinforcement: each round sets
/// authority = A^T hub, then hub = A authority, normalising both to unit
/// Euclidean length. Starts from the uniform vector and stops once the
/// largest entry change drops below the tolerance. An edgeless graph is a
/// fixed point with all scores zero.
HitsScores hits(const MentionGraph& g, const HitsOptions& options = {});

struct DegreeCentrality {
  std::size_t indegree = 0;
  std::size_t outdegree = 0;
  Weight weighted_in = 0;
  Weight weighted_out = 0;

  bool operator==(const DegreeCentrality&) const = default;
};

std::vector<DegreeCentrality> degree_centrality(const MentionGraph& g);

/// Node ids ordered by descending score; ties go to the smaller nick.
std::vector<NodeId> rank_descending(std::span<const double> scores);

}  // namespace ircsna
