#include "ircsna/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ircsna/error.hpp"

namespace ircsna {

namespace {

// Returns false when the vector is all zero.
bool normalize(std::vector<double>& v) {
  double sum = 0.0;
  for (const double x : v) sum += x * x;
  if (sum == 0.0) return false;
  const double norm = std::sqrt(sum);
  for (double& x : v) x /= norm;
  return true;
}

double max_abs_change(const std::vector<double>& a, const std::vector<double>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace

HitsScores hits(const MentionGraph& g, const HitsOptions& options) {
  if (!(options.tolerance > 0.0)) throw InvalidArgument("hits tolerance must be positive");
  if (options.max_iterations < 1) throw InvalidArgument("hits max_iterations must be at least 1");

  const std::size_t n = g.node_count();
  HitsScores result;
  result.authority.assign(n, 0.0);
  result.hub.assign(n, 0.0);
  if (g.edge_count() == 0) {
    result.converged = true;
    return result;
  }

  const auto w = [&](const Arc& arc) { return options.weighted ? static_cast<double>(arc.weight) : 1.0; };
  const double start = 1.0 / std::sqrt(static_cast<double>(n));
  std::vector<double> authority(n, start);
  std::vector<double> hub(n, start);
  std::vector<double> next_authority(n);
  std::vector<double> next_hub(n);

  for (int iter = 1; iter <= options.max_iterations; ++iter) {
    for (NodeId v = 0; v < n; ++v) {
      double sum = 0.0;
      for (const auto& arc : g.in_arcs(v)) sum += w(arc) * hub[arc.node];
      next_authority[v] = sum;
    }
    normalize(next_authority);
    for (NodeId v = 0; v < n; ++v) {
      double sum = 0.0;
      for (const auto& arc : g.out_arcs(v)) sum += w(arc) * next_authority[arc.node];
      next_hub[v] = sum;
    }
    normalize(next_hub);

    const double change = std::max(max_abs_change(authority, next_authority), max_abs_change(hub, next_hub));
    authority.swap(next_authority);
    hub.swap(next_hub);
    result.iterations_used = iter;
    if (change < options.tolerance) {
      result.converged = true;
      break;
    }
  }
  result.authority = std::move(authority);
  result.hub = std::move(hub);
  return result;
}

std::vector<DegreeCentrality> degree_centrality(const MentionGraph& g) {
  std::vector<DegreeCentrality> result(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) {
    auto& d = result[v];
    d.indegree = g.in_arcs(v).size();
    d.outdegree = g.out_arcs(v).size();
    for (const auto& arc : g.in_arcs(v)) d.weighted_in += arc.weight;
    for (const auto& arc : g.out_arcs(v)) d.weighted_out += arc.weight;
  }
  return result;
}

std::vector<NodeId> rank_descending(std::span<const double> scores) {
  std::vector<NodeId> order(scores.size());
  std::iota(order.begin(), order.end(), NodeId{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](NodeId a, NodeId b) { return scores[a] > scores[b]; });
  return order;
}

}  // namespace ircsna
