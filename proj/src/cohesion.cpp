#include "ircsna/cohesion.hpp"

#include <algorithm>
#include <iterator>

#include "ircsna/error.hpp"

namespace ircsna {

namespace {

using NodeList = std::vector<NodeId>;

NodeList neighbor_ids(const UndirectedView& u, NodeId v) {
  NodeList ids;
  ids.reserve(u.degree(v));
  for (const auto& arc : u.neighbors(v)) ids.push_back(arc.node);
  return ids;
}

NodeList intersect(const NodeList& a, const NodeList& b) {
  NodeList out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::size_t intersection_size(const NodeList& a, const NodeList& b) {
  std::size_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) ++i;
    else if (*j < *i) ++j;
    else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

// Matula-Beck smallest-last ordering.
NodeList degeneracy_order(const UndirectedView& u) {
  const std::size_t n = u.node_count();
  std::vector<std::size_t> degree(n);
  std::size_t max_degree = 0;
  for (NodeId v = 0; v < n; ++v) {
    degree[v] = u.degree(v);
    max_degree = std::max(max_degree, degree[v]);
  }
  std::vector<NodeList> buckets(max_degree + 1);
  for (NodeId v = n; v-- > 0;) buckets[degree[v]].push_back(v);
  std::vector<char> removed(n, 0);
  NodeList order;
  order.reserve(n);
  std::size_t d = 0;
  while (order.size() < n) {
    d = d > 0 ? d - 1 : 0;
    while (buckets[d].empty()) ++d;
    const NodeId v = buckets[d].back();
    buckets[d].pop_back();
    if (removed[v] || degree[v] != d) continue;
    removed[v] = 1;
    order.push_back(v);
    for (const auto& arc : u.neighbors(v)) {
      if (!removed[arc.node]) {
        --degree[arc.node];
        buckets[degree[arc.node]].push_back(arc.node);
      }
    }
  }
  return order;
}

class CliqueEnumerator {
 public:
  CliqueEnumerator(const UndirectedView& u, std::size_t min_size) : min_size_(min_size) {
    adjacency_.reserve(u.node_count());
    for (NodeId v = 0; v < u.node_count(); ++v) adjacency_.push_back(neighbor_ids(u, v));
  }

  void run(const UndirectedView& u) {
    const NodeList order = degeneracy_order(u);
    std::vector<std::size_t> position(u.node_count());
    for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;
    for (const NodeId v : order) {
      NodeList later;
      NodeList earlier;
      for (const NodeId w : adjacency_[v]) (position[w] > position[v] ? later : earlier).push_back(w);
      NodeList clique{v};
      expand(clique, std::move(later), std::move(earlier));
    }
  }

  std::vector<NodeList> take() { return std::move(found_); }
  std::size_t largest() const noexcept { return largest_; }

 private:
  void expand(NodeList& clique, NodeList candidates, NodeList excluded) {
    if (candidates.empty()) {
      if (excluded.empty()) report(clique);
      return;
    }
    // Pivot maximising |candidates ∩ N(pivot)|; smallest id on ties.
    NodeId pivot = candidates.front();
    std::size_t best = 0;
    bool first = true;
    for (const auto* pool : {&candidates, &excluded}) {
      for (const NodeId w : *pool) {
        const std::size_t score = intersection_size(candidates, adjacency_[w]);
        if (first || score > best || (score == best && w < pivot)) {
          pivot = w;
          best = score;
          first = false;
        }
      }
    }
    NodeList branch;
    std::set_difference(candidates.begin(), candidates.end(), adjacency_[pivot].begin(),
                        adjacency_[pivot].end(), std::back_inserter(branch));
    for (const NodeId v : branch) {
      clique.push_back(v);
      expand(clique, intersect(candidates, adjacency_[v]), intersect(excluded, adjacency_[v]));
      clique.pop_back();
      candidates.erase(std::lower_bound(candidates.begin(), candidates.end(), v));
      excluded.insert(std::lower_bound(excluded.begin(), excluded.end(), v), v);
    }
  }

  void report(const NodeList& clique) {
    largest_ = std::max(largest_, clique.size());
    if (clique.size() < min_size_) return;
    NodeList sorted = clique;
    std::sort(sorted.begin(), sorted.end());
    found_.push_back(std::move(sorted));
  }

  std::size_t min_size_;
  std::vector<NodeList> adjacency_;
  std::vector<NodeList> found_;
  std::size_t largest_ = 0;
};

}  // namespace

CliqueReport maximal_cliques(const UndirectedView& u, std::size_t min_size) {
  if (min_size < 1) throw InvalidArgument("clique min_size must be at least 1");
  CliqueEnumerator enumerator(u, min_size);
  enumerator.run(u);
  CliqueReport report;
  report.min_size = min_size;
  report.max_clique_size = enumerator.largest();
  report.cliques = enumerator.take();
  std::sort(report.cliques.begin(), report.cliques.end(), [](const NodeList& a, const NodeList& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  return report;
}

std::size_t CoMembershipMatrix::count(NodeId a, NodeId b) const {
  const auto it = counts_.find({std::min(a, b), std::max(a, b)});
  return it == counts_.end() ? 0 : it->second;
}

void CoMembershipMatrix::add(NodeId a, NodeId b) { ++counts_[{std::min(a, b), std::max(a, b)}]; }

std::vector<CoMembershipMatrix::Pair> CoMembershipMatrix::top_pairs(std::size_t k) const {
  std::vector<Pair> pairs;
  for (const auto& [key, c] : counts_) {
    if (key.first != key.second) pairs.push_back(Pair{key.first, key.second, c});
  }
  std::stable_sort(pairs.begin(), pairs.end(), [](const Pair& x, const Pair& y) { return x.count > y.count; });
  if (pairs.size() > k) pairs.resize(k);
  return pairs;
}

std::optional<CoMembershipMatrix::Pair> CoMembershipMatrix::max_pair() const {
  auto top = top_pairs(1);
  if (top.empty()) return std::nullopt;
  return top.front();
}

CoMembershipMatrix clique_comembership(const CliqueReport& report, std::size_t node_count) {
  CoMembershipMatrix matrix(node_count);
  for (const auto& clique : report.cliques) {
    for (std::size_t i = 0; i < clique.size(); ++i) {
      if (clique[i] >= node_count) {
        throw InvalidArgument("clique member " + std::to_string(clique[i]) + " outside the node set");
      }
      for (std::size_t j = i; j < clique.size(); ++j) matrix.add(clique[i], clique[j]);
    }
  }
  return matrix;
}

std::vector<std::vector<double>> clique_participation(const CliqueReport& report, const UndirectedView& u) {
  std::vector<std::vector<double>> scores;
  scores.reserve(report.cliques.size());
  for (const auto& clique : report.cliques) {
    std::vector<double> row(u.node_count(), 0.0);
    for (NodeId v = 0; v < u.node_count(); ++v) {
      const bool member = std::binary_search(clique.begin(), clique.end(), v);
      const std::size_t others = clique.size() - (member ? 1 : 0);
      if (others == 0) {
        row[v] = member ? 1.0 : 0.0;
        continue;
      }
      std::size_t adjacent = 0;
      for (const NodeId q : clique) {
        if (q != v && u.adjacent(v, q)) ++adjacent;
      }
      row[v] = static_cast<double>(adjacent) / static_cast<double>(others);
    }
    scores.push_back(std::move(row));
  }
  return scores;
}

EgoNetwork ego_network(const MentionGraph& g, NodeId ego) {
  if (ego >= g.node_count()) throw InvalidArgument("unknown ego id " + std::to_string(ego));
  EgoNetwork net;
  net.ego = ego;
  for (const auto& arc : g.out_arcs(ego)) net.alters.push_back(arc.node);
  for (const auto& arc : g.in_arcs(ego)) net.alters.push_back(arc.node);
  std::sort(net.alters.begin(), net.alters.end());
  net.alters.erase(std::unique(net.alters.begin(), net.alters.end()), net.alters.end());

  NodeList members = net.alters;
  members.insert(std::lower_bound(members.begin(), members.end(), ego), ego);
  for (const NodeId v : members) {
    for (const auto& arc : g.out_arcs(v)) {
      if (std::binary_search(members.begin(), members.end(), arc.node)) {
        net.edges.push_back(Edge{v, arc.node, arc.weight});
      }
    }
  }
  net.size = members.size();
  if (net.size > 1) {
    const double k = static_cast<double>(net.size);
    net.density = static_cast<double>(net.edges.size()) / (k * (k - 1.0));
  }
  return net;
}

EgoNetwork ego_network(const MentionGraph& g, std::string_view ego) {
  const auto id = g.find(ego);
  if (!id) throw InvalidArgument("unknown ego '" + std::string(ego) + "'");
  return ego_network(g, *id);
}

}  // namespace ircsna
