#include "ircsna/connectivity.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "ircsna/error.hpp"

namespace ircsna {

namespace {

using NodeList = std::vector<NodeId>;

bool size_then_lex(const NodeList& a, const NodeList& b) {
  if (a.size() != b.size()) return a.size() > b.size();
  return a < b;
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

  std::size_t find(std::size_t v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

BlockReport articulation_points_and_blocks(const UndirectedView& u) {
  const std::size_t n = u.node_count();
  constexpr auto unvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> disc(n, unvisited);
  std::vector<std::size_t> low(n, 0);
  std::vector<char> is_cut(n, 0);
  std::vector<std::pair<NodeId, NodeId>> edge_stack;
  BlockReport report;

  struct Frame {
    NodeId node;
    NodeId parent;
    std::size_t next;
    std::size_t children;
  };
  std::vector<Frame> stack;
  std::size_t counter = 0;

  const auto close_block = [&](NodeId v, NodeId w) {
    NodeList block;
    while (!edge_stack.empty()) {
      const auto [x, y] = edge_stack.back();
      edge_stack.pop_back();
      block.push_back(x);
      block.push_back(y);
      if (x == v && y == w) break;
    }
    std::sort(block.begin(), block.end());
    block.erase(std::unique(block.begin(), block.end()), block.end());
    report.blocks.push_back(std::move(block));
  };

  for (NodeId root = 0; root < n; ++root) {
    if (disc[root] != unvisited) continue;
    disc[root] = low[root] = counter++;
    if (u.degree(root) == 0) {
      report.blocks.push_back({root});
      continue;
    }
    stack.push_back({root, root, 0, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      const NodeId v = f.node;
      const auto nbrs = u.neighbors(v);
      if (f.next < nbrs.size()) {
        const NodeId w = nbrs[f.next++].node;
        if (disc[w] == unvisited) {
          ++f.children;
          edge_stack.emplace_back(v, w);
          disc[w] = low[w] = counter++;
          stack.push_back({w, v, 0, 0});
        } else if (w != f.parent && disc[w] < disc[v]) {
          edge_stack.emplace_back(v, w);
          low[v] = std::min(low[v], disc[w]);
        }
        continue;
      }
      const std::size_t children = f.children;
      stack.pop_back();
      if (stack.empty()) {
        if (children >= 2) is_cut[v] = 1;
        continue;
      }
      const NodeId parent = stack.back().node;
      low[parent] = std::min(low[parent], low[v]);
      if (low[v] >= disc[parent]) {
        if (parent != root) is_cut[parent] = 1;
        close_block(parent, v);
      }
    }
  }

  for (NodeId v = 0; v < n; ++v) {
    if (is_cut[v]) report.cutpoints.push_back(v);
  }
  std::sort(report.blocks.begin(), report.blocks.end(), size_then_lex);
  for (const auto& b : report.blocks) report.largest_block_size = std::max(report.largest_block_size, b.size());
  return report;
}

Capacity edge_connectivity(const UndirectedView& u, NodeId a, NodeId b, CapacityMode mode) {
  if (a >= u.node_count() || b >= u.node_count()) throw InvalidArgument("node id out of range");
  if (a == b) throw InvalidArgument("edge connectivity needs two distinct nodes");
  MaxFlow flow(u, mode);
  return flow.solve(a, b);
}

GomoryHuTree::GomoryHuTree(std::vector<NodeId> parent, std::vector<Capacity> capacity)
    : parent_(std::move(parent)), capacity_(std::move(capacity)), depth_(parent_.size(), 0) {
  if (capacity_.size() != parent_.size()) throw InvalidArgument("tree parent/capacity size mismatch");
  constexpr auto unknown = static_cast<std::size_t>(-1);
  std::fill(depth_.begin(), depth_.end(), unknown);
  std::vector<NodeId> chain;
  for (NodeId v = 0; v < parent_.size(); ++v) {
    NodeId x = v;
    chain.clear();
    while (depth_[x] == unknown && parent_[x] != kRoot) {
      chain.push_back(x);
      x = parent_[x];
      if (chain.size() > parent_.size()) throw InvalidArgument("flow tree contains a cycle");
    }
    if (depth_[x] == unknown) depth_[x] = 0;
    std::size_t d = depth_[x];
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) depth_[*it] = ++d;
  }
}

std::vector<TreeEdge> GomoryHuTree::edges() const {
  std::vector<TreeEdge> result;
  for (NodeId v = 0; v < parent_.size(); ++v) {
    if (parent_[v] != kRoot) result.push_back(TreeEdge{v, parent_[v], capacity_[v]});
  }
  return result;
}

Capacity GomoryHuTree::min_cut(NodeId a, NodeId b) const {
  if (a >= node_count() || b >= node_count()) throw InvalidArgument("node id out of range");
  if (a == b) throw InvalidArgument("min cut needs two distinct nodes");
  Capacity best = std::numeric_limits<Capacity>::max();
  while (a != b) {
    if (depth_[a] < depth_[b]) std::swap(a, b);
    if (parent_[a] == kRoot) return 0;  // different trees
    best = std::min(best, capacity_[a]);
    a = parent_[a];
  }
  return best;
}

GomoryHuTree gomory_hu(const UndirectedView& u, CapacityMode mode) {
  const std::size_t n = u.node_count();
  std::size_t component_count = 0;
  const auto component = connected_components(u, &component_count);
  std::vector<NodeId> root(component_count, GomoryHuTree::kRoot);
  for (NodeId v = 0; v < n; ++v) {
    if (root[component[v]] == GomoryHuTree::kRoot) root[component[v]] = v;
  }

  std::vector<NodeId> parent(n);
  std::vector<Capacity> capacity(n, 0);
  for (NodeId v = 0; v < n; ++v) {
    parent[v] = root[component[v]] == v ? GomoryHuTree::kRoot : root[component[v]];
  }

  MaxFlow flow(u, mode);
  for (NodeId s = 0; s < n; ++s) {
    if (parent[s] == GomoryHuTree::kRoot) continue;
    const NodeId t = parent[s];
    capacity[s] = flow.solve(s, t);
    const auto side = flow.source_side();
    for (NodeId i = s + 1; i < n; ++i) {
      if (side[i] && parent[i] == t) parent[i] = s;
    }
  }
  return GomoryHuTree(std::move(parent), std::move(capacity));
}

LambdaHierarchy lambda_sets(const GomoryHuTree& tree) {
  auto edges = tree.edges();
  std::erase_if(edges, [](const TreeEdge& e) { return e.capacity <= 0; });
  std::sort(edges.begin(), edges.end(),
            [](const TreeEdge& a, const TreeEdge& b) { return a.capacity > b.capacity; });

  LambdaHierarchy hierarchy;
  DisjointSets sets(tree.node_count());
  std::size_t i = 0;
  while (i < edges.size()) {
    const Capacity level = edges[i].capacity;
    for (; i < edges.size() && edges[i].capacity == level; ++i) sets.unite(edges[i].child, edges[i].parent);
    std::map<std::size_t, NodeList> groups;
    for (NodeId v = 0; v < tree.node_count(); ++v) groups[sets.find(v)].push_back(v);
    LambdaLevel out{level, {}};
    for (auto& [rep, members] : groups) {
      if (members.size() >= 2) out.sets.push_back(std::move(members));
    }
    std::sort(out.sets.begin(), out.sets.end(), size_then_lex);
    hierarchy.levels.push_back(std::move(out));
  }
  return hierarchy;
}

LambdaHierarchy lambda_sets(const UndirectedView& u, CapacityMode mode) {
  return lambda_sets(gomory_hu(u, mode));
}

std::vector<RankedLink> top_links(const UndirectedView& u, const GomoryHuTree& weighted_tree, std::size_t k) {
  if (k == 0) throw InvalidArgument("top_links needs k >= 1");
  if (weighted_tree.node_count() != u.node_count()) throw InvalidArgument("flow tree does not match graph");
  std::vector<RankedLink> links;
  links.reserve(u.edge_count());
  for (const auto& e : u.edges()) {
    links.push_back(RankedLink{e.low, e.high, e.weight, weighted_tree.min_cut(e.low, e.high)});
  }
  std::sort(links.begin(), links.end(), [](const RankedLink& x, const RankedLink& y) {
    if (x.score != y.score) return x.score > y.score;
    if (x.weight != y.weight) return x.weight > y.weight;
    return std::pair(x.a, x.b) < std::pair(y.a, y.b);
  });
  if (links.size() > k) links.resize(k);
  return links;
}

std::vector<RankedLink> top_links(const UndirectedView& u, std::size_t k) {
  if (k == 0) throw InvalidArgument("top_links needs k >= 1");
  return top_links(u, gomory_hu(u, CapacityMode::weighted), k);
}

}  // namespace ircsna
