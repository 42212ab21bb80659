#include "ircsna/skeleton.hpp"

#include <algorithm>

#include "ircsna/error.hpp"

namespace ircsna {

namespace {

enum class Direction { forward, backward };

// Marks every node reachable from `sources` (sources included).
std::vector<char> reach(const MentionGraph& g, const std::vector<NodeId>& sources, Direction dir) {
  std::vector<char> seen(g.node_count(), 0);
  std::vector<NodeId> stack;
  for (const NodeId s : sources) {
    if (!seen[s]) {
      seen[s] = 1;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    const auto arcs = dir == Direction::forward ? g.out_arcs(v) : g.in_arcs(v);
    for (const auto& arc : arcs) {
      if (!seen[arc.node]) {
        seen[arc.node] = 1;
        stack.push_back(arc.node);
      }
    }
  }
  return seen;
}

}  // namespace

std::vector<std::vector<NodeId>> strongly_connected_components(const MentionGraph& g) {
  const std::size_t n = g.node_count();
  constexpr auto unvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, unvisited);
  std::vector<std::size_t> low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<NodeId> scc_stack;
  std::vector<std::vector<NodeId>> components;

  struct Frame {
    NodeId node;
    std::size_t next_arc;
  };
  std::vector<Frame> call_stack;
  std::size_t counter = 0;

  for (NodeId root = 0; root < n; ++root) {
    if (index[root] != unvisited) continue;
    call_stack.push_back({root, 0});
    index[root] = low[root] = counter++;
    scc_stack.push_back(root);
    on_stack[root] = 1;

    while (!call_stack.empty()) {
      auto& frame = call_stack.back();
      const NodeId v = frame.node;
      const auto arcs = g.out_arcs(v);
      if (frame.next_arc < arcs.size()) {
        const NodeId w = arcs[frame.next_arc++].node;
        if (index[w] == unvisited) {
          index[w] = low[w] = counter++;
          scc_stack.push_back(w);
          on_stack[w] = 1;
          call_stack.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::vector<NodeId> component;
        NodeId w = 0;
        do {
          w = scc_stack.back();
          scc_stack.pop_back();
          on_stack[w] = 0;
          component.push_back(w);
        } while (w != v);
        std::sort(component.begin(), component.end());
        components.push_back(std::move(component));
      }
      call_stack.pop_back();
      if (!call_stack.empty()) {
        const NodeId parent = call_stack.back().node;
        low[parent] = std::min(low[parent], low[v]);
      }
    }
  }
  std::sort(components.begin(), components.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return components;
}

std::vector<NodeId> core_component(const MentionGraph& g) {
  auto components = strongly_connected_components(g);
  if (components.empty()) return {};
  // Components are ordered by smallest member, so the first maximum wins ties.
  auto best = components.begin();
  for (auto it = components.begin(); it != components.end(); ++it) {
    if (it->size() > best->size()) best = it;
  }
  return std::move(*best);
}

std::string_view to_string(BowTieLabel label) noexcept {
  switch (label) {
    case BowTieLabel::scc: return "SCC";
    case BowTieLabel::in: return "IN";
    case BowTieLabel::out: return "OUT";
    case BowTieLabel::tubes: return "TUBES";
    case BowTieLabel::in_tendrils: return "INTENDRILS";
    case BowTieLabel::out_tendrils: return "OUTTENDRILS";
    case BowTieLabel::others: return "OTHERS";
  }
  return "OTHERS";
}

std::array<std::size_t, kBowTieLabelCount> BowTiePartition::sizes() const {
  std::array<std::size_t, kBowTieLabelCount> counts{};
  for (const auto l : label) ++counts[static_cast<std::size_t>(l)];
  return counts;
}

BowTiePartition bowtie(const MentionGraph& g) {
  const std::size_t n = g.node_count();
  BowTiePartition p;
  p.core = core_component(g);
  p.label.assign(n, BowTieLabel::others);
  if (n == 0) return p;

  std::vector<char> in_core(n, 0);
  for (const NodeId v : p.core) in_core[v] = 1;
  const auto from_core = reach(g, p.core, Direction::forward);
  const auto to_core = reach(g, p.core, Direction::backward);

  std::vector<NodeId> in_set;
  std::vector<NodeId> out_set;
  for (NodeId v = 0; v < n; ++v) {
    if (in_core[v]) continue;
    if (to_core[v]) in_set.push_back(v);
    else if (from_core[v]) out_set.push_back(v);
  }
  const auto from_in = reach(g, in_set, Direction::forward);
  const auto to_out = reach(g, out_set, Direction::backward);

  for (NodeId v = 0; v < n; ++v) {
    if (in_core[v]) p.label[v] = BowTieLabel::scc;
    else if (to_core[v]) p.label[v] = BowTieLabel::in;
    else if (from_core[v]) p.label[v] = BowTieLabel::out;
    else if (from_in[v] && to_out[v]) p.label[v] = BowTieLabel::tubes;
    else if (from_in[v]) p.label[v] = BowTieLabel::in_tendrils;
    else if (to_out[v]) p.label[v] = BowTieLabel::out_tendrils;
  }
  return p;
}

std::string_view to_string(Component c) noexcept {
  switch (c) {
    case Component::a: return "A";
    case Component::b: return "B";
    case Component::c: return "C";
    case Component::d: return "D";
  }
  return "D";
}

std::array<std::size_t, kComponentCount> SkeletonPartition::sizes() const {
  std::array<std::size_t, kComponentCount> counts{};
  for (const auto l : label) ++counts[static_cast<std::size_t>(l)];
  return counts;
}

std::vector<NodeId> SkeletonPartition::members(Component c) const {
  std::vector<NodeId> result;
  for (NodeId v = 0; v < label.size(); ++v) {
    if (label[v] == c) result.push_back(v);
  }
  return result;
}

SkeletonPartition abcd_skeleton(const MentionGraph& g) {
  SkeletonPartition p;
  p.label.assign(g.node_count(), Component::d);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const bool receives = !g.in_arcs(v).empty();
    const bool sends = !g.out_arcs(v).empty();
    if (sends && !receives) p.label[v] = Component::c;
    else if (receives && !sends) p.label[v] = Component::b;
  }
  for (const NodeId v : core_component(g)) p.label[v] = Component::a;
  return p;
}

Weight LinkMatrix::total() const noexcept {
  Weight sum = 0;
  for (const auto& row : counts) {
    for (const auto cell : row) sum += cell;
  }
  return sum;
}

LinkMatrix link_matrix(const MentionGraph& g, const SkeletonPartition& p, bool weighted) {
  if (p.label.size() < g.node_count()) {
    throw InvalidArgument("node '" + g.nick(static_cast<NodeId>(p.label.size())) +
                          "' has no skeleton label");
  }
  LinkMatrix m;
  for (const auto& e : g.edges()) {
    const auto from = static_cast<std::size_t>(p.label[e.source]);
    const auto to = static_cast<std::size_t>(p.label[e.target]);
    m.counts[from][to] += weighted ? e.weight : 1;
  }
  return m;
}

std::array<double, kComponentCount> composition_percent(const SkeletonPartition& p) {
  std::array<double, kComponentCount> percent{};
  if (p.label.empty()) return percent;
  const auto sizes = p.sizes();
  for (std::size_t i = 0; i < kComponentCount; ++i) {
    percent[i] = 100.0 * static_cast<double>(sizes[i]) / static_cast<double>(p.label.size());
  }
  return percent;
}

}  // namespace ircsna
