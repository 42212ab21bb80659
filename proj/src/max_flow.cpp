#include "ircsna/max_flow.hpp"

#include <algorithm>
#include <limits>

#include "ircsna/error.hpp"

namespace ircsna {

MaxFlow::MaxFlow(const UndirectedView& u, CapacityMode mode) {
  const std::size_t n = u.node_count();
  first_arc_.assign(n + 1, 0);
  for (NodeId v = 0; v < n; ++v) first_arc_[v + 1] = first_arc_[v] + u.degree(v);
  const std::size_t arcs = first_arc_[n];
  head_.resize(arcs);
  capacity_.resize(arcs);
  partner_.resize(arcs);
  std::vector<std::size_t> fill(first_arc_.begin(), first_arc_.end() - 1);
  for (const auto& e : u.edges()) {
    const Capacity c = mode == CapacityMode::unit ? 1 : e.weight;
    const std::size_t forward = fill[e.low]++;
    const std::size_t backward = fill[e.high]++;
    head_[forward] = e.high;
    head_[backward] = e.low;
    capacity_[forward] = capacity_[backward] = c;
    partner_[forward] = backward;
    partner_[backward] = forward;
  }
  residual_ = capacity_;
  level_.assign(n, -1);
  cursor_.assign(n, 0);
}

bool MaxFlow::build_levels(NodeId source, NodeId sink) {
  std::fill(level_.begin(), level_.end(), -1);
  std::vector<NodeId> queue{source};
  level_[source] = 0;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const NodeId v = queue[qi];
    for (std::size_t a = first_arc_[v]; a < first_arc_[v + 1]; ++a) {
      if (residual_[a] > 0 && level_[head_[a]] < 0) {
        level_[head_[a]] = level_[v] + 1;
        queue.push_back(head_[a]);
      }
    }
  }
  return level_[sink] >= 0;
}

Capacity MaxFlow::push(NodeId v, NodeId sink, Capacity limit) {
  if (v == sink) return limit;
  for (std::size_t& a = cursor_[v]; a < first_arc_[v + 1]; ++a) {
    const NodeId w = head_[a];
    if (residual_[a] <= 0 || level_[w] != level_[v] + 1) continue;
    const Capacity pushed = push(w, sink, std::min(limit, residual_[a]));
    if (pushed > 0) {
      residual_[a] -= pushed;
      residual_[partner_[a]] += pushed;
      return pushed;
    }
  }
  return 0;
}

Capacity MaxFlow::solve(NodeId source, NodeId sink) {
  const std::size_t n = level_.size();
  if (source >= n || sink >= n) throw InvalidArgument("max-flow terminal out of range");
  if (source == sink) throw InvalidArgument("max-flow terminals must differ");
  residual_ = capacity_;
  last_source_ = source;
  Capacity total = 0;
  while (build_levels(source, sink)) {
    std::copy(first_arc_.begin(), first_arc_.end() - 1, cursor_.begin());
    while (const Capacity pushed = push(source, sink, std::numeric_limits<Capacity>::max())) {
      total += pushed;
    }
  }
  return total;
}

std::vector<char> MaxFlow::source_side() const {
  std::vector<char> side(level_.size(), 0);
  std::vector<NodeId> stack{last_source_};
  side[last_source_] = 1;
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    for (std::size_t a = first_arc_[v]; a < first_arc_[v + 1]; ++a) {
      if (residual_[a] > 0 && !side[head_[a]]) {
        side[head_[a]] = 1;
        stack.push_back(head_[a]);
      }
    }
  }
  return side;
}

}  // namespace ircsna
