#include "ircsna/mention_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "ircsna/error.hpp"
#include "ircsna/text.hpp"

namespace ircsna {

namespace {

// Inserts or accumulates into a neighbour list kept sorted by node id.
void accumulate(std::vector<Arc>& arcs, NodeId node, Weight weight) {
  auto it = std::lower_bound(arcs.begin(), arcs.end(), node,
                             [](const Arc& a, NodeId n) { return a.node < n; });
  if (it != arcs.end() && it->node == node) {
    it->weight += weight;
  } else {
    arcs.insert(it, Arc{node, weight});
  }
}

const Arc* find_arc(std::span<const Arc> arcs, NodeId node) {
  auto it = std::lower_bound(arcs.begin(), arcs.end(), node,
                             [](const Arc& a, NodeId n) { return a.node < n; });
  return (it != arcs.end() && it->node == node) ? &*it : nullptr;
}

DegreeSummary summarize(const std::vector<std::size_t>& degrees) {
  if (degrees.empty()) return {};
  const auto [lo, hi] = std::minmax_element(degrees.begin(), degrees.end());
  const auto sum = std::accumulate(degrees.begin(), degrees.end(), std::size_t{0});
  return DegreeSummary{*lo, static_cast<double>(sum) / static_cast<double>(degrees.size()), *hi};
}

}  // namespace

MentionGraph::MentionGraph(std::vector<std::string> nicks) : nicks_(std::move(nicks)) {
  std::sort(nicks_.begin(), nicks_.end());
  if (const auto dup = std::adjacent_find(nicks_.begin(), nicks_.end()); dup != nicks_.end()) {
    throw InvalidArgument("duplicate node '" + *dup + "'");
  }
  out_.resize(nicks_.size());
  in_.resize(nicks_.size());
}

MentionGraph MentionGraph::from_edges(
    const std::vector<std::tuple<std::string, std::string, Weight>>& edges,
    const std::vector<std::string>& extra_nodes) {
  std::set<std::string> names(extra_nodes.begin(), extra_nodes.end());
  for (const auto& [s, t, w] : edges) {
    names.insert(s);
    names.insert(t);
  }
  MentionGraph g(std::vector<std::string>(names.begin(), names.end()));
  for (const auto& [s, t, w] : edges) g.add_weight(g.require(s), g.require(t), w);
  return g;
}

void MentionGraph::add_weight(NodeId source, NodeId target, Weight weight) {
  if (source >= node_count() || target >= node_count()) {
    throw InvalidArgument("edge endpoint out of range");
  }
  if (source == target) throw InvalidArgument("self-loop on '" + nicks_[source] + "'");
  if (weight <= 0) throw InvalidArgument("edge weights must be positive");
  if (find_arc(out_[source], target) == nullptr) ++edge_count_;
  accumulate(out_[source], target, weight);
  accumulate(in_[target], source, weight);
  total_weight_ += weight;
}

std::optional<NodeId> MentionGraph::find(std::string_view nick) const {
  auto it = std::lower_bound(nicks_.begin(), nicks_.end(), nick);
  if (it == nicks_.end() || *it != nick) return std::nullopt;
  return static_cast<NodeId>(it - nicks_.begin());
}

NodeId MentionGraph::require(std::string_view nick) const {
  if (auto id = find(nick)) return *id;
  throw InvalidArgument("unknown node '" + std::string(nick) + "'");
}

Weight MentionGraph::weight(NodeId source, NodeId target) const {
  const Arc* arc = find_arc(out_arcs(source), target);
  return arc ? arc->weight : 0;
}

std::vector<Edge> MentionGraph::edges() const {
  std::vector<Edge> result;
  result.reserve(edge_count_);
  for (NodeId s = 0; s < node_count(); ++s) {
    for (const auto& arc : out_[s]) result.push_back(Edge{s, arc.node, arc.weight});
  }
  return result;
}

GraphStats stats(const MentionGraph& g) {
  GraphStats s;
  s.node_count = g.node_count();
  s.edge_count = g.edge_count();
  s.total_weight = g.total_weight();
  if (s.node_count > 1) {
    const double n = static_cast<double>(s.node_count);
    s.density = static_cast<double>(s.edge_count) / (n * (n - 1.0));
  }
  std::vector<std::size_t> in(g.node_count());
  std::vector<std::size_t> out(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) {
    in[v] = g.in_arcs(v).size();
    out[v] = g.out_arcs(v).size();
  }
  s.in_degree = summarize(in);
  s.out_degree = summarize(out);
  return s;
}

UndirectedView::UndirectedView(std::size_t node_count, const std::vector<UndirectedEdge>& edges)
    : adjacency_(node_count) {
  for (const auto& e : edges) {
    if (e.low >= node_count || e.high >= node_count) throw InvalidArgument("edge endpoint out of range");
    if (e.low == e.high) throw InvalidArgument("self-loop in undirected view");
    if (e.weight <= 0) throw InvalidArgument("edge weights must be positive");
    accumulate(adjacency_[e.low], e.high, e.weight);
    accumulate(adjacency_[e.high], e.low, e.weight);
  }
  for (NodeId v = 0; v < node_count; ++v) {
    for (const auto& arc : adjacency_[v]) {
      if (v < arc.node) edges_.push_back(UndirectedEdge{v, arc.node, arc.weight});
    }
  }
}

bool UndirectedView::adjacent(NodeId a, NodeId b) const { return find_arc(neighbors(a), b) != nullptr; }

Weight UndirectedView::weight(NodeId a, NodeId b) const {
  const Arc* arc = find_arc(neighbors(a), b);
  return arc ? arc->weight : 0;
}

UndirectedView to_undirected(const MentionGraph& g) {
  std::vector<UndirectedEdge> edges;
  edges.reserve(g.edge_count());
  for (const auto& e : g.edges()) {
    edges.push_back(UndirectedEdge{std::min(e.source, e.target), std::max(e.source, e.target), e.weight});
  }
  return UndirectedView(g.node_count(), edges);
}

UndirectedView mutual_view(const MentionGraph& g) {
  std::vector<UndirectedEdge> edges;
  for (const auto& e : g.edges()) {
    if (e.source < e.target) {
      if (const Weight back = g.weight(e.target, e.source); back > 0) {
        edges.push_back(UndirectedEdge{e.source, e.target, e.weight + back});
      }
    }
  }
  return UndirectedView(g.node_count(), edges);
}

std::vector<std::size_t> connected_components(const UndirectedView& u, std::size_t* count) {
  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> component(u.node_count(), unset);
  std::vector<NodeId> stack;
  std::size_t next = 0;
  for (NodeId root = 0; root < u.node_count(); ++root) {
    if (component[root] != unset) continue;
    component[root] = next;
    stack.push_back(root);
    while (!stack.empty()) {
      const NodeId v = stack.back();
      stack.pop_back();
      for (const auto& arc : u.neighbors(v)) {
        if (component[arc.node] == unset) {
          component[arc.node] = next;
          stack.push_back(arc.node);
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return component;
}

const std::set<std::string, std::less<>>& common_short_words() {
  static const std::set<std::string, std::less<>> words = {
      "a",  "i",  "u",  "k",  "y",  "o",  "x",  "am", "an", "as", "at", "be", "by", "do",
      "go", "he", "hi", "hm", "if", "in", "is", "it", "me", "my", "no", "np", "of", "oh",
      "ok", "on", "or", "so", "to", "ty", "up", "us", "we", "ya", "ye", "yo", "eh", "ah"};
  return words;
}

MentionGraph extract_network(const ChatCorpus& corpus, const Roster& roster,
                             const ExtractionOptions& options) {
  if (roster.empty()) throw Error("no participants");

  std::set<std::string, std::less<>> matchable;
  for (const auto& [nick, count] : roster.counts()) {
    if (nick.size() < options.min_nick_length) continue;
    if (options.filter_short_words && nick.size() <= 2 && common_short_words().contains(nick)) continue;
    matchable.insert(nick);
  }

  std::map<std::pair<std::string, std::string>, Weight> tally;
  std::vector<std::string> addressed;
  for (const auto& msg : corpus.messages) {
    if (msg.kind != MessageKind::user_message) continue;
    const std::string sender = canonical_nick(msg.nick);
    if (!roster.contains(sender)) continue;

    addressed.clear();
    const std::string_view body = msg.body;
    std::size_t pos = 0;
    while (pos < body.size()) {
      while (pos < body.size() && !text::is_nick_char(body[pos])) ++pos;
      const std::size_t start = pos;
      while (pos < body.size() && text::is_nick_char(body[pos])) ++pos;
      if (pos == start) break;
      const auto token = body.substr(start, pos - start);
      std::string key = options.case_insensitive ? text::fold_case(token) : std::string(token);
      if (key != sender && matchable.contains(key)) addressed.push_back(std::move(key));
    }
    std::sort(addressed.begin(), addressed.end());
    addressed.erase(std::unique(addressed.begin(), addressed.end()), addressed.end());
    for (const auto& target : addressed) ++tally[{sender, target}];
  }

  std::set<std::string> nodes;
  if (options.include_isolates) {
    for (const auto& [nick, count] : roster.counts()) nodes.insert(nick);
  }
  for (const auto& [pair, w] : tally) {
    nodes.insert(pair.first);
    nodes.insert(pair.second);
  }
  MentionGraph g(std::vector<std::string>(nodes.begin(), nodes.end()));
  for (const auto& [pair, w] : tally) g.add_weight(g.require(pair.first), g.require(pair.second), w);
  return g;
}

}  // namespace ircsna
