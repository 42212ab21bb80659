#include "doctest.h"

#include "ircsna/error.hpp"
#include "ircsna/skeleton.hpp"
#include "support/oracles.hpp"

using namespace ircsna;
using L = BowTieLabel;

namespace {

using EdgeList = std::vector<std::tuple<std::string, std::string, Weight>>;

L label_of(const MentionGraph& g, const BowTiePartition& p, const char* nick) { return p.label[g.require(nick)]; }

const EdgeList kBowTie{{"x", "a", 1}, {"a", "b", 1}, {"b", "c", 1}, {"c", "a", 1}, {"c", "y", 1}};

}  // namespace

TEST_CASE("strongly connected components") {
  const auto cycle = strongly_connected_components(MentionGraph::from_edges({{"a", "b", 1}, {"b", "c", 1}, {"c", "a", 1}}));
  CHECK(cycle == std::vector<std::vector<NodeId>>{{0, 1, 2}});
  const auto dag = strongly_connected_components(
      MentionGraph::from_edges({{"a", "b", 1}, {"a", "c", 1}, {"b", "d", 1}, {"c", "d", 1}}));
  CHECK(dag.size() == 4);

  oracle::Rng rng(61);
  std::uniform_int_distribution<std::size_t> size(1, 6);
  for (int t = 0; t < 500; ++t) {
    const auto g = oracle::random_digraph(rng, size(rng), 0.3);
    auto got = strongly_connected_components(g);
    auto want = oracle::scc_oracle(g);
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    CHECK(got == want);
  }
}

TEST_CASE("core SCC ties go to the smallest member") {
  const auto g = MentionGraph::from_edges({{"p", "q", 1}, {"q", "p", 1}, {"b", "c", 1}, {"c", "b", 1}, {"q", "b", 1}});
  CHECK(core_component(g) == std::vector<NodeId>{g.require("b"), g.require("c")});
  CHECK(core_component(MentionGraph{}).empty());
}

TEST_CASE("bow-tie examples") {
  const auto g = MentionGraph::from_edges(kBowTie);
  const auto p = bowtie(g);
  CHECK(p.core == std::vector<NodeId>{g.require("a"), g.require("b"), g.require("c")});
  CHECK(label_of(g, p, "x") == L::in);
  CHECK(label_of(g, p, "y") == L::out);

  auto edges = kBowTie;
  edges.emplace_back("x", "t", 1);
  edges.emplace_back("t", "y", 1);
  edges.emplace_back("x", "u", 1);
  edges.emplace_back("w", "y", 1);
  const auto g2 = MentionGraph::from_edges(edges, {"iso"});
  const auto p2 = bowtie(g2);
  CHECK(label_of(g2, p2, "t") == L::tubes);
  CHECK(label_of(g2, p2, "u") == L::in_tendrils);
  CHECK(label_of(g2, p2, "w") == L::out_tendrils);
  CHECK(label_of(g2, p2, "iso") == L::others);
  const auto sizes = p2.sizes();
  CHECK(sizes == std::array<std::size_t, kBowTieLabelCount>{3, 1, 1, 1, 1, 1, 1});
  CHECK(to_string(L::in_tendrils) == "INTENDRILS");

  const auto empty = bowtie(MentionGraph{});
  CHECK(empty.label.empty());
  CHECK(empty.core.empty());
}

TEST_CASE("bow-tie agrees with the closure oracle on small graphs") {
  oracle::Rng rng(67);
  std::uniform_int_distribution<std::size_t> size(1, 8);
  std::uniform_real_distribution<double> density(0.05, 0.45);
  for (int t = 0; t < 500; ++t) {
    const auto g = oracle::random_digraph(rng, size(rng), density(rng));
    CHECK(bowtie(g).label == oracle::bowtie_oracle(g));
  }
}

TEST_CASE("A/B/C/D skeleton example") {
  const auto g = MentionGraph::from_edges({{"a", "b", 1}, {"b", "c", 1}, {"c", "a", 1}, {"s", "a", 1}, {"a", "r", 1}},
                                          {"z"});
  const auto p = abcd_skeleton(g);
  const auto at = [&](const char* nick) { return p.label[g.require(nick)]; };
  CHECK(at("a") == Component::a);
  CHECK(at("b") == Component::a);
  CHECK(at("c") == Component::a);
  CHECK(at("s") == Component::c);
  CHECK(at("r") == Component::b);
  CHECK(at("z") == Component::d);
  CHECK(p.sizes() == std::array<std::size_t, kComponentCount>{3, 1, 1, 1});

  const auto m = link_matrix(g, p, false);
  LinkMatrix want;
  want.counts[2][0] = 1;
  want.counts[0][1] = 1;
  want.counts[0][0] = 3;
  CHECK(m.counts == want.counts);
  CHECK(m.total() == 5);

  const auto pct = composition_percent(p);
  CHECK(pct[0] == doctest::Approx(50.0));
  CHECK(pct[3] == doctest::Approx(100.0 / 6.0));
}

TEST_CASE("mixed-degree periphery falls into D") {
  // m sends to and receives from nodes outside the 2-cycle core.
  const auto g = MentionGraph::from_edges({{"a", "b", 1}, {"b", "a", 1}, {"s", "m", 1}, {"m", "r", 1}});
  const auto p = abcd_skeleton(g);
  CHECK(p.label[g.require("m")] == Component::d);
  CHECK(p.members(Component::a) == std::vector<NodeId>{g.require("a"), g.require("b")});
}

TEST_CASE("acyclic graph: A is one node") {
  const auto g = MentionGraph::from_edges({{"a", "b", 1}, {"b", "c", 1}});
  const auto p = abcd_skeleton(g);
  CHECK(p.members(Component::a) == std::vector<NodeId>{g.require("a")});
  CHECK(p.label[g.require("b")] == Component::d);
  CHECK(p.label[g.require("c")] == Component::b);
}

TEST_CASE("link matrix edge cases") {
  const auto empty = link_matrix(MentionGraph{}, abcd_skeleton(MentionGraph{}), false);
  CHECK(empty.total() == 0);

  const auto g = MentionGraph::from_edges({{"a", "b", 1}, {"b", "c", 1}});
  SkeletonPartition partial;
  partial.label = {Component::a, Component::b};
  CHECK_THROWS_WITH_AS(link_matrix(g, partial, false), "node 'c' has no skeleton label", InvalidArgument);
}

TEST_CASE("link matrix matches an edge scan for arbitrary labelings") {
  oracle::Rng rng(71);
  std::uniform_int_distribution<int> comp(0, 3);
  for (int t = 0; t < 200; ++t) {
    const auto g = oracle::random_digraph(rng, 10, 0.25, 5);
    SkeletonPartition p;
    for (NodeId v = 0; v < 10; ++v) p.label.push_back(static_cast<Component>(comp(rng)));
    std::array<std::array<Weight, 4>, 4> count{}, weight{};
    for (NodeId a = 0; a < 10; ++a)
      for (NodeId b = 0; b < 10; ++b)
        if (const auto w = g.weight(a, b); w > 0) {
          const auto i = static_cast<std::size_t>(p.label[a]), j = static_cast<std::size_t>(p.label[b]);
          ++count[i][j];
          weight[i][j] += w;
        }
    CHECK(link_matrix(g, p, false).counts == count);
    CHECK(link_matrix(g, p, true).counts == weight);

    // Dropping a node only changes the cells in its own row and column.
    const NodeId gone = static_cast<NodeId>(t % 10);
    MentionGraph rest(g.nicks());
    for (const auto& e : g.edges())
      if (e.source != gone && e.target != gone) rest.add_weight(e.source, e.target, e.weight);
    const auto before = link_matrix(g, p, false), after = link_matrix(rest, p, false);
    const auto own = static_cast<std::size_t>(p.label[gone]);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        if (i == own || j == own) CHECK(after.counts[i][j] <= before.counts[i][j]);
        else CHECK(after.counts[i][j] == before.counts[i][j]);
      }
    const auto degree = static_cast<Weight>(g.in_arcs(gone).size() + g.out_arcs(gone).size());
    CHECK(before.total() - after.total() == degree);
  }
}
