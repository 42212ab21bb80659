#include <cmath>
#include <numeric>

#include "doctest.h"

#include "ircsna/equivalence.hpp"
#include "ircsna/error.hpp"
#include "support/oracles.hpp"

using namespace ircsna;

namespace {

// Five actors with asymmetric, weighted ties.
MentionGraph five_node_fixture() {
  return MentionGraph::from_edges({{"ann", "bea", 3},
                                   {"bea", "ann", 1},
                                   {"bea", "cal", 2},
                                   {"cal", "dov", 5},
                                   {"dov", "bea", 1},
                                   {"eli", "cal", 4},
                                   {"eli", "ann", 2},
                                   {"dov", "eli", 1}});
}

double deviation(const EquivalenceMatrix& e, const oracle::Matrix& m) {
  double worst = 0.0;
  for (NodeId i = 0; i < e.size(); ++i)
    for (NodeId j = 0; j < e.size(); ++j) worst = std::max(worst, std::abs(e(i, j) - m[i][j]));
  return worst;
}

SkeletonPartition all_in(Component c, std::size_t n) {
  SkeletonPartition p;
  p.label.assign(n, c);
  return p;
}

}  // namespace

TEST_CASE("star leaves are equivalent at every iteration") {
  const auto star = MentionGraph::from_edges({{"c", "l1", 1}, {"c", "l2", 1}, {"c", "l3", 1}, {"l4", "c", 2}});
  for (int it = 1; it <= 5; ++it) {
    const auto e = rege(star, RegeOptions{it});
    CHECK(e(star.require("l1"), star.require("l2")) == 1.0);
    CHECK(e(star.require("l1"), star.require("l3")) == 1.0);
    CHECK(e.iterations == it);
  }
}

TEST_CASE("isolate conventions and argument checks") {
  const auto g = MentionGraph::from_edges({{"a", "b", 1}}, {"i1", "i2"});
  const auto e = rege(g);
  CHECK(e(g.require("i1"), g.require("i2")) == 1.0);
  CHECK(e(g.require("i1"), g.require("a")) == 0.0);
  CHECK(e(g.require("b"), g.require("i2")) == 0.0);
  CHECK_THROWS_AS(rege(g, RegeOptions{0}), InvalidArgument);
  const std::vector<WeightedTie> bad{{0, 0, 1.0}};
  CHECK_THROWS_AS(rege(2, bad), InvalidArgument);
  const std::vector<WeightedTie> negative{{0, 1, -1.0}};
  CHECK_THROWS_AS(rege(2, negative), InvalidArgument);
}

TEST_CASE("five-node fixture matches the literal transcription") {
  const auto g = five_node_fixture();
  for (int it = 1; it <= 6; ++it) {
    CHECK(deviation(rege(g, RegeOptions{it}), oracle::rege_oracle(oracle::weight_matrix(g), it)) <= 1e-12);

    auto binary = oracle::weight_matrix(g);
    for (auto& row : binary)
      for (auto& w : row) w = w > 0 ? 1.0 : 0.0;
    CHECK(deviation(rege(g, RegeOptions{it, true}), oracle::rege_oracle(binary, it)) <= 1e-12);
  }
}

TEST_CASE("matrix properties on random graphs") {
  oracle::Rng rng(103);
  for (int t = 0; t < 60; ++t) {
    const auto g = oracle::random_digraph(rng, 10, 0.2, 5);
    const auto e = rege(g);
    CHECK(deviation(e, oracle::rege_oracle(oracle::weight_matrix(g), 3)) <= 1e-12);
    for (NodeId i = 0; i < 10; ++i) {
      CHECK(e(i, i) == 1.0);
      for (NodeId j = 0; j < 10; ++j) {
        CHECK(e(i, j) == e(j, i));
        CHECK(e(i, j) >= 0.0);
        CHECK(e(i, j) <= 1.0);
      }
    }
  }
}

TEST_CASE("relabeling permutes the matrix") {
  oracle::Rng rng(107);
  for (int t = 0; t < 30; ++t) {
    const auto g = oracle::random_digraph(rng, 9, 0.3, 4);
    std::vector<NodeId> perm(9);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<WeightedTie> moved;
    for (const auto& e : g.edges()) moved.push_back({perm[e.source], perm[e.target], static_cast<double>(e.weight)});
    const auto a = rege(g), b = rege(9, moved);
    for (NodeId i = 0; i < 9; ++i)
      for (NodeId j = 0; j < 9; ++j) CHECK(std::abs(a(i, j) - b(perm[i], perm[j])) <= 1e-12);
  }
}

TEST_CASE("weight scaling leaves the matrix unchanged") {
  oracle::Rng rng(109);
  for (int t = 0; t < 30; ++t) {
    const auto g = oracle::random_digraph(rng, 9, 0.3, 6);
    const auto base = rege(g);
    for (double c : {0.5, 3.0, 1e-3, 250.0}) {
      INFO("c = " << c);
      std::vector<WeightedTie> ties;
      for (const auto& e : g.edges()) ties.push_back({e.source, e.target, c * static_cast<double>(e.weight)});
      const auto e = rege(9, ties);
      for (NodeId i = 0; i < 9; ++i)
        for (NodeId j = 0; j < 9; ++j) CHECK(std::abs(e(i, j) - base(i, j)) <= 1e-12);
    }
  }
}

TEST_CASE("thread count does not change a single bit") {
  oracle::Rng rng(113);
  const auto g = oracle::random_digraph(rng, 60, 0.08, 5);
  const auto one = rege(g, RegeOptions{3, false, 1});
  for (unsigned threads : {2u, 3u, 8u}) {
    const auto many = rege(g, RegeOptions{3, false, threads});
    bool same = true;
    for (NodeId i = 0; i < 60; ++i)
      for (NodeId j = 0; j < 60; ++j) same = same && one(i, j) == many(i, j);
    CHECK(same);
  }
}

TEST_CASE("high-equivalence tie fraction") {
  const auto star = MentionGraph::from_edges({{"c", "l1", 1}, {"c", "l2", 1}, {"l1", "l2", 1}}, {"iso"});
  EquivalenceMatrix all_high(star.node_count(), 0.9);
  const auto f = high_eq_tie_fraction(star, all_high);
  CHECK(f[star.require("c")] == 1.0);
  CHECK(f[star.require("iso")] == 0.0);

  EquivalenceMatrix wrong_size(2);
  CHECK_THROWS_AS(high_eq_tie_fraction(star, wrong_size), InvalidArgument);
  CHECK_THROWS_AS(high_eq_tie_fraction(star, all_high, 0.0), InvalidArgument);
  CHECK_THROWS_AS(high_eq_tie_fraction(star, all_high, 1.0), InvalidArgument);

  const auto g = five_node_fixture();
  const auto want = oracle::rege_oracle(oracle::weight_matrix(g), 3);
  const auto got = high_eq_tie_fraction(g, rege(g), 0.5);
  for (NodeId v = 0; v < 5; ++v) {
    std::size_t neighbours = 0, high = 0;
    for (NodeId u = 0; u < 5; ++u) {
      if (u == v || (g.weight(u, v) == 0 && g.weight(v, u) == 0)) continue;
      ++neighbours;
      high += want[v][u] > 0.5;
    }
    CHECK(got[v] == doctest::Approx(static_cast<double>(high) / static_cast<double>(neighbours)));
  }
}

TEST_CASE("role case rule") {
  CHECK(classify_case(0.8, 1.0, 0.3, 0.5) == RoleCase::case1);
  CHECK(classify_case(0.8, 0.2, 0.3, 0.5) == RoleCase::case2);
  CHECK(classify_case(0.3, 0.5, 0.3, 0.5) == RoleCase::case3);
  CHECK(classify_case(0.0, 0.0, 0.3, 0.5) == RoleCase::case4);
  CHECK(to_string(RoleCase::case3) == "Case3");
  CHECK(characteristics(RoleCase::case1) == "1 big role, Restricted opportunities, Most redundancy, Least chaos");
}

TEST_CASE("classify_roles examples") {
  const auto high = classify_roles(all_in(Component::a, 3), std::vector<double>{0.8, 0.8, 0.8}, 0.30, 0.50);
  CHECK(high.components[0].role_case == RoleCase::case1);
  CHECK(high.components[0].mean_tie_fraction == doctest::Approx(0.8));
  CHECK(high.components[0].people_fraction == 1.0);

  const auto zero = classify_roles(all_in(Component::a, 2), std::vector<double>{0.0, 0.0}, 0.30, 0.50);
  CHECK(zero.components[0].role_case == RoleCase::case4);

  const auto edge = classify_roles(all_in(Component::a, 4), std::vector<double>{0.1, 0.1, 0.9, 0.9}, 0.30, 0.50);
  CHECK(edge.components[0].mean_tie_fraction == doctest::Approx(0.5));
  CHECK(edge.components[0].people_fraction == 0.5);
  CHECK(edge.components[0].role_case == RoleCase::case1);

  for (std::size_t c = 1; c < kComponentCount; ++c) {
    CHECK(edge.components[c].empty());
    CHECK_FALSE(edge.components[c].role_case);
  }
}

TEST_CASE("classify_roles arguments") {
  const auto p = all_in(Component::b, 2);
  CHECK_THROWS_AS(classify_roles(p, std::vector<double>{0.5}, 0.3, 0.5), InvalidArgument);
  CHECK_THROWS_AS(classify_roles(p, std::vector<double>{0.5, 0.5}, 1.5, 0.5), InvalidArgument);
  CHECK_THROWS_AS(classify_roles(p, std::vector<double>{0.5, 0.5}, 0.3, -0.1), InvalidArgument);
}

TEST_CASE("raising fractions never moves a component toward Case4") {
  // Case1 > Case2/Case3 > Case4 in terms of (T, P).
  const auto rank = [](RoleCase c) {
    switch (c) {
      case RoleCase::case1: return 2;
      case RoleCase::case4: return 0;
      default: return 1;
    }
  };
  oracle::Rng rng(127);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int t = 0; t < 2000; ++t) {
    std::vector<double> f(6), g(6);
    for (std::size_t i = 0; i < 6; ++i) {
      f[i] = unit(rng);
      g[i] = std::min(1.0, f[i] + unit(rng) * 0.3);
    }
    const auto p = all_in(Component::d, 6);
    const auto before = *classify_roles(p, f, 0.3, 0.5).components[3].role_case;
    const auto after = *classify_roles(p, g, 0.3, 0.5).components[3].role_case;
    CHECK(rank(after) >= rank(before));
  }
}
