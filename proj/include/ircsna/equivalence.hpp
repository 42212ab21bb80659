#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ircsna/mention_graph.hpp"
#include "ircsna/skeleton.hpp"

namespace ircsna {

/// Dense symmetric similarity matrix with unit diagonal.
class EquivalenceMatrix {
 public:
  EquivalenceMatrix() = default;
  explicit EquivalenceMatrix(std::size_t n, double fill = 1.0) : n_(n), values_(n * n, fill) {}

  std::size_t size() const noexcept { return n_; }
  double operator()(NodeId i, NodeId j) const { return values_[static_cast<std::size_t>(i) * n_ + j]; }
  double& at(NodeId i, NodeId j) { return values_[static_cast<std::size_t>(i) * n_ + j]; }
  std::span<const double> row(NodeId i) const {
    return {values_.data() + static_cast<std::size_t>(i) * n_, n_};
  }

  int iterations = 0;

 private:
  std::size_t n_ = 0;
  std::vector<double> values_;
};

struct RegeOptions {
  int iterations = 3;
  /// Treat every tie as weight 1.
  bool binarized = false;
  unsigned threads = 1;
};

struct WeightedTie {
  NodeId source;
  NodeId target;
  double weight;
};

/// REGE regular equivalence.
///
/// Starting from E = 1 everywhere, each round matches every neighbour k of i
/// (in or out) with the neighbour m of j maximising
///
///   E(k, m) * [min(w(i->k), w(j->m)) + min(w(k->i), w(m->j))]
///
/// and accumulates that value into num(i, j) and the matching
/// max(w(i->k), w(j->m)) + max(w(k->i), w(m->j)) into den(i, j). Among
/// equally good m the smallest denominator is taken, which keeps the result
/// independent of node numbering. The new similarity is
/// (num(i,j) + num(j,i)) / (den(i,j) + den(j,i)); two isolates score 1 and an
/// isolate against anyone else scores 0. Throws if iterations < 1.
EquivalenceMatrix rege(const MentionGraph& g, const RegeOptions& options = {});
EquivalenceMatrix rege(std::size_t node_count, std::span<const WeightedTie> ties, const RegeOptions& options = {});

/// Per node, the share of its neighbours u (either direction) with
/// e(v, u) > threshold; isolates get 0. Requires 0 < threshold < 1.
std::vector<double> high_eq_tie_fraction(const MentionGraph& g, const EquivalenceMatrix& e, double threshold = 0.5);

enum class RoleCase { case1, case2, case3, case4 };

std::string_view to_string(RoleCase c) noexcept;
/// The "probable characteristics" text for each case.
std::string_view characteristics(RoleCase c) noexcept;

/// Case 1: T > tie_cutoff and P >= people_cutoff; case 2: T > tie_cutoff and
/// P < people_cutoff; case 3: T <= tie_cutoff and P >= people_cutoff; case 4
/// otherwise.
RoleCase classify_case(double mean_tie_fraction, double people_fraction, double tie_cutoff, double people_cutoff);

struct ComponentRole {
  Component component = Component::a;
  std::size_t members = 0;
  double mean_tie_fraction = 0.0;  // T
  double people_fraction = 0.0;    // P: share of members with fraction > tie_cutoff
  std::optional<RoleCase> role_case;  // empty component: no case

  bool empty() const noexcept { return members == 0; }
};

struct RoleCaseReport {
  std::array<ComponentRole, kComponentCount> components;
  double tie_cutoff = 0.30;
  double people_cutoff = 0.50;
};

RoleCaseReport classify_roles(const SkeletonPartition& p, std::span<const double> fractions,
                              double tie_cutoff = 0.30, double people_cutoff = 0.50);

}  // namespace ircsna
