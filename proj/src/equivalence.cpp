#include "ircsna/equivalence.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "ircsna/error.hpp"
#include "ircsna/parallel.hpp"

namespace ircsna {

namespace {

struct Tie {
  NodeId node;
  double out;  // w(self -> node)
  double in;   // w(node -> self)
};

using Profile = std::vector<Tie>;

std::vector<Profile> build_profiles(std::size_t n, std::span<const WeightedTie> ties, bool binarized) {
  std::vector<std::map<NodeId, Tie>> merged(n);
  for (const auto& t : ties) {
    if (t.source >= n || t.target >= n) throw InvalidArgument("tie endpoint out of range");
    if (t.source == t.target) throw InvalidArgument("self-loop in tie list");
    if (!(t.weight > 0.0)) throw InvalidArgument("tie weights must be positive");
    const double w = binarized ? 1.0 : t.weight;
    auto& fwd = merged[t.source].try_emplace(t.target, Tie{t.target, 0.0, 0.0}).first->second;
    fwd.out = binarized ? 1.0 : fwd.out + w;
    auto& back = merged[t.target].try_emplace(t.source, Tie{t.source, 0.0, 0.0}).first->second;
    back.in = binarized ? 1.0 : back.in + w;
  }
  std::vector<Profile> profiles(n);
  for (std::size_t v = 0; v < n; ++v) {
    for (const auto& [id, tie] : merged[v]) profiles[v].push_back(tie);
  }
  return profiles;
}

// Values this close count as tied, so the denominator tie-break survives
// rounding from non-integral weights.
constexpr double kTieTolerance = 1e-9;

bool tied(double a, double b) { return std::abs(a - b) <= kTieTolerance * std::max(std::abs(a), std::abs(b)); }

struct Half {
  double num = 0.0;
  double den = 0.0;
};

// Matches every tie of i against the best tie of j under the previous E.
Half match(const Profile& pi, const Profile& pj, const EquivalenceMatrix& prev) {
  Half h;
  for (const auto& k : pi) {
    if (pj.empty()) {
      h.den += k.out + k.in;
      continue;
    }
    const auto erow = prev.row(k.node);
    double best_num = -1.0;
    double best_den = 0.0;
    for (const auto& m : pj) {
      const double value = erow[m.node] * (std::min(k.out, m.out) + std::min(k.in, m.in));
      const double bound = std::max(k.out, m.out) + std::max(k.in, m.in);
      const bool take = best_num < 0.0 ? true : tied(value, best_num) ? bound < best_den : value > best_num;
      if (take) {
        best_num = value;
        best_den = bound;
      }
    }
    h.num += best_num;
    h.den += best_den;
  }
  return h;
}

}  // namespace

EquivalenceMatrix rege(std::size_t n, std::span<const WeightedTie> ties, const RegeOptions& options) {
  if (options.iterations < 1) throw InvalidArgument("rege needs at least one iteration");
  const auto profiles = build_profiles(n, ties, options.binarized);

  EquivalenceMatrix current(n, 1.0);
  EquivalenceMatrix next(n, 1.0);
  for (int iter = 0; iter < options.iterations; ++iter) {
    parallel_for(n, options.threads, [&](std::size_t row) {
      const auto i = static_cast<NodeId>(row);
      next.at(i, i) = 1.0;
      for (NodeId j = i + 1; j < n; ++j) {
        const Half ij = match(profiles[i], profiles[j], current);
        const Half ji = match(profiles[j], profiles[i], current);
        const double den = ij.den + ji.den;
        const double value = den > 0.0 ? (ij.num + ji.num) / den : 1.0;
        next.at(i, j) = value;
      }
    });
    // Mirror the upper triangle once every row is done.
    for (NodeId i = 0; i < n; ++i) {
      for (NodeId j = i + 1; j < n; ++j) next.at(j, i) = next(i, j);
    }
    std::swap(current, next);
  }
  current.iterations = options.iterations;
  return current;
}

EquivalenceMatrix rege(const MentionGraph& g, const RegeOptions& options) {
  std::vector<WeightedTie> ties;
  ties.reserve(g.edge_count());
  for (const auto& e : g.edges()) ties.push_back(WeightedTie{e.source, e.target, static_cast<double>(e.weight)});
  return rege(g.node_count(), ties, options);
}

std::vector<double> high_eq_tie_fraction(const MentionGraph& g, const EquivalenceMatrix& e, double threshold) {
  if (!(threshold > 0.0 && threshold < 1.0)) throw InvalidArgument("equivalence threshold must lie in (0, 1)");
  if (e.size() != g.node_count()) throw InvalidArgument("equivalence matrix does not match graph");
  std::vector<double> fractions(g.node_count(), 0.0);
  std::vector<NodeId> neighbors;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    neighbors.clear();
    for (const auto& arc : g.out_arcs(v)) neighbors.push_back(arc.node);
    for (const auto& arc : g.in_arcs(v)) neighbors.push_back(arc.node);
    std::sort(neighbors.begin(), neighbors.end());
    neighbors.erase(std::unique(neighbors.begin(), neighbors.end()), neighbors.end());
    if (neighbors.empty()) continue;
    const auto high = std::count_if(neighbors.begin(), neighbors.end(),
                                    [&](NodeId u) { return e(v, u) > threshold; });
    fractions[v] = static_cast<double>(high) / static_cast<double>(neighbors.size());
  }
  return fractions;
}

std::string_view to_string(RoleCase c) noexcept {
  switch (c) {
    case RoleCase::case1: return "Case1";
    case RoleCase::case2: return "Case2";
    case RoleCase::case3: return "Case3";
    case RoleCase::case4: return "Case4";
  }
  return "Case4";
}

std::string_view characteristics(RoleCase c) noexcept {
  switch (c) {
    case RoleCase::case1: return "1 big role, Restricted opportunities, Most redundancy, Least chaos";
    case RoleCase::case2: return "Different roles, Greater chaos than case 1, Lesser redundancy than case 1";
    case RoleCase::case3: return "Many different roles, Least redundancy, Most chaos";
    case RoleCase::case4: return "Many different roles, Greater redundancy than case 3, Lesser chaos than case 3";
  }
  return "";
}

RoleCase classify_case(double mean_tie_fraction, double people_fraction, double tie_cutoff, double people_cutoff) {
  const bool more_ties = mean_tie_fraction > tie_cutoff;
  const bool more_people = people_fraction >= people_cutoff;
  if (more_ties) return more_people ? RoleCase::case1 : RoleCase::case2;
  return more_people ? RoleCase::case3 : RoleCase::case4;
}

RoleCaseReport classify_roles(const SkeletonPartition& p, std::span<const double> fractions, double tie_cutoff,
                              double people_cutoff) {
  if (fractions.size() != p.label.size()) throw InvalidArgument("one tie fraction per node is required");
  if (!(tie_cutoff >= 0.0 && tie_cutoff <= 1.0) || !(people_cutoff >= 0.0 && people_cutoff <= 1.0)) {
    throw InvalidArgument("role cutoffs must lie in [0, 1]");
  }
  RoleCaseReport report;
  report.tie_cutoff = tie_cutoff;
  report.people_cutoff = people_cutoff;
  std::array<double, kComponentCount> sum{};
  std::array<std::size_t, kComponentCount> above{};
  for (std::size_t c = 0; c < kComponentCount; ++c) report.components[c].component = static_cast<Component>(c);
  for (NodeId v = 0; v < p.label.size(); ++v) {
    const auto c = static_cast<std::size_t>(p.label[v]);
    ++report.components[c].members;
    sum[c] += fractions[v];
    if (fractions[v] > tie_cutoff) ++above[c];
  }
  for (std::size_t c = 0; c < kComponentCount; ++c) {
    auto& role = report.components[c];
    if (role.empty()) continue;
    const double size = static_cast<double>(role.members);
    role.mean_tie_fraction = sum[c] / size;
    role.people_fraction = static_cast<double>(above[c]) / size;
    role.role_case = classify_case(role.mean_tie_fraction, role.people_fraction, tie_cutoff, people_cutoff);
  }
  return report;
}

}  // namespace ircsna
