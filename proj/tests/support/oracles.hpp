#pragma once
// Random graph generators and slow, obviously-correct reference
// implementations used to check the library.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ircsna/max_flow.hpp"
#include "ircsna/mention_graph.hpp"
#include "ircsna/skeleton.hpp"

namespace oracle {

using ircsna::Capacity;
using ircsna::MentionGraph;
using ircsna::NodeId;
using ircsna::UndirectedEdge;
using ircsna::UndirectedView;
using ircsna::Weight;

using Rng = std::mt19937_64;
using Matrix = std::vector<std::vector<double>>;
using BoolMatrix = std::vector<std::vector<char>>;
using NodeSet = std::vector<NodeId>;

// v0000, v0001, ... so id order and nick order agree.
inline std::string node_name(std::size_t i) {
  std::string digits = std::to_string(i);
  return "v" + std::string(digits.size() < 4 ? 4 - digits.size() : 0, '0') + digits;
}

inline std::vector<std::string> node_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(node_name(i));
  return names;
}

inline MentionGraph random_digraph(Rng& rng, std::size_t n, double p, Weight max_weight = 1) {
  MentionGraph g(node_names(n));
  std::bernoulli_distribution coin(p);
  std::uniform_int_distribution<Weight> w(1, max_weight);
  for (NodeId a = 0; a < n; ++a) {
    for (NodeId b = 0; b < n; ++b) {
      if (a != b && coin(rng)) g.add_weight(a, b, w(rng));
    }
  }
  return g;
}

inline UndirectedView random_undirected(Rng& rng, std::size_t n, double p, Weight max_weight = 1) {
  std::bernoulli_distribution coin(p);
  std::uniform_int_distribution<Weight> w(1, max_weight);
  std::vector<UndirectedEdge> edges;
  for (NodeId a = 0; a < n; ++a) {
    for (NodeId b = a + 1; b < n; ++b) {
      if (coin(rng)) edges.push_back({a, b, w(rng)});
    }
  }
  return UndirectedView(n, edges);
}

// Preferential attachment with random direction and weights 1..5; exactly
// `m` distinct ordered pairs.
inline MentionGraph preferential_attachment(Rng& rng, std::size_t n, std::size_t m) {
  MentionGraph g(node_names(n));
  std::vector<NodeId> endpoints{0};
  std::uniform_int_distribution<Weight> w(1, 5);
  std::bernoulli_distribution flip(0.5);
  std::size_t edges = 0;
  const auto link = [&](NodeId a, NodeId b) {
    if (a == b) return false;
    if (flip(rng)) std::swap(a, b);
    if (g.weight(a, b) > 0) return false;
    g.add_weight(a, b, w(rng));
    endpoints.push_back(a);
    endpoints.push_back(b);
    ++edges;
    return true;
  };
  for (NodeId v = 1; v < n; ++v) {
    const std::size_t want = m * v / (n - 1) - m * (v - 1) / (n - 1);
    for (std::size_t tries = 0, made = 0; made < want && tries < 20 * want; ++tries) {
      std::uniform_int_distribution<std::size_t> pick(0, endpoints.size() - 1);
      if (link(v, endpoints[pick(rng)])) ++made;
    }
    if (g.in_arcs(v).empty() && g.out_arcs(v).empty()) {
      std::uniform_int_distribution<NodeId> any(0, v - 1);
      while (!link(v, any(rng))) {}
    }
  }
  while (edges < m) {
    std::uniform_int_distribution<std::size_t> pick(0, endpoints.size() - 1);
    link(endpoints[pick(rng)], endpoints[pick(rng)]);
  }
  return g;
}

// ---------------------------------------------------------------- reachability

// reach[a][b]: b reachable from a by a path of length >= 0.
inline BoolMatrix transitive_closure(const MentionGraph& g) {
  const std::size_t n = g.node_count();
  BoolMatrix r(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) r[i][i] = 1;
  for (const auto& e : g.edges()) r[e.source][e.target] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (r[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (r[k][j]) r[i][j] = 1;
  return r;
}

inline std::vector<NodeSet> scc_oracle(const MentionGraph& g) {
  const auto r = transitive_closure(g);
  const std::size_t n = g.node_count();
  std::vector<char> done(n, 0);
  std::vector<NodeSet> out;
  for (NodeId v = 0; v < n; ++v) {
    if (done[v]) continue;
    NodeSet c;
    for (NodeId u = 0; u < n; ++u) {
      if (r[v][u] && r[u][v]) {
        c.push_back(u);
        done[u] = 1;
      }
    }
    out.push_back(c);
  }
  return out;
}

inline NodeSet core_oracle(const MentionGraph& g) {
  NodeSet best;
  for (const auto& c : scc_oracle(g)) {
    if (c.size() > best.size() || (c.size() == best.size() && !c.empty() && c.front() < best.front())) best = c;
  }
  return best;
}

// Bow-tie labels straight from the set expressions, first match wins.
inline std::vector<ircsna::BowTieLabel> bowtie_oracle(const MentionGraph& g) {
  using L = ircsna::BowTieLabel;
  const std::size_t n = g.node_count();
  const auto r = transitive_closure(g);
  const auto s = core_oracle(g);
  std::vector<char> in_s(n, 0), in_in(n, 0), in_out(n, 0);
  for (auto v : s) in_s[v] = 1;
  const auto reaches_s = [&](NodeId v) {
    return std::any_of(s.begin(), s.end(), [&](NodeId x) { return r[v][x]; });
  };
  const auto reached_from_s = [&](NodeId v) {
    return std::any_of(s.begin(), s.end(), [&](NodeId x) { return r[x][v]; });
  };
  for (NodeId v = 0; v < n; ++v) {
    if (in_s[v]) continue;
    if (reaches_s(v)) in_in[v] = 1;
    else if (reached_from_s(v)) in_out[v] = 1;
  }
  std::vector<L> label(n, L::others);
  for (NodeId v = 0; v < n; ++v) {
    bool from_in = false, to_out = false;
    for (NodeId u = 0; u < n; ++u) {
      if (in_in[u] && r[u][v]) from_in = true;
      if (in_out[u] && r[v][u]) to_out = true;
    }
    if (in_s[v]) label[v] = L::scc;
    else if (in_in[v]) label[v] = L::in;
    else if (in_out[v]) label[v] = L::out;
    else if (from_in && to_out) label[v] = L::tubes;
    else if (from_in) label[v] = L::in_tendrils;
    else if (to_out) label[v] = L::out_tendrils;
  }
  return label;
}

// ---------------------------------------------------------------- undirected

inline BoolMatrix adjacency(const UndirectedView& u) {
  const std::size_t n = u.node_count();
  BoolMatrix a(n, std::vector<char>(n, 0));
  for (const auto& e : u.edges()) a[e.low][e.high] = a[e.high][e.low] = 1;
  return a;
}

// Components among nodes with alive[v] set.
inline std::size_t count_components(const BoolMatrix& adj, const std::vector<char>& alive) {
  const std::size_t n = adj.size();
  std::vector<char> seen(n, 0);
  std::size_t count = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (!alive[s] || seen[s]) continue;
    ++count;
    std::vector<std::size_t> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      for (std::size_t w = 0; w < n; ++w) {
        if (adj[v][w] && alive[w] && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return count;
}

inline NodeSet cutpoint_oracle(const UndirectedView& u) {
  const auto adj = adjacency(u);
  const std::size_t n = u.node_count();
  std::vector<char> alive(n, 1);
  const auto base = count_components(adj, alive);
  NodeSet cuts;
  for (NodeId v = 0; v < n; ++v) {
    alive[v] = 0;
    if (count_components(adj, alive) > base) cuts.push_back(v);
    alive[v] = 1;
  }
  return cuts;
}

inline NodeSet members_of(std::uint32_t mask) {
  NodeSet s;
  for (NodeId v = 0; v < 32; ++v)
    if (mask >> v & 1u) s.push_back(v);
  return s;
}

inline bool size_then_lex(const NodeSet& a, const NodeSet& b) {
  return a.size() != b.size() ? a.size() > b.size() : a < b;
}

// Maximal vertex sets whose induced subgraph is biconnected (connected, >= 2
// nodes, no vertex whose removal disconnects it), plus isolated singletons.
inline std::vector<NodeSet> block_oracle(const UndirectedView& u) {
  const auto adj = adjacency(u);
  const std::size_t n = u.node_count();
  std::vector<std::uint32_t> good;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const auto s = members_of(mask);
    if (s.size() < 2) continue;
    std::vector<char> alive(n, 0);
    for (auto v : s) alive[v] = 1;
    if (count_components(adj, alive) != 1) continue;
    bool ok = true;
    if (s.size() > 2) {
      for (auto v : s) {
        alive[v] = 0;
        if (count_components(adj, alive) != 1) ok = false;
        alive[v] = 1;
      }
    }
    if (ok) good.push_back(mask);
  }
  std::vector<NodeSet> blocks;
  for (auto m : good) {
    const bool maximal = std::none_of(good.begin(), good.end(), [&](std::uint32_t o) { return o != m && (o & m) == m; });
    if (maximal) blocks.push_back(members_of(m));
  }
  for (NodeId v = 0; v < n; ++v)
    if (u.degree(v) == 0) blocks.push_back({v});
  std::sort(blocks.begin(), blocks.end(), size_then_lex);
  return blocks;
}

// All maximal cliques of size >= min_size by subset enumeration (n <= 20).
inline std::vector<NodeSet> clique_oracle(const UndirectedView& u, std::size_t min_size) {
  const auto adj = adjacency(u);
  const std::size_t n = u.node_count();
  std::vector<NodeSet> out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const auto s = members_of(mask);
    bool complete = true;
    for (std::size_t i = 0; i < s.size() && complete; ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j)
        if (!adj[s[i]][s[j]]) {
          complete = false;
          break;
        }
    if (!complete) continue;
    bool maximal = true;
    for (NodeId v = 0; v < n && maximal; ++v) {
      if (mask >> v & 1u) continue;
      if (std::all_of(s.begin(), s.end(), [&](NodeId x) { return adj[v][x] != 0; })) maximal = false;
    }
    if (maximal && s.size() >= min_size) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), size_then_lex);
  return out;
}

inline Capacity edge_capacity(const UndirectedEdge& e, bool weighted) { return weighted ? e.weight : 1; }

// Minimum a-b cut over every 2-partition of the node set.
inline Capacity min_cut_oracle(const UndirectedView& u, NodeId a, NodeId b, bool weighted) {
  const std::size_t n = u.node_count();
  Capacity best = std::numeric_limits<Capacity>::max();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (!(mask >> a & 1u) || (mask >> b & 1u)) continue;
    Capacity cut = 0;
    for (const auto& e : u.edges())
      if ((mask >> e.low & 1u) != (mask >> e.high & 1u)) cut += edge_capacity(e, weighted);
    best = std::min(best, cut);
  }
  return best;
}

// All-pairs minimum cut: every 2-partition is scored once and credited to
// each pair it separates.
inline std::vector<std::vector<Capacity>> lambda_matrix_oracle(const UndirectedView& u, bool weighted) {
  const std::size_t n = u.node_count();
  const Capacity inf = std::numeric_limits<Capacity>::max();
  std::vector<std::vector<Capacity>> l(n, std::vector<Capacity>(n, inf));
  for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
    Capacity cut = 0;
    for (const auto& e : u.edges())
      if ((mask >> e.low & 1u) != (mask >> e.high & 1u)) cut += edge_capacity(e, weighted);
    for (NodeId a = 0; a < n; ++a) {
      if (!(mask >> a & 1u)) continue;
      for (NodeId b = 0; b < n; ++b) {
        if (mask >> b & 1u) continue;
        l[a][b] = std::min(l[a][b], cut);
        l[b][a] = l[a][b];
      }
    }
  }
  for (NodeId a = 0; a < n; ++a) l[a][a] = 0;
  return l;
}

// The defining inequality: every inside pair is more strongly connected than
// any inside/outside pair.
inline bool satisfies_lambda_inequality(const std::vector<std::vector<Capacity>>& l, const NodeSet& s) {
  const std::size_t n = l.size();
  std::vector<char> inside(n, 0);
  for (auto v : s) inside[v] = 1;
  Capacity inner = std::numeric_limits<Capacity>::max();
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) inner = std::min(inner, l[s[i]][s[j]]);
  Capacity outer = 0;
  for (auto c : s)
    for (NodeId d = 0; d < n; ++d)
      if (!inside[d]) outer = std::max(outer, l[c][d]);
  return inner > outer;
}

// Every node set of size >= 2 satisfying the inequality.
inline std::set<NodeSet> lambda_set_oracle(const std::vector<std::vector<Capacity>>& l) {
  std::set<NodeSet> sets;
  const std::size_t n = l.size();
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const auto s = members_of(mask);
    if (s.size() >= 2 && satisfies_lambda_inequality(l, s)) sets.insert(s);
  }
  return sets;
}

// ---------------------------------------------------------------- HITS

// Cyclic Jacobi eigen-decomposition of a symmetric matrix. Returns
// eigenvalues; `vectors` receives eigenvectors as columns.
inline std::vector<double> jacobi_eigen(Matrix a, Matrix& vectors) {
  const std::size_t n = a.size();
  vectors.assign(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) vectors[i][i] = 1.0;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
    if (off < 1e-30) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = vectors[k][p], vkq = vectors[k][q];
          vectors[k][p] = c * vkp - s * vkq;
          vectors[k][q] = s * vkp + c * vkq;
        }
      }
    }
  }
  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = a[i][i];
  return values;
}

// Authority vector as the limit of the mutual-reinforcement iteration: the
// projection of the first authority update (A^T 1) onto the dominant
// eigenspace of A^T A, normalised.
inline std::vector<double> authority_oracle(const MentionGraph& g, bool weighted = false) {
  const std::size_t n = g.node_count();
  Matrix a(n, std::vector<double>(n, 0.0));
  for (const auto& e : g.edges()) a[e.source][e.target] = weighted ? static_cast<double>(e.weight) : 1.0;
  Matrix ata(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) ata[i][j] += a[k][i] * a[k][j];
  std::vector<double> start(n, 0.0);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j) start[j] += a[k][j];
  Matrix vecs;
  const auto vals = jacobi_eigen(ata, vecs);
  const double top = *std::max_element(vals.begin(), vals.end());
  std::vector<double> result(n, 0.0);
  if (top <= 0.0) return result;
  for (std::size_t c = 0; c < n; ++c) {
    if (vals[c] < top * (1.0 - 1e-9)) continue;
    double dot = 0.0;
    for (std::size_t i = 0; i < n; ++i) dot += vecs[i][c] * start[i];
    for (std::size_t i = 0; i < n; ++i) result[i] += dot * vecs[i][c];
  }
  double norm = 0.0;
  for (auto x : result) norm += x * x;
  norm = std::sqrt(norm);
  for (auto& x : result) x /= norm;
  return result;
}

// ---------------------------------------------------------------- REGE

// Literal transcription of the REGE update over a dense weight matrix
// w[i][k] = weight of i -> k (0 = no tie). Among equally good partners m the
// one with the smallest denominator term is taken.
inline Matrix rege_oracle(const Matrix& w, int iterations) {
  const std::size_t n = w.size();
  const auto tie = [&](std::size_t i, std::size_t k) { return w[i][k] > 0.0 || w[k][i] > 0.0; };
  std::vector<std::vector<std::size_t>> nb(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (k != i && tie(i, k)) nb[i].push_back(k);

  Matrix e(n, std::vector<double>(n, 1.0));
  for (int t = 0; t < iterations; ++t) {
    Matrix next(n, std::vector<double>(n, 1.0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        if (nb[i].empty() && nb[j].empty()) {
          next[i][j] = 1.0;
          continue;
        }
        if (nb[i].empty() || nb[j].empty()) {
          next[i][j] = 0.0;
          continue;
        }
        double num = 0.0, den = 0.0;
        const auto half = [&](std::size_t x, std::size_t y) {
          for (std::size_t k : nb[x]) {
            double best = -1.0, best_den = 0.0;
            for (std::size_t m : nb[y]) {
              const double v = e[k][m] * (std::min(w[x][k], w[y][m]) + std::min(w[k][x], w[m][y]));
              const double d = std::max(w[x][k], w[y][m]) + std::max(w[k][x], w[m][y]);
              const bool close = std::abs(v - best) <= 1e-9 * std::max(std::abs(v), std::abs(best));
              if (best < 0.0 || (close ? d < best_den : v > best)) {
                best = v;
                best_den = d;
              }
            }
            num += best;
            den += best_den;
          }
        };
        half(i, j);
        half(j, i);
        next[i][j] = num / den;
      }
    }
    e = next;
  }
  return e;
}

inline Matrix weight_matrix(const MentionGraph& g) {
  const std::size_t n = g.node_count();
  Matrix w(n, std::vector<double>(n, 0.0));
  for (const auto& e : g.edges()) w[e.source][e.target] = static_cast<double>(e.weight);
  return w;
}

}  // namespace oracle
