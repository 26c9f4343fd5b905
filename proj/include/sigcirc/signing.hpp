#pragma once

// Balance of circuits and subgraphs, switching at vertex sets, and
// signature normalization.  Switching at S flips the sign of every
// non-loop edge with exactly one endpoint in S; loops never flip.
// Circuit balance (even number of negative edges) is invariant under
// switching, which is what all equivalence notions here rest on.

#include <optional>

#include "sigcirc/graph.hpp"

namespace sigcirc {

using SwitchSet = std::vector<VertexId>;  // sorted, duplicate-free

namespace detail {

inline bool edge_set_is_circuit(const SignedGraph& g, EdgeMask mask) {
  if (mask == 0) return false;
  std::map<int, int> degree;  // vertex index -> degree within mask
  for (int i = 0; i < g.edge_count(); ++i) {
    if (!(mask >> i & 1)) continue;
    const Edge& e = g.edge_at(i);
    degree[g.vertex_index(e.u)] += e.is_loop() ? 2 : 1;
    if (!e.is_loop()) degree[g.vertex_index(e.v)] += 1;
  }
  for (const auto& [v, d] : degree)
    if (d != 2) return false;
  auto label = component_labels(g, mask);
  int root = -1;
  for (const auto& [v, d] : degree) {
    if (root == -1) root = label[v];
    if (label[v] != root) return false;
  }
  return true;
}

}  // namespace detail

inline bool is_circuit_edge_set(const SignedGraph& g, const EdgeSet& c) {
  return detail::edge_set_is_circuit(g, g.mask_of(c));
}

inline int negative_count_in(const SignedGraph& g, const EdgeSet& ids) {
  int n = 0;
  for (EdgeId e : ids) n += g.edge(e).sign < 0;
  return n;
}

inline bool is_balanced_circuit(const SignedGraph& g, const EdgeSet& c) {
  if (!is_circuit_edge_set(g, c))
    throw std::invalid_argument("edge set is not a circuit");
  return negative_count_in(g, c) % 2 == 0;
}

// Potential test: h is balanced iff some sigma: V -> {+1,-1} satisfies
// sign(uv) = sigma(u) * sigma(v) on every non-loop edge of h and every
// loop in h is positive.  On success the potentials are reported as the
// set of vertices with sigma = -1, which is exactly a balancing switch
// set for h.
inline std::optional<SwitchSet> balancing_switch_set(const SignedGraph& g, const EdgeSet& h) {
  std::vector<int> sigma(g.vertex_count(), 0);
  EdgeMask mask = g.mask_of(h);
  for (int i = 0; i < g.edge_count(); ++i)
    if ((mask >> i & 1) && g.edge_at(i).is_loop() && g.edge_at(i).sign < 0)
      return std::nullopt;
  // BFS per component of h, roots get sigma=+1.
  for (VertexId root : g.vertices()) {
    int ri = g.vertex_index(root);
    if (sigma[ri] != 0) continue;
    bool touched = false;
    for (int ei : g.incident(root))
      if (mask >> ei & 1) touched = true;
    if (!touched) continue;
    sigma[ri] = +1;
    std::vector<int> queue{ri};
    while (!queue.empty()) {
      int vi = queue.back();
      queue.pop_back();
      VertexId v = g.vertices()[vi];
      for (int ei : g.incident(v)) {
        if (!(mask >> ei & 1)) continue;
        const Edge& e = g.edge_at(ei);
        if (e.is_loop()) continue;
        int wi = g.vertex_index(e.other(v));
        int want = sigma[vi] * e.sign;
        if (sigma[wi] == 0) {
          sigma[wi] = want;
          queue.push_back(wi);
        } else if (sigma[wi] != want) {
          return std::nullopt;
        }
      }
    }
  }
  SwitchSet s;
  for (int i = 0; i < g.vertex_count(); ++i)
    if (sigma[i] == -1) s.push_back(g.vertices()[i]);
  return s;
}

inline bool is_balanced_subgraph(const SignedGraph& g, const EdgeSet& h) {
  return balancing_switch_set(g, h).has_value();
}

inline bool is_balanced(const SignedGraph& g) {
  EdgeSet all;
  for (const Edge& e : g.edges()) all.push_back(e.id);
  return is_balanced_subgraph(g, all);
}

inline SignedGraph switch_at(const SignedGraph& g, const SwitchSet& s) {
  std::set<VertexId> in(s.begin(), s.end());
  for (VertexId v : s) (void)g.vertex_index(v);  // validate
  std::vector<std::tuple<EdgeId, VertexId, VertexId, int>> es;
  for (const Edge& e : g.edges()) {
    int sign = e.sign;
    if (!e.is_loop() && (in.count(e.u) + in.count(e.v)) == 1) sign = -sign;
    es.emplace_back(e.id, e.u, e.v, sign);
  }
  return SignedGraph(g.vertices(), es);
}

inline EdgeSet negative_edges(const SignedGraph& g) {
  EdgeSet out;
  for (const Edge& e : g.edges())
    if (e.sign < 0) out.push_back(e.id);
  return out;
}

// Two signatures of the same underlying graph are equivalent iff their
// symmetric difference is an edge cut, i.e. relabelling the graph with
// that difference as its negative set yields a balanced signed graph.
inline bool signatures_equivalent(const SignedGraph& g, const EdgeSet& neg_a, const EdgeSet& neg_b) {
  EdgeMask diff = g.mask_of(neg_a) ^ g.mask_of(neg_b);
  std::vector<std::tuple<EdgeId, VertexId, VertexId, int>> es;
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge_at(i);
    es.emplace_back(e.id, e.u, e.v, (diff >> i & 1) ? -1 : +1);
  }
  return is_balanced(SignedGraph(g.vertices(), es));
}

// Exhaustive minimum over all 2^(|V|-1) switch sets (the first vertex is
// pinned outside).  Exponential, fine at desk scale; ties broken by the
// lexicographically least negative edge-id set.
inline SignedGraph normalize_signature(const SignedGraph& g) {
  const int n = g.vertex_count();
  if (n == 0) return g;
  if (n > 24) throw ResourceLimitError("normalize_signature: vertex count above guard");
  SignedGraph best = g;
  EdgeSet best_neg = negative_edges(g);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n - 1)); ++bits) {
    SwitchSet s;
    for (int i = 0; i + 1 < n; ++i)
      if (bits >> i & 1) s.push_back(g.vertices()[i + 1]);
    SignedGraph cand = switch_at(g, s);
    EdgeSet neg = negative_edges(cand);
    if (neg.size() < best_neg.size() || (neg.size() == best_neg.size() && neg < best_neg)) {
      best = cand;
      best_neg = neg;
    }
  }
  return best;
}

}  // namespace sigcirc
