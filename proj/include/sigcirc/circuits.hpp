#pragma once

// Circuits (connected 2-regular subgraphs, so loops and digons count),
// barbells, and signed circuits.  A signed circuit is a balanced circuit
// or a barbell: two unbalanced circuits sharing exactly one vertex, or
// vertex-disjoint ones joined by a path meeting them only in its
// endpoints.  These are the circuits of the signed-graphic matroid, so
// flow-admissibility is exactly "no coloops".
//
// Enumeration is backtracking with least-edge anchoring: a circuit is
// discovered exactly once, as the unique path closing its smallest edge.
// Output is sorted by (size, lexicographic edge-id list) everywhere, so
// downstream searches are reproducible.

#include <array>
#include <cassert>
#include <optional>
#include <variant>

#include "sigcirc/signing.hpp"

namespace sigcirc {

struct Circuit {
  std::vector<EdgeId> edge_ids;   // traversal order; a loop is a single id
  std::vector<VertexId> verts;    // verts[i] joins edge_ids[i-1], edge_ids[i]

  int size() const { return static_cast<int>(edge_ids.size()); }
  EdgeSet edge_set() const { return normalized(edge_ids); }
};

inline EdgeMask circuit_mask(const SignedGraph& g, const Circuit& c) {
  return g.mask_of(c.edge_ids);
}

inline std::vector<VertexId> circuit_vertices(const Circuit& c) {
  std::vector<VertexId> vs = c.verts;
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

inline bool is_balanced(const SignedGraph& g, const Circuit& c) {
  return negative_count_in(g, c.edge_ids) % 2 == 0;
}

namespace detail {

inline bool circuit_order(const Circuit& a, const Circuit& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.edge_set() < b.edge_set();
}

// All circuits within `mask` whose least edge index is `anchor`.
inline void circuits_anchored(const SignedGraph& g, EdgeMask mask, int anchor,
                              std::vector<Circuit>& out) {
  const Edge& ea = g.edge_at(anchor);
  if (ea.is_loop()) {
    out.push_back(Circuit{{ea.id}, {ea.u}});
    return;
  }
  std::vector<int> path;          // edge indices after the anchor
  std::vector<VertexId> pverts;   // vertices after v, parallel to path
  std::set<VertexId> used = {ea.u, ea.v};

  // verts[i] and verts[(i+1) % size] are the endpoints of edge_ids[i]
  auto emit = [&](int closing) {
    Circuit c;
    c.edge_ids.push_back(ea.id);
    c.verts.push_back(ea.u);
    c.verts.push_back(ea.v);
    for (std::size_t i = 0; i < path.size(); ++i) {
      c.edge_ids.push_back(g.edge_at(path[i]).id);
      c.verts.push_back(pverts[i]);
    }
    c.edge_ids.push_back(g.edge_at(closing).id);
    out.push_back(std::move(c));
  };

  auto dfs = [&](auto&& self, VertexId cur) -> void {
    for (int ei : g.incident(cur)) {
      if (ei <= anchor || !(mask >> ei & 1)) continue;
      const Edge& e = g.edge_at(ei);
      if (e.is_loop()) continue;
      if (std::find(path.begin(), path.end(), ei) != path.end()) continue;
      VertexId w = e.other(cur);
      if (w == ea.u) {
        emit(ei);
        continue;
      }
      if (used.count(w)) continue;
      used.insert(w);
      path.push_back(ei);
      pverts.push_back(w);
      self(self, w);
      pverts.pop_back();
      path.pop_back();
      used.erase(w);
    }
  };
  dfs(dfs, ea.v);
}

}  // namespace detail

inline std::vector<Circuit> enumerate_circuits_in(const SignedGraph& g, EdgeMask mask) {
  std::vector<Circuit> out;
  for (int a = 0; a < g.edge_count(); ++a)
    if (mask >> a & 1) detail::circuits_anchored(g, mask, a, out);
  std::sort(out.begin(), out.end(), detail::circuit_order);
  return out;
}

inline std::vector<Circuit> enumerate_circuits(const SignedGraph& g) {
  return enumerate_circuits_in(g, g.full_mask());
}

// Circuits within `mask` containing the least edge of `mask`.
inline std::vector<Circuit> circuits_through_least_edge(const SignedGraph& g, EdgeMask mask) {
  std::vector<Circuit> out;
  if (mask == 0) return out;
  int a = 0;
  while (!(mask >> a & 1)) ++a;
  detail::circuits_anchored(g, mask, a, out);
  std::sort(out.begin(), out.end(), detail::circuit_order);
  return out;
}

// Deterministic traversal of a circuit given as an edge set.
inline Circuit walk_circuit(const SignedGraph& g, const EdgeSet& ids) {
  if (!is_circuit_edge_set(g, ids))
    throw std::invalid_argument("edge set is not a circuit");
  EdgeSet sorted = normalized(ids);
  const Edge& first = g.edge(sorted.front());
  Circuit c;
  c.edge_ids.push_back(first.id);
  c.verts.push_back(first.u);
  if (first.is_loop()) return c;
  std::set<EdgeId> remaining(sorted.begin() + 1, sorted.end());
  VertexId at = first.v;
  while (!remaining.empty()) {
    c.verts.push_back(at);
    EdgeId next = -1;
    for (EdgeId id : remaining) {
      if (g.edge(id).touches(at)) {
        next = id;
        break;
      }
    }
    assert(next != -1);
    remaining.erase(next);
    c.edge_ids.push_back(next);
    at = g.edge(next).other(at);
  }
  assert(at == first.u);
  return c;
}

struct Barbell {
  Circuit a, b;                 // both unbalanced; a precedes b in circuit order
  std::vector<EdgeId> path;     // empty iff the circuits share exactly one vertex

  EdgeSet edge_set() const {
    EdgeSet s = a.edge_ids;
    s.insert(s.end(), b.edge_ids.begin(), b.edge_ids.end());
    s.insert(s.end(), path.begin(), path.end());
    return normalized(s);
  }
};

struct SignedCircuit {
  std::variant<Circuit, Barbell> value;

  bool is_barbell() const { return std::holds_alternative<Barbell>(value); }
  const Circuit& circuit() const { return std::get<Circuit>(value); }
  const Barbell& barbell() const { return std::get<Barbell>(value); }

  EdgeSet edge_set() const {
    return is_barbell() ? barbell().edge_set() : circuit().edge_set();
  }
};

namespace detail {

// Paths from V(A) to V(B) whose internal vertices avoid both circuits.
inline void connecting_paths(const SignedGraph& g, const std::vector<VertexId>& va,
                             const std::vector<VertexId>& vb,
                             std::vector<std::vector<EdgeId>>& out) {
  std::set<VertexId> in_a(va.begin(), va.end()), in_b(vb.begin(), vb.end());
  std::vector<EdgeId> path;
  std::set<VertexId> visited;
  auto dfs = [&](auto&& self, VertexId cur) -> void {
    for (int ei : g.incident(cur)) {
      const Edge& e = g.edge_at(ei);
      if (e.is_loop()) continue;
      if (std::find(path.begin(), path.end(), e.id) != path.end()) continue;
      VertexId w = e.other(cur);
      if (in_b.count(w)) {
        path.push_back(e.id);
        out.push_back(path);
        path.pop_back();
        continue;
      }
      if (in_a.count(w) || visited.count(w)) continue;
      visited.insert(w);
      path.push_back(e.id);
      self(self, w);
      path.pop_back();
      visited.erase(w);
    }
  };
  for (VertexId x : va) {
    visited = {x};
    dfs(dfs, x);
  }
}

inline int shared_vertex_count(const Circuit& a, const Circuit& b) {
  auto va = circuit_vertices(a), vb = circuit_vertices(b);
  std::vector<VertexId> common;
  std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(common));
  return static_cast<int>(common.size());
}

}  // namespace detail

inline std::vector<Barbell> enumerate_barbells(const SignedGraph& g) {
  std::vector<Circuit> unbalanced;
  for (Circuit& c : enumerate_circuits(g))
    if (!is_balanced(g, c)) unbalanced.push_back(std::move(c));
  std::vector<Barbell> out;
  std::set<EdgeSet> seen;
  for (std::size_t i = 0; i < unbalanced.size(); ++i) {
    for (std::size_t j = i + 1; j < unbalanced.size(); ++j) {
      const Circuit &a = unbalanced[i], &b = unbalanced[j];
      int shared = detail::shared_vertex_count(a, b);
      if (shared == 1) {
        Barbell bb{a, b, {}};
        if (seen.insert(bb.edge_set()).second) out.push_back(std::move(bb));
      } else if (shared == 0) {
        std::vector<std::vector<EdgeId>> paths;
        detail::connecting_paths(g, circuit_vertices(a), circuit_vertices(b), paths);
        for (auto& p : paths) {
          Barbell bb{a, b, p};
          if (seen.insert(bb.edge_set()).second) out.push_back(std::move(bb));
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Barbell& x, const Barbell& y) {
    EdgeSet sx = x.edge_set(), sy = y.edge_set();
    if (sx.size() != sy.size()) return sx.size() < sy.size();
    return sx < sy;
  });
  return out;
}

inline std::vector<SignedCircuit> enumerate_signed_circuits(const SignedGraph& g) {
  std::vector<SignedCircuit> out;
  std::set<EdgeSet> seen;
  for (Circuit& c : enumerate_circuits(g)) {
    if (!is_balanced(g, c)) continue;
    if (seen.insert(c.edge_set()).second) out.push_back(SignedCircuit{std::move(c)});
  }
  for (Barbell& b : enumerate_barbells(g))
    if (seen.insert(b.edge_set()).second) out.push_back(SignedCircuit{std::move(b)});
  std::sort(out.begin(), out.end(), [](const SignedCircuit& x, const SignedCircuit& y) {
    EdgeSet sx = x.edge_set(), sy = y.edge_set();
    if (sx.size() != sy.size()) return sx.size() < sy.size();
    return sx < sy;
  });
  return out;
}

// Edges lying in no signed circuit.
inline EdgeSet coloops(const SignedGraph& g) {
  EdgeMask covered = 0;
  for (const SignedCircuit& sc : enumerate_signed_circuits(g)) covered |= g.mask_of(sc.edge_set());
  return g.edge_set(g.full_mask() & ~covered);
}

inline bool is_flow_admissible(const SignedGraph& g) { return coloops(g).empty(); }

inline std::optional<std::pair<Circuit, Circuit>> edge_disjoint_unbalanced_pair(const SignedGraph& g) {
  std::vector<Circuit> unbalanced;
  for (Circuit& c : enumerate_circuits(g))
    if (!is_balanced(g, c)) unbalanced.push_back(std::move(c));
  for (std::size_t i = 0; i < unbalanced.size(); ++i)
    for (std::size_t j = i + 1; j < unbalanced.size(); ++j)
      if ((circuit_mask(g, unbalanced[i]) & circuit_mask(g, unbalanced[j])) == 0)
        return std::make_pair(unbalanced[i], unbalanced[j]);
  return std::nullopt;
}

inline std::optional<std::array<Circuit, 3>> three_edge_disjoint_unbalanced(const SignedGraph& g) {
  std::vector<Circuit> unbalanced;
  for (Circuit& c : enumerate_circuits(g))
    if (!is_balanced(g, c)) unbalanced.push_back(std::move(c));
  const std::size_t n = unbalanced.size();
  std::vector<EdgeMask> masks(n);
  for (std::size_t i = 0; i < n; ++i) masks[i] = circuit_mask(g, unbalanced[i]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (masks[i] & masks[j]) continue;
      for (std::size_t k = j + 1; k < n; ++k)
        if (!((masks[i] | masks[j]) & masks[k]))
          return std::array<Circuit, 3>{unbalanced[i], unbalanced[j], unbalanced[k]};
    }
  return std::nullopt;
}

// Number of balanced circuits among the three circuits of a theta
// subgraph (two vertices joined by three internally disjoint paths).
inline int theta_balance_profile(const SignedGraph& g, const EdgeSet& theta) {
  EdgeMask mask = g.mask_of(theta);
  std::map<VertexId, int> degree;
  for (EdgeId id : theta) {
    const Edge& e = g.edge(id);
    if (e.is_loop()) throw std::invalid_argument("theta subgraphs are loop-free");
    degree[e.u] += 1;
    degree[e.v] += 1;
  }
  int deg3 = 0;
  for (const auto& [v, d] : degree) {
    if (d == 3)
      ++deg3;
    else if (d != 2)
      throw std::invalid_argument("not a theta: vertex of degree " + std::to_string(d));
  }
  if (deg3 != 2) throw std::invalid_argument("not a theta: branch vertex count != 2");
  auto label = detail::component_labels(g, mask);
  int root = -1;
  for (const auto& [v, d] : degree) {
    int l = label[g.vertex_index(v)];
    if (root == -1) root = l;
    if (l != root) throw std::invalid_argument("not a theta: disconnected");
  }
  auto circuits = enumerate_circuits_in(g, mask);
  assert(circuits.size() == 3);
  int balanced = 0;
  for (const Circuit& c : circuits) balanced += is_balanced(g, c);
  return balanced;
}

// Structural validation used by cover verification: does this edge set
// form a signed circuit, and if so which kind?
inline std::optional<SignedCircuit> classify_signed_circuit(const SignedGraph& g, const EdgeSet& ids) {
  EdgeSet set = normalized(ids);
  if (set.empty()) return std::nullopt;
  EdgeMask mask = g.mask_of(set);
  if (detail::edge_set_is_circuit(g, mask)) {
    Circuit c = walk_circuit(g, set);
    if (!is_balanced(g, c)) return std::nullopt;
    return SignedCircuit{std::move(c)};
  }
  auto circuits = enumerate_circuits_in(g, mask);
  for (std::size_t i = 0; i < circuits.size(); ++i) {
    for (std::size_t j = i + 1; j < circuits.size(); ++j) {
      const Circuit &a = circuits[i], &b = circuits[j];
      EdgeMask ma = circuit_mask(g, a), mb = circuit_mask(g, b);
      if (ma & mb) continue;
      if (is_balanced(g, a) || is_balanced(g, b)) continue;
      EdgeMask rest = mask & ~(ma | mb);
      int shared = detail::shared_vertex_count(a, b);
      if (rest == 0 && shared == 1) return SignedCircuit{Barbell{a, b, {}}};
      if (rest != 0 && shared == 0) {
        // rest must be a path joining the circuits, internally off both
        std::vector<std::vector<EdgeId>> paths;
        detail::connecting_paths(g, circuit_vertices(a), circuit_vertices(b), paths);
        for (auto& p : paths)
          if (g.mask_of(p) == rest) return SignedCircuit{Barbell{a, b, p}};
      }
    }
  }
  return std::nullopt;
}

}  // namespace sigcirc
