#pragma once

// Circuit decompositions of even graphs, decompositions that are optimal
// under the (most unbalanced circuits, then most circuits) key, the
// intersection graph H of a decomposition, necklaces (signed
// subdivisions of a doubled k-cycle with all small circuits balanced and
// all long circuits unbalanced), and two constructive facts used by the
// sweep: every Eulerian graph with a degree-4 vertex has, for any given
// circuit, an edge-disjoint circuit whose removal keeps the rest
// connected up to isolated vertices; and every 2-connected graph on at
// least three vertices has, for any vertex v, an edge avoiding v whose
// endpoint pair can be deleted without disconnecting the graph.

#include "sigcirc/circuits.hpp"

namespace sigcirc {

struct CircuitDecomposition {
  std::vector<Circuit> circuits;

  int size() const { return static_cast<int>(circuits.size()); }
  int unbalanced_count(const SignedGraph& g) const {
    int n = 0;
    for (const Circuit& c : circuits) n += !is_balanced(g, c);
    return n;
  }
  // Canonical serialization used for ordering and deduplication.
  std::vector<EdgeSet> signature() const {
    std::vector<EdgeSet> sig;
    for (const Circuit& c : circuits) sig.push_back(c.edge_set());
    std::sort(sig.begin(), sig.end());
    return sig;
  }
};

inline void validate_decomposition(const SignedGraph& g, const CircuitDecomposition& d) {
  EdgeMask seen = 0;
  for (const Circuit& c : d.circuits) {
    EdgeMask m = circuit_mask(g, c);
    if (!detail::edge_set_is_circuit(g, m))
      throw std::invalid_argument("decomposition member is not a circuit");
    if (seen & m) throw std::invalid_argument("decomposition members overlap");
    seen |= m;
  }
  if (seen != g.full_mask())
    throw std::invalid_argument("decomposition does not cover every edge");
}

// Hierholzer walk per edge-bearing component, split at repeated vertices.
inline CircuitDecomposition one_decomposition(const SignedGraph& g) {
  for (VertexId v : g.vertices())
    if (g.degree(v) % 2 != 0)
      throw std::invalid_argument("vertex " + std::to_string(v) + " has odd degree");
  CircuitDecomposition out;
  std::vector<bool> used(g.edge_count(), false);
  std::vector<std::size_t> cursor(g.vertex_count(), 0);
  for (VertexId start : g.vertices()) {
    if (g.degree(start) == 0) continue;
    bool fresh = false;
    for (int ei : g.incident(start)) fresh |= !used[ei];
    if (!fresh) continue;

    // closed walk through every unused edge of this component
    std::vector<std::pair<VertexId, int>> stack{{start, -1}};
    std::vector<int> tour;
    while (!stack.empty()) {
      auto [v, entered] = stack.back();
      int vi = g.vertex_index(v);
      const auto& inc = g.incident(v);
      while (cursor[vi] < inc.size() && used[inc[cursor[vi]]]) ++cursor[vi];
      if (cursor[vi] < inc.size()) {
        int ei = inc[cursor[vi]];
        used[ei] = true;
        stack.push_back({g.edge_at(ei).other(v), ei});
      } else {
        stack.pop_back();
        if (entered >= 0) tour.push_back(entered);
      }
    }
    std::reverse(tour.begin(), tour.end());

    // split the closed walk into circuits at vertex repeats
    std::vector<VertexId> vstack{start};
    std::vector<int> estack;
    std::map<VertexId, int> depth{{start, 0}};
    VertexId at = start;
    for (int ei : tour) {
      VertexId w = g.edge_at(ei).other(at);
      estack.push_back(ei);
      auto it = depth.find(w);
      if (it != depth.end()) {
        int p = it->second;
        Circuit c;
        for (std::size_t i = p; i < estack.size(); ++i) c.edge_ids.push_back(g.edge_at(estack[i]).id);
        for (std::size_t i = p; i < vstack.size(); ++i) c.verts.push_back(vstack[i]);
        out.circuits.push_back(std::move(c));
        for (std::size_t i = p + 1; i < vstack.size(); ++i) depth.erase(vstack[i]);
        vstack.resize(p + 1);
        estack.resize(p);
        at = w;
      } else {
        vstack.push_back(w);
        depth[w] = static_cast<int>(vstack.size()) - 1;
        at = w;
      }
    }
  }
  std::sort(out.circuits.begin(), out.circuits.end(), detail::circuit_order);
  return out;
}

// Every circuit decomposition, each exactly once: recursively peel every
// circuit through the least uncovered edge.  Exact but exponential.
inline std::vector<CircuitDecomposition> all_decompositions(const SignedGraph& g,
                                                            int max_edges = 14) {
  for (VertexId v : g.vertices())
    if (g.degree(v) % 2 != 0)
      throw std::invalid_argument("vertex " + std::to_string(v) + " has odd degree");
  if (g.edge_count() > max_edges)
    throw ResourceLimitError("all_decompositions: edge count above guard");
  std::vector<CircuitDecomposition> out;
  CircuitDecomposition current;
  auto recurse = [&](auto&& self, EdgeMask remaining) -> void {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (Circuit& c : circuits_through_least_edge(g, remaining)) {
      EdgeMask m = circuit_mask(g, c);
      current.circuits.push_back(std::move(c));
      self(self, remaining & ~m);
      current.circuits.pop_back();
    }
  };
  recurse(recurse, g.full_mask());
  return out;
}

struct OptimalDecomposition {
  CircuitDecomposition decomposition;
  bool certified = false;  // true iff obtained by exhaustive search
};

namespace detail {

// (more unbalanced, then more circuits) wins; ties to the least signature.
inline bool decomposition_better(const SignedGraph& g, const CircuitDecomposition& a,
                                 const CircuitDecomposition& b) {
  int ua = a.unbalanced_count(g), ub = b.unbalanced_count(g);
  if (ua != ub) return ua > ub;
  if (a.size() != b.size()) return a.size() > b.size();
  return a.signature() < b.signature();
}

}  // namespace detail

inline OptimalDecomposition optimal_decomposition(const SignedGraph& g, int max_edges = 14) {
  if (g.edge_count() <= max_edges) {
    auto all = all_decompositions(g, max_edges);
    assert(!all.empty());
    const CircuitDecomposition* best = &all[0];
    for (const auto& d : all)
      if (detail::decomposition_better(g, d, *best)) best = &d;
    return OptimalDecomposition{*best, true};
  }
  // Greedy fallback, not certified optimal: peel unbalanced circuits first.
  for (VertexId v : g.vertices())
    if (g.degree(v) % 2 != 0)
      throw std::invalid_argument("vertex " + std::to_string(v) + " has odd degree");
  CircuitDecomposition d;
  EdgeMask remaining = g.full_mask();
  while (remaining) {
    auto candidates = circuits_through_least_edge(g, remaining);
    assert(!candidates.empty());
    const Circuit* pick = nullptr;
    for (const Circuit& c : candidates)
      if (!is_balanced(g, c)) {
        pick = &c;
        break;
      }
    if (!pick) pick = &candidates.front();
    remaining &= ~circuit_mask(g, *pick);
    d.circuits.push_back(*pick);
  }
  return OptimalDecomposition{std::move(d), false};
}

struct IntersectionGraph {
  std::vector<bool> balanced;             // per decomposition member
  std::vector<std::vector<int>> shared;   // shared-vertex counts, diagonal 0

  int order() const { return static_cast<int>(balanced.size()); }
  bool adjacent(int i, int j) const { return i != j && shared[i][j] > 0; }
  int degree(int i) const {
    int d = 0;
    for (int j = 0; j < order(); ++j) d += adjacent(i, j);
    return d;
  }
};

inline IntersectionGraph intersection_graph(const SignedGraph& g, const CircuitDecomposition& d) {
  validate_decomposition(g, d);
  const int n = d.size();
  IntersectionGraph h;
  h.balanced.resize(n);
  h.shared.assign(n, std::vector<int>(n, 0));
  std::vector<std::vector<VertexId>> verts(n);
  for (int i = 0; i < n; ++i) {
    h.balanced[i] = is_balanced(g, d.circuits[i]);
    verts[i] = circuit_vertices(d.circuits[i]);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::vector<VertexId> common;
      std::set_intersection(verts[i].begin(), verts[i].end(), verts[j].begin(), verts[j].end(),
                            std::back_inserter(common));
      h.shared[i][j] = h.shared[j][i] = static_cast<int>(common.size());
    }
  return h;
}

// ---------------------------------------------------------------------
// Necklaces

struct NecklaceStructure {
  int length = 0;                                        // k
  std::vector<VertexId> hubs;                            // cyclic order
  std::vector<std::array<std::vector<EdgeId>, 2>> bead_paths;  // per bead, hub i -> hub i+1
  std::vector<Circuit> small_circuits;                   // per bead
  std::vector<std::pair<VertexId, VertexId>> ends;       // per bead
  std::vector<int> path_lengths;                         // 2k, bead-major
  std::pair<EdgeId, EdgeId> negative_pair{-1, -1};       // representative signature
};

inline std::optional<NecklaceStructure> detect_necklace(const SignedGraph& g) {
  if (g.edge_count() == 0 || !is_connected(g)) return std::nullopt;
  for (const Edge& e : g.edges())
    if (e.is_loop()) return std::nullopt;
  std::vector<VertexId> hubs;
  for (VertexId v : g.vertices()) {
    int d = g.degree(v);
    if (d == 4)
      hubs.push_back(v);
    else if (d != 2)
      return std::nullopt;
  }
  const int k = static_cast<int>(hubs.size());
  if (k < 3) return std::nullopt;
  std::set<VertexId> hub_set(hubs.begin(), hubs.end());

  // maximal paths between hubs through degree-2 vertices
  struct Path {
    VertexId from, to;
    std::vector<EdgeId> edges;
  };
  std::vector<Path> paths;
  std::set<EdgeId> path_seen;
  for (VertexId h : hubs) {
    for (int ei : g.incident(h)) {
      if (path_seen.count(g.edge_at(ei).id)) continue;
      Path p{h, -1, {}};
      VertexId at = h;
      int cur = ei;
      while (true) {
        const Edge& e = g.edge_at(cur);
        p.edges.push_back(e.id);
        at = e.other(at);
        if (hub_set.count(at)) break;
        int next = -1;
        for (int fj : g.incident(at))
          if (fj != cur) next = fj;
        cur = next;
      }
      p.to = at;
      if (p.to == p.from) return std::nullopt;  // path returns to its hub
      for (EdgeId id : p.edges) path_seen.insert(id);
      paths.push_back(std::move(p));
    }
  }

  // the reduced graph on hubs must be a doubled k-cycle
  std::map<std::pair<VertexId, VertexId>, std::vector<int>> bundle;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    auto key = std::minmax(paths[i].from, paths[i].to);
    bundle[{key.first, key.second}].push_back(static_cast<int>(i));
  }
  std::map<VertexId, std::vector<VertexId>> hub_neighbors;
  for (const auto& [key, ids] : bundle) {
    if (ids.size() != 2) return std::nullopt;
    hub_neighbors[key.first].push_back(key.second);
    hub_neighbors[key.second].push_back(key.first);
  }
  for (VertexId h : hubs)
    if (static_cast<int>(hub_neighbors[h].size()) != 2) return std::nullopt;
  // walk the hub cycle from the least hub toward its lesser neighbour
  std::vector<VertexId> order{hubs.front()};
  {
    auto nb = hub_neighbors[order[0]];
    std::sort(nb.begin(), nb.end());
    VertexId prev = order[0], at = nb[0];
    while (at != order[0]) {
      order.push_back(at);
      auto& next_nb = hub_neighbors[at];
      VertexId nxt = next_nb[0] == prev ? next_nb[1] : next_nb[0];
      prev = at;
      at = nxt;
    }
  }
  if (static_cast<int>(order.size()) != k) return std::nullopt;  // more than one cycle

  NecklaceStructure ns;
  ns.length = k;
  ns.hubs = order;
  for (int i = 0; i < k; ++i) {
    VertexId a = order[i], b = order[(i + 1) % k];
    auto key = std::minmax(a, b);
    const auto& ids = bundle.at({key.first, key.second});
    std::array<std::vector<EdgeId>, 2> pair;
    for (int t = 0; t < 2; ++t) {
      Path p = paths[ids[t]];
      if (p.from != a) std::reverse(p.edges.begin(), p.edges.end());
      pair[t] = p.edges;
    }
    if (std::make_pair(pair[1].size(), pair[1]) < std::make_pair(pair[0].size(), pair[0]))
      std::swap(pair[0], pair[1]);
    EdgeSet small = pair[0];
    small.insert(small.end(), pair[1].begin(), pair[1].end());
    ns.bead_paths.push_back(pair);
    ns.small_circuits.push_back(walk_circuit(g, small));
    ns.ends.emplace_back(a, b);
    ns.path_lengths.push_back(static_cast<int>(pair[0].size()));
    ns.path_lengths.push_back(static_cast<int>(pair[1].size()));
  }

  // sign condition: small circuits balanced, everything else unbalanced
  for (const Circuit& c : enumerate_circuits(g)) {
    int on_hubs = 0;
    for (VertexId v : circuit_vertices(c)) on_hubs += hub_set.count(v);
    bool small = on_hubs == 2;
    if (is_balanced(g, c) != small) return std::nullopt;
  }

  // representative signature: one negative edge on each path of bead 0
  EdgeId e1 = ns.bead_paths[0][0].front(), e2 = ns.bead_paths[0][1].front();
  ns.negative_pair = std::minmax(e1, e2);
  assert(signatures_equivalent(g, negative_edges(g), {ns.negative_pair.first, ns.negative_pair.second}));
  return ns;
}

// Signed subdivision of a doubled k-cycle: bead i joins hubs i and i+1
// with two paths of the given lengths (bead-major order), and the two
// negative edges sit on the two paths of bead `neg_bead`.
inline SignedGraph build_necklace(int k, const std::vector<int>& path_lengths, int neg_bead = 0) {
  if (k < 3) throw std::invalid_argument("necklace length must be at least 3");
  if (static_cast<int>(path_lengths.size()) != 2 * k)
    throw std::invalid_argument("need exactly 2k path lengths");
  for (int len : path_lengths)
    if (len < 1) throw std::invalid_argument("path lengths must be positive");
  if (neg_bead < 0 || neg_bead >= k)
    throw std::invalid_argument("negative-pair bead index out of range");
  std::vector<VertexId> vertices;
  for (int i = 0; i < k; ++i) vertices.push_back(i);
  std::vector<std::tuple<EdgeId, VertexId, VertexId, int>> edges;
  VertexId next_vertex = k;
  EdgeId next_edge = 0;
  for (int bead = 0; bead < k; ++bead) {
    VertexId a = bead, b = (bead + 1) % k;
    for (int t = 0; t < 2; ++t) {
      int len = path_lengths[2 * bead + t];
      VertexId at = a;
      for (int step = 0; step < len; ++step) {
        VertexId to = (step + 1 == len) ? b : next_vertex++;
        if (to != b) vertices.push_back(to);
        int sign = (bead == neg_bead && step == 0) ? -1 : +1;
        edges.emplace_back(next_edge++, at, to, sign);
        at = to;
      }
    }
  }
  return SignedGraph(std::move(vertices), edges);
}

// ---------------------------------------------------------------------
// Constructive facts

// For Eulerian g with a vertex of degree >= 4 and a circuit c of g:
// an edge-disjoint circuit whose removal leaves g connected up to
// isolated vertices.  Realized as a leaf, other than c, of a spanning
// tree of the graph determined by a decomposition containing c.
inline Circuit nonseparating_disjoint_circuit(const SignedGraph& g, const Circuit& c) {
  if (!is_eulerian(g) || g.max_degree() < 4)
    throw std::invalid_argument("requires an Eulerian graph with maximum degree >= 4");
  EdgeMask cm = circuit_mask(g, c);
  if (!detail::edge_set_is_circuit(g, cm)) throw std::invalid_argument("c is not a circuit of g");
  CircuitDecomposition d;
  d.circuits.push_back(c);
  for (Circuit& rest : one_decomposition(remove_edges(g, c.edge_set())).circuits)
    d.circuits.push_back(std::move(rest));
  IntersectionGraph h = intersection_graph(g, d);
  assert(h.order() >= 2);
  // BFS tree rooted at c (member 0); any leaf other than the root works
  std::vector<int> parent(h.order(), -1), children(h.order(), 0);
  std::vector<int> queue{0};
  parent[0] = 0;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    int i = queue[qi];
    for (int j = 0; j < h.order(); ++j) {
      if (parent[j] == -1 && h.adjacent(i, j)) {
        parent[j] = i;
        ++children[i];
        queue.push_back(j);
      }
    }
  }
  for (int j = 1; j < h.order(); ++j) {
    if (children[j] == 0) {
      assert(connected_up_to_isolated(remove_edges(g, d.circuits[j].edge_set())));
      return d.circuits[j];
    }
  }
  throw std::logic_error("spanning tree of H has no leaf other than the root");
}

// For 2-connected g with |V| >= 3 and a vertex v: an edge e avoiding v
// with g - V(e) connected, found on a longest circuit through v.
inline EdgeId removable_edge(const SignedGraph& g, VertexId v) {
  (void)g.vertex_index(v);
  if (g.vertex_count() < 3 || !is_two_connected(g))
    throw std::invalid_argument("requires a 2-connected graph on at least 3 vertices");
  std::vector<Circuit> through;
  for (Circuit& c : enumerate_circuits(g)) {
    auto vs = circuit_vertices(c);
    if (std::binary_search(vs.begin(), vs.end(), v)) through.push_back(std::move(c));
  }
  assert(!through.empty());
  const Circuit* longest = &through[0];
  for (const Circuit& c : through)
    if (c.size() > longest->size()) longest = &c;
  EdgeSet candidates;
  for (EdgeId id : longest->edge_ids)
    if (!g.edge(id).touches(v)) candidates.push_back(id);
  std::sort(candidates.begin(), candidates.end());
  for (EdgeId id : candidates) {
    const Edge& e = g.edge(id);
    if (is_connected(remove_vertices(g, {e.u, e.v}))) return id;
  }
  throw std::logic_error("no edge of the longest circuit is removable");
}

// Proper bipartition of E(g) into two flow-admissible Eulerian parts.
inline std::optional<std::pair<EdgeSet, EdgeSet>> cover_decompose(const SignedGraph& g,
                                                                  int max_edges = 22) {
  if (!is_eulerian(g)) throw std::invalid_argument("requires an Eulerian graph");
  if (g.edge_count() > max_edges)
    throw ResourceLimitError("cover_decompose: edge count above guard");
  const int m = g.edge_count();
  const EdgeMask full = g.full_mask();
  auto part_ok = [&](EdgeMask mask) {
    std::map<int, int> degree;
    for (int i = 0; i < m; ++i) {
      if (!(mask >> i & 1)) continue;
      const Edge& e = g.edge_at(i);
      degree[g.vertex_index(e.u)] += e.is_loop() ? 2 : 1;
      if (!e.is_loop()) degree[g.vertex_index(e.v)] += 1;
    }
    for (const auto& [vi, d] : degree)
      if (d % 2 != 0) return false;
    auto label = detail::component_labels(g, mask);
    int root = -1;
    for (const auto& [vi, d] : degree) {
      if (root == -1) root = label[vi];
      if (label[vi] != root) return false;
    }
    return is_flow_admissible(subgraph_by_edges(g, g.edge_set(mask)));
  };
  // fix edge 0 into the first part so each split is tried once
  for (EdgeMask mask = 1; mask < full; mask += 2) {
    EdgeMask other = full & ~mask;
    if (other == 0) continue;
    if (part_ok(mask) && part_ok(other))
      return std::make_pair(g.edge_set(mask), g.edge_set(other));
  }
  return std::nullopt;
}

}  // namespace sigcirc
