#pragma once

// Multigraph substrate for signed graphs: loops and parallel edges are
// allowed, every edge carries a sign in {+1,-1}.  Graphs are immutable
// after construction; all algorithms in this library are free functions
// over const references and may run concurrently on shared graphs.
//
// Edge sets are handled in two forms: a sorted vector of EdgeIds at API
// boundaries, and a 64-bit mask over edge *indices* internally (graphs
// are capped at 64 edges, which is far above desk scale).

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace sigcirc {

using VertexId = int;
using EdgeId = int;
using EdgeSet = std::vector<EdgeId>;  // kept sorted and duplicate-free
using EdgeMask = std::uint64_t;

// Thrown when an exact search exceeds its size guard or node budget.
// Callers must treat this as "unknown", never as a negative answer.
struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Edge {
  EdgeId id = -1;
  VertexId u = -1;
  VertexId v = -1;
  int sign = +1;

  bool is_loop() const { return u == v; }
  bool touches(VertexId w) const { return u == w || v == w; }
  VertexId other(VertexId w) const { return w == u ? v : u; }
};

class SignedGraph {
 public:
  static constexpr int kMaxEdges = 64;

  SignedGraph() = default;

  // `edge_list` entries are (id, u, v, sign).  Endpoints must be declared
  // vertices, ids unique, signs in {+1,-1}.
  SignedGraph(std::vector<VertexId> vertices,
              const std::vector<std::tuple<EdgeId, VertexId, VertexId, int>>& edge_list) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    vertices_ = std::move(vertices);
    for (const auto& [id, u, v, s] : edge_list) {
      if (s != +1 && s != -1) throw std::invalid_argument("edge sign must be +1 or -1");
      edges_.push_back(Edge{id, u, v, s});
    }
    std::sort(edges_.begin(), edges_.end(),
              [](const Edge& a, const Edge& b) { return a.id < b.id; });
    if (static_cast<int>(edges_.size()) > kMaxEdges)
      throw ResourceLimitError("graph exceeds the 64-edge cap");
    for (std::size_t i = 0; i + 1 < edges_.size(); ++i)
      if (edges_[i].id == edges_[i + 1].id)
        throw std::invalid_argument("duplicate edge id " + std::to_string(edges_[i].id));
    for (std::size_t i = 0; i < vertices_.size(); ++i) vindex_[vertices_[i]] = static_cast<int>(i);
    adjacency_.assign(vertices_.size(), {});
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const Edge& e = edges_[i];
      if (!vindex_.count(e.u) || !vindex_.count(e.v))
        throw std::invalid_argument("edge " + std::to_string(e.id) + " references undeclared vertex");
      eindex_[e.id] = static_cast<int>(i);
      adjacency_[vindex_.at(e.u)].push_back(static_cast<int>(i));
      if (!e.is_loop()) adjacency_[vindex_.at(e.v)].push_back(static_cast<int>(i));
    }
  }

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_vertex(VertexId v) const { return vindex_.count(v) > 0; }
  bool has_edge(EdgeId e) const { return eindex_.count(e) > 0; }

  int vertex_index(VertexId v) const {
    auto it = vindex_.find(v);
    if (it == vindex_.end()) throw std::invalid_argument("unknown vertex " + std::to_string(v));
    return it->second;
  }
  int edge_index(EdgeId e) const {
    auto it = eindex_.find(e);
    if (it == eindex_.end()) throw std::invalid_argument("unknown edge " + std::to_string(e));
    return it->second;
  }

  const Edge& edge(EdgeId e) const { return edges_[edge_index(e)]; }
  const Edge& edge_at(int index) const { return edges_[index]; }

  // Edge indices incident to the vertex; a loop appears once here but
  // contributes 2 to the degree.
  const std::vector<int>& incident(VertexId v) const { return adjacency_[vertex_index(v)]; }

  int degree(VertexId v) const {
    int d = 0;
    for (int ei : incident(v)) d += edges_[ei].is_loop() ? 2 : 1;
    return d;
  }

  int max_degree() const {
    int d = 0;
    for (VertexId v : vertices_) d = std::max(d, degree(v));
    return d;
  }
  int min_degree() const {
    if (vertices_.empty()) return 0;
    int d = degree(vertices_[0]);
    for (VertexId v : vertices_) d = std::min(d, degree(v));
    return d;
  }

  int negative_count() const {
    int n = 0;
    for (const Edge& e : edges_) n += e.sign < 0;
    return n;
  }

  EdgeMask full_mask() const {
    return edges_.empty() ? 0 : (edges_.size() == 64 ? ~EdgeMask{0} : ((EdgeMask{1} << edges_.size()) - 1));
  }

  EdgeMask mask_of(const EdgeSet& ids) const {
    EdgeMask m = 0;
    for (EdgeId e : ids) m |= EdgeMask{1} << edge_index(e);
    return m;
  }

  EdgeSet edge_set(EdgeMask m) const {
    EdgeSet out;
    for (int i = 0; i < edge_count(); ++i)
      if (m >> i & 1) out.push_back(edges_[i].id);
    return out;
  }

  // Value-semantics helper: same vertices, same edges (id, endpoints, sign).
  friend bool operator==(const SignedGraph& a, const SignedGraph& b) {
    if (a.vertices_ != b.vertices_ || a.edges_.size() != b.edges_.size()) return false;
    for (std::size_t i = 0; i < a.edges_.size(); ++i) {
      const Edge &x = a.edges_[i], &y = b.edges_[i];
      if (x.id != y.id || x.u != y.u || x.v != y.v || x.sign != y.sign) return false;
    }
    return true;
  }

 private:
  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
  std::map<VertexId, int> vindex_;
  std::map<EdgeId, int> eindex_;
  std::vector<std::vector<int>> adjacency_;
};

inline EdgeSet normalized(EdgeSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

inline EdgeSet loops(const SignedGraph& g) {
  EdgeSet out;
  for (const Edge& e : g.edges())
    if (e.is_loop()) out.push_back(e.id);
  return out;
}

namespace detail {

// Union of vertex components restricted to edges in `mask`.
inline std::vector<int> component_labels(const SignedGraph& g, EdgeMask mask) {
  const int n = g.vertex_count();
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < g.edge_count(); ++i) {
    if (!(mask >> i & 1)) continue;
    const Edge& e = g.edge_at(i);
    int a = find(g.vertex_index(e.u)), b = find(g.vertex_index(e.v));
    if (a != b) parent[a] = b;
  }
  std::vector<int> label(n);
  for (int i = 0; i < n; ++i) label[i] = find(i);
  return label;
}

}  // namespace detail

struct Components {
  std::vector<EdgeSet> edge_parts;      // one per component carrying edges
  std::vector<VertexId> isolated;       // degree-0 vertices
  bool connected_up_to_isolated = false;  // exactly one part carries edges
};

inline Components components(const SignedGraph& g) {
  Components out;
  auto label = detail::component_labels(g, g.full_mask());
  std::map<int, EdgeSet> parts;
  for (const Edge& e : g.edges()) parts[label[g.vertex_index(e.u)]].push_back(e.id);
  for (auto& [root, ids] : parts) out.edge_parts.push_back(normalized(ids));
  for (VertexId v : g.vertices())
    if (g.degree(v) == 0) out.isolated.push_back(v);
  out.connected_up_to_isolated = out.edge_parts.size() == 1;
  return out;
}

inline bool connected_up_to_isolated(const SignedGraph& g) {
  return components(g).connected_up_to_isolated;
}

inline bool is_connected(const SignedGraph& g) {
  if (g.vertex_count() == 0) return false;
  auto label = detail::component_labels(g, g.full_mask());
  for (int i = 1; i < g.vertex_count(); ++i)
    if (label[i] != label[0]) return false;
  return true;
}

// Connected with all degrees even; needs at least one edge.
inline bool is_eulerian(const SignedGraph& g) {
  if (g.edge_count() == 0) return false;
  for (VertexId v : g.vertices())
    if (g.degree(v) % 2 != 0) return false;
  return is_connected(g);
}

inline bool is_even(const SignedGraph& g) {
  for (VertexId v : g.vertices())
    if (g.degree(v) % 2 != 0) return false;
  return true;
}

// Subgraph on the given edges.  Vertices are the edge endpoints plus
// `extra_vertices`; original vertex and edge ids are retained.
inline SignedGraph subgraph_by_edges(const SignedGraph& g, const EdgeSet& ids,
                                     const std::vector<VertexId>& extra_vertices = {}) {
  std::vector<VertexId> verts = extra_vertices;
  std::vector<std::tuple<EdgeId, VertexId, VertexId, int>> es;
  for (EdgeId id : ids) {
    const Edge& e = g.edge(id);
    verts.push_back(e.u);
    verts.push_back(e.v);
    es.emplace_back(e.id, e.u, e.v, e.sign);
  }
  return SignedGraph(std::move(verts), es);
}

inline SignedGraph remove_edges(const SignedGraph& g, const EdgeSet& ids) {
  EdgeMask drop = g.mask_of(ids);
  std::vector<std::tuple<EdgeId, VertexId, VertexId, int>> es;
  for (int i = 0; i < g.edge_count(); ++i) {
    if (drop >> i & 1) continue;
    const Edge& e = g.edge_at(i);
    es.emplace_back(e.id, e.u, e.v, e.sign);
  }
  return SignedGraph(g.vertices(), es);
}

inline SignedGraph remove_vertices(const SignedGraph& g, const std::vector<VertexId>& vs) {
  std::set<VertexId> drop(vs.begin(), vs.end());
  std::vector<VertexId> verts;
  for (VertexId v : g.vertices())
    if (!drop.count(v)) verts.push_back(v);
  std::vector<std::tuple<EdgeId, VertexId, VertexId, int>> es;
  for (const Edge& e : g.edges())
    if (!drop.count(e.u) && !drop.count(e.v)) es.emplace_back(e.id, e.u, e.v, e.sign);
  return SignedGraph(std::move(verts), es);
}

inline SignedGraph without_loops(const SignedGraph& g) { return remove_edges(g, loops(g)); }

// Standard 2-vertex-connectivity; loops are ignored.  A digon on two
// vertices counts, a single vertex does not.
inline bool is_two_connected(const SignedGraph& g) {
  SignedGraph h = without_loops(g);
  const int n = h.vertex_count();
  if (n < 2) return false;
  if (!is_connected(h)) return false;
  if (n == 2) return h.edge_count() >= 2;
  for (VertexId v : h.vertices()) {
    SignedGraph r = remove_vertices(h, {v});
    if (!is_connected(r)) return false;
  }
  return true;
}

inline EdgeSet bridges(const SignedGraph& g) {
  EdgeSet out;
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) continue;
    SignedGraph r = remove_edges(g, {e.id});
    auto label = detail::component_labels(r, r.full_mask());
    if (label[r.vertex_index(e.u)] != label[r.vertex_index(e.v)]) out.push_back(e.id);
  }
  return normalized(out);
}

inline bool is_two_edge_connected(const SignedGraph& g) {
  return g.edge_count() > 0 && is_connected(g) && bridges(g).empty();
}

}  // namespace sigcirc
