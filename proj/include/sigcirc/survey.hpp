#pragma once

// Exhaustive generation of small signed graphs up to switching-isomorphism
// and a property sweep over them.  Canonicalization is brute force over
// all vertex permutations and all switch sets; parallel edges within a
// class are interchangeable, so a signature is encoded per endpoint pair
// as (multiplicity, negative count), which switching maps to
// (multiplicity, multiplicity - negative count) when exactly one endpoint
// is switched.  Loop signs never change.
//
// A sweep passes only with zero counterexamples AND zero inconclusive
// instances; an instance that hits a search budget is reported in the
// inconclusive list, never silently dropped.

#include <atomic>
#include <functional>
#include <thread>

#include "sigcirc/cover.hpp"
#include "sigcirc/euler.hpp"

namespace sigcirc {

using CanonicalKey = std::string;  // comparable byte encoding

namespace detail {

struct PairClasses {
  int n = 0;
  // maps (i, j) with i <= j over vertex indices to (multiplicity, negatives)
  std::map<std::pair<int, int>, std::pair<int, int>> cells;
};

inline PairClasses pair_classes(const SignedGraph& g) {
  PairClasses pc;
  pc.n = g.vertex_count();
  for (const Edge& e : g.edges()) {
    int i = g.vertex_index(e.u), j = g.vertex_index(e.v);
    auto key = std::minmax(i, j);
    auto& cell = pc.cells[key];
    cell.first += 1;
    if (e.sign < 0) cell.second += 1;
  }
  return pc;
}

inline CanonicalKey encode_classes(const PairClasses& pc, const std::vector<int>& perm,
                                   unsigned switch_bits, bool with_signs) {
  // perm maps old vertex index -> new label; switch_bits is over new labels
  const int n = pc.n;
  std::map<std::pair<int, int>, std::pair<int, int>> relabeled;
  for (const auto& [key, cell] : pc.cells) {
    int a = perm[key.first], b = perm[key.second];
    if (a > b) std::swap(a, b);
    int neg = cell.second;
    if (a != b && ((switch_bits >> a & 1) ^ (switch_bits >> b & 1))) neg = cell.first - neg;
    relabeled[{a, b}] = {cell.first, neg};
  }
  CanonicalKey key;
  key.push_back(static_cast<char>(n));
  for (const auto& [pair, cell] : relabeled) {
    key.push_back(static_cast<char>(pair.first));
    key.push_back(static_cast<char>(pair.second));
    key.push_back(static_cast<char>(cell.first));
    key.push_back(static_cast<char>(with_signs ? cell.second : 0));
  }
  return key;
}

}  // namespace detail

// Minimum encoding over all vertex relabelings and all switch sets.
// Equal keys <=> switching-isomorphic.  Brute force, guarded.
inline CanonicalKey canonical_form(const SignedGraph& g) {
  const int n = g.vertex_count();
  if (n > 8) throw ResourceLimitError("canonical_form: vertex count above guard (8)");
  auto pc = detail::pair_classes(g);
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  CanonicalKey best;
  do {
    const unsigned switch_limit = n > 0 ? 1u << (n - 1) : 1u;
    for (unsigned s = 0; s < switch_limit; ++s) {
      // label 0 stays outside the switch set; bit i covers label i+1
      CanonicalKey key = detail::encode_classes(pc, perm, s << 1, true);
      if (best.empty() || key < best) best = std::move(key);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Isomorphism key of the underlying unsigned multigraph.
inline CanonicalKey canonical_shape(const SignedGraph& g) {
  const int n = g.vertex_count();
  if (n > 8) throw ResourceLimitError("canonical_shape: vertex count above guard (8)");
  auto pc = detail::pair_classes(g);
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  CanonicalKey best;
  do {
    CanonicalKey key = detail::encode_classes(pc, perm, 0, false);
    if (best.empty() || key < best) best = std::move(key);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

enum class GenFilter { All, Eulerian, FlowAdmissibleEulerian };

inline const char* to_string(GenFilter f) {
  switch (f) {
    case GenFilter::All: return "all";
    case GenFilter::Eulerian: return "eulerian";
    case GenFilter::FlowAdmissibleEulerian: return "flow_admissible_eulerian";
  }
  return "?";
}

namespace detail {

// Builds the graph for one shape/signature choice: vertex ids 0..n-1,
// edge ids assigned cell by cell in lexicographic endpoint order, the
// negative edges of a cell first.
inline SignedGraph assemble(int n, const std::vector<std::pair<int, int>>& cells,
                            const std::vector<int>& mult, const std::vector<int>& negs) {
  std::vector<VertexId> vertices(n);
  for (int i = 0; i < n; ++i) vertices[i] = i;
  std::vector<std::tuple<EdgeId, VertexId, VertexId, int>> edges;
  EdgeId next = 0;
  for (std::size_t c = 0; c < cells.size(); ++c)
    for (int t = 0; t < mult[c]; ++t)
      edges.emplace_back(next++, cells[c].first, cells[c].second, t < negs[c] ? -1 : +1);
  return SignedGraph(std::move(vertices), edges);
}

inline bool connected_shape(int n, const std::vector<std::pair<int, int>>& cells,
                            const std::vector<int>& mult) {
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t c = 0; c < cells.size(); ++c)
    if (mult[c] > 0) parent[find(cells[c].first)] = find(cells[c].second);
  for (int i = 1; i < n; ++i)
    if (find(i) != find(0)) return false;
  return true;
}

}  // namespace detail

// Streams one representative per switching-isomorphism class of connected
// signed multigraphs (no isolated vertices) on at most max_v vertices and
// max_e edges.  Deterministic order.
inline void generate_instances(int max_v, int max_e, GenFilter filter,
                               const std::function<void(const SignedGraph&)>& yield) {
  if (max_v > 8 || max_e > 12)
    throw ResourceLimitError("generate_instances: bounds above guards (8 vertices, 12 edges)");
  if (max_v < 1 || max_e < 1) throw std::invalid_argument("bounds must be positive");
  const bool need_even = filter != GenFilter::All;
  for (int n = 1; n <= max_v; ++n) {
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) cells.emplace_back(i, j);
    std::set<CanonicalKey> shape_seen, signed_seen;
    std::vector<int> mult(cells.size(), 0), negs(cells.size(), 0);

    auto signatures = [&](auto&& self, std::size_t c) -> void {
      if (c == cells.size()) {
        SignedGraph g = detail::assemble(n, cells, mult, negs);
        if (!signed_seen.insert(canonical_form(g)).second) return;
        if (filter == GenFilter::FlowAdmissibleEulerian && !is_flow_admissible(g)) return;
        yield(g);
        return;
      }
      for (negs[c] = 0; negs[c] <= mult[c]; ++negs[c]) self(self, c + 1);
      negs[c] = 0;
    };

    auto shapes = [&](auto&& self, std::size_t c, int budget) -> void {
      if (c == cells.size()) {
        std::vector<int> degree(n, 0);
        for (std::size_t i = 0; i < cells.size(); ++i) {
          degree[cells[i].first] += mult[i] * (cells[i].first == cells[i].second ? 2 : 1);
          if (cells[i].first != cells[i].second) degree[cells[i].second] += mult[i];
        }
        for (int d : degree)
          if (d == 0 || (need_even && d % 2 != 0)) return;
        if (!detail::connected_shape(n, cells, mult)) return;
        SignedGraph shape = detail::assemble(n, cells, mult, negs);
        if (!shape_seen.insert(canonical_shape(shape)).second) return;
        signatures(signatures, 0);
        return;
      }
      for (mult[c] = 0; mult[c] <= budget; ++mult[c]) self(self, c + 1, budget - mult[c]);
      mult[c] = 0;
    };
    shapes(shapes, 0, max_e);
  }
}

inline std::vector<SignedGraph> generate_instances(int max_v, int max_e, GenFilter filter) {
  std::vector<SignedGraph> out;
  generate_instances(max_v, max_e, filter, [&](const SignedGraph& g) { out.push_back(g); });
  return out;
}

// All-positive representatives of connected multigraph isomorphism classes.
inline std::vector<SignedGraph> generate_shapes(int max_v, int max_e) {
  if (max_v > 8 || max_e > 12)
    throw ResourceLimitError("generate_shapes: bounds above guards (8 vertices, 12 edges)");
  std::vector<SignedGraph> out;
  for (int n = 1; n <= max_v; ++n) {
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) cells.emplace_back(i, j);
    std::set<CanonicalKey> seen;
    std::vector<int> mult(cells.size(), 0), zero(cells.size(), 0);
    auto recurse = [&](auto&& self, std::size_t c, int budget) -> void {
      if (c == cells.size()) {
        std::vector<int> degree(n, 0);
        for (std::size_t i = 0; i < cells.size(); ++i) {
          degree[cells[i].first] += mult[i] * (cells[i].first == cells[i].second ? 2 : 1);
          if (cells[i].first != cells[i].second) degree[cells[i].second] += mult[i];
        }
        for (int d : degree)
          if (d == 0) return;
        if (!detail::connected_shape(n, cells, mult)) return;
        SignedGraph g = detail::assemble(n, cells, mult, zero);
        if (seen.insert(canonical_shape(g)).second) out.push_back(std::move(g));
        return;
      }
      for (mult[c] = 0; mult[c] <= budget; ++mult[c]) self(self, c + 1, budget - mult[c]);
      mult[c] = 0;
    };
    recurse(recurse, 0, max_e);
  }
  return out;
}

// Fixed auxiliary families used by some properties.
inline std::vector<SignedGraph> theta_instances(int max_path_len = 3) {
  std::vector<SignedGraph> out;
  for (int l1 = 1; l1 <= max_path_len; ++l1)
    for (int l2 = l1; l2 <= max_path_len; ++l2)
      for (int l3 = l2; l3 <= max_path_len; ++l3) {
        // two branch vertices 0 and 1 joined by three paths
        std::vector<std::tuple<EdgeId, VertexId, VertexId, int>> edges;
        std::vector<VertexId> vertices{0, 1};
        VertexId next_v = 2;
        EdgeId next_e = 0;
        for (int len : {l1, l2, l3}) {
          VertexId at = 0;
          for (int s = 0; s < len; ++s) {
            VertexId to = (s + 1 == len) ? 1 : next_v++;
            if (to != 1) vertices.push_back(to);
            edges.emplace_back(next_e++, at, to, +1);
            at = to;
          }
        }
        SignedGraph base(vertices, edges);
        const int m = base.edge_count();
        for (unsigned bits = 0; bits < (1u << m); ++bits) {
          std::vector<std::tuple<EdgeId, VertexId, VertexId, int>> es;
          for (int i = 0; i < m; ++i) {
            const Edge& e = base.edge_at(i);
            es.emplace_back(e.id, e.u, e.v, (bits >> i & 1) ? -1 : +1);
          }
          out.emplace_back(base.vertices(), es);
        }
      }
  return out;
}

inline std::vector<SignedGraph> necklace_instances(int max_k = 6, int max_len = 2) {
  std::vector<SignedGraph> out;
  for (int k = 3; k <= max_k; ++k) {
    const int slots = 2 * k;
    std::vector<int> lengths(slots, 1);
    // every path-length profile with entries in 1..max_len, bead 0 negatives
    auto profiles = [&](auto&& self, int slot) -> void {
      if (slot == slots) {
        out.push_back(build_necklace(k, lengths, 0));
        return;
      }
      for (int len = 1; len <= max_len; ++len) {
        lengths[slot] = len;
        self(self, slot + 1);
      }
      lengths[slot] = 1;
    };
    profiles(profiles, 0);
    // all negative-pair placements on the unit profile
    std::vector<int> unit(slots, 1);
    for (int bead = 1; bead < k; ++bead) out.push_back(build_necklace(k, unit, bead));
  }
  return out;
}

// ---------------------------------------------------------------------
// Property sweep

enum class Outcome { Pass, Fail, Inconclusive, NotApplicable };

struct PropertyResult {
  Outcome outcome = Outcome::Pass;
  std::string detail;
  std::optional<int> min_cover;
};

struct PropertyDef {
  enum class Source { SignedClasses, Shapes, Thetas, Necklaces };
  std::string name;
  std::string description;
  Source source = Source::SignedClasses;
  GenFilter filter = GenFilter::Eulerian;
  std::function<PropertyResult(const SignedGraph&, std::uint64_t node_budget)> check;
};

struct SweepBounds {
  int max_v = 5;
  int max_e = 8;
  int jobs = 1;
  std::uint64_t node_budget = 50'000'000;
};

struct SweepFinding {
  SignedGraph graph;
  std::string detail;
};

struct SweepReport {
  std::string property;
  std::string description;
  SweepBounds bounds;
  std::size_t instances = 0;
  std::size_t applicable = 0;
  std::size_t passed = 0;
  std::vector<SweepFinding> counterexamples;
  std::vector<SweepFinding> inconclusive;
  std::map<int, std::size_t> min_cover_histogram;

  bool passed_overall() const { return counterexamples.empty() && inconclusive.empty(); }
};

namespace detail {

inline PropertyResult check_thm_6cover(const SignedGraph& g, std::uint64_t budget) {
  CoverResult r = find_k_cover(g, 6, budget);
  if (r.status == SolveStatus::Limit) return {Outcome::Inconclusive, "node budget exhausted", {}};
  if (r.status == SolveStatus::Infeasible) return {Outcome::Fail, "no 6-cover exists", {}};
  CoverCheck check = verify_cover(g, *r.certificate);
  if (!check.ok) return {Outcome::Fail, "solver certificate rejected: " + check.reason, {}};
  return {Outcome::Pass, "", {}};
}

inline PropertyResult check_min_cover_profile(const SignedGraph& g, std::uint64_t budget) {
  MinCoverResult r = min_uniform_cover(g, 6, budget);
  if (r.status == SolveStatus::Limit) return {Outcome::Inconclusive, "node budget exhausted", {}};
  if (r.status == SolveStatus::Infeasible) return {Outcome::Fail, "no k-cover for any k <= 6", {}};
  CoverCheck check = verify_cover(g, *r.certificate);
  if (!check.ok) return {Outcome::Fail, "solver certificate rejected: " + check.reason, {}};
  return {Outcome::Pass, "", r.k};
}

inline PropertyResult check_even_2cover(const SignedGraph& g, std::uint64_t budget) {
  if (g.negative_count() % 2 != 0) return {Outcome::NotApplicable, "", {}};
  MinCoverResult r = min_uniform_cover(g, 2, budget);
  if (r.status == SolveStatus::Limit) return {Outcome::Inconclusive, "node budget exhausted", {}};
  if (r.status == SolveStatus::Infeasible)
    return {Outcome::Fail, "even negative count but no 2-cover", {}};
  return {Outcome::Pass, "", r.k};
}

inline PropertyResult check_theta(const SignedGraph& g, std::uint64_t) {
  EdgeSet all;
  for (const Edge& e : g.edges()) all.push_back(e.id);
  int profile = theta_balance_profile(g, all);
  if (profile == 1 || profile == 3) return {Outcome::Pass, "", {}};
  return {Outcome::Fail, "theta has " + std::to_string(profile) + " balanced circuits", {}};
}

inline PropertyResult check_necklace_1cover(const SignedGraph& g, std::uint64_t budget) {
  auto ns = detect_necklace(g);
  if (!ns) return {Outcome::Fail, "built necklace not detected", {}};
  CoverCertificate cert{g, 1, {}};
  for (const Circuit& c : ns->small_circuits) cert.members.push_back(CoverMember{SignedCircuit{c}, 1});
  CoverCheck check = verify_cover(g, cert);
  if (!check.ok) return {Outcome::Fail, "small circuits are not a 1-cover: " + check.reason, {}};
  if (static_cast<int>(cert.members.size()) != ns->length)
    return {Outcome::Fail, "1-cover size differs from necklace length", {}};
  CoverResult solver = find_k_cover(g, 1, budget);
  if (solver.status == SolveStatus::Limit) return {Outcome::Inconclusive, "node budget exhausted", {}};
  if (solver.status != SolveStatus::Found) return {Outcome::Fail, "solver found no 1-cover", {}};
  return {Outcome::Pass, "", 1};
}

inline PropertyResult check_nonseparating_circuit(const SignedGraph& g, std::uint64_t) {
  if (!is_eulerian(g) || g.max_degree() < 4) return {Outcome::NotApplicable, "", {}};
  for (const Circuit& c : enumerate_circuits(g)) {
    Circuit other = nonseparating_disjoint_circuit(g, c);
    if (circuit_mask(g, c) & circuit_mask(g, other))
      return {Outcome::Fail, "returned circuit shares an edge with the input", {}};
    if (!connected_up_to_isolated(remove_edges(g, other.edge_set())))
      return {Outcome::Fail, "removal disconnects the edge-bearing part", {}};
  }
  return {Outcome::Pass, "", {}};
}

inline PropertyResult check_removable_edge(const SignedGraph& g, std::uint64_t) {
  if (g.vertex_count() < 3 || !is_two_connected(g)) return {Outcome::NotApplicable, "", {}};
  for (VertexId v : g.vertices()) {
    EdgeId id;
    try {
      id = removable_edge(g, v);
    } catch (const std::logic_error& e) {
      return {Outcome::Fail, std::string("no removable edge for vertex ") + std::to_string(v), {}};
    }
    const Edge& e = g.edge(id);
    if (e.touches(v)) return {Outcome::Fail, "returned edge touches the excluded vertex", {}};
    if (!is_connected(remove_vertices(g, {e.u, e.v})))
      return {Outcome::Fail, "deleting the endpoints disconnects the graph", {}};
  }
  return {Outcome::Pass, "", {}};
}

inline PropertyResult check_balanced_relabel(const SignedGraph& g, std::uint64_t) {
  const int m = g.edge_count();
  for (EdgeMask mask = 0; mask < (EdgeMask{1} << m); ++mask) {
    EdgeSet h = g.edge_set(mask);
    auto s = balancing_switch_set(g, h);
    // independent balance route: parity of every circuit inside h
    bool has_odd = false;
    for (const Circuit& c : enumerate_circuits_in(g, mask))
      if (!is_balanced(g, c)) has_odd = true;
    if (has_odd) {
      if (s) return {Outcome::Fail, "switch set returned for an unbalanced subgraph", {}};
      continue;
    }
    if (!s) return {Outcome::Fail, "no switch set for a balanced subgraph", {}};
    SignedGraph switched = switch_at(g, *s);
    if (negative_count_in(switched, h) != 0)
      return {Outcome::Fail, "switching left a negative edge in the subgraph", {}};
  }
  return {Outcome::Pass, "", {}};
}

inline PropertyResult check_pair_implies_admissible(const SignedGraph& g, std::uint64_t) {
  if (!is_two_edge_connected(g)) return {Outcome::NotApplicable, "", {}};
  if (!edge_disjoint_unbalanced_pair(g)) return {Outcome::NotApplicable, "", {}};
  if (is_flow_admissible(g)) return {Outcome::Pass, "", {}};
  return {Outcome::Fail, "edge-disjoint unbalanced pair but coloops remain", {}};
}

inline PropertyResult check_admissible_implies_pair(const SignedGraph& g, std::uint64_t) {
  if (is_balanced(g) || !is_flow_admissible(g)) return {Outcome::NotApplicable, "", {}};
  if (edge_disjoint_unbalanced_pair(g)) return {Outcome::Pass, "", {}};
  return {Outcome::Fail, "flow-admissible and unbalanced but no edge-disjoint unbalanced pair", {}};
}

inline PropertyResult check_odd_three_disjoint(const SignedGraph& g, std::uint64_t) {
  if (!is_flow_admissible(g) || g.negative_count() % 2 == 0) return {Outcome::NotApplicable, "", {}};
  if (three_edge_disjoint_unbalanced(g)) return {Outcome::Pass, "", {}};
  return {Outcome::Fail, "odd negative count but no three edge-disjoint unbalanced circuits", {}};
}

inline bool optimal_hypotheses(const SignedGraph& g) {
  return g.min_degree() >= 4 && is_two_connected(without_loops(g));
}

inline PropertyResult check_optimal_shared_vertices(const SignedGraph& g, std::uint64_t) {
  if (!optimal_hypotheses(g)) return {Outcome::NotApplicable, "", {}};
  auto opt = optimal_decomposition(g);
  IntersectionGraph h = intersection_graph(g, opt.decomposition);
  for (int i = 0; i < h.order(); ++i)
    for (int j = i + 1; j < h.order(); ++j) {
      if (!h.adjacent(i, j)) continue;
      if (!h.balanced[i] && !h.balanced[j]) continue;
      if (h.shared[i][j] > 2)
        return {Outcome::Fail,
                "adjacent pair with a balanced member shares " + std::to_string(h.shared[i][j]) +
                    " vertices",
                {}};
    }
  return {Outcome::Pass, "", {}};
}

inline PropertyResult check_optimal_necklace_union(const SignedGraph& g, std::uint64_t) {
  if (!optimal_hypotheses(g)) return {Outcome::NotApplicable, "", {}};
  auto opt = optimal_decomposition(g);
  IntersectionGraph h = intersection_graph(g, opt.decomposition);
  for (int i = 0; i < h.order(); ++i)
    for (int j = i + 1; j < h.order(); ++j) {
      if (!h.adjacent(i, j) || h.balanced[i] || h.balanced[j]) continue;
      if (h.shared[i][j] < 3) continue;
      EdgeSet union_edges = opt.decomposition.circuits[i].edge_set();
      EdgeSet other = opt.decomposition.circuits[j].edge_set();
      union_edges.insert(union_edges.end(), other.begin(), other.end());
      if (!detect_necklace(subgraph_by_edges(g, normalized(union_edges))))
        return {Outcome::Fail, "union of adjacent unbalanced circuits is not a necklace", {}};
    }
  return {Outcome::Pass, "", {}};
}

inline PropertyResult check_false_1cover(const SignedGraph& g, std::uint64_t budget) {
  CoverResult r = find_k_cover(g, 1, budget);
  if (r.status == SolveStatus::Limit) return {Outcome::Inconclusive, "node budget exhausted", {}};
  if (r.status == SolveStatus::Found) return {Outcome::Pass, "", 1};
  return {Outcome::Fail, "no 1-cover", {}};
}

}  // namespace detail

inline const std::vector<PropertyDef>& property_registry() {
  using Source = PropertyDef::Source;
  static const std::vector<PropertyDef> registry = {
      {"thm_6cover", "every flow-admissible signed Eulerian graph has a 6-cover",
       Source::SignedClasses, GenFilter::FlowAdmissibleEulerian, detail::check_thm_6cover},
      {"min_cover_profile", "minimum uniform cover number lies in 1..6 (histogram collected)",
       Source::SignedClasses, GenFilter::FlowAdmissibleEulerian, detail::check_min_cover_profile},
      {"even_2cover", "signed Eulerian graphs with an even number of negative edges have 2-covers",
       Source::SignedClasses, GenFilter::Eulerian, detail::check_even_2cover},
      {"theta_lemma", "a signed theta graph has 1 or 3 balanced circuits, never 0 or 2",
       Source::Thetas, GenFilter::All, detail::check_theta},
      {"necklace_1cover", "necklaces are detected and their small circuits form a 1-cover",
       Source::Necklaces, GenFilter::All, detail::check_necklace_1cover},
      {"nonseparating_circuit",
       "in Eulerian graphs with max degree >= 4, every circuit has an edge-disjoint companion "
       "whose removal keeps the rest connected up to isolated vertices",
       Source::SignedClasses, GenFilter::Eulerian, detail::check_nonseparating_circuit},
      {"removable_edge",
       "in 2-connected graphs on >= 3 vertices, every vertex avoids some edge whose endpoint "
       "pair can be deleted without disconnecting",
       Source::Shapes, GenFilter::All, detail::check_removable_edge},
      {"balanced_relabel",
       "a subgraph is balanced iff a switch set makes it all-positive; unbalanced subgraphs "
       "admit none",
       Source::SignedClasses, GenFilter::Eulerian, detail::check_balanced_relabel},
      {"pair_implies_admissible",
       "2-edge-connected with two edge-disjoint unbalanced circuits implies no coloops",
       Source::SignedClasses, GenFilter::Eulerian, detail::check_pair_implies_admissible},
      {"admissible_implies_pair",
       "flow-admissible unbalanced Eulerian graphs contain two edge-disjoint unbalanced circuits",
       Source::SignedClasses, GenFilter::Eulerian, detail::check_admissible_implies_pair},
      {"odd_three_disjoint",
       "flow-admissible Eulerian graphs with an odd number of negative edges contain three "
       "pairwise edge-disjoint unbalanced circuits",
       Source::SignedClasses, GenFilter::Eulerian, detail::check_odd_three_disjoint},
      {"optimal_shared_vertices",
       "in an optimal decomposition, adjacent circuits with a balanced member share 1 or 2 "
       "vertices (min degree >= 4, loopless part 2-connected, flow-admissible)",
       Source::SignedClasses, GenFilter::FlowAdmissibleEulerian,
       detail::check_optimal_shared_vertices},
      {"optimal_necklace_union",
       "in an optimal decomposition, adjacent unbalanced circuits sharing >= 3 vertices form a "
       "necklace (same hypotheses)",
       Source::SignedClasses, GenFilter::FlowAdmissibleEulerian,
       detail::check_optimal_necklace_union},
      {"false_1cover",
       "demonstration property, known false: every signed Eulerian graph has a 1-cover",
       Source::SignedClasses, GenFilter::Eulerian, detail::check_false_1cover},
  };
  return registry;
}

inline const PropertyDef* find_property(const std::string& name) {
  for (const PropertyDef& p : property_registry())
    if (p.name == name) return &p;
  return nullptr;
}

inline std::vector<SignedGraph> instances_for(const PropertyDef& prop, const SweepBounds& bounds) {
  switch (prop.source) {
    case PropertyDef::Source::SignedClasses:
      return generate_instances(bounds.max_v, bounds.max_e, prop.filter);
    case PropertyDef::Source::Shapes:
      return generate_shapes(bounds.max_v, bounds.max_e);
    case PropertyDef::Source::Thetas:
      return theta_instances();
    case PropertyDef::Source::Necklaces:
      return necklace_instances();
  }
  return {};
}

inline SweepReport run_sweep(const std::string& property, const SweepBounds& bounds) {
  const PropertyDef* prop = find_property(property);
  if (!prop) throw std::invalid_argument("unknown property '" + property + "'");
  SweepReport report;
  report.property = prop->name;
  report.description = prop->description;
  report.bounds = bounds;
  std::vector<SignedGraph> instances = instances_for(*prop, bounds);
  report.instances = instances.size();

  std::vector<PropertyResult> results(instances.size());
  const int jobs = std::max(1, bounds.jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < instances.size(); ++i)
      results[i] = prop->check(instances[i], bounds.node_budget);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= instances.size()) break;
        results[i] = prop->check(instances[i], bounds.node_budget);
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  for (std::size_t i = 0; i < instances.size(); ++i) {
    const PropertyResult& r = results[i];
    if (r.min_cover) ++report.min_cover_histogram[*r.min_cover];
    switch (r.outcome) {
      case Outcome::NotApplicable:
        break;
      case Outcome::Pass:
        ++report.applicable;
        ++report.passed;
        break;
      case Outcome::Fail:
        ++report.applicable;
        report.counterexamples.push_back(SweepFinding{instances[i], r.detail});
        break;
      case Outcome::Inconclusive:
        ++report.applicable;
        report.inconclusive.push_back(SweepFinding{instances[i], r.detail});
        break;
    }
  }
  return report;
}

}  // namespace sigcirc
