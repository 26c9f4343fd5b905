#pragma once

// Exact k-cover search: a k-cover is a multiset of signed circuits
// covering every edge exactly k times.  The solver runs a depth-first
// integer search on the edge/circuit incidence system A x = k*1, x >= 0,
// branching on the edge with the fewest remaining covering options and
// pruning any edge whose remaining options cannot meet its deficit.
// Absence is an exact answer; running out of node budget is reported as
// a distinct outcome so a timeout is never mistaken for a disproof.

#include "sigcirc/circuits.hpp"

namespace sigcirc {

struct CoverMember {
  SignedCircuit circuit;
  int multiplicity = 1;
};

struct CoverCertificate {
  SignedGraph host;
  int k = 0;
  std::vector<CoverMember> members;
};

struct CoverCheck {
  bool ok = false;
  std::map<EdgeId, int> multiplicity;      // per-edge coverage report
  std::optional<std::size_t> bad_member;   // index of the offending member
  std::string reason;
};

namespace detail {

// Validates the structural invariants of a signed circuit against g.
inline std::optional<std::string> signed_circuit_error(const SignedGraph& g, const SignedCircuit& sc) {
  if (!sc.is_barbell()) {
    const Circuit& c = sc.circuit();
    if (!is_circuit_edge_set(g, c.edge_set())) return "edge set is not a circuit";
    if (!is_balanced(g, c)) return "circuit is unbalanced";
    return std::nullopt;
  }
  const Barbell& b = sc.barbell();
  EdgeMask ma = g.mask_of(b.a.edge_set()), mb = g.mask_of(b.b.edge_set());
  if (!edge_set_is_circuit(g, ma) || !edge_set_is_circuit(g, mb))
    return "barbell part is not a circuit";
  if (is_balanced(g, b.a) || is_balanced(g, b.b)) return "barbell circuit is balanced";
  if (ma & mb) return "barbell circuits share an edge";
  int shared = shared_vertex_count(b.a, b.b);
  if (b.path.empty()) {
    if (shared != 1) return "barbell with empty path must share exactly one vertex";
    return std::nullopt;
  }
  if (shared != 0) return "barbell with a path must have vertex-disjoint circuits";
  EdgeMask mp = g.mask_of(b.path);
  if (mp & (ma | mb)) return "barbell path reuses a circuit edge";
  // the path must be simple, meet each circuit exactly in one endpoint,
  // and keep its internal vertices off both circuits
  std::map<VertexId, int> degree;
  for (EdgeId id : b.path) {
    const Edge& e = g.edge(id);
    if (e.is_loop()) return "barbell path contains a loop";
    degree[e.u] += 1;
    degree[e.v] += 1;
  }
  auto va = circuit_vertices(b.a), vb = circuit_vertices(b.b);
  auto on = [](const std::vector<VertexId>& vs, VertexId v) {
    return std::binary_search(vs.begin(), vs.end(), v);
  };
  int ends_a = 0, ends_b = 0;
  for (const auto& [v, d] : degree) {
    if (d == 1) {
      if (on(va, v))
        ++ends_a;
      else if (on(vb, v))
        ++ends_b;
      else
        return "barbell path endpoint misses both circuits";
    } else if (d == 2) {
      if (on(va, v) || on(vb, v)) return "barbell path passes through a circuit vertex";
    } else {
      return "barbell path is not a simple path";
    }
  }
  if (ends_a != 1 || ends_b != 1) return "barbell path must join the two circuits";
  auto label = component_labels(g, mp);
  int root = -1;
  for (const auto& [v, d] : degree) {
    int l = label[g.vertex_index(v)];
    if (root == -1) root = l;
    if (l != root) return "barbell path is disconnected";
  }
  return std::nullopt;
}

}  // namespace detail

inline CoverCheck verify_cover(const SignedGraph& g, const CoverCertificate& cert) {
  CoverCheck out;
  for (const Edge& e : g.edges()) out.multiplicity[e.id] = 0;
  if (cert.k < 1) {
    out.reason = "cover multiplicity k must be positive";
    return out;
  }
  for (std::size_t i = 0; i < cert.members.size(); ++i) {
    const CoverMember& m = cert.members[i];
    if (m.multiplicity < 1) {
      out.bad_member = i;
      out.reason = "member " + std::to_string(i) + ": multiplicity must be positive";
      return out;
    }
    if (auto err = detail::signed_circuit_error(g, m.circuit)) {
      out.bad_member = i;
      out.reason = "member " + std::to_string(i) + ": " + *err;
      return out;
    }
    for (EdgeId id : m.circuit.edge_set()) out.multiplicity[id] += m.multiplicity;
  }
  for (const auto& [id, count] : out.multiplicity) {
    if (count != cert.k) {
      out.reason = "edge " + std::to_string(id) + " is covered " + std::to_string(count) +
                   " times, expected " + std::to_string(cert.k);
      return out;
    }
  }
  out.ok = true;
  return out;
}

enum class SolveStatus { Found, Infeasible, Limit };

struct CoverResult {
  SolveStatus status = SolveStatus::Infeasible;
  std::optional<CoverCertificate> certificate;
  std::uint64_t nodes = 0;
};

inline CoverResult find_k_cover(const SignedGraph& g, int k,
                                std::uint64_t node_budget = 50'000'000) {
  if (k < 1) throw std::invalid_argument("cover multiplicity k must be positive");
  CoverResult result;
  const int m = g.edge_count();
  auto signed_circuits = enumerate_signed_circuits(g);
  const int n = static_cast<int>(signed_circuits.size());
  std::vector<EdgeMask> masks(n);
  std::vector<std::vector<int>> per_edge(m);
  for (int c = 0; c < n; ++c) {
    masks[c] = g.mask_of(signed_circuits[c].edge_set());
    for (int e = 0; e < m; ++e)
      if (masks[c] >> e & 1) per_edge[e].push_back(c);
  }
  std::vector<int> residual(m, k), counts(n, 0);
  bool limit_hit = false;

  auto max_copies = [&](int c) {
    int cap = k;
    EdgeMask mask = masks[c];
    for (int e = 0; e < m; ++e)
      if (mask >> e & 1) cap = std::min(cap, residual[e]);
    return cap;
  };

  auto record = [&]() {
    CoverCertificate cert{g, k, {}};
    for (int c = 0; c < n; ++c)
      if (counts[c] > 0) cert.members.push_back(CoverMember{signed_circuits[c], counts[c]});
    result.certificate = std::move(cert);
  };

  auto solve = [&](auto&& self) -> bool {
    if (++result.nodes > node_budget) {
      limit_hit = true;
      return false;
    }
    // branch edge: fewest available covering options
    int branch = -1, best_options = -1;
    for (int e = 0; e < m; ++e) {
      if (residual[e] == 0) continue;
      int options = 0, potential = 0;
      for (int c : per_edge[e]) {
        int cap = max_copies(c);
        if (cap > 0) {
          ++options;
          potential += cap;
        }
      }
      if (potential < residual[e]) return false;  // deficit unreachable
      if (branch == -1 || options < best_options) {
        branch = e;
        best_options = options;
      }
    }
    if (branch == -1) {
      record();
      return true;
    }
    std::vector<int> candidates;
    for (int c : per_edge[branch])
      if (max_copies(c) > 0) candidates.push_back(c);
    auto settle = [&](auto&& inner, std::size_t idx, int need) -> bool {
      if (++result.nodes > node_budget) {
        limit_hit = true;
        return false;
      }
      if (need == 0) return self(self);
      if (idx == candidates.size()) return false;
      int c = candidates[idx];
      int cap = std::min(max_copies(c), need);
      for (int take = cap; take >= 0; --take) {
        counts[c] += take;
        for (int e = 0; e < m; ++e)
          if (masks[c] >> e & 1) residual[e] -= take;
        bool done = inner(inner, idx + 1, need - take);
        for (int e = 0; e < m; ++e)
          if (masks[c] >> e & 1) residual[e] += take;
        counts[c] -= take;
        if (done || limit_hit) return done;
      }
      return false;
    };
    return settle(settle, 0, residual[branch]);
  };

  bool found = m == 0 ? (record(), true) : solve(solve);
  if (found)
    result.status = SolveStatus::Found;
  else
    result.status = limit_hit ? SolveStatus::Limit : SolveStatus::Infeasible;
  return result;
}

struct MinCoverResult {
  SolveStatus status = SolveStatus::Infeasible;  // Found, or Infeasible meaning "absent up to kMax"
  std::optional<int> k;
  std::optional<CoverCertificate> certificate;
  std::uint64_t nodes = 0;
};

inline MinCoverResult min_uniform_cover(const SignedGraph& g, int k_max,
                                        std::uint64_t node_budget = 50'000'000) {
  if (k_max < 1) throw std::invalid_argument("k_max must be positive");
  MinCoverResult out;
  for (int k = 1; k <= k_max; ++k) {
    CoverResult r = find_k_cover(g, k, node_budget);
    out.nodes += r.nodes;
    if (r.status == SolveStatus::Found) {
      out.status = SolveStatus::Found;
      out.k = k;
      out.certificate = std::move(r.certificate);
      return out;
    }
    if (r.status == SolveStatus::Limit) {
      out.status = SolveStatus::Limit;
      return out;
    }
  }
  return out;
}

inline CoverCertificate combine_covers(const CoverCertificate& a, const CoverCertificate& b) {
  if (!(a.host == b.host)) throw std::invalid_argument("covers have different host graphs");
  if (a.k < 1 || b.k < 1) throw std::invalid_argument("cover multiplicity k must be positive");
  CoverCertificate out{a.host, a.k + b.k, {}};
  std::map<EdgeSet, CoverMember> merged;
  for (const auto& source : {a.members, b.members}) {
    for (const CoverMember& m : source) {
      auto [it, fresh] = merged.emplace(m.circuit.edge_set(), m);
      if (!fresh) it->second.multiplicity += m.multiplicity;
    }
  }
  for (auto& [key, member] : merged) out.members.push_back(std::move(member));
  std::sort(out.members.begin(), out.members.end(), [](const CoverMember& x, const CoverMember& y) {
    EdgeSet sx = x.circuit.edge_set(), sy = y.circuit.edge_set();
    if (sx.size() != sy.size()) return sx.size() < sy.size();
    return sx < sy;
  });
  return out;
}

}  // namespace sigcirc
