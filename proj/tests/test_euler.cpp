#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "oracle.hpp"
#include "sigcirc/euler.hpp"

using namespace sigcirc;
using namespace testing_graphs;

namespace {

std::vector<std::vector<EdgeSet>> signatures(const std::vector<CircuitDecomposition>& ds) {
  std::vector<std::vector<EdgeSet>> out;
  for (const auto& d : ds) out.push_back(d.signature());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("one_decomposition partitions the edges") {
  auto t = one_decomposition(triangle());
  REQUIRE(t.size() == 1);
  CHECK(t.circuits[0].edge_set() == EdgeSet{0, 1, 2});

  auto f8 = one_decomposition(figure_eight());
  REQUIRE(f8.size() == 2);
  CHECK(f8.signature() == std::vector<EdgeSet>{{0}, {1}});

  validate_decomposition(necklace_2n3(), one_decomposition(necklace_2n3()));
  validate_decomposition(bowtie(), one_decomposition(bowtie()));
  validate_decomposition(two_triangles(), one_decomposition(two_triangles()));

  CHECK_THROWS_AS(one_decomposition(path2()), std::invalid_argument);
  CHECK_THROWS_AS(one_decomposition(k4()), std::invalid_argument);
}

TEST_CASE("all_decompositions matches the brute-force oracle") {
  CHECK(all_decompositions(figure_eight()).size() == 1);
  CHECK_THROWS_AS(all_decompositions(theta3()), std::invalid_argument);  // degree 3

  for (const SignedGraph& g :
       {figure_eight(), necklace_2n3(), bowtie(), two_triangles(), four_negative_loops(),
        build_necklace(3, {1, 2, 1, 1, 2, 1}, 0)}) {
    auto mine = all_decompositions(g);
    auto expected = oracle::all_decompositions(g);
    CHECK(signatures(mine).size() == mine.size());  // no duplicates
    CHECK(signatures(mine) == expected);
    for (const auto& d : mine) validate_decomposition(g, d);
  }

  // derived by the oracle: the doubled triangle has the three beads plus
  // four long-circuit pairs
  CHECK(all_decompositions(necklace_2n3()).size() == 5);
}

TEST_CASE("optimal decomposition maximizes unbalanced circuits, then size") {
  SignedGraph n = necklace_2n3();
  auto opt = optimal_decomposition(n);
  CHECK(opt.certified);
  CHECK(opt.decomposition.unbalanced_count(n) == 2);
  CHECK(opt.decomposition.size() == 2);

  SignedGraph f8 = figure_eight(-1, -1);
  auto f8opt = optimal_decomposition(f8);
  CHECK(f8opt.decomposition.unbalanced_count(f8) == 2);

  // all-positive doubled triangle: no unbalanced circuits anywhere, so the
  // bead decomposition wins on size
  SignedGraph flat = build_necklace(3, {1, 1, 1, 1, 1, 1}, 0);
  flat = switch_at(flat, {});  // copy
  {
    std::vector<std::tuple<int, int, int, int>> es;
    for (const Edge& e : flat.edges()) es.emplace_back(e.id, e.u, e.v, +1);
    flat = SignedGraph(flat.vertices(), es);
  }
  auto flat_opt = optimal_decomposition(flat);
  CHECK(flat_opt.decomposition.unbalanced_count(flat) == 0);
  CHECK(flat_opt.decomposition.size() == 3);

  // agreement with the exhaustive maximum on every small Eulerian sample
  for (const SignedGraph& g : {necklace_2n3(), figure_eight(-1, +1), bowtie(),
                               build_necklace(4, {1, 1, 1, 1, 1, 1, 1, 1}, 2)}) {
    auto all = all_decompositions(g);
    auto best = optimal_decomposition(g);
    for (const auto& d : all) {
      int du = d.unbalanced_count(g), bu = best.decomposition.unbalanced_count(g);
      CHECK((du < bu || (du == bu && d.size() <= best.decomposition.size())));
    }
  }
}

TEST_CASE("intersection graph labels and shared counts") {
  SignedGraph f8 = figure_eight(-1, -1);
  auto h8 = intersection_graph(f8, one_decomposition(f8));
  REQUIRE(h8.order() == 2);
  CHECK(h8.adjacent(0, 1));
  CHECK(h8.shared[0][1] == 1);
  CHECK_FALSE(h8.balanced[0]);

  SignedGraph n = necklace_2n3();
  auto hopt = intersection_graph(n, optimal_decomposition(n).decomposition);
  REQUIRE(hopt.order() == 2);
  CHECK(hopt.shared[0][1] == 3);
  CHECK_FALSE(hopt.balanced[0]);
  CHECK_FALSE(hopt.balanced[1]);

  SignedGraph b = bowtie();
  auto hb = intersection_graph(b, one_decomposition(b));
  REQUIRE(hb.order() == 2);
  CHECK(hb.shared[0][1] == 1);
  CHECK(hb.balanced[0]);

  CircuitDecomposition bogus;  // not a partition
  CHECK_THROWS_AS(intersection_graph(b, bogus), std::invalid_argument);
}

TEST_CASE("necklace detection") {
  auto ns = detect_necklace(necklace_2n3());
  REQUIRE(ns.has_value());
  CHECK(ns->length == 3);
  CHECK(ns->hubs == std::vector<VertexId>{0, 1, 2});
  CHECK(ns->small_circuits.size() == 3);
  CHECK(ns->negative_pair == std::pair<EdgeId, EdgeId>{0, 1});

  SignedGraph flat = [] {
    SignedGraph g = necklace_2n3();
    std::vector<std::tuple<int, int, int, int>> es;
    for (const Edge& e : g.edges()) es.emplace_back(e.id, e.u, e.v, +1);
    return SignedGraph(g.vertices(), es);
  }();
  CHECK_FALSE(detect_necklace(flat).has_value());  // long circuits balanced

  CHECK_FALSE(detect_necklace(triangle()).has_value());
  CHECK_FALSE(detect_necklace(figure_eight(-1, -1)).has_value());
  CHECK_FALSE(detect_necklace(theta3(-1, +1, +1)).has_value());

  // both negatives on one path of a bead unbalances a small circuit
  SignedGraph bad = build_necklace(3, {2, 1, 1, 1, 1, 1}, 0);
  {
    std::vector<std::tuple<int, int, int, int>> es;
    for (const Edge& e : bad.edges())
      es.emplace_back(e.id, e.u, e.v, (e.id == 0 || e.id == 1) ? -1 : +1);
    bad = SignedGraph(bad.vertices(), es);
  }
  CHECK_FALSE(detect_necklace(bad).has_value());

  // a switched necklace is still a necklace
  SignedGraph switched = switch_at(necklace_2n3(), {0, 2});
  auto ns2 = detect_necklace(switched);
  REQUIRE(ns2.has_value());
  CHECK(ns2->length == 3);
}

TEST_CASE("necklace build/detect round trip") {
  for (int k = 3; k <= 6; ++k) {
    std::vector<int> lengths(2 * k, 1);
    for (int bead = 0; bead < k; ++bead) {
      SignedGraph g = build_necklace(k, lengths, bead);
      auto ns = detect_necklace(g);
      REQUIRE(ns.has_value());
      CHECK(ns->length == k);
      CHECK(signatures_equivalent(g, negative_edges(g),
                                  {ns->negative_pair.first, ns->negative_pair.second}));
    }
  }
  // subdivided profiles, bead-sorted comparison
  std::vector<int> profile{2, 1, 1, 2, 2, 2};
  SignedGraph g = build_necklace(3, profile, 1);
  auto ns = detect_necklace(g);
  REQUIRE(ns.has_value());
  REQUIRE(ns->length == 3);
  for (int bead = 0; bead < 3; ++bead) {
    auto built = std::minmax(profile[2 * bead], profile[2 * bead + 1]);
    auto seen = std::minmax(ns->path_lengths[2 * bead], ns->path_lengths[2 * bead + 1]);
    CHECK(built == seen);
  }

  CHECK_THROWS_AS(build_necklace(2, {1, 1, 1, 1}, 0), std::invalid_argument);
  CHECK_THROWS_AS(build_necklace(3, {1, 1, 1}, 0), std::invalid_argument);
  CHECK_THROWS_AS(build_necklace(3, {1, 1, 1, 1, 1, 0}, 0), std::invalid_argument);
  CHECK_THROWS_AS(build_necklace(3, {1, 1, 1, 1, 1, 1}, 3), std::invalid_argument);
}

TEST_CASE("nonseparating disjoint circuit") {
  SignedGraph f8 = figure_eight();
  Circuit loop0 = walk_circuit(f8, {0});
  Circuit other = nonseparating_disjoint_circuit(f8, loop0);
  CHECK(other.edge_set() == EdgeSet{1});

  SignedGraph n = necklace_2n3();
  for (const Circuit& c : enumerate_circuits(n)) {
    Circuit found = nonseparating_disjoint_circuit(n, c);
    CHECK((circuit_mask(n, c) & circuit_mask(n, found)) == 0);
    CHECK(connected_up_to_isolated(remove_edges(n, found.edge_set())));
  }

  CHECK_THROWS_AS(nonseparating_disjoint_circuit(triangle(), walk_circuit(triangle(), {0, 1, 2})),
                  std::invalid_argument);
  Circuit not_in_g = walk_circuit(figure_eight(), {0});
  CHECK_THROWS_AS(nonseparating_disjoint_circuit(bowtie(), not_in_g), std::invalid_argument);
}

TEST_CASE("removable edge") {
  SignedGraph sq = square();
  EdgeId e = removable_edge(sq, 1);
  CHECK_FALSE(sq.edge(e).touches(1));
  CHECK(is_connected(remove_vertices(sq, {sq.edge(e).u, sq.edge(e).v})));

  SignedGraph t = triangle();
  EdgeId te = removable_edge(t, 0);
  CHECK(te == 1);  // the edge {1,2}; the rest is the single vertex 0

  SignedGraph k = k4();
  for (VertexId v : k.vertices()) {
    EdgeId id = removable_edge(k, v);
    CHECK_FALSE(k.edge(id).touches(v));
    CHECK(is_connected(remove_vertices(k, {k.edge(id).u, k.edge(id).v})));
  }

  CHECK_THROWS_AS(removable_edge(path2(), 0), std::invalid_argument);
  CHECK_THROWS_AS(removable_edge(make({0, 1}, {{0, 1, +1}, {0, 1, +1}}), 0),
                  std::invalid_argument);  // digon: only two vertices
}

TEST_CASE("cover_decompose") {
  auto four = cover_decompose(four_negative_loops());
  REQUIRE(four.has_value());
  CHECK(four->first == EdgeSet{0, 1});
  CHECK(four->second == EdgeSet{2, 3});

  CHECK_FALSE(cover_decompose(figure_eight(-1, -1)).has_value());
  CHECK_FALSE(cover_decompose(triangle()).has_value());

  // derived by scanning the bipartitions of the doubled triangle: one bead
  // against the other two works
  auto neck = cover_decompose(necklace_2n3());
  REQUIRE(neck.has_value());
  CHECK(neck->first == EdgeSet{0, 1});
  CHECK(neck->second == EdgeSet{2, 3, 4, 5});

  CHECK_THROWS_AS(cover_decompose(path2()), std::invalid_argument);

  // parts really are Eulerian and flow-admissible
  for (const SignedGraph& g : {four_negative_loops(), necklace_2n3()}) {
    auto split = cover_decompose(g);
    REQUIRE(split.has_value());
    for (const EdgeSet& part : {split->first, split->second}) {
      SignedGraph sub = subgraph_by_edges(g, part);
      CHECK(is_eulerian(sub));
      CHECK(is_flow_admissible(sub));
    }
  }
}
