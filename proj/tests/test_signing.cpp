#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "helpers.hpp"
#include "sigcirc/signing.hpp"

using namespace sigcirc;
using namespace testing_graphs;

namespace {

EdgeSet all_edges(const SignedGraph& g) {
  EdgeSet s;
  for (const Edge& e : g.edges()) s.push_back(e.id);
  return s;
}

SignedGraph random_signed(std::mt19937& rng, int max_v = 5, int max_e = 8) {
  int n = 1 + rng() % max_v, m = 1 + rng() % max_e;
  std::vector<int> verts(n);
  for (int i = 0; i < n; ++i) verts[i] = i;
  std::vector<std::array<int, 3>> es;
  for (int i = 0; i < m; ++i)
    es.push_back({static_cast<int>(rng() % n), static_cast<int>(rng() % n), rng() % 2 ? +1 : -1});
  return make(verts, es);
}

SwitchSet random_switch_set(std::mt19937& rng, const SignedGraph& g) {
  SwitchSet s;
  for (VertexId v : g.vertices())
    if (rng() % 2) s.push_back(v);
  return s;
}

}  // namespace

TEST_CASE("balanced circuit parity") {
  CHECK(is_balanced_circuit(triangle(), {0, 1, 2}));
  SignedGraph neg_loop = make({0}, {{0, 0, -1}});
  CHECK_FALSE(is_balanced_circuit(neg_loop, {0}));
  SignedGraph digon = make({0, 1}, {{0, 1, -1}, {0, 1, -1}});
  CHECK(is_balanced_circuit(digon, {0, 1}));
  CHECK_THROWS_AS(is_balanced_circuit(path2(), {0, 1}), std::invalid_argument);
}

TEST_CASE("balanced subgraph via potentials") {
  CHECK(is_balanced_subgraph(bowtie(), all_edges(bowtie())));
  SignedGraph with_neg_loop = make({0, 1}, {{0, 1, +1}, {1, 1, -1}});
  CHECK_FALSE(is_balanced_subgraph(with_neg_loop, {0, 1}));
  CHECK(is_balanced_subgraph(with_neg_loop, {0}));
  SignedGraph t = triangle(-1, -1, +1);
  CHECK(is_balanced_subgraph(t, {0, 1, 2}));
  SignedGraph unb = triangle(-1, +1, +1);
  CHECK_FALSE(is_balanced_subgraph(unb, {0, 1, 2}));
  // positive loops are balanced circuits and do not break balance
  SignedGraph pos_loop = make({0}, {{0, 0, +1}});
  CHECK(is_balanced_subgraph(pos_loop, {0}));
}

TEST_CASE("switch_at flips exactly the cut") {
  SignedGraph f8 = figure_eight(-1, -1);
  CHECK(switch_at(f8, {0}) == f8);  // loops never flip

  SignedGraph t = triangle(-1, -1, +1);  // negatives 01 and 12
  SignedGraph switched = switch_at(t, {1});
  CHECK(switched.negative_count() == 0);

  SignedGraph b = bowtie({-1, +1, +1, -1, +1, +1});
  CHECK(switch_at(b, {}) == b);
  CHECK(switch_at(switch_at(b, {0, 3}), {0, 3}) == b);
}

TEST_CASE("switching composes through symmetric difference") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    SignedGraph g = random_signed(rng);
    SwitchSet s1 = random_switch_set(rng, g), s2 = random_switch_set(rng, g);
    SwitchSet sym;
    std::set_symmetric_difference(s1.begin(), s1.end(), s2.begin(), s2.end(),
                                  std::back_inserter(sym));
    CHECK(switch_at(switch_at(g, s1), s2) == switch_at(g, sym));
    CHECK(switch_at(switch_at(g, s1), s1) == g);
  }
}

TEST_CASE("circuit parity is switching-invariant, exhaustively") {
  std::vector<SignedGraph> samples = {triangle(-1, +1, +1), bowtie({-1, +1, -1, +1, +1, +1}),
                                      figure_eight(-1, +1), theta3(-1, -1, +1), necklace_2n3()};
  for (const SignedGraph& g : samples) {
    const int n = g.vertex_count();
    auto circuits_before = enumerate_circuits(g);
    for (unsigned bits = 0; bits < (1u << n); ++bits) {
      SwitchSet s;
      for (int i = 0; i < n; ++i)
        if (bits >> i & 1) s.push_back(g.vertices()[i]);
      SignedGraph h = switch_at(g, s);
      auto circuits_after = enumerate_circuits(h);
      REQUIRE(circuits_before.size() == circuits_after.size());
      for (std::size_t i = 0; i < circuits_before.size(); ++i) {
        CHECK(circuits_before[i].edge_set() == circuits_after[i].edge_set());
        CHECK(is_balanced(g, circuits_before[i]) == is_balanced(h, circuits_after[i]));
      }
    }
  }
}

TEST_CASE("eulerian total negative parity is switching-invariant") {
  std::mt19937 rng(31);
  std::vector<SignedGraph> samples = {figure_eight(-1, +1), triangle(-1, +1, +1), bowtie(),
                                      necklace_2n3(), k4()};
  for (const SignedGraph& g : samples) {
    if (!is_eulerian(g)) continue;
    for (int trial = 0; trial < 40; ++trial) {
      SignedGraph h = switch_at(g, random_switch_set(rng, g));
      CHECK(h.negative_count() % 2 == g.negative_count() % 2);
    }
  }
}

TEST_CASE("balancing switch set examples") {
  SignedGraph t = triangle(-1, -1, +1);
  auto s = balancing_switch_set(t, {0, 1, 2});
  REQUIRE(s.has_value());
  CHECK(*s == SwitchSet{1});
  CHECK(negative_count_in(switch_at(t, *s), {0, 1, 2}) == 0);

  CHECK(balancing_switch_set(triangle(), {0, 1, 2}).has_value());
  CHECK_FALSE(balancing_switch_set(triangle(-1, +1, +1), {0, 1, 2}).has_value());
  CHECK_FALSE(balancing_switch_set(figure_eight(-1, +1), {0}).has_value());
}

TEST_CASE("balance agrees with switch-set availability on random subgraphs") {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 150; ++trial) {
    SignedGraph g = random_signed(rng, 5, 7);
    EdgeMask mask = rng() % (g.full_mask() + 1);
    EdgeSet h = g.edge_set(mask);
    auto s = balancing_switch_set(g, h);
    CHECK(is_balanced_subgraph(g, h) == s.has_value());
    if (s) CHECK(negative_count_in(switch_at(g, *s), h) == 0);
  }
}

TEST_CASE("normalize_signature reaches the minimum") {
  CHECK(normalize_signature(triangle(-1, -1, +1)).negative_count() == 0);
  SignedGraph unb = normalize_signature(triangle(-1, +1, +1));
  CHECK(unb.negative_count() == 1);
  CHECK(negative_edges(unb) == EdgeSet{0});  // lexicographically least representative
  SignedGraph f8 = normalize_signature(figure_eight(-1, -1));
  CHECK(negative_edges(f8) == EdgeSet{0, 1});
  // per-circuit parity preserved
  SignedGraph b = bowtie({-1, +1, +1, -1, -1, +1});
  SignedGraph nb = normalize_signature(b);
  CHECK(signatures_equivalent(b, negative_edges(b), negative_edges(nb)));
}
