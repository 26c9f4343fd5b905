#pragma once

// Small named graphs shared across the test suite.

#include <array>

#include "sigcirc/euler.hpp"

namespace testing_graphs {

using sigcirc::SignedGraph;

inline SignedGraph make(std::vector<int> verts, const std::vector<std::array<int, 3>>& uvs) {
  std::vector<std::tuple<int, int, int, int>> edges;
  int id = 0;
  for (const auto& e : uvs) edges.emplace_back(id++, e[0], e[1], e[2]);
  return SignedGraph(std::move(verts), edges);
}

inline SignedGraph triangle(int s01 = +1, int s12 = +1, int s20 = +1) {
  return make({0, 1, 2}, {{0, 1, s01}, {1, 2, s12}, {2, 0, s20}});
}

// two loops at one vertex
inline SignedGraph figure_eight(int s0 = +1, int s1 = +1) {
  return make({0}, {{0, 0, s0}, {0, 0, s1}});
}

// two triangles sharing vertex 0; signs per edge in order
// (0,1),(1,2),(2,0),(0,3),(3,4),(4,0)
inline SignedGraph bowtie(std::array<int, 6> s = {+1, +1, +1, +1, +1, +1}) {
  return make({0, 1, 2, 3, 4},
              {{0, 1, s[0]}, {1, 2, s[1]}, {2, 0, s[2]}, {0, 3, s[3]}, {3, 4, s[4]}, {4, 0, s[5]}});
}

// loop at 0, bridge 0-1, loop at 1
inline SignedGraph dumbbell(int s_left = -1, int s_right = -1) {
  return make({0, 1}, {{0, 0, s_left}, {0, 1, +1}, {1, 1, s_right}});
}

// three parallel edges between two vertices
inline SignedGraph theta3(int s0 = +1, int s1 = +1, int s2 = +1) {
  return make({0, 1}, {{0, 1, s0}, {0, 1, s1}, {0, 1, s2}});
}

inline SignedGraph square() {
  return make({1, 2, 3, 4}, {{1, 2, +1}, {2, 3, +1}, {3, 4, +1}, {4, 1, +1}});
}

inline SignedGraph k4() {
  return make({0, 1, 2, 3}, {{0, 1, +1}, {0, 2, +1}, {0, 3, +1}, {1, 2, +1}, {1, 3, +1}, {2, 3, +1}});
}

inline SignedGraph path2() { return make({0, 1, 2}, {{0, 1, +1}, {1, 2, +1}}); }

inline SignedGraph two_triangles() {
  return make({0, 1, 2, 3, 4, 5},
              {{0, 1, +1}, {1, 2, +1}, {2, 0, +1}, {3, 4, +1}, {4, 5, +1}, {5, 3, +1}});
}

inline SignedGraph necklace_2n3() { return sigcirc::build_necklace(3, {1, 1, 1, 1, 1, 1}, 0); }

inline SignedGraph four_negative_loops() {
  return make({0}, {{0, 0, -1}, {0, 0, -1}, {0, 0, -1}, {0, 0, -1}});
}

}  // namespace testing_graphs
