#pragma once

#include <random>
#include <vector>

#include "pmf/cayley.hpp"
#include "pmf/error.hpp"
#include "pmf/sign.hpp"

namespace fixtures {

using namespace pmf;

// Running example: heights (max-tropical) and signs of the worked d=n=3
// instance used across the test suite.
inline HeightMatrix example_heights() {
  HeightMatrix h;
  h.d = 3;
  h.n = 3;
  h.h = {Rat(0), Rat(3), Rat(2), Rat(0), Rat(0), Rat(0), Rat(1), Rat(3), Rat(0)};
  return h;
}

inline SignMatrix example_signs() {
  return SignMatrix({{-1, 1, -1}, {1, 1, -1}, {-1, -1, -1}});
}

inline HeightMatrix negated(HeightMatrix h) {
  for (auto& v : h.h) v = -v;
  return h;
}

inline Triangulation example_triangulation() {
  return regular_triangulation(negated(example_heights()));
}

// 1-based edge list helper.
inline ColGraph graph(int d, int n, std::vector<std::pair<int, int>> edges) {
  for (auto& [i, j] : edges) {
    --i;
    --j;
  }
  return graph_from_edges(d, n, edges);
}

inline Triangulation staircase_d2n3() {
  Triangulation t;
  t.d = 2;
  t.n = 3;
  t.trees = {graph(2, 3, {{1, 1}, {1, 2}, {1, 3}, {2, 3}}),
             graph(2, 3, {{1, 1}, {1, 2}, {2, 2}, {2, 3}}),
             graph(2, 3, {{1, 1}, {2, 1}, {2, 2}, {2, 3}})};
  return t;
}

inline HeightMatrix random_heights(int d, int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> dist(0, 1'000'000);
  HeightMatrix h;
  h.d = d;
  h.n = n;
  h.h.resize(d * n);
  for (auto& v : h.h) v = Rat(dist(rng));
  return h;
}

inline SignMatrix random_signs(int d, int n, std::mt19937_64& rng) {
  SignMatrix a(d, n);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < n; ++j)
      a.at(i, j) = coin(rng) ? Sign::plus : Sign::minus;
  return a;
}

// Regular triangulation of seeded random integer heights, reseeding on the
// (very unlikely) degenerate draw.
inline Triangulation random_triangulation(int d, int n, std::mt19937_64& rng) {
  for (;;) {
    try {
      return regular_triangulation(random_heights(d, n, rng));
    } catch (const DegenerateHeightsError&) {
    }
  }
}

inline SignVector random_sign_vector(int m, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-1, 1);
  SignVector v = SignVector::zero(m);
  for (int i = 0; i < m; ++i) v[i] = Sign(static_cast<std::int8_t>(dist(rng)));
  return v;
}

}  // namespace fixtures
