#include <map>
#include <random>
#include <string>

#include "doctest.h"
#include "fixtures.hpp"
#include "pmf/cayley.hpp"
#include "pmf/error.hpp"
#include "pmf/json_io.hpp"

using namespace pmf;
using fixtures::graph;

namespace {

// Independent assignment oracle: bitmask DP over columns instead of the
// permutation scan used by mixed_height_at.
Rat assignment_dp(const std::vector<std::vector<Rat>>& w) {
  const int n = static_cast<int>(w.size());
  std::map<std::uint32_t, Rat> best{{0u, Rat(0)}};
  for (int r = 0; r < n; ++r) {
    std::map<std::uint32_t, Rat> next;
    for (const auto& [mask, val] : best) {
      for (int c = 0; c < n; ++c) {
        if ((mask >> c) & 1u) continue;
        std::uint32_t m2 = mask | (1u << c);
        Rat v2 = val + w[r][c];
        auto it = next.find(m2);
        if (it == next.end() || it->second < v2) next[m2] = v2;
      }
    }
    best = std::move(next);
  }
  return best.at((1u << n) - 1);
}

}  // namespace

TEST_CASE("mixed heights reproduce the worked example table") {
  HeightMatrix h = fixtures::example_heights();
  const std::pair<std::vector<int>, long long> expected[] = {
      {{3, 0, 0}, 5}, {{2, 0, 1}, 6}, {{2, 1, 0}, 5}, {{1, 0, 2}, 6},
      {{1, 1, 1}, 5}, {{1, 2, 0}, 3}, {{0, 0, 3}, 4}, {{0, 1, 2}, 4},
      {{0, 2, 1}, 3}, {{0, 3, 0}, 0}};
  for (const auto& [p, v] : expected) CHECK(mixed_height_at(h, p) == Rat(v));
  CHECK(mixed_heights(h).size() == 10);
}

TEST_CASE("mixed heights agree with an independent assignment oracle") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 6; ++trial) {
    int d = 2 + static_cast<int>(rng() % 2);
    int n = 2 + static_cast<int>(rng() % 3);
    HeightMatrix h = fixtures::random_heights(d, n, rng);
    for (const auto& [p, v] : mixed_heights(h)) {
      std::vector<std::vector<Rat>> w;
      for (int i = 0; i < d; ++i)
        for (int c = 0; c < p[i]; ++c) {
          std::vector<Rat> row(n);
          for (int j = 0; j < n; ++j) row[j] = h.at(i, j);
          w.push_back(std::move(row));
        }
      CHECK(v == assignment_dp(w));
    }
  }
}

TEST_CASE("mixed heights input validation") {
  HeightMatrix h = fixtures::example_heights();
  CHECK_THROWS_AS(mixed_height_at(h, {1, 1}), InputError);
  CHECK_THROWS_AS(mixed_height_at(h, {4, 0, 0}), InputError);
  CHECK_THROWS_AS(mixed_height_at(h, {-1, 2, 2}), InputError);
}

TEST_CASE("staircase triangulation validates at the exact level") {
  Triangulation t = fixtures::staircase_d2n3();
  ValidationReport fast = validate_triangulation(t, ValidationLevel::fast);
  CHECK(fast.ok);
  ValidationReport exact = validate_triangulation(t, ValidationLevel::exact);
  CHECK(exact.ok);
  CHECK(triangulation_tree_count(2, 3) == 3);
}

TEST_CASE("missing trees fail validation by count") {
  Triangulation t = fixtures::staircase_d2n3();
  t.trees.pop_back();
  CHECK_FALSE(validate_triangulation(t, ValidationLevel::fast).ok);

  Triangulation paths;
  paths.d = 2;
  paths.n = 3;
  paths.trees = {graph(2, 3, {{1, 1}, {1, 2}, {1, 3}, {2, 3}}),
                 graph(2, 3, {{1, 1}, {2, 1}, {2, 2}, {2, 3}})};
  ValidationReport rep = validate_triangulation(paths, ValidationLevel::fast);
  CHECK_FALSE(rep.ok);
  CHECK(rep.message.find("count") != std::string::npos);
}

TEST_CASE("non trees are rejected with the offending index") {
  Triangulation t = fixtures::staircase_d2n3();
  t.trees[1] = graph(2, 3, {{1, 1}, {2, 1}, {1, 2}, {2, 2}});  // 4-cycle
  ValidationReport rep = validate_triangulation(t, ValidationLevel::fast);
  CHECK_FALSE(rep.ok);
  CHECK(rep.bad_tree == 1);
}

TEST_CASE("overlapping simplices fail the exact face-to-face check") {
  // Both trees cover the interval [2,3] of the dilated segment, so their
  // interiors overlap even though counts and volumes look fine.
  Triangulation t;
  t.d = 2;
  t.n = 3;
  t.trees = {graph(2, 3, {{1, 1}, {1, 2}, {1, 3}, {2, 3}}),
             graph(2, 3, {{1, 1}, {1, 2}, {1, 3}, {2, 1}}),
             graph(2, 3, {{1, 1}, {2, 1}, {2, 2}, {2, 3}})};
  CHECK(validate_triangulation(t, ValidationLevel::fast).ok);
  ValidationReport rep = validate_triangulation(t, ValidationLevel::exact);
  CHECK_FALSE(rep.ok);
  CHECK(rep.bad_pair.first >= 0);
}

TEST_CASE("cells of a single tree enumerate column-covering subsets") {
  Triangulation t;
  t.d = 2;
  t.n = 3;
  t.trees = {graph(2, 3, {{1, 1}, {1, 2}, {1, 3}, {2, 3}})};
  MixedSubdivision s = cells_of_subdivision(t);
  // Columns 1 and 2 are forced; column 3 has three nonempty choices.
  CHECK(s.cells.size() == 3);
  for (const ColGraph& c : s.cells) {
    CHECK(c.covers_columns());
    CHECK(t.trees[0].contains(c));
  }

  Triangulation tiny;
  tiny.d = 1;
  tiny.n = 1;
  tiny.trees = {graph(1, 1, {{1, 1}})};
  CHECK(cells_of_subdivision(tiny).cells.size() == 1);
}

TEST_CASE("cells are closed under single edge deletions") {
  MixedSubdivision s = cells_of_subdivision(fixtures::example_triangulation());
  std::set<ColGraph> members(s.cells.begin(), s.cells.end());
  for (const ColGraph& c : s.cells) {
    for (auto [i, j] : c.edges()) {
      ColGraph g = c;
      g.remove_edge(i, j);
      if (g.covers_columns()) CHECK(members.count(g) == 1);
    }
  }
  for (const ColGraph& tree : fixtures::example_triangulation().trees)
    CHECK(members.count(tree) == 1);
}

TEST_CASE("regular triangulation of the worked example") {
  Triangulation t = fixtures::example_triangulation();
  CHECK(t.trees.size() == 6);
  CHECK(validate_triangulation(t, ValidationLevel::exact).ok);
  // The three full cells named in the running example are present.
  std::set<ColGraph> trees(t.trees.begin(), t.trees.end());
  CHECK(trees.count(graph(3, 3, {{1, 1}, {1, 2}, {1, 3}, {2, 1}, {3, 1}})));
  CHECK(trees.count(graph(3, 3, {{1, 2}, {1, 3}, {2, 1}, {3, 1}, {3, 2}})));
  CHECK(trees.count(graph(3, 3, {{1, 3}, {2, 1}, {2, 3}, {3, 1}, {3, 2}})));
}

TEST_CASE("degenerate heights are reported with a tying pair") {
  HeightMatrix flat;
  flat.d = 2;
  flat.n = 2;
  flat.h.assign(4, Rat(0));
  CHECK_THROWS_AS(regular_triangulation(flat), DegenerateHeightsError);
  try {
    regular_triangulation(flat);
  } catch (const DegenerateHeightsError& e) {
    CHECK(std::string(e.what()).find("tie") != std::string::npos);
  }
}

TEST_CASE("random heights give valid triangulations") {
  std::mt19937_64 rng(5);
  for (auto [d, n] : {std::pair{2, 3}, {2, 4}, {3, 3}}) {
    Triangulation t = fixtures::random_triangulation(d, n, rng);
    CHECK(validate_triangulation(t, ValidationLevel::exact).ok);
  }
}

TEST_CASE("row and column shifts do not change the triangulation") {
  std::mt19937_64 rng(17);
  HeightMatrix h = fixtures::random_heights(3, 3, rng);
  Triangulation base = regular_triangulation(h);
  HeightMatrix shifted = h;
  for (int j = 0; j < 3; ++j) shifted.at(1, j) += Rat(777);
  for (int i = 0; i < 3; ++i) shifted.at(i, 2) += Rat(-355);
  Triangulation moved = regular_triangulation(shifted);
  CHECK(base.trees == moved.trees);
}

TEST_CASE("triangulation and heights json round trips") {
  Triangulation t = fixtures::staircase_d2n3();
  Json j = triangulation_to_json(t);
  Triangulation back = triangulation_from_json(j);
  CHECK(back.d == t.d);
  CHECK(back.trees == t.trees);

  Json hj = Json::parse(R"({"H": [[0, "3", "1/2"], ["-2/3", 1, 0]]})");
  HeightMatrix h = heights_from_json(hj);
  CHECK(h.at(0, 2) == Rat(1, 2));
  CHECK(h.at(1, 0) == Rat(-2, 3));
  CHECK(rat_to_string(h.at(1, 0)) == "-2/3");
  CHECK_THROWS_AS(heights_from_json(Json::parse(R"({"H": [["1/0"]]})")), InputError);
}
