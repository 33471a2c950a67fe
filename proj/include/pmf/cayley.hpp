#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pmf/bipartite.hpp"
#include "pmf/lp.hpp"

namespace pmf {

// Triangulation of the product of simplices, encoded by spanning trees of
// K_{R,E} via the identification of product vertices with edges (i,j).
struct Triangulation {
  int d = 0, n = 0;
  std::vector<ColGraph> trees;
};

// Cells of the fine mixed subdivision of the dilated simplex: forests
// inside a spanning tree with no isolated column node.
struct MixedSubdivision {
  int d = 0, n = 0;
  std::vector<ColGraph> cells;  // sorted, deduplicated
};

struct HeightMatrix {
  int d = 0, n = 0;
  std::vector<Rat> h;  // row-major
  Rat at(int i, int j) const { return h[i * n + j]; }
  Rat& at(int i, int j) { return h[i * n + j]; }
};

enum class ValidationLevel { fast, exact };

struct ValidationReport {
  bool ok = true;
  ValidationLevel level = ValidationLevel::fast;
  std::string message;
  int bad_tree = -1;             // index of an offending tree, if any
  std::pair<int, int> bad_pair{-1, -1};  // offending tree pair, if any
};

// Number of maximal simplices of any triangulation of the product,
// i.e. binomial(d + n - 2, d - 1).
long long triangulation_tree_count(int d, int n);

// fast: shape checks (spanning trees, tree count). exact: additionally
// verifies with exact arithmetic on the 0/1 point configuration that each
// simplex is full-dimensional with unit normalized volume, that volumes
// sum to the total, and that every pair intersects in a common face.
ValidationReport validate_triangulation(const Triangulation& t,
                                        ValidationLevel level);

MixedSubdivision cells_of_subdivision(const Triangulation& t);

// Height of the lattice point p of the n-fold dilated simplex: maximum
// weight of a perfect matching of the n x n matrix made of p_i copies of
// row i. Exact brute force; n above 8 raises a budget error.
Rat mixed_height_at(const HeightMatrix& h, const std::vector<int>& p);

// All lattice points (compositions of n into d parts) with their heights,
// in lexicographic point order.
std::vector<std::pair<std::vector<int>, Rat>> mixed_heights(const HeightMatrix& h);

// Regular triangulation from the lower envelope of the lifted points
// (min convention; negate H for max-tropical data). Throws
// DegenerateHeightsError naming a tying tree pair if H is not generic.
Triangulation regular_triangulation(const HeightMatrix& h);

}  // namespace pmf
