#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace pmf {

// Subgraph of the complete bipartite graph K_{R,E} with |R| = d rows and
// n columns, stored as one row bitmask per column. Rows and columns are
// 0-based internally; JSON I/O shifts to the 1-based external labels.
struct ColGraph {
  int d = 0;
  std::vector<std::uint32_t> cols;  // bit i of cols[j] set <=> edge (i,j)

  ColGraph() = default;
  ColGraph(int d_, int n_) : d(d_), cols(n_, 0u) {}

  int n() const { return static_cast<int>(cols.size()); }
  int edge_count() const;
  bool has_edge(int i, int j) const { return (cols[j] >> i) & 1u; }
  void add_edge(int i, int j) { cols[j] |= (1u << i); }
  void remove_edge(int i, int j) { cols[j] &= ~(1u << i); }

  std::uint32_t supp_rows() const;  // union of the column masks
  int deg_row(int i) const;
  bool contains(const ColGraph& other) const;
  bool covers_columns() const;  // every column nonempty
  bool acyclic() const;
  bool spanning_tree() const;  // acyclic with d + n - 1 edges

  std::vector<std::pair<int, int>> edges() const;  // sorted (row, col)
  std::string str() const;                         // e.g. "{11,12,23}"

  friend bool operator==(const ColGraph&, const ColGraph&) = default;
  auto operator<=>(const ColGraph&) const = default;
};

ColGraph graph_from_edges(int d, int n,
                          const std::vector<std::pair<int, int>>& edges);

ColGraph graph_union(const ColGraph& a, const ColGraph& b);

// All spanning trees of K_{d,n} in increasing ColGraph order.
std::vector<ColGraph> spanning_trees(int d, int n);

}  // namespace pmf
