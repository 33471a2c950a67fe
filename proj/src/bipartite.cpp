#include "pmf/bipartite.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "pmf/error.hpp"

namespace pmf {

int ColGraph::edge_count() const {
  int c = 0;
  for (auto m : cols) c += std::popcount(m);
  return c;
}

std::uint32_t ColGraph::supp_rows() const {
  std::uint32_t m = 0;
  for (auto c : cols) m |= c;
  return m;
}

int ColGraph::deg_row(int i) const {
  int c = 0;
  for (auto m : cols) c += (m >> i) & 1u;
  return c;
}

bool ColGraph::contains(const ColGraph& other) const {
  if (d != other.d || n() != other.n()) return false;
  for (int j = 0; j < n(); ++j)
    if ((other.cols[j] & ~cols[j]) != 0) return false;
  return true;
}

bool ColGraph::covers_columns() const {
  for (auto m : cols)
    if (m == 0) return false;
  return true;
}

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // Returns false if x and y were already connected.
  bool unite(int x, int y) {
    int a = find(x), b = find(y);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

bool ColGraph::acyclic() const {
  // A column connects all its rows; a cycle appears exactly when a column
  // touches two rows that are already connected through earlier columns.
  Dsu dsu(d);
  for (auto m : cols) {
    int first = -1;
    for (int i = 0; i < d; ++i) {
      if (!((m >> i) & 1u)) continue;
      if (first < 0) {
        first = i;
      } else if (!dsu.unite(first, i)) {
        return false;
      }
    }
  }
  return true;
}

bool ColGraph::spanning_tree() const {
  // For an acyclic bipartite graph on d + n nodes, d + n - 1 edges force
  // connectivity (and in particular no isolated node).
  return edge_count() == d + n() - 1 && acyclic();
}

std::vector<std::pair<int, int>> ColGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count());
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < n(); ++j)
      if (has_edge(i, j)) out.emplace_back(i, j);
  return out;
}

std::string ColGraph::str() const {
  std::string s = "{";
  bool first = true;
  for (auto [i, j] : edges()) {
    if (!first) s += ",";
    first = false;
    s += std::to_string(i + 1) + std::to_string(j + 1);
  }
  return s + "}";
}

ColGraph graph_from_edges(int d, int n,
                          const std::vector<std::pair<int, int>>& edges) {
  ColGraph g(d, n);
  for (auto [i, j] : edges) {
    if (i < 0 || i >= d || j < 0 || j >= n)
      throw InputError("edge (" + std::to_string(i + 1) + "," +
                       std::to_string(j + 1) + ") out of range");
    g.add_edge(i, j);
  }
  return g;
}

ColGraph graph_union(const ColGraph& a, const ColGraph& b) {
  if (a.d != b.d || a.n() != b.n())
    throw DimensionError("graph union over different ground sets");
  ColGraph g = a;
  for (int j = 0; j < g.n(); ++j) g.cols[j] |= b.cols[j];
  return g;
}

namespace {

void enumerate_trees(int d, int n, int col, int edges_so_far, Dsu& dsu,
                     ColGraph& current, std::vector<ColGraph>& out) {
  const int total = d + n - 1;
  if (col == n) {
    if (edges_so_far == total && current.spanning_tree()) out.push_back(current);
    return;
  }
  int remaining_cols = n - col;
  for (std::uint32_t m = 1; m < (1u << d); ++m) {
    int k = std::popcount(m);
    int edges = edges_so_far + k;
    // Each remaining column contributes at least one edge.
    if (edges + (remaining_cols - 1) > total) continue;
    Dsu saved = dsu;
    int first = -1;
    bool ok = true;
    for (int i = 0; i < d && ok; ++i) {
      if (!((m >> i) & 1u)) continue;
      if (first < 0)
        first = i;
      else if (!dsu.unite(first, i))
        ok = false;
    }
    if (ok) {
      current.cols[col] = m;
      enumerate_trees(d, n, col + 1, edges, dsu, current, out);
      current.cols[col] = 0;
    }
    dsu = saved;
  }
}

}  // namespace

std::vector<ColGraph> spanning_trees(int d, int n) {
  if (d < 1 || d > 31 || n < 1) throw InputError("spanning_trees: bad d or n");
  std::vector<ColGraph> out;
  ColGraph current(d, n);
  Dsu dsu(d);
  enumerate_trees(d, n, 0, 0, dsu, current, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace pmf
