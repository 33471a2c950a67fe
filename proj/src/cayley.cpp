#include "pmf/cayley.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "pmf/error.hpp"

namespace pmf {

long long triangulation_tree_count(int d, int n) {
  // binomial(d + n - 2, d - 1)
  long long num = 1, den = 1;
  for (int k = 1; k <= d - 1; ++k) {
    num *= (n - 1 + k);
    den *= k;
  }
  return num / den;
}

namespace {

// Affine chart for the 0/1 product points: drop the last coordinate of
// each factor. Edge (i,j) becomes a 0/1 vector of length (d-1)+(n-1).
std::vector<long long> chart_point(int d, int n, int i, int j) {
  std::vector<long long> v(d - 1 + n - 1, 0);
  if (i < d - 1) v[i] = 1;
  if (j < n - 1) v[d - 1 + j] = 1;
  return v;
}

// Fraction-free determinant (Bareiss). Sizes here stay below ~16 with
// 0/1 inputs, so long long is ample.
long long det_bareiss(std::vector<std::vector<long long>> m) {
  const int n = static_cast<int>(m.size());
  long long prev = 1;
  int sign = 1;
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (m[i][k] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return 0;
    if (piv != k) {
      std::swap(m[piv], m[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

long long normalized_volume(const ColGraph& tree) {
  auto edges = tree.edges();
  const int d = tree.d, n = tree.n();
  std::vector<std::vector<long long>> m;
  auto base = chart_point(d, n, edges[0].first, edges[0].second);
  for (std::size_t k = 1; k < edges.size(); ++k) {
    auto row = chart_point(d, n, edges[k].first, edges[k].second);
    for (std::size_t c = 0; c < row.size(); ++c) row[c] -= base[c];
    m.push_back(std::move(row));
  }
  long long det = det_bareiss(std::move(m));
  return det < 0 ? -det : det;
}

// Checks that conv(sigma) and conv(tau) meet in their common face: no point
// of the intersection may put positive barycentric weight on a vertex
// outside sigma cap tau. The barycentric representation in a simplex is
// unique, so maximizing each such weight over the intersection decides it.
bool pair_face_to_face(const ColGraph& sigma, const ColGraph& tau,
                       std::string* why) {
  const int d = sigma.d, n = sigma.n();
  auto es = sigma.edges();
  auto et = tau.edges();
  const int ks = static_cast<int>(es.size()), kt = static_cast<int>(et.size());
  const int nv = ks + kt;
  std::vector<std::vector<Rat>> a;
  std::vector<Rat> b;
  std::vector<int> rel;
  // Coordinates of the ambient product: d + n equality rows.
  for (int c = 0; c < d + n; ++c) {
    std::vector<Rat> row(nv, Rat(0));
    for (int k = 0; k < ks; ++k) {
      auto [i, j] = es[k];
      if (c == i || c == d + j) row[k] = 1;
    }
    for (int k = 0; k < kt; ++k) {
      auto [i, j] = et[k];
      if (c == i || c == d + j) row[ks + k] = -1;
    }
    a.push_back(std::move(row));
    b.emplace_back(0);
    rel.push_back(0);
  }
  std::vector<Rat> lam(nv, Rat(0)), mu(nv, Rat(0));
  for (int k = 0; k < ks; ++k) lam[k] = 1;
  for (int k = 0; k < kt; ++k) mu[ks + k] = 1;
  a.push_back(lam);
  b.emplace_back(1);
  rel.push_back(0);
  a.push_back(mu);
  b.emplace_back(1);
  rel.push_back(0);

  std::vector<Rat> zero(nv, Rat(0));
  if (solve_lp(a, b, rel, zero).status == LpStatus::infeasible)
    return true;  // disjoint simplices meet in the empty face

  auto check_weight = [&](int var, int i, int j) {
    std::vector<Rat> c(nv, Rat(0));
    c[var] = 1;
    LpResult r = solve_lp(a, b, rel, c);
    if (r.status == LpStatus::optimal && r.value > 0) {
      if (why)
        *why = "intersection uses vertex (" + std::to_string(i + 1) + "," +
               std::to_string(j + 1) + ") outside the common face";
      return false;
    }
    return true;
  };
  for (int k = 0; k < ks; ++k) {
    auto [i, j] = es[k];
    if (!tau.has_edge(i, j) && !check_weight(k, i, j)) return false;
  }
  for (int k = 0; k < kt; ++k) {
    auto [i, j] = et[k];
    if (!sigma.has_edge(i, j) && !check_weight(ks + k, i, j)) return false;
  }
  return true;
}

}  // namespace

ValidationReport validate_triangulation(const Triangulation& t,
                                        ValidationLevel level) {
  ValidationReport rep;
  rep.level = level;
  if (t.d < 1 || t.n < 1) {
    rep.ok = false;
    rep.message = "empty ground sets";
    return rep;
  }
  for (int k = 0; k < static_cast<int>(t.trees.size()); ++k) {
    const ColGraph& g = t.trees[k];
    if (g.d != t.d || g.n() != t.n || !g.spanning_tree()) {
      rep.ok = false;
      rep.bad_tree = k;
      rep.message = "tree " + std::to_string(k) + " is not a spanning tree of K_{" +
                    std::to_string(t.d) + "," + std::to_string(t.n) + "}";
      return rep;
    }
  }
  std::set<ColGraph> distinct(t.trees.begin(), t.trees.end());
  if (distinct.size() != t.trees.size()) {
    rep.ok = false;
    rep.message = "duplicate trees";
    return rep;
  }
  long long expected = triangulation_tree_count(t.d, t.n);
  if (static_cast<long long>(t.trees.size()) != expected) {
    rep.ok = false;
    rep.message = "tree count " + std::to_string(t.trees.size()) +
                  " differs from the required " + std::to_string(expected);
    return rep;
  }
  if (level == ValidationLevel::fast) return rep;

  long long vol = 0;
  for (int k = 0; k < static_cast<int>(t.trees.size()); ++k) {
    long long v = normalized_volume(t.trees[k]);
    if (v == 0) {
      rep.ok = false;
      rep.bad_tree = k;
      rep.message = "simplex " + std::to_string(k) + " is not full-dimensional";
      return rep;
    }
    if (v != 1) {
      rep.ok = false;
      rep.bad_tree = k;
      rep.message = "simplex " + std::to_string(k) + " has normalized volume " +
                    std::to_string(v);
      return rep;
    }
    vol += v;
  }
  if (vol != expected) {
    rep.ok = false;
    rep.message = "volume deficit: " + std::to_string(vol) + " of " +
                  std::to_string(expected);
    return rep;
  }
  for (int p = 0; p < static_cast<int>(t.trees.size()); ++p) {
    for (int q = p + 1; q < static_cast<int>(t.trees.size()); ++q) {
      std::string why;
      if (!pair_face_to_face(t.trees[p], t.trees[q], &why)) {
        rep.ok = false;
        rep.bad_pair = {p, q};
        rep.message = "simplices " + std::to_string(p) + " and " +
                      std::to_string(q) + " are not face-to-face: " + why;
        return rep;
      }
    }
  }
  return rep;
}

MixedSubdivision cells_of_subdivision(const Triangulation& t) {
  std::set<ColGraph> cells;
  for (const ColGraph& tree : t.trees) {
    auto edges = tree.edges();
    const int k = static_cast<int>(edges.size());
    for (std::uint32_t sub = 0; sub < (1u << k); ++sub) {
      ColGraph g(t.d, t.n);
      for (int e = 0; e < k; ++e)
        if ((sub >> e) & 1u) g.add_edge(edges[e].first, edges[e].second);
      if (g.covers_columns()) cells.insert(g);
    }
  }
  MixedSubdivision s;
  s.d = t.d;
  s.n = t.n;
  s.cells.assign(cells.begin(), cells.end());
  return s;
}

Rat mixed_height_at(const HeightMatrix& h, const std::vector<int>& p) {
  if (static_cast<int>(p.size()) != h.d)
    throw InputError("lattice point has wrong dimension");
  int sum = 0;
  for (int x : p) {
    if (x < 0) throw InputError("lattice point has a negative coordinate");
    sum += x;
  }
  if (sum != h.n)
    throw InputError("lattice point coordinates must sum to the dilation " +
                     std::to_string(h.n));
  if (h.n > 8)
    throw BudgetError("mixed heights use brute-force matchings (n <= 8)");

  std::vector<int> rows;
  for (int i = 0; i < h.d; ++i)
    for (int c = 0; c < p[i]; ++c) rows.push_back(i);
  std::vector<int> perm(h.n);
  std::iota(perm.begin(), perm.end(), 0);
  bool first = true;
  Rat best;
  do {
    Rat w = 0;
    for (int k = 0; k < h.n; ++k) w += h.at(rows[k], perm[k]);
    if (first || w > best) {
      best = w;
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

namespace {

void compositions(int n, int parts, std::vector<int>& acc,
                  std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    acc.push_back(n);
    out.push_back(acc);
    acc.pop_back();
    return;
  }
  for (int k = n; k >= 0; --k) {
    acc.push_back(k);
    compositions(n - k, parts - 1, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<std::pair<std::vector<int>, Rat>> mixed_heights(const HeightMatrix& h) {
  std::vector<std::vector<int>> points;
  std::vector<int> acc;
  compositions(h.n, h.d, acc, points);
  std::sort(points.begin(), points.end());
  std::vector<std::pair<std::vector<int>, Rat>> out;
  out.reserve(points.size());
  for (auto& p : points) out.emplace_back(p, mixed_height_at(h, p));
  return out;
}

Triangulation regular_triangulation(const HeightMatrix& h) {
  const int d = h.d, n = h.n;
  if (d < 1 || n < 1) throw InputError("heights need at least one row and column");
  Triangulation t;
  t.d = d;
  t.n = n;
  for (const ColGraph& tree : spanning_trees(d, n)) {
    // Potentials u_i + v_j = H_ij on tree edges, from a walk over the tree.
    std::vector<Rat> u(d), v(n);
    std::vector<char> seen_row(d, 0), seen_col(n, 0);
    seen_row[0] = 1;
    bool grew = true;
    while (grew) {
      grew = false;
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < n; ++j) {
          if (!tree.has_edge(i, j)) continue;
          if (seen_row[i] && !seen_col[j]) {
            v[j] = h.at(i, j) - u[i];
            seen_col[j] = 1;
            grew = true;
          } else if (seen_col[j] && !seen_row[i]) {
            u[i] = h.at(i, j) - v[j];
            seen_row[i] = 1;
            grew = true;
          }
        }
    }
    bool below = true;
    std::pair<int, int> tie{-1, -1};
    for (int i = 0; i < d && below; ++i)
      for (int j = 0; j < n; ++j) {
        if (tree.has_edge(i, j)) continue;
        Rat slack = h.at(i, j) - u[i] - v[j];
        if (slack < 0) {
          below = false;
          break;
        }
        if (slack == 0) tie = {i, j};
      }
    if (!below) continue;
    if (tie.first >= 0) {
      // The tying edge closes a cycle in the tree; swapping it against a
      // cycle edge of the same column yields a second tree on the same
      // supporting hyperplane.
      auto [ti, tj] = tie;
      ColGraph other = tree;
      other.add_edge(ti, tj);
      for (int i = 0; i < d; ++i) {
        if (i == ti || !tree.has_edge(i, tj)) continue;
        other.remove_edge(i, tj);
        if (other.spanning_tree()) break;
        other.add_edge(i, tj);
      }
      throw DegenerateHeightsError(
          "heights are degenerate: trees " + tree.str() + " and " + other.str() +
          " tie on the lower envelope");
    }
    t.trees.push_back(tree);
  }
  ValidationReport rep = validate_triangulation(t, ValidationLevel::fast);
  if (!rep.ok)
    throw InternalError("lower envelope selection failed: " + rep.message);
  return t;
}

}  // namespace pmf
