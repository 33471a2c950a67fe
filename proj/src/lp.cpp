#include "pmf/lp.hpp"

#include <algorithm>

#include "pmf/error.hpp"

namespace pmf {

namespace {

// Dense tableau kept in canonical form: basis columns are unit columns and
// the objective row has zero reduced cost on basic variables.
struct Tableau {
  int m = 0, n = 0;
  std::vector<std::vector<Rat>> a;  // m x n
  std::vector<Rat> b;               // m, kept >= 0
  std::vector<Rat> obj;             // n, reduced costs (maximization)
  Rat value;                        // objective value of the current basis
  std::vector<int> basis;           // m, variable basic in each row
  std::vector<char> allowed;        // n, columns eligible to enter

  void pivot(int row, int col) {
    Rat p = a[row][col];
    for (int j = 0; j < n; ++j) a[row][j] /= p;
    b[row] /= p;
    for (int i = 0; i < m; ++i) {
      if (i == row || a[i][col] == 0) continue;
      Rat f = a[i][col];
      for (int j = 0; j < n; ++j) a[i][j] -= f * a[row][j];
      b[i] -= f * b[row];
    }
    if (obj[col] != 0) {
      Rat f = obj[col];
      for (int j = 0; j < n; ++j) obj[j] -= f * a[row][j];
      value += f * b[row];
    }
    basis[row] = col;
  }

  void canonicalize(const std::vector<Rat>& cost) {
    obj = cost;
    value = 0;
    for (int i = 0; i < m; ++i) {
      int v = basis[i];
      if (obj[v] == 0) continue;
      Rat f = obj[v];
      for (int j = 0; j < n; ++j) obj[j] -= f * a[i][j];
      value += f * b[i];
    }
  }

  // Bland's rule: smallest eligible entering index; leaving row breaks
  // ratio ties by the smallest basic variable index. Returns false when
  // the problem is unbounded.
  bool maximize() {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < n; ++j)
        if (allowed[j] && obj[j] > 0) {
          enter = j;
          break;
        }
      if (enter < 0) return true;
      int leave = -1;
      Rat best;
      for (int i = 0; i < m; ++i) {
        if (a[i][enter] <= 0) continue;
        Rat ratio = b[i] / a[i][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpResult solve_lp(const std::vector<std::vector<Rat>>& a_in,
                  const std::vector<Rat>& b_in, const std::vector<int>& rel,
                  const std::vector<Rat>& c) {
  const int m = static_cast<int>(a_in.size());
  const int nv = static_cast<int>(c.size());
  if (static_cast<int>(b_in.size()) != m || static_cast<int>(rel.size()) != m)
    throw DimensionError("solve_lp: inconsistent system sizes");
  for (const auto& row : a_in)
    if (static_cast<int>(row.size()) != nv)
      throw DimensionError("solve_lp: ragged constraint matrix");

  // Normalize to b >= 0, then count slack and artificial columns.
  std::vector<std::vector<Rat>> a = a_in;
  std::vector<Rat> b = b_in;
  std::vector<int> r = rel;
  for (int i = 0; i < m; ++i)
    if (b[i] < 0) {
      for (auto& v : a[i]) v = -v;
      b[i] = -b[i];
      r[i] = -r[i];
    }
  int slacks = 0;
  for (int i = 0; i < m; ++i)
    if (r[i] != 0) ++slacks;

  Tableau t;
  t.m = m;
  t.n = nv + slacks + m;  // one artificial per row
  t.a.assign(m, std::vector<Rat>(t.n, Rat(0)));
  t.b = b;
  t.basis.assign(m, -1);
  t.allowed.assign(t.n, 1);
  int scol = nv;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < nv; ++j) t.a[i][j] = a[i][j];
    if (r[i] != 0) t.a[i][scol++] = (r[i] < 0) ? Rat(1) : Rat(-1);
    t.a[i][nv + slacks + i] = 1;
    t.basis[i] = nv + slacks + i;
  }

  // Phase 1: maximize minus the sum of artificials.
  std::vector<Rat> phase1(t.n, Rat(0));
  for (int i = 0; i < m; ++i) phase1[nv + slacks + i] = -1;
  t.canonicalize(phase1);
  if (!t.maximize()) throw InternalError("phase-1 objective unbounded");
  if (t.value != 0) return {LpStatus::infeasible, Rat(0), {}};

  // Drive leftover artificials out of the basis; a row with no real
  // column available is redundant and pivoting is impossible, but the
  // artificial stays at zero so it cannot re-enter.
  for (int i = 0; i < m; ++i) {
    if (t.basis[i] < nv + slacks) continue;
    for (int j = 0; j < nv + slacks; ++j)
      if (t.a[i][j] != 0) {
        t.pivot(i, j);
        break;
      }
  }
  for (int j = nv + slacks; j < t.n; ++j) t.allowed[j] = 0;

  // Phase 2.
  std::vector<Rat> cost(t.n, Rat(0));
  for (int j = 0; j < nv; ++j) cost[j] = c[j];
  t.canonicalize(cost);
  if (!t.maximize()) return {LpStatus::unbounded, Rat(0), {}};

  LpResult res;
  res.status = LpStatus::optimal;
  res.value = t.value;
  res.x.assign(nv, Rat(0));
  for (int i = 0; i < m; ++i)
    if (t.basis[i] < nv) res.x[t.basis[i]] = t.b[i];
  return res;
}

}  // namespace pmf
