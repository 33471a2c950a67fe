#include "pmf/omcore.hpp"

#include <algorithm>
#include <set>

#include "pmf/error.hpp"

namespace pmf {

bool CovectorSet::contains(const SignVector& x) const {
  return std::binary_search(v.begin(), v.end(), x);
}

std::vector<SignVector> CovectorSet::nonzero() const {
  std::vector<SignVector> out;
  out.reserve(v.size());
  for (const auto& x : v)
    if (!x.is_zero()) out.push_back(x);
  return out;
}

std::vector<SignVector> cocircuits(const Chirotope& chi) {
  if (chi.identically_zero())
    throw InputError("cocircuits of an identically zero chirotope");
  const int d = chi.rank, m = chi.m;
  std::set<SignVector> out;
  std::vector<int> lambda(d - 1);
  auto rec = [&](auto&& self, int pos, int start) -> void {
    if (pos == d - 1) {
      SignVector c = SignVector::zero(m);
      std::vector<int> tuple(d);
      std::copy(lambda.begin(), lambda.end(), tuple.begin());
      bool nonzero = false;
      for (int e = 0; e < m; ++e) {
        tuple[d - 1] = e;
        c[e] = chi.eval_tuple(tuple);
        nonzero |= (c[e] != Sign::zero);
      }
      if (nonzero) {
        out.insert(c);
        out.insert(-c);
      }
      return;
    }
    for (int e = start; e < m; ++e) {
      lambda[pos] = e;
      self(self, pos + 1, e + 1);
    }
  };
  rec(rec, 0, 0);
  return {out.begin(), out.end()};
}

CovectorSet covectors(const Chirotope& chi, long long budget) {
  std::set<SignVector> closed;
  closed.insert(SignVector::zero(chi.m));
  std::vector<SignVector> work = cocircuits(chi);
  for (const auto& c : work) closed.insert(c);
  // Worklist closure under composition; lexicographic set order keeps the
  // iteration reproducible.
  while (!work.empty()) {
    SignVector x = work.back();
    work.pop_back();
    std::vector<SignVector> snapshot(closed.begin(), closed.end());
    for (const auto& y : snapshot) {
      for (const SignVector& z : {compose(x, y), compose(y, x)}) {
        if (closed.insert(z).second) {
          work.push_back(z);
          if (static_cast<long long>(closed.size()) > budget)
            throw BudgetError("covector closure exceeds " +
                              std::to_string(budget) + " vectors");
        }
      }
    }
  }
  CovectorSet s;
  s.m = chi.m;
  s.v.assign(closed.begin(), closed.end());
  return s;
}

AxiomReport covector_axiom_check(const CovectorSet& lcal) {
  AxiomReport rep;
  const auto& v = lcal.v;
  const int m = lcal.m;
  std::set<SignVector> members(v.begin(), v.end());
  if (!members.count(SignVector::zero(m))) {
    rep.ok = false;
    rep.failed_axiom = "zero";
    rep.message = "the zero vector is missing";
    return rep;
  }
  for (const auto& x : v) {
    if (!members.count(-x)) {
      rep.ok = false;
      rep.failed_axiom = "negation";
      rep.x = x;
      rep.message = "negation of " + x.str() + " is missing";
      return rep;
    }
  }
  for (const auto& x : v) {
    for (const auto& y : v) {
      if (!members.count(compose(x, y))) {
        rep.ok = false;
        rep.failed_axiom = "composition";
        rep.x = x;
        rep.y = y;
        rep.message = "composition " + x.str() + " o " + y.str() + " is missing";
        return rep;
      }
    }
  }
  for (const auto& x : v) {
    for (const auto& y : v) {
      SignVector xy = compose(x, y);
      for (int e = 0; e < m; ++e) {
        if (!(x[e] == Sign::plus && y[e] == Sign::minus)) continue;
        bool found = false;
        for (const auto& z : v) {
          if (z[e] != Sign::zero) continue;
          bool good = true;
          for (int f = 0; f < m && good; ++f) {
            if (x[f] == -y[f] && x[f] != Sign::zero) continue;  // separator
            good = (z[f] == xy[f]);
          }
          if (good) {
            found = true;
            break;
          }
        }
        if (!found) {
          rep.ok = false;
          rep.failed_axiom = "elimination";
          rep.x = x;
          rep.y = y;
          rep.e = e;
          rep.message = "no eliminant of " + x.str() + ", " + y.str() +
                        " at position " + std::to_string(e);
          return rep;
        }
      }
    }
  }
  return rep;
}

SignVector psi(const SignVector& s, const ColGraph& f, const SignMatrix& a) {
  if (!f.covers_columns())
    throw InputError("psi requires a graph with no isolated column node");
  SignMatrix saf = sa_matrix(s, f, a);
  SignVector z = SignVector::zero(saf.cols());
  for (int j = 0; j < saf.cols(); ++j) {
    bool pos = false, neg = false;
    for (int i = 0; i < saf.rows(); ++i) {
      pos |= (saf.at(i, j) == Sign::plus);
      neg |= (saf.at(i, j) == Sign::minus);
    }
    z[j] = (pos && neg) ? Sign::zero : pos ? Sign::plus : neg ? Sign::minus : Sign::zero;
  }
  return z;
}

namespace {

Sign minor_sign(const std::vector<std::vector<Rat>>& mat,
                const std::vector<int>& cols) {
  const int d = static_cast<int>(mat.size());
  std::vector<std::vector<Rat>> m(d, std::vector<Rat>(d));
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) m[i][k] = mat[i][cols[k]];
  Rat det = 1;
  for (int c = 0; c < d; ++c) {
    int piv = -1;
    for (int r = c; r < d; ++r)
      if (m[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return Sign::zero;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (int r = c + 1; r < d; ++r) {
      if (m[r][c] == 0) continue;
      Rat f = m[r][c] / m[c][c];
      for (int k = c; k < d; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det > 0 ? Sign::plus : det < 0 ? Sign::minus : Sign::zero;
}

// Strict feasibility of { y : sign(y . col_j) = pattern_j for j < taken }:
// maximize t subject to the signed constraints offset by t and a unit box,
// nonempty iff the optimum is positive. y is split into positives and
// negatives to fit the nonnegative LP form.
bool cell_feasible(const std::vector<std::vector<Rat>>& mat,
                   const std::vector<Sign>& pattern, int taken) {
  const int d = static_cast<int>(mat.size());
  const int nv = 2 * d + 1;  // y+, y-, t
  std::vector<std::vector<Rat>> a;
  std::vector<Rat> b;
  std::vector<int> rel;
  for (int j = 0; j < taken; ++j) {
    std::vector<Rat> row(nv, Rat(0));
    for (int i = 0; i < d; ++i) {
      row[i] = mat[i][j];
      row[d + i] = -mat[i][j];
    }
    if (pattern[j] == Sign::zero) {
      a.push_back(std::move(row));
      b.emplace_back(0);
      rel.push_back(0);
    } else {
      if (pattern[j] == Sign::minus)
        for (auto& q : row) q = -q;
      row[2 * d] = -1;  // y.col - t >= 0
      a.push_back(std::move(row));
      b.emplace_back(0);
      rel.push_back(1);
    }
  }
  for (int i = 0; i < 2 * d; ++i) {
    std::vector<Rat> row(nv, Rat(0));
    row[i] = 1;
    a.push_back(std::move(row));
    b.emplace_back(1);
    rel.push_back(-1);
  }
  {
    std::vector<Rat> row(nv, Rat(0));
    row[2 * d] = 1;
    a.push_back(std::move(row));
    b.emplace_back(1);
    rel.push_back(-1);
  }
  std::vector<Rat> c(nv, Rat(0));
  c[2 * d] = 1;
  LpResult r = solve_lp(a, b, rel, c);
  return r.status == LpStatus::optimal && r.value > 0;
}

}  // namespace

RealizableOracle realizable_oracle(const std::vector<std::vector<Rat>>& mat) {
  const int d = static_cast<int>(mat.size());
  if (d == 0) throw InputError("empty matrix");
  const int m = static_cast<int>(mat[0].size());
  for (const auto& row : mat)
    if (static_cast<int>(row.size()) != m) throw InputError("ragged matrix");
  if (m < d) throw RankError("matrix has fewer columns than rows");

  RealizableOracle oracle;
  oracle.chi.rank = d;
  oracle.chi.m = m;
  oracle.chi.labels.resize(m);
  for (int j = 0; j < m; ++j) oracle.chi.labels[j] = std::to_string(j + 1);
  std::vector<int> cols(d);
  for (int i = 0; i < d; ++i) cols[i] = i;
  bool any_nonzero = false;
  do {
    Sign s = minor_sign(mat, cols);
    any_nonzero |= (s != Sign::zero);
    oracle.chi.values.emplace(cols, s);
  } while ([&] {
    for (int i = d - 1; i >= 0; --i)
      if (cols[i] < m - d + i) {
        ++cols[i];
        for (int j = i + 1; j < d; ++j) cols[j] = cols[j - 1] + 1;
        return true;
      }
    return false;
  }());
  if (!any_nonzero) throw RankError("matrix rank is below the row count");

  oracle.covs.m = m;
  std::vector<Sign> pattern(m, Sign::zero);
  auto rec = [&](auto&& self, int j) -> void {
    if (!cell_feasible(mat, pattern, j)) return;
    if (j == m) {
      std::vector<Sign> copy = pattern;
      oracle.covs.v.emplace_back(std::move(copy));
      return;
    }
    for (Sign s : {Sign::minus, Sign::zero, Sign::plus}) {
      pattern[j] = s;
      self(self, j + 1);
    }
    pattern[j] = Sign::zero;
  };
  rec(rec, 0);
  std::sort(oracle.covs.v.begin(), oracle.covs.v.end());
  return oracle;
}

}  // namespace pmf
