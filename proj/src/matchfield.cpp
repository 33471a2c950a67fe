#include "pmf/matchfield.hpp"

#include <algorithm>
#include <set>

#include "pmf/error.hpp"

namespace pmf {

namespace {

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Lexicographic successor of a sorted k-subset of {0..m-1}.
bool next_subset(std::vector<int>& s, int m) {
  const int k = static_cast<int>(s.size());
  for (int i = k - 1; i >= 0; --i) {
    if (s[i] < m - k + i) {
      ++s[i];
      for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<int> first_subset(int k) {
  std::vector<int> s(k);
  for (int i = 0; i < k; ++i) s[i] = i;
  return s;
}

}  // namespace

bool MatchingField::total() const {
  return static_cast<long long>(matchings.size()) == binomial(m, rank);
}

Sign matching_sign(const std::vector<int>& rows_by_position) {
  int inversions = 0;
  for (std::size_t i = 0; i < rows_by_position.size(); ++i)
    for (std::size_t j = i + 1; j < rows_by_position.size(); ++j)
      if (rows_by_position[i] > rows_by_position[j]) ++inversions;
  return (inversions % 2 == 0) ? Sign::plus : Sign::minus;
}

Sign Chirotope::value(const std::vector<int>& sorted_subset) const {
  auto it = values.find(sorted_subset);
  return it == values.end() ? Sign::zero : it->second;
}

Sign Chirotope::eval_tuple(std::vector<int> tuple) const {
  int swaps = 0;
  for (std::size_t i = 1; i < tuple.size(); ++i)
    for (std::size_t j = i; j > 0 && tuple[j - 1] >= tuple[j]; --j) {
      if (tuple[j - 1] == tuple[j]) return Sign::zero;
      std::swap(tuple[j - 1], tuple[j]);
      ++swaps;
    }
  Sign v = value(tuple);
  return (swaps % 2 == 0) ? v : -v;
}

bool Chirotope::identically_zero() const {
  for (const auto& [s, v] : values)
    if (v != Sign::zero) return false;
  return true;
}

std::string Chirotope::export_lines() const {
  std::string out;
  auto subset = first_subset(rank);
  do {
    std::string line;
    for (int k = 0; k < rank; ++k) {
      if (k) line += ",";
      line += labels[subset[k]];
    }
    line += ":";
    line += sign_char(value(subset));
    out += line + "\n";
  } while (next_subset(subset, m));
  return out;
}

namespace {

// All R-saturating matchings inside one tree: row i is matched to a column
// adjacent in `allowed`, all targets distinct. Appends (sorted targets,
// rows-by-position) pairs.
void saturating_matchings(
    const std::vector<std::vector<int>>& allowed, int d,
    std::vector<std::pair<std::vector<int>, std::vector<int>>>& out) {
  std::vector<int> target(d, -1);
  std::set<int> used;
  auto rec = [&](auto&& self, int row) -> void {
    if (row == d) {
      std::vector<std::pair<int, int>> pairs;
      pairs.reserve(d);
      for (int i = 0; i < d; ++i) pairs.emplace_back(target[i], i);
      std::sort(pairs.begin(), pairs.end());
      std::vector<int> sigma(d), rows(d);
      for (int k = 0; k < d; ++k) {
        sigma[k] = pairs[k].first;
        rows[k] = pairs[k].second;
      }
      out.emplace_back(std::move(sigma), std::move(rows));
      return;
    }
    for (int j : allowed[row]) {
      if (used.count(j)) continue;
      used.insert(j);
      target[row] = j;
      self(self, row + 1);
      used.erase(j);
    }
  };
  rec(rec, 0);
}

MatchingField collect_field(
    int rank, int m, std::vector<std::string> labels,
    const std::vector<std::pair<std::vector<int>, std::vector<int>>>& found,
    bool require_total) {
  MatchingField mf;
  mf.rank = rank;
  mf.m = m;
  mf.labels = std::move(labels);
  std::map<std::vector<int>, std::set<std::vector<int>>> grouped;
  for (const auto& [sigma, rows] : found) grouped[sigma].insert(rows);
  for (const auto& [sigma, rowset] : grouped) {
    if (rowset.size() > 1) {
      std::string subset;
      for (int e : sigma) subset += (subset.empty() ? "" : ",") + mf.labels[e];
      throw InvalidTriangulationError(
          "subset {" + subset + "} carries " + std::to_string(rowset.size()) +
          " distinct matchings; the trees do not form a triangulation");
    }
    mf.matchings.emplace(sigma, *rowset.begin());
  }
  if (require_total && !mf.total())
    throw InvalidTriangulationError(
        "matching field misses " +
        std::to_string(binomial(m, rank) -
                       static_cast<long long>(mf.matchings.size())) +
        " subsets; the trees do not form a triangulation");
  return mf;
}

}  // namespace

MatchingField extract_matching_field(const Triangulation& t) {
  if (t.n < t.d) throw InputError("matching fields need n >= d");
  std::vector<std::pair<std::vector<int>, std::vector<int>>> found;
  for (const ColGraph& tree : t.trees) {
    std::vector<std::vector<int>> allowed(t.d);
    for (int i = 0; i < t.d; ++i)
      for (int j = 0; j < t.n; ++j)
        if (tree.has_edge(i, j)) allowed[i].push_back(j);
    saturating_matchings(allowed, t.d, found);
  }
  std::vector<std::string> labels(t.n);
  for (int j = 0; j < t.n; ++j) labels[j] = std::to_string(j + 1);
  return collect_field(t.d, t.n, std::move(labels), found, true);
}

std::pair<MatchingField, SignMatrix> pointed_augment(const Triangulation& t,
                                                     const SignMatrix& a) {
  if (a.rows() != t.d || a.cols() != t.n)
    throw DimensionError("sign matrix does not match the triangulation");
  const int m = t.d + t.n;
  // Ground set: copies of R first (labels ~1..~d), then E.
  std::vector<std::string> labels(m);
  for (int i = 0; i < t.d; ++i) labels[i] = "~" + std::to_string(i + 1);
  for (int j = 0; j < t.n; ++j) labels[t.d + j] = std::to_string(j + 1);

  SignMatrix augmented(t.d, m);
  for (int i = 0; i < t.d; ++i) {
    augmented.at(i, i) = Sign::plus;
    for (int j = 0; j < t.n; ++j) augmented.at(i, t.d + j) = a.at(i, j);
  }

  std::vector<std::pair<std::vector<int>, std::vector<int>>> found;
  for (const ColGraph& tree : t.trees) {
    std::vector<std::vector<int>> allowed(t.d);
    for (int i = 0; i < t.d; ++i) {
      allowed[i].push_back(i);  // the edge to the copy of row i
      for (int j = 0; j < t.n; ++j)
        if (tree.has_edge(i, j)) allowed[i].push_back(t.d + j);
    }
    saturating_matchings(allowed, t.d, found);
  }
  MatchingField mf = collect_field(t.d, m, std::move(labels), found, false);
  return {std::move(mf), std::move(augmented)};
}

Chirotope chirotope(const MatchingField& mf, const SignMatrix& a) {
  if (a.rows() != mf.rank || a.cols() != mf.m)
    throw DimensionError("sign matrix does not match the matching field");
  Chirotope chi;
  chi.rank = mf.rank;
  chi.m = mf.m;
  chi.labels = mf.labels;
  for (const auto& [sigma, rows] : mf.matchings) {
    Sign v = matching_sign(rows);
    for (int k = 0; k < mf.rank; ++k) v = v * a.at(rows[k], sigma[k]);
    chi.values.emplace(sigma, v);
  }
  if (chi.identically_zero())
    throw InvalidTriangulationError("chirotope is identically zero");
  return chi;
}

GpReport gp_check(const Chirotope& chi, long long budget) {
  const int d = chi.rank, m = chi.m;
  GpReport rep;
  long long relations = binomial(m, d - 1) * binomial(m, d + 1);
  if (relations > budget)
    throw BudgetError("Grassmann-Pluecker scan needs " +
                      std::to_string(relations) + " relations, budget is " +
                      std::to_string(budget));
  if (d + 1 > m) return rep;  // no (d+1)-subsets, nothing to check

  // Sorted tuples suffice: permutations rescale every term by the same
  // sign and tuples with repeats hold automatically.
  auto x = first_subset(d - 1);
  do {
    auto y = first_subset(d + 1);
    do {
      bool pos = false, neg = false, nonzero = false;
      std::vector<int> left(d);
      std::copy(x.begin(), x.end(), left.begin());
      std::vector<int> right(d);
      for (int k = 0; k <= d; ++k) {
        left[d - 1] = y[k];
        Sign s1 = chi.eval_tuple(left);
        if (s1 == Sign::zero) continue;
        int t = 0;
        for (int q = 0; q <= d; ++q)
          if (q != k) right[t++] = y[q];
        Sign s2 = chi.value(right);
        if (s2 == Sign::zero) continue;
        nonzero = true;
        Sign term = (k % 2 == 0) ? s1 * s2 : -(s1 * s2);
        pos |= (term == Sign::plus);
        neg |= (term == Sign::minus);
      }
      if (nonzero && !(pos && neg)) {
        rep.ok = false;
        rep.x = x;
        rep.y = y;
        std::string xs, ys;
        for (int e : x) xs += (xs.empty() ? "" : ",") + chi.labels[e];
        for (int e : y) ys += (ys.empty() ? "" : ",") + chi.labels[e];
        rep.message = "relation for x=(" + xs + "), y=(" + ys +
                      ") has nonzero terms of only one sign";
        return rep;
      }
    } while (next_subset(y, m));
  } while (next_subset(x, m));
  return rep;
}

}  // namespace pmf
