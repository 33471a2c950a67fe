#include "pmf/poset.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <mutex>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

#include "pmf/error.hpp"

namespace pmf {

using boost::multiprecision::cpp_int;

void Bitset::or_with(const Bitset& o) {
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
}

bool Bitset::intersects(const Bitset& o) const {
  for (std::size_t i = 0; i < w_.size(); ++i)
    if (w_[i] & o.w_[i]) return true;
  return false;
}

bool Bitset::contains(const Bitset& o) const {
  for (std::size_t i = 0; i < w_.size(); ++i)
    if (o.w_[i] & ~w_[i]) return false;
  return true;
}

bool Bitset::any() const {
  for (auto w : w_)
    if (w) return true;
  return false;
}

int Bitset::count() const {
  int c = 0;
  for (auto w : w_) c += std::popcount(w);
  return c;
}

int Bitset::highest() const {
  for (int i = static_cast<int>(w_.size()) - 1; i >= 0; --i)
    if (w_[i]) return i * 64 + 63 - std::countl_zero(w_[i]);
  return -1;
}

int Bitset::lowest() const {
  for (std::size_t i = 0; i < w_.size(); ++i)
    if (w_[i]) return static_cast<int>(i) * 64 + std::countr_zero(w_[i]);
  return -1;
}

Bitset Bitset::and_with(const Bitset& o) const {
  Bitset r(n_);
  for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
  return r;
}

std::vector<int> Bitset::bits() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < w_.size(); ++i) {
    std::uint64_t w = w_[i];
    while (w) {
      int b = std::countr_zero(w);
      out.push_back(static_cast<int>(i) * 64 + b);
      w &= w - 1;
    }
  }
  return out;
}

EquivalenceClasses EquivalenceClasses::identity(int n) {
  EquivalenceClasses c;
  c.class_of.resize(n);
  std::iota(c.class_of.begin(), c.class_of.end(), 0);
  c.count = n;
  return c;
}

EquivalenceClasses EquivalenceClasses::from_map(std::vector<int> raw_ids) {
  EquivalenceClasses c;
  c.class_of.assign(raw_ids.size(), -1);
  std::map<int, int> renumber;
  for (std::size_t i = 0; i < raw_ids.size(); ++i) {
    auto [it, inserted] =
        renumber.emplace(raw_ids[i], static_cast<int>(renumber.size()));
    c.class_of[i] = it->second;
  }
  c.count = static_cast<int>(renumber.size());
  return c;
}

std::vector<std::vector<int>> EquivalenceClasses::members() const {
  std::vector<std::vector<int>> m(count);
  for (int i = 0; i < size(); ++i) m[class_of[i]].push_back(i);
  return m;
}

struct Poset::Memo {
  std::once_flag built;
  std::vector<Bitset> down, up;  // indexed by element id, bits by topo position
};

Poset::Poset(int n, std::vector<std::pair<int, int>> covers)
    : n_(n), covers_(std::move(covers)), memo_(std::make_shared<Memo>()) {
  std::sort(covers_.begin(), covers_.end());
  covers_.erase(std::unique(covers_.begin(), covers_.end()), covers_.end());
  up_adj_.resize(n_);
  down_adj_.resize(n_);
  for (auto [lo, hi] : covers_) {
    if (lo < 0 || lo >= n_ || hi < 0 || hi >= n_)
      throw InputError("cover index out of range");
    if (lo == hi) throw InputError("cover relation contains a loop");
    up_adj_[lo].push_back(hi);
    down_adj_[hi].push_back(lo);
  }
  // Kahn's algorithm; a leftover node means the cover relation has a cycle.
  std::vector<int> indeg(n_);
  for (auto [lo, hi] : covers_) indeg[hi]++;
  std::vector<int> queue;
  for (int i = 0; i < n_; ++i)
    if (indeg[i] == 0) queue.push_back(i);
  topo_.reserve(n_);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int x = queue[head];
    topo_.push_back(x);
    for (int y : up_adj_[x])
      if (--indeg[y] == 0) queue.push_back(y);
  }
  if (static_cast<int>(topo_.size()) != n_)
    throw InputError("cover relation has a cycle");
  pos_.resize(n_);
  for (int k = 0; k < n_; ++k) pos_[topo_[k]] = k;
}

void Poset::ensure_memo() const {
  std::call_once(memo_->built, [this] {
    auto& down = memo_->down;
    auto& up = memo_->up;
    down.assign(n_, Bitset(n_));
    up.assign(n_, Bitset(n_));
    for (int k = 0; k < n_; ++k) {
      int x = topo_[k];
      down[x].set(k);
      for (int y : down_adj_[x]) down[x].or_with(down[y]);
    }
    for (int k = n_ - 1; k >= 0; --k) {
      int x = topo_[k];
      up[x].set(k);
      for (int y : up_adj_[x]) up[x].or_with(up[y]);
    }
  });
}

bool Poset::leq(int a, int b) const {
  ensure_memo();
  return memo_->down[b].test(pos_[a]);
}

const Bitset& Poset::down_set(int x) const {
  ensure_memo();
  return memo_->down[x];
}

const Bitset& Poset::up_set(int x) const {
  ensure_memo();
  return memo_->up[x];
}

std::vector<int> Poset::minimals() const {
  std::vector<int> out;
  for (int i = 0; i < n_; ++i)
    if (down_adj_[i].empty()) out.push_back(i);
  return out;
}

std::vector<int> Poset::maximals() const {
  std::vector<int> out;
  for (int i = 0; i < n_; ++i)
    if (up_adj_[i].empty()) out.push_back(i);
  return out;
}

bool Poset::is_cover(int a, int b) const {
  return std::binary_search(covers_.begin(), covers_.end(), std::pair{a, b});
}

std::string Poset::to_dot(const std::vector<std::string>& labels) const {
  std::string s = "digraph hasse {\n  rankdir=BT;\n";
  for (int i = 0; i < n_; ++i) {
    s += "  n" + std::to_string(i);
    if (!labels.empty()) s += " [label=\"" + labels[i] + "\"]";
    s += ";\n";
  }
  for (auto [lo, hi] : covers_)
    s += "  n" + std::to_string(lo) + " -> n" + std::to_string(hi) + ";\n";
  return s + "}\n";
}

namespace {

struct ClassMasks {
  std::vector<Bitset> mask;      // per class, bits by topo position
  std::vector<Bitset> up_union;  // union of up-sets of members
  std::vector<std::vector<int>> members;
};

ClassMasks build_class_masks(const Poset& p, const EquivalenceClasses& cls) {
  ClassMasks cm;
  cm.members = cls.members();
  cm.mask.assign(cls.count, Bitset(p.size()));
  cm.up_union.assign(cls.count, Bitset(p.size()));
  for (int x = 0; x < p.size(); ++x) {
    int c = cls.class_of[x];
    cm.mask[c].set(p.topo_pos(x));
    cm.up_union[c].or_with(p.up_set(x));
  }
  return cm;
}

}  // namespace

HomogeneityReport is_homogeneous(const Poset& p, const EquivalenceClasses& cls) {
  if (static_cast<int>(cls.class_of.size()) != p.size())
    throw InputError("equivalence classes do not cover the poset");
  ClassMasks cm = build_class_masks(p, cls);
  for (int c = 0; c < cls.count; ++c) {
    for (int d = 0; d < cls.count; ++d) {
      if (c == d) continue;
      if (!cm.up_union[c].intersects(cm.mask[d])) continue;
      for (int u : cm.members[c]) {
        if (p.up_set(u).intersects(cm.mask[d])) continue;
        // Find the pair establishing [c] <= [d] for the witness.
        HomogeneityReport r;
        r.ok = false;
        r.u = u;
        for (int u0 : cm.members[c]) {
          Bitset above = p.up_set(u0).and_with(cm.mask[d]);
          int b = above.lowest();
          if (b >= 0) {
            r.tau = u0;
            r.sigma = p.topo_order()[b];
            break;
          }
        }
        r.message = "element " + std::to_string(r.u) + " in the class of " +
                    std::to_string(r.tau) + " has no upper bound in the class of " +
                    std::to_string(r.sigma);
        return r;
      }
    }
  }
  return {};
}

Poset quotient_unchecked(const Poset& p, const EquivalenceClasses& cls) {
  ClassMasks cm = build_class_masks(p, cls);
  const int k = cls.count;
  // rel[c] has bit d iff [c] <= [d]; relt is the transpose.
  std::vector<Bitset> rel(k, Bitset(k)), relt(k, Bitset(k));
  for (int c = 0; c < k; ++c)
    for (int d = 0; d < k; ++d)
      if (c == d || cm.up_union[c].intersects(cm.mask[d])) {
        rel[c].set(d);
        relt[d].set(c);
      }
  for (int c = 0; c < k; ++c)
    for (int d = c + 1; d < k; ++d)
      if (rel[c].test(d) && rel[d].test(c))
        throw InternalError("quotient relation is not antisymmetric");
  std::vector<std::pair<int, int>> covers;
  for (int c = 0; c < k; ++c) {
    for (int d : rel[c].bits()) {
      if (d == c) continue;
      // (c,d) is a cover iff no class e with c < e < d.
      Bitset between = rel[c].and_with(relt[d]);
      bool has_mid = false;
      for (int e : between.bits())
        if (e != c && e != d) {
          has_mid = true;
          break;
        }
      if (!has_mid) covers.emplace_back(c, d);
    }
  }
  return Poset(k, std::move(covers));
}

Poset quotient(const Poset& p, const EquivalenceClasses& cls) {
  HomogeneityReport h = is_homogeneous(p, cls);
  if (!h.ok) throw ContractError("quotient of a non-homogeneous relation: " + h.message);
  return quotient_unchecked(p, cls);
}

ElementaryReport is_elementary(const Poset& p, const EquivalenceClasses& cls) {
  auto members = cls.members();
  for (int c = 0; c < cls.count; ++c) {
    auto& m = members[c];
    if (m.size() == 1) continue;
    ElementaryReport bad;
    bad.ok = false;
    bad.bad_class = c;
    if (m.size() != 3) {
      bad.message = "class " + std::to_string(c) + " has " +
                    std::to_string(m.size()) + " elements";
      return bad;
    }
    // One element must be covered by the other two.
    bool found = false;
    for (int g = 0; g < 3 && !found; ++g) {
      int s = m[(g + 1) % 3], t = m[(g + 2) % 3];
      found = p.is_cover(m[g], s) && p.is_cover(m[g], t);
    }
    if (!found) {
      bad.message = "class " + std::to_string(c) +
                    " is not of the two-cover-one shape";
      return bad;
    }
  }
  return {};
}

GradeResult grade(const Poset& p) {
  const int n = p.size();
  GradeResult res;
  res.rank.assign(n, 0);
  std::vector<int> comp(n, -1);
  std::vector<long long> rel(n, 0);
  int ncomp = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    int c = ncomp++;
    comp[s] = c;
    rel[s] = 0;
    std::vector<int> stack{s};
    std::vector<int> component{s};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : p.upper_covers()[x]) {
        if (comp[y] == -1) {
          comp[y] = c;
          rel[y] = rel[x] + 1;
          stack.push_back(y);
          component.push_back(y);
        } else if (rel[y] != rel[x] + 1) {
          res.ok = false;
          res.witness = {x, y};
          res.message = "cover (" + std::to_string(x) + "," + std::to_string(y) +
                        ") is not rank-increasing by 1";
          return res;
        }
      }
      for (int y : p.lower_covers()[x]) {
        if (comp[y] == -1) {
          comp[y] = c;
          rel[y] = rel[x] - 1;
          stack.push_back(y);
          component.push_back(y);
        } else if (rel[y] != rel[x] - 1) {
          res.ok = false;
          res.witness = {y, x};
          res.message = "cover (" + std::to_string(y) + "," + std::to_string(x) +
                        ") is not rank-increasing by 1";
          return res;
        }
      }
    }
    long long lo = rel[component.front()];
    for (int x : component) lo = std::min(lo, rel[x]);
    for (int x : component) res.rank[x] = static_cast<int>(rel[x] - lo + 1);
    for (int x : component) {
      if (p.lower_covers()[x].empty() && res.rank[x] != 1) {
        res.ok = false;
        res.witness = {x, p.upper_covers()[x].empty() ? -1 : p.upper_covers()[x][0]};
        res.message = "minimal element " + std::to_string(x) +
                      " does not sit at the bottom rank";
        return res;
      }
    }
  }
  res.ok = true;
  return res;
}

std::optional<int> meet_in_augmented(const Poset& p, int x, int y) {
  Bitset common = p.down_set(x).and_with(p.down_set(y));
  int hi = common.highest();
  if (hi < 0) return std::nullopt;  // meet is the adjoined bottom
  int z = p.topo_order()[hi];
  if (!p.down_set(z).contains(common)) return std::nullopt;
  return z;
}

LatticeReport is_lattice_augmented(const Poset& p) {
  const int n = p.size();
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      Bitset common = p.down_set(x).and_with(p.down_set(y));
      if (common.any()) {
        int hi = common.highest();
        int z = p.topo_order()[hi];
        if (!p.down_set(z).contains(common)) {
          LatticeReport r;
          r.ok = false;
          r.x = x;
          r.y = y;
          r.message = "pair (" + std::to_string(x) + "," + std::to_string(y) +
                      ") has no meet in the augmented poset";
          return r;
        }
      }
      Bitset above = p.up_set(x).and_with(p.up_set(y));
      if (above.any()) {
        int lo = above.lowest();
        int z = p.topo_order()[lo];
        if (!p.up_set(z).contains(above)) {
          LatticeReport r;
          r.ok = false;
          r.x = x;
          r.y = y;
          r.message = "pair (" + std::to_string(x) + "," + std::to_string(y) +
                      ") has no join in the augmented poset";
          return r;
        }
      }
    }
  }
  return {};
}

std::vector<long long> SimplicialComplex::f_vector() const {
  std::vector<long long> f;
  f.reserve(faces_by_dim.size());
  for (const auto& faces : faces_by_dim)
    f.push_back(static_cast<long long>(faces.size()));
  return f;
}

long long SimplicialComplex::face_count() const {
  long long c = 0;
  for (const auto& faces : faces_by_dim) c += static_cast<long long>(faces.size());
  return c;
}

SimplicialComplex order_complex(const Poset& p, long long budget) {
  SimplicialComplex k;
  k.vertices = p.size();
  long long total = 0;
  std::vector<int> chain;
  // Chains are generated in their poset order along the fixed linear
  // extension, so each chain appears exactly once.
  auto extend = [&](auto&& self, int last) -> void {
    if (static_cast<int>(chain.size()) > static_cast<int>(k.faces_by_dim.size()))
      k.faces_by_dim.emplace_back();
    std::vector<int> face = chain;
    std::sort(face.begin(), face.end());
    k.faces_by_dim[chain.size() - 1].push_back(std::move(face));
    if (++total > budget)
      throw BudgetError("order complex exceeds the chain budget of " +
                        std::to_string(budget) +
                        "; use the Euler characteristic instead");
    for (int posn : p.up_set(last).bits()) {
      int y = p.topo_order()[posn];
      if (y == last) continue;
      chain.push_back(y);
      self(self, y);
      chain.pop_back();
    }
  };
  for (int x = 0; x < p.size(); ++x) {
    chain = {x};
    extend(extend, x);
  }
  for (auto& faces : k.faces_by_dim) std::sort(faces.begin(), faces.end());
  return k;
}

long long euler_char(const SimplicialComplex& k) {
  long long chi = 0;
  for (std::size_t d = 0; d < k.faces_by_dim.size(); ++d) {
    long long f = static_cast<long long>(k.faces_by_dim[d].size());
    chi += (d % 2 == 0) ? f : -f;
  }
  return chi;
}

long long euler_char_of_poset(const Poset& p) {
  // alt[x] = sum over chains with minimum x of (-1)^{|chain|+1};
  // the Euler characteristic of the order complex is the total.
  std::vector<cpp_int> alt(p.size());
  const auto& topo = p.topo_order();
  for (int k = p.size() - 1; k >= 0; --k) {
    int x = topo[k];
    cpp_int s = 1;
    for (int posn : p.up_set(x).bits()) {
      int y = topo[posn];
      if (y != x) s -= alt[y];
    }
    alt[x] = s;
  }
  cpp_int chi = 0;
  for (const auto& a : alt) chi += a;
  if (chi > std::numeric_limits<long long>::max() ||
      chi < std::numeric_limits<long long>::min())
    throw InternalError("euler characteristic overflows long long");
  return static_cast<long long>(chi);
}

namespace {

// Rank over the rationals of a sparse integer matrix given by rows.
// Rows may be freely rescaled, so entries are kept small by stripping
// the gcd after every combination.
using SparseRow = std::vector<std::pair<int, cpp_int>>;

void strip_content(SparseRow& r) {
  cpp_int g = 0;
  for (auto& [c, v] : r) {
    g = gcd(g, v);
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& [c, v] : r) v /= g;
}

SparseRow combine(const SparseRow& pivot, const cpp_int& pv, const SparseRow& row,
                  const cpp_int& rv) {
  // pv * row - rv * pivot, skipping the pivot column's cancellation.
  SparseRow out;
  out.reserve(pivot.size() + row.size());
  std::size_t i = 0, j = 0;
  while (i < pivot.size() || j < row.size()) {
    if (j >= row.size() || (i < pivot.size() && pivot[i].first < row[j].first)) {
      out.emplace_back(pivot[i].first, -rv * pivot[i].second);
      ++i;
    } else if (i >= pivot.size() || row[j].first < pivot[i].first) {
      out.emplace_back(row[j].first, pv * row[j].second);
      ++j;
    } else {
      cpp_int v = pv * row[j].second - rv * pivot[i].second;
      if (v != 0) out.emplace_back(row[j].first, std::move(v));
      ++i;
      ++j;
    }
  }
  strip_content(out);
  return out;
}

long long sparse_int_rank(std::vector<SparseRow> rows) {
  long long rank = 0;
  std::vector<char> used(rows.size(), 0);
  while (true) {
    int best = -1;
    std::size_t best_size = 0;
    bool best_unit = false;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (used[r] || rows[r].empty()) continue;
      bool unit = false;
      for (auto& [c, v] : rows[r])
        if (v == 1 || v == -1) {
          unit = true;
          break;
        }
      if (best < 0 || (unit && !best_unit) ||
          (unit == best_unit && rows[r].size() < best_size)) {
        best = static_cast<int>(r);
        best_size = rows[r].size();
        best_unit = unit;
      }
    }
    if (best < 0) break;
    used[best] = 1;
    ++rank;
    // Pivot on the smallest entry of the chosen row.
    int pcol = rows[best][0].first;
    cpp_int pval = rows[best][0].second;
    for (auto& [c, v] : rows[best])
      if (abs(v) < abs(pval) || (abs(v) == abs(pval) && c < pcol)) {
        pcol = c;
        pval = v;
      }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (used[r] || rows[r].empty()) continue;
      auto it = std::lower_bound(
          rows[r].begin(), rows[r].end(), pcol,
          [](const auto& a, int c) { return a.first < c; });
      if (it == rows[r].end() || it->first != pcol) continue;
      rows[r] = combine(rows[best], pval, rows[r], it->second);
    }
    rows[best].clear();
  }
  return rank;
}

long long boundary_rank(const std::vector<std::vector<int>>& lower,
                        const std::vector<std::vector<int>>& upper) {
  // Row per lower face; column per upper face; entry (-1)^i for dropping
  // the i-th vertex.
  std::vector<SparseRow> rows(lower.size());
  std::vector<int> facet;
  for (std::size_t col = 0; col < upper.size(); ++col) {
    const auto& face = upper[col];
    for (std::size_t i = 0; i < face.size(); ++i) {
      facet.clear();
      for (std::size_t t = 0; t < face.size(); ++t)
        if (t != i) facet.push_back(face[t]);
      auto it = std::lower_bound(lower.begin(), lower.end(), facet);
      if (it == lower.end() || *it != facet)
        throw InternalError("boundary facet missing from the complex");
      int row = static_cast<int>(it - lower.begin());
      rows[row].emplace_back(static_cast<int>(col), (i % 2 == 0) ? 1 : -1);
    }
  }
  for (auto& r : rows) std::sort(r.begin(), r.end());
  return sparse_int_rank(std::move(rows));
}

}  // namespace

std::vector<long long> homology_ranks(const SimplicialComplex& k, long long budget) {
  if (k.face_count() > budget)
    throw BudgetError("homology face budget exceeded (" +
                      std::to_string(k.face_count()) + " > " +
                      std::to_string(budget) +
                      "); use the Euler characteristic instead");
  const int dim = k.dim();
  if (dim < 0) return {};
  std::vector<long long> rank_boundary(dim + 2, 0);
  for (int d = 1; d <= dim; ++d)
    rank_boundary[d] = boundary_rank(k.faces_by_dim[d - 1], k.faces_by_dim[d]);
  std::vector<long long> betti(dim + 1, 0);
  for (int d = 0; d <= dim; ++d) {
    long long cycles = static_cast<long long>(k.faces_by_dim[d].size()) -
                       rank_boundary[d];
    betti[d] = cycles - rank_boundary[d + 1];
  }
  while (betti.size() > 1 && betti.back() == 0) betti.pop_back();
  return betti;
}

}  // namespace pmf
