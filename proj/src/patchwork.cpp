#include "pmf/patchwork.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <set>

#include "pmf/error.hpp"

namespace pmf {

ElimReport check_elim_axioms(const std::vector<ColGraph>& cells) {
  ElimReport rep;
  if (cells.empty()) {
    rep.ok = false;
    rep.axiom = "E1";
    rep.message = "empty collection";
    return rep;
  }
  const int d = cells[0].d, n = cells[0].n();
  std::set<ColGraph> members(cells.begin(), cells.end());
  for (int f = 0; f < static_cast<int>(cells.size()); ++f) {
    if (cells[f].d != d || cells[f].n() != n)
      throw DimensionError("cells live over different ground sets");
    if (!cells[f].covers_columns()) {
      rep.ok = false;
      rep.axiom = "E1";
      rep.f = f;
      rep.message = "cell " + cells[f].str() + " has an empty column";
      return rep;
    }
  }
  // One-edge deletions suffice for E2: repeated deletion reaches every
  // column-covering subset.
  for (int f = 0; f < static_cast<int>(cells.size()); ++f) {
    for (auto [i, j] : cells[f].edges()) {
      ColGraph g = cells[f];
      g.remove_edge(i, j);
      if (g.covers_columns() && !members.count(g)) {
        rep.ok = false;
        rep.axiom = "E2";
        rep.f = f;
        rep.message = "cell " + g.str() + " is missing below " + cells[f].str();
        return rep;
      }
    }
  }
  // E3: eliminants looked up by their forced column, via an index from
  // (column, mask) to candidate cells.
  std::map<std::pair<int, std::uint32_t>, std::vector<int>> by_column;
  for (int h = 0; h < static_cast<int>(cells.size()); ++h)
    for (int j = 0; j < n; ++j)
      by_column[{j, cells[h].cols[j]}].push_back(h);
  for (int f = 0; f < static_cast<int>(cells.size()); ++f) {
    for (int g = 0; g < static_cast<int>(cells.size()); ++g) {
      for (int j = 0; j < n; ++j) {
        std::uint32_t target = cells[f].cols[j] | cells[g].cols[j];
        auto it = by_column.find({j, target});
        bool found = false;
        if (it != by_column.end()) {
          for (int h : it->second) {
            bool ok = true;
            for (int k = 0; k < n && ok; ++k) {
              if (k == j) continue;
              std::uint32_t ck = cells[h].cols[k];
              ok = (ck == cells[f].cols[k] || ck == cells[g].cols[k] ||
                    ck == (cells[f].cols[k] | cells[g].cols[k]));
            }
            if (ok) {
              found = true;
              break;
            }
          }
        }
        if (!found) {
          rep.ok = false;
          rep.axiom = "E3";
          rep.f = f;
          rep.g = g;
          rep.j = j;
          rep.message = "no eliminant for " + cells[f].str() + ", " +
                        cells[g].str() + " at column " + std::to_string(j + 1);
          return rep;
        }
      }
    }
  }
  return rep;
}

std::optional<ColGraph> find_eliminant(const std::vector<ColGraph>& cells,
                                       const ColGraph& f, const ColGraph& g,
                                       int j) {
  std::vector<ColGraph> sorted = cells;
  std::sort(sorted.begin(), sorted.end());
  for (const ColGraph& h : sorted) {
    if (h.cols[j] != (f.cols[j] | g.cols[j])) continue;
    bool ok = true;
    for (int k = 0; k < h.n() && ok; ++k) {
      if (k == j) continue;
      ok = (h.cols[k] == f.cols[k] || h.cols[k] == g.cols[k] ||
            h.cols[k] == (f.cols[k] | g.cols[k]));
    }
    if (ok) return h;
  }
  return std::nullopt;
}

int PatchPoset::find(const SignVector& s, const ColGraph& f) const {
  auto ci = cell_index_.find(f);
  if (ci == cell_index_.end()) return -1;
  auto it = index_.find({s, ci->second});
  return it == index_.end() ? -1 : it->second;
}

std::string PatchPoset::label_of(int e) const {
  return "(" + elems[e].s.str() + "," + forest_of(e).str() + ")";
}

PatchPoset build_patch_poset(const std::vector<ColGraph>& cells_in, int d, int n) {
  PatchPoset p;
  p.d = d;
  p.n = n;
  p.cells = cells_in;
  std::sort(p.cells.begin(), p.cells.end());
  p.cells.erase(std::unique(p.cells.begin(), p.cells.end()), p.cells.end());
  for (int c = 0; c < static_cast<int>(p.cells.size()); ++c) {
    if (p.cells[c].d != d || p.cells[c].n() != n)
      throw DimensionError("cell over the wrong ground set");
    if (!p.cells[c].covers_columns())
      throw ContractError("cell with an empty column violates E1");
    p.cell_index_.emplace(p.cells[c], c);
  }

  // All sign vectors over R in a fixed order, grouped by support.
  std::vector<SignVector> all_s;
  {
    SignVector s = SignVector::zero(d);
    auto rec = [&](auto&& self, int i) -> void {
      if (i == d) {
        all_s.push_back(s);
        return;
      }
      for (int v : {-1, 0, 1}) {
        s[i] = Sign(static_cast<std::int8_t>(v));
        self(self, i + 1);
      }
      s[i] = Sign::zero;
    };
    rec(rec, 0);
  }

  for (int c = 0; c < static_cast<int>(p.cells.size()); ++c) {
    std::uint32_t need = p.cells[c].supp_rows();
    for (const SignVector& s : all_s) {
      if ((need & ~s.support_mask()) != 0) continue;
      int id = static_cast<int>(p.elems.size());
      p.elems.push_back({s, c});
      p.index_.emplace(std::pair{s, c}, id);
    }
  }

  std::vector<std::pair<int, int>> covers;
  for (int e = 0; e < static_cast<int>(p.elems.size()); ++e) {
    const SignVector& s = p.elems[e].s;
    const ColGraph& f = p.forest_of(e);
    std::uint32_t supp_f = f.supp_rows();
    // Zeroing a coordinate outside supp_R(F) steps down one rank.
    for (int i = 0; i < d; ++i) {
      if (s[i] == Sign::zero || ((supp_f >> i) & 1u)) continue;
      SignVector t = s;
      t[i] = Sign::zero;
      int lo = p.find(t, f);
      if (lo < 0) throw InternalError("missing orthant face element");
      covers.emplace_back(lo, e);
    }
    // Removing one edge keeps a cell by E2; the larger forest sits below.
    for (auto [i, j] : f.edges()) {
      ColGraph g = f;
      g.remove_edge(i, j);
      if (!g.covers_columns()) continue;
      int hi = p.find(s, g);
      if (hi < 0)
        throw ContractError("collection is not down-closed (E2): missing " +
                            g.str());
      covers.emplace_back(e, hi);
    }
  }
  p.poset = Poset(static_cast<int>(p.elems.size()), std::move(covers));
  return p;
}

EquivalenceClasses build_equivalence(const PatchPoset& p, const SignMatrix& a,
                                     const Partition& pi) {
  if (!pi.refines(Partition::matrix_columns(p.d, p.n)))
    throw InputError("partition must refine the column partition");
  std::vector<std::pair<std::string, std::string>> keys(p.elems.size());
  for (int e = 0; e < static_cast<int>(p.elems.size()); ++e) {
    SignMatrix saf = sa_matrix(p.elems[e].s, p.forest_of(e), a);
    keys[e] = {p.elems[e].s.str(), classify(saf, pi).str()};
  }
  EquivalenceClasses cls = classes_by_key(keys);
  HomogeneityReport h = is_homogeneous(p.poset, cls);
  if (!h.ok) throw InternalError("equivalence is not homogeneous: " + h.message);
  return cls;
}

std::vector<std::pair<int, int>> default_merge_order(int d, int n) {
  std::vector<std::pair<int, int>> order;
  for (int j = 0; j < n; ++j)
    for (int i = 1; i < d; ++i) order.emplace_back(i, j);
  return order;
}

std::vector<std::pair<int, int>> seeded_merge_order(int d, int n,
                                                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  // Random row order per column, random interleaving across columns; the
  // first row of each column anchors its growing part.
  std::vector<std::vector<int>> rows(n);
  for (int j = 0; j < n; ++j) {
    rows[j].resize(d);
    for (int i = 0; i < d; ++i) rows[j][i] = i;
    std::shuffle(rows[j].begin(), rows[j].end(), rng);
  }
  std::vector<int> remaining(n, d - 1);
  std::vector<std::pair<int, int>> order;
  int left = n * (d - 1);
  while (left > 0) {
    std::uniform_int_distribution<int> pick(0, n - 1);
    int j = pick(rng);
    if (remaining[j] == 0) continue;
    int next = d - remaining[j];
    order.emplace_back(rows[j][next], j);
    --remaining[j];
    --left;
  }
  return order;
}

namespace {

std::string step_key(const PatchPoset& p, int rep, const SignMatrix& a,
                     const Partition& pi) {
  SignMatrix saf = sa_matrix(p.elems[rep].s, p.forest_of(rep), a);
  return p.elems[rep].s.str() + "|" + classify(saf, pi).str();
}

}  // namespace

QuotientChain factorize_quotient(const PatchPoset& p, const SignMatrix& a,
                                 const std::vector<std::pair<int, int>>* order) {
  const int d = p.d, n = p.n;
  std::vector<std::pair<int, int>> schedule =
      order ? *order : default_merge_order(d, n);

  QuotientChain chain;
  chain.posets.push_back(p.poset);
  chain.reps.emplace_back(p.poset.size());
  for (int e = 0; e < p.poset.size(); ++e) chain.reps[0][e] = e;

  // Each column must merge d-1 distinct rows; the row left out anchors the
  // growing part of that column.
  std::vector<int> anchor_of(n, -1);
  {
    std::vector<std::uint32_t> merged(n, 0);
    for (auto [i, j] : schedule) {
      if (i < 0 || i >= d || j < 0 || j >= n)
        throw InputError("merge schedule entry out of range");
      if ((merged[j] >> i) & 1u)
        throw InputError("merge schedule repeats an edge");
      merged[j] |= (1u << i);
    }
    for (int j = 0; j < n; ++j) {
      if (std::popcount(merged[j]) != d - 1)
        throw InputError("merge schedule must touch d-1 rows per column");
      for (int i = 0; i < d; ++i)
        if (!((merged[j] >> i) & 1u)) anchor_of[j] = i;
    }
  }

  Partition pi = Partition::singletons(d * n);
  for (auto [i, j] : schedule) {
    const Poset& prev = chain.posets.back();
    const std::vector<int>& reps = chain.reps.back();
    int flat = j * d + i;
    pi = pi.merge(j * d + anchor_of[j], flat);

    std::vector<std::string> keys(prev.size());
    for (int x = 0; x < prev.size(); ++x)
      keys[x] = step_key(p, reps[x], a, pi);
    EquivalenceClasses cls = classes_by_key(keys);

    FactorStep step;
    step.merged_edge = {i, j};
    step.classes = cls;
    step.elementary = is_elementary(prev, cls);
    if (!step.elementary.ok) {
      chain.ok = false;
      chain.message = "step " + std::to_string(chain.steps.size()) +
                      " (edge " + std::to_string(i + 1) +
                      std::to_string(j + 1) +
                      ") is not elementary: " + step.elementary.message;
      chain.steps.push_back(std::move(step));
      return chain;
    }
    HomogeneityReport h = is_homogeneous(prev, cls);
    if (!h.ok) {
      chain.ok = false;
      chain.message = "step " + std::to_string(chain.steps.size()) +
                      " is not homogeneous: " + h.message;
      chain.steps.push_back(std::move(step));
      return chain;
    }
    Poset next = quotient_unchecked(prev, cls);
    std::vector<int> next_reps(next.size(), -1);
    for (int x = 0; x < prev.size(); ++x) {
      int c = cls.class_of[x];
      if (next_reps[c] < 0 || reps[x] < next_reps[c]) next_reps[c] = reps[x];
    }
    chain.steps.push_back(std::move(step));
    chain.posets.push_back(std::move(next));
    chain.reps.push_back(std::move(next_reps));
  }

  for (std::size_t t = 0; t < chain.posets.size(); ++t) {
    LatticeReport lr = is_lattice_augmented(chain.posets[t]);
    chain.lattice.push_back(lr);
    if (!lr.ok) {
      chain.ok = false;
      chain.message = "augmented poset " + std::to_string(t) +
                      " is not a lattice: " + lr.message;
      return chain;
    }
  }

  // The composite classes must agree with the one-shot column quotient.
  std::vector<int> cur(p.poset.size());
  for (int e = 0; e < p.poset.size(); ++e) cur[e] = e;
  for (const FactorStep& s : chain.steps)
    for (int e = 0; e < p.poset.size(); ++e) cur[e] = s.classes.class_of[cur[e]];
  chain.total = EquivalenceClasses::from_map(cur);
  EquivalenceClasses direct =
      build_equivalence(p, a, Partition::matrix_columns(d, n));
  if (chain.total.class_of != direct.class_of)
    throw InternalError("factorized quotient differs from the column quotient");
  return chain;
}

std::vector<SignVector> phi_labels(const PatchPoset& p,
                                   const EquivalenceClasses& cls,
                                   const SignMatrix& a) {
  std::vector<SignVector> labels(cls.count);
  std::vector<char> seen(cls.count, 0);
  for (int e = 0; e < static_cast<int>(p.elems.size()); ++e) {
    SignVector lab =
        p.elems[e].s.concat(psi(p.elems[e].s, p.forest_of(e), a));
    int c = cls.class_of[e];
    if (!seen[c]) {
      labels[c] = lab;
      seen[c] = 1;
    } else if (labels[c] != lab) {
      throw InternalError("phi disagrees across the class of " + p.label_of(e));
    }
  }
  return labels;
}

namespace {

Assertion make_assertion(const std::string& id, bool pass,
                         const std::string& detail = "") {
  return {id, pass ? "pass" : "fail", detail};
}

}  // namespace

VerifyReport verify_representation(const Triangulation& t, const SignMatrix& a,
                                   long long chain_budget,
                                   long long homology_budget) {
  VerifyReport rep;
  auto push = [&](Assertion as) {
    if (as.status == "fail") rep.ok = false;
    rep.assertions.push_back(std::move(as));
  };

  MixedSubdivision sub = cells_of_subdivision(t);
  ElimReport elim = check_elim_axioms(sub.cells);
  push(make_assertion("elimination_axioms", elim.ok, elim.message));
  if (!elim.ok) return rep;

  auto [pointed, augmented] = pointed_augment(t, a);
  Chirotope chi_tilde = chirotope(pointed, augmented);
  CovectorSet covs = covectors(chi_tilde);

  PatchPoset patch = build_patch_poset(sub.cells, t.d, t.n);
  EquivalenceClasses cls =
      build_equivalence(patch, a, Partition::matrix_columns(t.d, t.n));
  Poset q = quotient_unchecked(patch.poset, cls);
  std::vector<SignVector> labels = phi_labels(patch, cls, a);

  rep.patch_elements = patch.poset.size();
  rep.class_count = cls.count;

  // (a) injectivity.
  {
    std::set<SignVector> distinct(labels.begin(), labels.end());
    push(make_assertion(
        "phi_injective", distinct.size() == labels.size(),
        distinct.size() == labels.size()
            ? ""
            : "only " + std::to_string(distinct.size()) + " distinct labels for " +
                  std::to_string(labels.size()) + " classes"));
  }

  // (b) surjectivity onto the nonzero covectors.
  std::vector<SignVector> nonzero = covs.nonzero();
  rep.nonzero_covectors = static_cast<long long>(nonzero.size());
  {
    std::set<SignVector> image(labels.begin(), labels.end());
    std::set<SignVector> target(nonzero.begin(), nonzero.end());
    std::string detail;
    if (image != target) {
      for (const auto& x : target)
        if (!image.count(x)) {
          detail = "covector " + x.str() + " not attained";
          break;
        }
      for (const auto& x : image)
        if (!target.count(x) && detail.empty())
          detail = "label " + x.str() + " is not a covector";
    }
    push(make_assertion("phi_surjective", image == target, detail));
  }

  // (c) order preserved in both directions, over all pairs of classes.
  {
    bool iso = true;
    std::string detail;
    for (int x = 0; x < q.size() && iso; ++x)
      for (int y = 0; y < q.size(); ++y) {
        bool po = q.leq(x, y);
        bool co = sv_leq(labels[x], labels[y]);
        if (po != co) {
          iso = false;
          detail = "classes " + std::to_string(x) + "," + std::to_string(y) +
                   " ordered " + (po ? "in the quotient only" : "by labels only");
          break;
        }
      }
    push(make_assertion("phi_order_isomorphism", iso, detail));
  }

  // (d) subcomplex membership matches vanishing coordinates of the label.
  {
    bool match = true;
    std::string detail;
    for (int e = 0; e < static_cast<int>(patch.elems.size()) && match; ++e) {
      const SignVector& s = patch.elems[e].s;
      const ColGraph& f = patch.forest_of(e);
      const SignVector& lab = labels[cls.class_of[e]];
      for (int k = 0; k < t.d + t.n; ++k) {
        bool member;
        if (k < t.d) {
          member = (s[k] == Sign::zero);
        } else {
          int j = k - t.d;
          bool pos = false, neg = false;
          for (int i = 0; i < t.d; ++i) {
            if (!f.has_edge(i, j)) continue;
            Sign v = s[i] * a.at(i, j);
            pos |= (v == Sign::plus);
            neg |= (v == Sign::minus);
          }
          member = pos && neg;
        }
        if (member != (lab[k] == Sign::zero)) {
          match = false;
          detail = "element " + patch.label_of(e) + " at ground element " +
                   chi_tilde.labels[k];
          break;
        }
      }
    }
    push(make_assertion("delta_membership", match, detail));
  }

  // (e) sphere checks on the quotient's order complex.
  {
    long long expected_chi = (t.d % 2 == 1) ? 2 : 0;
    bool have_complex = true;
    SimplicialComplex k;
    try {
      k = order_complex(q, chain_budget);
    } catch (const BudgetError&) {
      have_complex = false;
    }
    rep.euler = have_complex ? euler_char(k) : euler_char_of_poset(q);
    push(make_assertion("euler_characteristic", rep.euler == expected_chi,
                        "chi = " + std::to_string(rep.euler)));
    std::vector<long long> expected_betti;
    if (t.d == 1)
      expected_betti = {2};
    else {
      expected_betti.assign(t.d, 0);
      expected_betti[0] = 1;
      expected_betti[t.d - 1] = 1;
    }
    if (!have_complex) {
      push({"homology", "skipped", "order complex exceeds the chain budget"});
    } else {
      try {
        rep.betti = homology_ranks(k, homology_budget);
        std::string got = "betti =";
        for (long long b : rep.betti) got += " " + std::to_string(b);
        push(make_assertion("homology", rep.betti == expected_betti, got));
      } catch (const BudgetError&) {
        push({"homology", "skipped", "complex exceeds the homology budget"});
      }
    }
  }
  return rep;
}

std::vector<int> bergman_vector(const PatchPoset& p, int elem,
                                const SignMatrix& a) {
  const SignVector& s = p.elems[elem].s;
  const ColGraph& f = p.forest_of(elem);
  if (s.support_size() != p.d)
    throw InputError("bergman vector needs full orthant support");
  for (int j = 0; j < p.n; ++j)
    if (std::popcount(f.cols[j]) != 1)
      throw InputError("bergman vector needs one edge per column");
  std::vector<int> out;
  out.reserve(p.d + p.n);
  for (int i = 0; i < p.d; ++i) out.push_back(static_cast<int>(s[i]));
  SignMatrix saf = sa_matrix(s, f, a);
  for (int j = 0; j < p.n; ++j) {
    int sum = 0;
    for (int i = 0; i < p.d; ++i) sum += static_cast<int>(saf.at(i, j));
    out.push_back(sum);
  }
  return out;
}

std::vector<std::pair<int, std::vector<int>>> bergman_vertex_map(
    const PatchPoset& p, const SignMatrix& a, const CovectorSet* topes_of) {
  std::vector<std::pair<int, std::vector<int>>> out;
  for (int e = 0; e < static_cast<int>(p.elems.size()); ++e) {
    if (p.elems[e].s.support_size() != p.d) continue;
    bool vertex = true;
    for (int j = 0; j < p.n && vertex; ++j)
      vertex = (std::popcount(p.forest_of(e).cols[j]) == 1);
    if (!vertex) continue;
    std::vector<int> v = bergman_vector(p, e, a);
    if (topes_of) {
      SignVector pattern = SignVector::zero(p.d + p.n);
      for (int k = 0; k < p.d + p.n; ++k) pattern[k] = sign_of(v[k]);
      if (pattern.support_size() != p.d + p.n ||
          !topes_of->contains(pattern))
        throw InternalError("vertex image " + pattern.str() +
                            " is not a tope of the pointed chirotope");
    }
    out.emplace_back(e, std::move(v));
  }
  return out;
}

}  // namespace pmf
