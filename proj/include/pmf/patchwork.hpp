#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pmf/cayley.hpp"
#include "pmf/matchfield.hpp"
#include "pmf/omcore.hpp"
#include "pmf/poset.hpp"
#include "pmf/sign.hpp"

namespace pmf {

struct ElimReport {
  bool ok = true;
  std::string axiom;  // "E1", "E2" or "E3" on failure
  int f = -1, g = -1, j = -1;
  std::string message;
};

// Verifies E1 and E2 directly and E3 by exhaustive search for the
// eliminant H over the given collection.
ElimReport check_elim_axioms(const std::vector<ColGraph>& cells);

// First member H (in ColGraph order) with H_j = F_j u G_j and every other
// column equal to one of F_k, G_k, F_k u G_k; nullopt if none exists.
std::optional<ColGraph> find_eliminant(const std::vector<ColGraph>& cells,
                                       const ColGraph& f, const ColGraph& g,
                                       int j);

struct SignedCell {
  SignVector s;
  int cell = -1;  // index into PatchPoset::cells
};

// The signed-cell poset of an elimination system: elements (S,F) with
// supp(S) containing supp_R(F), ordered by S <= T and F containing G.
struct PatchPoset {
  int d = 0, n = 0;
  std::vector<ColGraph> cells;  // sorted
  Poset poset;
  std::vector<SignedCell> elems;

  int find(const SignVector& s, const ColGraph& f) const;  // -1 if absent
  const ColGraph& forest_of(int e) const { return cells[elems[e].cell]; }
  std::string label_of(int e) const;

 private:
  friend PatchPoset build_patch_poset(const std::vector<ColGraph>&, int, int);
  std::map<std::pair<SignVector, int>, int> index_;
  std::map<ColGraph, int> cell_index_;
};

// Requires E1 and E2 (use check_elim_axioms first for untrusted input).
PatchPoset build_patch_poset(const std::vector<ColGraph>& cells, int d, int n);

// Classes of (S, classify(SA_F, pi)); pi must refine the column partition.
// Homogeneity is verified and an InternalError raised if it fails.
EquivalenceClasses build_equivalence(const PatchPoset& p, const SignMatrix& a,
                                     const Partition& pi);

// One coarsening step: the edge merged and the certificates collected on
// the poset the step was applied to.
struct FactorStep {
  std::pair<int, int> merged_edge{-1, -1};  // (row, col), 0-based
  EquivalenceClasses classes;               // on the previous poset
  ElementaryReport elementary;
};

struct QuotientChain {
  bool ok = true;
  std::string message;
  std::vector<FactorStep> steps;
  std::vector<Poset> posets;                // P_0 .. P_k
  std::vector<LatticeReport> lattice;       // for each augmented P_i
  std::vector<std::vector<int>> reps;       // per poset: a P(S) representative
  EquivalenceClasses total;                 // composite classes on P(S)
};

// Merge schedules: each entry merges one edge into the growing part of its
// column. The default processes columns left to right, rows top to bottom.
std::vector<std::pair<int, int>> default_merge_order(int d, int n);
std::vector<std::pair<int, int>> seeded_merge_order(int d, int n,
                                                    std::uint64_t seed);

QuotientChain factorize_quotient(
    const PatchPoset& p, const SignMatrix& a,
    const std::vector<std::pair<int, int>>* order = nullptr);

// Label per class: (S, psi_A(S,F)) over the augmented ground set; raises
// InternalError if two representatives of a class disagree.
std::vector<SignVector> phi_labels(const PatchPoset& p,
                                   const EquivalenceClasses& cls,
                                   const SignMatrix& a);

struct Assertion {
  std::string id;
  std::string status;  // "pass", "fail" or "skipped"
  std::string detail;
};

struct VerifyReport {
  bool ok = true;
  std::vector<Assertion> assertions;
  long long patch_elements = 0;
  long long class_count = 0;
  long long nonzero_covectors = 0;
  long long euler = 0;
  std::vector<long long> betti;
};

VerifyReport verify_representation(
    const Triangulation& t, const SignMatrix& a,
    long long chain_budget = kDefaultChainBudget,
    long long homology_budget = kDefaultHomologyBudget);

// Integer vertex coordinates (S, column sums of SA_F) for the elements
// with full orthant support and one edge per column. With a covector set
// given, asserts every image sign pattern is a tope.
std::vector<int> bergman_vector(const PatchPoset& p, int elem,
                                const SignMatrix& a);
std::vector<std::pair<int, std::vector<int>>> bergman_vertex_map(
    const PatchPoset& p, const SignMatrix& a,
    const CovectorSet* topes_of = nullptr);

}  // namespace pmf
