#pragma once

#include <map>
#include <string>
#include <vector>

#include "pmf/cayley.hpp"
#include "pmf/sign.hpp"

namespace pmf {

// Matching field over a ground set of size m: at most one R-saturating
// matching per d-subset. matchings[sigma][k] is the row matched to the
// k-th element of the sorted subset sigma. Extraction asserts uniqueness;
// subsets without a matching evaluate to chirotope zero.
struct MatchingField {
  int rank = 0;                     // |R|
  int m = 0;                        // ground set size
  std::vector<std::string> labels;  // ground set labels, size m
  std::map<std::vector<int>, std::vector<int>> matchings;

  bool total() const;
};

struct Chirotope {
  int rank = 0;
  int m = 0;
  std::vector<std::string> labels;
  std::map<std::vector<int>, Sign> values;  // sorted d-subsets only

  Sign value(const std::vector<int>& sorted_subset) const;
  // Alternating extension to arbitrary tuples (repeats give zero).
  Sign eval_tuple(std::vector<int> tuple) const;
  bool identically_zero() const;
  // Lines "i,j,k:s" over sorted subsets in lexicographic order.
  std::string export_lines() const;
};

struct GpReport {
  bool ok = true;
  std::vector<int> x, y;  // first violating tuple, lexicographic minimum
  std::string message;
};

// Parity of a matching written as the row sequence along the sorted
// subset; the permutation sign convention for the whole project.
Sign matching_sign(const std::vector<int>& rows_by_position);

MatchingField extract_matching_field(const Triangulation& t);

// Pointed field on the augmented ground set (copies of R first, then E)
// plus the augmented sign matrix (I | A).
std::pair<MatchingField, SignMatrix> pointed_augment(const Triangulation& t,
                                                     const SignMatrix& a);

// chi(sigma) = sign(M_sigma) * prod of A entries over the matching.
Chirotope chirotope(const MatchingField& mf, const SignMatrix& a);

// Exhaustive Grassmann-Pluecker verification over sorted tuples; the
// budget caps the number of relation evaluations.
GpReport gp_check(const Chirotope& chi, long long budget = 200'000'000);

}  // namespace pmf
