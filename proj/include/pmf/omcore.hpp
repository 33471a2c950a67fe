#pragma once

#include <string>
#include <vector>

#include "pmf/lp.hpp"
#include "pmf/matchfield.hpp"
#include "pmf/sign.hpp"

namespace pmf {

// Covectors of an oriented matroid, sorted, with the zero vector included.
struct CovectorSet {
  int m = 0;
  std::vector<SignVector> v;

  bool contains(const SignVector& x) const;
  std::vector<SignVector> nonzero() const;
};

// Cocircuits from a chirotope: for every (d-1)-subset, the sign vector
// e -> chi(lambda, e); both signs of each, deduplicated and sorted.
std::vector<SignVector> cocircuits(const Chirotope& chi);

// Composition closure of the cocircuits together with zero.
CovectorSet covectors(const Chirotope& chi, long long budget = 1'000'000);

struct AxiomReport {
  bool ok = true;
  std::string failed_axiom;  // "zero", "negation", "composition", "elimination"
  SignVector x, y;
  int e = -1;
  std::string message;
};

AxiomReport covector_axiom_check(const CovectorSet& lcal);

// Z_j from the column signs of SA_F: zero on mixed or empty columns,
// otherwise the unique sign appearing. F must cover every column.
SignVector psi(const SignVector& s, const ColGraph& f, const SignMatrix& a);

struct RealizableOracle {
  Chirotope chi;
  CovectorSet covs;
};

// Chirotope and covectors of the oriented matroid realized by a rational
// d x m matrix: minor signs, and sign patterns of the row space found by
// recursive sign-cell enumeration with exact LP feasibility.
RealizableOracle realizable_oracle(const std::vector<std::vector<Rat>>& mat);

}  // namespace pmf
