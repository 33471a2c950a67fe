#pragma once

#include <map>
#include <string>
#include <vector>

#include "pmf/cayley.hpp"
#include "pmf/sign.hpp"

namespace pmf {

// Sign vector annotation of each subdivision vertex in the orthant S:
// coordinate j carries S_i A_{i,j} for the row i the vertex picks in
// column j. Keys are lattice points of the dilated simplex. Raises
// InternalError if the picked rows were not cell-independent.
std::map<std::vector<int>, SignVector> vertex_annotations(
    const Triangulation& t, const SignMatrix& a, const SignVector& s);

struct LocusReport {
  bool closed_curves = true;
  // Per column: number of segments over the whole sphere, and the number
  // of locus vertices whose degree differs from 2.
  std::vector<long long> segments;
  std::vector<long long> bad_vertices;
  std::string message;
};

// Builds the zero-locus graphs of all columns over all 2^d orthants and
// checks that every locus vertex has degree 2 (disjoint closed curves).
LocusReport locus_check(const Triangulation& t, const SignMatrix& a);

struct RenderResult {
  std::string svg;
  LocusReport locus;
};

// Rank-3 pseudoline picture: the four visible quartiles of the upper half
// of the patchworked sphere with vertex annotations and zero loci.
// Throws UnsupportedRankError unless d == 3.
RenderResult render_svg(const Triangulation& t, const SignMatrix& a);

}  // namespace pmf
