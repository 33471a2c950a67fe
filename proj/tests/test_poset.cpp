#include <algorithm>
#include <vector>

#include "doctest.h"
#include "pmf/error.hpp"
#include "pmf/poset.hpp"

using namespace pmf;

namespace {

EquivalenceClasses classes_of(std::vector<std::vector<int>> blocks, int n) {
  std::vector<int> raw(n, -1);
  for (int b = 0; b < static_cast<int>(blocks.size()); ++b)
    for (int x : blocks[b]) raw[x] = b;
  return EquivalenceClasses::from_map(raw);
}

// Face poset of the boundary of a square: 4 vertices under 4 edges.
Poset square_boundary() {
  std::vector<std::pair<int, int>> covers;
  for (int e = 0; e < 4; ++e) {
    covers.push_back({e, 4 + e});
    covers.push_back({(e + 1) % 4, 4 + e});
  }
  return Poset(8, covers);
}

// Exhaustive search for a rank function: covers raise by one, minimal
// elements at rank one. Independent oracle for grade().
bool gradable_oracle(const Poset& p, int max_rank) {
  std::vector<int> rank(p.size(), 1);
  auto rec = [&](auto&& self, int i) -> bool {
    if (i == p.size()) {
      for (auto [lo, hi] : p.covers())
        if (rank[hi] != rank[lo] + 1) return false;
      for (int x : p.minimals())
        if (rank[x] != 1) return false;
      return true;
    }
    for (int r = 1; r <= max_rank; ++r) {
      rank[i] = r;
      if (self(self, i + 1)) return true;
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace

TEST_CASE("homogeneity on the V poset and a chain") {
  Poset v(3, {{0, 1}, {0, 2}});  // a < b, a < c
  CHECK(is_homogeneous(v, classes_of({{0}, {1, 2}}, 3)).ok);
  CHECK(is_homogeneous(v, EquivalenceClasses::identity(3)).ok);

  Poset chain(3, {{0, 1}, {1, 2}});  // a < b < c
  HomogeneityReport h = is_homogeneous(chain, classes_of({{0, 2}, {1}}, 3));
  CHECK_FALSE(h.ok);
  CHECK(h.u == 2);  // u = c has nothing above it in the class of b
}

TEST_CASE("quotient posets") {
  Poset v(3, {{0, 1}, {0, 2}});
  Poset q = quotient(v, classes_of({{0}, {1, 2}}, 3));
  CHECK(q.size() == 2);
  CHECK(q.covers() == std::vector<std::pair<int, int>>{{0, 1}});

  Poset id = quotient(v, EquivalenceClasses::identity(3));
  CHECK(id.size() == 3);
  CHECK(id.covers().size() == 2);

  Poset chain(3, {{0, 1}, {1, 2}});
  CHECK_THROWS_AS(quotient(chain, classes_of({{0, 2}, {1}}, 3)), ContractError);
}

TEST_CASE("elementary classes are singletons or two-cover-one triples") {
  Poset v(3, {{0, 1}, {0, 2}});
  CHECK(is_elementary(v, classes_of({{0, 1, 2}}, 3)).ok);
  CHECK_FALSE(is_elementary(v, classes_of({{0, 1}, {2}}, 3)).ok);
  Poset chain(3, {{0, 1}, {1, 2}});
  // b and c do not both cover a.
  CHECK_FALSE(is_elementary(chain, classes_of({{0, 1, 2}}, 3)).ok);
}

TEST_CASE("grading of the boolean lattice without bounds") {
  // Subsets of {0,1,2} minus empty set and full set, ordered by inclusion.
  std::vector<int> elems = {1, 2, 4, 3, 5, 6};
  std::vector<std::pair<int, int>> covers;
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      if ((elems[a] & ~elems[b]) == 0 &&
          __builtin_popcount(elems[b]) == __builtin_popcount(elems[a]) + 1)
        covers.push_back({a, b});
  Poset p(6, covers);
  GradeResult g = grade(p);
  REQUIRE(g.ok);
  for (int x = 0; x < 6; ++x)
    CHECK(g.rank[x] == __builtin_popcount(elems[x]));
}

TEST_CASE("ungradable posets fail with a witness") {
  // a < b < c and d < c: the minimal element d cannot sit at rank 1.
  Poset p(4, {{0, 1}, {1, 2}, {3, 2}});
  GradeResult g = grade(p);
  CHECK_FALSE(g.ok);
  CHECK_FALSE(gradable_oracle(p, 4));

  Poset fence(5, {{0, 1}, {2, 1}, {2, 3}, {4, 3}});
  CHECK(grade(fence).ok);  // the even fence is graded
  CHECK(gradable_oracle(fence, 5));
}

TEST_CASE("lattice checks on augmented posets") {
  Poset anti(2, {});
  CHECK(is_lattice_augmented(anti).ok);

  // Bowtie: two minimal elements both under two maximal elements.
  Poset bowtie(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  LatticeReport lr = is_lattice_augmented(bowtie);
  CHECK_FALSE(lr.ok);

  // Diamond with bounds present is a lattice, and meets are computed.
  Poset diamond(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  CHECK(is_lattice_augmented(diamond).ok);
  CHECK(meet_in_augmented(diamond, 1, 2) == 0);
  CHECK(meet_in_augmented(diamond, 1, 3) == 1);
  CHECK_FALSE(meet_in_augmented(bowtie, 2, 3).has_value());  // meet is bottom
}

TEST_CASE("order complex of the square boundary is an 8-cycle") {
  Poset p = square_boundary();
  SimplicialComplex k = order_complex(p);
  CHECK(k.f_vector() == std::vector<long long>{8, 8});
  CHECK(euler_char(k) == 0);
  CHECK(euler_char_of_poset(p) == 0);
  CHECK(homology_ranks(k) == std::vector<long long>{1, 1});
}

TEST_CASE("order complex of a chain is contractible") {
  Poset chain(2, {{0, 1}});
  SimplicialComplex k = order_complex(chain);
  CHECK(euler_char(k) == 1);
  CHECK(homology_ranks(k) == std::vector<long long>{1});
}

TEST_CASE("two point antichain is a zero sphere") {
  Poset p(2, {});
  SimplicialComplex k = order_complex(p);
  CHECK(euler_char(k) == 2);
  CHECK(homology_ranks(k) == std::vector<long long>{2});
}

TEST_CASE("euler characteristic matches the cell count on the cube boundary") {
  // Faces of the 3-cube boundary: 8 vertices, 12 edges, 6 squares.
  std::vector<std::vector<int>> faces;  // list of vertex sets
  for (int v = 0; v < 8; ++v) faces.push_back({v});
  for (int v = 0; v < 8; ++v)
    for (int b = 0; b < 3; ++b)
      if (!(v & (1 << b))) faces.push_back({v, v | (1 << b)});
  for (int b = 0; b < 3; ++b)
    for (int s = 0; s < 2; ++s) {
      std::vector<int> sq;
      for (int v = 0; v < 8; ++v)
        if (((v >> b) & 1) == s) sq.push_back(v);
      faces.push_back(sq);
    }
  std::vector<std::pair<int, int>> covers;
  for (int a = 0; a < static_cast<int>(faces.size()); ++a)
    for (int b = 0; b < static_cast<int>(faces.size()); ++b) {
      if (faces[a].size() * 2 != faces[b].size()) continue;
      if (std::includes(faces[b].begin(), faces[b].end(), faces[a].begin(),
                        faces[a].end()))
        covers.push_back({a, b});
    }
  Poset p(static_cast<int>(faces.size()), covers);
  long long signed_cells = 8 - 12 + 6;
  SimplicialComplex k = order_complex(p);
  CHECK(euler_char(k) == signed_cells);
  CHECK(euler_char_of_poset(p) == signed_cells);
  CHECK(homology_ranks(k) == std::vector<long long>{1, 0, 1});
}

TEST_CASE("budgets raise size errors") {
  Poset p = square_boundary();
  CHECK_THROWS_AS(order_complex(p, 3), BudgetError);
  SimplicialComplex k = order_complex(p);
  CHECK_THROWS_AS(homology_ranks(k, 3), BudgetError);
}

TEST_CASE("quotient of a quotient by identity is stable") {
  Poset v(3, {{0, 1}, {0, 2}});
  EquivalenceClasses cls = classes_of({{0}, {1, 2}}, 3);
  HomogeneityReport before = is_homogeneous(v, cls);
  REQUIRE(before.ok);
  Poset q = quotient(v, cls);
  // Re-verification after the quotient: identity classes stay homogeneous.
  CHECK(is_homogeneous(q, EquivalenceClasses::identity(q.size())).ok);
  Poset qq = quotient(q, EquivalenceClasses::identity(q.size()));
  CHECK(qq.covers() == q.covers());
}

TEST_CASE("cover relation inputs are validated") {
  CHECK_THROWS_AS(Poset(2, {{0, 0}}), InputError);
  CHECK_THROWS_AS(Poset(2, {{0, 1}, {1, 0}}), InputError);
  CHECK_THROWS_AS(Poset(1, {{0, 5}}), InputError);
}

TEST_CASE("dot export lists nodes and cover arrows") {
  Poset v(3, {{0, 1}, {0, 2}});
  std::string dot = v.to_dot({"a", "b", "c"});
  CHECK(dot.find("n0 -> n1") != std::string::npos);
  CHECK(dot.find("label=\"a\"") != std::string::npos);
}
