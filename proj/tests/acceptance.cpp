// Acceptance suite: runs every release criterion and prints one line per
// criterion. Exit code 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <string>

#include "fixtures.hpp"
#include "pmf/error.hpp"
#include "pmf/omcore.hpp"
#include "pmf/patchwork.hpp"
#include "pmf/render.hpp"

using namespace pmf;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(int number, const std::string& name, bool pass,
            const std::string& detail) {
  std::printf("[%s] criterion %2d: %s (%s)\n", pass ? "PASS" : "FAIL", number,
              name.c_str(), detail.c_str());
  if (!pass) ++failures;
}

char buf[256];

std::string fmt(const char* f, double v) {
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

void criterion1_heights() {
  auto t0 = Clock::now();
  HeightMatrix h = fixtures::example_heights();
  const std::pair<std::vector<int>, long long> expected[] = {
      {{3, 0, 0}, 5}, {{2, 0, 1}, 6}, {{2, 1, 0}, 5}, {{1, 0, 2}, 6},
      {{1, 1, 1}, 5}, {{1, 2, 0}, 3}, {{0, 0, 3}, 4}, {{0, 1, 2}, 4},
      {{0, 2, 1}, 3}, {{0, 3, 0}, 0}};
  bool ok = true;
  for (const auto& [p, v] : expected)
    ok = ok && (mixed_height_at(h, p) == Rat(v));
  ok = ok && (mixed_heights(h).size() == 10);
  double dt = seconds_since(t0);
  report(1, "heights reproduction", ok && dt < 1.0,
         "10 exact values, " + fmt("%.3fs", dt));
}

void criterion2_regular_triangulation() {
  auto t0 = Clock::now();
  Triangulation t = fixtures::example_triangulation();
  bool six = t.trees.size() == 6;
  ValidationReport rep = validate_triangulation(t, ValidationLevel::exact);
  double dt = seconds_since(t0);
  report(2, "regular triangulation", six && rep.ok && dt < 10.0,
         std::to_string(t.trees.size()) + " trees, exact validation " +
             (rep.ok ? "pass" : "fail") + ", " + fmt("%.3fs", dt));
}

void criterion3_theorem_a() {
  auto t0 = Clock::now();
  std::mt19937_64 rng(1001);
  const std::pair<int, int> shapes[] = {{1, 2}, {1, 4}, {2, 2}, {2, 3}, {2, 4},
                                        {2, 5}, {3, 3}, {3, 4}, {3, 5}};
  int runs = 0;
  bool ok = true;
  std::string detail;
  while (runs < 54 && ok) {
    auto [d, n] = shapes[runs % 9];
    Triangulation t = fixtures::random_triangulation(d, n, rng);
    SignMatrix a = fixtures::random_signs(d, n, rng);
    GpReport plain = gp_check(chirotope(extract_matching_field(t), a));
    auto [field, augmented] = pointed_augment(t, a);
    GpReport pointed = gp_check(chirotope(field, augmented));
    if (!plain.ok || !pointed.ok) {
      ok = false;
      detail = "violation at run " + std::to_string(runs) + ": " +
               (plain.ok ? pointed.message : plain.message);
    }
    ++runs;
  }
  double dt = seconds_since(t0);
  report(3, "Grassmann-Pluecker property", ok && dt < 300.0,
         std::to_string(runs) + " seeded instances (d<=3, n<=5), " +
             fmt("%.1fs", dt) + (detail.empty() ? "" : "; " + detail));
}

void criterion4_equivalence() {
  Triangulation t = fixtures::example_triangulation();
  SignMatrix a = fixtures::example_signs();
  PatchPoset p = build_patch_poset(cells_of_subdivision(t).cells, 3, 3);
  EquivalenceClasses cls = build_equivalence(p, a, Partition::matrix_columns(3, 3));
  auto find = [&](std::vector<int> s, std::vector<std::pair<int, int>> edges) {
    return p.find(SignVector(std::vector<Sign>{Sign(std::int8_t(s[0])),
                                               Sign(std::int8_t(s[1])),
                                               Sign(std::int8_t(s[2]))}),
                  fixtures::graph(3, 3, std::move(edges)));
  };
  int e1 = find({-1, 1, 1}, {{1, 1}, {1, 2}, {1, 3}, {2, 1}, {3, 1}});
  int e2 = find({-1, 1, 1}, {{1, 2}, {1, 3}, {2, 1}, {3, 1}, {3, 2}});
  int e3 = find({-1, 1, 1}, {{1, 3}, {2, 1}, {2, 3}, {3, 1}, {3, 2}});
  int e4 = find({1, 1, 1}, {{1, 3}, {2, 1}, {2, 3}, {3, 1}, {3, 2}});
  bool present = e1 >= 0 && e2 >= 0 && e3 >= 0 && e4 >= 0;
  bool ok = present && cls.class_of[e1] == cls.class_of[e2] &&
            cls.class_of[e1] != cls.class_of[e3] &&
            cls.class_of[e4] != cls.class_of[e1] &&
            cls.class_of[e4] != cls.class_of[e2] &&
            cls.class_of[e4] != cls.class_of[e3];
  report(4, "equivalence reproduction", ok,
         present ? "classes match the worked example" : "cells not found");
}

void criterion5_phi() {
  Triangulation t = fixtures::example_triangulation();
  SignMatrix a = fixtures::example_signs();
  PatchPoset p = build_patch_poset(cells_of_subdivision(t).cells, 3, 3);
  EquivalenceClasses cls = build_equivalence(p, a, Partition::matrix_columns(3, 3));
  std::vector<SignVector> labels = phi_labels(p, cls, a);
  int e1 = p.find(SignVector{-1, 1, 1},
                  fixtures::graph(3, 3, {{1, 1}, {1, 2}, {1, 3}, {2, 1}, {3, 1}}));
  int e3 = p.find(SignVector{-1, 1, 1},
                  fixtures::graph(3, 3, {{1, 3}, {2, 1}, {2, 3}, {3, 1}, {3, 2}}));
  int e4 = p.find(SignVector{1, 1, 1},
                  fixtures::graph(3, 3, {{1, 3}, {2, 1}, {2, 3}, {3, 1}, {3, 2}}));
  bool ok = e1 >= 0 && e3 >= 0 && e4 >= 0 &&
            labels[cls.class_of[e1]].str() == "-++0-+" &&
            labels[cls.class_of[e3]].str() == "-++0-0" &&
            labels[cls.class_of[e4]].str() == "+++0--";
  report(5, "phi reproduction", ok, "labels -++0-+, -++0-0, +++0--");
}

bool factorization_certified(const Triangulation& t, const SignMatrix& a,
                             std::string* why) {
  PatchPoset p = build_patch_poset(cells_of_subdivision(t).cells, t.d, t.n);
  QuotientChain chain = factorize_quotient(p, a);
  if (!chain.ok) {
    *why = chain.message;
    return false;
  }
  if (static_cast<long long>(chain.steps.size()) !=
      static_cast<long long>(t.n) * (t.d - 1)) {
    *why = "chain length " + std::to_string(chain.steps.size());
    return false;
  }
  for (const FactorStep& s : chain.steps) {
    if (!s.elementary.ok) {
      *why = s.elementary.message;
      return false;
    }
    std::vector<int> sizes(s.classes.count, 0);
    for (int c : s.classes.class_of) sizes[c]++;
    for (int k : sizes)
      if (k != 1 && k != 3) {
        *why = "class of size " + std::to_string(k);
        return false;
      }
  }
  for (const LatticeReport& lr : chain.lattice)
    if (!lr.ok) {
      *why = lr.message;
      return false;
    }
  return true;
}

void criterion6_factorization() {
  auto total0 = Clock::now();
  std::mt19937_64 rng(2002);
  bool ok = true;
  std::string detail;
  double worst = 0;

  {
    auto t0 = Clock::now();
    std::string why;
    if (!factorization_certified(fixtures::example_triangulation(),
                                 fixtures::example_signs(), &why)) {
      ok = false;
      detail = "worked example: " + why;
    }
    worst = std::max(worst, seconds_since(t0));
  }
  const std::pair<int, int> shapes[] = {{2, 2}, {2, 3}, {2, 4}, {2, 5},
                                        {3, 2}, {3, 3}, {3, 4}};
  for (int run = 0; run < 21 && ok; ++run) {
    auto [d, n] = shapes[run % 7];
    Triangulation t = fixtures::random_triangulation(d, n, rng);
    SignMatrix a = fixtures::random_signs(d, n, rng);
    auto t0 = Clock::now();
    std::string why;
    if (!factorization_certified(t, a, &why)) {
      ok = false;
      detail = "run " + std::to_string(run) + ": " + why;
    }
    double dt = seconds_since(t0);
    worst = std::max(worst, dt);
    if (dt >= 120.0) {
      ok = false;
      detail = "run " + std::to_string(run) + " took " + fmt("%.1fs", dt);
    }
  }
  report(6, "factorization certificates", ok,
         "example + 21 seeded instances, worst " + fmt("%.1fs", worst) +
             ", total " + fmt("%.1fs", seconds_since(total0)) +
             (detail.empty() ? "" : "; " + detail));
}

void criterion7_representation() {
  VerifyReport rep = verify_representation(fixtures::example_triangulation(),
                                           fixtures::example_signs());
  bool abcd = true;
  for (const Assertion& as : rep.assertions)
    if (as.id == "phi_injective" || as.id == "phi_surjective" ||
        as.id == "phi_order_isomorphism" || as.id == "delta_membership")
      abcd = abcd && as.status == "pass";
  report(7, "representation isomorphism", abcd,
         std::to_string(rep.class_count) + " classes against " +
             std::to_string(rep.nonzero_covectors) + " nonzero covectors");
}

void criterion8_spheres() {
  VerifyReport big = verify_representation(fixtures::example_triangulation(),
                                           fixtures::example_signs());
  std::mt19937_64 rng(3003);
  SignMatrix a2 = fixtures::random_signs(2, 3, rng);
  VerifyReport small = verify_representation(fixtures::staircase_d2n3(), a2);
  bool ok = big.euler == 2 && big.betti == std::vector<long long>{1, 0, 1} &&
            small.euler == 0 && small.betti == std::vector<long long>{1, 1};
  report(8, "sphere checks", ok,
         "d=3: chi=" + std::to_string(big.euler) + ", d=2: chi=" +
             std::to_string(small.euler));
}

void criterion9_oracle_equivalence() {
  std::mt19937_64 rng(4004);
  std::uniform_int_distribution<long long> num(-9, 9);
  std::uniform_int_distribution<long long> den(1, 4);
  int done = 0;
  bool ok = true;
  std::string detail;
  while (done < 20 && ok) {
    int d = 1 + static_cast<int>(rng() % 3);
    int m = d + static_cast<int>(rng() % (7 - d));
    std::vector<std::vector<Rat>> mat(d, std::vector<Rat>(m));
    for (auto& row : mat)
      for (auto& v : row) v = Rat(num(rng), den(rng));
    try {
      RealizableOracle oracle = realizable_oracle(mat);
      CovectorSet closure = covectors(oracle.chi);
      if (closure.v != oracle.covs.v) {
        ok = false;
        detail = "set mismatch at instance " + std::to_string(done);
      } else if (!covector_axiom_check(closure).ok ||
                 !covector_axiom_check(oracle.covs).ok) {
        ok = false;
        detail = "axiom failure at instance " + std::to_string(done);
      }
      ++done;
    } catch (const RankError&) {
      // singular draw; take another sample
    }
  }
  report(9, "oracle equivalence", ok,
         std::to_string(done) + " seeded rational matrices (d<=3, m<=6)" +
             (detail.empty() ? "" : "; " + detail));
}

void criterion10_renderer() {
  Triangulation t = fixtures::example_triangulation();
  SignMatrix a = fixtures::example_signs();
  LocusReport locus = locus_check(t, a);
  bool curves = locus.closed_curves && locus.segments.size() == 3;
  auto positive = vertex_annotations(t, a, SignVector{1, 1, 1});
  auto reflected = vertex_annotations(t, a, SignVector{1, 1, -1});
  bool notes = positive.count({0, 2, 1}) == 1 &&
               positive.at({0, 2, 1}).str() == "+--" &&
               reflected.at({0, 2, 1}).str() == "++-";
  RenderResult res = render_svg(t, a);
  bool svg_ok = res.svg.find("<svg") == 0 && res.locus.closed_curves;
  report(10, "renderer", curves && notes && svg_ok,
         "3 closed loci, annotations +-- and ++-");
}

}  // namespace

int main() {
  std::printf("acceptance suite\n");
  criterion1_heights();
  criterion2_regular_triangulation();
  criterion3_theorem_a();
  criterion4_equivalence();
  criterion5_phi();
  criterion6_factorization();
  criterion7_representation();
  criterion8_spheres();
  criterion9_oracle_equivalence();
  criterion10_renderer();
  if (failures == 0)
    std::printf("all criteria passed\n");
  else
    std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
