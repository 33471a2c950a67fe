#include <algorithm>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "pmf/error.hpp"
#include "pmf/json_io.hpp"
#include "pmf/render.hpp"

namespace {

using namespace pmf;

struct CommonOpts {
  bool max_convention = true;
  std::string level = "exact";
  std::uint64_t seed = 0;
  long long budget = kDefaultChainBudget;
  std::string merge_order = "default";
  std::string out_path;
};

void emit(const CommonOpts& opts, const std::string& text) {
  if (opts.out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  } else {
    std::ofstream out(opts.out_path);
    if (!out) throw InputError("cannot write " + opts.out_path);
    out << text;
  }
}

HeightMatrix apply_convention(HeightMatrix h, bool max_convention) {
  if (max_convention)
    for (auto& v : h.h) v = -v;
  return h;
}

// Input files either carry trees directly or heights to subdivide.
Triangulation load_tri_or_heights(const std::string& path, const CommonOpts& o) {
  Json j = load_json_file(path);
  if (j.contains("trees")) return triangulation_from_json(j);
  if (j.contains("H"))
    return regular_triangulation(apply_convention(heights_from_json(j), o.max_convention));
  throw InputError(path + ": expected a triangulation (trees) or heights (H)");
}

int cmd_validate(const std::string& path, const CommonOpts& o) {
  Triangulation t = triangulation_from_json(load_json_file(path));
  ValidationLevel level =
      o.level == "fast" ? ValidationLevel::fast : ValidationLevel::exact;
  ValidationReport rep = validate_triangulation(t, level);
  emit(o, validation_report_to_json(rep).dump(2));
  return rep.ok ? 0 : 2;
}

int cmd_subdivide(const std::string& path, bool with_cells, const CommonOpts& o) {
  Json j = load_json_file(path);
  if (!j.contains("H")) throw InputError(path + ": subdivide expects heights (H)");
  Triangulation t =
      regular_triangulation(apply_convention(heights_from_json(j), o.max_convention));
  Json out = triangulation_to_json(t);
  if (with_cells) {
    MixedSubdivision sub = cells_of_subdivision(t);
    Json cells = Json::array();
    for (const ColGraph& c : sub.cells) {
      Json cell = Json::array();
      for (auto [i, jj] : c.edges()) cell.push_back({i + 1, jj + 1});
      cells.push_back(std::move(cell));
    }
    out["cells"] = std::move(cells);
  }
  emit(o, out.dump(2));
  return 0;
}

int cmd_chirotope(const std::string& tri_path, const std::string& sign_path,
                  bool pointed, const CommonOpts& o) {
  Triangulation t = load_tri_or_heights(tri_path, o);
  SignMatrix a = sign_matrix_from_json(load_json_file(sign_path));
  Chirotope chi;
  if (pointed) {
    auto [field, augmented] = pointed_augment(t, a);
    chi = chirotope(field, augmented);
  } else {
    chi = chirotope(extract_matching_field(t), a);
  }
  emit(o, chi.export_lines());
  return 0;
}

int cmd_covectors(const std::string& tri_path, const std::string& sign_path,
                  bool pointed, const CommonOpts& o) {
  Triangulation t = load_tri_or_heights(tri_path, o);
  SignMatrix a = sign_matrix_from_json(load_json_file(sign_path));
  Chirotope chi;
  if (pointed) {
    auto [field, augmented] = pointed_augment(t, a);
    chi = chirotope(field, augmented);
  } else {
    chi = chirotope(extract_matching_field(t), a);
  }
  CovectorSet covs = covectors(chi, o.budget);
  std::vector<std::string> lines;
  lines.reserve(covs.v.size());
  for (const SignVector& v : covs.v) lines.push_back(v.str());
  std::sort(lines.begin(), lines.end());
  std::string text;
  for (const auto& l : lines) text += l + "\n";
  emit(o, text);
  return 0;
}

int cmd_patchwork(const std::string& tri_path, const std::string& sign_path,
                  const std::string& dot_path, const CommonOpts& o) {
  Triangulation t = load_tri_or_heights(tri_path, o);
  SignMatrix a = sign_matrix_from_json(load_json_file(sign_path));
  MixedSubdivision sub = cells_of_subdivision(t);
  ElimReport elim = check_elim_axioms(sub.cells);
  PatchPoset patch = build_patch_poset(sub.cells, t.d, t.n);
  EquivalenceClasses cls =
      build_equivalence(patch, a, Partition::matrix_columns(t.d, t.n));
  GradeResult g = grade(patch.poset);
  LatticeReport lat = is_lattice_augmented(patch.poset);
  Json out{{"cells", sub.cells.size()},
           {"elements", patch.poset.size()},
           {"classes", cls.count},
           {"elimination_system", elim.ok},
           {"graded", g.ok},
           {"augmented_lattice", lat.ok},
           {"covers", covers_to_json(patch.poset)}};
  if (g.ok) {
    int lo = g.rank[0], hi = g.rank[0];
    for (int r : g.rank) {
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
    // Both normalizations: the grading with bottom rank 1, and the
    // corresponding 0-based cell dimension in the dual complex.
    out["rank_range"] = {lo, hi};
    out["cell_dim_range"] = {lo - 1, hi - 1};
  }
  if (!dot_path.empty()) {
    std::vector<std::string> labels;
    labels.reserve(patch.poset.size());
    for (int e = 0; e < patch.poset.size(); ++e)
      labels.push_back(patch.label_of(e));
    std::ofstream dot(dot_path);
    if (!dot) throw InputError("cannot write " + dot_path);
    dot << patch.poset.to_dot(labels);
  }
  emit(o, out.dump(2));
  return elim.ok && g.ok && lat.ok ? 0 : 2;
}

int cmd_factorize(const std::string& tri_path, const std::string& sign_path,
                  const CommonOpts& o) {
  Triangulation t = load_tri_or_heights(tri_path, o);
  SignMatrix a = sign_matrix_from_json(load_json_file(sign_path));
  MixedSubdivision sub = cells_of_subdivision(t);
  PatchPoset patch = build_patch_poset(sub.cells, t.d, t.n);
  QuotientChain chain;
  if (o.merge_order == "random") {
    auto order = seeded_merge_order(t.d, t.n, o.seed);
    chain = factorize_quotient(patch, a, &order);
  } else {
    chain = factorize_quotient(patch, a);
  }
  Json steps = Json::array();
  for (std::size_t s = 0; s < chain.steps.size(); ++s) {
    const FactorStep& st = chain.steps[s];
    long long singletons = 0, triples = 0;
    std::vector<int> sizes(st.classes.count, 0);
    for (int c : st.classes.class_of) sizes[c]++;
    for (int k : sizes) (k == 1 ? singletons : triples)++;
    steps.push_back(Json{{"edge", {st.merged_edge.first + 1, st.merged_edge.second + 1}},
                         {"elements_before", chain.posets[s].size()},
                         {"singleton_classes", singletons},
                         {"triple_classes", triples},
                         {"elementary", st.elementary.ok}});
  }
  Json lattices = Json::array();
  for (const LatticeReport& lr : chain.lattice) lattices.push_back(lr.ok);
  long long expected = static_cast<long long>(t.n) * (t.d - 1);
  Json out{{"pass", chain.ok},
           {"message", chain.message},
           {"chain_length", chain.steps.size()},
           {"expected_length", expected},
           {"final_classes", chain.posets.back().size()},
           {"steps", std::move(steps)},
           {"augmented_lattices", std::move(lattices)}};
  GradeResult g = grade(chain.posets.back());
  if (g.ok) {
    int lo = g.rank[0], hi = g.rank[0];
    for (int r : g.rank) {
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
    out["final_rank_range"] = {lo, hi};
    out["final_cell_dim_range"] = {lo - 1, hi - 1};
  }
  emit(o, out.dump(2));
  return chain.ok && static_cast<long long>(chain.steps.size()) == expected ? 0 : 2;
}

int cmd_verify(const std::string& tri_path, const std::string& sign_path,
               const CommonOpts& o) {
  Json stages = Json::array();
  bool pass = true;
  bool skip = false;
  auto stage = [&](const std::string& name, bool ok, const std::string& detail) {
    stages.push_back(Json{{"stage", name},
                          {"status", skip ? "skipped" : (ok ? "pass" : "fail")},
                          {"detail", skip ? "" : detail}});
    if (!skip && !ok) {
      pass = false;
      skip = true;
    }
  };

  Triangulation t = load_tri_or_heights(tri_path, o);
  SignMatrix a = sign_matrix_from_json(load_json_file(sign_path));

  ValidationLevel level =
      o.level == "fast" ? ValidationLevel::fast : ValidationLevel::exact;
  ValidationReport val = validate_triangulation(t, level);
  stage("validate", val.ok, val.message);

  ElimReport elim;
  if (!skip) {
    elim = check_elim_axioms(cells_of_subdivision(t).cells);
    stage("elimination", elim.ok, elim.message);
  } else {
    stage("elimination", true, "");
  }

  Chirotope chi, chi_tilde;
  if (!skip) {
    chi = chirotope(extract_matching_field(t), a);
    GpReport gp = gp_check(chi);
    stage("gp_unpointed", gp.ok, gp.message);
  } else {
    stage("gp_unpointed", true, "");
  }
  if (!skip) {
    auto [field, augmented] = pointed_augment(t, a);
    chi_tilde = chirotope(field, augmented);
    GpReport gp = gp_check(chi_tilde);
    stage("gp_pointed", gp.ok, gp.message);
  } else {
    stage("gp_pointed", true, "");
  }

  if (!skip) {
    AxiomReport ax = covector_axiom_check(covectors(chi_tilde));
    stage("covector_axioms", ax.ok, ax.message);
  } else {
    stage("covector_axioms", true, "");
  }

  Json phi_labels_json = Json::array();
  if (!skip) {
    MixedSubdivision sub = cells_of_subdivision(t);
    PatchPoset patch = build_patch_poset(sub.cells, t.d, t.n);
    QuotientChain chain;
    if (o.merge_order == "random") {
      auto order = seeded_merge_order(t.d, t.n, o.seed);
      chain = factorize_quotient(patch, a, &order);
    } else {
      chain = factorize_quotient(patch, a);
    }
    bool len_ok = static_cast<long long>(chain.steps.size()) ==
                  static_cast<long long>(t.n) * (t.d - 1);
    stage("factorize", chain.ok && len_ok,
          chain.ok ? (len_ok ? "" : "unexpected chain length") : chain.message);
    std::vector<SignVector> labels = phi_labels(patch, chain.total, a);
    std::vector<std::string> sorted_labels;
    for (const SignVector& l : labels) sorted_labels.push_back(l.str());
    std::sort(sorted_labels.begin(), sorted_labels.end());
    for (const auto& l : sorted_labels) phi_labels_json.push_back(l);
  } else {
    stage("factorize", true, "");
  }

  Json rep_json;
  if (!skip) {
    VerifyReport rep = verify_representation(t, a, o.budget,
                                             std::min(o.budget, kDefaultHomologyBudget));
    rep_json = verify_report_to_json(rep);
    stage("representation", rep.ok, rep.ok ? "" : "see assertions");
  } else {
    VerifyReport empty;
    for (const char* id :
         {"elimination_axioms", "phi_injective", "phi_surjective",
          "phi_order_isomorphism", "delta_membership", "euler_characteristic",
          "homology"})
      empty.assertions.push_back({id, "skipped", ""});
    rep_json = verify_report_to_json(empty);
    stage("representation", true, "");
  }

  Json out{{"pass", pass},
           {"stages", std::move(stages)},
           {"representation", std::move(rep_json)},
           {"phi_labels", std::move(phi_labels_json)}};
  emit(o, out.dump(2));
  return pass ? 0 : 2;
}

int cmd_render(const std::string& tri_path, const std::string& sign_path,
               const std::string& svg_path, const CommonOpts& o) {
  Triangulation t = load_tri_or_heights(tri_path, o);
  SignMatrix a = sign_matrix_from_json(load_json_file(sign_path));
  RenderResult res = render_svg(t, a);
  std::ofstream out(svg_path);
  if (!out) throw InputError("cannot write " + svg_path);
  out << res.svg;
  Json rep{{"svg", svg_path},
           {"closed_curves", res.locus.closed_curves},
           {"segments", res.locus.segments},
           {"message", res.locus.message}};
  std::cout << rep.dump(2) << "\n";
  return res.locus.closed_curves ? 0 : 2;
}

int cmd_bergman(const std::string& tri_path, const std::string& sign_path,
                const CommonOpts& o) {
  Triangulation t = load_tri_or_heights(tri_path, o);
  SignMatrix a = sign_matrix_from_json(load_json_file(sign_path));
  auto [field, augmented] = pointed_augment(t, a);
  CovectorSet covs = covectors(chirotope(field, augmented));
  MixedSubdivision sub = cells_of_subdivision(t);
  PatchPoset patch = build_patch_poset(sub.cells, t.d, t.n);
  auto image = bergman_vertex_map(patch, a, &covs);
  std::string text;
  for (const auto& [e, vec] : image) {
    text += patch.label_of(e) + " ->";
    for (int v : vec) text += " " + std::to_string(v);
    text += "\n";
  }
  emit(o, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"oriented matroids from triangulations of a product of two "
               "simplices, with patchworked pseudosphere verification"};
  app.require_subcommand(1);
  CommonOpts o;

  std::string in1, in2, out_svg, dot_path;
  bool pointed = false, with_cells = false, min_convention = false;

  auto add_common = [&](CLI::App* cmd, bool with_out = true) {
    CLI::Option* maxf =
        cmd->add_flag("--max", "max-tropical height convention (default)");
    cmd->add_flag_function(
           "--min", [&](std::int64_t) { min_convention = true; },
           "min/lower-envelope height convention")
        ->excludes(maxf);
    cmd->add_option("--level", o.level, "validation level: fast or exact")
        ->check(CLI::IsMember({"fast", "exact"}));
    cmd->add_option("--seed", o.seed, "seed for randomized choices");
    cmd->add_option("--budget", o.budget, "order-complex chain budget");
    cmd->add_option("--merge-order", o.merge_order,
                    "factorization merge order: default or random")
        ->check(CLI::IsMember({"default", "random"}));
    if (with_out) cmd->add_option("--out", o.out_path, "write output to a file");
  };

  CLI::App* validate = app.add_subcommand("validate", "validate a triangulation file");
  validate->add_option("triangulation", in1)->required();
  add_common(validate);

  CLI::App* subdivide =
      app.add_subcommand("subdivide", "regular triangulation from heights");
  subdivide->add_option("heights", in1)->required();
  subdivide->add_flag("--cells", with_cells, "also list the subdivision cells");
  add_common(subdivide);

  CLI::App* chir = app.add_subcommand("chirotope", "export the chirotope");
  chir->add_option("input", in1)->required();
  chir->add_option("signs", in2)->required();
  chir->add_flag("--pointed", pointed, "use the pointed field on the augmented ground set");
  add_common(chir);

  CLI::App* cov = app.add_subcommand("covectors", "export the covector set");
  cov->add_option("input", in1)->required();
  cov->add_option("signs", in2)->required();
  cov->add_flag("--pointed", pointed, "use the pointed field on the augmented ground set");
  add_common(cov);

  CLI::App* pw = app.add_subcommand("patchwork", "build the signed cell poset");
  pw->add_option("input", in1)->required();
  pw->add_option("signs", in2)->required();
  pw->add_option("--dot", dot_path, "write the Hasse diagram in DOT format");
  add_common(pw);

  CLI::App* fact =
      app.add_subcommand("factorize", "factor the quotient into elementary steps");
  fact->add_option("input", in1)->required();
  fact->add_option("signs", in2)->required();
  add_common(fact);

  CLI::App* verify = app.add_subcommand("verify", "run the full pipeline");
  verify->add_option("input", in1)->required();
  verify->add_option("signs", in2)->required();
  add_common(verify);

  CLI::App* render = app.add_subcommand("render", "rank-3 SVG pseudoline picture");
  render->add_option("input", in1)->required();
  render->add_option("signs", in2)->required();
  render->add_option("out", out_svg)->required();
  add_common(render, false);

  CLI::App* bergman = app.add_subcommand("bergman", "vertex map into the lattice cube");
  bergman->add_option("input", in1)->required();
  bergman->add_option("signs", in2)->required();
  add_common(bergman);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }
  o.max_convention = !min_convention;

  try {
    if (app.got_subcommand(validate)) return cmd_validate(in1, o);
    if (app.got_subcommand(subdivide)) return cmd_subdivide(in1, with_cells, o);
    if (app.got_subcommand(chir)) return cmd_chirotope(in1, in2, pointed, o);
    if (app.got_subcommand(cov)) return cmd_covectors(in1, in2, pointed, o);
    if (app.got_subcommand(pw)) return cmd_patchwork(in1, in2, dot_path, o);
    if (app.got_subcommand(fact)) return cmd_factorize(in1, in2, o);
    if (app.got_subcommand(verify)) return cmd_verify(in1, in2, o);
    if (app.got_subcommand(render)) return cmd_render(in1, in2, out_svg, o);
    if (app.got_subcommand(bergman)) return cmd_bergman(in1, in2, o);
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const DegenerateHeightsError& e) {
    std::cerr << "degenerate heights: " << e.what() << "\n";
    return 2;
  } catch (const InvalidTriangulationError& e) {
    std::cerr << "invalid triangulation: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedRankError& e) {
    std::cerr << "unsupported rank: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
