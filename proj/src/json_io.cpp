#include "pmf/json_io.hpp"

#include <fstream>

#include "pmf/error.hpp"

namespace pmf {

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

Rat rat_from_json(const Json& v) {
  if (v.is_number_integer()) return Rat(v.get<long long>());
  if (v.is_string()) {
    std::string s = v.get<std::string>();
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rat(Int(s));
      Int num(s.substr(0, slash)), den(s.substr(slash + 1));
      if (den == 0) throw InputError("zero denominator in \"" + s + "\"");
      return Rat(num, den);
    } catch (const std::exception&) {
      throw InputError("bad rational \"" + s + "\"");
    }
  }
  throw InputError("rationals must be integers or \"p/q\" strings");
}

std::string rat_to_string(const Rat& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

Sign sign_from_json(const Json& v) {
  if (v.is_number_integer()) {
    long long x = v.get<long long>();
    if (x < -1 || x > 1) throw InputError("sign entries must be -1, 0 or 1");
    return sign_of(x);
  }
  if (v.is_string()) {
    std::string s = v.get<std::string>();
    if (s == "+" || s == "+1" || s == "1") return Sign::plus;
    if (s == "-" || s == "−" || s == "-1") return Sign::minus;
    if (s == "0") return Sign::zero;
    throw InputError("bad sign \"" + s + "\"");
  }
  throw InputError("signs must be strings or small integers");
}

Triangulation triangulation_from_json(const Json& j) {
  if (!j.contains("d") || !j.contains("n") || !j.contains("trees"))
    throw InputError("triangulation needs the keys d, n and trees");
  Triangulation t;
  t.d = j.at("d").get<int>();
  t.n = j.at("n").get<int>();
  if (t.d < 1 || t.d > 31 || t.n < 1)
    throw InputError("unsupported ground set sizes");
  for (const Json& tree : j.at("trees")) {
    std::vector<std::pair<int, int>> edges;
    for (const Json& e : tree) {
      if (!e.is_array() || e.size() != 2)
        throw InputError("edges are [row, column] pairs");
      edges.emplace_back(e[0].get<int>() - 1, e[1].get<int>() - 1);
    }
    t.trees.push_back(graph_from_edges(t.d, t.n, edges));
  }
  return t;
}

Json triangulation_to_json(const Triangulation& t) {
  Json trees = Json::array();
  for (const ColGraph& g : t.trees) {
    Json tree = Json::array();
    for (auto [i, j] : g.edges()) tree.push_back({i + 1, j + 1});
    trees.push_back(std::move(tree));
  }
  return Json{{"d", t.d}, {"n", t.n}, {"trees", std::move(trees)}};
}

HeightMatrix heights_from_json(const Json& j) {
  if (!j.contains("H")) throw InputError("heights need the key H");
  const Json& rows = j.at("H");
  HeightMatrix h;
  h.d = static_cast<int>(rows.size());
  if (h.d == 0) throw InputError("empty height matrix");
  h.n = static_cast<int>(rows[0].size());
  h.h.resize(h.d * h.n);
  for (int i = 0; i < h.d; ++i) {
    if (static_cast<int>(rows[i].size()) != h.n)
      throw InputError("ragged height matrix");
    for (int k = 0; k < h.n; ++k) h.at(i, k) = rat_from_json(rows[i][k]);
  }
  return h;
}

SignMatrix sign_matrix_from_json(const Json& j) {
  if (!j.contains("A")) throw InputError("sign matrix needs the key A");
  const Json& rows = j.at("A");
  int d = static_cast<int>(rows.size());
  if (d == 0) throw InputError("empty sign matrix");
  int n = static_cast<int>(rows[0].size());
  SignMatrix a(d, n);
  for (int i = 0; i < d; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw InputError("ragged sign matrix");
    for (int k = 0; k < n; ++k) a.at(i, k) = sign_from_json(rows[i][k]);
  }
  return a;
}

Json sign_matrix_to_json(const SignMatrix& a) {
  Json rows = Json::array();
  for (int i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < a.cols(); ++j)
      row.push_back(std::string(1, sign_char(a.at(i, j))));
    rows.push_back(std::move(row));
  }
  return Json{{"A", std::move(rows)}};
}

Json sign_vector_to_json(const SignVector& v) {
  Json arr = Json::array();
  for (int i = 0; i < v.size(); ++i)
    arr.push_back(std::string(1, sign_char(v[i])));
  return arr;
}

Json covers_to_json(const Poset& p) {
  Json covers = Json::array();
  for (auto [lo, hi] : p.covers()) covers.push_back({lo, hi});
  return Json{{"elements", p.size()}, {"covers", std::move(covers)}};
}

Json validation_report_to_json(const ValidationReport& r) {
  Json j{{"pass", r.ok},
         {"level", r.level == ValidationLevel::exact ? "exact" : "fast"},
         {"message", r.message}};
  if (r.bad_tree >= 0) j["bad_tree"] = r.bad_tree;
  if (r.bad_pair.first >= 0) j["bad_pair"] = {r.bad_pair.first, r.bad_pair.second};
  return j;
}

Json verify_report_to_json(const VerifyReport& r) {
  Json assertions = Json::array();
  for (const Assertion& a : r.assertions)
    assertions.push_back(
        Json{{"id", a.id}, {"status", a.status}, {"detail", a.detail}});
  Json j{{"pass", r.ok},
         {"assertions", std::move(assertions)},
         {"patch_elements", r.patch_elements},
         {"classes", r.class_count},
         {"nonzero_covectors", r.nonzero_covectors},
         {"chi", r.euler}};
  j["betti"] = r.betti;
  return j;
}

}  // namespace pmf
