#include "pmf/render.hpp"

#include <algorithm>
#include <array>
#include <bit>

#include "pmf/error.hpp"

namespace pmf {

namespace {

// A maximal cell of the rank-3 subdivision with its polygon vertices in
// cyclic order; each vertex is the row choice per column.
struct Cell2 {
  std::vector<std::vector<int>> choices;  // cyclic, each of length n
};

std::vector<int> point_of_choice(int d, const std::vector<int>& rows) {
  std::vector<int> p(d, 0);
  for (int r : rows) p[r] += 1;
  return p;
}

std::vector<Cell2> two_cells(const Triangulation& t) {
  std::vector<Cell2> out;
  for (const ColGraph& tree : t.trees) {
    std::vector<int> wide;  // columns with more than one row
    for (int j = 0; j < t.n; ++j)
      if (std::popcount(tree.cols[j]) > 1) wide.push_back(j);
    std::vector<int> base(t.n, -1);
    for (int j = 0; j < t.n; ++j)
      if (std::popcount(tree.cols[j]) == 1)
        base[j] = std::countr_zero(tree.cols[j]);
    Cell2 cell;
    auto rows_of = [&](int j) {
      std::vector<int> rows;
      for (int i = 0; i < t.d; ++i)
        if (tree.has_edge(i, j)) rows.push_back(i);
      return rows;
    };
    if (wide.size() == 1) {  // triangle: one summand of dimension 2
      for (int r : rows_of(wide[0])) {
        std::vector<int> c = base;
        c[wide[0]] = r;
        cell.choices.push_back(std::move(c));
      }
    } else if (wide.size() == 2) {  // parallelogram
      auto r1 = rows_of(wide[0]), r2 = rows_of(wide[1]);
      const int order[4][2] = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
      for (auto [a, b] : order) {
        std::vector<int> c = base;
        c[wide[0]] = r1[a];
        c[wide[1]] = r2[b];
        cell.choices.push_back(std::move(c));
      }
    } else {
      throw InternalError("maximal cell is not a triangle or parallelogram");
    }
    out.push_back(std::move(cell));
  }
  return out;
}

SignVector annotate(const std::vector<int>& rows, const SignMatrix& a,
                    const SignVector& s) {
  SignVector z = SignVector::zero(static_cast<int>(rows.size()));
  for (int j = 0; j < z.size(); ++j) z[j] = s[rows[j]] * a.at(rows[j], j);
  return z;
}

}  // namespace

std::map<std::vector<int>, SignVector> vertex_annotations(
    const Triangulation& t, const SignMatrix& a, const SignVector& s) {
  if (s.size() != t.d) throw DimensionError("orthant vector has wrong length");
  MixedSubdivision sub = cells_of_subdivision(t);
  std::map<std::vector<int>, std::vector<int>> choice_at;
  for (const ColGraph& f : sub.cells) {
    bool vertex = true;
    std::vector<int> rows(t.n, -1);
    for (int j = 0; j < t.n && vertex; ++j) {
      if (std::popcount(f.cols[j]) != 1)
        vertex = false;
      else
        rows[j] = std::countr_zero(f.cols[j]);
    }
    if (!vertex) continue;
    auto p = point_of_choice(t.d, rows);
    auto [it, inserted] = choice_at.emplace(p, rows);
    if (!inserted && it->second != rows)
      throw InternalError("vertex forest depends on the containing cell");
  }
  std::map<std::vector<int>, SignVector> out;
  for (const auto& [p, rows] : choice_at) out.emplace(p, annotate(rows, a, s));
  return out;
}

LocusReport locus_check(const Triangulation& t, const SignMatrix& a) {
  if (t.d != 3) throw UnsupportedRankError("zero loci are drawn for rank 3 only");
  LocusReport rep;
  rep.segments.assign(t.n, 0);
  rep.bad_vertices.assign(t.n, 0);
  std::vector<Cell2> cells = two_cells(t);
  // Midpoint degree count per column over all eight orthants; midpoints
  // are stored in doubled reflected coordinates, which identifies the
  // shared boundary between adjacent orthants.
  std::vector<std::map<std::array<int, 3>, int>> degree(t.n);
  for (int mask = 0; mask < 8; ++mask) {
    SignVector s({(mask & 1) ? -1 : 1, (mask & 2) ? -1 : 1, (mask & 4) ? -1 : 1});
    for (const Cell2& cell : cells) {
      const int k = static_cast<int>(cell.choices.size());
      std::vector<SignVector> ann;
      std::vector<std::vector<int>> pts;
      ann.reserve(k);
      for (const auto& rows : cell.choices) {
        ann.push_back(annotate(rows, a, s));
        pts.push_back(point_of_choice(t.d, rows));
      }
      for (int j = 0; j < t.n; ++j) {
        std::vector<std::array<int, 3>> mids;
        for (int v = 0; v < k; ++v) {
          int w = (v + 1) % k;
          if (ann[v][j] == ann[w][j]) continue;
          std::array<int, 3> m;
          for (int c = 0; c < 3; ++c)
            m[c] = static_cast<int>(s[c]) * (pts[v][c] + pts[w][c]);
          mids.push_back(m);
        }
        if (mids.empty()) continue;
        if (mids.size() != 2) {
          rep.closed_curves = false;
          rep.message = "cell with " + std::to_string(mids.size()) +
                        " disagreeing edges for column " + std::to_string(j + 1);
          continue;
        }
        rep.segments[j]++;
        degree[j][mids[0]]++;
        degree[j][mids[1]]++;
      }
    }
  }
  for (int j = 0; j < t.n; ++j) {
    for (const auto& [pt, deg] : degree[j])
      if (deg != 2) rep.bad_vertices[j]++;
    if (rep.bad_vertices[j] > 0) rep.closed_curves = false;
  }
  if (!rep.closed_curves && rep.message.empty())
    rep.message = "some locus vertex does not have degree 2";
  return rep;
}

namespace {

// Exact fixed-point formatting of num/den with four decimals.
std::string fixed4(long long num, long long den) {
  if (den < 0) {
    den = -den;
    num = -num;
  }
  long long scaled = num * 10000;
  long long q = (2 * scaled + (scaled >= 0 ? den : -den)) / (2 * den);
  bool neg = q < 0;
  if (neg) q = -q;
  std::string digits = std::to_string(q);
  while (digits.size() < 5) digits.insert(digits.begin(), '0');
  std::string out = digits.substr(0, digits.size() - 4) + "." +
                    digits.substr(digits.size() - 4);
  return neg ? "-" + out : out;
}

const char* locus_color(int j) {
  static const char* palette[] = {"#d62728", "#2ca02c", "#1f77b4",
                                  "#ff7f0e", "#9467bd", "#8c564b"};
  return palette[j % 6];
}

}  // namespace

RenderResult render_svg(const Triangulation& t, const SignMatrix& a) {
  if (t.d != 3)
    throw UnsupportedRankError("the renderer draws rank-3 arrangements only");
  RenderResult res;
  res.locus = locus_check(t, a);
  std::vector<Cell2> cells = two_cells(t);

  const long long w = t.n + 1;  // world half-width with margin
  // Drawing plane: x carries the third row, y the first; doubled world
  // coordinates keep edge midpoints integral.
  auto sx = [&](long long doubled_x) {
    return fixed4((doubled_x + 2 * w) * 250, w);
  };
  auto sy = [&](long long doubled_y) { return fixed4((2 * w - doubled_y) * 250, w); };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1000 1000\">\n";
  svg += "<rect width=\"1000\" height=\"1000\" fill=\"white\"/>\n";

  const std::pair<int, int> quartiles[4] = {{1, 1}, {-1, 1}, {1, -1}, {-1, -1}};
  // Cell outlines.
  for (auto [qx, qy] : quartiles) {
    for (const Cell2& cell : cells) {
      std::string pts;
      for (const auto& rows : cell.choices) {
        auto p = point_of_choice(t.d, rows);
        pts += sx(2LL * qx * p[2]) + "," + sy(2LL * qy * p[0]) + " ";
      }
      svg += "<polygon points=\"" + pts +
             "\" fill=\"#f5f5f0\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
    }
  }
  // Coordinate axes as plain lines.
  svg += "<line x1=\"0\" y1=\"500\" x2=\"1000\" y2=\"500\" stroke=\"#333333\" "
         "stroke-width=\"1.5\"/>\n";
  svg += "<line x1=\"500\" y1=\"0\" x2=\"500\" y2=\"1000\" stroke=\"#333333\" "
         "stroke-width=\"1.5\"/>\n";

  // Zero loci.
  for (auto [qx, qy] : quartiles) {
    SignVector s({qy, 1, qx});
    for (const Cell2& cell : cells) {
      const int k = static_cast<int>(cell.choices.size());
      std::vector<SignVector> ann;
      std::vector<std::vector<int>> pts;
      for (const auto& rows : cell.choices) {
        ann.push_back(annotate(rows, a, s));
        pts.push_back(point_of_choice(t.d, rows));
      }
      for (int j = 0; j < t.n; ++j) {
        std::vector<std::pair<long long, long long>> mids;
        for (int v = 0; v < k; ++v) {
          int q = (v + 1) % k;
          if (ann[v][j] == ann[q][j]) continue;
          mids.emplace_back(qx * (pts[v][2] + pts[q][2]),
                            qy * (pts[v][0] + pts[q][0]));
        }
        if (mids.size() == 2) {
          svg += std::string("<line x1=\"") + sx(mids[0].first) + "\" y1=\"" +
                 sy(mids[0].second) + "\" x2=\"" + sx(mids[1].first) +
                 "\" y2=\"" + sy(mids[1].second) + "\" stroke=\"" +
                 locus_color(j) + "\" stroke-width=\"3\"/>\n";
        }
      }
    }
  }

  // Vertices and annotations.
  for (auto [qx, qy] : quartiles) {
    SignVector s({qy, 1, qx});
    auto annotations = vertex_annotations(t, a, s);
    for (const auto& [p, z] : annotations) {
      std::string cx = sx(2LL * qx * p[2]), cy = sy(2LL * qy * p[0]);
      svg += "<circle cx=\"" + cx + "\" cy=\"" + cy +
             "\" r=\"3.5\" fill=\"#222222\"/>\n";
      svg += "<text x=\"" + cx + "\" y=\"" + cy +
             "\" dx=\"5\" dy=\"-5\" font-family=\"monospace\" "
             "font-size=\"13\">" +
             z.str() + "</text>\n";
    }
  }
  svg += "<text x=\"10\" y=\"985\" font-family=\"sans-serif\" font-size=\"14\">"
         "upper half shown; the orthants with second coordinate negative are "
         "the central reflections</text>\n";
  svg += "</svg>\n";
  res.svg = std::move(svg);
  return res;
}

}  // namespace pmf
