#include "gls/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "gls/error.hpp"
#include "gls/text_scan.hpp"

namespace gls {

std::size_t edge_count(int m) { return static_cast<std::size_t>(m) * (m - 1) / 2; }

EdgeColoredGraph EdgeColoredGraph::from_edge_colors(int m, std::vector<Color> colors) {
  if (m < 1) throw InfeasibleParams("graph needs at least one vertex");
  if (colors.size() != edge_count(m)) {
    throw InfeasibleParams("expected " + std::to_string(edge_count(m)) + " edge colors, got " +
                           std::to_string(colors.size()));
  }
  EdgeColoredGraph g;
  g.m_ = m;
  g.colors_.assign(static_cast<std::size_t>(m) * m, -1);
  g.ids_.assign(static_cast<std::size_t>(m) * m, -1);
  std::unordered_map<Color, int> to_id;
  std::size_t k = 0;
  for (int u = 0; u < m; ++u) {
    for (int v = u + 1; v < m; ++v, ++k) {
      const Color c = colors[k];
      if (c < 0) throw InfeasibleParams("negative color on edge " + std::to_string(u + 1) + "-" + std::to_string(v + 1));
      auto [it, fresh] = to_id.try_emplace(c, static_cast<int>(to_id.size()));
      g.colors_[static_cast<std::size_t>(u) * m + v] = g.colors_[static_cast<std::size_t>(v) * m + u] = c;
      g.ids_[static_cast<std::size_t>(u) * m + v] = g.ids_[static_cast<std::size_t>(v) * m + u] = it->second;
    }
  }
  g.color_count_ = static_cast<int>(to_id.size());
  for (int u = 0; u < m; ++u) {
    std::unordered_map<Color, int> seen;
    for (int v = 0; v < m; ++v) {
      if (v == u) continue;
      auto [it, fresh] = seen.try_emplace(g.color(u, v), v);
      if (!fresh) {
        throw NotProper("vertex " + std::to_string(u + 1) + " has two edges of color " +
                        std::to_string(g.color(u, v)) + " (to " + std::to_string(it->second + 1) + " and " +
                        std::to_string(v + 1) + ")");
      }
    }
  }
  return g;
}

std::vector<Color> EdgeColoredGraph::edge_colors() const {
  std::vector<Color> out;
  out.reserve(edge_count(m_));
  for (int u = 0; u < m_; ++u)
    for (int v = u + 1; v < m_; ++v) out.push_back(color(u, v));
  return out;
}

EdgeColoredGraph parse_graph(std::istream& in) {
  detail::LineScanner scan(in);
  if (!scan.next_content_line()) throw ParseError(scan.line_no() + 1, 1, "missing vertex count line");
  auto header = scan.integers();
  if (header.size() != 1) throw ParseError(scan.line_no(), 1, "expected a single integer m");
  if (header[0].first < 1 || header[0].first > 4096) throw ParseError(scan.line_no(), header[0].second, "bad vertex count");
  const int m = static_cast<int>(header[0].first);

  std::vector<Color> colors(edge_count(m), -1);
  auto slot = [m](int u, int v) {
    // Position of edge (u, v), u < v, in lexicographic order.
    return static_cast<std::size_t>(u) * m - static_cast<std::size_t>(u) * (u + 1) / 2 + (v - u - 1);
  };
  std::size_t seen = 0;
  while (scan.next_content_line()) {
    auto f = scan.integers();
    if (f.size() != 3) throw ParseError(scan.line_no(), 1, "expected 'i j c'");
    std::int64_t i = f[0].first, j = f[1].first, c = f[2].first;
    if (i < 1 || i > m) throw ParseError(scan.line_no(), f[0].second, "vertex out of range");
    if (j < 1 || j > m) throw ParseError(scan.line_no(), f[1].second, "vertex out of range");
    if (i == j) throw ParseError(scan.line_no(), f[1].second, "loop edge");
    if (c < 0) throw ParseError(scan.line_no(), f[2].second, "negative color");
    int u = static_cast<int>(std::min(i, j)) - 1, v = static_cast<int>(std::max(i, j)) - 1;
    auto& cell = colors[slot(u, v)];
    if (cell >= 0) throw ParseError(scan.line_no(), f[0].second, "duplicate edge");
    cell = c;
    ++seen;
  }
  if (seen != edge_count(m)) {
    throw ParseError(scan.line_no(), 1,
                     "expected " + std::to_string(edge_count(m)) + " edges, got " + std::to_string(seen));
  }
  return EdgeColoredGraph::from_edge_colors(m, std::move(colors));
}

EdgeColoredGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return parse_graph(in);
}

void write_graph(std::ostream& out, const EdgeColoredGraph& g, const std::string& comment) {
  if (!comment.empty()) {
    std::istringstream lines(comment);
    for (std::string l; std::getline(lines, l);) out << "# " << l << '\n';
  }
  const int m = g.vertex_count();
  out << m << '\n';
  for (int u = 0; u < m; ++u)
    for (int v = u + 1; v < m; ++v) out << u + 1 << ' ' << v + 1 << ' ' << g.color_id(u, v) << '\n';
}

void write_graph_file(const std::string& path, const EdgeColoredGraph& g, const std::string& comment) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  write_graph(out, g, comment);
}

std::vector<EdgeColoredGraph> enumerate_proper_colorings(int m) {
  if (m < 1 || m > 7) throw InfeasibleParams("proper coloring enumeration supports 1 <= m <= 7");
  std::vector<Edge> edges;
  for (int u = 0; u < m; ++u)
    for (int v = u + 1; v < m; ++v) edges.push_back({u, v});
  std::vector<Color> colors(edges.size(), -1);
  // used[v][c]: vertex v already has an edge of color c.
  const int max_colors = static_cast<int>(edges.size());
  std::vector<std::vector<char>> used(m, std::vector<char>(max_colors + 1, 0));
  std::vector<EdgeColoredGraph> out;

  auto rec = [&](auto&& self, std::size_t e, int next_color) -> void {
    if (e == edges.size()) {
      out.push_back(EdgeColoredGraph::from_edge_colors(m, colors));
      return;
    }
    const auto [u, v] = edges[e];
    for (int c = 0; c <= next_color; ++c) {
      if (used[u][c] || used[v][c]) continue;
      used[u][c] = used[v][c] = 1;
      colors[e] = c;
      self(self, e + 1, c == next_color ? next_color + 1 : next_color);
      used[u][c] = used[v][c] = 0;
    }
  };
  rec(rec, 0, 0);
  return out;
}

}  // namespace gls
