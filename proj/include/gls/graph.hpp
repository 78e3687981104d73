#pragma once

// Properly edge-colored complete graphs K_m.
//
// Text format (.ecg):
//
//   # optional comment lines
//   m
//   i j c        one line per edge of K_m, 1-based vertices, color >= 0
//
// All m(m-1)/2 edges are required.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "gls/square.hpp"

namespace gls {

using Color = std::int64_t;

struct Edge {
  int u = 0;  // u < v, 0-based
  int v = 0;
  auto operator<=>(const Edge&) const = default;
};

class EdgeColoredGraph {
 public:
  // colors[k] is the color of the k-th edge in lexicographic (u, v) order.
  // Throws NotProper or InfeasibleParams.
  static EdgeColoredGraph from_edge_colors(int m, std::vector<Color> colors);

  int vertex_count() const { return m_; }
  int color_count() const { return color_count_; }
  Color color(int u, int v) const { return colors_[static_cast<std::size_t>(u) * m_ + v]; }
  // Dense color id, by first occurrence in edge order.
  int color_id(int u, int v) const { return ids_[static_cast<std::size_t>(u) * m_ + v]; }

  std::vector<Color> edge_colors() const;

  bool operator==(const EdgeColoredGraph& o) const { return m_ == o.m_ && colors_ == o.colors_; }

 private:
  int m_ = 0;
  int color_count_ = 0;
  std::vector<Color> colors_;  // symmetric m x m, diagonal -1
  std::vector<int> ids_;
};

std::size_t edge_count(int m);

EdgeColoredGraph parse_graph(std::istream& in);
EdgeColoredGraph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const EdgeColoredGraph& g, const std::string& comment = {});
void write_graph_file(const std::string& path, const EdgeColoredGraph& g, const std::string& comment = {});

// Every proper edge coloring of K_m up to renaming colors (colors numbered by
// first occurrence in edge order). Practical for m <= 6.
std::vector<EdgeColoredGraph> enumerate_proper_colorings(int m);

}  // namespace gls
