#include "gls/extremal.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "gls/error.hpp"
#include "gls/solvers.hpp"

namespace gls {

namespace {

template <typename IsCounterexample>
LNumberResult threshold_number(int n, EnumerationOptions options, IsCounterexample is_counterexample) {
  if (n < 1) throw PreconditionViolated("order must be positive");
  options.order = n;
  options.min_symbols = n;
  options.max_symbols = n * n;
  EnumerationResult en = enumerate_squares(options);

  LNumberResult res;
  res.n = n;
  res.exhaustive = en.complete;
  res.classes = en.squares.size();
  int worst = 0;  // largest counterexample symbol count
  for (const Square& sq : en.squares) {
    const int k = sq.symbol_count();
    ++res.by_symbol_count[k];
    if (is_counterexample(sq)) {
      ++res.counterexamples_by_symbol_count[k];
      if (k > worst) {
        worst = k;
        res.witness = sq;
      }
    }
  }
  res.raw_value = worst + 1;
  res.value = std::max(res.raw_value, n);
  return res;
}

}  // namespace

LNumberResult compute_l(int n, EnumerationOptions options) {
  return threshold_number(n, std::move(options), [](const Square& sq) {
    return find_transversal_exact(sq).outcome == Outcome::NotFound;
  });
}

LNumberResult compute_l_star(int n, EnumerationOptions options) {
  return threshold_number(n, std::move(options),
                          [](const Square& sq) { return !decompose_into_transversals(sq, false).feasible; });
}

Square random_latin_square(int n, Rng& rng) {
  if (n < 1) throw InfeasibleParams("order must be positive");
  const auto idx = [n](int r, int c, int s) {
    return (static_cast<std::size_t>(r) * n + c) * n + s;
  };
  std::vector<signed char> m(static_cast<std::size_t>(n) * n * n, 0);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m[idx(r, c, (r + c) % n)] = 1;
  if (n <= 2) {
    // Z_1 and Z_2 are the only Latin squares up to relabeling.
    std::vector<Symbol> labels(static_cast<std::size_t>(n) * n);
    const bool swap = n == 2 && rng.coin();
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) labels[r * n + c] = swap ? (r + c + 1) % n : (r + c) % n;
    return Square::from_labels(n, std::move(labels));
  }

  bool improper = false;
  int ir = 0, ic = 0, is = 0;
  auto pick_two = [&](auto&& pred) {
    int found[2] = {-1, -1};
    int k = 0;
    for (int x = 0; x < n && k < 2; ++x)
      if (pred(x)) found[k++] = x;
    return found[rng.below(2)];
  };
  auto find_one = [&](auto&& pred) {
    for (int x = 0; x < n; ++x)
      if (pred(x)) return x;
    return -1;
  };

  const long steps = static_cast<long>(n) * n * n;
  for (long step = 0; step < steps || improper; ++step) {
    int r, c, s, r1, c1, s1;
    if (!improper) {
      do {
        r = rng.below(n);
        c = rng.below(n);
        s = rng.below(n);
      } while (m[idx(r, c, s)] != 0);
      s1 = find_one([&](int x) { return m[idx(r, c, x)] == 1; });
      r1 = find_one([&](int x) { return m[idx(x, c, s)] == 1; });
      c1 = find_one([&](int x) { return m[idx(r, x, s)] == 1; });
    } else {
      r = ir;
      c = ic;
      s = is;
      s1 = pick_two([&](int x) { return m[idx(r, c, x)] == 1; });
      r1 = pick_two([&](int x) { return m[idx(x, c, s)] == 1; });
      c1 = pick_two([&](int x) { return m[idx(r, x, s)] == 1; });
    }
    ++m[idx(r, c, s)];
    ++m[idx(r, c1, s1)];
    ++m[idx(r1, c, s1)];
    ++m[idx(r1, c1, s)];
    --m[idx(r, c1, s)];
    --m[idx(r1, c, s)];
    --m[idx(r, c, s1)];
    --m[idx(r1, c1, s1)];
    improper = m[idx(r1, c1, s1)] < 0;
    if (improper) {
      ir = r1;
      ic = c1;
      is = s1;
    }
  }

  std::vector<Symbol> labels(static_cast<std::size_t>(n) * n, -1);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      for (int s = 0; s < n; ++s)
        if (m[idx(r, c, s)] == 1) labels[r * n + c] = s;
  return Square::from_labels(n, std::move(labels));
}

Square recolor_fresh(const Square& square, std::span<const CellRef> cells) {
  const int n = square.order();
  std::vector<Symbol> labels(square.labels().begin(), square.labels().end());
  Symbol fresh = *std::max_element(labels.begin(), labels.end()) + 1;
  std::set<CellRef> seen;
  for (const CellRef& c : cells) {
    if (!square.contains(c)) throw OutOfRange("cell outside the square");
    if (!seen.insert(c).second) throw InfeasibleParams("cells to recolor must be distinct");
    labels[static_cast<std::size_t>(c.row) * n + c.col] = fresh++;
  }
  return Square::from_labels(n, std::move(labels));
}

Square random_gls(int n, int k, std::uint64_t seed) {
  if (n < 1 || k < n || k > n * n) {
    throw InfeasibleParams("random_gls needs n <= k <= n^2; got n=" + std::to_string(n) + ", k=" + std::to_string(k));
  }
  Rng rng(seed);
  Square base = random_latin_square(n, rng);
  std::vector<Symbol> labels(base.labels().begin(), base.labels().end());
  std::vector<int> mult(static_cast<std::size_t>(n) * n + n, 0);
  for (Symbol s : labels) ++mult[s];
  Symbol fresh = n;
  int symbols = n;
  // Cells still holding a repeated symbol; removal is swap-with-last.
  std::vector<int> repeated(labels.size());
  std::iota(repeated.begin(), repeated.end(), 0);
  while (symbols < k) {
    const int pick = rng.below(static_cast<int>(repeated.size()));
    const int cell = repeated[pick];
    repeated[pick] = repeated.back();
    repeated.pop_back();
    const Symbol old = labels[cell];
    if (mult[old] < 2) continue;  // became a singleton earlier
    --mult[old];
    labels[cell] = fresh;
    mult[fresh] = 1;
    ++fresh;
    ++symbols;
  }
  return Square::from_labels(n, std::move(labels));
}

Square multiplicity_split_square(int n, int r, std::uint64_t seed) {
  if (n < 1 || r < 0 || r > n) throw InfeasibleParams("multiplicity split needs 0 <= r <= n");
  Rng rng(seed);
  Square base = random_latin_square(n, rng);
  std::vector<int> keep = rng.permutation(n);
  keep.resize(r);
  std::vector<char> kept(n, 0);
  for (int s : keep) kept[s] = 1;
  std::vector<Symbol> labels(base.labels().begin(), base.labels().end());
  Symbol fresh = n;
  for (Symbol& s : labels)
    if (!kept[s]) s = fresh++;
  return Square::from_labels(n, std::move(labels));
}

Square lstar_gap(const Square& transversal_free) {
  const int n = transversal_free.order();
  if (n < 3) throw PreconditionViolated("lstar_gap needs n >= 3");
  if (find_transversal_exact(transversal_free).outcome == Outcome::Found) {
    throw PreconditionViolated("lstar_gap input must be transversal-free");
  }
  const SymbolStats st = compute_stats(transversal_free);
  std::vector<int> reps = st.repetitions;
  std::stable_sort(reps.begin(), reps.end(),
                   [&](int a, int b) { return st.multiplicity[a] > st.multiplicity[b]; });
  if (static_cast<int>(reps.size()) < n - 1) {
    throw InfeasibleParams("input has " + std::to_string(reps.size()) + " repetition symbols, need " +
                           std::to_string(n - 1));
  }
  reps.resize(n - 1);
  std::vector<CellRef> cells;
  for (int id : reps) {
    bool done = false;
    for (int r = 0; r < n && !done; ++r)
      for (int c = 0; c < n && !done; ++c)
        if (transversal_free.id(r, c) == id) {
          cells.push_back({r, c});
          done = true;
        }
  }
  return recolor_fresh(transversal_free, cells);
}

EdgeColoredGraph proper_coloring(int m, int colors, std::uint64_t seed) {
  if (m < 2) throw InfeasibleParams("proper_coloring needs m >= 2");
  const int base = m % 2 == 0 ? m - 1 : m;
  const int max_colors = static_cast<int>(edge_count(m));
  if (colors < std::min(base, max_colors) || colors > max_colors) {
    throw InfeasibleParams("colors must lie in [" + std::to_string(std::min(base, max_colors)) + ", " +
                           std::to_string(max_colors) + "] for K_" + std::to_string(m));
  }
  // Circle method on the even order `me`; vertex me-1 is the hub.
  const int me = m % 2 == 0 ? m : m + 1;
  std::vector<Color> col(static_cast<std::size_t>(me) * me, -1);
  auto set = [&](int u, int v, Color c) { col[u * me + v] = col[v * me + u] = c; };
  for (int round = 0; round < me - 1; ++round) {
    set(round, me - 1, round);
    for (int j = 1; j < me / 2; ++j) set((round + j) % (me - 1), (round - j + me - 1) % (me - 1), round);
  }

  Rng rng(seed);
  const std::vector<int> perm = rng.permutation(m);
  // Edge (u, v) of the output takes the color of (perm[u], perm[v]).
  std::vector<Color> edge(edge_count(m));
  std::vector<int> class_size(static_cast<std::size_t>(max_colors) + me, 0);
  std::size_t k = 0;
  for (int u = 0; u < m; ++u)
    for (int v = u + 1; v < m; ++v, ++k) {
      edge[k] = col[perm[u] * me + perm[v]];
      ++class_size[edge[k]];
    }
  int used = 0;
  for (int c = 0; c < me; ++c) used += class_size[c] > 0 ? 1 : 0;
  Color fresh = me;
  std::vector<std::size_t> candidates(edge.size());
  std::iota(candidates.begin(), candidates.end(), 0);
  while (used < colors) {
    const int pick = rng.below(static_cast<int>(candidates.size()));
    const std::size_t e = candidates[pick];
    candidates[pick] = candidates.back();
    candidates.pop_back();
    if (class_size[edge[e]] < 2) continue;
    --class_size[edge[e]];
    edge[e] = fresh;
    class_size[fresh] = 1;
    ++fresh;
    ++used;
  }
  return EdgeColoredGraph::from_edge_colors(m, std::move(edge));
}

HuntResult hunt_transversal_free(const Square& start, std::uint64_t seed, int iterations) {
  const int n = start.order();
  if (find_transversal_exact(start).outcome == Outcome::Found) {
    throw PreconditionViolated("hunt needs a transversal-free start square");
  }
  Rng rng(seed);
  HuntResult res{start, 0, 0};
  Square cur = start;
  for (int it = 0; it < iterations; ++it, ++res.iterations) {
    const SymbolStats st = compute_stats(cur);
    std::vector<CellRef> reps;
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        if (st.multiplicity[cur.id(r, c)] >= 2) reps.push_back({r, c});
    if (reps.empty()) break;
    const CellRef cell = reps[rng.below(static_cast<int>(reps.size()))];

    std::vector<Symbol> labels(cur.labels().begin(), cur.labels().end());
    const Symbol max_label = *std::max_element(labels.begin(), labels.end());
    Symbol next;
    if (rng.below(3) == 0) {
      next = max_label + 1;
    } else {
      next = cur.label(rng.below(cur.symbol_count()));
    }
    labels[static_cast<std::size_t>(cell.row) * n + cell.col] = next;
    try {
      Square cand = Square::from_labels(n, std::move(labels));
      if (cand.symbol_count() < cur.symbol_count()) continue;
      if (find_transversal_exact(cand).outcome == Outcome::Found) continue;
      cur = std::move(cand);
      ++res.accepted;
      if (cur.symbol_count() > res.best.symbol_count()) res.best = cur;
    } catch (const ValidationError&) {
      continue;
    }
  }
  return res;
}

Square antiramsey_reduce(const EdgeColoredGraph& g) {
  const int m = g.vertex_count();
  Color fresh = 0;
  for (int u = 0; u < m; ++u)
    for (int v = u + 1; v < m; ++v) fresh = std::max(fresh, g.color(u, v) + 1);
  std::vector<Symbol> labels(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) labels[static_cast<std::size_t>(i) * m + j] = i == j ? fresh : g.color(i, j);
  Square sq = Square::from_labels(m, std::move(labels));
  GLS_ENSURE(sq.symbol_count() == g.color_count() + 1, "reduction adds exactly one symbol");
  return sq;
}

TwoFactorExtraction extract_two_factor(std::span<const CellRef> transversal, const EdgeColoredGraph& g) {
  const int m = g.vertex_count();
  const Square reduced = antiramsey_reduce(g);
  if (!is_transversal(reduced, transversal)) {
    throw PreconditionViolated("cells are not a transversal of the reduced square");
  }
  TwoFactorExtraction out;
  out.degree.assign(m, 0);
  std::set<Edge> seen;
  for (const CellRef& c : transversal) {
    if (c.row == c.col) {
      GLS_ENSURE(!out.omitted, "a rainbow transversal uses at most one diagonal cell");
      out.omitted = c.row;
      continue;
    }
    Edge e{std::min(c.row, c.col), std::max(c.row, c.col)};
    if (!seen.insert(e).second) {
      throw DegenerateExtraction("cells (" + std::to_string(c.row + 1) + "," + std::to_string(c.col + 1) + ") and (" +
                                 std::to_string(c.col + 1) + "," + std::to_string(c.row + 1) +
                                 ") map to the same edge");
    }
    out.edges.push_back(e);
    out.colors.push_back(g.color(e.u, e.v));
    ++out.degree[e.u];
    ++out.degree[e.v];
  }
  std::sort(out.edges.begin(), out.edges.end());
  out.colors.clear();
  for (const Edge& e : out.edges) out.colors.push_back(g.color(e.u, e.v));
  std::vector<Color> cs = out.colors;
  std::sort(cs.begin(), cs.end());
  out.colors_distinct = std::adjacent_find(cs.begin(), cs.end()) == cs.end();
  out.all_degree_two = true;
  for (int v = 0; v < m; ++v) {
    if (out.degree[v] == 0) continue;
    ++out.vertices_covered;
    if (out.degree[v] != 2) out.all_degree_two = false;
  }
  return out;
}

namespace {

class FactorSearch {
 public:
  FactorSearch(const EdgeColoredGraph& g, std::uint64_t max_nodes)
      : g_(g), m_(g.vertex_count()), max_nodes_(max_nodes), covered_(m_, 0), color_used_(g.color_count(), 0) {}

  bool perfect_matching() {
    tick();
    int v = 0;
    while (v < m_ && covered_[v]) ++v;
    if (v == m_) return true;
    covered_[v] = 1;
    for (int w = v + 1; w < m_; ++w) {
      if (covered_[w] || color_used_[g_.color_id(v, w)]) continue;
      take(v, w);
      if (perfect_matching()) return true;
      drop(v, w);
    }
    covered_[v] = 0;
    return false;
  }

  bool two_factor(int skips_left) {
    tick();
    int v = 0;
    while (v < m_ && covered_[v]) ++v;
    if (v == m_) return true;
    covered_[v] = 1;
    if (extend(v, v, 1, skips_left)) return true;
    // Leave v out of the factor.
    if (skips_left > 0 && two_factor(skips_left - 1)) return true;
    covered_[v] = 0;
    return false;
  }

  const std::vector<Edge>& edges() const { return edges_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  void tick() {
    if (++nodes_ > max_nodes_ && max_nodes_ != 0) {
      throw ResourceLimit("rainbow factor search exceeded " + std::to_string(max_nodes_) + " nodes");
    }
  }

  void take(int u, int v) {
    covered_[v] = 1;
    color_used_[g_.color_id(u, v)] = 1;
    edges_.push_back({std::min(u, v), std::max(u, v)});
  }

  void drop(int u, int v) {
    covered_[v] = 0;
    color_used_[g_.color_id(u, v)] = 0;
    edges_.pop_back();
  }

  bool extend(int start, int cur, int len, int skips_left) {
    tick();
    if (len >= 3 && !color_used_[g_.color_id(cur, start)]) {
      color_used_[g_.color_id(cur, start)] = 1;
      edges_.push_back({std::min(cur, start), std::max(cur, start)});
      if (two_factor(skips_left)) return true;
      edges_.pop_back();
      color_used_[g_.color_id(cur, start)] = 0;
    }
    for (int w = start + 1; w < m_; ++w) {
      if (covered_[w] || color_used_[g_.color_id(cur, w)]) continue;
      take(cur, w);
      if (extend(start, w, len + 1, skips_left)) return true;
      drop(cur, w);
    }
    return false;
  }

  const EdgeColoredGraph& g_;
  int m_;
  std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
  std::vector<char> covered_;
  std::vector<char> color_used_;
  std::vector<Edge> edges_;
};

}  // namespace

RainbowFactorResult rainbow_factor_search(const EdgeColoredGraph& g, int factor_degree, int min_vertices,
                                          std::uint64_t max_nodes) {
  const int m = g.vertex_count();
  FactorSearch search(g, max_nodes);
  RainbowFactorResult res;
  if (factor_degree == 1) {
    if (m % 2 != 0) throw OddVertices("a 1-factor needs an even number of vertices; m=" + std::to_string(m));
    res.found = search.perfect_matching();
  } else if (factor_degree == 2) {
    if (min_vertices > m) throw InfeasibleParams("min_vertices exceeds the vertex count");
    res.found = search.two_factor(std::max(0, m - std::max(min_vertices, 0)));
  } else {
    throw InfeasibleParams("factor degree must be 1 or 2");
  }
  if (res.found) {
    res.edges = search.edges();
    std::sort(res.edges.begin(), res.edges.end());
  }
  res.nodes = search.nodes();
  return res;
}

}  // namespace gls
