#pragma once

// Extremal computations and constructions: exact l(n) and l*(n) for small
// orders, generators, the K_n -> K_{n,n} reduction, and rainbow 1-/2-factor
// searches in properly edge-colored complete graphs.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gls/canonical.hpp"
#include "gls/graph.hpp"
#include "gls/rng.hpp"
#include "gls/square.hpp"

namespace gls {

struct LNumberResult {
  int n = 0;
  // max(raw_value, n): the minimum possible symbol count is n.
  int value = 0;
  // 1 + max symbol count of a counterexample, or 1 if there is none.
  int raw_value = 0;
  std::optional<Square> witness;  // counterexample with value - 1 symbols
  bool exhaustive = false;
  std::uint64_t classes = 0;
  std::map<int, std::uint64_t> by_symbol_count;
  std::map<int, std::uint64_t> counterexamples_by_symbol_count;
};

// l(n): counterexample = transversal-free square.
LNumberResult compute_l(int n, EnumerationOptions options = {});
// l*(n): counterexample = square not decomposable into n disjoint transversals.
LNumberResult compute_l_star(int n, EnumerationOptions options = {});

// Uniform-ish random Latin square (Jacobson-Matthews walk on Z_n).
Square random_latin_square(int n, Rng& rng);

// Random Latin square, then repetition cells recolored with fresh symbols
// until exactly k symbols. Requires n <= k <= n^2.
Square random_gls(int n, int k, std::uint64_t seed);

// r random disjoint permutation colors of a Latin square, every other cell a
// singleton. Requires 0 <= r <= n.
Square multiplicity_split_square(int n, int r, std::uint64_t seed);

// Replaces the listed cells with pairwise distinct fresh symbols.
Square recolor_fresh(const Square& square, std::span<const CellRef> cells);

// n-1 cells with pairwise distinct repetition symbols (most frequent symbols
// first, each at its first row-major cell) get fresh symbols. Requires a
// transversal-free input of order >= 3.
Square lstar_gap(const Square& transversal_free);

// Circle-method 1-factorization of K_m (m even: m-1 colors; m odd: m colors,
// via K_{m+1} minus a vertex), vertices shuffled, then random edges moved to
// fresh colors until `colors` colors are used.
EdgeColoredGraph proper_coloring(int m, int colors, std::uint64_t seed);

// Budgeted hill climb over transversal-free squares, maximizing the symbol
// count. Moves recolor a repetition cell with a fresh or existing symbol.
struct HuntResult {
  Square best;
  int iterations = 0;
  int accepted = 0;
};
HuntResult hunt_transversal_free(const Square& start, std::uint64_t seed, int iterations);

// Cell (i, j) gets the color of v_i v_j, the diagonal one fresh symbol.
Square antiramsey_reduce(const EdgeColoredGraph& g);

struct TwoFactorExtraction {
  std::vector<Edge> edges;
  std::vector<Color> colors;       // per edge
  std::optional<int> omitted;      // vertex of the dropped diagonal cell
  std::vector<int> degree;         // per vertex
  int vertices_covered = 0;
  bool colors_distinct = false;
  bool all_degree_two = false;     // every covered vertex has degree 2

  bool ok(int m) const { return colors_distinct && all_degree_two && vertices_covered >= m - 1; }
};

// Maps a rainbow transversal of antiramsey_reduce(g) back to an edge set of
// K_m. Throws PreconditionViolated if `transversal` is not one, and
// DegenerateExtraction if two cells collapse onto the same edge.
TwoFactorExtraction extract_two_factor(std::span<const CellRef> transversal, const EdgeColoredGraph& g);

struct RainbowFactorResult {
  bool found = false;
  std::vector<Edge> edges;
  std::uint64_t nodes = 0;
};

// factor_degree 1: rainbow perfect matching (OddVertices on odd m).
// factor_degree 2: vertex-disjoint cycles, all edge colors distinct, covering
// at least min_vertices vertices. Exhaustive; practical for m <= 12.
RainbowFactorResult rainbow_factor_search(const EdgeColoredGraph& g, int factor_degree, int min_vertices,
                                          std::uint64_t max_nodes = 0);

}  // namespace gls
