#pragma once

// Transversal finders: exact backtracking, Stein's greedy for few rows, the
// covering of all-repetition lines, the constructive 0.75 n^2 induction, the
// multiplicity 1-or-n split, and decomposition into n disjoint transversals.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gls/square.hpp"

namespace gls {

enum class Outcome { Found, NotFound, Infeasible };

std::string to_string(Outcome o);

struct SolveReport {
  Outcome outcome = Outcome::NotFound;
  std::string method;
  std::vector<CellRef> cells;  // the transversal when Found, sorted by row
  std::uint64_t node_count = 0;
  double elapsed_ms = 0.0;

  // Exact solver, count/all modes.
  std::optional<std::uint64_t> count;
  std::vector<std::vector<CellRef>> all;

  // Constructive solver: number of times the singleton-deletion step (the
  // order-reducing branch of the induction) was taken, and how often the
  // residual square still had a line of repetitions.
  int reductions = 0;
  int residual_full_lines = 0;
};

enum class ExactMode { First, Count, All };

// Row-by-row backtracking, fail-first row order (fewest admissible cells,
// ties to the lowest index), columns ascending. max_nodes == 0 means no
// limit; otherwise throws ResourceLimit when exceeded.
SolveReport find_transversal_exact(const Square& square, ExactMode mode = ExactMode::First,
                                   std::uint64_t max_nodes = 0);

// One cell in each requested row, pairwise distinct columns and symbols.
// Requires 2 * rows.size() <= n + 1 (PreconditionViolated).
std::vector<CellRef> greedy_partial_transversal(const Square& square, std::span<const int> rows);

// Lines of the square consisting only of repetitions, in the orientation
// where full_cols.size() <= full_rows.size().
struct CoverPlan {
  std::vector<int> full_rows;  // p
  std::vector<int> full_cols;  // q
  char case_tag = 'a';         // 'a' if 2q <= p, else 'b'
  bool transposed = false;     // lines refer to the transposed square

  int p() const { return static_cast<int>(full_rows.size()); }
  int q() const { return static_cast<int>(full_cols.size()); }
};

CoverPlan make_cover_plan(const Square& square, const SymbolStats& stats);
CoverPlan make_cover_plan(const Square& square);

// Partial transversal touching every line of the plan, returned in the
// square's own orientation. Size <= p in case (a), <= ceil(p/2) + q in case
// (b). Requires q <= p and 2p <= n + 1.
std::vector<CellRef> cover_full_lines(const Square& square, const CoverPlan& plan);

// Requires symbol_count >= ceil(0.75 n^2).
SolveReport find_transversal_constructive(const Square& square);

// Every multiplicity is 1 or n and both occur.
std::vector<CellRef> rainbow_pm_multiplicity_split(const Square& square);

struct Decomposition {
  bool feasible = false;
  std::vector<std::vector<CellRef>> transversals;  // n of them when feasible
  int max_disjoint = 0;                            // largest packing found
  std::uint64_t transversal_count = 0;
  std::uint64_t node_count = 0;
};

// Exact-cover search over the square's transversals. Supports n <= 8.
// When the decomposition is infeasible and compute_max is set, a second
// search determines the maximum number of pairwise disjoint transversals.
Decomposition decompose_into_transversals(const Square& square, bool compute_max = true,
                                          std::uint64_t max_nodes = 0);

}  // namespace gls
