#pragma once

// Sufficient conditions for a transversal, evaluated in exact integer
// arithmetic.
//
//  * LLL pair inequality: a transversal exists unless some monochromatic pair
//    a_ij = a_kl has (4/3)^3 (c_i* + c_*j + c_k* + c_*l) > n(n-1), i.e.
//    64 * weight_sum > 27 * n(n-1).
//  * Color count: symbol_count >= (1 - 27/256) n^2 + (27/256) n.
//  * Erdos-Spencer: no symbol occurs more than n/(4e) times.
//  * 0.75 n^2: symbol_count >= ceil(0.75 n^2).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gls/square.hpp"

namespace gls {

struct MonochromaticPair {
  CellRef first;
  CellRef second;  // first < second
  int symbol_id = 0;
  long weight_sum = 0;  // c_i* + c_*j + c_k* + c_*l

  double mean_weight() const { return static_cast<double>(weight_sum) / 4.0; }
  bool operator==(const MonochromaticPair&) const = default;
};

enum class BoundKind { LLL, Corollary, ErdosSpencer, Threshold075, None };

std::string to_string(BoundKind k);

struct ThresholdCheck {
  BoundKind kind;
  bool holds = false;
  std::int64_t lhs = 0;  // scaled integer comparison lhs <= / >= rhs
  std::int64_t rhs = 0;
  std::string relation;  // e.g. "256*k >= 229*n^2 + 27*n"
};

struct BoundCertificate {
  BoundKind kind = BoundKind::None;  // the first condition that certifies
  bool certified = false;
  std::optional<MonochromaticPair> witness;  // LLL: heaviest pair
  std::int64_t lhs = 0;                      // LLL: 64 * weight_sum
  std::int64_t rhs = 0;                      // LLL: 27 * n(n-1)
  std::vector<ThresholdCheck> thresholds;
};

// Heaviest monochromatic pair, ties to the lexicographically smallest
// (first, second). Uses the per-symbol top-2 shortcut; the full O(pairs)
// scan is available for verification.
std::optional<MonochromaticPair> heaviest_pair(const Square& square, const SymbolStats& stats);
std::optional<MonochromaticPair> heaviest_pair_full_scan(const Square& square, const SymbolStats& stats);

// certified iff 64 * weight_sum <= 27 n(n-1) for every monochromatic pair.
// Requires n > 1.
BoundCertificate lll_certificate(const Square& square, bool full_scan = false);

// Corollary, Erdos-Spencer and 0.75 n^2 conditions; certified if any holds.
// Requires n > 1.
BoundCertificate threshold_checks(const Square& square);

// n/(4e) test: certifies when max_mult * 10.8731274 <= n (10.8731274 > 4e,
// so the comparison errs on the side of not certifying).
bool erdos_spencer_holds(int max_multiplicity, int n);

struct LineBound {
  bool is_row = true;
  int index = 0;
  long weight = 0;
  bool lll_side = false;         // 256 * weight <= 27 (n^2 - n)
  long symbols_avoiding = 0;     // sum_k n_k over symbols absent from the line
  long cells_avoiding = 0;       // sum_k k n_k
  long singleton_bound = 0;      // 2 sum_k n_k - sum_k k n_k
  long singletons_avoiding = 0;  // actual count, for comparison
};

struct SingletonReport {
  std::vector<LineBound> lines;  // rows 0..n-1 then columns 0..n-1
  bool all_lll_side = false;     // transversal certified through the LLL pair inequality
  std::optional<long> max_heavy_bound;  // max singleton_bound over lines that are not LLL-side
};

SingletonReport singleton_lower_bound(const Square& square);

// Monotone prefix test for enumeration: false when a partially filled grid
// (first `filled` cells of row-major `ids`, with current multiplicities) can
// no longer be completed into an LLL-certified square. Weights only grow as
// cells are added, so the check is sound for pruning.
bool lll_certifiable_prefix(int n, const std::vector<int>& ids, int filled, const std::vector<int>& multiplicity);

}  // namespace gls
