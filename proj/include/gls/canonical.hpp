#pragma once

// Canonical forms and isomorph-free enumeration of generalized Latin squares
// under row permutations, column permutations, symbol renaming and
// transposition.
//
// The canonical form is the arrangement whose row-major sequence, after
// renumbering symbols by first occurrence, is lexicographically smallest.

#include <cstdint>
#include <functional>
#include <vector>

#include "gls/square.hpp"

namespace gls {

// Labels of the result are the dense ids 0..k-1. Idempotent.
Square canonical_form(const Square& square);

// True iff the square's own id sequence is its canonical sequence.
bool is_canonical(const Square& square);

// Monotone pruning hook for enumeration: called after each cell placement
// with the row-major ids of the filled prefix and current multiplicities.
// Returning false discards every completion of that prefix, so the predicate
// must be false for a prefix only if it is false for all its completions.
using PrefixFilter =
    std::function<bool(int n, const std::vector<int>& ids, int filled, const std::vector<int>& multiplicity)>;

struct EnumerationOptions {
  int order = 1;
  int min_symbols = 1;
  int max_symbols = 1 << 30;
  std::uint64_t max_nodes = 0;  // 0: unlimited
  double timeout_s = 0.0;       // 0: unlimited
  int jobs = 1;
  PrefixFilter filter;
};

struct EnumerationResult {
  std::vector<Square> squares;  // canonical representatives, sorted by id sequence
  bool complete = true;         // false if a node or time budget cut the search
  std::uint64_t nodes = 0;
};

// One representative per symmetry class with symbol_count in range. Output is
// independent of `jobs`. Exhaustive guarantees are practical for n <= 4, and
// for n = 5 with a strong filter or a high min_symbols.
EnumerationResult enumerate_squares(const EnumerationOptions& options);

}  // namespace gls
