#pragma once

// Independent reference implementations used as test oracles. Deliberately
// naive: permutations via std::next_permutation, subsets via bitmasks.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "gls/matching.hpp"
#include "gls/rng.hpp"
#include "gls/square.hpp"

namespace oracle {

// Number of transversals by trying all n! diagonals.
inline std::uint64_t count_transversals(const gls::Square& sq) {
  const int n = sq.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t count = 0;
  do {
    std::set<int> syms;
    for (int r = 0; r < n; ++r) syms.insert(sq.id(r, perm[r]));
    if (static_cast<int>(syms.size()) == n) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

inline bool has_transversal(const gls::Square& sq) { return count_transversals(sq) > 0; }

// Naive partial transversal check over ids.
inline bool is_partial_transversal(const gls::Square& sq, const std::vector<gls::CellRef>& cells) {
  std::set<int> rows, cols, syms;
  for (const auto& c : cells) {
    if (!rows.insert(c.row).second || !cols.insert(c.col).second || !syms.insert(sq.id(c)).second) return false;
  }
  return true;
}

// Maximum matching size by trying all permutations of a padded assignment:
// for n <= 8 enumerate all n! permutations and count 1-cells hit.
inline int matching_size(const gls::BitMatrix& m) {
  const int n = m.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  int best = 0;
  do {
    int hit = 0;
    for (int r = 0; r < n; ++r) hit += m.get(r, perm[r]) ? 1 : 0;
    best = std::max(best, hit);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// max(0, max over all-zero x-by-y submatrices of x + y - n), all row subsets.
inline int deficiency(const gls::BitMatrix& m) {
  const int n = m.order();
  int best = 0;
  for (std::uint32_t rows = 0; rows < (1u << n); ++rows) {
    int x = std::popcount(rows), y = 0;
    for (int c = 0; c < n; ++c) {
      bool zero = true;
      for (int r = 0; r < n && zero; ++r)
        if ((rows >> r) & 1u) zero = !m.get(r, c);
      if (zero) ++y;
    }
    best = std::max(best, x + y - n);
  }
  return best;
}

inline gls::BitMatrix random_matrix(int n, gls::Rng& rng, int density_percent) {
  gls::BitMatrix m(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (rng.below(100) < density_percent) m.set(r, c);
  return m;
}

// Random square by independent means: random row/col/symbol permutation of
// Z_n, then a random set of cells recolored with fresh symbols.
inline gls::Square random_square(int n, gls::Rng& rng) {
  const std::vector<int> pr = rng.permutation(n), pc = rng.permutation(n), ps = rng.permutation(n);
  std::vector<gls::Symbol> labels(static_cast<std::size_t>(n) * n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) labels[pr[r] * n + pc[c]] = ps[(r + c) % n];
  const int fresh_cells = rng.below(n * n + 1);
  gls::Symbol next = n;
  for (int i = 0; i < fresh_cells; ++i) labels[rng.below(n * n)] = next++;
  return gls::Square::from_labels(n, std::move(labels));
}

// Applies a random element of the symmetry group.
inline gls::Square random_symmetry(const gls::Square& sq, gls::Rng& rng) {
  const int n = sq.order();
  const std::vector<int> pr = rng.permutation(n), pc = rng.permutation(n);
  const bool transpose = rng.coin();
  std::vector<gls::Symbol> relabel(sq.symbol_count());
  std::vector<int> p = rng.permutation(sq.symbol_count());
  for (int s = 0; s < sq.symbol_count(); ++s) relabel[s] = 3 * p[s] + 7;
  std::vector<gls::Symbol> labels(static_cast<std::size_t>(n) * n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const int rr = transpose ? pc[c] : pr[r], cc = transpose ? pr[r] : pc[c];
      labels[rr * n + cc] = relabel[sq.id(r, c)];
    }
  return gls::Square::from_labels(n, std::move(labels));
}

// All labeled squares of order n with symbols numbered by first occurrence.
template <typename F>
void for_each_square(int n, F&& f) {
  std::vector<gls::Symbol> cells(static_cast<std::size_t>(n) * n, -1);
  auto rec = [&](auto&& self, int i, int k) -> void {
    if (i == n * n) {
      f(gls::Square::from_labels(n, cells));
      return;
    }
    const int r = i / n, c = i % n;
    for (int s = 0; s <= k; ++s) {
      bool ok = true;
      for (int t = 0; t < c && ok; ++t) ok = cells[r * n + t] != s;
      for (int t = 0; t < r && ok; ++t) ok = cells[t * n + c] != s;
      if (!ok) continue;
      cells[i] = s;
      self(self, i + 1, s == k ? k + 1 : k);
    }
    cells[i] = -1;
  };
  rec(rec, 0, 0);
}

}  // namespace oracle
