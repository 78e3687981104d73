#pragma once

// Bipartite matching on square 0/1 matrices, with the all-1 diagonal versus
// all-0 submatrix duality (rows are one side, columns the other).

#include <cstdint>
#include <variant>
#include <vector>

#include "gls/square.hpp"

namespace gls {

class BitMatrix {
 public:
  explicit BitMatrix(int n);
  // rows[i][j] != 0 sets bit (i, j). Throws ValidationError(NotSquare).
  static BitMatrix from_rows(const std::vector<std::vector<int>>& rows);

  int order() const { return n_; }
  bool get(int r, int c) const { return (bits_[word(r, c)] >> (c & 63)) & 1u; }
  void set(int r, int c, bool value = true) {
    const std::uint64_t mask = std::uint64_t{1} << (c & 63);
    if (value) {
      bits_[word(r, c)] |= mask;
    } else {
      bits_[word(r, c)] &= ~mask;
    }
  }
  int row_count(int r) const;
  int col_count(int c) const;

  bool operator==(const BitMatrix&) const = default;

 private:
  std::size_t word(int r, int c) const {
    return static_cast<std::size_t>(r) * words_per_row_ + static_cast<std::size_t>(c >> 6);
  }

  int n_;
  std::size_t words_per_row_;
  std::vector<std::uint64_t> bits_;
};

struct MatchingResult {
  std::vector<CellRef> cells;  // sorted by row
  std::vector<int> row_mate;   // -1 when unmatched
  std::vector<int> col_mate;
  // Minimum vertex cover; |cover_rows| + |cover_cols| == cells.size().
  std::vector<int> cover_rows;
  std::vector<int> cover_cols;

  int size() const { return static_cast<int>(cells.size()); }
};

// Maximum matching (Hopcroft-Karp, rows scanned in increasing order) and the
// Konig cover obtained from alternating reachability out of free rows.
MatchingResult max_matching(const BitMatrix& m);

struct AllOneDiagonal {
  std::vector<CellRef> cells;  // one per row, sorted by row
};

struct ZeroSubmatrixCertificate {
  std::vector<int> rows;
  std::vector<int> cols;

  // Every cell in rows x cols is 0 and |rows| + |cols| >= n + 1.
  bool verify(const BitMatrix& m) const;
};

using DiagonalOrBlocker = std::variant<AllOneDiagonal, ZeroSubmatrixCertificate>;

// Exactly one alternative holds. The blocker is (uncovered rows) x
// (uncovered columns) of the Konig cover.
DiagonalOrBlocker diagonal_or_blocker(const BitMatrix& m);

// Perfect matching of a d-regular bipartite graph given as its biadjacency
// matrix. Throws NotRegular when row and column degrees are not all equal to
// some d >= 1.
std::vector<CellRef> regular_bipartite_pm(const BitMatrix& adjacency);

}  // namespace gls
