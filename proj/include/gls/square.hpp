#pragma once

// Generalized Latin squares: an n x n array in which every symbol occurs at
// most once per row and at most once per column.
//
// Cells are addressed 0-based internally. Everything user facing (text
// output, JSON, error messages) is 1-based.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gls {

using Symbol = std::int64_t;

struct CellRef {
  int row = 0;
  int col = 0;

  auto operator<=>(const CellRef&) const = default;
};

class Square {
 public:
  // Validates and builds. Throws ValidationError.
  static Square from_rows(const std::vector<std::vector<Symbol>>& rows);
  // Row-major labels of an n x n grid. Throws ValidationError.
  static Square from_labels(int n, std::vector<Symbol> labels);

  int order() const { return n_; }
  int symbol_count() const { return static_cast<int>(id_labels_.size()); }

  Symbol at(int row, int col) const { return labels_[index(row, col)]; }
  Symbol at(CellRef c) const { return at(c.row, c.col); }

  // Dense symbol id, assigned by first occurrence in row-major order.
  int id(int row, int col) const { return ids_[index(row, col)]; }
  int id(CellRef c) const { return id(c.row, c.col); }
  Symbol label(int symbol_id) const { return id_labels_[symbol_id]; }

  std::span<const int> ids() const { return ids_; }
  std::span<const Symbol> labels() const { return labels_; }

  Square transposed() const;
  // The submatrix on the given rows and columns, kept in the given order.
  Square minor(std::span<const int> rows, std::span<const int> cols) const;
  // Same square with labels replaced by dense ids.
  Square renumbered() const;

  std::vector<std::vector<Symbol>> rows() const;

  bool contains(CellRef c) const { return c.row >= 0 && c.row < n_ && c.col >= 0 && c.col < n_; }

  // Label-exact equality.
  bool operator==(const Square& other) const { return n_ == other.n_ && labels_ == other.labels_; }

 private:
  Square() = default;
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(col);
  }

  int n_ = 0;
  std::vector<Symbol> labels_;
  std::vector<int> ids_;
  std::vector<Symbol> id_labels_;
};

// Throws ValidationError (NotSquare, NegativeSymbol, RowDuplicate, ColDuplicate).
Square validate_square(const std::vector<std::vector<Symbol>>& grid);

// Occurrence statistics. Indexed by dense symbol id where applicable.
struct SymbolStats {
  int order = 0;
  int symbol_count = 0;
  std::vector<int> multiplicity;     // by symbol id
  std::vector<long> row_weight;      // (sum_t c(a_it)) - n
  std::vector<long> col_weight;      // (sum_t c(a_tj)) - n
  std::vector<int> singletons;       // ids with multiplicity 1, ascending
  std::vector<int> repetitions;      // ids with multiplicity >= 2, ascending
  std::vector<int> histogram;        // histogram[k] = number of symbols with multiplicity k, k in 0..n
  double color_density = 0.0;        // symbol_count / n^2

  int occurrences(const Square& sq, CellRef c) const { return multiplicity[sq.id(c)]; }
  bool is_singleton(const Square& sq, CellRef c) const { return occurrences(sq, c) == 1; }
  int max_multiplicity() const;
};

SymbolStats compute_stats(const Square& square);

enum class Violation { None, RowRepeated, ColRepeated, SymbolRepeated };

struct TransversalCheck {
  bool ok = true;
  Violation violation = Violation::None;
  // The offending pair, in input order, when !ok.
  CellRef first{};
  CellRef second{};

  explicit operator bool() const { return ok; }
};

// True iff rows, columns and symbols are pairwise distinct. Reports the first
// violated condition (scanning pairs in input order). Throws OutOfRange.
TransversalCheck verify_partial_transversal(const Square& square, std::span<const CellRef> cells);

// verify_partial_transversal plus size == n.
bool is_transversal(const Square& square, std::span<const CellRef> cells);

std::string to_string(Violation v);

// Z_n Cayley table, a_ij = (i + j) mod n.
Square cyclic_square(int n);

}  // namespace gls
