#include "gls/square.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "gls/error.hpp"

namespace gls {

namespace {

std::string dup_message(const char* what, int index, Symbol s) {
  return std::string(what) + (what[0] == 'R' ? " row " : " col ") + std::to_string(index + 1) +
         " symbol " + std::to_string(s);
}

}  // namespace

Square Square::from_labels(int n, std::vector<Symbol> labels) {
  if (n < 1 || labels.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    throw ValidationError(ValidationError::Kind::NotSquare, 0, 0, "NotSquare");
  }
  for (std::size_t k = 0; k < labels.size(); ++k) {
    if (labels[k] < 0) {
      throw ValidationError(ValidationError::Kind::NegativeSymbol, static_cast<int>(k) / n, labels[k],
                            "NegativeSymbol row " + std::to_string(k / n + 1) + " symbol " +
                                std::to_string(labels[k]));
    }
  }
  // Rows first, then columns, each in index order, so the reported
  // duplicate is deterministic.
  std::unordered_set<Symbol> seen;
  for (int r = 0; r < n; ++r) {
    seen.clear();
    for (int c = 0; c < n; ++c) {
      Symbol s = labels[static_cast<std::size_t>(r) * n + c];
      if (!seen.insert(s).second) {
        throw ValidationError(ValidationError::Kind::RowDuplicate, r, s, dup_message("RowDuplicate", r, s));
      }
    }
  }
  for (int c = 0; c < n; ++c) {
    seen.clear();
    for (int r = 0; r < n; ++r) {
      Symbol s = labels[static_cast<std::size_t>(r) * n + c];
      if (!seen.insert(s).second) {
        throw ValidationError(ValidationError::Kind::ColDuplicate, c, s, dup_message("ColDuplicate", c, s));
      }
    }
  }

  Square sq;
  sq.n_ = n;
  sq.labels_ = std::move(labels);
  sq.ids_.resize(sq.labels_.size());
  std::unordered_map<Symbol, int> to_id;
  for (std::size_t k = 0; k < sq.labels_.size(); ++k) {
    auto [it, fresh] = to_id.try_emplace(sq.labels_[k], static_cast<int>(sq.id_labels_.size()));
    if (fresh) sq.id_labels_.push_back(sq.labels_[k]);
    sq.ids_[k] = it->second;
  }
  return sq;
}

Square Square::from_rows(const std::vector<std::vector<Symbol>>& rows) {
  const int n = static_cast<int>(rows.size());
  if (n == 0) throw ValidationError(ValidationError::Kind::NotSquare, 0, 0, "NotSquare");
  std::vector<Symbol> labels;
  labels.reserve(static_cast<std::size_t>(n) * n);
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(rows[r].size()) != n) {
      throw ValidationError(ValidationError::Kind::NotSquare, r, 0,
                            "NotSquare row " + std::to_string(r + 1) + " has " +
                                std::to_string(rows[r].size()) + " entries, expected " + std::to_string(n));
    }
    labels.insert(labels.end(), rows[r].begin(), rows[r].end());
  }
  return from_labels(n, std::move(labels));
}

Square validate_square(const std::vector<std::vector<Symbol>>& grid) { return Square::from_rows(grid); }

Square Square::transposed() const {
  std::vector<Symbol> t(labels_.size());
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c) t[index(c, r)] = at(r, c);
  return from_labels(n_, std::move(t));
}

Square Square::minor(std::span<const int> rows, std::span<const int> cols) const {
  if (rows.size() != cols.size() || rows.empty()) {
    throw ValidationError(ValidationError::Kind::NotSquare, 0, 0, "NotSquare minor");
  }
  std::vector<Symbol> m;
  m.reserve(rows.size() * cols.size());
  for (int r : rows)
    for (int c : cols) m.push_back(at(r, c));
  return from_labels(static_cast<int>(rows.size()), std::move(m));
}

Square Square::renumbered() const {
  Square sq = *this;
  for (std::size_t k = 0; k < sq.labels_.size(); ++k) sq.labels_[k] = sq.ids_[k];
  for (std::size_t k = 0; k < sq.id_labels_.size(); ++k) sq.id_labels_[k] = static_cast<Symbol>(k);
  return sq;
}

std::vector<std::vector<Symbol>> Square::rows() const {
  std::vector<std::vector<Symbol>> out(n_);
  for (int r = 0; r < n_; ++r) out[r].assign(labels_.begin() + r * n_, labels_.begin() + (r + 1) * n_);
  return out;
}

int SymbolStats::max_multiplicity() const {
  return multiplicity.empty() ? 0 : *std::max_element(multiplicity.begin(), multiplicity.end());
}

SymbolStats compute_stats(const Square& square) {
  SymbolStats st;
  const int n = square.order();
  st.order = n;
  st.symbol_count = square.symbol_count();
  st.multiplicity.assign(st.symbol_count, 0);
  for (int id : square.ids()) ++st.multiplicity[id];

  st.row_weight.assign(n, -static_cast<long>(n));
  st.col_weight.assign(n, -static_cast<long>(n));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const int m = st.multiplicity[square.id(r, c)];
      st.row_weight[r] += m;
      st.col_weight[c] += m;
    }
  }
  st.histogram.assign(n + 1, 0);
  for (int id = 0; id < st.symbol_count; ++id) {
    const int m = st.multiplicity[id];
    ++st.histogram[m];
    (m == 1 ? st.singletons : st.repetitions).push_back(id);
  }
  st.color_density = static_cast<double>(st.symbol_count) / (static_cast<double>(n) * n);
  return st;
}

TransversalCheck verify_partial_transversal(const Square& square, std::span<const CellRef> cells) {
  for (const CellRef& c : cells) {
    if (!square.contains(c)) {
      throw OutOfRange("cell (" + std::to_string(c.row + 1) + "," + std::to_string(c.col + 1) +
                       ") outside order-" + std::to_string(square.order()) + " square");
    }
  }
  for (std::size_t a = 0; a < cells.size(); ++a) {
    for (std::size_t b = a + 1; b < cells.size(); ++b) {
      Violation v = Violation::None;
      if (cells[a].row == cells[b].row) {
        v = Violation::RowRepeated;
      } else if (cells[a].col == cells[b].col) {
        v = Violation::ColRepeated;
      } else if (square.id(cells[a]) == square.id(cells[b])) {
        v = Violation::SymbolRepeated;
      }
      if (v != Violation::None) return {false, v, cells[a], cells[b]};
    }
  }
  return {};
}

bool is_transversal(const Square& square, std::span<const CellRef> cells) {
  return static_cast<int>(cells.size()) == square.order() && verify_partial_transversal(square, cells).ok;
}

std::string to_string(Violation v) {
  switch (v) {
    case Violation::None: return "none";
    case Violation::RowRepeated: return "row repeated";
    case Violation::ColRepeated: return "column repeated";
    case Violation::SymbolRepeated: return "symbol repeated";
  }
  return "?";
}

Square cyclic_square(int n) {
  if (n < 1) throw InfeasibleParams("cyclic square needs n >= 1");
  std::vector<Symbol> labels(static_cast<std::size_t>(n) * n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) labels[static_cast<std::size_t>(r) * n + c] = (r + c) % n;
  return Square::from_labels(n, std::move(labels));
}

}  // namespace gls
