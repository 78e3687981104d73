#include <algorithm>
#include <chrono>
#include <numeric>

#include "gls/error.hpp"
#include "gls/matching.hpp"
#include "gls/solvers.hpp"

namespace gls {

namespace {

// Bounded backtracking over a fixed sequence of "slots". Keeps the used
// row/column/symbol sets for the partial transversal built so far.
class PartialBuilder {
 public:
  explicit PartialBuilder(const Square& sq)
      : sq_(sq), row_used_(sq.order(), 0), col_used_(sq.order(), 0), sym_used_(sq.symbol_count(), 0) {}

  bool free(int r, int c) const { return !row_used_[r] && !col_used_[c] && !sym_used_[sq_.id(r, c)]; }

  void push(int r, int c) {
    row_used_[r] = col_used_[c] = 1;
    sym_used_[sq_.id(r, c)] = 1;
    cells_.push_back({r, c});
  }

  void pop() {
    CellRef c = cells_.back();
    cells_.pop_back();
    row_used_[c.row] = col_used_[c.col] = 0;
    sym_used_[sq_.id(c)] = 0;
  }

  bool row_used(int r) const { return row_used_[r] != 0; }
  bool col_used(int c) const { return col_used_[c] != 0; }
  const std::vector<CellRef>& cells() const { return cells_; }

 private:
  const Square& sq_;
  std::vector<char> row_used_;
  std::vector<char> col_used_;
  std::vector<char> sym_used_;
  std::vector<CellRef> cells_;
};

constexpr std::uint64_t kCoverBudget = 5'000'000;

class CoverSearch {
 public:
  CoverSearch(const Square& sq, const CoverPlan& plan) : sq_(sq), plan_(plan), pb_(sq) {
    intersection_ = std::min(plan.q(), plan.p() / 2);
  }

  bool run() { return pick_intersection(0, 0); }
  const std::vector<CellRef>& cells() const { return pb_.cells(); }
  std::uint64_t nodes() const { return nodes_; }

 private:
  void tick() {
    if (++nodes_ > kCoverBudget) throw AssertionFailure("full-line cover search exhausted its node budget");
  }

  // Phase 1: `intersection_` cells inside full_rows x full_cols, rows taken
  // in increasing plan order.
  bool pick_intersection(int slot, std::size_t next_row) {
    tick();
    if (slot == intersection_) return cover_rows(0);
    for (std::size_t i = next_row; i < plan_.full_rows.size(); ++i) {
      const int r = plan_.full_rows[i];
      for (int c : plan_.full_cols) {
        if (!pb_.free(r, c)) continue;
        pb_.push(r, c);
        if (pick_intersection(slot + 1, i + 1)) return true;
        pb_.pop();
      }
    }
    return false;
  }

  // Phase 2: remaining full rows. Uncovered full columns are tried first so
  // one cell can take care of two lines.
  bool cover_rows(std::size_t i) {
    tick();
    while (i < plan_.full_rows.size() && pb_.row_used(plan_.full_rows[i])) ++i;
    if (i == plan_.full_rows.size()) return cover_cols(0);
    const int r = plan_.full_rows[i];
    const int n = sq_.order();
    std::vector<int> order;
    for (int c : plan_.full_cols)
      if (!pb_.col_used(c)) order.push_back(c);
    for (int c = 0; c < n; ++c)
      if (std::find(plan_.full_cols.begin(), plan_.full_cols.end(), c) == plan_.full_cols.end()) order.push_back(c);
    for (int c : order) {
      if (!pb_.free(r, c)) continue;
      pb_.push(r, c);
      if (cover_rows(i + 1)) return true;
      pb_.pop();
    }
    return false;
  }

  // Phase 3: remaining full columns.
  bool cover_cols(std::size_t j) {
    tick();
    while (j < plan_.full_cols.size() && pb_.col_used(plan_.full_cols[j])) ++j;
    if (j == plan_.full_cols.size()) return true;
    const int c = plan_.full_cols[j];
    for (int r = 0; r < sq_.order(); ++r) {
      if (!pb_.free(r, c)) continue;
      pb_.push(r, c);
      if (cover_cols(j + 1)) return true;
      pb_.pop();
    }
    return false;
  }

  const Square& sq_;
  const CoverPlan& plan_;
  PartialBuilder pb_;
  int intersection_ = 0;
  std::uint64_t nodes_ = 0;
};

std::vector<CellRef> sorted(std::vector<CellRef> cells) {
  std::sort(cells.begin(), cells.end());
  return cells;
}

}  // namespace

std::vector<CellRef> greedy_partial_transversal(const Square& square, std::span<const int> rows) {
  const int n = square.order();
  const int r = static_cast<int>(rows.size());
  if (2 * r > n + 1) {
    throw PreconditionViolated("greedy partial transversal needs r <= (n+1)/2; got r=" + std::to_string(r) +
                               ", n=" + std::to_string(n));
  }
  std::vector<int> want(rows.begin(), rows.end());
  std::sort(want.begin(), want.end());
  for (int row : want) {
    if (row < 0 || row >= n) throw OutOfRange("row " + std::to_string(row + 1) + " out of range");
  }
  if (std::adjacent_find(want.begin(), want.end()) != want.end()) {
    throw PreconditionViolated("requested rows must be distinct");
  }

  PartialBuilder pb(square);
  // Greedy, lowest column first; the backtracking is a fallback only, since
  // each new row keeps at least n - 2(r-1) >= 1 admissible cells.
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == want.size()) return true;
    for (int c = 0; c < n; ++c) {
      if (!pb.free(want[i], c)) continue;
      pb.push(want[i], c);
      if (self(self, i + 1)) return true;
      pb.pop();
    }
    return false;
  };
  GLS_ENSURE(rec(rec, 0), "partial transversal on at most (n+1)/2 rows");
  return pb.cells();
}

CoverPlan make_cover_plan(const Square& square, const SymbolStats& stats) {
  const int n = square.order();
  std::vector<int> full_rows, full_cols;
  for (int r = 0; r < n; ++r) {
    bool full = true;
    for (int c = 0; c < n && full; ++c) full = stats.multiplicity[square.id(r, c)] >= 2;
    if (full) full_rows.push_back(r);
  }
  for (int c = 0; c < n; ++c) {
    bool full = true;
    for (int r = 0; r < n && full; ++r) full = stats.multiplicity[square.id(r, c)] >= 2;
    if (full) full_cols.push_back(c);
  }
  CoverPlan plan;
  if (full_cols.size() > full_rows.size()) {
    plan.transposed = true;
    std::swap(full_rows, full_cols);
  }
  plan.full_rows = std::move(full_rows);
  plan.full_cols = std::move(full_cols);
  plan.case_tag = 2 * plan.q() <= plan.p() ? 'a' : 'b';
  return plan;
}

CoverPlan make_cover_plan(const Square& square) { return make_cover_plan(square, compute_stats(square)); }

std::vector<CellRef> cover_full_lines(const Square& square, const CoverPlan& plan) {
  const int n = square.order();
  const int p = plan.p();
  const int q = plan.q();
  if (2 * p > n + 1) {
    throw PreconditionViolated("cover_full_lines needs p <= (n+1)/2; got p=" + std::to_string(p) +
                               ", n=" + std::to_string(n));
  }
  if (q > p) throw PreconditionViolated("cover_full_lines needs q <= p after normalization");
  if (p == 0) return {};

  const Square oriented = plan.transposed ? square.transposed() : square;
  CoverSearch search(oriented, plan);
  GLS_ENSURE(search.run(), "a partial transversal covers all full rows and columns");

  std::vector<CellRef> cells = search.cells();
  const int bound = plan.case_tag == 'a' ? p : (p + 1) / 2 + q;
  GLS_ENSURE(static_cast<int>(cells.size()) <= bound, "full-line cover size bound");
  if (plan.transposed) {
    for (CellRef& c : cells) std::swap(c.row, c.col);
  }
  GLS_ENSURE(verify_partial_transversal(square, cells).ok, "full-line cover is a partial transversal");
  return sorted(std::move(cells));
}

namespace {

struct Induction {
  SolveReport& report;

  // A is the current square; rows/cols map its indices to the original.
  std::vector<CellRef> solve(const Square& a, const std::vector<int>& rows, const std::vector<int>& cols,
                             bool top) {
    ++report.node_count;
    const int m = a.order();
    const long k = a.symbol_count();
    if (!top) {
      GLS_ENSURE(4 * k > 3L * m * m, "induction count: symbol_count > 0.75 m^2");
    }
    if (m <= 2) return map_back(base_case(a), rows, cols);

    const SymbolStats st = compute_stats(a);
    const CoverPlan plan = make_cover_plan(a, st);
    GLS_ENSURE(2 * plan.p() <= m, "at most n/2 full lines");
    const std::vector<CellRef> cover = cover_full_lines(a, plan);

    // Residual square A': drop the rows and columns the cover used.
    std::vector<char> row_gone(m, 0), col_gone(m, 0);
    for (const CellRef& c : cover) row_gone[c.row] = col_gone[c.col] = 1;
    std::vector<int> rest_rows, rest_cols;
    for (int i = 0; i < m; ++i) {
      if (!row_gone[i]) rest_rows.push_back(i);
      if (!col_gone[i]) rest_cols.push_back(i);
    }
    const int rm = static_cast<int>(rest_rows.size());

    // Singletons of A (counted in A, not A') among the residual cells.
    BitMatrix singles(rm);
    for (int i = 0; i < rm; ++i)
      for (int j = 0; j < rm; ++j)
        if (st.multiplicity[a.id(rest_rows[i], rest_cols[j])] == 1) singles.set(i, j);
    if (has_full_line(singles)) ++report.residual_full_lines;

    DiagonalOrBlocker dob = diagonal_or_blocker(singles);
    if (auto* diag = std::get_if<AllOneDiagonal>(&dob)) {
      std::vector<CellRef> cells = cover;
      for (const CellRef& c : diag->cells) cells.push_back({rest_rows[c.row], rest_cols[c.col]});
      GLS_ENSURE(is_transversal(a, cells), "cover plus singleton diagonal is a transversal");
      return map_back(std::move(cells), rows, cols);
    }

    // Order-reducing branch: a singleton whose row or column holds more than
    // m/2 repetitions; delete its row and column and recurse.
    ++report.reductions;
    const CellRef sigma = pick_singleton(a, st);
    std::vector<int> sub_rows, sub_cols, sub_rows_orig, sub_cols_orig;
    for (int i = 0; i < m; ++i) {
      if (i != sigma.row) {
        sub_rows.push_back(i);
        sub_rows_orig.push_back(rows[i]);
      }
      if (i != sigma.col) {
        sub_cols.push_back(i);
        sub_cols_orig.push_back(cols[i]);
      }
    }
    std::vector<CellRef> cells = solve(a.minor(sub_rows, sub_cols), sub_rows_orig, sub_cols_orig, false);
    cells.push_back({rows[sigma.row], cols[sigma.col]});
    return cells;
  }

  static bool has_full_line(const BitMatrix& singles) {
    const int n = singles.order();
    for (int i = 0; i < n; ++i)
      if (singles.row_count(i) == 0 || singles.col_count(i) == 0) return true;
    return false;
  }

  static std::vector<CellRef> base_case(const Square& a) {
    const int m = a.order();
    if (m == 1) return {{0, 0}};
    std::vector<CellRef> main{{0, 0}, {1, 1}}, anti{{0, 1}, {1, 0}};
    if (is_transversal(a, main)) return main;
    GLS_ENSURE(is_transversal(a, anti), "order-2 square with 3 symbols has a transversal");
    return anti;
  }

  static std::vector<CellRef> map_back(std::vector<CellRef> cells, const std::vector<int>& rows,
                                       const std::vector<int>& cols) {
    for (CellRef& c : cells) c = {rows[c.row], cols[c.col]};
    return cells;
  }

  // Most repetitions in its row or column first, ties by position. A
  // candidate is skipped when deleting its lines would drop the residual
  // below the induction count.
  static CellRef pick_singleton(const Square& a, const SymbolStats& st) {
    const int m = a.order();
    const long k = a.symbol_count();
    std::vector<int> row_reps(m, 0), col_reps(m, 0);
    for (int r = 0; r < m; ++r) {
      for (int c = 0; c < m; ++c) {
        if (st.multiplicity[a.id(r, c)] >= 2) {
          ++row_reps[r];
          ++col_reps[c];
        }
      }
    }
    struct Candidate {
      int reps;
      CellRef cell;
    };
    std::vector<Candidate> cands;
    for (int r = 0; r < m; ++r) {
      for (int c = 0; c < m; ++c) {
        if (st.multiplicity[a.id(r, c)] != 1) continue;
        const int reps = std::max(row_reps[r], col_reps[c]);
        if (2 * reps > m) cands.push_back({reps, {r, c}});
      }
    }
    GLS_ENSURE(!cands.empty(), "some singleton has more than n/2 repetitions in its row or column");
    std::stable_sort(cands.begin(), cands.end(),
                     [](const Candidate& x, const Candidate& y) { return x.reps > y.reps; });

    std::vector<int> seen(a.symbol_count(), 0);
    for (const Candidate& cand : cands) {
      // Symbols all of whose occurrences lie in the deleted row and column.
      long lost = 0;
      auto touch = [&](int r, int c) {
        const int id = a.id(r, c);
        if (++seen[id] == st.multiplicity[id]) ++lost;
      };
      for (int c = 0; c < m; ++c) touch(cand.cell.row, c);
      for (int r = 0; r < m; ++r)
        if (r != cand.cell.row) touch(r, cand.cell.col);
      for (int c = 0; c < m; ++c) seen[a.id(cand.cell.row, c)] = 0;
      for (int r = 0; r < m; ++r) seen[a.id(r, cand.cell.col)] = 0;

      const long rest = k - lost;
      if (4 * rest > 3L * (m - 1) * (m - 1)) return cand.cell;
    }
    throw AssertionFailure("no singleton deletion keeps symbol_count > 0.75 (n-1)^2");
  }
};

}  // namespace

SolveReport find_transversal_constructive(const Square& square) {
  const auto t0 = std::chrono::steady_clock::now();
  const long n = square.order();
  const long k = square.symbol_count();
  if (4 * k < 3 * n * n) {
    throw PreconditionViolated("symbol_count " + std::to_string(k) + " < ceil(0.75 n^2) = " +
                               std::to_string((3 * n * n + 3) / 4));
  }
  SolveReport rep;
  rep.method = "constructive";
  std::vector<int> rows(n), cols(n);
  std::iota(rows.begin(), rows.end(), 0);
  std::iota(cols.begin(), cols.end(), 0);
  Induction ind{rep};
  rep.cells = sorted(ind.solve(square, rows, cols, true));
  GLS_ENSURE(is_transversal(square, rep.cells), "constructive result is a transversal");
  rep.outcome = Outcome::Found;
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

std::vector<CellRef> rainbow_pm_multiplicity_split(const Square& square) {
  const int n = square.order();
  const SymbolStats st = compute_stats(square);
  bool has_single = false, has_full = false;
  for (int id = 0; id < st.symbol_count; ++id) {
    const int m = st.multiplicity[id];
    if (m == 1) has_single = true;
    if (m == n) has_full = true;
    if (m != 1 && m != n) {
      throw PreconditionViolated("symbol " + std::to_string(square.label(id)) + " has multiplicity " +
                                 std::to_string(m) + ", not 1 or n");
    }
  }
  if (!has_single || !has_full || n == 1) {
    throw PreconditionViolated("both multiplicities 1 and n must occur");
  }

  // Each multiplicity-n symbol is a permutation; removing them all leaves an
  // (n - r)-regular bipartite graph of singleton cells.
  BitMatrix singles(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (st.multiplicity[square.id(r, c)] == 1) singles.set(r, c);
  std::vector<CellRef> pm = regular_bipartite_pm(singles);
  GLS_ENSURE(is_transversal(square, pm), "perfect matching of singletons is a transversal");
  return pm;
}

}  // namespace gls
