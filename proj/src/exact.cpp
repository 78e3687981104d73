#include <algorithm>
#include <chrono>

#include "gls/error.hpp"
#include "gls/solvers.hpp"

namespace gls {

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Found: return "Found";
    case Outcome::NotFound: return "NotFound";
    case Outcome::Infeasible: return "Infeasible";
  }
  return "?";
}

namespace {

class ExactSearch {
 public:
  ExactSearch(const Square& sq, ExactMode mode, std::uint64_t max_nodes)
      : n_(sq.order()),
        sq_(sq),
        mode_(mode),
        max_nodes_(max_nodes),
        col_used_(n_, 0),
        sym_used_(sq.symbol_count(), 0),
        row_col_(n_, -1) {}

  bool run() { return search(0); }

  std::uint64_t nodes() const { return nodes_; }
  std::uint64_t count() const { return count_; }
  std::vector<CellRef>& first() { return first_; }
  std::vector<std::vector<CellRef>>& all() { return all_; }

 private:
  std::vector<CellRef> current() const {
    std::vector<CellRef> cells;
    cells.reserve(n_);
    for (int r = 0; r < n_; ++r) cells.push_back({r, row_col_[r]});
    return cells;
  }

  bool admissible(int r, int c) const { return !col_used_[c] && !sym_used_[sq_.id(r, c)]; }

  bool search(int depth) {
    if (max_nodes_ != 0 && nodes_ >= max_nodes_) {
      throw ResourceLimit("exact transversal search exceeded " + std::to_string(max_nodes_) + " nodes");
    }
    ++nodes_;
    if (depth == n_) {
      ++count_;
      if (mode_ == ExactMode::First) {
        first_ = current();
        return true;
      }
      if (mode_ == ExactMode::All) all_.push_back(current());
      return false;
    }

    // Fail-first: free row with the fewest admissible cells.
    int best_row = -1;
    int best_count = n_ + 1;
    for (int r = 0; r < n_; ++r) {
      if (row_col_[r] >= 0) continue;
      int cnt = 0;
      for (int c = 0; c < n_; ++c) cnt += admissible(r, c) ? 1 : 0;
      if (cnt < best_count) {
        best_count = cnt;
        best_row = r;
        if (cnt == 0) return false;
      }
    }

    const int r = best_row;
    for (int c = 0; c < n_; ++c) {
      if (!admissible(r, c)) continue;
      const int s = sq_.id(r, c);
      col_used_[c] = 1;
      sym_used_[s] = 1;
      row_col_[r] = c;
      const bool stop = search(depth + 1);
      row_col_[r] = -1;
      sym_used_[s] = 0;
      col_used_[c] = 0;
      if (stop) return true;
    }
    return false;
  }

  int n_;
  const Square& sq_;
  ExactMode mode_;
  std::uint64_t max_nodes_;
  std::vector<char> col_used_;
  std::vector<char> sym_used_;
  std::vector<int> row_col_;
  std::uint64_t nodes_ = 0;
  std::uint64_t count_ = 0;
  std::vector<CellRef> first_;
  std::vector<std::vector<CellRef>> all_;
};

}  // namespace

SolveReport find_transversal_exact(const Square& square, ExactMode mode, std::uint64_t max_nodes) {
  const auto t0 = std::chrono::steady_clock::now();
  ExactSearch search(square, mode, max_nodes);
  search.run();

  SolveReport rep;
  rep.method = "exact";
  rep.node_count = search.nodes();
  rep.outcome = search.count() > 0 ? Outcome::Found : Outcome::NotFound;
  if (mode == ExactMode::First) {
    rep.cells = std::move(search.first());
  } else {
    rep.count = search.count();
    if (mode == ExactMode::All) {
      rep.all = std::move(search.all());
      std::sort(rep.all.begin(), rep.all.end());
      if (!rep.all.empty()) rep.cells = rep.all.front();
    } else if (search.count() > 0) {
      // Report a witness alongside the count.
      ExactSearch again(square, ExactMode::First, 0);
      again.run();
      rep.cells = std::move(again.first());
    }
  }
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace gls
