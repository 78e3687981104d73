#include "gls/canonical.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <optional>
#include <thread>

#include "gls/error.hpp"

namespace gls {

namespace {

// Searches row orders and column permutations of a (partially) filled grid
// for an arrangement whose relabeled row-major sequence is smaller than a
// target. Only rows that tie with the target so far are branched on, so the
// search stays close to linear in the number of column permutations.
class ArrangementSearch {
 public:
  ArrangementSearch(const std::vector<int>& grid, int n, int rows)
      : n_(n), rows_(rows), grid_(grid), map_(static_cast<std::size_t>(n) * n, -1), used_(rows, 0),
        seq_(static_cast<std::size_t>(rows) * n), perm_(n) {}

  std::optional<std::vector<int>> smaller_than(const std::vector<int>& target, bool with_transpose) {
    target_ = &target;
    if (try_orientation(grid_)) return seq_;
    if (with_transpose && rows_ == n_) {
      std::vector<int> t(grid_.size());
      for (int r = 0; r < n_; ++r)
        for (int c = 0; c < n_; ++c) t[c * n_ + r] = grid_[r * n_ + c];
      if (try_orientation(t)) return seq_;
    }
    return std::nullopt;
  }

 private:
  bool try_orientation(const std::vector<int>& g) {
    g_ = &g;
    std::iota(perm_.begin(), perm_.end(), 0);
    do {
      if (dfs(0)) return true;
    } while (std::next_permutation(perm_.begin(), perm_.end()));
    return false;
  }

  // Writes row r at depth d; returns how many new labels it introduced.
  int apply(int r, int d) {
    int fresh = 0;
    for (int j = 0; j < n_; ++j) {
      int s = (*g_)[r * n_ + perm_[j]];
      if (map_[s] < 0) {
        map_[s] = next_++;
        ++fresh;
      }
      seq_[d * n_ + j] = map_[s];
    }
    used_[r] = 1;
    return fresh;
  }

  void undo(int r, int fresh) {
    for (int j = 0; j < n_; ++j) {
      int s = (*g_)[r * n_ + perm_[j]];
      if (map_[s] >= next_ - fresh) map_[s] = -1;
    }
    next_ -= fresh;
    used_[r] = 0;
  }

  // -1 / 0 / 1 comparing row r (relabeled in context) with target row d.
  int compare(int r, int d) const {
    int pending = next_;
    for (int j = 0; j < n_; ++j) {
      int s = (*g_)[r * n_ + perm_[j]];
      int lab = map_[s];
      // Symbols within a row are distinct, so every unseen symbol is new.
      if (lab < 0) lab = pending++;
      int t = (*target_)[d * n_ + j];
      if (lab != t) return lab < t ? -1 : 1;
    }
    return 0;
  }

  bool dfs(int d) {
    if (d == rows_) return false;
    for (int r = 0; r < rows_; ++r) {
      if (used_[r]) continue;
      const int cmp = compare(r, d);
      if (cmp > 0) continue;
      const int fresh = apply(r, d);
      if (cmp < 0) {
        complete(d + 1);
        return true;
      }
      if (dfs(d + 1)) return true;
      undo(r, fresh);
    }
    return false;
  }

  void complete(int d) {
    for (int r = 0; r < rows_ && d < rows_; ++r)
      if (!used_[r]) apply(r, d++);
    // Leave the search state dirty; callers return immediately.
  }

  int n_;
  int rows_;
  const std::vector<int>& grid_;
  const std::vector<int>* g_ = nullptr;
  const std::vector<int>* target_ = nullptr;
  std::vector<int> map_;
  int next_ = 0;
  std::vector<char> used_;
  std::vector<int> seq_;
  std::vector<int> perm_;
};

std::vector<int> ids_of(const Square& sq) { return {sq.ids().begin(), sq.ids().end()}; }

Square from_ids(int n, const std::vector<int>& ids) {
  return Square::from_labels(n, std::vector<Symbol>(ids.begin(), ids.end()));
}

}  // namespace

Square canonical_form(const Square& square) {
  const int n = square.order();
  std::vector<int> best = ids_of(square);
  const std::vector<int> grid = best;
  for (;;) {
    ArrangementSearch search(grid, n, n);
    auto smaller = search.smaller_than(best, true);
    if (!smaller) break;
    best = std::move(*smaller);
  }
  return from_ids(n, best);
}

bool is_canonical(const Square& square) {
  const std::vector<int> ids = ids_of(square);
  ArrangementSearch search(ids, square.order(), square.order());
  return !search.smaller_than(ids, true);
}

namespace {

struct SharedBudget {
  std::uint64_t max_nodes = 0;
  double timeout_s = 0.0;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> aborted{false};

  bool tick() {
    const std::uint64_t k = nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (max_nodes != 0 && k > max_nodes) aborted = true;
    if (timeout_s > 0.0 && (k & 1023) == 0) {
      const double el = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      if (el > timeout_s) aborted = true;
    }
    return !aborted.load(std::memory_order_relaxed);
  }
};

// Orderly generation: cells are filled row-major with symbols numbered by
// first occurrence; a prefix survives only if no rearrangement of its
// completed rows is smaller, and a full square only if it is canonical.
class Generator {
 public:
  Generator(const EnumerationOptions& opt, SharedBudget& budget)
      : n_(opt.order), cells_(n_ * n_), opt_(opt), budget_(budget), ids_(cells_, -1), mult_(cells_ + 1, 0),
        row_has_(static_cast<std::size_t>(n_) * (cells_ + 1), 0),
        col_has_(static_cast<std::size_t>(n_) * (cells_ + 1), 0) {}

  // Collects prefixes of length `split` instead of descending further.
  void collect_units(int split, std::vector<std::vector<int>>& units) {
    split_ = split;
    units_ = &units;
    fill(0);
    units_ = nullptr;
    split_ = -1;
  }

  void run_from(const std::vector<int>& prefix) {
    for (std::size_t c = 0; c < prefix.size(); ++c) place(static_cast<int>(c), prefix[c]);
    fill(static_cast<int>(prefix.size()));
    for (int c = static_cast<int>(prefix.size()) - 1; c >= 0; --c) remove(c);
  }

  std::vector<std::vector<int>>& found() { return found_; }

 private:
  void place(int cell, int s) {
    const int r = cell / n_, c = cell % n_;
    ids_[cell] = s;
    if (mult_[s]++ == 0) ++k_;
    row_has_[r * (cells_ + 1) + s] = 1;
    col_has_[c * (cells_ + 1) + s] = 1;
  }

  void remove(int cell) {
    const int r = cell / n_, c = cell % n_;
    const int s = ids_[cell];
    if (--mult_[s] == 0) --k_;
    row_has_[r * (cells_ + 1) + s] = 0;
    col_has_[c * (cells_ + 1) + s] = 0;
    ids_[cell] = -1;
  }

  bool prefix_minimal(int rows) const {
    std::vector<int> prefix(ids_.begin(), ids_.begin() + rows * n_);
    ArrangementSearch search(prefix, n_, rows);
    return !search.smaller_than(prefix, false);
  }

  void fill(int cell) {
    if (!budget_.tick()) return;
    const int r = cell / n_, c = cell % n_;
    if (c == 0 && r >= 2 && !prefix_minimal(r)) return;
    if (cell == split_) {
      units_->emplace_back(ids_.begin(), ids_.begin() + cell);
      return;
    }
    if (cell == cells_) {
      if (k_ < opt_.min_symbols || k_ > opt_.max_symbols) return;
      ArrangementSearch search(ids_, n_, n_);
      if (!search.smaller_than(ids_, true)) found_.push_back(ids_);
      return;
    }
    const int remaining_after = cells_ - cell - 1;
    for (int s = 0; s <= k_; ++s) {
      if (row_has_[r * (cells_ + 1) + s] || col_has_[c * (cells_ + 1) + s]) continue;
      const int k_after = s == k_ ? k_ + 1 : k_;
      if (k_after > opt_.max_symbols) continue;
      if (k_after + remaining_after < opt_.min_symbols) continue;
      place(cell, s);
      if (!opt_.filter || opt_.filter(n_, ids_, cell + 1, mult_)) fill(cell + 1);
      remove(cell);
      if (budget_.aborted) return;
    }
  }

  int n_;
  int cells_;
  const EnumerationOptions& opt_;
  SharedBudget& budget_;
  std::vector<int> ids_;
  std::vector<int> mult_;
  std::vector<char> row_has_;
  std::vector<char> col_has_;
  int k_ = 0;
  int split_ = -1;
  std::vector<std::vector<int>>* units_ = nullptr;
  std::vector<std::vector<int>> found_;
};

}  // namespace

EnumerationResult enumerate_squares(const EnumerationOptions& options) {
  const int n = options.order;
  if (n < 1 || n > 8) throw PreconditionViolated("enumeration supports 1 <= n <= 8");
  if (options.min_symbols > options.max_symbols) return {};

  SharedBudget budget;
  budget.max_nodes = options.max_nodes;
  budget.timeout_s = options.timeout_s;

  std::vector<std::vector<int>> found;
  const int jobs = std::max(1, options.jobs);
  if (jobs == 1 || n < 3) {
    Generator gen(options, budget);
    gen.run_from({});
    found = std::move(gen.found());
  } else {
    // Work units: surviving prefixes at the start of the third row.
    std::vector<std::vector<int>> units;
    {
      Generator gen(options, budget);
      gen.collect_units(2 * n, units);
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::vector<std::vector<int>>> per_worker(jobs);
    std::vector<std::thread> workers;
    for (int w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        Generator gen(options, budget);
        for (std::size_t u; (u = next.fetch_add(1)) < units.size() && !budget.aborted;) gen.run_from(units[u]);
        per_worker[w] = std::move(gen.found());
      });
    }
    for (auto& t : workers) t.join();
    for (auto& part : per_worker)
      for (auto& s : part) found.push_back(std::move(s));
  }

  std::sort(found.begin(), found.end());
  EnumerationResult res;
  res.complete = !budget.aborted;
  res.nodes = budget.nodes.load();
  res.squares.reserve(found.size());
  for (const auto& ids : found) res.squares.push_back(from_ids(n, ids));
  return res;
}

}  // namespace gls
