#include <algorithm>
#include <bit>

#include "gls/error.hpp"
#include "gls/solvers.hpp"

namespace gls {

namespace {

using Mask = std::uint64_t;

class Packing {
 public:
  Packing(int n, std::vector<Mask> transversals, std::uint64_t max_nodes)
      : n_(n), cells_(n * n), ts_(std::move(transversals)), containing_(cells_), max_nodes_(max_nodes) {
    for (std::size_t t = 0; t < ts_.size(); ++t) {
      for (int cell = 0; cell < cells_; ++cell)
        if ((ts_[t] >> cell) & 1u) containing_[cell].push_back(static_cast<int>(t));
    }
  }

  // Exact cover of all cells by n transversals.
  bool cover() {
    chosen_.clear();
    return cover_from(0);
  }

  // Largest set of pairwise disjoint transversals.
  int max_packing() {
    best_ = 0;
    chosen_.clear();
    pack_from(0, 0);
    return best_;
  }

  const std::vector<int>& chosen() const { return chosen_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  void tick() {
    ++nodes_;
    if (max_nodes_ != 0 && nodes_ > max_nodes_) {
      throw ResourceLimit("decomposition search exceeded " + std::to_string(max_nodes_) + " nodes");
    }
  }

  bool cover_from(Mask covered) {
    tick();
    if (std::popcount(covered) == cells_) return true;
    const int cell = std::countr_one(covered);
    for (int t : containing_[cell]) {
      if (ts_[t] & covered) continue;
      chosen_.push_back(t);
      if (cover_from(covered | ts_[t])) return true;
      chosen_.pop_back();
    }
    return false;
  }

  // `blocked` holds covered cells plus cells decided to stay uncovered.
  void pack_from(Mask covered, Mask blocked) {
    tick();
    const int depth = std::popcount(covered) / n_;
    best_ = std::max(best_, depth);
    const int open = cells_ - std::popcount(blocked);
    if (depth + open / n_ <= best_ || best_ == n_) return;
    const int cell = std::countr_one(blocked);
    for (int t : containing_[cell]) {
      if (ts_[t] & blocked) continue;
      pack_from(covered | ts_[t], blocked | ts_[t]);
    }
    pack_from(covered, blocked | (Mask{1} << cell));
  }

  int n_;
  int cells_;
  std::vector<Mask> ts_;
  std::vector<std::vector<int>> containing_;
  std::vector<int> chosen_;
  int best_ = 0;
  std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

Decomposition decompose_into_transversals(const Square& square, bool compute_max, std::uint64_t max_nodes) {
  const int n = square.order();
  if (n > 8) throw PreconditionViolated("decomposition search supports n <= 8");

  const SolveReport all = find_transversal_exact(square, ExactMode::All, max_nodes);
  std::vector<Mask> masks;
  masks.reserve(all.all.size());
  for (const auto& t : all.all) {
    Mask m = 0;
    for (const CellRef& c : t) m |= Mask{1} << (c.row * n + c.col);
    masks.push_back(m);
  }

  Decomposition d;
  d.transversal_count = all.all.size();
  d.node_count = all.node_count;
  Packing packing(n, masks, max_nodes);
  if (packing.cover()) {
    d.feasible = true;
    d.max_disjoint = n;
    for (int t : packing.chosen()) d.transversals.push_back(all.all[t]);
    std::sort(d.transversals.begin(), d.transversals.end());
    d.node_count += packing.nodes();
    return d;
  }
  d.node_count += packing.nodes();
  if (compute_max) {
    Packing again(n, masks, max_nodes);
    d.max_disjoint = again.max_packing();
    d.node_count += again.nodes();
  }
  return d;
}

}  // namespace gls
