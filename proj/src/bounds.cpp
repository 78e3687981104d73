#include "gls/bounds.hpp"

#include <algorithm>

#include "gls/error.hpp"

namespace gls {

std::string to_string(BoundKind k) {
  switch (k) {
    case BoundKind::LLL: return "LLL";
    case BoundKind::Corollary: return "Corollary";
    case BoundKind::ErdosSpencer: return "ErdosSpencer";
    case BoundKind::Threshold075: return "Threshold075";
    case BoundKind::None: return "None";
  }
  return "?";
}

namespace {

void require_order(const Square& sq) {
  if (sq.order() < 2) throw PreconditionViolated("bound certificates need n > 1");
}

long cell_weight(const SymbolStats& st, CellRef c) { return st.row_weight[c.row] + st.col_weight[c.col]; }

bool heavier(const MonochromaticPair& a, const MonochromaticPair& b) {
  if (a.weight_sum != b.weight_sum) return a.weight_sum > b.weight_sum;
  if (a.first != b.first) return a.first < b.first;
  return a.second < b.second;
}

MonochromaticPair make_pair(int id, CellRef x, CellRef y, const SymbolStats& st) {
  if (y < x) std::swap(x, y);
  return {x, y, id, cell_weight(st, x) + cell_weight(st, y)};
}

std::vector<std::vector<CellRef>> cells_by_symbol(const Square& sq) {
  std::vector<std::vector<CellRef>> by(sq.symbol_count());
  for (int r = 0; r < sq.order(); ++r)
    for (int c = 0; c < sq.order(); ++c) by[sq.id(r, c)].push_back({r, c});
  return by;
}

}  // namespace

std::optional<MonochromaticPair> heaviest_pair(const Square& square, const SymbolStats& stats) {
  std::optional<MonochromaticPair> best;
  auto by = cells_by_symbol(square);
  for (int id = 0; id < static_cast<int>(by.size()); ++id) {
    auto& cells = by[id];
    if (cells.size() < 2) continue;
    // Top two by weight, ties by position: that pair is also the smallest
    // pair among those of maximal weight for this symbol.
    std::partial_sort(cells.begin(), cells.begin() + 2, cells.end(), [&](CellRef a, CellRef b) {
      long wa = cell_weight(stats, a), wb = cell_weight(stats, b);
      return wa != wb ? wa > wb : a < b;
    });
    MonochromaticPair cand = make_pair(id, cells[0], cells[1], stats);
    if (!best || heavier(cand, *best)) best = cand;
  }
  return best;
}

std::optional<MonochromaticPair> heaviest_pair_full_scan(const Square& square, const SymbolStats& stats) {
  std::optional<MonochromaticPair> best;
  auto by = cells_by_symbol(square);
  for (int id = 0; id < static_cast<int>(by.size()); ++id) {
    const auto& cells = by[id];
    for (std::size_t a = 0; a < cells.size(); ++a) {
      for (std::size_t b = a + 1; b < cells.size(); ++b) {
        MonochromaticPair cand = make_pair(id, cells[a], cells[b], stats);
        if (!best || heavier(cand, *best)) best = cand;
      }
    }
  }
  return best;
}

BoundCertificate lll_certificate(const Square& square, bool full_scan) {
  require_order(square);
  const SymbolStats st = compute_stats(square);
  const std::int64_t n = square.order();
  BoundCertificate cert;
  cert.witness = full_scan ? heaviest_pair_full_scan(square, st) : heaviest_pair(square, st);
  cert.rhs = 27 * n * (n - 1);
  cert.lhs = cert.witness ? 64 * static_cast<std::int64_t>(cert.witness->weight_sum) : 0;
  cert.certified = cert.lhs <= cert.rhs;
  cert.kind = cert.certified ? BoundKind::LLL : BoundKind::None;
  return cert;
}

bool erdos_spencer_holds(int max_multiplicity, int n) {
  // 4e = 10.873127313836..., scaled by 10^7 and rounded up.
  return static_cast<std::int64_t>(max_multiplicity) * 108'731'274 <= static_cast<std::int64_t>(n) * 10'000'000;
}

BoundCertificate threshold_checks(const Square& square) {
  require_order(square);
  const SymbolStats st = compute_stats(square);
  const std::int64_t n = square.order();
  const std::int64_t k = square.symbol_count();

  BoundCertificate cert;
  ThresholdCheck corollary;
  corollary.kind = BoundKind::Corollary;
  corollary.lhs = 256 * k;
  corollary.rhs = 229 * n * n + 27 * n;
  corollary.holds = corollary.lhs >= corollary.rhs;
  corollary.relation = "256*k >= 229*n^2 + 27*n";

  ThresholdCheck es;
  es.kind = BoundKind::ErdosSpencer;
  es.lhs = static_cast<std::int64_t>(st.max_multiplicity()) * 108'731'274;
  es.rhs = n * 10'000'000;
  es.holds = erdos_spencer_holds(st.max_multiplicity(), static_cast<int>(n));
  es.relation = "max_mult*108731274 <= n*10^7";

  ThresholdCheck t075;
  t075.kind = BoundKind::Threshold075;
  t075.lhs = 4 * k;
  t075.rhs = 3 * n * n;
  t075.holds = t075.lhs >= t075.rhs;
  t075.relation = "4*k >= 3*n^2";

  cert.thresholds = {corollary, es, t075};
  for (const auto& t : cert.thresholds) {
    if (t.holds) {
      cert.certified = true;
      cert.kind = t.kind;
      break;
    }
  }
  return cert;
}

SingletonReport singleton_lower_bound(const Square& square) {
  require_order(square);
  const SymbolStats st = compute_stats(square);
  const int n = square.order();
  const long rhs = 27L * (static_cast<long>(n) * n - n);

  SingletonReport rep;
  rep.all_lll_side = true;
  std::vector<char> in_line(square.symbol_count());
  for (int pass = 0; pass < 2; ++pass) {
    for (int i = 0; i < n; ++i) {
      std::fill(in_line.begin(), in_line.end(), 0);
      for (int t = 0; t < n; ++t) in_line[pass == 0 ? square.id(i, t) : square.id(t, i)] = 1;
      LineBound lb;
      lb.is_row = pass == 0;
      lb.index = i;
      lb.weight = pass == 0 ? st.row_weight[i] : st.col_weight[i];
      lb.lll_side = 256 * lb.weight <= rhs;
      for (int id = 0; id < square.symbol_count(); ++id) {
        if (in_line[id]) continue;
        ++lb.symbols_avoiding;
        lb.cells_avoiding += st.multiplicity[id];
        if (st.multiplicity[id] == 1) ++lb.singletons_avoiding;
      }
      lb.singleton_bound = 2 * lb.symbols_avoiding - lb.cells_avoiding;
      if (!lb.lll_side) {
        rep.all_lll_side = false;
        rep.max_heavy_bound = std::max(rep.max_heavy_bound.value_or(lb.singleton_bound), lb.singleton_bound);
      }
      rep.lines.push_back(lb);
    }
  }
  return rep;
}

bool lll_certifiable_prefix(int n, const std::vector<int>& ids, int filled, const std::vector<int>& multiplicity) {
  std::vector<long> rw(n, 0), cw(n, 0);
  for (int x = 0; x < filled; ++x) {
    const int m = multiplicity[ids[x]] - 1;
    rw[x / n] += m;
    cw[x % n] += m;
  }
  const long rhs = 27L * n * (n - 1);
  // Heaviest pair per symbol among the filled cells.
  std::vector<long> top1(multiplicity.size(), -1), top2(multiplicity.size(), -1);
  for (int x = 0; x < filled; ++x) {
    const long w = rw[x / n] + cw[x % n];
    const int s = ids[x];
    if (w > top1[s]) {
      top2[s] = top1[s];
      top1[s] = w;
    } else if (w > top2[s]) {
      top2[s] = w;
    }
  }
  for (std::size_t s = 0; s < top1.size(); ++s) {
    if (top2[s] >= 0 && 64 * (top1[s] + top2[s]) > rhs) return false;
  }
  return true;
}

}  // namespace gls
