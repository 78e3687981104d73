#include "gls/matching.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <queue>
#include <string>

#include "gls/error.hpp"

namespace gls {

BitMatrix::BitMatrix(int n)
    : n_(n), words_per_row_(static_cast<std::size_t>((n + 63) / 64)),
      bits_(static_cast<std::size_t>(n) * words_per_row_, 0) {}

BitMatrix BitMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  BitMatrix m(n);
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(rows[r].size()) != n) {
      throw ValidationError(ValidationError::Kind::NotSquare, r, 0, "NotSquare");
    }
    for (int c = 0; c < n; ++c)
      if (rows[r][c] != 0) m.set(r, c);
  }
  return m;
}

int BitMatrix::row_count(int r) const {
  int total = 0;
  for (std::size_t w = 0; w < words_per_row_; ++w) total += std::popcount(bits_[r * words_per_row_ + w]);
  return total;
}

int BitMatrix::col_count(int c) const {
  int total = 0;
  for (int r = 0; r < n_; ++r) total += get(r, c) ? 1 : 0;
  return total;
}

namespace {

class HopcroftKarp {
 public:
  explicit HopcroftKarp(const BitMatrix& m) : n_(m.order()), adj_(n_), row_mate_(n_, -1), col_mate_(n_, -1) {
    for (int r = 0; r < n_; ++r)
      for (int c = 0; c < n_; ++c)
        if (m.get(r, c)) adj_[r].push_back(c);
  }

  void run() {
    while (bfs()) {
      it_.assign(n_, 0);
      for (int r = 0; r < n_; ++r)
        if (row_mate_[r] < 0) dfs(r);
    }
  }

  const std::vector<int>& row_mate() const { return row_mate_; }
  const std::vector<int>& col_mate() const { return col_mate_; }
  const std::vector<std::vector<int>>& adj() const { return adj_; }

 private:
  static constexpr int kInf = std::numeric_limits<int>::max();

  bool bfs() {
    dist_.assign(n_, kInf);
    std::queue<int> q;
    for (int r = 0; r < n_; ++r) {
      if (row_mate_[r] < 0) {
        dist_[r] = 0;
        q.push(r);
      }
    }
    bool found = false;
    while (!q.empty()) {
      int r = q.front();
      q.pop();
      for (int c : adj_[r]) {
        int next = col_mate_[c];
        if (next < 0) {
          found = true;
        } else if (dist_[next] == kInf) {
          dist_[next] = dist_[r] + 1;
          q.push(next);
        }
      }
    }
    return found;
  }

  bool dfs(int r) {
    for (; it_[r] < adj_[r].size(); ++it_[r]) {
      int c = adj_[r][it_[r]];
      int next = col_mate_[c];
      if (next < 0 || (dist_[next] == dist_[r] + 1 && dfs(next))) {
        row_mate_[r] = c;
        col_mate_[c] = r;
        ++it_[r];
        return true;
      }
    }
    dist_[r] = kInf;
    return false;
  }

  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> row_mate_;
  std::vector<int> col_mate_;
  std::vector<int> dist_;
  std::vector<std::size_t> it_;
};

}  // namespace

MatchingResult max_matching(const BitMatrix& m) {
  const int n = m.order();
  HopcroftKarp hk(m);
  hk.run();

  MatchingResult res;
  res.row_mate = hk.row_mate();
  res.col_mate = hk.col_mate();
  for (int r = 0; r < n; ++r)
    if (res.row_mate[r] >= 0) res.cells.push_back({r, res.row_mate[r]});

  // Konig: Z = vertices reachable from free rows by alternating paths.
  std::vector<char> row_in_z(n, 0), col_in_z(n, 0);
  std::vector<int> stack;
  for (int r = 0; r < n; ++r) {
    if (res.row_mate[r] < 0) {
      row_in_z[r] = 1;
      stack.push_back(r);
    }
  }
  while (!stack.empty()) {
    int r = stack.back();
    stack.pop_back();
    for (int c : hk.adj()[r]) {
      if (col_in_z[c]) continue;
      col_in_z[c] = 1;
      int next = res.col_mate[c];
      GLS_ENSURE(next >= 0, "alternating path reached a free column after maximum matching");
      if (!row_in_z[next]) {
        row_in_z[next] = 1;
        stack.push_back(next);
      }
    }
  }
  for (int r = 0; r < n; ++r)
    if (!row_in_z[r]) res.cover_rows.push_back(r);
  for (int c = 0; c < n; ++c)
    if (col_in_z[c]) res.cover_cols.push_back(c);

  GLS_ENSURE(res.cover_rows.size() + res.cover_cols.size() == res.cells.size(), "Konig equality");
  return res;
}

bool ZeroSubmatrixCertificate::verify(const BitMatrix& m) const {
  const int n = m.order();
  if (static_cast<int>(rows.size() + cols.size()) < n + 1) return false;
  for (int r : rows) {
    if (r < 0 || r >= n) return false;
    for (int c : cols) {
      if (c < 0 || c >= n || m.get(r, c)) return false;
    }
  }
  auto distinct = [](std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
  };
  return distinct(rows) && distinct(cols);
}

DiagonalOrBlocker diagonal_or_blocker(const BitMatrix& m) {
  const int n = m.order();
  MatchingResult mm = max_matching(m);
  if (mm.size() == n) return AllOneDiagonal{mm.cells};

  ZeroSubmatrixCertificate cert;
  std::vector<char> covered_row(n, 0), covered_col(n, 0);
  for (int r : mm.cover_rows) covered_row[r] = 1;
  for (int c : mm.cover_cols) covered_col[c] = 1;
  for (int r = 0; r < n; ++r)
    if (!covered_row[r]) cert.rows.push_back(r);
  for (int c = 0; c < n; ++c)
    if (!covered_col[c]) cert.cols.push_back(c);
  GLS_ENSURE(cert.verify(m), "blocking submatrix from vertex cover");
  return cert;
}

std::vector<CellRef> regular_bipartite_pm(const BitMatrix& adjacency) {
  const int n = adjacency.order();
  if (n == 0) return {};
  const int d = adjacency.row_count(0);
  for (int v = 0; v < n; ++v) {
    int rd = adjacency.row_count(v);
    int cd = adjacency.col_count(v);
    if (rd != d || cd != d) {
      throw NotRegular("degree mismatch: row " + std::to_string(v + 1) + " has " + std::to_string(rd) +
                       ", column " + std::to_string(v + 1) + " has " + std::to_string(cd) + ", expected " +
                       std::to_string(d));
    }
  }
  if (d < 1) throw NotRegular("regular degree must be at least 1");
  MatchingResult mm = max_matching(adjacency);
  GLS_ENSURE(mm.size() == n, "regular bipartite graph has a perfect matching");
  return mm.cells;
}

}  // namespace gls
