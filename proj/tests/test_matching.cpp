#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gls/error.hpp"
#include "gls/matching.hpp"
#include "oracles.hpp"

using namespace gls;

namespace {

BitMatrix identity(int n) {
  BitMatrix m(n);
  for (int i = 0; i < n; ++i) m.set(i, i);
  return m;
}

void check_matching(const BitMatrix& m, const MatchingResult& res) {
  const int n = m.order();
  std::vector<char> rows(n, 0), cols(n, 0);
  for (const CellRef& c : res.cells) {
    REQUIRE(m.get(c.row, c.col));
    REQUIRE_FALSE(rows[c.row]);
    REQUIRE_FALSE(cols[c.col]);
    rows[c.row] = cols[c.col] = 1;
  }
  CHECK(res.cover_rows.size() + res.cover_cols.size() == res.cells.size());
  std::vector<char> cr(n, 0), cc(n, 0);
  for (int r : res.cover_rows) cr[r] = 1;
  for (int c : res.cover_cols) cc[c] = 1;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (m.get(r, c)) REQUIRE((cr[r] || cc[c]));
}

}  // namespace

TEST_CASE("max_matching small examples") {
  const MatchingResult id = max_matching(identity(2));
  CHECK(id.size() == 2);
  CHECK(id.cover_rows.size() + id.cover_cols.size() == 2);

  const MatchingResult zero = max_matching(BitMatrix(3));
  CHECK(zero.size() == 0);
  CHECK(zero.cover_rows.empty());
  CHECK(zero.cover_cols.empty());

  const MatchingResult one = max_matching(BitMatrix::from_rows({{1, 0}, {0, 0}}));
  CHECK(one.cells == std::vector<CellRef>{{0, 0}});
  CHECK(one.cover_rows == std::vector<int>{0});
  CHECK(one.cover_cols.empty());
}

TEST_CASE("diagonal_or_blocker small examples") {
  const auto d = diagonal_or_blocker(identity(3));
  REQUIRE(std::holds_alternative<AllOneDiagonal>(d));
  CHECK(std::get<AllOneDiagonal>(d).cells == std::vector<CellRef>{{0, 0}, {1, 1}, {2, 2}});

  const auto z = diagonal_or_blocker(BitMatrix(2));
  REQUIRE(std::holds_alternative<ZeroSubmatrixCertificate>(z));
  CHECK(std::get<ZeroSubmatrixCertificate>(z).rows == std::vector<int>{0, 1});
  CHECK(std::get<ZeroSubmatrixCertificate>(z).cols == std::vector<int>{0, 1});

  const BitMatrix m = BitMatrix::from_rows({{1, 0}, {0, 0}});
  const auto b = diagonal_or_blocker(m);
  REQUIRE(std::holds_alternative<ZeroSubmatrixCertificate>(b));
  const auto& cert = std::get<ZeroSubmatrixCertificate>(b);
  CHECK(cert.rows == std::vector<int>{1});
  CHECK(cert.cols == std::vector<int>{0, 1});
  CHECK(cert.verify(m));
}

TEST_CASE("certificate verification rejects bad certificates") {
  const BitMatrix m = BitMatrix::from_rows({{1, 0}, {0, 0}});
  CHECK_FALSE(ZeroSubmatrixCertificate{{0}, {0, 1}}.verify(m));  // covers a 1
  CHECK_FALSE(ZeroSubmatrixCertificate{{1}, {1}}.verify(m));      // too small
  CHECK_FALSE(ZeroSubmatrixCertificate{{1, 1}, {1}}.verify(m));   // repeated row
}

TEST_CASE("Konig duality against brute force") {
  Rng rng(2024);
  for (int iter = 0; iter < 3000; ++iter) {
    const int n = rng.between(1, 7);
    const BitMatrix m = oracle::random_matrix(n, rng, rng.between(5, 95));
    const MatchingResult res = max_matching(m);
    check_matching(m, res);
    CHECK(res.size() == oracle::matching_size(m));
    const int def = oracle::deficiency(m);
    CHECK(res.size() == n - def);
    const auto d = diagonal_or_blocker(m);
    CHECK(std::holds_alternative<AllOneDiagonal>(d) == (res.size() == n));
    if (const auto* cert = std::get_if<ZeroSubmatrixCertificate>(&d)) {
      CHECK(cert->verify(m));
      CHECK(static_cast<int>(cert->rows.size() + cert->cols.size()) - n == def);
    } else {
      const auto& cells = std::get<AllOneDiagonal>(d).cells;
      REQUIRE(cells.size() == static_cast<std::size_t>(n));
      for (int r = 0; r < n; ++r) CHECK(cells[r].row == r);
    }
  }
}

TEST_CASE("max_matching is deterministic") {
  Rng rng(9);
  for (int iter = 0; iter < 100; ++iter) {
    const BitMatrix m = oracle::random_matrix(8, rng, 40);
    const MatchingResult a = max_matching(m), b = max_matching(m);
    CHECK(a.cells == b.cells);
    CHECK(a.cover_rows == b.cover_rows);
    CHECK(a.cover_cols == b.cover_cols);
  }
}

TEST_CASE("wide matrices span several words") {
  const int n = 130;
  BitMatrix m(n);
  for (int i = 0; i < n; ++i) m.set(i, (i * 7 + 3) % n);
  CHECK(max_matching(m).size() == n);
  m.set(5, (5 * 7 + 3) % n, false);
  CHECK(max_matching(m).size() == n - 1);
  CHECK(m.row_count(5) == 0);
}

TEST_CASE("regular_bipartite_pm") {
  SUBCASE("complete bipartite") {
    BitMatrix k(3);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) k.set(r, c);
    CHECK(regular_bipartite_pm(k).size() == 3);
  }
  SUBCASE("forced matching") {
    const BitMatrix p = BitMatrix::from_rows({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
    CHECK(regular_bipartite_pm(p) == std::vector<CellRef>{{0, 1}, {1, 2}, {2, 0}});
  }
  SUBCASE("two disjoint 4-cycles") {
    // Rows 0,1 with cols 0,1 and rows 2,3 with cols 2,3 form two C_4.
    const BitMatrix m = BitMatrix::from_rows({{1, 1, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 1}, {0, 0, 1, 1}});
    const auto pm = regular_bipartite_pm(m);
    REQUIRE(pm.size() == 4);
    for (const auto& c : pm) CHECK(m.get(c.row, c.col));
  }
  SUBCASE("irregular input") {
    CHECK_THROWS_AS(regular_bipartite_pm(BitMatrix::from_rows({{1, 1}, {1, 0}})), NotRegular);
    CHECK_THROWS_AS(regular_bipartite_pm(BitMatrix(2)), NotRegular);
  }
  SUBCASE("unions of random permutations") {
    Rng rng(17);
    for (int iter = 0; iter < 500; ++iter) {
      const int n = rng.between(1, 10);
      const int d = rng.between(1, std::min(5, n));
      // d pairwise disjoint permutations: shifts of one random Latin square.
      const std::vector<int> pr = rng.permutation(n), pc = rng.permutation(n), shifts = rng.permutation(n);
      BitMatrix m(n);
      for (int k = 0; k < d; ++k)
        for (int r = 0; r < n; ++r) m.set(pr[r], pc[(r + shifts[k]) % n]);
      const auto pm = regular_bipartite_pm(m);
      REQUIRE(pm.size() == static_cast<std::size_t>(n));
      std::vector<char> used(n, 0);
      for (const auto& c : pm) {
        CHECK(m.get(c.row, c.col));
        CHECK_FALSE(used[c.col]);
        used[c.col] = 1;
      }
    }
  }
}
