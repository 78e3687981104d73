#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>
#include <sstream>

#include "gls/bounds.hpp"
#include "gls/canonical.hpp"
#include "gls/error.hpp"
#include "gls/extremal.hpp"
#include "gls/graph.hpp"
#include "gls/solvers.hpp"
#include "oracles.hpp"

using namespace gls;

namespace {

Square sq(const std::vector<std::vector<Symbol>>& rows) { return Square::from_rows(rows); }

std::vector<int> ids(const Square& s) { return {s.ids().begin(), s.ids().end()}; }

// Decomposable into n disjoint transversals, by trying all n-subsets of the
// transversal list (only used where the list is short).
bool decomposable_brute(const Square& s) {
  const int n = s.order();
  std::vector<std::vector<CellRef>> all;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::set<int> syms;
    std::vector<CellRef> t;
    for (int r = 0; r < n; ++r) {
      syms.insert(s.id(r, perm[r]));
      t.push_back({r, perm[r]});
    }
    if (static_cast<int>(syms.size()) == n) all.push_back(t);
  } while (std::next_permutation(perm.begin(), perm.end()));
  // Every decomposition contains exactly one transversal through cell (0,0)
  // and so on; plain recursion over the list is enough at n <= 3.
  std::vector<char> used(static_cast<std::size_t>(n) * n, 0);
  auto rec = [&](auto&& self, std::size_t from, int picked) -> bool {
    if (picked == n) return true;
    for (std::size_t i = from; i < all.size(); ++i) {
      bool ok = true;
      for (const auto& c : all[i]) ok = ok && !used[c.row * n + c.col];
      if (!ok) continue;
      for (const auto& c : all[i]) used[c.row * n + c.col] = 1;
      if (self(self, i + 1, picked + 1)) return true;
      for (const auto& c : all[i]) used[c.row * n + c.col] = 0;
    }
    return false;
  };
  return rec(rec, 0, 0);
}

std::vector<std::vector<CellRef>> all_transversals(const Square& s) {
  return find_transversal_exact(s, ExactMode::All).all;
}

}  // namespace

TEST_CASE("canonical form examples") {
  CHECK(canonical_form(sq({{2, 1}, {1, 2}})) == canonical_form(sq({{1, 2}, {2, 1}})));
  CHECK(canonical_form(sq({{1, 2}, {2, 1}})).rows() == std::vector<std::vector<Symbol>>{{0, 1}, {1, 0}});
  const Square s = sq({{0, 1, 2}, {3, 4, 0}, {5, 0, 6}});
  CHECK(canonical_form(s.transposed()) == canonical_form(s));
  const Square z3 = cyclic_square(3);
  const Square shuffled = sq({{2, 0, 1}, {0, 1, 2}, {1, 2, 0}});
  CHECK(canonical_form(z3) == canonical_form(shuffled));
}

TEST_CASE("canonical form is idempotent and constant on orbits") {
  Rng rng(31);
  for (int iter = 0; iter < 40; ++iter) {
    const int n = rng.between(1, 6);
    const Square s = oracle::random_square(n, rng);
    const Square c = canonical_form(s);
    CHECK(canonical_form(c) == c);
    CHECK(is_canonical(c));
    CHECK(c.symbol_count() == s.symbol_count());
    for (int g = 0; g < 100; ++g) REQUIRE(canonical_form(oracle::random_symmetry(s, rng)) == c);
  }
}

TEST_CASE("canonical form is the minimum over the whole group") {
  // Brute force over row perms, col perms and transpose for n <= 4.
  Rng rng(12);
  for (int iter = 0; iter < 60; ++iter) {
    const int n = rng.between(1, 4);
    const Square s = oracle::random_square(n, rng);
    std::vector<int> best;
    std::vector<int> pr(n), pc(n);
    for (int t = 0; t < 2; ++t) {
      const Square base = t ? s.transposed() : s;
      std::iota(pr.begin(), pr.end(), 0);
      do {
        std::iota(pc.begin(), pc.end(), 0);
        do {
          const Square m = base.minor(pr, pc);
          const std::vector<int> seq = ids(m);
          if (best.empty() || seq < best) best = seq;
        } while (std::next_permutation(pc.begin(), pc.end()));
      } while (std::next_permutation(pr.begin(), pr.end()));
    }
    CHECK(ids(canonical_form(s)) == best);
  }
}

TEST_CASE("enumeration counts") {
  EnumerationOptions o;
  o.order = 1;
  CHECK(enumerate_squares(o).squares.size() == 1);
  o.order = 2;
  const auto two = enumerate_squares(o);
  REQUIRE(two.squares.size() == 3);
  CHECK(two.squares[0].symbol_count() + two.squares[1].symbol_count() + two.squares[2].symbol_count() == 9);
  o.order = 3;
  o.min_symbols = o.max_symbols = 3;
  CHECK(enumerate_squares(o).squares.size() == 1);
}

TEST_CASE("enumeration matches canonical forms of all labeled squares") {
  for (int n = 1; n <= 3; ++n) {
    std::set<std::vector<int>> classes;
    oracle::for_each_square(n, [&](const Square& s) { classes.insert(ids(canonical_form(s))); });
    EnumerationOptions o;
    o.order = n;
    const auto res = enumerate_squares(o);
    CHECK(res.complete);
    std::set<std::vector<int>> got;
    for (const auto& s : res.squares) {
      CHECK(is_canonical(s));
      got.insert(ids(s));
    }
    CHECK(got.size() == res.squares.size());
    CHECK(got == classes);
  }
}

TEST_CASE("order 4 enumeration: canonical, distinct, complete on samples, job independent") {
  EnumerationOptions o;
  o.order = 4;
  const auto res = enumerate_squares(o);
  CHECK(res.complete);
  std::set<std::vector<int>> got;
  for (const auto& s : res.squares) got.insert(ids(s));
  CHECK(got.size() == res.squares.size());
  for (std::size_t i = 0; i < res.squares.size(); i += 97) CHECK(canonical_form(res.squares[i]) == res.squares[i]);

  Rng rng(2);
  for (int iter = 0; iter < 300; ++iter) {
    const Square s = rng.coin() ? oracle::random_square(4, rng) : random_gls(4, rng.between(4, 16), rng.next());
    CHECK(got.count(ids(canonical_form(s))) == 1);
  }

  o.jobs = 4;
  const auto par = enumerate_squares(o);
  CHECK(par.squares == res.squares);
}

TEST_CASE("enumeration with an LLL prefix filter keeps exactly the certified classes") {
  EnumerationOptions o;
  o.order = 4;
  const auto all = enumerate_squares(o);
  std::set<std::vector<int>> certified;
  for (const auto& s : all.squares)
    if (lll_certificate(s).certified) certified.insert(ids(s));
  o.filter = lll_certifiable_prefix;
  const auto filtered = enumerate_squares(o);
  std::set<std::vector<int>> got;
  for (const auto& s : filtered.squares)
    if (lll_certificate(s).certified) got.insert(ids(s));
  CHECK(got == certified);
  CHECK(certified.size() > 0);
}

TEST_CASE("enumeration budget marks the result incomplete") {
  EnumerationOptions o;
  o.order = 4;
  o.max_nodes = 1000;
  CHECK_FALSE(enumerate_squares(o).complete);
  o.max_nodes = 0;
  o.order = 9;
  CHECK_THROWS_AS(enumerate_squares(o), PreconditionViolated);
}

TEST_CASE("l(n) for n <= 4") {
  const int expected[] = {0, 1, 3, 3, 6};
  for (int n = 1; n <= 4; ++n) {
    const LNumberResult r = compute_l(n);
    CHECK(r.exhaustive);
    CHECK(r.value == expected[n]);
    if (r.witness) {
      CHECK(r.witness->symbol_count() == r.raw_value - 1);
      CHECK(oracle::count_transversals(*r.witness) == 0);
    }
  }
  CHECK(compute_l(3).raw_value == 1);
  CHECK_FALSE(compute_l(3).witness);
  const LNumberResult l2 = compute_l(2);
  REQUIRE(l2.witness);
  CHECK(canonical_form(*l2.witness) == canonical_form(cyclic_square(2)));
}

TEST_CASE("l(n) agrees with brute force over labeled squares for n <= 3") {
  for (int n = 1; n <= 3; ++n) {
    int worst = 0;
    oracle::for_each_square(n, [&](const Square& s) {
      if (!oracle::has_transversal(s)) worst = std::max(worst, s.symbol_count());
    });
    CHECK(compute_l(n).raw_value == worst + 1);
  }
}

TEST_CASE("l*(n) for small n") {
  CHECK(compute_l_star(1).value == 1);
  const LNumberResult l2 = compute_l_star(2);
  CHECK(l2.exhaustive);
  CHECK(l2.value == 4);
  REQUIRE(l2.witness);
  CHECK(l2.witness->symbol_count() == 3);

  for (int n = 2; n <= 3; ++n) {
    int worst = 0;
    oracle::for_each_square(n, [&](const Square& s) {
      if (!decomposable_brute(s)) worst = std::max(worst, s.symbol_count());
    });
    const LNumberResult r = compute_l_star(n);
    CHECK(r.raw_value == worst + 1);
    REQUIRE(r.witness);
    CHECK_FALSE(decomposable_brute(*r.witness));
  }
}

TEST_CASE("random Latin squares") {
  Rng rng(10);
  for (int n = 1; n <= 12; ++n) {
    const Square s = random_latin_square(n, rng);
    CHECK(s.symbol_count() == n);
  }
  // All 12 Latin squares of order 3 show up with roughly equal frequency.
  std::map<std::vector<Symbol>, int> seen;
  for (int i = 0; i < 6000; ++i) {
    const Square s = random_latin_square(3, rng);
    ++seen[std::vector<Symbol>(s.labels().begin(), s.labels().end())];
  }
  CHECK(seen.size() == 12);
  for (const auto& [k, v] : seen) CHECK(v > 300);
}

TEST_CASE("random_gls") {
  Rng rng(1);
  for (int iter = 0; iter < 500; ++iter) {
    const int n = rng.between(1, 10);
    const int k = rng.between(n, n * n);
    const std::uint64_t seed = rng.next();
    const Square s = random_gls(n, k, seed);
    CHECK(s.symbol_count() == k);
    CHECK(s == random_gls(n, k, seed));
  }
  CHECK_THROWS_AS(random_gls(4, 3, 1), InfeasibleParams);
  CHECK_THROWS_AS(random_gls(4, 17, 1), InfeasibleParams);
}

TEST_CASE("multiplicity split squares") {
  for (int n = 2; n <= 8; ++n)
    for (int r = 0; r <= n; ++r) {
      const Square s = multiplicity_split_square(n, r, 100 + n + r);
      const SymbolStats st = compute_stats(s);
      CHECK(st.histogram[n] == r);
      CHECK(static_cast<int>(st.singletons.size()) == (n - r) * n);
    }
}

TEST_CASE("lstar_gap") {
  const LNumberResult l4 = compute_l(4);
  REQUIRE(l4.witness);
  const Square gap = lstar_gap(*l4.witness);
  CHECK(gap.symbol_count() == l4.value + 4 - 2);
  const Decomposition d = decompose_into_transversals(gap);
  CHECK_FALSE(d.feasible);
  CHECK(d.max_disjoint < 4);
  CHECK(find_transversal_exact(gap).outcome == Outcome::Found);

  const Square z4 = cyclic_square(4);
  const Square z4gap = lstar_gap(z4);
  CHECK(z4gap.symbol_count() == 7);
  CHECK_FALSE(decompose_into_transversals(z4gap).feasible);

  CHECK_THROWS_AS(lstar_gap(cyclic_square(3)), PreconditionViolated);  // has a transversal
  CHECK_THROWS_AS(lstar_gap(cyclic_square(2)), PreconditionViolated);  // n < 3

  // Every transversal-free class of order 4 yields a non-decomposable square.
  EnumerationOptions o;
  o.order = 4;
  for (const Square& s : enumerate_squares(o).squares) {
    if (find_transversal_exact(s).outcome == Outcome::Found) continue;
    const Square g = lstar_gap(s);
    CHECK(g.symbol_count() == s.symbol_count() + 3);
    CHECK_FALSE(decompose_into_transversals(g, false).feasible);
  }
}

TEST_CASE("recolor_fresh") {
  const Square z3 = cyclic_square(3);
  const Square r = recolor_fresh(z3, std::vector<CellRef>{{0, 0}, {1, 1}});
  CHECK(r.symbol_count() == 5);
  CHECK_THROWS_AS(recolor_fresh(z3, std::vector<CellRef>{{0, 0}, {0, 0}}), InfeasibleParams);
  CHECK_THROWS_AS(recolor_fresh(z3, std::vector<CellRef>{{3, 0}}), OutOfRange);
}

TEST_CASE("hunt stays transversal-free and is reproducible") {
  const HuntResult a = hunt_transversal_free(cyclic_square(6), 5, 200);
  CHECK(find_transversal_exact(a.best).outcome == Outcome::NotFound);
  CHECK(a.best.symbol_count() >= 6);
  const HuntResult b = hunt_transversal_free(cyclic_square(6), 5, 200);
  CHECK(a.best == b.best);
  const HuntResult four = hunt_transversal_free(cyclic_square(4), 3, 300);
  CHECK(four.best.symbol_count() <= 5);  // l(4) = 6
  CHECK_THROWS_AS(hunt_transversal_free(cyclic_square(3), 1, 10), PreconditionViolated);
}

TEST_CASE("edge-colored graph format") {
  std::istringstream in("# K3\n3\n1 2 5\n1 3 6\n2 3 7\n");
  const EdgeColoredGraph g = parse_graph(in);
  CHECK(g.vertex_count() == 3);
  CHECK(g.color_count() == 3);
  CHECK(g.color(1, 0) == 5);
  std::ostringstream out;
  write_graph(out, g);
  CHECK(out.str() == "3\n1 2 0\n1 3 1\n2 3 2\n");

  auto err = [](const std::string& text) -> std::string {
    std::istringstream s(text);
    try {
      parse_graph(s);
    } catch (const ParseError& e) {
      return e.what();
    } catch (const NotProper& e) {
      return std::string("NotProper: ") + e.what();
    }
    return "no error";
  };
  CHECK(err("3\n1 2 0\n1 3 1\n") == "line 3, column 1: expected 3 edges, got 2");
  CHECK(err("3\n1 2 0\n2 1 1\n2 3 2\n") == "line 3, column 1: duplicate edge");
  CHECK(err("3\n1 1 0\n") == "line 2, column 3: loop edge");
  CHECK(err("3\n1 4 0\n") == "line 2, column 3: vertex out of range");
  CHECK(err("3\n1 2 0\n1 3 0\n2 3 1\n").rfind("NotProper: vertex 1", 0) == 0);
}

TEST_CASE("proper colorings") {
  const auto k4 = enumerate_proper_colorings(4);
  std::vector<EdgeColoredGraph> three;
  for (const auto& g : k4)
    if (g.color_count() == 3) three.push_back(g);
  REQUIRE(three.size() == 1);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const EdgeColoredGraph g = proper_coloring(4, 3, seed);
    std::vector<Color> ids_g, ids_ref;
    for (int u = 0; u < 4; ++u)
      for (int v = u + 1; v < 4; ++v) {
        ids_g.push_back(g.color_id(u, v));
        ids_ref.push_back(three[0].color_id(u, v));
      }
    CHECK(ids_g == ids_ref);
  }
  Rng rng(4);
  for (int iter = 0; iter < 300; ++iter) {
    const int m = rng.between(2, 12);
    const int lo = m % 2 == 0 ? m - 1 : m;
    const int hi = m * (m - 1) / 2;
    const int colors = rng.between(std::min(lo, hi), hi);
    const std::uint64_t seed = rng.next();
    const EdgeColoredGraph g = proper_coloring(m, colors, seed);
    CHECK(g.color_count() == colors);
    CHECK(g == proper_coloring(m, colors, seed));
  }
  CHECK_THROWS_AS(proper_coloring(6, 4, 1), InfeasibleParams);
  CHECK_THROWS_AS(proper_coloring(6, 16, 1), InfeasibleParams);
  // Up to renaming: K_3 has one coloring; in K_4 a color class is a single
  // edge or one of the 3 perfect matchings, so 2^3 colorings.
  CHECK(enumerate_proper_colorings(3).size() == 1);
  CHECK(k4.size() == 8);
}

TEST_CASE("anti-Ramsey reduction") {
  std::istringstream in("3\n1 2 0\n1 3 1\n2 3 2\n");
  const EdgeColoredGraph g = parse_graph(in);
  const Square s = antiramsey_reduce(g);
  CHECK(s.rows() == std::vector<std::vector<Symbol>>{{3, 0, 1}, {0, 3, 2}, {1, 2, 3}});
  CHECK(s.symbol_count() == g.color_count() + 1);
}

TEST_CASE("reduction round trip on all colorings of K_4 and K_5") {
  for (int m = 4; m <= 5; ++m) {
    for (const auto& g : enumerate_proper_colorings(m)) {
      const Square s = antiramsey_reduce(g);
      CHECK(s.symbol_count() == g.color_count() + 1);
      for (const auto& t : all_transversals(s)) {
        const TwoFactorExtraction ex = extract_two_factor(t, g);
        CHECK(ex.ok(m));
        int diag = 0;
        for (const auto& c : t) diag += c.row == c.col ? 1 : 0;
        CHECK(static_cast<int>(ex.edges.size()) == m - diag);
      }
    }
  }
  const EdgeColoredGraph g = proper_coloring(4, 3, 0);
  CHECK_THROWS_AS(extract_two_factor(std::vector<CellRef>{{0, 0}, {1, 1}}, g), PreconditionViolated);
}

TEST_CASE("rainbow 1-factor search against brute force") {
  const EdgeColoredGraph k4 = proper_coloring(4, 3, 0);
  CHECK_FALSE(rainbow_factor_search(k4, 1, 4).found);
  CHECK_THROWS_AS(rainbow_factor_search(proper_coloring(5, 5, 0), 1, 5), OddVertices);

  Rng rng(44);
  for (int iter = 0; iter < 300; ++iter) {
    const int m = 2 * rng.between(1, 4);
    const int hi = m * (m - 1) / 2;
    const EdgeColoredGraph g = proper_coloring(m, rng.between(std::min(m - 1, hi), hi), rng.next());
    // Brute force: pair vertex 0 with every partner, recurse.
    std::vector<char> used_v(m, 0);
    std::set<Color> used_c;
    auto brute = [&](auto&& self) -> bool {
      int v = 0;
      while (v < m && used_v[v]) ++v;
      if (v == m) return true;
      used_v[v] = 1;
      for (int w = 0; w < m; ++w) {
        if (used_v[w] || used_c.count(g.color(v, w))) continue;
        used_v[w] = 1;
        used_c.insert(g.color(v, w));
        if (self(self)) return true;
        used_c.erase(g.color(v, w));
        used_v[w] = 0;
      }
      used_v[v] = 0;
      return false;
    };
    const RainbowFactorResult r = rainbow_factor_search(g, 1, m);
    CHECK(r.found == brute(brute));
    if (r.found) {
      REQUIRE(r.edges.size() == static_cast<std::size_t>(m / 2));
      std::set<int> verts;
      std::set<Color> colors;
      for (const auto& e : r.edges) {
        verts.insert(e.u);
        verts.insert(e.v);
        colors.insert(g.color(e.u, e.v));
      }
      CHECK(verts.size() == static_cast<std::size_t>(m));
      CHECK(colors.size() == r.edges.size());
    }
  }
}

TEST_CASE("rainbow 2-factor search against subset enumeration") {
  Rng rng(45);
  for (int iter = 0; iter < 120; ++iter) {
    const int m = rng.between(3, 6);
    const int hi = m * (m - 1) / 2;
    const int lo = m % 2 == 0 ? m - 1 : m;
    const EdgeColoredGraph g = proper_coloring(m, rng.between(lo, hi), rng.next());
    const int min_vertices = rng.between(std::max(3, m - 2), m);
    std::vector<Edge> edges;
    for (int u = 0; u < m; ++u)
      for (int v = u + 1; v < m; ++v) edges.push_back({u, v});
    bool expected = false;
    for (std::uint32_t mask = 1; mask < (1u << edges.size()) && !expected; ++mask) {
      std::vector<int> deg(m, 0);
      std::set<Color> colors;
      bool ok = true;
      for (std::size_t i = 0; i < edges.size() && ok; ++i) {
        if (!((mask >> i) & 1u)) continue;
        ++deg[edges[i].u];
        ++deg[edges[i].v];
        ok = colors.insert(g.color(edges[i].u, edges[i].v)).second;
      }
      int covered = 0;
      for (int d : deg) {
        ok = ok && (d == 0 || d == 2);
        covered += d ? 1 : 0;
      }
      expected = ok && covered >= min_vertices;
    }
    const RainbowFactorResult r = rainbow_factor_search(g, 2, min_vertices);
    CHECK(r.found == expected);
    if (r.found) {
      std::vector<int> deg(m, 0);
      std::set<Color> colors;
      for (const auto& e : r.edges) {
        ++deg[e.u];
        ++deg[e.v];
        colors.insert(g.color(e.u, e.v));
      }
      CHECK(colors.size() == r.edges.size());
      int covered = 0;
      for (int d : deg) {
        CHECK((d == 0 || d == 2));
        covered += d ? 1 : 0;
      }
      CHECK(covered >= min_vertices);
    }
  }
}
