#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rgconj/delta.hpp"
#include "rgconj/error.hpp"

using namespace rgconj;

namespace {

// Delta adjacency from first principles, using brute-force enumeration for
// row-2 choice sets.
bool reference_adj(const GraphOracle& x, VertexCode u, VertexCode v,
                   const std::vector<std::vector<std::vector<Nat>>>& row2) {
  if (u == v) return false;
  if (u.row > v.row) std::swap(u, v);
  if (v.row <= 1) {
    if (u.row == v.row) return x.adj(u.column, v.column);
    return u.column == v.column;
  }
  if (u.row == v.row) return false;
  REQUIRE(v.row == 2);
  REQUIRE(v.column < row2.size());
  const auto& row = row2[v.column][u.row];
  return std::find(row.begin(), row.end(), u.column) != row.end();
}

}  // namespace

TEST_CASE("rows 0 and 1 copy x and are matched") {
  const auto x = GraphOracle::finite(2, {{0, 1}});
  CHECK(delta_adj(x, {0, 0}, {0, 1}));
  CHECK(delta_adj(x, {1, 0}, {1, 1}));
  CHECK(delta_adj(x, {0, 7}, {1, 7}));
  CHECK_FALSE(delta_adj(x, {0, 7}, {1, 8}));
  for (Nat n = 0; n < 30; ++n)
    for (Nat m = 0; m < 30; ++m) CHECK_FALSE(delta_adj(x, {2, n}, {2, m}));
}

TEST_CASE("adjacency agrees with a first-principles reference") {
  const auto row2 = oracle::brute_choice_sets(2, 9);
  for (const auto& g : oracle::graph_corpus()) {
    const auto x = oracle::to_oracle(g);
    for (Nat r1 = 0; r1 < 3; ++r1)
      for (Nat r2 = 0; r2 < 3; ++r2)
        for (Nat c1 = 0; c1 < 8; ++c1)
          for (Nat c2 = 0; c2 < 8; ++c2) {
            const VertexCode u{r1, c1}, v{r2, c2};
            CHECK(delta_adj(x, u, v) == reference_adj(x, u, v, row2));
            CHECK(delta_adj(x, u, v) == delta_adj(x, v, u));
          }
  }
}

TEST_CASE("witness examples") {
  const std::vector<VertexCode> none;
  CHECK(delta_witness(std::vector<VertexCode>{{0, 0}, {1, 0}}, none) == WideVertex{2, 0});
  const auto w = delta_witness(none, std::vector<VertexCode>{{0, 5}});
  CHECK(w == WideVertex{2, 0});
  CHECK_FALSE(delta_adj_wide(GraphOracle::finite(1, {}), VertexCode{0, 5}, w));
  try {
    (void)delta_witness(std::vector<VertexCode>{{0, 0}}, std::vector<VertexCode>{{0, 0}});
    FAIL("expected OverlappingSets");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OverlappingSets);
  }
}

TEST_CASE("witnesses realise random types") {
  std::mt19937_64 rng(3);
  const auto x = GraphOracle::finite(4, {{0, 1}, {1, 2}, {2, 3}});
  for (int trial = 0; trial < 300; ++trial) {
    std::set<Nat> codes;
    const std::size_t size = rng() % 9;
    while (codes.size() < size) codes.insert(rng() % 100);
    std::vector<VertexCode> U, V;
    for (Nat c : codes) (rng() % 2 ? U : V).push_back(unpair(c));
    const WideVertex w = delta_witness(U, V);
    for (auto u : U) CHECK(delta_adj_wide(x, u, w));
    for (auto v : V) CHECK_FALSE(delta_adj_wide(x, v, w));
  }
}

TEST_CASE("exactly one row-2 vertex per choice of 2+2 vertices") {
  const auto all = oracle::brute_choice_sets(2, 12);
  std::map<std::vector<std::vector<Nat>>, Nat> seen;
  for (const auto& rows : all) ++seen[rows];
  for (const auto& [rows, count] : seen) CHECK(count == 1);
  const auto x = GraphOracle::finite(1, {});
  const std::vector<std::vector<Nat>> target{{1, 4}, {0, 2}};
  const Nat n = choice_index(2, target);
  Nat matches = 0;
  for (Nat m = 0; m <= n + 50; ++m) {
    bool same = true;
    for (Nat r = 0; r < 2; ++r)
      for (Nat c = 0; c < 6; ++c) {
        const bool in = std::find(target[r].begin(), target[r].end(), c) != target[r].end();
        same = same && delta_adj(x, {2, m}, {r, c}) == in;
      }
    matches += same;
  }
  CHECK(matches == 1);
}

TEST_CASE("swap on small codes") {
  CHECK(swap_vertex({0, 5}) == VertexCode{1, 5});
  CHECK(swap_vertex({1, 5}) == VertexCode{0, 5});
  CHECK(swap_vertex({2, 0}) == VertexCode{2, 0});
  // row 2 swaps the two column lists: ({0,1},{0,2}) <-> ({0,2},{0,1})
  const auto all = oracle::brute_choice_sets(2, 8);
  for (Nat n = 0; n < all.size(); ++n) {
    const std::vector<std::vector<Nat>> swapped{all[n][1], all[n][0]};
    const auto it = std::find(all.begin(), all.end(), swapped);
    REQUIRE(it != all.end());
    CHECK(swap_vertex({2, n}) == VertexCode{2, static_cast<Nat>(it - all.begin())});
  }
  for (Nat c = 0; c < 10; ++c) CHECK(swap_code(swap_code(c)) == c);
}

TEST_CASE("images past 64 bits are reported") {
  try {
    (void)swap_code(10);  // (4,0): rank of the image is about 3e13, its code overflows
    FAIL("expected Overflow");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Overflow);
  }
}

TEST_CASE("structural swap is an x-independent involutive automorphism") {
  VertexPool pool(true, [](Nat c) { return c; });
  for (Nat c = 0; c < 2000; ++c) {
    const auto v = VertexPool::coded(unpair(c));
    CHECK(pool.image(pool.image(v)) == v);
  }
  CHECK(pool.image(VertexPool::coded({3, 1})) == VertexPool::coded({3, 84}));
  for (const auto& g : oracle::graph_corpus()) {
    const auto x = oracle::to_oracle(g);
    for (Nat a = 0; a < 150; ++a)
      for (Nat b = a + 1; b < 150; ++b) {
        const auto u = VertexPool::coded(unpair(a)), v = VertexPool::coded(unpair(b));
        CHECK(delta_adj_code(x, a, b) == pool.adj(x, pool.image(u), pool.image(v)));
        CHECK(delta_adj_code(x, a, b) == pool.adj(x, u, v));
      }
  }
}

TEST_CASE("row lifts of graph isomorphisms carry adjacency across") {
  // a: path 0-1-2 onto path 1-0-2 (centre moves from 1 to 0)
  const auto x = GraphOracle::finite(3, {{0, 1}, {1, 2}});
  const auto y = GraphOracle::finite(3, {{1, 0}, {0, 2}});
  const std::vector<Nat> a{1, 0, 2};
  VertexPool lift(false, [a](Nat j) { return j < a.size() ? a[j] : j; });
  for (Nat u = 0; u < 120; ++u)
    for (Nat v = u + 1; v < 120; ++v) {
      const auto pu = VertexPool::coded(unpair(u)), pv = VertexPool::coded(unpair(v));
      CHECK(delta_adj_code(x, u, v) == lift.adj(y, lift.image(pu), lift.image(pv)));
    }
}
