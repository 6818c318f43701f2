#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rgconj/error.hpp"
#include "rgconj/invariants.hpp"

using namespace rgconj;

namespace {

StagedMap finite_support(const std::vector<Nat>& perm) {
  return StagedMap::from_bijection([perm](Nat k) { return k < perm.size() ? perm[k] : k; },
                                   [perm](Nat v) {
                                     for (Nat k = 0; k < perm.size(); ++k)
                                       if (perm[k] == v) return k;
                                     return v;
                                   });
}

}  // namespace

TEST_CASE("cycle type examples") {
  const auto id = cycle_type(StagedMap::identity(), 10);
  CHECK(id.resolved == std::map<Nat, Nat>{{1, 10}});
  CHECK(id.open_threads == 0);
  const auto t = cycle_type(finite_support({1, 0}), 10);
  CHECK(t.resolved == std::map<Nat, Nat>{{1, 8}, {2, 1}});
  CHECK(t.open_threads == 0);
  CHECK(format_cycle_type(t) == "cycles 1:8 2:1 open 0");
  const auto shift = StagedMap::from_bijection([](Nat k) { return k + 1; }, [](Nat k) { return k - 1; });
  const auto s = cycle_type(shift, 10, 20);
  CHECK(s.resolved.empty());
  CHECK(s.open_threads == 1);
  CHECK(s.open_points == 10);
  try {
    (void)cycle_type(StagedMap::from_pairs({{0, 1}}), 3);
    FAIL("expected Unresolved");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Unresolved);
  }
}

TEST_CASE("cycle type matches direct orbit counting and refines monotonically") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Nat> perm(1 + rng() % 12);
    std::iota(perm.begin(), perm.end(), Nat{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto f = finite_support(perm);
    auto expected = oracle::cycle_lengths(perm);
    expected[1] += 20 - perm.size();
    const auto full = cycle_type(f, 20);
    CHECK(full.resolved == expected);
    CHECK(full.open_threads == 0);
    const Nat prefix = 1 + rng() % perm.size();
    const auto part = cycle_type(f, prefix);
    for (auto [len, count] : part.resolved) CHECK(count <= full.resolved.at(len));
    Nat points = part.open_points;
    for (auto [len, count] : part.resolved) points += len * count;
    CHECK(points == prefix);
  }
}

TEST_CASE("brute-force isomorphism") {
  const auto tri = GraphOracle::finite(3, {{0, 1}, {1, 2}, {0, 2}});
  const auto path = GraphOracle::finite(3, {{0, 1}, {1, 2}});
  const auto id = graph_iso_bruteforce(tri, tri);
  REQUIRE(id.has_value());
  CHECK(*id == std::vector<MapPair>{{0, 0}, {1, 1}, {2, 2}});
  CHECK_FALSE(graph_iso_bruteforce(path, tri).has_value());
  CHECK(graph_iso_search(path, tri).reason == "degree multisets differ");
  try {
    (void)graph_iso_bruteforce(GraphOracle::finite(10, {}), GraphOracle::finite(10, {}));
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TooLarge);
  }
}

TEST_CASE("brute force agrees with the unpruned oracle on the corpus") {
  const auto corpus = oracle::graph_corpus();
  for (const auto& gx : corpus)
    for (const auto& gy : corpus) {
      const Nat n = std::max(gx.n, gy.n);
      const auto expected = oracle::naive_iso(n, gx.edges, gy.edges);
      const auto got = graph_iso_bruteforce(oracle::to_oracle(gx), oracle::to_oracle(gy));
      INFO(gx.name << " vs " << gy.name);
      REQUIRE(got.has_value() == expected.has_value());
      CHECK(graph_iso_bruteforce(oracle::to_oracle(gy), oracle::to_oracle(gx)).has_value() == got.has_value());
      if (got)
        for (auto [k, v] : *got) CHECK(v == (*expected)[k]);
    }
}
