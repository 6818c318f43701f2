#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rgconj/error.hpp"
#include "rgconj/rado.hpp"

using namespace rgconj;

namespace {

bool realises(Nat w, const std::vector<Nat>& U, const std::vector<Nat>& V) {
  for (Nat u : U)
    if (u == w || !oracle::bit_string_adj(u, w)) return false;
  for (Nat v : V)
    if (v == w || oracle::bit_string_adj(v, w)) return false;
  return true;
}

}  // namespace

TEST_CASE("adjacency matches the bit-string oracle") {
  CHECK(oracle::bit_string_adj(0, 1));
  CHECK_FALSE(oracle::bit_string_adj(0, 2));
  CHECK(oracle::bit_string_adj(2, 5));
  for (Nat a = 0; a < 200; ++a)
    for (Nat b = 0; b < 200; ++b) CHECK(rado_adj(a, b) == oracle::bit_string_adj(a, b));
  CHECK(rado_adj(Wide{1} << 100 | 1, 0));
  CHECK_FALSE(rado_adj(5, 5));
}

TEST_CASE("closed-form witness") {
  const std::vector<Nat> U{0, 1}, V{2};
  const Wide w = rado_witness(U, V);
  REQUIRE(w < 64);
  CHECK(realises(static_cast<Nat>(w), U, V));
  CHECK(w == 11);
  CHECK(rado_witness(std::vector<Nat>{}, std::vector<Nat>{}) == 2);
  try {
    (void)rado_witness(std::vector<Nat>{0}, std::vector<Nat>{0});
    FAIL("expected OverlappingSets");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OverlappingSets);
  }
  CHECK_FALSE(rado_witness_nat(std::vector<Nat>{70}, std::vector<Nat>{}).has_value());
}

TEST_CASE("least witness is least among brute-force realisers") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Nat> pool(14);
    std::iota(pool.begin(), pool.end(), Nat{0});
    std::shuffle(pool.begin(), pool.end(), rng);
    const std::size_t nu = rng() % 3, nv = rng() % 3;
    std::vector<Nat> U(pool.begin(), pool.begin() + nu), V(pool.begin() + nu, pool.begin() + nu + nv);
    std::optional<Nat> brute;
    for (Nat w = 0; w < 1 << 16 && !brute; ++w)
      if (realises(w, U, V)) brute = w;
    CHECK(rado_least_witness(U, V, 1 << 16) == brute);
  }
}
