#pragma once

// Independent reference computations used to derive expected values in
// tests. Nothing here calls into the library's algorithms.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rgconj/oracle.hpp"

namespace oracle {

using Nat = std::uint64_t;
using Edges = std::vector<std::pair<Nat, Nat>>;
using Q = boost::multiprecision::cpp_rational;

/// Cantor code by walking the diagonals one cell at a time.
inline Nat walk_pair(Nat i, Nat j) {
  Nat code = 0;
  for (Nat d = 0; d < i + j; ++d) code += d + 1;
  return code + j;
}

/// Adjacency in the bit graph read off a binary string.
inline bool bit_string_adj(Nat a, Nat b) {
  if (a == b) return false;
  const Nat lo = std::min(a, b), hi = std::max(a, b);
  std::string bits;
  for (Nat v = hi; v != 0; v /= 2) bits.push_back(v % 2 ? '1' : '0');
  return lo < bits.size() && bits[lo] == '1';
}

/// Positive Calkin-Wilf terms via Newman's recurrence x' = 1/(2 floor(x) - x + 1).
inline std::vector<Q> newman_terms(std::size_t count) {
  std::vector<Q> out;
  Q x(1);
  for (std::size_t k = 0; k < count; ++k) {
    out.push_back(x);
    const auto fl = numerator(x) / denominator(x);
    x = Q(1) / (Q(2 * fl) - x + 1);
  }
  return out;
}

/// The first `count` rationals of the sign-interleaved enumeration.
inline std::vector<Q> enumerate_rationals(std::size_t count) {
  const auto pos = newman_terms(count);
  std::vector<Q> out{Q(0)};
  for (std::size_t m = 0; out.size() < count; ++m) {
    out.push_back(pos[m]);
    if (out.size() < count) out.push_back(-pos[m]);
  }
  return out;
}

/// All i-per-row choice sets over rows 0..i-1 with total column sum <= max_sum,
/// sorted by (sum, lexicographic concatenation).
inline std::vector<std::vector<std::vector<Nat>>> brute_choice_sets(Nat i, Nat max_sum) {
  std::vector<std::vector<Nat>> subsets;  // i-subsets of columns with sum <= max_sum
  std::vector<Nat> current;
  auto grow = [&](auto&& self, Nat next, Nat sum) -> void {
    if (current.size() == i) {
      subsets.push_back(current);
      return;
    }
    for (Nat c = next; sum + c <= max_sum; ++c) {
      current.push_back(c);
      self(self, c + 1, sum + c);
      current.pop_back();
    }
  };
  grow(grow, 0, 0);
  auto sum_of = [](const std::vector<Nat>& v) { return std::accumulate(v.begin(), v.end(), Nat{0}); };
  std::vector<std::vector<std::vector<Nat>>> out;
  std::vector<std::vector<Nat>> rows;
  auto pick = [&](auto&& self, Nat sum) -> void {
    if (rows.size() == i) {
      out.push_back(rows);
      return;
    }
    for (const auto& s : subsets) {
      if (sum + sum_of(s) > max_sum) continue;
      rows.push_back(s);
      self(self, sum + sum_of(s));
      rows.pop_back();
    }
  };
  pick(pick, 0);
  auto key = [&](const std::vector<std::vector<Nat>>& r) {
    std::vector<Nat> flat;
    Nat total = 0;
    for (const auto& row : r)
      for (Nat c : row) flat.push_back(c), total += c;
    return std::make_pair(total, flat);
  };
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
  return out;
}

/// Full-permutation isomorphism test with no pruning.
inline std::optional<std::vector<Nat>> naive_iso(Nat n, const Edges& x, const Edges& y) {
  std::set<std::pair<Nat, Nat>> ey;
  for (auto [a, b] : y) ey.insert({std::min(a, b), std::max(a, b)});
  if (x.size() != y.size()) return std::nullopt;
  std::vector<Nat> perm(n);
  std::iota(perm.begin(), perm.end(), Nat{0});
  do {
    bool ok = true;
    for (auto [a, b] : x) {
      const Nat pa = perm[a], pb = perm[b];
      if (!ey.count({std::min(pa, pb), std::max(pa, pb)})) {
        ok = false;
        break;
      }
    }
    if (ok) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

/// Cycle lengths of a permutation of {0..n-1} given as a vector.
inline std::map<Nat, Nat> cycle_lengths(const std::vector<Nat>& perm) {
  std::map<Nat, Nat> out;
  std::vector<bool> seen(perm.size(), false);
  for (Nat s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    Nat len = 0;
    for (Nat k = s; !seen[k]; k = perm[k]) seen[k] = true, ++len;
    ++out[len];
  }
  return out;
}

struct CorpusGraph {
  std::string name;
  Nat n;
  Edges edges;
};

/// Twelve graphs on at most five vertices. Contains permuted copies and
/// non-isomorphic pairs sharing a degree sequence.
inline std::vector<CorpusGraph> graph_corpus() {
  return {
      {"empty3", 3, {}},
      {"edge_plus_isolated", 3, {{0, 1}}},
      {"edge_shifted", 3, {{1, 2}}},
      {"path3", 3, {{0, 1}, {1, 2}}},
      {"triangle", 3, {{0, 1}, {1, 2}, {0, 2}}},
      {"path4", 4, {{0, 1}, {1, 2}, {2, 3}}},
      {"path4_permuted", 4, {{2, 0}, {0, 3}, {3, 1}}},
      {"star4", 4, {{0, 1}, {0, 2}, {0, 3}}},
      // degree sequence 2,2,2,1,1 twice: path on five vs triangle plus an edge
      {"path5", 5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}},
      {"triangle_plus_edge", 5, {{0, 1}, {1, 2}, {0, 2}, {3, 4}}},
      {"bull", 5, {{0, 1}, {1, 2}, {0, 2}, {1, 3}, {2, 4}}},
      {"bull_permuted", 5, {{4, 2}, {2, 0}, {4, 0}, {2, 1}, {0, 3}}},
  };
}

inline rgconj::GraphOracle to_oracle(const CorpusGraph& g) {
  return rgconj::GraphOracle::finite(g.n, g.edges);
}

}  // namespace oracle
