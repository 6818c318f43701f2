#pragma once

#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rgconj/oracle.hpp"
#include "rgconj/staged_map.hpp"

namespace rgconj {

/// Cycle structure of a permutation seen through a finite prefix.
///
/// Cycles closing inside the prefix are resolved; every other prefix point
/// lies on an open thread (a maximal run of the orbit inside the prefix).
/// A thread may be part of a long finite cycle or of an infinite orbit.
struct CycleType {
  std::map<Nat, Nat> resolved;  // cycle length -> count
  Nat open_threads = 0;
  Nat open_points = 0;

  friend bool operator==(const CycleType&, const CycleType&) = default;
};

/// Follows orbits of f on {0..prefix-1}, evaluated at `stage` (default:
/// stage = prefix). Throws Unresolved if f is undefined on a prefix point.
CycleType cycle_type(const StagedMap& f, Nat prefix, std::optional<Stage> stage = std::nullopt);

/// `cycles k:count ... open m`
std::string format_cycle_type(const CycleType& type);

struct IsoSearch {
  std::optional<std::vector<MapPair>> isomorphism;
  Nat nodes = 0;
  bool budget_hit = false;
  std::string reason;
};

/// Exhaustive search over bijections of {0..N-1}, N the larger declared
/// size, with degree pruning. The first isomorphism in lexicographic order
/// of images wins. Throws TooLarge for N > 9.
IsoSearch graph_iso_search(const GraphOracle& x, const GraphOracle& y,
                           Nat budget = std::numeric_limits<Nat>::max());

std::optional<std::vector<MapPair>> graph_iso_bruteforce(const GraphOracle& x, const GraphOracle& y);

}  // namespace rgconj
