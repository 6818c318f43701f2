#include "rgconj/invariants.hpp"

#include <algorithm>
#include <string>

namespace rgconj {

CycleType cycle_type(const StagedMap& f, Nat prefix, std::optional<Stage> stage) {
  const Stage at = stage.value_or(prefix);
  std::vector<Nat> next(prefix);
  for (Nat k = 0; k < prefix; ++k) {
    const auto v = f.lookup(k, at);
    if (!v) throw Error(ErrorKind::Unresolved, "no value at " + std::to_string(k) + " by stage " + std::to_string(at));
    next[k] = *v;
  }
  std::vector<bool> has_predecessor(prefix, false);
  for (Nat k = 0; k < prefix; ++k) {
    if (next[k] < prefix) has_predecessor[next[k]] = true;
  }
  // f is injective, so a walk from a point off every cycle can never enter
  // one; the first walk touching a cycle starts on it and covers it.
  CycleType out;
  std::vector<bool> visited(prefix, false);
  std::vector<bool> on_cycle(prefix, false);
  for (Nat k = 0; k < prefix; ++k) {
    if (visited[k]) continue;
    std::vector<Nat> walk{k};
    visited[k] = true;
    Nat current = next[k];
    while (current < prefix && current != k && !visited[current]) {
      visited[current] = true;
      walk.push_back(current);
      current = next[current];
    }
    if (current == k) {
      ++out.resolved[walk.size()];
      for (Nat v : walk) on_cycle[v] = true;
    }
  }
  for (Nat k = 0; k < prefix; ++k) {
    if (on_cycle[k]) continue;
    ++out.open_points;
    if (!has_predecessor[k]) ++out.open_threads;
  }
  return out;
}

std::string format_cycle_type(const CycleType& type) {
  std::string out = "cycles";
  for (auto [length, count] : type.resolved) {
    out += " " + std::to_string(length) + ":" + std::to_string(count);
  }
  out += " open " + std::to_string(type.open_threads);
  return out;
}

namespace {

struct IsoDfs {
  Nat n;
  const GraphOracle& x;
  const GraphOracle& y;
  const std::vector<Nat>& degree_x;
  const std::vector<Nat>& degree_y;
  Nat budget;
  Nat nodes = 0;
  bool budget_hit = false;
  std::vector<Nat> image;
  std::vector<bool> used;

  bool run(Nat i) {
    if (i == n) return true;
    for (Nat j = 0; j < n; ++j) {
      if (used[j] || degree_x[i] != degree_y[j]) continue;
      if (nodes >= budget) {
        budget_hit = true;
        return false;
      }
      ++nodes;
      bool ok = true;
      for (Nat k = 0; k < i && ok; ++k) ok = x.adj(i, k) == y.adj(j, image[k]);
      if (!ok) continue;
      image[i] = j;
      used[j] = true;
      if (run(i + 1)) return true;
      used[j] = false;
      if (budget_hit) return false;
    }
    return false;
  }
};

}  // namespace

IsoSearch graph_iso_search(const GraphOracle& x, const GraphOracle& y, Nat budget) {
  const Nat n = std::max(x.core_size(), y.core_size());
  if (n > 9) throw Error(ErrorKind::TooLarge, std::to_string(n) + " vertices (limit 9)");
  auto degrees = [n](const GraphOracle& g) {
    std::vector<Nat> d(n, 0);
    for (Nat i = 0; i < n; ++i) {
      for (Nat j = 0; j < n; ++j) d[i] += g.adj(i, j) ? 1 : 0;
    }
    return d;
  };
  const auto dx = degrees(x);
  const auto dy = degrees(y);
  IsoSearch result;
  auto sx = dx;
  auto sy = dy;
  std::sort(sx.begin(), sx.end());
  std::sort(sy.begin(), sy.end());
  if (sx != sy) {
    result.reason = "degree multisets differ";
    return result;
  }
  IsoDfs dfs{n, x, y, dx, dy, budget, 0, false, std::vector<Nat>(n, 0), std::vector<bool>(n, false)};
  const bool found = dfs.run(0);
  result.nodes = dfs.nodes;
  result.budget_hit = dfs.budget_hit;
  if (found) {
    std::vector<MapPair> iso;
    for (Nat i = 0; i < n; ++i) iso.emplace_back(i, dfs.image[i]);
    result.isomorphism = std::move(iso);
  } else if (dfs.budget_hit) {
    result.reason = "budget of " + std::to_string(budget) + " nodes exhausted";
  } else {
    result.reason = "no isomorphism after " + std::to_string(dfs.nodes) + " search nodes";
  }
  return result;
}

std::optional<std::vector<MapPair>> graph_iso_bruteforce(const GraphOracle& x, const GraphOracle& y) {
  return graph_iso_search(x, y).isomorphism;
}

}  // namespace rgconj
