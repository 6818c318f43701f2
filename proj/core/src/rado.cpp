#include "rgconj/rado.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace rgconj {

bool rado_adj(Wide i, Wide j) noexcept {
  if (i == j) return false;
  const Wide lo = std::min(i, j);
  const Wide hi = std::max(i, j);
  if (lo >= 128) return false;
  return ((hi >> static_cast<unsigned>(lo)) & 1U) != 0;
}

namespace {

void require_disjoint(std::span<const Nat> U, std::span<const Nat> V) {
  const std::set<Nat> u(U.begin(), U.end());
  for (Nat v : V) {
    if (u.count(v) != 0) {
      throw Error(ErrorKind::OverlappingSets, "vertex " + std::to_string(v) + " in both U and V");
    }
  }
}

Nat top_bit(std::span<const Nat> U, std::span<const Nat> V) {
  Nat top = 0;
  for (Nat u : U) top = std::max(top, u);
  for (Nat v : V) top = std::max(top, v);
  return top;
}

}  // namespace

Wide rado_witness(std::span<const Nat> U, std::span<const Nat> V) {
  require_disjoint(U, V);
  const Nat k = top_bit(U, V) + 1;
  if (k >= 128) throw Error(ErrorKind::Overflow, "rado witness needs bit " + std::to_string(k));
  Wide w = Wide{1} << k;
  for (Nat u : std::set<Nat>(U.begin(), U.end())) w |= Wide{1} << u;
  return w;
}

std::optional<Nat> rado_witness_nat(std::span<const Nat> U, std::span<const Nat> V) {
  require_disjoint(U, V);
  if (top_bit(U, V) + 1 >= 64) return std::nullopt;
  return static_cast<Nat>(rado_witness(U, V));
}

std::optional<Nat> rado_least_witness(std::span<const Nat> U, std::span<const Nat> V, Nat limit) {
  require_disjoint(U, V);
  for (Nat w = 0; w < limit; ++w) {
    bool ok = true;
    for (Nat u : U) {
      if (u == w || !rado_adj(w, u)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    for (Nat v : V) {
      if (v == w || rado_adj(w, v)) {
        ok = false;
        break;
      }
    }
    if (ok) return w;
  }
  return std::nullopt;
}

}  // namespace rgconj
