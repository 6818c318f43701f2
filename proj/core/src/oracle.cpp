#include "rgconj/oracle.hpp"

#include <algorithm>
#include <string>

#include "rgconj/rational.hpp"

namespace rgconj {

GraphOracle GraphOracle::finite(Nat n, const std::vector<MapPair>& edges) {
  GraphOracle g;
  g.size_ = n;
  for (auto [a, b] : edges) {
    if (a == b || a >= n || b >= n) {
      throw Error(ErrorKind::MalformedLine,
                  "edge " + std::to_string(a) + " " + std::to_string(b) + " outside graph of size " +
                      std::to_string(n));
    }
    g.edges_.emplace(std::min(a, b), std::max(a, b));
  }
  return g;
}

GraphOracle GraphOracle::omega(const std::vector<MapPair>& edges) {
  GraphOracle g;
  for (auto [a, b] : edges) {
    if (a == b) throw Error(ErrorKind::MalformedLine, "loop at " + std::to_string(a));
    g.edges_.emplace(std::min(a, b), std::max(a, b));
  }
  return g;
}

bool GraphOracle::adj(Nat i, Nat j) const {
  if (i == j) return false;
  return edges_.count({std::min(i, j), std::max(i, j)}) != 0;
}

Nat GraphOracle::core_size() const noexcept {
  if (size_) return *size_;
  Nat top = 0;
  for (auto [a, b] : edges_) top = std::max({top, a + 1, b + 1});
  return top;
}

OrderOracle OrderOracle::finite(std::vector<Nat> rank) {
  std::vector<bool> seen(rank.size(), false);
  for (std::size_t i = 0; i < rank.size(); ++i) {
    if (rank[i] >= rank.size() || seen[rank[i]]) {
      throw Error(ErrorKind::RankNotPermutation,
                  "rank " + std::to_string(rank[i]) + " of element " + std::to_string(i));
    }
    seen[rank[i]] = true;
  }
  OrderOracle o;
  o.kind_ = Kind::Finite;
  o.rank_ = std::move(rank);
  return o;
}

OrderOracle OrderOracle::catalog(OrderCatalog which) {
  OrderOracle o;
  o.kind_ = Kind::Catalog;
  o.catalog_ = which;
  return o;
}

OrderOracle OrderOracle::streamed(std::function<bool(Nat, Nat)> less) {
  OrderOracle o;
  o.kind_ = Kind::Streamed;
  o.less_ = std::move(less);
  return o;
}

long long zigzag(Nat k) noexcept {
  const auto half = static_cast<long long>((k + 1) / 2);
  return (k % 2 == 1) ? half : -half;
}

bool OrderOracle::lt(Nat i, Nat j) const {
  switch (kind_) {
    case Kind::Finite:
      if (i >= rank_.size() || j >= rank_.size()) return false;
      return rank_[i] < rank_[j];
    case Kind::Streamed:
      return less_(i, j);
    case Kind::Catalog:
      break;
  }
  switch (catalog_) {
    case OrderCatalog::N: return i < j;
    case OrderCatalog::Z: return zigzag(i) < zigzag(j);
    case OrderCatalog::Q: return cw_rational(i) < cw_rational(j);
  }
  return false;
}

}  // namespace rgconj
