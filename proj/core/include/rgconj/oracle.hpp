#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "rgconj/error.hpp"

namespace rgconj {

/// A countable graph on the naturals given by an edge predicate.
///
/// Finite graphs on n vertices are padded: every vertex >= n is isolated.
class GraphOracle {
 public:
  /// Finite graph on {0..n-1}; edges are normalised (i < j).
  static GraphOracle finite(Nat n, const std::vector<MapPair>& edges);
  /// Graph on all of the naturals with the listed (finitely many) edges.
  static GraphOracle omega(const std::vector<MapPair>& edges);

  bool adj(Nat i, Nat j) const;
  /// nullopt for "omega".
  std::optional<Nat> known_size() const noexcept { return size_; }
  /// Declared vertex count for finite graphs; for omega graphs one past the
  /// largest vertex that carries an edge.
  Nat core_size() const noexcept;
  const std::set<MapPair>& edges() const noexcept { return edges_; }

 private:
  GraphOracle() = default;
  std::optional<Nat> size_;
  std::set<MapPair> edges_;
};

enum class OrderCatalog { N, Z, Q };

/// A countable linear order on (a subset of) the naturals.
class OrderOracle {
 public:
  enum class Kind { Finite, Catalog, Streamed };

  /// rank[i] is the position of element i; must be a permutation of 0..n-1.
  static OrderOracle finite(std::vector<Nat> rank);
  static OrderOracle catalog(OrderCatalog which);
  /// An order known only through its predicate; no closed embedding is
  /// computable for these.
  static OrderOracle streamed(std::function<bool(Nat, Nat)> less);

  bool lt(Nat i, Nat j) const;
  Kind kind() const noexcept { return kind_; }
  OrderCatalog catalog_kind() const noexcept { return catalog_; }
  Nat size() const noexcept { return static_cast<Nat>(rank_.size()); }
  const std::vector<Nat>& ranks() const noexcept { return rank_; }

 private:
  OrderOracle() = default;
  Kind kind_ = Kind::Finite;
  OrderCatalog catalog_ = OrderCatalog::N;
  std::vector<Nat> rank_;
  std::function<bool(Nat, Nat)> less_;
};

/// The standard zigzag N -> Z: 0, 1, -1, 2, -2, ...
long long zigzag(Nat k) noexcept;

}  // namespace rgconj
