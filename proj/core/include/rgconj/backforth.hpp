#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "rgconj/oracle.hpp"
#include "rgconj/staged_map.hpp"

namespace rgconj {

/// Finite injection between two universes, remembering insertion order.
class PartialIso {
 public:
  PartialIso() = default;
  explicit PartialIso(const std::vector<MapPair>& pairs);

  /// Adds (a, b); throws NotAnIsomorphism if it breaks injectivity.
  void add(Nat a, Nat b);
  std::optional<Nat> forward(Nat a) const;
  std::optional<Nat> backward(Nat b) const;
  bool contains_left(Nat a) const { return forward_.count(a) != 0; }
  bool contains_right(Nat b) const { return backward_.count(b) != 0; }

  const std::vector<MapPair>& pairs() const noexcept { return pairs_; }
  std::vector<MapPair> sorted_pairs() const;
  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }

  Nat least_unmapped_left() const;
  Nat least_unhit_right() const;

 private:
  std::vector<MapPair> pairs_;
  std::unordered_map<Nat, Nat> forward_;
  std::unordered_map<Nat, Nat> backward_;
  mutable Nat next_left_ = 0;
  mutable Nat next_right_ = 0;
};

/// A countable graph on the naturals together with a witness operation
/// for the extension property.
class GraphSide {
 public:
  virtual ~GraphSide() = default;
  virtual bool adj(Nat a, Nat b) const = 0;
  /// A vertex adjacent to all of U and none of V, outside U u V; nullopt if
  /// the witness is not representable.
  virtual std::optional<Nat> witness(std::span<const Nat> U, std::span<const Nat> V) const = 0;
};

/// A countable dense order without endpoints on the naturals.
class OrderSide {
 public:
  virtual ~OrderSide() = default;
  virtual bool less(Nat a, Nat b) const = 0;
  /// An element strictly between lo and hi (nullopt bounds are infinite).
  virtual std::optional<Nat> between(std::optional<Nat> lo, std::optional<Nat> hi) const = 0;
};

/// How a graph side picks witnesses: a scan for the least fresh realiser
/// below `search_limit`, falling back to the closed-form rule. A limit of 0
/// means closed form only.
struct WitnessPolicy {
  Nat search_limit = 0;
};

std::shared_ptr<const GraphSide> rado_side(WitnessPolicy policy = {});
std::shared_ptr<const GraphSide> delta_side(GraphOracle x, WitnessPolicy policy = {});
/// Any graph with a caller-supplied witness operation.
std::shared_ptr<const GraphSide> custom_graph_side(
    std::function<bool(Nat, Nat)> adj,
    std::function<std::optional<Nat>(std::span<const Nat>, std::span<const Nat>)> witness);
/// The rationals, by enumeration index, choosing least-index witnesses.
std::shared_ptr<const OrderSide> rational_side();

/// One back-and-forth step: forward when |p| is even, backward when odd.
/// Throws WitnessFailure if a witness does not realise the type and
/// Unresolved if it is not representable.
PartialIso bf_step(const PartialIso& p, const GraphSide& left, const GraphSide& right);
PartialIso bf_step(const PartialIso& p, const OrderSide& left, const OrderSide& right);

/// In-place variants; false when the witness is not representable.
bool bf_extend(PartialIso& p, const GraphSide& left, const GraphSide& right);
bool bf_extend(PartialIso& p, const OrderSide& left, const OrderSide& right);

/// Stage s is the result of 2s steps from the empty map. Once a witness
/// stops being representable every later stage equals the last one built.
StagedMap canonical_iso(std::shared_ptr<const GraphSide> left, std::shared_ptr<const GraphSide> right);
StagedMap canonical_iso(std::shared_ptr<const OrderSide> left, std::shared_ptr<const OrderSide> right);

/// Independent re-check that every pair preserves adjacency both ways.
bool preserves_adjacency(std::span<const MapPair> pairs, const std::function<bool(Nat, Nat)>& adj_left,
                         const std::function<bool(Nat, Nat)>& adj_right);
bool preserves_order(std::span<const MapPair> pairs, const std::function<bool(Nat, Nat)>& less_left,
                     const std::function<bool(Nat, Nat)>& less_right);

struct ConjSearchOptions {
  Nat prefix_length = 3;  // domain {0..m-1}
  Nat image_bound = 8;    // images < B
  Nat budget = 1'000'000; // node expansions
  Nat closure_depth = 4;  // applications of phi/psi propagated per choice
  Stage stage = 16;       // stage at which phi/psi are evaluated
};

struct ConjSearchResult {
  bool consistent = false;
  /// The certificate, closed under the propagated applications; ascending.
  std::vector<MapPair> certificate;
  Nat expansions = 0;
};

/// Depth-first search for the lexicographically first map on {0..m-1} with
/// images < B that preserves adjacency and satisfies p(phi(k)) = psi(p(k))
/// wherever the staged values resolve. A negative result is not a proof of
/// non-conjugacy.
ConjSearchResult bounded_conj_search(const StagedMap& phi, const StagedMap& psi,
                                     const std::function<bool(Nat, Nat)>& adj_left,
                                     const std::function<bool(Nat, Nat)>& adj_right,
                                     const ConjSearchOptions& options);

/// Re-verifies a certificate pointwise against phi, psi and adjacency.
bool verify_conj_certificate(std::span<const MapPair> certificate, const StagedMap& phi,
                             const StagedMap& psi, const std::function<bool(Nat, Nat)>& adj_left,
                             const std::function<bool(Nat, Nat)>& adj_right, Stage stage);

}  // namespace rgconj
