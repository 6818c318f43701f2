#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include <boost/container_hash/hash.hpp>

#include "rgconj/choice_set.hpp"
#include "rgconj/oracle.hpp"
#include "rgconj/pairing.hpp"

namespace rgconj {

// The row-structured graph Delta_x on N x N (vertices flattened by pair()).
// Rows 0 and 1 carry copies of x joined by the matching (0,j)-(1,j); rows
// i >= 2 are independent sets, and (i,n) is adjacent, among rows < i, to
// exactly the n-th choice set for row i.

/// Memoised unrank of S^i_n.
const ChoiceSet& cached_choice_set(Nat i, Nat n);

bool delta_adj(const GraphOracle& x, VertexCode u, VertexCode v);
bool delta_adj_code(const GraphOracle& x, Nat u, Nat v);

/// A vertex whose column may exceed 64 bits.
struct WideVertex {
  Nat row = 0;
  BigInt column;
  friend bool operator==(const WideVertex&, const WideVertex&) = default;
  /// The 64-bit vertex, if the column fits.
  std::optional<VertexCode> narrow() const;
};

/// Adjacency of an ordinary vertex to a wide one (unranks exactly).
bool delta_adj_wide(const GraphOracle& x, VertexCode u, const WideVertex& w);

/// A vertex adjacent to every member of U and no member of V. Its row is
/// max(2, 1 + largest row used, largest per-row count of U); each row is
/// filled with U's columns then padded with the smallest unused columns.
WideVertex delta_witness(std::span<const VertexCode> U, std::span<const VertexCode> V);

/// Row-preserving permutation of vertex codes induced by a permutation of
/// rows 0/1 together with a column map on those rows, extended to rows >= 2
/// by the image of each choice set.
class RowPermutation {
 public:
  /// `swap_rows` exchanges rows 0 and 1; `column` must be a bijection of
  /// the naturals.
  RowPermutation(bool swap_rows, std::function<Nat(Nat)> column);

  VertexCode apply(VertexCode v) const;
  Nat apply_code(Nat code) const { return encode(apply(unpair(code))); }

 private:
  bool swap_rows_;
  std::function<Nat(Nat)> column_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<std::pair<Nat, Nat>, VertexCode, boost::hash<std::pair<Nat, Nat>>> memo_;  // rows >= 2
};

/// Applies a row permutation to vertices whose image codes may not fit in
/// 64 bits. A vertex is either coded as (row, column) or, when its rank
/// overflows, a node holding its choice set as interned per-row member
/// lists. Each vertex has exactly one representation, so equality of refs is
/// equality of vertices. Not thread-safe.
class VertexPool {
 public:
  struct Ref {
    bool node = false;
    Nat row = 0;
    Nat value = 0;  // column when coded, node id otherwise
    friend auto operator<=>(const Ref&, const Ref&) = default;
    friend std::size_t hash_value(const Ref& r) {
      std::size_t seed = r.node;
      boost::hash_combine(seed, r.row);
      boost::hash_combine(seed, r.value);
      return seed;
    }
  };

  VertexPool(bool swap_rows, std::function<Nat(Nat)> column);

  static Ref coded(VertexCode v) { return {false, v.row, v.column}; }
  Ref image(Ref v);
  /// Delta adjacency between arbitrary refs.
  bool adj(const GraphOracle& x, Ref u, Ref v);
  std::optional<VertexCode> code(Ref v) const;
  std::size_t node_count() const noexcept { return nodes_.size(); }

 private:
  using ListId = std::uint32_t;
  ListId intern_list(std::vector<Ref> list);
  const std::vector<ListId>& lists_of(Ref v);  // rows >= 2
  ListId image_list(ListId list);

  bool swap_rows_;
  std::function<Nat(Nat)> column_;
  std::vector<std::vector<Ref>> lists_;
  std::unordered_map<std::vector<Ref>, ListId, boost::hash<std::vector<Ref>>> list_ids_;
  std::vector<std::vector<ListId>> nodes_;
  std::unordered_map<std::pair<Nat, std::vector<ListId>>, Nat, boost::hash<std::pair<Nat, std::vector<ListId>>>>
      node_ids_;
  std::unordered_map<Ref, std::vector<ListId>, boost::hash<Ref>> coded_lists_;
  std::unordered_map<ListId, ListId> list_images_;
  std::unordered_map<std::pair<Nat, Nat>, ListId, boost::hash<std::pair<Nat, Nat>>> initial_lists_;
  std::unordered_map<Ref, Ref, boost::hash<Ref>> images_;
};

/// The swap automorphism: (0,j) <-> (1,j), rows >= 2 mapped setwise.
/// Independent of x. Throws Overflow if an image code exceeds 64 bits.
VertexCode swap_vertex(VertexCode v);
Nat swap_code(Nat code);

}  // namespace rgconj
