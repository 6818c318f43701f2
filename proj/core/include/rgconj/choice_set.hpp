#pragma once

#include <vector>

#include "rgconj/error.hpp"

namespace rgconj {

/// A choice of exactly `i` columns from each of rows 0..i-1 (i >= 2).
///
/// Sets are enumerated by total column sum, then lexicographically on the
/// concatenation of the sorted per-row column lists.
struct ChoiceSet {
  Nat i = 0;
  std::vector<std::vector<Nat>> rows;  // rows[r] sorted, strictly increasing

  bool contains(Nat row, Nat column) const;
  friend bool operator==(const ChoiceSet&, const ChoiceSet&) = default;
};

/// The n-th choice set for row i.
ChoiceSet choice_set(Nat i, Nat n);
ChoiceSet choice_set(Nat i, const BigInt& n);

/// Rank of a choice set; rows need not be pre-sorted. Throws
/// MalformedChoiceSet on a shape violation, Overflow past 64 bits.
Nat choice_index(Nat i, const std::vector<std::vector<Nat>>& rows);
inline Nat choice_index(const ChoiceSet& s) { return choice_index(s.i, s.rows); }
/// Exact rank, for sets whose rank does not fit in 64 bits.
BigInt choice_index_big(Nat i, const std::vector<std::vector<Nat>>& rows);

/// Number of row-i choice sets with total column sum exactly `sum`,
/// saturating at the largest Nat.
Nat choice_count_with_sum(Nat i, Nat sum);

}  // namespace rgconj
