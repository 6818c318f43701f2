#pragma once

#include <optional>
#include <span>

#include "rgconj/error.hpp"

namespace rgconj {

// The random graph on the naturals in its BIT presentation: for i < j,
// i ~ j iff bit i of j is set.

bool rado_adj(Wide i, Wide j) noexcept;

/// sum of 2^u over U plus 2^k, k = 1 + max(U u V u {0}). Adjacent to all of
/// U and none of V. Throws OverlappingSets, or Overflow past 128 bits.
Wide rado_witness(std::span<const Nat> U, std::span<const Nat> V);

/// Same rule, nullopt when the witness does not fit in a Nat.
std::optional<Nat> rado_witness_nat(std::span<const Nat> U, std::span<const Nat> V);

/// Least vertex below `limit` outside U u V realising the type, by scan.
std::optional<Nat> rado_least_witness(std::span<const Nat> U, std::span<const Nat> V, Nat limit);

}  // namespace rgconj
