#pragma once

#include "rgconj/error.hpp"

namespace rgconj {

/// A vertex of the row-structured graph: row and column, flattened to a
/// single code by the Cantor pairing.
struct VertexCode {
  Nat row = 0;
  Nat column = 0;

  friend bool operator==(const VertexCode&, const VertexCode&) = default;
  friend auto operator<=>(const VertexCode&, const VertexCode&) = default;
};

/// Cantor code (i+j)(i+j+1)/2 + j. Throws Overflow past 64 bits.
Nat pair(Nat i, Nat j);
VertexCode unpair(Nat code) noexcept;

inline Nat encode(VertexCode v) { return pair(v.row, v.column); }

}  // namespace rgconj
