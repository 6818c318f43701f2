#include "rgconj/pairing.hpp"

#include <cmath>
#include <string>

namespace rgconj {

Nat pair(Nat i, Nat j) {
  Nat s = 0;
  Nat t = 0;
  Nat tri = 0;
  Nat code = 0;
  if (__builtin_add_overflow(i, j, &s) || __builtin_add_overflow(s, Nat{1}, &t)) {
    throw Error(ErrorKind::Overflow, "pair(" + std::to_string(i) + "," + std::to_string(j) + ")");
  }
  // one of s, s+1 is even
  Nat a = (s % 2 == 0) ? s / 2 : s;
  Nat b = (s % 2 == 0) ? t : t / 2;
  if (__builtin_mul_overflow(a, b, &tri) || __builtin_add_overflow(tri, j, &code)) {
    throw Error(ErrorKind::Overflow, "pair(" + std::to_string(i) + "," + std::to_string(j) + ")");
  }
  return code;
}

VertexCode unpair(Nat code) noexcept {
  // w = floor((sqrt(8z+1)-1)/2), corrected for floating error
  auto w = static_cast<Nat>((std::sqrt(8.0L * static_cast<long double>(code) + 1.0L) - 1.0L) / 2.0L);
  auto tri = [](Nat n) { return static_cast<Wide>(n) * (n + 1) / 2; };
  while (tri(w) > code) --w;
  while (tri(w + 1) <= code) ++w;
  const Nat j = code - static_cast<Nat>(tri(w));
  return {w - j, j};
}

}  // namespace rgconj
