#include "rgconj/rational.hpp"

#include <string>
#include <vector>

#include "rgconj/error.hpp"

namespace rgconj {

namespace {

constexpr unsigned kMaxIndexBits = 1U << 20;

// m-th Calkin-Wilf term: the bits of m below the leading one, read from the
// top, pick the left child a/(a+b) (0) or the right child (a+b)/b (1).
Rational calkin_wilf(const BigInt& m) {
  BigInt a = 1;
  BigInt b = 1;
  const auto top = msb(m);
  for (auto bit = top; bit-- > 0;) {
    if (bit_test(m, bit)) {
      a += b;
    } else {
      b += a;
    }
  }
  return Rational(a, b);
}

// Inverse of calkin_wilf for positive a/b in lowest terms, using runs so a
// large partial quotient costs one division.
BigInt calkin_wilf_position(BigInt a, BigInt b) {
  struct Run {
    bool ones;
    BigInt length;
  };
  std::vector<Run> runs;  // leaf to root
  while (!(a == 1 && b == 1)) {
    if (a > b) {
      BigInt k = (a - 1) / b;
      a -= k * b;
      runs.push_back({true, k});
    } else {
      BigInt k = (b - 1) / a;
      b -= k * a;
      runs.push_back({false, k});
    }
  }
  BigInt bits = 0;
  for (const auto& run : runs) bits += run.length;
  if (bits > kMaxIndexBits) {
    throw Error(ErrorKind::Overflow, "rational index has more than " + std::to_string(kMaxIndexBits) + " bits");
  }
  BigInt m = 1;
  for (auto it = runs.rbegin(); it != runs.rend(); ++it) {
    const auto len = it->length.convert_to<unsigned>();
    m <<= len;
    if (it->ones) m |= (BigInt(1) << len) - 1;
  }
  return m;
}

// Simplest (least Stern-Brocot depth) rational in the open interval (lo, hi)
// with 0 <= lo < hi; hi = nullopt means +infinity.
Rational simplest_positive(const Rational& lo, const Bound& hi) {
  const BigInt n = numerator(lo) / denominator(lo);  // floor for lo >= 0
  const Rational next(n + 1);
  if (!hi || next < *hi) return next;
  // lo and hi share integer part n (hi may equal n + 1)
  const Rational lo_frac = lo - Rational(n);
  const Rational hi_frac = *hi - Rational(n);
  Bound upper;
  if (lo_frac != 0) upper = Rational(1) / lo_frac;
  const Rational inner = simplest_positive(Rational(1) / hi_frac, upper);
  return Rational(n) + Rational(1) / inner;
}

}  // namespace

Rational cw_rational(const BigInt& index) {
  if (index == 0) return Rational(0);
  if (bit_test(index, 0)) return calkin_wilf((index + 1) / 2);
  return -calkin_wilf(index / 2);
}

Rational cw_rational(Nat index) { return cw_rational(BigInt(index)); }

BigInt rational_index_big(const Rational& q) {
  if (q == 0) return 0;
  if (q > 0) return 2 * calkin_wilf_position(numerator(q), denominator(q)) - 1;
  return 2 * calkin_wilf_position(-numerator(q), denominator(q));
}

std::optional<Nat> try_rational_index(const Rational& q) {
  const BigInt big = rational_index_big(q);
  if (msb(big | 1) >= 64) return std::nullopt;
  return big.convert_to<Nat>();
}

Nat rational_index(const Rational& q) {
  if (auto index = try_rational_index(q)) return *index;
  throw Error(ErrorKind::Overflow, "rational index of " + format_rational(q));
}

Rational least_index_between(const Bound& lo, const Bound& hi) {
  const bool below_zero = !lo || *lo < 0;
  const bool above_zero = !hi || *hi > 0;
  if (below_zero && above_zero) return Rational(0);
  if (!below_zero) return simplest_positive(*lo, hi);
  // the interval lies in (-inf, 0]: mirror it
  Bound mirrored_hi;
  if (lo) mirrored_hi = -*lo;
  return -simplest_positive(-*hi, mirrored_hi);
}

std::string format_rational(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace rgconj
