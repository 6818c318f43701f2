#pragma once

#include <optional>

#include <boost/multiprecision/cpp_int.hpp>

#include "rgconj/error.hpp"

namespace rgconj {

using Rational = boost::multiprecision::cpp_rational;

/// Fixed enumeration of the rationals: index 0 is 0, and for m >= 1 index
/// 2m-1 is the m-th Calkin-Wilf rational and 2m its negation.
Rational cw_rational(Nat index);
Rational cw_rational(const BigInt& index);
/// Throws Overflow when the index would exceed 2^20 bits.
BigInt rational_index_big(const Rational& q);

/// Index of q; throws Overflow when it does not fit in 64 bits.
Nat rational_index(const Rational& q);
std::optional<Nat> try_rational_index(const Rational& q);

/// Open interval bound; nullopt stands for -infinity / +infinity.
using Bound = std::optional<Rational>;

/// The rational of least enumeration index strictly between lo and hi.
/// Requires lo < hi.
Rational least_index_between(const Bound& lo, const Bound& hi);

/// `num/den` or `num` when den == 1; `-` sign prefixed.
std::string format_rational(const Rational& q);

}  // namespace rgconj
