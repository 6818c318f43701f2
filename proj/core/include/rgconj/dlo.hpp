#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "rgconj/oracle.hpp"
#include "rgconj/rational.hpp"
#include "rgconj/staged_map.hpp"

namespace rgconj {

/// Open interval of rationals; nullopt ends are infinite.
struct Interval {
  Bound lo;
  Bound hi;
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// A closed subset of Q of one of the shapes produced by closed embeddings.
class ClosedImage {
 public:
  enum class Kind { Finite, Naturals, Integers, Rationals };

  static ClosedImage finite(std::vector<Rational> points);
  static ClosedImage naturals() { return ClosedImage(Kind::Naturals); }
  static ClosedImage integers() { return ClosedImage(Kind::Integers); }
  static ClosedImage rationals() { return ClosedImage(Kind::Rationals); }

  Kind kind() const noexcept { return kind_; }
  bool contains(const Rational& q) const;
  /// The maximal complementary interval containing q, or nullopt if q is in
  /// the image.
  std::optional<Interval> gap(const Rational& q) const;
  /// Sorted points for Finite images.
  const std::vector<Rational>& points() const noexcept { return points_; }

 private:
  explicit ClosedImage(Kind kind) : kind_(kind) {}
  Kind kind_;
  std::vector<Rational> points_;
};

struct ClosedEmbedding {
  OrderOracle source;
  ClosedImage image;
  std::vector<Rational> values;  // alpha(i) for finite sources

  Rational alpha(Nat element) const;
};

/// Finite orders are placed element by element at the least-index rational
/// in the gap their order type dictates; catalog N, Z, Q embed as the
/// naturals, the integers (via zigzag) and the enumeration itself.
ClosedEmbedding closed_embed(const OrderOracle& x);

enum class Parity { Fixed, Up, Down };
std::string_view parity_name(Parity p) noexcept;

struct Orbital {
  Rational representative;
  Parity parity;
};

/// Automorphism of Q fixing a closed set and acting on each complementary
/// interval I as psi_I^-1 o (t + step) o psi_I, with psi_I an explicit
/// piecewise-Moebius order isomorphism I -> Q.
class DloAutomorphism {
 public:
  DloAutomorphism(ClosedImage fixed, Rational step);

  static DloAutomorphism identity() { return {ClosedImage::rationals(), Rational(1)}; }
  /// q -> q + c on all of Q.
  static DloAutomorphism translation(const Rational& c) { return {ClosedImage::finite({}), c}; }

  Rational apply(const Rational& q) const { return power(q, 1); }
  Rational inverse(const Rational& q) const { return power(q, -1); }
  Rational power(const Rational& q, long long n) const;
  Rational power(const Rational& q, const BigInt& n) const;

  const ClosedImage& fixed_set() const noexcept { return fixed_; }
  const Rational& step() const noexcept { return step_; }
  /// Complementary interval containing q, nullopt if q is fixed.
  std::optional<Interval> gap(const Rational& q) const { return fixed_.gap(q); }

  /// Index-level staged view: stage s = {(k, index(phi(q_k))) : k < s}.
  StagedMap as_staged() const;

 private:
  ClosedImage fixed_;
  Rational step_;
};

/// Coordinate map of an interval onto Q and its inverse.
Rational interval_to_line(const Interval& interval, const Rational& q);
Rational line_to_interval(const Interval& interval, const Rational& s);

DloAutomorphism build_phi_dlo(const ClosedEmbedding& embedding);
/// build_phi_dlo(closed_embed(x)) on enumeration indices.
StagedMap dlo_reduce(const OrderOracle& x);

Parity orbital_classify(const DloAutomorphism& phi, const Rational& q);

enum class OrbitalRelation { Same, Different, Unknown };

/// Same if r lies between phi^-n(q) and phi^n(q) for some n <= depth;
/// Different if the parities differ or a fixed point among the first
/// `scan_prefix` enumerated rationals separates q and r.
OrbitalRelation same_orbital(const DloAutomorphism& phi, const Rational& q, const Rational& r,
                             Nat depth, Nat scan_prefix = 500);

/// Orbital of phi containing q; the representative of a bump is the
/// least-index rational of its interval.
Orbital orbital_of(const DloAutomorphism& phi, const Rational& q);

/// Correspondence between the orbitals of two automorphisms, either as
/// explicit pairs or as the identity on points (for equal fixed sets).
struct OrbitalMatching {
  std::vector<std::pair<Orbital, Orbital>> pairs;
  bool identity_on_points = false;
};

/// Positional matching: i-th fixed point to i-th fixed point, gaps alike.
/// Throws OrderMismatch when the orbital orders differ.
OrbitalMatching canonical_matching(const DloAutomorphism& phi, const DloAutomorphism& psi);

/// beta with beta o phi = psi o beta, built orbital by orbital.
class DloConjugator {
 public:
  Rational apply(const Rational& q) const;
  StagedMap as_staged() const;

 private:
  friend DloConjugator glass_conjugator(const DloAutomorphism&, const DloAutomorphism&,
                                        const OrbitalMatching&);
  DloConjugator(DloAutomorphism phi, DloAutomorphism psi, OrbitalMatching matching)
      : phi_(std::move(phi)), psi_(std::move(psi)), matching_(std::move(matching)) {}

  Orbital target(const Orbital& source) const;

  DloAutomorphism phi_;
  DloAutomorphism psi_;
  OrbitalMatching matching_;
};

/// Validates the matching (ParityMismatch, OrderMismatch) and returns the
/// conjugator.
DloConjugator glass_conjugator(const DloAutomorphism& phi, const DloAutomorphism& psi,
                               const OrbitalMatching& matching);

/// Restriction of beta to the fixed points of phi among the first `prefix`
/// enumerated rationals, as index pairs. Throws NotConjugating if
/// beta(phi(q)) != psi(beta(q)) for a scanned q.
std::vector<MapPair> recover_order_iso(const std::function<Rational(const Rational&)>& beta,
                                       const DloAutomorphism& phi, const DloAutomorphism& psi,
                                       Nat prefix);

}  // namespace rgconj
