#include "rgconj/dlo.hpp"

#include <algorithm>
#include <memory>
#include <string>

namespace rgconj {

namespace {

BigInt floor_of(const Rational& q) {
  const BigInt n = numerator(q);
  const BigInt d = denominator(q);
  BigInt f = n / d;
  if (n < 0 && f * d != n) f -= 1;
  return f;
}

bool is_integer(const Rational& q) { return denominator(q) == 1; }

// (0, inf) -> Q, increasing: u >= 1 shifts down by one, (0, 1) folds onto
// the negatives by a Moebius map. Both pieces agree at u = 1.
Rational half_line(const Rational& u) {
  if (u >= 1) return u - 1;
  return Rational(1) - Rational(1) / u;
}

Rational half_line_inverse(const Rational& t) {
  if (t >= 0) return t + 1;
  return Rational(1) / (Rational(1) - t);
}

Parity parity_of_step(const Rational& step) { return step > 0 ? Parity::Up : Parity::Down; }

}  // namespace

ClosedImage ClosedImage::finite(std::vector<Rational> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  ClosedImage image(Kind::Finite);
  image.points_ = std::move(points);
  return image;
}

bool ClosedImage::contains(const Rational& q) const {
  switch (kind_) {
    case Kind::Finite: return std::binary_search(points_.begin(), points_.end(), q);
    case Kind::Naturals: return is_integer(q) && q >= 0;
    case Kind::Integers: return is_integer(q);
    case Kind::Rationals: return true;
  }
  return false;
}

std::optional<Interval> ClosedImage::gap(const Rational& q) const {
  if (contains(q)) return std::nullopt;
  switch (kind_) {
    case Kind::Finite: {
      auto hi = std::upper_bound(points_.begin(), points_.end(), q);
      Interval out;
      if (hi != points_.begin()) out.lo = *std::prev(hi);
      if (hi != points_.end()) out.hi = *hi;
      return out;
    }
    case Kind::Naturals:
      if (q < 0) return Interval{std::nullopt, Rational(0)};
      [[fallthrough]];
    case Kind::Integers: {
      const BigInt f = floor_of(q);
      return Interval{Rational(f), Rational(f + 1)};
    }
    case Kind::Rationals:
      break;
  }
  return std::nullopt;
}

Rational ClosedEmbedding::alpha(Nat element) const {
  switch (source.kind()) {
    case OrderOracle::Kind::Finite: return values.at(element);
    case OrderOracle::Kind::Catalog:
      switch (source.catalog_kind()) {
        case OrderCatalog::N: return Rational(BigInt(element));
        case OrderCatalog::Z: return Rational(zigzag(element));
        case OrderCatalog::Q: return cw_rational(element);
      }
      break;
    case OrderOracle::Kind::Streamed:
      break;
  }
  throw Error(ErrorKind::UnsupportedOrder, "no embedding for element " + std::to_string(element));
}

ClosedEmbedding closed_embed(const OrderOracle& x) {
  switch (x.kind()) {
    case OrderOracle::Kind::Streamed:
      throw Error(ErrorKind::UnsupportedOrder, "streamed orders have no computable closed embedding");
    case OrderOracle::Kind::Catalog:
      switch (x.catalog_kind()) {
        case OrderCatalog::N: return {x, ClosedImage::naturals(), {}};
        case OrderCatalog::Z: return {x, ClosedImage::integers(), {}};
        case OrderCatalog::Q: return {x, ClosedImage::rationals(), {}};
      }
      break;
    case OrderOracle::Kind::Finite:
      break;
  }
  std::vector<Rational> values;
  values.reserve(x.size());
  for (Nat i = 0; i < x.size(); ++i) {
    Bound lo;
    Bound hi;
    for (Nat j = 0; j < i; ++j) {
      if (x.lt(j, i)) {
        if (!lo || *lo < values[j]) lo = values[j];
      } else if (!hi || values[j] < *hi) {
        hi = values[j];
      }
    }
    values.push_back(least_index_between(lo, hi));
  }
  return {x, ClosedImage::finite(values), values};
}

std::string_view parity_name(Parity p) noexcept {
  switch (p) {
    case Parity::Fixed: return "fixed";
    case Parity::Up: return "up";
    case Parity::Down: return "down";
  }
  return "fixed";
}

Rational interval_to_line(const Interval& interval, const Rational& q) {
  if (!interval.lo && !interval.hi) return q;
  if (!interval.hi) return half_line(q - *interval.lo);
  if (!interval.lo) return -half_line(*interval.hi - q);
  const Rational v = (q - *interval.lo) / (*interval.hi - *interval.lo);
  return half_line(v / (Rational(1) - v));
}

Rational line_to_interval(const Interval& interval, const Rational& s) {
  if (!interval.lo && !interval.hi) return s;
  if (!interval.hi) return *interval.lo + half_line_inverse(s);
  if (!interval.lo) return *interval.hi - half_line_inverse(-s);
  const Rational u = half_line_inverse(s);
  const Rational v = u / (Rational(1) + u);
  return *interval.lo + v * (*interval.hi - *interval.lo);
}

DloAutomorphism::DloAutomorphism(ClosedImage fixed, Rational step)
    : fixed_(std::move(fixed)), step_(std::move(step)) {
  if (step_ == 0) throw Error(ErrorKind::ParityMismatch, "zero step fixes its bumps");
}

Rational DloAutomorphism::power(const Rational& q, long long n) const {
  return power(q, BigInt(n));
}

Rational DloAutomorphism::power(const Rational& q, const BigInt& n) const {
  const auto interval = gap(q);
  if (!interval || n == 0) return q;
  return line_to_interval(*interval, interval_to_line(*interval, q) + Rational(n) * step_);
}

namespace {

class IndexSource final : public StagedMap::Source {
 public:
  IndexSource(std::function<Rational(const Rational&)> forward,
              std::function<Rational(const Rational&)> inverse)
      : forward_(std::move(forward)), inverse_(std::move(inverse)) {}

  std::optional<Nat> at(Nat key, Stage stage) const override {
    if (key >= stage) return std::nullopt;
    return try_rational_index(forward_(cw_rational(key)));
  }
  std::optional<Nat> preimage(Nat value, Stage stage) const override {
    if (!inverse_) return std::nullopt;
    auto key = try_rational_index(inverse_(cw_rational(value)));
    if (!key || *key >= stage) return std::nullopt;
    return key;
  }
  std::vector<MapPair> pairs(Stage stage) const override {
    std::vector<MapPair> out;
    for (Nat k = 0; k < stage; ++k) {
      if (auto v = at(k, stage)) out.emplace_back(k, *v);
    }
    return out;
  }

 private:
  std::function<Rational(const Rational&)> forward_;
  std::function<Rational(const Rational&)> inverse_;
};

}  // namespace

StagedMap DloAutomorphism::as_staged() const {
  auto self = std::make_shared<DloAutomorphism>(*this);
  return StagedMap(std::make_shared<IndexSource>([self](const Rational& q) { return self->apply(q); },
                                                 [self](const Rational& q) { return self->inverse(q); }));
}

DloAutomorphism build_phi_dlo(const ClosedEmbedding& embedding) {
  return DloAutomorphism(embedding.image, Rational(1));
}

StagedMap dlo_reduce(const OrderOracle& x) { return build_phi_dlo(closed_embed(x)).as_staged(); }

Parity orbital_classify(const DloAutomorphism& phi, const Rational& q) {
  const Rational image = phi.apply(q);
  if (image == q) return Parity::Fixed;
  return image > q ? Parity::Up : Parity::Down;
}

Orbital orbital_of(const DloAutomorphism& phi, const Rational& q) {
  const auto interval = phi.gap(q);
  if (!interval) return {q, Parity::Fixed};
  return {least_index_between(interval->lo, interval->hi), parity_of_step(phi.step())};
}

OrbitalRelation same_orbital(const DloAutomorphism& phi, const Rational& q, const Rational& r,
                             Nat depth, Nat scan_prefix) {
  if (q == r) return OrbitalRelation::Same;
  const Parity pq = orbital_classify(phi, q);
  if (pq != orbital_classify(phi, r) || pq == Parity::Fixed) return OrbitalRelation::Different;
  for (Nat n = 1; n <= depth; ++n) {
    Rational a = phi.power(q, -static_cast<long long>(n));
    Rational b = phi.power(q, static_cast<long long>(n));
    if (b < a) std::swap(a, b);
    if (a < r && r < b) return OrbitalRelation::Same;
  }
  const Rational& lo = std::min(q, r);
  const Rational& hi = std::max(q, r);
  for (Nat k = 0; k < scan_prefix; ++k) {
    const Rational f = cw_rational(k);
    if (lo < f && f < hi && phi.apply(f) == f) return OrbitalRelation::Different;
  }
  return OrbitalRelation::Unknown;
}

OrbitalMatching canonical_matching(const DloAutomorphism& phi, const DloAutomorphism& psi) {
  const ClosedImage& a = phi.fixed_set();
  const ClosedImage& b = psi.fixed_set();
  if (a.kind() != b.kind()) throw Error(ErrorKind::OrderMismatch, "fixed sets have different shapes");
  OrbitalMatching matching;
  if (a.kind() != ClosedImage::Kind::Finite) {
    matching.identity_on_points = true;
    return matching;
  }
  const auto& pa = a.points();
  const auto& pb = b.points();
  if (pa.size() != pb.size()) {
    throw Error(ErrorKind::OrderMismatch, std::to_string(pa.size()) + " fixed points against " +
                                              std::to_string(pb.size()));
  }
  auto gap_orbital = [](const std::vector<Rational>& points, std::size_t k, const Rational& step) {
    Bound lo;
    Bound hi;
    if (k > 0) lo = points[k - 1];
    if (k < points.size()) hi = points[k];
    return Orbital{least_index_between(lo, hi), parity_of_step(step)};
  };
  for (std::size_t k = 0; k <= pa.size(); ++k) {
    matching.pairs.emplace_back(gap_orbital(pa, k, phi.step()), gap_orbital(pb, k, psi.step()));
    if (k < pa.size()) {
      matching.pairs.emplace_back(Orbital{pa[k], Parity::Fixed}, Orbital{pb[k], Parity::Fixed});
    }
  }
  return matching;
}

namespace {

bool same_orbital_exact(const DloAutomorphism& phi, const Orbital& a, const Rational& q) {
  const auto ga = phi.gap(a.representative);
  const auto gq = phi.gap(q);
  if (!ga || !gq) return !ga && !gq && a.representative == q;
  return *ga == *gq;
}

std::size_t orbital_count(const ClosedImage& image) { return 2 * image.points().size() + 1; }

}  // namespace

Orbital DloConjugator::target(const Orbital& source) const {
  if (matching_.identity_on_points) {
    const Orbital out = orbital_of(psi_, source.representative);
    if (out.parity != source.parity) {
      throw Error(ErrorKind::ParityMismatch, "orbital at " + format_rational(source.representative));
    }
    return out;
  }
  for (const auto& [from, to] : matching_.pairs) {
    if (same_orbital_exact(phi_, from, source.representative)) return to;
  }
  throw Error(ErrorKind::OrderMismatch, "unmatched orbital at " + format_rational(source.representative));
}

Rational DloConjugator::apply(const Rational& q) const {
  const Orbital source = orbital_of(phi_, q);
  const Orbital image = target(source);
  if (source.parity == Parity::Fixed) return image.representative;
  const Rational& r = source.representative;
  const Rational& r2 = image.representative;
  const Interval interval = *phi_.gap(q);
  // phi acts as translation by step in line coordinates; bring q into the
  // fundamental domain between r (inclusive) and phi(r).
  const Rational offset = (interval_to_line(interval, q) - interval_to_line(interval, r)) / phi_.step();
  const BigInt n = floor_of(offset);
  const Rational y = phi_.power(q, -n);
  if (y == r) return psi_.power(r2, n);
  const Rational scale = (psi_.apply(r2) - r2) / (phi_.apply(r) - r);
  return psi_.power(r2 + (y - r) * scale, n);
}

StagedMap DloConjugator::as_staged() const {
  auto self = std::make_shared<DloConjugator>(*this);
  return StagedMap(std::make_shared<IndexSource>([self](const Rational& q) { return self->apply(q); },
                                                 std::function<Rational(const Rational&)>{}));
}

DloConjugator glass_conjugator(const DloAutomorphism& phi, const DloAutomorphism& psi,
                               const OrbitalMatching& matching) {
  if (matching.identity_on_points) {
    const auto& a = phi.fixed_set();
    const auto& b = psi.fixed_set();
    if (a.kind() != b.kind() || a.points() != b.points()) {
      throw Error(ErrorKind::OrderMismatch, "identity matching needs equal fixed sets");
    }
    if (a.kind() != ClosedImage::Kind::Rationals && (phi.step() > 0) != (psi.step() > 0)) {
      throw Error(ErrorKind::ParityMismatch, "bumps of opposite parity");
    }
    return DloConjugator(phi, psi, matching);
  }
  auto pairs = matching.pairs;
  for (const auto& [from, to] : pairs) {
    if (from.parity != to.parity) {
      throw Error(ErrorKind::ParityMismatch, std::string(parity_name(from.parity)) + " orbital at " +
                                                 format_rational(from.representative) + " matched to " +
                                                 std::string(parity_name(to.parity)) + " orbital at " +
                                                 format_rational(to.representative));
    }
    if (orbital_of(phi, from.representative).parity != from.parity ||
        orbital_of(psi, to.representative).parity != to.parity) {
      throw Error(ErrorKind::ParityMismatch, "declared parity disagrees with the automorphism");
    }
  }
  std::sort(pairs.begin(), pairs.end(), [](const auto& x, const auto& y) {
    return x.first.representative < y.first.representative;
  });
  for (std::size_t k = 1; k < pairs.size(); ++k) {
    if (same_orbital_exact(phi, pairs[k - 1].first, pairs[k].first.representative) ||
        same_orbital_exact(psi, pairs[k - 1].second, pairs[k].second.representative) ||
        !(pairs[k - 1].second.representative < pairs[k].second.representative)) {
      throw Error(ErrorKind::OrderMismatch, "matching is not an order-preserving bijection");
    }
  }
  for (const DloAutomorphism* side : {&phi, &psi}) {
    if (side->fixed_set().kind() == ClosedImage::Kind::Finite &&
        pairs.size() != orbital_count(side->fixed_set())) {
      throw Error(ErrorKind::OrderMismatch, "matching does not cover every orbital");
    }
  }
  return DloConjugator(phi, psi, matching);
}

std::vector<MapPair> recover_order_iso(const std::function<Rational(const Rational&)>& beta,
                                       const DloAutomorphism& phi, const DloAutomorphism& psi,
                                       Nat prefix) {
  std::vector<std::pair<Rational, Rational>> fixed;
  std::vector<MapPair> out;
  for (Nat k = 0; k < prefix; ++k) {
    const Rational q = cw_rational(k);
    const Rational bq = beta(q);
    if (beta(phi.apply(q)) != psi.apply(bq)) {
      throw Error(ErrorKind::NotConjugating, "commutation fails at index " + std::to_string(k));
    }
    if (phi.apply(q) == q) {
      fixed.emplace_back(q, bq);
      out.emplace_back(k, rational_index(bq));
    }
  }
  for (std::size_t a = 0; a < fixed.size(); ++a) {
    for (std::size_t b = 0; b < fixed.size(); ++b) {
      if ((fixed[a].first < fixed[b].first) != (fixed[a].second < fixed[b].second)) {
        throw Error(ErrorKind::NotConjugating, "restriction to fixed points is not order-preserving");
      }
    }
  }
  return out;
}

}  // namespace rgconj
