#include <doctest.h>

#include "oracles.hpp"
#include "rgconj/dlo.hpp"
#include "rgconj/error.hpp"

using namespace rgconj;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::Overflow;
}

const std::vector<oracle::Q>& rationals() {
  static const auto list = oracle::enumerate_rationals(500);
  return list;
}

}  // namespace

TEST_CASE("closed embeddings") {
  const auto one = closed_embed(OrderOracle::finite({0}));
  CHECK(one.alpha(0) == 0);
  const auto n = closed_embed(OrderOracle::catalog(OrderCatalog::N));
  CHECK(n.image.kind() == ClosedImage::Kind::Naturals);
  CHECK(n.image.contains(Rational(3)));
  CHECK_FALSE(n.image.contains(Rational(-1)));
  CHECK_FALSE(n.image.contains(Rational(1, 2)));
  CHECK(kind_of([] { (void)closed_embed(OrderOracle::streamed([](Nat a, Nat b) { return a < b; })); }) ==
        ErrorKind::UnsupportedOrder);
  // finite embeddings respect the order
  const auto x = OrderOracle::finite({3, 0, 4, 1, 2});
  const auto e = closed_embed(x);
  for (Nat a = 0; a < 5; ++a)
    for (Nat b = 0; b < 5; ++b) CHECK((e.alpha(a) < e.alpha(b)) == x.lt(a, b));
}

TEST_CASE("single up-bumps") {
  const auto empty = build_phi_dlo(closed_embed(OrderOracle::finite({})));
  for (const auto& q : rationals()) CHECK(empty.apply(q) > q);
  const auto point = build_phi_dlo(closed_embed(OrderOracle::finite({0})));
  CHECK(point.apply(Rational(0)) == 0);
  for (const auto& q : rationals())
    if (q != 0) CHECK(point.apply(q) > q);
  const auto all = build_phi_dlo(closed_embed(OrderOracle::catalog(OrderCatalog::Q)));
  for (const auto& q : rationals()) CHECK(all.apply(q) == q);
}

TEST_CASE("interval coordinates are order isomorphisms") {
  const std::vector<Interval> intervals{{std::nullopt, std::nullopt},
                                        {Rational(0), std::nullopt},
                                        {std::nullopt, Rational(-2)},
                                        {Rational(1, 3), Rational(1, 2)}};
  for (const auto& I : intervals) {
    std::vector<Rational> inside;
    for (const auto& q : rationals())
      if ((!I.lo || *I.lo < q) && (!I.hi || q < *I.hi)) inside.push_back(q);
    std::sort(inside.begin(), inside.end());
    for (std::size_t k = 0; k < inside.size(); ++k) {
      CHECK(line_to_interval(I, interval_to_line(I, inside[k])) == inside[k]);
      if (k > 0) CHECK(interval_to_line(I, inside[k - 1]) < interval_to_line(I, inside[k]));
    }
  }
}

TEST_CASE("orbital parities and relations") {
  const auto id = DloAutomorphism::identity();
  const auto up = DloAutomorphism::translation(Rational(1));
  const auto down = DloAutomorphism::translation(Rational(-1));
  CHECK(orbital_classify(id, Rational(7, 3)) == Parity::Fixed);
  CHECK(orbital_classify(up, Rational(0)) == Parity::Up);
  CHECK(orbital_classify(down, Rational(0)) == Parity::Down);
  CHECK(down.apply(up.apply(Rational(5, 7))) == Rational(5, 7));
  CHECK(up.inverse(Rational(0)) == -1);
  CHECK(same_orbital(up, Rational(0), Rational(5, 2), 3) == OrbitalRelation::Same);
  const auto point = build_phi_dlo(closed_embed(OrderOracle::finite({0})));
  CHECK(same_orbital(point, Rational(-1), Rational(1), 3) == OrbitalRelation::Different);
  CHECK(same_orbital(point, Rational(4, 9), Rational(4, 9), 0) == OrbitalRelation::Same);
}

TEST_CASE("glass conjugators commute") {
  const auto t1 = DloAutomorphism::translation(Rational(1));
  const auto t2 = DloAutomorphism::translation(Rational(2));
  for (const auto& [phi, psi] : {std::pair{t1, t1}, std::pair{t1, t2}}) {
    const auto beta = glass_conjugator(phi, psi, canonical_matching(phi, psi));
    for (const auto& q : rationals()) CHECK(beta.apply(phi.apply(q)) == psi.apply(beta.apply(q)));
  }
  const auto point = build_phi_dlo(closed_embed(OrderOracle::finite({0})));
  OrbitalMatching bad;
  bad.pairs = {{orbital_of(point, Rational(1)), orbital_of(point, Rational(0))}};
  CHECK(kind_of([&] { (void)glass_conjugator(point, point, bad); }) == ErrorKind::ParityMismatch);
}

TEST_CASE("reduced finite orders: conjugate iff same size") {
  for (Nat m = 0; m <= 6; ++m)
    for (Nat n = 0; n <= 6; ++n) {
      std::vector<Nat> rx(m), ry(n);
      std::iota(rx.begin(), rx.end(), Nat{0});
      std::iota(ry.rbegin(), ry.rend(), Nat{0});  // reversed labels, same order type
      const auto phi = build_phi_dlo(closed_embed(OrderOracle::finite(rx)));
      const auto psi = build_phi_dlo(closed_embed(OrderOracle::finite(ry)));
      if (m == n) {
        const auto beta = glass_conjugator(phi, psi, canonical_matching(phi, psi));
        for (const auto& q : rationals()) CHECK(beta.apply(phi.apply(q)) == psi.apply(beta.apply(q)));
        const auto iso = recover_order_iso([&](const Rational& q) { return beta.apply(q); }, phi, psi, 500);
        CHECK(iso.size() == m);
      } else {
        CHECK(kind_of([&] { (void)canonical_matching(phi, psi); }) == ErrorKind::OrderMismatch);
      }
    }
}

TEST_CASE("order isomorphism recovery") {
  const auto x = OrderOracle::finite({1, 0});
  const auto phi = build_phi_dlo(closed_embed(x));
  const auto ident = recover_order_iso([](const Rational& q) { return q; }, phi, phi, 200);
  for (auto [a, b] : ident) CHECK(a == b);
  CHECK(ident.size() == 2);
  const auto y = OrderOracle::finite({0, 1});
  const auto psi = build_phi_dlo(closed_embed(y));
  const auto beta = glass_conjugator(phi, psi, canonical_matching(phi, psi));
  const auto iso = recover_order_iso([&](const Rational& q) { return beta.apply(q); }, phi, psi, 200);
  REQUIRE(iso.size() == 2);
  // the fixed points are matched in order
  const auto ex = closed_embed(x), ey = closed_embed(y);
  std::vector<Rational> fx{ex.alpha(0), ex.alpha(1)}, fy{ey.alpha(0), ey.alpha(1)};
  std::sort(fx.begin(), fx.end());
  std::sort(fy.begin(), fy.end());
  const std::set<MapPair> expected{{rational_index(fx[0]), rational_index(fy[0])},
                                   {rational_index(fx[1]), rational_index(fy[1])}};
  CHECK(std::set<MapPair>(iso.begin(), iso.end()) == expected);
  // the images {-1,0} and {0,1} differ by a unit shift, and so do phi and psi
  CHECK(recover_order_iso([](const Rational& q) { return q + 1; }, phi, psi, 200).size() == 2);
  CHECK(kind_of([&] { (void)recover_order_iso([](const Rational& q) { return q + 2; }, phi, psi, 200); }) ==
        ErrorKind::NotConjugating);
}

TEST_CASE("index-level reduction") {
  const auto empty = dlo_reduce(OrderOracle::finite({}));
  for (Nat k = 0; k < 200; ++k) CHECK(empty.lookup(k, 200) != k);
  const auto two = dlo_reduce(OrderOracle::finite({1, 0}));
  const auto e = closed_embed(OrderOracle::finite({1, 0}));
  std::set<Nat> fixed;
  for (Nat k = 0; k < 200; ++k)
    if (two.lookup(k, 200) == k) fixed.insert(k);
  CHECK(fixed == std::set<Nat>{rational_index(e.alpha(0)), rational_index(e.alpha(1))});
  const auto q = dlo_reduce(OrderOracle::catalog(OrderCatalog::Q));
  for (Nat k = 0; k < 200; ++k) CHECK(q.lookup(k, 200) == k);
}

TEST_CASE("catalog orders: fixed set equals the image") {
  for (auto which : {OrderCatalog::N, OrderCatalog::Z, OrderCatalog::Q}) {
    const auto emb = closed_embed(OrderOracle::catalog(which));
    const auto phi = build_phi_dlo(emb);
    for (const auto& q : rationals()) {
      bool in_image = false;
      if (which == OrderCatalog::Q) in_image = true;
      else if (denominator(q) == 1) in_image = which == OrderCatalog::Z || q >= 0;
      CHECK((phi.apply(q) == q) == in_image);
      if (!in_image) CHECK(phi.apply(q) > q);
    }
  }
}
