#include "rgconj/backforth.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <string>

#include "rgconj/delta.hpp"
#include "rgconj/rado.hpp"
#include "rgconj/rational.hpp"

namespace rgconj {

PartialIso::PartialIso(const std::vector<MapPair>& pairs) {
  for (auto [a, b] : pairs) add(a, b);
}

void PartialIso::add(Nat a, Nat b) {
  if (forward_.count(a) != 0 || backward_.count(b) != 0) {
    throw Error(ErrorKind::NotAnIsomorphism,
                "pair (" + std::to_string(a) + "," + std::to_string(b) + ") breaks injectivity");
  }
  forward_.emplace(a, b);
  backward_.emplace(b, a);
  pairs_.emplace_back(a, b);
}

std::optional<Nat> PartialIso::forward(Nat a) const {
  auto it = forward_.find(a);
  if (it == forward_.end()) return std::nullopt;
  return it->second;
}

std::optional<Nat> PartialIso::backward(Nat b) const {
  auto it = backward_.find(b);
  if (it == backward_.end()) return std::nullopt;
  return it->second;
}

std::vector<MapPair> PartialIso::sorted_pairs() const {
  std::vector<MapPair> out = pairs_;
  std::sort(out.begin(), out.end());
  return out;
}

Nat PartialIso::least_unmapped_left() const {
  while (forward_.count(next_left_) != 0) ++next_left_;
  return next_left_;
}

Nat PartialIso::least_unhit_right() const {
  while (backward_.count(next_right_) != 0) ++next_right_;
  return next_right_;
}

namespace {

class RadoSide final : public GraphSide {
 public:
  explicit RadoSide(WitnessPolicy policy) : policy_(policy) {}
  bool adj(Nat a, Nat b) const override { return rado_adj(a, b); }
  std::optional<Nat> witness(std::span<const Nat> U, std::span<const Nat> V) const override {
    if (policy_.search_limit > 0) {
      if (auto w = rado_least_witness(U, V, policy_.search_limit)) return w;
    }
    return rado_witness_nat(U, V);
  }

 private:
  WitnessPolicy policy_;
};

class DeltaSide final : public GraphSide {
 public:
  DeltaSide(GraphOracle x, WitnessPolicy policy) : x_(std::move(x)), policy_(policy) {}
  bool adj(Nat a, Nat b) const override { return delta_adj_code(x_, a, b); }
  std::optional<Nat> witness(std::span<const Nat> U, std::span<const Nat> V) const override {
    for (Nat c = 0; c < policy_.search_limit; ++c) {
      if (realises(c, U, V)) return c;
    }
    try {
      std::vector<VertexCode> u;
      std::vector<VertexCode> v;
      for (Nat a : U) u.push_back(unpair(a));
      for (Nat b : V) v.push_back(unpair(b));
      const auto w = delta_witness(u, v).narrow();
      if (!w) return std::nullopt;
      return encode(*w);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::Overflow) return std::nullopt;
      throw;
    }
  }

 private:
  bool realises(Nat c, std::span<const Nat> U, std::span<const Nat> V) const {
    try {
      for (Nat u : U) {
        if (u == c || !delta_adj_code(x_, c, u)) return false;
      }
      for (Nat v : V) {
        if (v == c || delta_adj_code(x_, c, v)) return false;
      }
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::Overflow) return false;
      throw;
    }
    return true;
  }

  GraphOracle x_;
  WitnessPolicy policy_;
};

class CustomGraphSide final : public GraphSide {
 public:
  CustomGraphSide(std::function<bool(Nat, Nat)> adj,
                  std::function<std::optional<Nat>(std::span<const Nat>, std::span<const Nat>)> witness)
      : adj_(std::move(adj)), witness_(std::move(witness)) {}
  bool adj(Nat a, Nat b) const override { return adj_(a, b); }
  std::optional<Nat> witness(std::span<const Nat> U, std::span<const Nat> V) const override {
    return witness_(U, V);
  }

 private:
  std::function<bool(Nat, Nat)> adj_;
  std::function<std::optional<Nat>(std::span<const Nat>, std::span<const Nat>)> witness_;
};

class RationalSide final : public OrderSide {
 public:
  bool less(Nat a, Nat b) const override { return value(a) < value(b); }
  std::optional<Nat> between(std::optional<Nat> lo, std::optional<Nat> hi) const override {
    Bound l;
    Bound h;
    if (lo) l = value(*lo);
    if (hi) h = value(*hi);
    return try_rational_index(least_index_between(l, h));
  }

 private:
  Rational value(Nat index) const {
    std::lock_guard lock(mutex_);
    auto it = cache_.find(index);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(index, cw_rational(index)).first->second;
  }
  mutable std::mutex mutex_;
  mutable std::unordered_map<Nat, Rational> cache_;
};

[[noreturn]] void witness_failure(Nat w, const char* why) {
  throw Error(ErrorKind::WitnessFailure, "witness " + std::to_string(w) + " " + why);
}

}  // namespace

std::shared_ptr<const GraphSide> rado_side(WitnessPolicy policy) {
  return std::make_shared<RadoSide>(policy);
}

std::shared_ptr<const GraphSide> delta_side(GraphOracle x, WitnessPolicy policy) {
  return std::make_shared<DeltaSide>(std::move(x), policy);
}

std::shared_ptr<const GraphSide> custom_graph_side(
    std::function<bool(Nat, Nat)> adj,
    std::function<std::optional<Nat>(std::span<const Nat>, std::span<const Nat>)> witness) {
  return std::make_shared<CustomGraphSide>(std::move(adj), std::move(witness));
}

std::shared_ptr<const OrderSide> rational_side() { return std::make_shared<RationalSide>(); }

bool bf_extend(PartialIso& p, const GraphSide& left, const GraphSide& right) {
  const bool forward = p.size() % 2 == 0;
  const GraphSide& source = forward ? left : right;
  const GraphSide& target = forward ? right : left;
  const Nat element = forward ? p.least_unmapped_left() : p.least_unhit_right();
  std::vector<Nat> U;
  std::vector<Nat> V;
  for (auto [a, b] : p.pairs()) {
    const Nat here = forward ? a : b;
    const Nat there = forward ? b : a;
    (source.adj(element, here) ? U : V).push_back(there);
  }
  const auto w = target.witness(U, V);
  if (!w) return false;
  if (forward ? p.contains_right(*w) : p.contains_left(*w)) witness_failure(*w, "is already mapped");
  for (Nat u : U) {
    if (!target.adj(*w, u)) witness_failure(*w, "misses a required neighbour");
  }
  for (Nat v : V) {
    if (target.adj(*w, v)) witness_failure(*w, "hits a forbidden neighbour");
  }
  if (forward) {
    p.add(element, *w);
  } else {
    p.add(*w, element);
  }
  return true;
}

bool bf_extend(PartialIso& p, const OrderSide& left, const OrderSide& right) {
  const bool forward = p.size() % 2 == 0;
  const OrderSide& source = forward ? left : right;
  const OrderSide& target = forward ? right : left;
  const Nat element = forward ? p.least_unmapped_left() : p.least_unhit_right();
  std::optional<Nat> lo_here;
  std::optional<Nat> hi_here;
  std::optional<Nat> lo_there;
  std::optional<Nat> hi_there;
  for (auto [a, b] : p.pairs()) {
    const Nat here = forward ? a : b;
    const Nat there = forward ? b : a;
    if (source.less(here, element)) {
      if (!lo_here || source.less(*lo_here, here)) {
        lo_here = here;
        lo_there = there;
      }
    } else if (!hi_here || source.less(here, *hi_here)) {
      hi_here = here;
      hi_there = there;
    }
  }
  const auto w = target.between(lo_there, hi_there);
  if (!w) return false;
  if (forward ? p.contains_right(*w) : p.contains_left(*w)) witness_failure(*w, "is already mapped");
  if ((lo_there && !target.less(*lo_there, *w)) || (hi_there && !target.less(*w, *hi_there))) {
    witness_failure(*w, "is outside its gap");
  }
  if (forward) {
    p.add(element, *w);
  } else {
    p.add(*w, element);
  }
  return true;
}

PartialIso bf_step(const PartialIso& p, const GraphSide& left, const GraphSide& right) {
  PartialIso next = p;
  if (!bf_extend(next, left, right)) throw Error(ErrorKind::Unresolved, "witness not representable");
  return next;
}

PartialIso bf_step(const PartialIso& p, const OrderSide& left, const OrderSide& right) {
  PartialIso next = p;
  if (!bf_extend(next, left, right)) throw Error(ErrorKind::Unresolved, "witness not representable");
  return next;
}

namespace {

template <class Side>
class BackForthSource final : public StagedMap::Source {
 public:
  BackForthSource(std::shared_ptr<const Side> left, std::shared_ptr<const Side> right)
      : left_(std::move(left)), right_(std::move(right)) {}

  std::optional<Nat> at(Nat key, Stage stage) const override {
    std::lock_guard lock(mutex_);
    const std::size_t end = extend(stage);
    auto it = left_index_.find(key);
    if (it == left_index_.end() || it->second >= end) return std::nullopt;
    return iso_.pairs()[it->second].second;
  }

  std::optional<Nat> preimage(Nat value, Stage stage) const override {
    std::lock_guard lock(mutex_);
    const std::size_t end = extend(stage);
    auto it = right_index_.find(value);
    if (it == right_index_.end() || it->second >= end) return std::nullopt;
    return iso_.pairs()[it->second].first;
  }

  std::vector<MapPair> pairs(Stage stage) const override {
    std::lock_guard lock(mutex_);
    const std::size_t end = extend(stage);
    std::vector<MapPair> out(iso_.pairs().begin(), iso_.pairs().begin() + static_cast<std::ptrdiff_t>(end));
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  // Number of pairs in the given stage.
  std::size_t extend(Stage stage) const {
    while (!stuck_ && built_ < stage) {
      for (int step = 0; step < 2 && !stuck_; ++step) {
        if (bf_extend(iso_, *left_, *right_)) {
          const auto [a, b] = iso_.pairs().back();
          left_index_.emplace(a, iso_.size() - 1);
          right_index_.emplace(b, iso_.size() - 1);
        } else {
          stuck_ = true;
        }
      }
      if (!stuck_) ++built_;
    }
    if (stage <= built_) return 2 * stage;
    return iso_.size();
  }

  std::shared_ptr<const Side> left_;
  std::shared_ptr<const Side> right_;
  mutable std::mutex mutex_;
  mutable PartialIso iso_;
  mutable std::unordered_map<Nat, std::size_t> left_index_;
  mutable std::unordered_map<Nat, std::size_t> right_index_;
  mutable Stage built_ = 0;
  mutable bool stuck_ = false;
};

}  // namespace

StagedMap canonical_iso(std::shared_ptr<const GraphSide> left, std::shared_ptr<const GraphSide> right) {
  return StagedMap(std::make_shared<BackForthSource<GraphSide>>(std::move(left), std::move(right)));
}

StagedMap canonical_iso(std::shared_ptr<const OrderSide> left, std::shared_ptr<const OrderSide> right) {
  return StagedMap(std::make_shared<BackForthSource<OrderSide>>(std::move(left), std::move(right)));
}

bool preserves_adjacency(std::span<const MapPair> pairs, const std::function<bool(Nat, Nat)>& adj_left,
                         const std::function<bool(Nat, Nat)>& adj_right) {
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    for (std::size_t q = p + 1; q < pairs.size(); ++q) {
      if (pairs[p].first == pairs[q].first || pairs[p].second == pairs[q].second) return false;
      if (adj_left(pairs[p].first, pairs[q].first) != adj_right(pairs[p].second, pairs[q].second)) {
        return false;
      }
    }
  }
  return true;
}

bool preserves_order(std::span<const MapPair> pairs, const std::function<bool(Nat, Nat)>& less_left,
                     const std::function<bool(Nat, Nat)>& less_right) {
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    for (std::size_t q = 0; q < pairs.size(); ++q) {
      if (p == q) continue;
      if (pairs[p].first == pairs[q].first || pairs[p].second == pairs[q].second) return false;
      if (less_left(pairs[p].first, pairs[q].first) != less_right(pairs[p].second, pairs[q].second)) {
        return false;
      }
    }
  }
  return true;
}

namespace {

struct ConjSearch {
  const StagedMap& phi;
  const StagedMap& psi;
  const std::function<bool(Nat, Nat)>& adj_left;
  const std::function<bool(Nat, Nat)>& adj_right;
  const ConjSearchOptions& options;
  Nat expansions = 0;

  struct State {
    std::map<Nat, Nat> forward;
    std::map<Nat, Nat> backward;
  };

  // Adds (a, b) and everything forced by up to closure_depth applications of
  // phi/psi and their inverses. False on any inconsistency.
  bool assign(State& state, Nat a, Nat b) const {
    std::deque<std::tuple<Nat, Nat, Nat>> queue{{a, b, 0}};
    while (!queue.empty()) {
      auto [l, r, depth] = queue.front();
      queue.pop_front();
      auto fit = state.forward.find(l);
      if (fit != state.forward.end()) {
        if (fit->second != r) return false;
        continue;
      }
      if (state.backward.count(r) != 0) return false;
      for (auto [l2, r2] : state.forward) {
        if (adj_left(l, l2) != adj_right(r, r2)) return false;
      }
      state.forward.emplace(l, r);
      state.backward.emplace(r, l);
      if (depth >= options.closure_depth) continue;
      const auto fl = phi.lookup(l, options.stage);
      const auto fr = psi.lookup(r, options.stage);
      if (fl && fr) queue.emplace_back(*fl, *fr, depth + 1);
      const auto bl = phi.inverse_lookup(l, options.stage);
      const auto br = psi.inverse_lookup(r, options.stage);
      if (bl && br) queue.emplace_back(*bl, *br, depth + 1);
    }
    return true;
  }

  std::optional<State> search(const State& state, Nat k) {
    while (k < options.prefix_length && state.forward.count(k) != 0) ++k;
    if (k >= options.prefix_length) return state;
    for (Nat v = 0; v < options.image_bound; ++v) {
      if (expansions >= options.budget) return std::nullopt;
      ++expansions;
      State next = state;
      if (!assign(next, k, v)) continue;
      if (auto done = search(next, k + 1)) return done;
    }
    return std::nullopt;
  }
};

}  // namespace

ConjSearchResult bounded_conj_search(const StagedMap& phi, const StagedMap& psi,
                                     const std::function<bool(Nat, Nat)>& adj_left,
                                     const std::function<bool(Nat, Nat)>& adj_right,
                                     const ConjSearchOptions& options) {
  ConjSearch search{phi, psi, adj_left, adj_right, options};
  ConjSearchResult result;
  if (auto found = search.search({}, 0)) {
    result.consistent = true;
    result.certificate.assign(found->forward.begin(), found->forward.end());
  }
  result.expansions = search.expansions;
  return result;
}

bool verify_conj_certificate(std::span<const MapPair> certificate, const StagedMap& phi,
                             const StagedMap& psi, const std::function<bool(Nat, Nat)>& adj_left,
                             const std::function<bool(Nat, Nat)>& adj_right, Stage stage) {
  if (!preserves_adjacency(certificate, adj_left, adj_right)) return false;
  std::map<Nat, Nat> p(certificate.begin(), certificate.end());
  for (auto [k, image] : p) {
    const auto fk = phi.lookup(k, stage);
    const auto gk = psi.lookup(image, stage);
    if (!fk || !gk) continue;
    auto it = p.find(*fk);
    if (it != p.end() && it->second != *gk) return false;
  }
  return true;
}

}  // namespace rgconj
