#include "rgconj/graph_reduction.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "rgconj/invariants.hpp"
#include "rgconj/rado.hpp"

namespace rgconj {

namespace {

class TransportSource final : public StagedMap::Source {
 public:
  TransportSource(StagedMap left, StagedMap right, std::function<Nat(Nat)> f,
                  std::function<Nat(Nat)> f_inverse)
      : left_(std::move(left)), right_(std::move(right)), f_(std::move(f)), f_inverse_(std::move(f_inverse)) {}

  std::optional<Nat> at(Nat key, Stage stage) const override {
    const auto v = left_.inverse_lookup(key, stage);
    if (!v) return std::nullopt;
    const auto u = guarded(f_, *v);
    if (!u) return std::nullopt;
    return right_.lookup(*u, stage);
  }

  std::optional<Nat> preimage(Nat value, Stage stage) const override {
    const auto u = right_.inverse_lookup(value, stage);
    if (!u) return std::nullopt;
    const auto v = guarded(f_inverse_, *u);
    if (!v) return std::nullopt;
    return left_.lookup(*v, stage);
  }

  std::vector<MapPair> pairs(Stage stage) const override {
    std::vector<MapPair> out;
    for (auto [v, key] : left_.stage(stage)) {
      const auto u = guarded(f_, v);
      if (!u) continue;
      if (auto image = right_.lookup(*u, stage)) out.emplace_back(key, *image);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  static std::optional<Nat> guarded(const std::function<Nat(Nat)>& g, Nat v) {
    try {
      return g(v);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::Overflow) return std::nullopt;
      throw;
    }
  }

  StagedMap left_;
  StagedMap right_;
  std::function<Nat(Nat)> f_;
  std::function<Nat(Nat)> f_inverse_;
};

}  // namespace

StagedMap transport(const StagedMap& left, const StagedMap& right, std::function<Nat(Nat)> f,
                    std::function<Nat(Nat)> f_inverse) {
  return StagedMap(std::make_shared<TransportSource>(left, right, std::move(f), std::move(f_inverse)));
}

Reduction::Reduction(GraphOracle x, ReductionOptions options)
    : x_(std::move(x)),
      options_(options),
      h_(canonical_iso(delta_side(x_, options.delta_policy), rado_side(options.rado_policy))),
      phi_(transport(h_, h_, swap_code, swap_code)) {}

StagedMap graph_reduce(const GraphOracle& x, const ReductionOptions& options) {
  return Reduction(x, options).phi();
}

std::shared_ptr<const RowPermutation> row_lift(const std::vector<MapPair>& a) {
  auto table = std::make_shared<std::map<Nat, Nat>>(a.begin(), a.end());
  return std::make_shared<RowPermutation>(false, [table](Nat c) {
    auto it = table->find(c);
    return it == table->end() ? c : it->second;
  });
}

void require_isomorphism(const GraphOracle& x, const GraphOracle& y, const std::vector<MapPair>& a) {
  const Nat n = std::max(x.core_size(), y.core_size());
  std::map<Nat, Nat> map;
  std::set<Nat> images;
  for (auto [i, j] : a) {
    if (i >= n || j >= n) {
      throw Error(ErrorKind::NotAnIsomorphism, "pair " + std::to_string(i) + " -> " + std::to_string(j) +
                                                   " outside the " + std::to_string(n) + " declared vertices");
    }
    if (!map.emplace(i, j).second || !images.insert(j).second) {
      throw Error(ErrorKind::NotAnIsomorphism, "not injective at " + std::to_string(i));
    }
  }
  if (map.size() != n) {
    throw Error(ErrorKind::NotAnIsomorphism, "covers " + std::to_string(map.size()) + " of " + std::to_string(n) + " vertices");
  }
  for (auto [i, ai] : map) {
    for (auto [j, aj] : map) {
      if (x.adj(i, j) != y.adj(ai, aj)) {
        throw Error(ErrorKind::NotAnIsomorphism,
                    "edge status of " + std::to_string(i) + "-" + std::to_string(j) + " not preserved");
      }
    }
  }
}

StagedMap graph_conjugator(const Reduction& x, const Reduction& y, const std::vector<MapPair>& a) {
  require_isomorphism(x.graph(), y.graph(), a);
  std::vector<MapPair> inverse;
  for (auto [i, j] : a) inverse.emplace_back(j, i);
  auto alpha = row_lift(a);
  auto alpha_inverse = row_lift(inverse);
  return transport(x.canonical(), y.canonical(), [alpha](Nat c) { return alpha->apply_code(c); },
                   [alpha_inverse](Nat c) { return alpha_inverse->apply_code(c); });
}

std::vector<MapPair> recover_graph_iso(const GraphOracle& x, const GraphOracle& y,
                                       const PartialIso& alpha, Nat prefix) {
  for (auto [v, w] : alpha.pairs()) {
    std::optional<Nat> sv;
    std::optional<Nat> sw;
    try {
      sv = swap_code(v);
      sw = swap_code(w);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Overflow) throw;
      continue;
    }
    const auto image = alpha.forward(*sv);
    if (image && *image != *sw) {
      throw Error(ErrorKind::NotCommuting, "alpha(swap(" + std::to_string(v) + ")) != swap(alpha(" +
                                               std::to_string(v) + "))");
    }
  }
  std::vector<MapPair> a;
  for (Nat n = 0; n < prefix; ++n) {
    const auto image = alpha.forward(pair(0, n));
    if (!image) continue;
    const VertexCode w = unpair(*image);
    if (w.row >= 2) {
      throw Error(ErrorKind::RowViolation,
                  "(0," + std::to_string(n) + ") maps into row " + std::to_string(w.row));
    }
    a.emplace_back(n, w.column);
  }
  std::set<Nat> images;
  for (auto [n, m] : a) {
    if (!images.insert(m).second) {
      throw Error(ErrorKind::NotAnIsomorphism, "two vertices recover to column " + std::to_string(m));
    }
  }
  for (auto [n, an] : a) {
    for (auto [m, am] : a) {
      if (x.adj(n, m) != y.adj(an, am)) {
        throw Error(ErrorKind::NotAnIsomorphism,
                    "recovered map breaks edge " + std::to_string(n) + "-" + std::to_string(m));
      }
    }
  }
  return a;
}

std::string_view verdict_name(Verdict::Kind kind) noexcept {
  switch (kind) {
    case Verdict::Kind::Conjugate: return "conjugate";
    case Verdict::Kind::NotConjugate: return "not-conjugate";
    case Verdict::Kind::Exhausted: return "exhausted";
  }
  return "exhausted";
}

Nat check_commuting(const StagedMap& gamma, const StagedMap& phi, const StagedMap& psi, Nat prefix,
                    Stage stage) {
  Nat checked = 0;
  for (Nat k = 0; k < prefix; ++k) {
    const auto fk = phi.lookup(k, stage);
    const auto gk = gamma.lookup(k, stage);
    if (!fk || !gk) continue;
    const auto lhs = gamma.lookup(*fk, stage);
    const auto rhs = psi.lookup(*gk, stage);
    if (!lhs || !rhs) continue;
    if (*lhs != *rhs) {
      throw Error(ErrorKind::NotCommuting, "gamma(phi(" + std::to_string(k) + ")) = " + std::to_string(*lhs) +
                                               " but psi(gamma(" + std::to_string(k) + ")) = " + std::to_string(*rhs));
    }
    ++checked;
  }
  return checked;
}

Verdict decide_conjugate_reduced(const Reduction& x, const Reduction& y, Nat budget, Nat prefix) {
  Verdict verdict;
  const IsoSearch search = graph_iso_search(x.graph(), y.graph(), budget);
  if (search.budget_hit) {
    verdict.kind = Verdict::Kind::Exhausted;
    verdict.witness = search.reason;
    return verdict;
  }
  if (!search.isomorphism) {
    verdict.kind = Verdict::Kind::NotConjugate;
    verdict.witness = search.reason;
    return verdict;
  }
  verdict.kind = Verdict::Kind::Conjugate;
  verdict.isomorphism = *search.isomorphism;
  const StagedMap gamma = graph_conjugator(x, y, verdict.isomorphism);
  const Stage stage = std::max(x.options().stage_budget, y.options().stage_budget);
  verdict.commuting_checks = check_commuting(gamma, x.phi(), y.phi(), prefix, stage);
  for (auto [k, v] : gamma.stage(stage)) {
    if (k < prefix) verdict.certificate.emplace_back(k, v);
  }
  return verdict;
}

}  // namespace rgconj
