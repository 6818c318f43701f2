#include "rgconj/staged_map.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace rgconj {

namespace {

class BijectionSource final : public StagedMap::Source {
 public:
  // `total`: every lookup resolves at every stage; only the listing is staged.
  BijectionSource(std::function<Nat(Nat)> f, std::function<Nat(Nat)> g, bool total)
      : forward_(std::move(f)), inverse_(std::move(g)), total_(total) {}

  std::optional<Nat> at(Nat key, Stage stage) const override {
    if (!total_ && key >= stage) return std::nullopt;
    return forward_(key);
  }
  std::optional<Nat> preimage(Nat value, Stage stage) const override {
    const Nat k = inverse_(value);
    if (!total_ && k >= stage) return std::nullopt;
    return k;
  }
  std::vector<MapPair> pairs(Stage stage) const override {
    std::vector<MapPair> out;
    out.reserve(stage);
    for (Nat k = 0; k < stage; ++k) out.emplace_back(k, forward_(k));
    return out;
  }

 private:
  std::function<Nat(Nat)> forward_;
  std::function<Nat(Nat)> inverse_;
  bool total_;
};

class PairsSource final : public StagedMap::Source {
 public:
  explicit PairsSource(std::vector<MapPair> pairs) {
    for (auto [a, b] : pairs) {
      forward_.emplace(a, b);
      backward_.emplace(b, a);
    }
  }
  std::optional<Nat> at(Nat key, Stage) const override {
    auto it = forward_.find(key);
    if (it == forward_.end()) return std::nullopt;
    return it->second;
  }
  std::optional<Nat> preimage(Nat value, Stage) const override {
    auto it = backward_.find(value);
    if (it == backward_.end()) return std::nullopt;
    return it->second;
  }
  std::vector<MapPair> pairs(Stage) const override {
    return {forward_.begin(), forward_.end()};
  }

 private:
  std::map<Nat, Nat> forward_;
  std::map<Nat, Nat> backward_;
};

}  // namespace

StagedMap::StagedMap(std::shared_ptr<const Source> source) : source_(std::move(source)) {}

StagedMap StagedMap::identity() {
  auto same = [](Nat k) { return k; };
  return StagedMap(std::make_shared<BijectionSource>(same, same, true));
}

StagedMap StagedMap::from_bijection(std::function<Nat(Nat)> forward,
                                    std::function<Nat(Nat)> inverse) {
  return StagedMap(std::make_shared<BijectionSource>(std::move(forward), std::move(inverse), false));
}

StagedMap StagedMap::from_pairs(std::vector<MapPair> pairs) {
  return StagedMap(std::make_shared<PairsSource>(std::move(pairs)));
}

bool audit_coherence(const StagedMap& map, Stage last) {
  std::map<Nat, Nat> previous;
  for (Stage s = 0; s <= last; ++s) {
    std::map<Nat, Nat> current;
    std::set<Nat> images;
    for (auto [a, b] : map.stage(s)) {
      if (!current.emplace(a, b).second) return false;
      if (!images.insert(b).second) return false;
    }
    for (auto [a, b] : previous) {
      auto it = current.find(a);
      if (it == current.end() || it->second != b) return false;
    }
    previous = std::move(current);
  }
  return true;
}

}  // namespace rgconj
