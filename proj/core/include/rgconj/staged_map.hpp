#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "rgconj/error.hpp"

namespace rgconj {

/// A coherent sequence of finite partial injections on the naturals.
///
/// Stage s is a finite partial map; stage s is always a restriction of
/// stage s+1. Sources extend lazily behind a const interface, so a StagedMap
/// is a cheap shared value and earlier stages stay queryable forever.
class StagedMap {
 public:
  class Source {
   public:
    virtual ~Source() = default;
    virtual std::optional<Nat> at(Nat key, Stage stage) const = 0;
    virtual std::optional<Nat> preimage(Nat value, Stage stage) const = 0;
    /// All pairs of the given stage, ascending by key.
    virtual std::vector<MapPair> pairs(Stage stage) const = 0;
  };

  explicit StagedMap(std::shared_ptr<const Source> source);

  /// Stage s = {(k, k) : k < s}.
  static StagedMap identity();

  /// Stage s = {(k, f(k)) : k < s}; `inverse` must be the inverse of a
  /// bijection `forward`.
  static StagedMap from_bijection(std::function<Nat(Nat)> forward,
                                  std::function<Nat(Nat)> inverse);

  /// Finite partial injection present in full at every stage.
  static StagedMap from_pairs(std::vector<MapPair> pairs);

  std::optional<Nat> lookup(Nat key, Stage stage) const { return source_->at(key, stage); }
  std::optional<Nat> inverse_lookup(Nat value, Stage stage) const {
    return source_->preimage(value, stage);
  }
  std::vector<MapPair> stage(Stage s) const { return source_->pairs(s); }

  const std::shared_ptr<const Source>& source() const noexcept { return source_; }

 private:
  std::shared_ptr<const Source> source_;
};

/// True iff every pair of stage s appears in stage s+1 for all s < last,
/// and each stage is injective.
bool audit_coherence(const StagedMap& map, Stage last);

}  // namespace rgconj
