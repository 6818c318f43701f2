#pragma once

#include <memory>
#include <string>
#include <vector>

#include "rgconj/backforth.hpp"
#include "rgconj/delta.hpp"
#include "rgconj/oracle.hpp"
#include "rgconj/staged_map.hpp"

namespace rgconj {

struct ReductionOptions {
  /// Least-fresh search limits for the two sides of the canonical
  /// isomorphism Delta_x -> Gamma.
  WitnessPolicy delta_policy{1U << 12};
  WitnessPolicy rado_policy{1U << 22};
  /// Stage used when a value is "resolved" by checks and verdicts.
  Stage stage_budget = 24;
};

/// phi_x = h o swap o h^-1 with h the canonical isomorphism Delta_x -> Gamma.
class Reduction {
 public:
  explicit Reduction(GraphOracle x, ReductionOptions options = {});

  const GraphOracle& graph() const noexcept { return x_; }
  const ReductionOptions& options() const noexcept { return options_; }
  /// h : Delta_x -> Gamma, staged.
  const StagedMap& canonical() const noexcept { return h_; }
  /// phi_x as a staged automorphism of Gamma.
  const StagedMap& phi() const noexcept { return phi_; }

 private:
  GraphOracle x_;
  ReductionOptions options_;
  StagedMap h_;
  StagedMap phi_;
};

StagedMap graph_reduce(const GraphOracle& x, const ReductionOptions& options = {});

/// right o f o left^-1 on Gamma, where left/right are staged isomorphisms
/// Delta -> Gamma and f a bijection of Delta's vertex codes. Values whose
/// codes overflow are left undefined.
StagedMap transport(const StagedMap& left, const StagedMap& right, std::function<Nat(Nat)> f,
                    std::function<Nat(Nat)> f_inverse);

/// The row-preserving lift of a column bijection `a` of x onto y:
/// (0,j) -> (0,a(j)), (1,j) -> (1,a(j)), rows >= 2 by choice-set images.
/// `a` acts on {0..n-1} and is the identity elsewhere.
std::shared_ptr<const RowPermutation> row_lift(const std::vector<MapPair>& a);

/// gamma = h_y o alpha o h_x^-1. Throws NotAnIsomorphism unless `a` is a
/// bijection of the declared vertex sets preserving edges both ways.
StagedMap graph_conjugator(const Reduction& x, const Reduction& y, const std::vector<MapPair>& a);

/// Checks `a` is an isomorphism between the padded graphs x and y.
void require_isomorphism(const GraphOracle& x, const GraphOracle& y, const std::vector<MapPair>& a);

/// Reads off a(n) = column of alpha((0,n)) for n < prefix in alpha's domain.
/// Throws RowViolation if such an image leaves rows 0/1, NotCommuting if
/// alpha does not commute with the swap, NotAnIsomorphism if the result is
/// not edge-preserving.
std::vector<MapPair> recover_graph_iso(const GraphOracle& x, const GraphOracle& y,
                                       const PartialIso& alpha, Nat prefix);

struct Verdict {
  enum class Kind { Conjugate, NotConjugate, Exhausted };
  Kind kind = Kind::Exhausted;
  /// The isomorphism found, when conjugate.
  std::vector<MapPair> isomorphism;
  /// gamma restricted to resolved keys below the verification prefix.
  std::vector<MapPair> certificate;
  /// Number of keys k at which gamma(phi_x(k)) = phi_y(gamma(k)) was checked.
  Nat commuting_checks = 0;
  /// Why no isomorphism exists (or why the search stopped).
  std::string witness;
};

std::string_view verdict_name(Verdict::Kind kind) noexcept;

/// Decides conjugacy of phi_x and phi_y for finite x, y through the
/// isomorphism problem for x and y; a found isomorphism is turned into a
/// conjugator and checked on the first `prefix` naturals.
Verdict decide_conjugate_reduced(const Reduction& x, const Reduction& y, Nat budget = 1'000'000,
                                 Nat prefix = 200);

/// Keys k < prefix at which both sides of gamma o phi = psi o gamma resolve
/// at `stage`; throws NotCommuting on a mismatch. Returns the count checked.
Nat check_commuting(const StagedMap& gamma, const StagedMap& phi, const StagedMap& psi, Nat prefix,
                    Stage stage);

}  // namespace rgconj
