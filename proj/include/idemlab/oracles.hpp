#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "idemlab/covers.hpp"

namespace idemlab {

struct OracleReport {
  OracleReport() = default;
  explicit OracleReport(std::string name) : suite(std::move(name)) {}

  std::string suite;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  /// Instances where the hypothesis of an implication held.
  std::uint64_t nonvacuous = 0;
  std::vector<std::string> messages;

  bool passed() const { return failures == 0; }
  void fail(std::string message);
};

struct OracleOptions {
  /// charcCmono: every hom between groups up to this order.
  std::size_t exhaustive_order = 16;
  /// charcCmono: random homs between groups up to this order.
  std::size_t sample_order = 24;
  std::size_t samples = 1000;
  std::uint64_t seed = 0x1de3'1ab5;
  std::size_t abelian_order = 32;
  std::size_t nilpotent_order = 32;
  std::size_t target_order = 8;
  std::size_t classification_order = 24;
};

/// Brute Hom(X,X) → Hom(X,G) injectivity vs central kernel with
/// Hom(X, Ker) = 0, and vs the structural test.
OracleReport suite_charc_c_mono(Session& s, const OracleOptions& o = {});
/// Abelian A: an inclusion S ⊆ A is a cellular cover iff S = A[k] for some k;
/// Idem(A) is the set of torsion subgroups.
OracleReport suite_covf_abelian(Session& s, const OracleOptions& o = {});
/// Nilpotent G, finite H with Hom(G,H) = 0: g ↦ g^|H| is onto.
OracleReport suite_key_nilpotent(Session& s, const OracleOptions& o = {});
/// Nilpotent G: Hom(G,X) = 0 ⇒ Hom(Γ_i G, X) = 0, and Hom(X,G) = 0 ⇒
/// Hom(X, G/N) = 0 for normal N.
OracleReport suite_big_subgroups(Session& s, const OracleOptions& o = {});
/// |sur_gensub_classes(I)| = |Quot(H₂∖₁(I))| against an independent count
/// of central extensions, over small groups, A₅ and the S₅ subgroup types.
OracleReport suite_classification(Session& s, const OracleOptions& o = {});
/// Simple groups: cellular classes = 1 + Out-fixed subgroups of H₂; the
/// action is trivial when H₂∖₁ is cyclic.
OracleReport suite_cov_simple(Session& s, const OracleOptions& o = {});
/// Properties of covers over small groups: torsion differentials give
/// covers, cyclic H₂∖₁ makes every class a cover, cover kernels are
/// Out-fixed, the initial cover is cellular and unique, Idem images are
/// fully invariant with central kernels.
OracleReport suite_cover_properties(Session& s, const OracleOptions& o = {});
/// Order-3 automorphism of (ℤ/2)² fixes exactly the two trivial subgroups.
OracleReport suite_abelian_module(Session& s, const OracleOptions& o = {});
/// Idem^∞ fixpoints: A₅ stabilizes at 2 with 4 classes, ℤ/p at 1.
OracleReport suite_iteration(Session& s, const OracleOptions& o = {});
/// Iterated generalized subgroups stabilize by depth l+1; composites of
/// surjective generalized subgroups are generalized subgroups.
OracleReport suite_depth(Session& s, const OracleOptions& o = {});
/// For X ∈ Idem(A₅) nontrivial, every nontrivial X → A₅ is a cover.
OracleReport suite_simple_targets(Session& s, const OracleOptions& o = {});

std::vector<std::string> oracle_suites();
/// Throws InvalidInput (listing the suites) for an unknown name.
OracleReport run_oracle(const std::string& name, Session& s, const OracleOptions& o = {});

}  // namespace idemlab
