#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "idemlab/abelian.hpp"
#include "idemlab/group.hpp"
#include "idemlab/homcache.hpp"
#include "idemlab/homlab.hpp"
#include "idemlab/homology.hpp"

namespace idemlab {

struct Limits {
  std::size_t order_cap = kDefaultOrderCap;
  std::size_t h2_cap = 360;
  /// Largest group whose subgroup lattice is enumerated.
  std::size_t subgroup_cap = 360;
  std::uint64_t budget = kDefaultBudget;
  unsigned jobs = 1;
  /// idem_set only tries normal subgroups as cover images.
  bool normal_images_only = true;
  /// sur_gensub_classes re-derives the class count from all central
  /// extensions by quotients of H₂∖₁.
  bool verify_classification = true;
};

/// Caps, search options and memo tables shared by one computation.
class Session {
 public:
  explicit Session(Limits limits = {}, std::optional<std::filesystem::path> cache_dir = std::nullopt);

  const Limits& limits() const { return limits_; }
  SearchOptions search() const;
  HomologyOptions homology() const;
  HomStore& store() { return *store_; }

  struct SurGensubData;
  std::shared_ptr<const SurGensubData> sur_gensub_data(const FiniteGroup& i);

 private:
  Limits limits_;
  std::unique_ptr<HomStore> store_;
  std::mutex mu_;
  std::map<std::uint64_t, std::shared_ptr<const SurGensubData>> sur_memo_;
};

struct CoverClass {
  GroupHom representative;  // X → G
  Subgroup image;
  /// Kernel of the differential, a subgroup of H₂∖₁(image).
  AbelianSubgroup kernel_subgroup;
  bool is_surjective = false;
  bool is_generalized_subgroup = false;
  bool is_cellular_cover = false;
  /// Display name of the domain.
  std::string domain_name;
};

struct Session::SurGensubData {
  FiniteGroup group;
  LocalizedH2 h2;
  /// The stem extension by H₂∖₁(I).
  CentralExtension stem;
  std::vector<QuotClass> quotients;
  /// classes[i] is the model E / kernel(quotients[i]) → I.
  std::vector<CoverClass> classes;
};

/// One class per element of Quot(H₂∖₁(I)), each a surjective generalized
/// subgroup onto I.
std::vector<CoverClass> sur_gensub_classes(const FiniteGroup& i, Session& session);

/// Independent count: one representative per equivalence class of central
/// extensions X ↠ I by a quotient K of H₂∖₁(I) with Hom(X, K) = 0.
std::vector<GroupHom> surjective_gensub_extensions(const FiniteGroup& i, Session& session);

/// Kernel of the differential of a surjective generalized subgroup c.
AbelianSubgroup differential_kernel(const GroupHom& c, Session& session);

CoverClass initial_cover(const FiniteGroup& g, Session& session);

struct InG {
  struct Entry {
    Subgroup subgroup;
    QuotClass quotient;
  };
  std::vector<Entry> entries;
};
/// All (I, σ) with I ⊆ G and σ ∈ Quot(H₂∖₁(I)).
InG gensub_classes(const FiniteGroup& g, Session& session);
/// The same classes as maps X → G (surjective model composed with I ⊆ G).
std::vector<CoverClass> gensub_cover_classes(const FiniteGroup& g, Session& session);

std::vector<CoverClass> sur_cov_classes(const FiniteGroup& g, Session& session);

struct OutAction {
  AutomorphismGroup automorphisms;
  /// permutations[r][i] = class index of h_r ∘ c_i for the r-th outer
  /// representative.
  std::vector<std::vector<std::size_t>> permutations;
  bool inner_acts_trivially = true;
  /// Classes fixed by every outer representative.
  std::vector<std::size_t> fixed;
};
OutAction out_action_on_classes(const FiniteGroup& g, Session& session);

/// All cellular-cover classes of G, trivial class first.
std::vector<CoverClass> idem_set(const FiniteGroup& g, Session& session);

struct IdemIteration {
  /// levels[k] = Idem^{k+1}(G), isomorphism-class representatives.
  std::vector<std::vector<FiniteGroup>> levels;
  bool stabilized = false;
  /// Smallest n with Idem^n = Idem^{n+1} (when stabilized).
  std::size_t stabilized_at = 0;
};
IdemIteration idem_iter(const FiniteGroup& g, std::size_t n, Session& session);
IdemIteration idem_inf(const FiniteGroup& g, Session& session, std::size_t max_depth = 16);

struct DepthReport {
  std::size_t composition_length = 0;
  /// Number of isomorphism classes of domains at depth 1, 2, ...
  std::vector<std::size_t> domain_counts;
  std::size_t stabilized_at = 0;
  bool stabilized_in_bound = false;
  std::size_t composites_checked = 0;
  bool composites_ok = true;
};
DepthReport iterated_gensub_depth_check(const FiniteGroup& g, Session& session);

/// Members of `list` up to isomorphism (first occurrence kept).
std::vector<FiniteGroup> dedupe_isomorphic(const std::vector<FiniteGroup>& list);

}  // namespace idemlab
