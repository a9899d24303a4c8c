#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "idemlab/group.hpp"

namespace idemlab {

class HomStore;

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

/// Search knobs shared by every Hom computation.
struct SearchOptions {
  /// Maximum number of partial-map extensions before BudgetExceeded.
  std::uint64_t budget = kDefaultBudget;
  /// Worker threads for enumerate/count (split over first-generator images).
  unsigned jobs = 1;
  /// Optional memo / disk cache for complete Hom sets.
  HomStore* store = nullptr;
};

/// Hom(X, G) as a complete list of full maps.
struct HomSet {
  FiniteGroup domain;
  FiniteGroup codomain;
  std::vector<GroupHom> homs;
  bool complete = true;

  std::size_t size() const { return homs.size(); }
};

/// Constraints for a single search.
struct HomQuery {
  /// If non-empty, allowed[i] lists the permitted images of generator i
  /// (any order); the order filter is applied on top.
  std::vector<std::vector<Elem>> allowed;
  /// Only bijections (requires |X| = |G|).
  bool bijective = false;
  /// Stop after this many homomorphisms (0 = no limit).
  std::uint64_t limit = 0;
};

/// Called with the full element map of each homomorphism found, in search
/// order. Return false to stop.
using HomVisitor = std::function<bool(std::span<const Elem> map)>;

/// Serial search; returns the number of homomorphisms visited.
std::uint64_t visit_homs(const FiniteGroup& x, const FiniteGroup& g, const HomQuery& query,
                         const HomVisitor& visit, const SearchOptions& options = {});

/// Complete Hom(X, G), in deterministic search order.
HomSet enumerate_homs(const FiniteGroup& x, const FiniteGroup& g, const SearchOptions& options = {});
/// Shared version that consults `options.store` when present.
std::shared_ptr<const HomSet> hom_set(const FiniteGroup& x, const FiniteGroup& g,
                                      const SearchOptions& options = {});
/// |Hom(X, G)|, stopping early at `limit` when nonzero.
std::uint64_t count_homs(const FiniteGroup& x, const FiniteGroup& g, const SearchOptions& options = {},
                         std::uint64_t limit = 0);

bool is_hom_trivial_set(const FiniteGroup& x, const FiniteGroup& g, const SearchOptions& options = {});

enum class GensubMethod { Brute, Structural };

/// a: X → G with f ↦ a∘f injective on Hom(X, X).
bool is_generalized_subgroup(const GroupHom& a, GensubMethod method = GensubMethod::Brute,
                             const SearchOptions& options = {});
/// Ker(a) central in X and Hom(X, Ker a) = 0.
bool structural_gensub(const GroupHom& a);
/// c: A → G with f ↦ c∘f a bijection Hom(A, A) → Hom(A, G).
bool is_cellular_cover(const GroupHom& c, const SearchOptions& options = {});

/// Some isomorphism h: dom(c) → dom(d) with d∘h = c. Returns it, if any.
std::optional<GroupHom> cover_equivalence(const GroupHom& c, const GroupHom& d, const SearchOptions& options = {});
bool covers_equivalent(const GroupHom& c, const GroupHom& d, const SearchOptions& options = {});

struct AutomorphismGroup {
  std::vector<GroupHom> all;
  std::vector<bool> inner;
  /// Indices into `all` of one representative per outer class (identity
  /// first).
  std::vector<std::size_t> outer_representatives;

  std::size_t inner_count() const;
  std::size_t outer_count() const { return outer_representatives.size(); }
};
AutomorphismGroup automorphisms(const FiniteGroup& g, const SearchOptions& options = {});

/// Conjugation x ↦ h⁻¹xh.
GroupHom conjugation(const FiniteGroup& g, Elem h);

std::optional<GroupHom> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b, const SearchOptions& options = {});
bool are_isomorphic(const FiniteGroup& a, const FiniteGroup& b, const SearchOptions& options = {});

}  // namespace idemlab
