#pragma once

#include <set>
#include <string>
#include <vector>

#include "idemlab/abelian.hpp"
#include "idemlab/group.hpp"

namespace idemlab {

class HomStore;

struct HomologyOptions {
  /// Largest |G| accepted by the counting backend.
  std::size_t h2_cap = 360;
  /// Largest cocycle space enumerated by two_cocycle_classes.
  std::size_t cocycle_cap = std::size_t{1} << 20;
  std::size_t order_cap = kDefaultOrderCap;
  HomStore* store = nullptr;
};

/// A normalized 2-cocycle G × G → K. table[g·|G| + h] is the K-index
/// (AbelianGroup::index) of f(g, h).
struct Cocycle {
  FiniteGroup group;
  AbelianGroup kernel;
  std::vector<std::uint32_t> table;
  /// Canonical coordinates (values on the non-tree generator edges, one
  /// block per invariant factor of K); equal iff cohomologous.
  std::vector<std::vector<Int>> coordinates;

  std::uint32_t operator()(Elem g, Elem h) const { return table[static_cast<std::size_t>(g) * group.order() + h]; }
  bool is_zero() const;
};

struct CentralExtension {
  FiniteGroup base;
  AbelianGroup kernel;
  FiniteGroup total;
  GroupHom projection;  // total → base
  GroupHom embedding;   // kernel.to_group() → total

  Subgroup kernel_subgroup() const { return embedding.image(); }
};

/// Invariant factors of H₂(G; ℤ).
AbelianGroup schur_multiplier(const FiniteGroup& g, const HomologyOptions& options = {});

/// |H²(G, ℤ/m)| by linear algebra on the cochain complex.
Int cohomology_order(const FiniteGroup& g, Int m, const HomologyOptions& options = {});

struct LocalizedH2 {
  AbelianGroup h2;
  AbelianGroup h1;
  std::set<Int> primes;  // primes dividing |H₁(G)|
  QuotClass localization;  // H₂ ↠ H₂∖₁
  const AbelianGroup& group() const { return localization.quotient; }
};
/// H₂∖₁(G): H₂(G) modulo its torsion at the primes dividing |H₁(G)|.
LocalizedH2 h2_loc(const FiniteGroup& g, const HomologyOptions& options = {});

/// One canonical representative per class of H²(G, K), sorted by canonical
/// coordinates; the zero class comes first.
std::vector<Cocycle> two_cocycle_classes(const FiniteGroup& g, const AbelianGroup& k,
                                         const HomologyOptions& options = {});

/// Throws InvalidInput if the cocycle identity fails.
void check_cocycle(const Cocycle& f);

/// Total group on pairs, element (g, k) stored at index g·|K| + k, with
/// (g₁,k₁)(g₂,k₂) = (g₁g₂, k₁+k₂+f(g₁,g₂)).
CentralExtension build_central_extension(const Cocycle& f, std::string name = {},
                                         std::size_t order_cap = kDefaultOrderCap);

/// Embedded kernel contained in [X, X].
bool is_stem(const CentralExtension& ext);

}  // namespace idemlab
