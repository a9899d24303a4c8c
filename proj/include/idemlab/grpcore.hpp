#pragma once

#include <string>
#include <utility>
#include <vector>

#include "idemlab/abelian.hpp"
#include "idemlab/group.hpp"

namespace idemlab {

/// Subgroup generated by `gens`.
Subgroup generate(const FiniteGroup& g, std::span<const Elem> gens);
/// Subgroup generated by `s` and the extra elements.
Subgroup join(const Subgroup& s, std::span<const Elem> extra);
Subgroup normal_closure(const FiniteGroup& g, std::span<const Elem> gens);
bool is_normal(const Subgroup& n);

Subgroup center(const FiniteGroup& g);
Subgroup centralizer(const FiniteGroup& g, const Subgroup& s);
/// [A, B], generated by all a⁻¹b⁻¹ab.
Subgroup commutator_subgroup(const FiniteGroup& g, const Subgroup& a, const Subgroup& b);
Subgroup derived_subgroup(const FiniteGroup& g);

/// Γ₀ = G, Γᵢ₊₁ = [G, Γᵢ]; the list ends at the first term equal to its
/// successor, so the last entry is the stable term.
std::vector<Subgroup> lower_central_series(const FiniteGroup& g);
/// G, [G,G], ... ending at the stable term.
std::vector<Subgroup> derived_series(const FiniteGroup& g);

bool is_nilpotent(const FiniteGroup& g);
bool is_solvable(const FiniteGroup& g);
bool is_perfect(const FiniteGroup& g);
bool is_simple(const FiniteGroup& g);

/// A subgroup realized as a group of its own. Element i of `group` is
/// `subgroup.elements()[i]`; `inclusion` is the embedding.
struct SubgroupAsGroup {
  FiniteGroup group;
  GroupHom inclusion;
};
SubgroupAsGroup as_group(const Subgroup& s, std::string name = {});

struct Quotient {
  FiniteGroup group;
  GroupHom projection;
};
/// G/N on cosets; coset i is represented by its smallest element and cosets
/// are numbered in order of representatives. Throws InvalidInput if N is not
/// normal.
Quotient quotient(const FiniteGroup& g, const Subgroup& n);

struct Abelianization {
  AbelianGroup h1;
  Quotient quotient;
  /// coordinates[q] = residue tuple of quotient element q.
  std::vector<std::vector<Int>> coordinates;
  std::vector<Int> coordinates_of(Elem x) const { return coordinates[quotient.projection(x)]; }
};
Abelianization abelianization(const FiniteGroup& g);

/// All subgroups, sorted by (order, elements). Throws CapExceeded above
/// `cap`.
std::vector<Subgroup> subgroups(const FiniteGroup& g, std::size_t cap = 360);
/// All normal subgroups, sorted. Built from normal closures of single
/// elements, so it has no order cap of its own.
std::vector<Subgroup> normal_subgroups(const FiniteGroup& g);
std::size_t composition_length(const FiniteGroup& g);

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, std::string name = {});

/// histogram[k] = number of elements of order k (index 0 unused).
std::vector<std::size_t> order_histogram(const FiniteGroup& g);

}  // namespace idemlab
