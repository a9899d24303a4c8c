#pragma once

#include <string>
#include <vector>

#include "idemlab/abelian.hpp"
#include "idemlab/group.hpp"
#include "idemlab/homlab.hpp"

namespace idemlab {

FiniteGroup trivial_group();
FiniteGroup cyclic_group(std::size_t n);
FiniteGroup abelian_group(const std::vector<Int>& cyclic_orders);
FiniteGroup symmetric_group(std::size_t n);
FiniteGroup alternating_group(std::size_t n);
/// Dihedral group of order 2n.
FiniteGroup dihedral_group(std::size_t n);
FiniteGroup quaternion_group();
FiniteGroup psl2_7();
/// The nonsplit central extension of A₅ by ℤ/2.
FiniteGroup sl2_5();

/// Built-in groups by name: Z<n>, S<n>, A<n>, D<n> (order 2n), Q8,
/// PSL2_7, SL2_5, trivial. Throws InvalidInput for unknown names.
FiniteGroup named_group(const std::string& name);

/// All groups of the given order up to isomorphism (order ≤ 59, i.e. the
/// solvable range: each group is built as an extension of a normal subgroup
/// of prime index).
std::vector<FiniteGroup> groups_of_order(std::size_t order, const SearchOptions& options = {});
/// All p-groups of order p^k up to isomorphism, via central extensions.
std::vector<FiniteGroup> p_groups(Int p, int k);
/// All nilpotent groups of the given order (direct products of p-groups).
std::vector<FiniteGroup> nilpotent_groups(std::size_t order);
std::vector<FiniteGroup> abelian_groups(std::size_t order);
/// Isomorphism types of the subgroups of S₅.
std::vector<FiniteGroup> s5_subgroup_types();

/// Cheap isomorphism invariant: equal groups give equal signatures.
std::vector<std::uint64_t> group_signature(const FiniteGroup& g);

/// Adds g to `reps` unless isomorphic to a member; returns its index.
std::size_t add_up_to_isomorphism(std::vector<FiniteGroup>& reps, const FiniteGroup& g,
                                  std::vector<std::vector<std::uint64_t>>& signatures);

}  // namespace idemlab
