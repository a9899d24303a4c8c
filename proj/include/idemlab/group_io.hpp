#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "idemlab/group.hpp"

namespace idemlab {

/// Parsed contents of a group-definition file:
///
///     group <name>
///     degree <n>              # permutation form
///     gen (0 1 2)(3 4)        # one generator, points 0-based
///     gen (0 1), (2 3 4)      # separate several generators on one line
///
/// or
///
///     group <name>
///     table <n>
///     <n lines of n indices>
///
/// `#` starts a comment.
struct GroupSpec {
  enum class Kind { Permutation, Table };
  std::string name;
  Kind kind = Kind::Permutation;
  std::size_t degree = 0;
  /// Generators as image lists: gens[i][p] is the image of point p.
  std::vector<std::vector<std::uint32_t>> generators;
  std::size_t table_order = 0;
  std::vector<Elem> table;
};

GroupSpec parse_group_spec(std::string_view text);
GroupSpec read_group_spec(const std::filesystem::path& path);

/// Builds the group. Permutation groups are closed by orbit enumeration,
/// with elements numbered in breadth-first order from the identity and the
/// product taken left to right ((xy)(p) = y(x(p))). Tables with an
/// identity other than 0 are renumbered by swapping it with 0.
FiniteGroup load_group(const GroupSpec& spec, std::size_t order_cap = kDefaultOrderCap);
FiniteGroup load_group_file(const std::filesystem::path& path, std::size_t order_cap = kDefaultOrderCap);

/// Permutation group generated by image lists; shared by the loader and by
/// the built-in constructions.
FiniteGroup permutation_group(std::string name, std::size_t degree,
                              const std::vector<std::vector<std::uint32_t>>& generators,
                              std::size_t order_cap = kDefaultOrderCap);

/// "(0 1 2)(3 4)" → image list of the given degree.
std::vector<std::uint32_t> parse_cycles(std::string_view text, std::size_t degree);
std::string cycle_notation(const std::vector<std::uint32_t>& perm);

}  // namespace idemlab
