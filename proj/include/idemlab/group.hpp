#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace idemlab {

using Elem = std::uint32_t;

inline constexpr std::size_t kDefaultOrderCap = 4096;

/// A finite group stored as a dense Cayley table. Element 0 is the identity.
/// The element numbering is fixed at construction; every canonical form in
/// the library depends on it, so nothing downstream ever renumbers.
///
/// Copies are cheap: the table is shared and immutable.
class FiniteGroup {
 public:
  /// The trivial group.
  FiniteGroup();

  /// Builds a group from a row-major table with `table[a * order + b] = ab`.
  /// Element 0 must be the identity. Checks identity, inverses and the Latin
  /// square property; associativity is checked separately because it is
  /// cubic (see `check_associative`).
  static FiniteGroup from_table(std::string name, std::size_t order,
                                std::vector<Elem> table,
                                std::vector<std::string> labels = {},
                                std::size_t order_cap = kDefaultOrderCap);

  std::size_t order() const { return impl_->order; }
  Elem mul(Elem a, Elem b) const { return impl_->table[static_cast<std::size_t>(a) * impl_->order + b]; }
  Elem inv(Elem a) const { return impl_->inverse[a]; }
  static constexpr Elem identity() { return 0; }
  std::uint32_t element_order(Elem a) const { return impl_->elem_order[a]; }

  /// A small generating set, chosen greedily: each step adds the element
  /// that enlarges the generated subgroup most, preferring elements whose
  /// order is rare (fewer candidate images in homomorphism searches).
  /// Never empty; the trivial group is generated by {0}.
  std::span<const Elem> generators() const { return impl_->generators; }

  const std::string& name() const { return impl_->name; }
  std::span<const std::string> labels() const { return impl_->labels; }
  std::span<const Elem> table() const { return impl_->table; }
  /// FNV-1a hash of the table; equal tables give equal fingerprints.
  std::uint64_t fingerprint() const { return impl_->fingerprint; }
  bool is_abelian() const { return impl_->abelian; }

  Elem power(Elem a, std::uint64_t k) const;
  Elem commutator(Elem a, Elem b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }

  /// Same group, new display name.
  FiniteGroup renamed(std::string name) const;

  bool same_table(const FiniteGroup& other) const;

 private:
  struct Impl {
    std::string name;
    std::size_t order = 1;
    std::vector<Elem> table;
    std::vector<Elem> inverse;
    std::vector<std::uint32_t> elem_order;
    std::vector<Elem> generators;
    std::vector<std::string> labels;
    std::uint64_t fingerprint = 0;
    bool abelian = true;
  };
  explicit FiniteGroup(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Exhaustive associativity check on all triples; throws InvalidInput with
/// the first failing triple.
void check_associative(const FiniteGroup& g);

/// A subgroup as a sorted element list of its parent.
class Subgroup {
 public:
  Subgroup(FiniteGroup parent, std::vector<Elem> elements);

  static Subgroup whole(const FiniteGroup& g);
  static Subgroup trivial(const FiniteGroup& g);

  const FiniteGroup& parent() const { return parent_; }
  std::span<const Elem> elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(Elem x) const { return member_[x] != 0; }
  bool is_whole() const { return elements_.size() == parent_.order(); }
  bool is_trivial() const { return elements_.size() == 1; }
  bool is_subset_of(const Subgroup& other) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elements_ == b.elements_; }
  friend bool operator<(const Subgroup& a, const Subgroup& b);

 private:
  FiniteGroup parent_;
  std::vector<Elem> elements_;
  std::vector<std::uint8_t> member_;
};

/// A homomorphism stored as its full element map.
class GroupHom {
 public:
  /// Wraps a full map; verifies the homomorphism property on generators
  /// (which is sufficient) and throws InvalidInput otherwise.
  GroupHom(FiniteGroup domain, FiniteGroup codomain, std::vector<Elem> map);

  /// Extends images of `domain.generators()` to a full map, or returns an
  /// empty optional-like failure via exception if inconsistent.
  static GroupHom from_generator_images(const FiniteGroup& domain, const FiniteGroup& codomain,
                                        std::span<const Elem> images);
  static GroupHom identity(const FiniteGroup& g);
  static GroupHom trivial(const FiniteGroup& domain, const FiniteGroup& codomain);

  const FiniteGroup& domain() const { return domain_; }
  const FiniteGroup& codomain() const { return codomain_; }
  std::span<const Elem> map() const { return map_; }
  Elem operator()(Elem x) const { return map_[x]; }

  bool is_injective() const;
  bool is_surjective() const;
  bool is_trivial() const;
  Subgroup image() const;
  Subgroup kernel() const;

  /// `after ∘ before`.
  friend GroupHom compose(const GroupHom& after, const GroupHom& before);

 private:
  struct Unchecked {};
  GroupHom(FiniteGroup domain, FiniteGroup codomain, std::vector<Elem> map, Unchecked);
  FiniteGroup domain_;
  FiniteGroup codomain_;
  std::vector<Elem> map_;
};

/// Tries to extend generator images to a homomorphism; returns an empty
/// vector when the assignment is inconsistent.
std::vector<Elem> extend_generator_images(const FiniteGroup& domain, const FiniteGroup& codomain,
                                          std::span<const Elem> images);

}  // namespace idemlab
