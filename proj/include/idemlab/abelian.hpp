#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "idemlab/group.hpp"

namespace idemlab {

using Int = std::int64_t;

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, Int fill = 0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Int operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::vector<Int> row(std::size_t r) const;
  std::vector<Int> col(std::size_t c) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

struct SmithForm {
  /// min(rows, cols) diagonal entries, nonnegative, each dividing the next
  /// (zeros last).
  std::vector<Int> diagonal;
  IntMatrix row_transform;     // U, unimodular, rows x rows
  IntMatrix column_transform;  // V, unimodular, cols x cols
};

/// Smith normal form U·M·V = D. Pivot choice: smallest nonzero absolute
/// value, earliest row then earliest column, so transforms are reproducible.
/// Throws InternalError on int64 overflow.
SmithForm smith_normal_form(const IntMatrix& m);

Int gcd_int(Int a, Int b);
Int lcm_int(Int a, Int b);
/// Positive divisors of n in increasing order.
std::vector<Int> divisors(Int n);
std::vector<Int> prime_factors(Int n);

/// A finite abelian group ⊕ Z/d_i in invariant-factor form d_1 | d_2 | ...,
/// every d_i ≥ 2. Elements are residue tuples, indexed in mixed radix with
/// the first coordinate varying slowest.
class AbelianGroup {
 public:
  AbelianGroup() = default;
  /// Normalizes an arbitrary list of cyclic orders (1s and 0s rejected /
  /// dropped: 1 is dropped, 0 is invalid) into invariant factors.
  static AbelianGroup from_cyclic_orders(const std::vector<Int>& orders);

  const std::vector<Int>& invariant_factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  Int order() const;
  Int exponent() const { return factors_.empty() ? 1 : factors_.back(); }
  bool is_trivial() const { return factors_.empty(); }

  std::vector<Int> element(std::size_t index) const;
  std::size_t index(const std::vector<Int>& tuple) const;
  std::vector<Int> reduce(std::vector<Int> tuple) const;
  std::vector<Int> add(const std::vector<Int>& a, const std::vector<Int>& b) const;

  /// Cayley table realization; element indices agree with `index`.
  FiniteGroup to_group(std::string name = {}) const;
  /// "0", "Z/6", "Z/2 + Z/4".
  std::string to_string() const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
  friend auto operator<=>(const AbelianGroup&, const AbelianGroup&) = default;

 private:
  std::vector<Int> factors_;
};

/// A subgroup of an AbelianGroup, stored as the Hermite normal form of the
/// lattice L ⊂ Z^r with diag(d) Z^r ⊆ L and L / diag(d) Z^r the subgroup.
/// The form is unique, so equality is form equality.
class AbelianSubgroup {
 public:
  AbelianSubgroup() = default;
  AbelianSubgroup(AbelianGroup parent, const std::vector<std::vector<Int>>& generators);

  static AbelianSubgroup whole(const AbelianGroup& a);
  static AbelianSubgroup trivial(const AbelianGroup& a);

  const AbelianGroup& parent() const { return parent_; }
  const IntMatrix& hermite_basis() const { return basis_; }
  Int order() const;
  bool contains(const std::vector<Int>& tuple) const;
  bool is_subset_of(const AbelianSubgroup& other) const;
  /// Element indices (in the parent's indexing), sorted.
  std::vector<std::size_t> element_indices() const;
  /// Generators as residue tuples (rows of the basis, reduced).
  std::vector<std::vector<Int>> generators() const;
  /// Isomorphism type of the subgroup itself.
  AbelianGroup isomorphism_type() const;

  friend bool operator==(const AbelianSubgroup& a, const AbelianSubgroup& b) {
    return a.parent_ == b.parent_ && a.basis_ == b.basis_;
  }
  friend bool operator<(const AbelianSubgroup& a, const AbelianSubgroup& b);

 private:
  AbelianGroup parent_;
  IntMatrix basis_;  // r x r upper triangular HNF
};

/// Explicit isomorphism of a finite abelian FiniteGroup onto invariant-factor
/// form.
struct AbelianNormalForm {
  AbelianGroup group;
  /// coordinates[x] = residue tuple of element x.
  std::vector<std::vector<Int>> coordinates;
};

/// Throws InvalidInput when `a` is not abelian.
AbelianNormalForm abelian_invariants(const FiniteGroup& a);

/// One element of Quot(A), represented by its kernel.
struct QuotClass {
  AbelianSubgroup kernel;
  AbelianGroup quotient;
  /// x ↦ x · to_quotient, reduced mod the quotient's invariant factors.
  IntMatrix to_quotient;

  std::vector<Int> apply(const std::vector<Int>& x) const;
};

QuotClass make_quot_class(const AbelianSubgroup& kernel);

/// Every subgroup of A, sorted (by order, then Hermite form). Throws
/// CapExceeded when |A| > cap.
std::vector<AbelianSubgroup> all_subgroups(const AbelianGroup& a, Int cap = 4096);
std::vector<QuotClass> quot_classes(const AbelianGroup& a, Int cap = 4096);

/// {a : k·a = 0}.
AbelianSubgroup k_torsion(const AbelianGroup& a, Int k);

/// Subgroup of elements whose order involves only primes in `primes`.
AbelianSubgroup s_torsion(const AbelianGroup& a, const std::set<Int>& primes);

/// Quotient of A by its S-torsion, with the quotient map.
QuotClass s_localize(const AbelianGroup& a, const std::set<Int>& primes);

/// |Hom(A, B)| = ∏ gcd(d_i, e_j).
Int hom_count_abelian(const AbelianGroup& a, const AbelianGroup& b);

/// Image of a subgroup under the endomorphism x ↦ x·m (m is r×r and must
/// define a well-defined endomorphism).
AbelianSubgroup apply_endomorphism(const AbelianSubgroup& s, const IntMatrix& m);

/// Subgroups fixed (mapped into themselves) by every given endomorphism.
std::vector<AbelianSubgroup> invariant_subgroups(const AbelianGroup& a,
                                                 const std::vector<IntMatrix>& endomorphisms);

}  // namespace idemlab
