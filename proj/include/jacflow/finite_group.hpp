#pragma once

#include <cstddef>
#include <vector>

#include "jacflow/permutation.hpp"

namespace jacflow {

using GroupIndex = std::size_t;

// Abstract finite group given by its Cayley table over 0..n-1, identity 0.
class FiniteGroup {
 public:
  /// Checks the Latin-square property, that 0 is the identity, and
  /// associativity exhaustively when n <= 128. Throws InvalidGroup.
  static FiniteGroup from_table(std::vector<std::vector<GroupIndex>> table);

  static FiniteGroup cyclic(std::size_t n);
  static FiniteGroup dihedral(std::size_t n);  // symmetries of the n-gon, order 2n
  static FiniteGroup symmetric(std::size_t k);
  /// Elements 1, -1, i, -i, j, -j, k, -k at indices 0..7.
  static FiniteGroup quaternion();
  /// Element i of the result is element i of `g`; the product is composition.
  static FiniteGroup from_perm_group(const PermGroup& g);

  std::size_t order() const { return table_.size(); }
  static constexpr GroupIndex identity() { return 0; }
  GroupIndex multiply(GroupIndex a, GroupIndex b) const { return table_[a][b]; }
  GroupIndex inverse(GroupIndex a) const { return inverse_[a]; }
  const std::vector<std::vector<GroupIndex>>& table() const { return table_; }

  std::size_t element_order(GroupIndex a) const;
  bool is_abelian() const;
  /// Sorted elements of the subgroup generated by `generators`.
  std::vector<GroupIndex> generated_subgroup(const std::vector<GroupIndex>& generators) const;
  std::vector<GroupIndex> involutions() const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.table_ == b.table_; }

 private:
  std::vector<std::vector<GroupIndex>> table_;
  std::vector<GroupIndex> inverse_;
};

}  // namespace jacflow
