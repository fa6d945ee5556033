#include "jacflow/finite_group.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "jacflow/error.hpp"

namespace jacflow {

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<GroupIndex>> table) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(ErrorKind::InvalidGroup, "empty Cayley table");
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n)
      throw Error(ErrorKind::InvalidGroup, "row " + std::to_string(a) + " has " + std::to_string(table[a].size()) +
                                               " entries, expected " + std::to_string(n));
    std::vector<bool> row_hit(n, false);
    for (std::size_t b = 0; b < n; ++b) {
      GroupIndex c = table[a][b];
      if (c >= n) throw Error(ErrorKind::InvalidGroup, "entry (" + std::to_string(a) + "," + std::to_string(b) + ") out of range");
      if (row_hit[c]) throw Error(ErrorKind::InvalidGroup, "row " + std::to_string(a) + " repeats " + std::to_string(c));
      row_hit[c] = true;
    }
  }
  for (std::size_t b = 0; b < n; ++b) {
    std::vector<bool> col_hit(n, false);
    for (std::size_t a = 0; a < n; ++a) {
      if (col_hit[table[a][b]])
        throw Error(ErrorKind::InvalidGroup, "column " + std::to_string(b) + " repeats " + std::to_string(table[a][b]));
      col_hit[table[a][b]] = true;
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    if (table[0][a] != a || table[a][0] != a) throw Error(ErrorKind::InvalidGroup, "element 0 is not the identity");
  if (n <= 128) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (table[table[a][b]][c] != table[a][table[b][c]])
            throw Error(ErrorKind::InvalidGroup, "not associative at (" + std::to_string(a) + "," + std::to_string(b) +
                                                     "," + std::to_string(c) + ")");
  }
  FiniteGroup g;
  g.table_ = std::move(table);
  g.inverse_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (g.table_[a][b] == 0) g.inverse_[a] = b;
  return g;
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  std::vector<std::vector<GroupIndex>> t(n, std::vector<GroupIndex>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return from_table(std::move(t));
}

FiniteGroup FiniteGroup::dihedral(std::size_t n) {
  std::vector<std::uint32_t> rot(n), ref(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    rot[i] = static_cast<std::uint32_t>((i + 1) % n);
    ref[i] = static_cast<std::uint32_t>((n - i) % n);
  }
  return from_perm_group(PermGroup::generate(n, {Permutation(rot), Permutation(ref)}));
}

FiniteGroup FiniteGroup::symmetric(std::size_t k) {
  if (k <= 1) return cyclic(1);
  std::vector<std::uint32_t> swap01(k), shift(k);
  for (std::uint32_t i = 0; i < k; ++i) {
    swap01[i] = i;
    shift[i] = static_cast<std::uint32_t>((i + 1) % k);
  }
  std::swap(swap01[0], swap01[1]);
  return from_perm_group(PermGroup::generate(k, {Permutation(swap01), Permutation(shift)}));
}

FiniteGroup FiniteGroup::quaternion() {
  // Units 1, i, j, k as 0..3; unit products as (sign, unit).
  static constexpr int kUnit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int kNeg[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<std::vector<GroupIndex>> t(8, std::vector<GroupIndex>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int ua = a / 2, ub = b / 2;
      int neg = (a % 2) ^ (b % 2) ^ kNeg[ua][ub];
      t[a][b] = static_cast<GroupIndex>(2 * kUnit[ua][ub] + neg);
    }
  return from_table(std::move(t));
}

FiniteGroup FiniteGroup::from_perm_group(const PermGroup& g) {
  const auto& el = g.elements();
  std::vector<std::vector<GroupIndex>> t(el.size(), std::vector<GroupIndex>(el.size()));
  for (std::size_t a = 0; a < el.size(); ++a)
    for (std::size_t b = 0; b < el.size(); ++b) t[a][b] = g.index_of(el[a] * el[b]);
  return from_table(std::move(t));
}

std::size_t FiniteGroup::element_order(GroupIndex a) const {
  std::size_t k = 1;
  for (GroupIndex x = a; x != identity(); x = multiply(x, a)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < order(); ++a)
    for (std::size_t b = a + 1; b < order(); ++b)
      if (table_[a][b] != table_[b][a]) return false;
  return true;
}

std::vector<GroupIndex> FiniteGroup::generated_subgroup(const std::vector<GroupIndex>& generators) const {
  std::set<GroupIndex> seen{identity()};
  std::vector<GroupIndex> frontier{identity()};
  while (!frontier.empty()) {
    std::vector<GroupIndex> next;
    for (GroupIndex x : frontier)
      for (GroupIndex s : generators) {
        GroupIndex y = multiply(x, s);
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::vector<GroupIndex> FiniteGroup::involutions() const {
  std::vector<GroupIndex> out;
  for (GroupIndex a = 1; a < order(); ++a)
    if (multiply(a, a) == identity()) out.push_back(a);
  return out;
}

}  // namespace jacflow
