#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace jacflow {

inline constexpr std::size_t kDefaultGroupOrderCap = 20000;

// Permutation of {0, ..., n-1} in image form.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint32_t> image);

  static Permutation identity(std::size_t n);

  std::size_t degree() const { return image_.size(); }
  std::uint32_t operator()(std::uint32_t x) const { return image_[x]; }
  const std::vector<std::uint32_t>& image() const { return image_; }

  Permutation inverse() const;
  bool is_identity() const;
  bool has_fixed_point() const;
  std::size_t order() const;

  /// Disjoint-cycle notation, fixed points omitted, "()" for the identity.
  std::string cycle_string() const;

  /// (a * b)(x) = a(b(x)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> image_;
};

using DartPermutation = Permutation;

/// Parses cycle notation such as "(0 1)(2 3)", "(0,1)(2,3)" or, when every
/// point is a single digit, "(01)(23)". Throws Parse.
Permutation parse_cycles(std::string_view text, std::size_t degree);

// An explicitly enumerated permutation group. Elements are ordered by word
// length in the generators, then lexicographically by image; the identity is
// always first.
class PermGroup {
 public:
  /// Closure of `generators`. Throws ScaleExceeded past `order_cap`.
  static PermGroup generate(std::size_t degree, std::vector<Permutation> generators,
                            std::size_t order_cap = kDefaultGroupOrderCap);
  /// Wraps a complete element list (sorted, identity first) and derives a
  /// small generating set. The list must be closed under composition.
  static PermGroup from_elements(std::size_t degree, std::vector<Permutation> elements);
  static PermGroup trivial(std::size_t degree);

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Permutation>& elements() const { return elements_; }

  bool contains(const Permutation& p) const { return index_.count(p.image()) != 0; }
  std::size_t index_of(const Permutation& p) const;
  bool is_abelian() const;
  bool is_closed() const;

 private:
  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::map<std::vector<std::uint32_t>, std::size_t> index_;

  void reindex();
};

}  // namespace jacflow
