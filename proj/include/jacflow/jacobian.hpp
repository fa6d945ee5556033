#pragma once

#include <string>
#include <vector>

#include "jacflow/dartgraph.hpp"
#include "jacflow/intlinalg.hpp"

namespace jacflow {

// Coordinates with respect to the invariant-factor basis; coords[i] lies in
// [0, d_i).
struct GroupElement {
  std::vector<Integer> coords;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

// Finite abelian group Z/d_1 + ... + Z/d_k with 2 <= d_1 | d_2 | ... | d_k.
// The empty factor list is the trivial group.
class AbelianGroup {
 public:
  AbelianGroup() = default;
  explicit AbelianGroup(std::vector<Integer> factors);

  const std::vector<Integer>& factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  Integer order() const;
  bool is_cyclic() const { return factors_.size() <= 1; }

  GroupElement zero() const;
  GroupElement reduce(std::vector<Integer> coords) const;
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement negate(const GroupElement& a) const;
  GroupElement scale(const GroupElement& a, const Integer& k) const;
  bool is_zero(const GroupElement& a) const;

  /// Order of the subgroup generated by `generators`.
  Integer subgroup_order(const std::vector<GroupElement>& generators) const;
  bool generated_by(const std::vector<GroupElement>& generators) const {
    return subgroup_order(generators) == order();
  }

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

 private:
  std::vector<Integer> factors_;
};

// A flow assigning a group element to every dart. For a J-flow produced by
// jacobian(), basis_preimages[i] holds integer coefficients over D+ (in edge
// order) of an element mapping to the i-th basis vector of the group.
struct JFlow {
  AbelianGroup group;
  std::vector<GroupElement> xi;
  std::vector<std::vector<Integer>> basis_preimages;
};

/// Relations presenting the Jacobian over the free group on D+: vertex stars,
/// then fundamental cycles of the breadth-first tree, then one length-1 cycle
/// per loop and per semiedge. Columns follow edge order. Zero rows and
/// repeated rows are dropped. Throws Disconnected.
IntMatrix relation_matrix(const DartGraph& g);

/// The Jacobian together with an explicit J-flow. Throws Disconnected.
JFlow jacobian(const DartGraph& g);

/// Sum of the flow along a walk.
GroupElement walk_sum(const JFlow& f, const Walk& w);

/// FLW and KLV everywhere, KLC on the fundamental cycles. Empty means harmonic.
std::vector<std::string> validate_flow(const DartGraph& g, const JFlow& f);

/// The GEN condition: the flow values generate the group.
bool flow_generates(const JFlow& f);

/// Throws LoopOrSemiedgePresent.
IntMatrix laplacian(const DartGraph& g);

struct Divisor {
  std::vector<Integer> values;  // indexed by vertex

  Integer degree() const;
};

/// f(head(x)) - f(tail(x)) for every dart x.
std::vector<Integer> divisor_flow(const DartGraph& g, const Divisor& f);

/// Torsion of Z^V / Laplacian image, which is Div_0 / Laplacian(Div).
/// Throws LoopOrSemiedgePresent or Disconnected.
AbelianGroup jacobian_via_divisors(const DartGraph& g);

}  // namespace jacflow
