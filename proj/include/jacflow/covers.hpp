#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "jacflow/dartgraph.hpp"
#include "jacflow/finite_group.hpp"
#include "jacflow/jacobian.hpp"
#include "jacflow/permutation.hpp"

namespace jacflow {

// Group-valued dart labels. When `tree` is set the assignment is meant to be
// T-reduced: trivial on the tree darts and generating the group.
struct VoltageAssignment {
  DartGraph base;
  FiniteGroup group;
  std::vector<GroupIndex> xi;
  std::optional<SpanningTree> tree;
};

/// Empty when xi(lambda(x)) == xi(x)^-1 everywhere and, if a tree is given,
/// the assignment is T-reduced.
std::vector<std::string> validate_voltage(const VoltageAssignment& v);

// A dart map from `total` onto `base`.
struct CoveringMap {
  DartGraph total;
  DartGraph base;
  std::vector<Dart> projection;
};

/// Derived graph with darts (g, x) numbered g * |D| + x and vertices (g, v)
/// numbered g * |V| + v, together with the projection (g, x) -> x.
/// Throws InvalidVoltage.
CoveringMap derived_graph(const VoltageAssignment& v);

/// Quotient by a group acting semiregularly on darts and vertices. Dart and
/// vertex orbits are numbered by their smallest member. Throws NotSemiregular.
CoveringMap quotient_graph(const DartGraph& g, const PermGroup& group);

struct CoveringReport {
  bool is_homomorphism = false;
  bool is_covering = false;
  std::size_t fold = 0;
  bool is_regular = false;
  std::size_t ct_order = 0;
  std::vector<std::string> problems;
};

CoveringReport validate_covering(const CoveringMap& c);

/// Automorphisms f of the total graph with projection * f == projection.
/// Throws NotACovering.
std::vector<DartPermutation> covering_transformations(const CoveringMap& c);

struct Monodromy {
  std::vector<Vertex> fibre;  // total-graph vertices over the base vertex, ascending
  PermGroup group;            // acting on positions in `fibre`
};

/// Generated by lifts of the fundamental closed walks at `base_vertex`.
/// Throws NotACovering.
Monodromy monodromy_fibre_action(const CoveringMap& c, Vertex base_vertex);

/// Action of covering transformations on the same fibre positions.
std::vector<Permutation> fibre_action(const CoveringMap& c, Vertex base_vertex,
                                      const std::vector<DartPermutation>& transformations);

struct LocalGroupReport {
  std::vector<GroupElement> defects;  // one per fundamental cycle of the base
  Integer subgroup_order;
  Integer ambient_order;
  std::size_t acting_order = 0;
  bool divides = false;  // subgroup_order divides acting_order
};

/// Pushes a flow on the total graph down to the base of the quotient covering
/// by `group` and measures how far the pushed flow is from satisfying KLC.
/// Throws NotXiInvariant.
LocalGroupReport local_group(const CoveringMap& c, const JFlow& flow, const PermGroup& group);

/// Index of the dart paired with each connection entry: the r-th copy of x
/// pairs with the r-th copy of x^-1, and a self-inverse entry with itself.
/// Throws IdentityInConnection or NotInverseClosed.
std::vector<std::size_t> connection_pairing(const FiniteGroup& group, const std::vector<GroupIndex>& connection);

/// Cay(G, M) with darts (g, j) numbered g * |M| + j.
DartGraph cayley_multigraph(const FiniteGroup& group, const std::vector<GroupIndex>& connection);

/// The one-vertex graph B(M) with voltages j -> M[j]; its derived graph is
/// Cay(G, M) dart for dart.
VoltageAssignment connection_bouquet(const FiniteGroup& group, const std::vector<GroupIndex>& connection);

// T-reduced voltages describing the quotient covering of `total` by `group`,
// and the explicit isomorphism from their derived graph onto `total`.
struct QuotientVoltages {
  VoltageAssignment voltages;
  std::vector<Dart> derived_to_total;
};

QuotientVoltages voltages_from_quotient(const DartGraph& total, const PermGroup& group);

struct PFoldReport {
  std::size_t p = 0;
  Integer tau_total;
  Integer tau_base;
  bool three_edge_connected = false;
  bool bound_holds = false;  // tau_total >= p * tau_base
  bool strict = false;       // tau_total > p * tau_base
  bool violation = false;
};

/// Spanning-tree bound for a prime-order voltage group. Throws HypothesisUnmet
/// unless the group has prime order and the derived graph is simple,
/// connected and 2-edge-connected.
PFoldReport verify_pfold(const VoltageAssignment& v);

}  // namespace jacflow
