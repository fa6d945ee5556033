#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "jacflow/dartgraph.hpp"
#include "jacflow/intlinalg.hpp"
#include "jacflow/jacobian.hpp"
#include "jacflow/permutation.hpp"

namespace jacflow {

inline constexpr std::size_t kDefaultAutomorphismVertexCap = 16;
inline constexpr std::size_t kMaxParallelMultiplicity = 5;

// Bounds on the backtracking search for dart-level isomorphisms.
struct SearchLimits {
  std::size_t max_vertices = kDefaultAutomorphismVertexCap;
  std::size_t max_results = kDefaultGroupOrderCap;
};

/// Bijective, preserves vertex classes, commutes with lambda.
bool is_automorphism(const DartGraph& g, const DartPermutation& f);

/// `map` sends darts of a bijectively onto darts of b, commuting with lambda
/// and carrying vertex classes onto vertex classes.
bool is_isomorphism(const DartGraph& a, const DartGraph& b, const std::vector<Dart>& map);

/// All dart bijections a -> b that are graph isomorphisms, sorted by image.
/// Throws ScaleExceeded on more than limits.max_vertices vertices, a parallel
/// class (or loop or semiedge bundle) larger than kMaxParallelMultiplicity, or
/// more than limits.max_results results.
std::vector<DartPermutation> isomorphisms(const DartGraph& a, const DartGraph& b, SearchLimits limits = {});
std::optional<DartPermutation> find_isomorphism(const DartGraph& a, const DartGraph& b, SearchLimits limits = {});

/// The full automorphism group as dart permutations.
PermGroup automorphisms(const DartGraph& g, SearchLimits limits = {});

/// The induced permutation of vertices.
Permutation vertex_action(const DartGraph& g, const DartPermutation& f);

/// Lifts a vertex permutation to darts on a graph without loops, semiedges or
/// parallel edges. Throws NotAnAutomorphism if it does not preserve adjacency
/// or InvalidGraph if the graph is not simple.
DartPermutation extend_vertex_permutation(const DartGraph& g, const Permutation& on_vertices);

/// Every non-identity element fixes no dart and no vertex.
bool is_semiregular(const PermGroup& group, const DartGraph& g);

// Endomorphism of Z/d_1 + ... + Z/d_k given by its matrix on the
// invariant-factor basis; row i is reduced modulo d_i.
class JacAutomorphism {
 public:
  JacAutomorphism(AbelianGroup group, IntMatrix matrix);
  static JacAutomorphism identity(const AbelianGroup& group);

  const AbelianGroup& group() const { return group_; }
  const IntMatrix& matrix() const { return matrix_; }

  GroupElement apply(const GroupElement& a) const;
  bool is_identity() const;
  /// M(i, j) * d_j == 0 mod d_i for all i, j.
  bool is_well_defined() const;

  /// (a * b)(x) = a(b(x)).
  friend JacAutomorphism operator*(const JacAutomorphism& a, const JacAutomorphism& b);
  friend bool operator==(const JacAutomorphism& a, const JacAutomorphism& b) {
    return a.group_ == b.group_ && a.matrix_ == b.matrix_;
  }

 private:
  AbelianGroup group_;
  IntMatrix matrix_;
};

/// The induced automorphism of the Jacobian, sending xi(x) to xi(f(x)).
/// `flow` must come from jacobian(g). Throws NotAnAutomorphism.
JacAutomorphism theta(const DartGraph& g, const DartPermutation& f, const JFlow& flow);

/// Elements f with xi(f(x)) == xi(x) for every dart x.
std::vector<DartPermutation> theta_kernel(const PermGroup& group, const JFlow& flow);

struct FaithfulnessReport {
  bool connected = false;
  bool simple = false;
  bool three_edge_connected = false;
  bool semiregular = false;
  std::size_t group_order = 0;
  std::size_t kernel_size = 0;
  std::size_t image_size = 0;
  bool injective = false;
  bool hypotheses_hold = false;
  bool theorem_violation = false;
};

FaithfulnessReport verify_faithful(const DartGraph& g, const PermGroup& group);

struct RankReport {
  std::size_t rank = 0;
  bool cyclic = true;
  // Only meaningful when a group was supplied.
  bool corollary_applies = false;
  bool corollary_violation = false;
};

/// Throws Disconnected.
RankReport jac_rank_check(const DartGraph& g);
/// Also checks that a simple, 3-edge-connected graph with a nonabelian
/// semiregular group has a non-cyclic Jacobian.
RankReport jac_rank_check(const DartGraph& g, const PermGroup& group);

/// True when g is simple, connected and at least 3-edge-connected.
bool is_simple_three_edge_connected(const DartGraph& g);

}  // namespace jacflow
