#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "jacflow/covers.hpp"
#include "jacflow/dartgraph.hpp"
#include "jacflow/finite_group.hpp"
#include "jacflow/permutation.hpp"
#include "jacflow/random.hpp"

// Seeded instance families. Every generator is a pure function of its
// arguments: the same seed and parameters give the same instance.
namespace jacflow::generate {

/// Erdos-Renyi G(n, p) conditioned on connectivity: substream k = 0, 1, ...
/// is drawn until the graph is connected. Edges are added in (i, j) order.
/// Throws InvalidGraph for n < 1 or p outside (0, 1].
DartGraph gnp_simple(std::uint64_t seed, std::size_t n, double p);

/// A uniform random recursive tree on n vertices plus `extra` random
/// non-loop edges, each endpoint pair used at most `max_multiplicity` times.
DartGraph random_multigraph(std::uint64_t seed, std::size_t n, std::size_t extra,
                            std::size_t max_multiplicity = 3);

/// Adds `count` loops and semiedges at random vertices, each a semiedge with
/// probability one half. Original darts keep their ids.
DartGraph add_loops_and_semiedges(std::uint64_t seed, const DartGraph& g, std::size_t count);

/// T-reduced voltages on the breadth-first tree. Co-tree edges get uniform
/// elements, semiedges uniform self-inverse elements; substreams are tried
/// until the voltages generate. Throws HypothesisUnmet after `attempts`
/// failures.
VoltageAssignment random_voltage(std::uint64_t seed, const DartGraph& base, const FiniteGroup& group,
                                 std::size_t attempts = 256);

/// An inverse-closed generating connection multiset without the identity:
/// random non-identity elements, each added with its inverse, until the
/// multiset generates and has at least `min_size` entries.
std::vector<GroupIndex> random_connection(std::uint64_t seed, const FiniteGroup& group, std::size_t min_size);

/// The left-regular action of the group on the darts of Cay(G, M):
/// h sends dart (g, j) to (h g, j).
PermGroup left_regular_action(const FiniteGroup& group, const std::vector<GroupIndex>& connection);

}  // namespace jacflow::generate
