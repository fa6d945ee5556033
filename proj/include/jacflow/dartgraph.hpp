#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "jacflow/intlinalg.hpp"

namespace jacflow {

using Dart = std::uint32_t;
using Vertex = std::uint32_t;

// Unchecked description of a graph as (darts, involution, vertex partition).
struct GraphParts {
  std::size_t dart_count = 0;
  std::vector<Dart> lambda;
  std::vector<std::vector<Dart>> vertices;
};

/// Lists every way `parts` fails to describe a graph; empty means valid.
std::vector<std::string> validate(const GraphParts& parts);

enum class EdgeKind { Semiedge, Loop, Ordinary };

// One lambda-orbit. `dart` is the smaller id and is the orbit's member of D+.
struct Edge {
  Dart dart;
  Dart inverse;
  EdgeKind kind;
};

// A finite graph in the dart model: darts, an involution pairing them into
// edges, and an equivalence whose classes are the vertices. Semiedges, loops
// and parallel edges are all allowed; isolated vertices are not. Vertices are
// numbered in the order given; darts within a vertex are kept sorted.
class DartGraph {
 public:
  explicit DartGraph(GraphParts parts);

  /// Builds the vertex partition from a per-dart incidence array with vertex
  /// ids 0..n-1.
  static DartGraph from_incidence(std::vector<Dart> lambda, const std::vector<Vertex>& vertex_of);

  std::size_t dart_count() const { return lambda_.size(); }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  Dart inverse(Dart x) const { return lambda_[x]; }
  Vertex vertex_of(Dart x) const { return vertex_of_[x]; }
  Vertex head(Dart x) const { return vertex_of_[lambda_[x]]; }
  std::span<const Dart> darts_at(Vertex v) const { return vertices_[v]; }
  std::size_t valency(Vertex v) const { return vertices_[v].size(); }

  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_of(Dart x) const { return edge_index_[x]; }
  EdgeKind kind(Dart x) const { return edges_[edge_index_[x]].kind; }
  bool is_positive(Dart x) const { return x <= lambda_[x]; }

  bool has_semiedges() const;
  bool has_loops() const;
  /// Every edge ordinary and no two parallel.
  bool is_simple() const;

  const std::vector<Dart>& lambda() const { return lambda_; }
  const std::vector<std::vector<Dart>>& vertices() const { return vertices_; }
  GraphParts parts() const { return {dart_count(), lambda_, vertices_}; }

  friend bool operator==(const DartGraph& a, const DartGraph& b) {
    return a.lambda_ == b.lambda_ && a.vertices_ == b.vertices_;
  }

 private:
  std::vector<Dart> lambda_;
  std::vector<std::vector<Dart>> vertices_;
  std::vector<Vertex> vertex_of_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> edge_index_;
};

// Incremental construction with sequential dart ids: an edge added as
// add_edge(u, w) gets darts x (at u) and x + 1 (at w).
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t vertex_count) : vertex_count_(vertex_count) {}

  Dart add_edge(Vertex u, Vertex w);
  Dart add_semiedge(Vertex v);
  DartGraph build() const;

 private:
  std::size_t vertex_count_;
  std::vector<Dart> lambda_;
  std::vector<Vertex> vertex_of_;
};

struct EdgeClassification {
  std::vector<std::size_t> semiedges;  // edge indices
  std::vector<std::size_t> loops;
  std::vector<std::size_t> ordinary;
  // Ordinary edges grouped by unordered endpoint pair, ordered by that pair.
  std::vector<std::vector<std::size_t>> parallel_classes;
};

EdgeClassification classify_edges(const DartGraph& g);

bool is_connected(const DartGraph& g);

/// Minimum number of ordinary edges whose removal disconnects g, by unit
/// capacity max-flow. Loops never count. Throws SemiedgePresent.
std::size_t edge_connectivity(const DartGraph& g);

/// Matrix-tree Laplacian: ordinary-edge valency on the diagonal and minus the
/// edge multiplicity off it. Loops and semiedges are ignored.
IntMatrix kirchhoff_matrix(const DartGraph& g);

/// Exact number of spanning trees. Throws Disconnected.
Integer spanning_tree_count(const DartGraph& g);

struct SpanningTree {
  std::vector<std::size_t> edges;  // sorted edge indices, ordinary edges only

  friend bool operator==(const SpanningTree&, const SpanningTree&) = default;
  friend auto operator<=>(const SpanningTree&, const SpanningTree&) = default;
};

inline constexpr std::size_t kDefaultEnumerationEdgeCap = 12;

/// All spanning trees, by backtracking over edge subsets in index order.
/// Throws Disconnected, or ScaleExceeded if g has more than `max_edges`
/// ordinary edges.
std::vector<SpanningTree> spanning_tree_enumerate(const DartGraph& g,
                                                  std::size_t max_edges = kDefaultEnumerationEdgeCap);

/// Breadth-first tree from vertex 0, scanning darts in ascending order.
SpanningTree bfs_spanning_tree(const DartGraph& g);

bool is_spanning_tree(const DartGraph& g, const SpanningTree& t);

struct Walk {
  std::vector<Dart> darts;

  friend bool operator==(const Walk&, const Walk&) = default;
};

bool is_walk(const DartGraph& g, const Walk& w);
bool is_closed(const DartGraph& g, const Walk& w);
Walk reversed(const DartGraph& g, const Walk& w);

// Darts of the tree path from vertex `from` to vertex `to`.
std::vector<Dart> tree_path(const DartGraph& g, const SpanningTree& t, Vertex from, Vertex to);

/// One closed walk per co-tree ordinary edge (its D+ dart followed by the tree
/// path back), then one length-1 walk per loop and per semiedge, in edge
/// order. Throws NotASpanningTree.
std::vector<Walk> fundamental_cycles(const DartGraph& g, const SpanningTree& t);

/// Drops every loop and semiedge. Throws InvalidGraph if a vertex would be
/// left without darts.
DartGraph without_loops_and_semiedges(const DartGraph& g);

/// Relabels darts by `image` (dart x of g becomes image[x]), keeping vertex
/// order. Useful to build isomorphic copies.
DartGraph relabel_darts(const DartGraph& g, const std::vector<Dart>& image);

}  // namespace jacflow
