#include "jacflow/generate.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "jacflow/error.hpp"

namespace jacflow::generate {

DartGraph gnp_simple(std::uint64_t seed, std::size_t n, double p) {
  if (n < 1) throw Error(ErrorKind::InvalidGraph, "gnp needs at least one vertex");
  if (!(p > 0.0 && p <= 1.0)) throw Error(ErrorKind::InvalidGraph, "gnp edge probability must lie in (0, 1]");
  if (n == 1) return DartGraph({1, {0}, {{0}}});
  for (std::uint64_t stream = 0;; ++stream) {
    Rng rng(seed, stream);
    GraphBuilder b(n);
    std::vector<bool> touched(n, false);
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = i + 1; j < n; ++j)
        if (rng.bernoulli(p)) {
          b.add_edge(i, j);
          touched[i] = touched[j] = true;
        }
    if (std::find(touched.begin(), touched.end(), false) != touched.end()) continue;
    DartGraph g = b.build();
    if (is_connected(g)) return g;
  }
}

DartGraph random_multigraph(std::uint64_t seed, std::size_t n, std::size_t extra, std::size_t max_multiplicity) {
  if (n < 2) throw Error(ErrorKind::InvalidGraph, "random multigraphs need at least two vertices");
  if (max_multiplicity < 1) throw Error(ErrorKind::InvalidGraph, "multiplicity bound must be positive");
  Rng rng(seed);
  GraphBuilder b(n);
  std::map<std::pair<Vertex, Vertex>, std::size_t> mult;
  for (Vertex v = 1; v < n; ++v) {
    const auto u = static_cast<Vertex>(rng.uniform(v));
    b.add_edge(u, v);
    ++mult[{u, v}];
  }
  for (std::size_t k = 0; k < extra; ++k) {
    auto u = static_cast<Vertex>(rng.uniform(n)), w = static_cast<Vertex>(rng.uniform(n - 1));
    if (w >= u) ++w;
    auto key = std::minmax(u, w);
    if (mult[key] >= max_multiplicity) continue;
    ++mult[key];
    b.add_edge(u, w);
  }
  return b.build();
}

DartGraph add_loops_and_semiedges(std::uint64_t seed, const DartGraph& g, std::size_t count) {
  Rng rng(seed);
  GraphParts parts = g.parts();
  for (std::size_t k = 0; k < count; ++k) {
    const auto v = static_cast<Vertex>(rng.uniform(g.vertex_count()));
    const auto x = static_cast<Dart>(parts.lambda.size());
    if (rng.bernoulli(0.5)) {
      parts.lambda.push_back(x);
      parts.vertices[v].push_back(x);
    } else {
      parts.lambda.push_back(x + 1);
      parts.lambda.push_back(x);
      parts.vertices[v].push_back(x);
      parts.vertices[v].push_back(x + 1);
    }
  }
  parts.dart_count = parts.lambda.size();
  return DartGraph(std::move(parts));
}

VoltageAssignment random_voltage(std::uint64_t seed, const DartGraph& base, const FiniteGroup& group,
                                 std::size_t attempts) {
  const SpanningTree tree = bfs_spanning_tree(base);
  std::vector<bool> in_tree(base.edge_count(), false);
  for (auto e : tree.edges) in_tree[e] = true;
  std::vector<GroupIndex> self_inverse{FiniteGroup::identity()};
  for (GroupIndex g : group.involutions()) self_inverse.push_back(g);
  for (std::uint64_t stream = 0; stream < attempts; ++stream) {
    Rng rng(seed, stream);
    std::vector<GroupIndex> xi(base.dart_count(), FiniteGroup::identity());
    for (std::size_t e = 0; e < base.edge_count(); ++e) {
      if (in_tree[e]) continue;
      const Edge& edge = base.edges()[e];
      GroupIndex h = edge.kind == EdgeKind::Semiedge ? self_inverse[rng.uniform(self_inverse.size())]
                                                     : rng.uniform(group.order());
      xi[edge.dart] = h;
      xi[edge.inverse] = group.inverse(h);
    }
    if (group.generated_subgroup(xi).size() == group.order()) return {base, group, std::move(xi), tree};
  }
  throw Error(ErrorKind::HypothesisUnmet, "no generating voltages found on this base");
}

std::vector<GroupIndex> random_connection(std::uint64_t seed, const FiniteGroup& group, std::size_t min_size) {
  if (group.order() < 2) throw Error(ErrorKind::InvalidGroup, "the trivial group has no connection set");
  Rng rng(seed);
  std::vector<GroupIndex> m;
  while (m.size() < min_size || group.generated_subgroup(m).size() != group.order()) {
    const GroupIndex h = 1 + rng.uniform(group.order() - 1);
    m.push_back(h);
    if (group.inverse(h) != h) m.push_back(group.inverse(h));
  }
  std::sort(m.begin(), m.end());
  return m;
}

PermGroup left_regular_action(const FiniteGroup& group, const std::vector<GroupIndex>& connection) {
  const std::size_t k = connection.size(), n = group.order();
  std::vector<Permutation> elements;
  for (GroupIndex h = 0; h < n; ++h) {
    std::vector<std::uint32_t> img(n * k);
    for (GroupIndex g = 0; g < n; ++g)
      for (std::size_t j = 0; j < k; ++j) img[g * k + j] = static_cast<std::uint32_t>(group.multiply(h, g) * k + j);
    elements.emplace_back(std::move(img));
  }
  std::sort(elements.begin(), elements.end());
  return PermGroup::from_elements(n * k, std::move(elements));
}

}  // namespace jacflow::generate
