#include <doctest.h>

#include <algorithm>
#include <random>

#include "jacflow/dartgraph.hpp"
#include "jacflow/error.hpp"
#include "jacflow/families.hpp"
#include "oracles.hpp"

using namespace jacflow;

namespace {

template <class F>
ErrorKind error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::Parse;
}

DartGraph two_triangles() {
  GraphBuilder b(6);
  b.add_edge(0, 1), b.add_edge(1, 2), b.add_edge(2, 0);
  b.add_edge(3, 4), b.add_edge(4, 5), b.add_edge(5, 3);
  return b.build();
}

DartGraph random_connected(std::mt19937_64& rng, std::size_t n, std::size_t extra, bool multi) {
  GraphBuilder b(n);
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (Vertex v = 1; v < n; ++v) {
    Vertex u = rng() % v;
    b.add_edge(u, v);
    adj[u][v] = adj[v][u] = true;
  }
  for (std::size_t k = 0; k < extra; ++k) {
    Vertex u = rng() % n, w = rng() % n;
    if (u == w || (!multi && adj[u][w])) continue;
    b.add_edge(u, w);
    adj[u][w] = adj[w][u] = true;
  }
  return b.build();
}

}  // namespace

TEST_CASE("validate reports every defect") {
  CHECK(validate({1, {0}, {{0}}}).empty());
  auto bad = validate({3, {1, 2, 0}, {{0, 1, 2}}});
  REQUIRE(!bad.empty());
  CHECK(bad[0].find("lambda not involution") != std::string::npos);
  CHECK(validate({4, {1, 0, 3, 2}, {{0}, {1, 2}, {3}}}).empty());
  CHECK(!validate({0, {}, {}}).empty());
  CHECK(!validate({2, {1, 0}, {{0}, {}, {1}}}).empty());
  CHECK(!validate({2, {1, 0}, {{0, 1}, {1}}}).empty());
  CHECK(!validate({2, {1, 0}, {{0}}}).empty());
  CHECK(!validate({2, {1, 5}, {{0}, {1}}}).empty());
  CHECK(error_of([] { DartGraph g({3, {1, 2, 0}, {{0, 1, 2}}}); }) == ErrorKind::InvalidGraph);
}

TEST_CASE("classify_edges") {
  auto one = classify_edges(DartGraph({1, {0}, {{0}}}));
  CHECK(one.semiedges.size() == 1);
  auto loop = classify_edges(DartGraph({2, {1, 0}, {{0, 1}}}));
  CHECK(loop.loops.size() == 1);
  CHECK(loop.ordinary.empty());
  auto star = classify_edges(families::triple_star());
  CHECK(star.ordinary.size() == 6);
  REQUIRE(star.parallel_classes.size() == 2);
  CHECK(star.parallel_classes[0].size() == 3);
  CHECK(star.parallel_classes[1].size() == 3);
  CHECK(families::complete(4).is_simple());
  CHECK(!families::triple_star().is_simple());
}

TEST_CASE("connectivity") {
  CHECK(is_connected(families::semiedge_bouquet(3)));
  CHECK(!is_connected(two_triangles()));
  CHECK(is_connected(families::complete(4)));
  CHECK(edge_connectivity(families::cycle(4)) == 2);
  CHECK(edge_connectivity(families::complete(4)) == 3);
  CHECK(edge_connectivity(families::petersen()) == 3);
  CHECK(edge_connectivity(families::cube()) == 3);
  CHECK(edge_connectivity(families::path(4)) == 1);
  CHECK(edge_connectivity(families::theta(4)) == 4);
  CHECK(edge_connectivity(two_triangles()) == 0);
  CHECK(error_of([] { edge_connectivity(families::semiedge_bouquet(2)); }) == ErrorKind::SemiedgePresent);
}

TEST_CASE("edge connectivity equals the minimum over all vertex pairs of brute-force cuts") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = random_connected(rng, 3 + rng() % 4, rng() % 7, true);
    const std::size_t m = g.edge_count();
    std::size_t best = m;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
      std::size_t removed = __builtin_popcount(mask);
      if (removed >= best) continue;
      std::vector<int> comp(g.vertex_count(), -1);
      std::vector<std::vector<Vertex>> adj(g.vertex_count());
      for (std::size_t e = 0; e < m; ++e)
        if (!(mask >> e & 1)) {
          Vertex u = g.vertex_of(g.edges()[e].dart), w = g.head(g.edges()[e].dart);
          adj[u].push_back(w), adj[w].push_back(u);
        }
      std::vector<Vertex> st{0};
      comp[0] = 0;
      while (!st.empty()) {
        Vertex v = st.back();
        st.pop_back();
        for (Vertex w : adj[v])
          if (comp[w] < 0) comp[w] = 0, st.push_back(w);
      }
      if (std::count(comp.begin(), comp.end(), -1) > 0) best = removed;
    }
    REQUIRE(edge_connectivity(g) == best);
  }
}

TEST_CASE("spanning tree counts") {
  CHECK(spanning_tree_count(families::path(5)) == 1);
  for (std::size_t n = 3; n <= 9; ++n) CHECK(spanning_tree_count(families::cycle(n)) == n);
  CHECK(spanning_tree_count(families::triple_star()) == 9);
  CHECK(spanning_tree_count(families::complete(4)) == 16);
  CHECK(spanning_tree_count(families::petersen()) == 2000);
  CHECK(spanning_tree_count(families::semiedge_bouquet(3)) == 1);
  CHECK(error_of([] { spanning_tree_count(two_triangles()); }) == ErrorKind::Disconnected);
}

TEST_CASE("spanning tree enumeration") {
  auto tri = spanning_tree_enumerate(families::cycle(3));
  REQUIRE(tri.size() == 3);
  CHECK(tri[0].edges == std::vector<std::size_t>{0, 1});
  CHECK(spanning_tree_enumerate(families::path(3)).size() == 1);
  CHECK(spanning_tree_enumerate(families::theta(3)).size() == 3);
  CHECK(spanning_tree_enumerate(families::complete(4)).size() == 16);
  CHECK(error_of([] { spanning_tree_enumerate(families::petersen()); }) == ErrorKind::ScaleExceeded);
  CHECK(spanning_tree_enumerate(families::petersen(), 15).size() == 2000);
  CHECK(error_of([] { spanning_tree_enumerate(two_triangles()); }) == ErrorKind::Disconnected);
  for (const auto& t : spanning_tree_enumerate(families::complete(4))) CHECK(is_spanning_tree(families::complete(4), t));
}

TEST_CASE("matrix-tree count matches enumeration on random multigraphs") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    auto g = random_connected(rng, 2 + rng() % 6, rng() % 6, trial % 2 == 0);
    REQUIRE(spanning_tree_count(g) == Integer(spanning_tree_enumerate(g).size()));
  }
}

TEST_CASE("walks and fundamental cycles") {
  auto p = families::path(3);
  CHECK(fundamental_cycles(p, bfs_spanning_tree(p)).empty());

  auto c4 = families::cycle(4);
  SpanningTree path_tree{{0, 1, 2}};
  auto cyc = fundamental_cycles(c4, path_tree);
  REQUIRE(cyc.size() == 1);
  CHECK(cyc[0].darts.size() == 4);
  CHECK(is_walk(c4, cyc[0]));
  CHECK(is_closed(c4, cyc[0]));
  CHECK(is_closed(c4, reversed(c4, cyc[0])));

  auto b3 = families::semiedge_bouquet(3);
  auto loops = fundamental_cycles(b3, bfs_spanning_tree(b3));
  REQUIRE(loops.size() == 3);
  for (const auto& w : loops) {
    CHECK(w.darts.size() == 1);
    CHECK(is_closed(b3, w));
  }

  CHECK(error_of([&] { fundamental_cycles(c4, SpanningTree{{0, 1}}); }) == ErrorKind::NotASpanningTree);
  CHECK(!is_walk(c4, Walk{{0, 4}}));
}

TEST_CASE("fundamental cycle count is the cycle rank") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = random_connected(rng, 2 + rng() % 7, rng() % 8, true);
    auto t = bfs_spanning_tree(g);
    REQUIRE(is_spanning_tree(g, t));
    auto cyc = fundamental_cycles(g, t);
    CHECK(cyc.size() == g.edge_count() - g.vertex_count() + 1);
    for (const auto& w : cyc) CHECK(is_closed(g, w));
  }
}

TEST_CASE("families have the expected shape") {
  CHECK(families::petersen().vertex_count() == 10);
  CHECK(families::petersen().edge_count() == 15);
  CHECK(families::cube().edge_count() == 12);
  CHECK(families::complete_bipartite(3, 3).edge_count() == 9);
  CHECK(oracle::is_complete_bipartite_33(families::complete_bipartite(3, 3)));
  auto t = families::triple_star();
  CHECK(t.valency(0) == 6);
  CHECK(t.valency(1) == 3);
}

TEST_CASE("without_loops_and_semiedges and relabel_darts") {
  GraphBuilder b(2);
  b.add_edge(0, 1);
  b.add_edge(0, 0);
  b.add_semiedge(1);
  auto g = b.build();
  auto h = without_loops_and_semiedges(g);
  CHECK(h.edge_count() == 1);
  CHECK(error_of([] { without_loops_and_semiedges(families::semiedge_bouquet(2)); }) == ErrorKind::InvalidGraph);

  auto k4 = families::complete(4);
  std::vector<Dart> image(k4.dart_count());
  for (Dart x = 0; x < image.size(); ++x) image[x] = static_cast<Dart>(image.size() - 1 - x);
  auto r = relabel_darts(k4, image);
  CHECK(r.dart_count() == 12);
  CHECK(spanning_tree_count(r) == 16);
}
