#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "jacflow/error.hpp"
#include "jacflow/families.hpp"
#include "jacflow/symmetry.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"

using namespace jacflow;

namespace {

PermGroup vertex_generated(const DartGraph& g, std::initializer_list<const char*> cycles) {
  std::vector<Permutation> gens;
  for (const char* c : cycles) gens.push_back(extend_vertex_permutation(g, parse_cycles(c, g.vertex_count())));
  return PermGroup::generate(g.dart_count(), gens);
}

PermGroup rotations(std::size_t n) {
  auto c = families::cycle(n);
  std::vector<std::uint32_t> img(2 * n);
  for (std::uint32_t x = 0; x < 2 * n; ++x) img[x] = static_cast<std::uint32_t>((x + 2) % (2 * n));
  return PermGroup::generate(c.dart_count(), {Permutation(img)});
}

}  // namespace

TEST_CASE("automorphism group orders") {
  CHECK(automorphisms(families::path(2)).order() == 2);
  CHECK(automorphisms(families::triple_star()).order() == 72);
  CHECK(automorphisms(families::cycle(4)).order() == 8);
  CHECK(automorphisms(families::complete(4)).order() == 24);
  CHECK(automorphisms(families::petersen()).order() == 120);
  CHECK(automorphisms(families::cube()).order() == 48);
  CHECK(automorphisms(families::complete_bipartite(3, 3)).order() == 72);
  CHECK(automorphisms(families::semiedge_bouquet(3)).order() == 6);
  CHECK(automorphisms(DartGraph({2, {1, 0}, {{0, 1}}})).order() == 2);
  const auto star = families::triple_star();
  const auto aut = automorphisms(star);
  for (const auto& f : aut.elements()) CHECK(is_automorphism(star, f));
}

TEST_CASE("automorphism counts agree with brute force over vertex maps") {
  for (const auto& g : {families::cycle(4), families::complete(4), families::cube(), families::theta(3),
                        families::triple_star(), families::complete_bipartite(2, 3)})
    CHECK(automorphisms(g).order() == oracle::count_multigraph_automorphisms(g));
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = helpers::random_multigraph(rng, 2 + rng() % 5, rng() % 5);
    bool small = true;
    for (const auto& cls : classify_edges(g).parallel_classes) small &= cls.size() <= kMaxParallelMultiplicity;
    if (!small) continue;
    REQUIRE(automorphisms(g).order() == oracle::count_multigraph_automorphisms(g));
  }
}

TEST_CASE("automorphism search limits") {
  CHECK_THROWS_AS(automorphisms(families::cycle(17)), Error);
  CHECK_THROWS_AS(automorphisms(families::theta(6)), Error);
  CHECK_THROWS_AS(automorphisms(families::complete(6), {16, 100}), Error);
}

TEST_CASE("isomorphisms") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = helpers::random_multigraph(rng, 3 + rng() % 5, rng() % 5);
    std::vector<Dart> image(g.dart_count());
    std::iota(image.begin(), image.end(), 0);
    std::shuffle(image.begin(), image.end(), rng);
    auto h = relabel_darts(g, image);
    auto f = find_isomorphism(g, h);
    REQUIRE(f.has_value());
    CHECK(is_isomorphism(g, h, f->image()));
    CHECK(isomorphisms(g, h).size() == automorphisms(g).order());
  }
  GraphBuilder b(6);
  b.add_edge(0, 1), b.add_edge(1, 2), b.add_edge(2, 0);
  b.add_edge(3, 4), b.add_edge(4, 5), b.add_edge(5, 3);
  CHECK(!find_isomorphism(families::cycle(6), b.build()).has_value());
  CHECK(!find_isomorphism(families::complete_bipartite(3, 3), families::complete(4)).has_value());
}

TEST_CASE("semiregularity") {
  auto c4 = families::cycle(4);
  CHECK(is_semiregular(PermGroup::trivial(c4.dart_count()), c4));
  CHECK(is_semiregular(rotations(4), c4));
  CHECK(!is_semiregular(vertex_generated(c4, {"(1 3)"}), c4));
  CHECK(!is_semiregular(vertex_generated(c4, {"(1 3)", "(0 1 2 3)"}), c4));
  auto k4 = families::complete(4);
  CHECK(is_semiregular(vertex_generated(k4, {"(0 1)(2 3)"}), k4));
  CHECK(!is_semiregular(vertex_generated(k4, {"(0 1)"}), k4));
  CHECK_THROWS_AS(extend_vertex_permutation(families::cycle(5), parse_cycles("(0 2)", 5)), Error);
}

TEST_CASE("theta examples") {
  auto c4 = families::cycle(4);
  auto f4 = jacobian(c4);
  CHECK(theta(c4, Permutation::identity(8), f4).is_identity());
  CHECK(theta(c4, rotations(4).generators()[0], f4).is_identity());

  auto k4 = families::complete(4);
  auto fk = jacobian(k4);
  auto sw = extend_vertex_permutation(k4, parse_cycles("(0 1)(2 3)", 4));
  auto t = theta(k4, sw, fk);
  CHECK(!t.is_identity());
  CHECK(t.is_well_defined());
  CHECK((t * t).is_identity());
  bool moved = false;
  for (Dart x = 0; x < k4.dart_count(); ++x) moved |= fk.xi[sw(x)] != fk.xi[x];
  CHECK(moved);
  CHECK_THROWS_AS(theta(k4, Permutation({1, 0, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}), fk), Error);
}

TEST_CASE("theta kernels") {
  auto k4 = families::complete(4);
  CHECK(theta_kernel(PermGroup::trivial(12), jacobian(k4)).size() == 1);
  CHECK(theta_kernel(rotations(4), jacobian(families::cycle(4))).size() == 4);
  CHECK(theta_kernel(vertex_generated(k4, {"(0 1)(2 3)"}), jacobian(k4)).size() == 1);
  CHECK(theta_kernel(automorphisms(families::triple_star()), jacobian(families::triple_star())).size() > 1);
}

TEST_CASE("theta is a homomorphism into invertible maps and its kernel is the xi-stabiliser") {
  for (const auto& g : {families::triple_star(), families::complete(4), families::cube(), families::petersen(),
                        families::cycle(6), families::complete_bipartite(3, 3)}) {
    auto flow = jacobian(g);
    auto aut = automorphisms(g);
    std::set<std::vector<std::uint32_t>> kernel;
    for (const auto& f : theta_kernel(aut, flow)) kernel.insert(f.image());
    std::mt19937_64 rng(g.dart_count());
    for (int trial = 0; trial < 40; ++trial) {
      const auto& a = aut.elements()[rng() % aut.order()];
      const auto& b = aut.elements()[rng() % aut.order()];
      auto ta = theta(g, a, flow), tb = theta(g, b, flow);
      REQUIRE(theta(g, a * b, flow) == ta * tb);
      REQUIRE((ta * theta(g, a.inverse(), flow)).is_identity());
      REQUIRE(ta.is_identity() == (kernel.count(a.image()) == 1));
      for (Dart x = 0; x < g.dart_count(); ++x) REQUIRE(ta.apply(flow.xi[x]) == flow.xi[a(x)]);
    }
  }
}

TEST_CASE("verify_faithful") {
  auto k4 = families::complete(4);
  auto r = verify_faithful(k4, vertex_generated(k4, {"(0 1)(2 3)"}));
  CHECK(r.hypotheses_hold);
  CHECK(r.injective);
  CHECK(!r.theorem_violation);

  auto p = families::petersen();
  auto rp = verify_faithful(p, vertex_generated(p, {"(0 1 2 3 4)(5 6 7 8 9)"}));
  CHECK(rp.semiregular);
  CHECK(rp.three_edge_connected);
  CHECK(rp.injective);
  CHECK(rp.image_size == 5);

  auto c6 = verify_faithful(families::cycle(6), rotations(6));
  CHECK(c6.semiregular);
  CHECK(!c6.three_edge_connected);
  CHECK(!c6.injective);
  CHECK(c6.kernel_size == 6);
  CHECK(!c6.theorem_violation);
}

TEST_CASE("rank checks") {
  auto c5 = jac_rank_check(families::cycle(5));
  CHECK(c5.rank == 1);
  CHECK(c5.cyclic);
  auto k33 = jac_rank_check(families::complete_bipartite(3, 3));
  CHECK(k33.rank >= 2);
  CHECK(!k33.cyclic);
  CHECK(jac_rank_check(families::triple_star()).rank == 2);
  auto cube = families::cube();
  auto r = jac_rank_check(cube, automorphisms(cube));
  CHECK(!r.corollary_violation);
  CHECK(is_simple_three_edge_connected(families::petersen()));
  CHECK(!is_simple_three_edge_connected(families::cycle(5)));
}

TEST_CASE("JacAutomorphism arithmetic") {
  AbelianGroup g({Integer(2), Integer(4)});
  JacAutomorphism id = JacAutomorphism::identity(g);
  CHECK(id.is_identity());
  JacAutomorphism m(g, IntMatrix{{1, 0}, {2, 1}});
  CHECK(m.is_well_defined());
  CHECK((m * m).is_identity());
  CHECK(m.apply(g.reduce({Integer(1), Integer(0)})) == g.reduce({Integer(1), Integer(2)}));
  JacAutomorphism bad(g, IntMatrix{{1, 0}, {1, 1}});
  CHECK(!bad.is_well_defined());
}
