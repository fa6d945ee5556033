#include <doctest.h>

#include <filesystem>
#include <set>

#include "jacflow/error.hpp"
#include "jacflow/families.hpp"
#include "jacflow/generate.hpp"
#include "jacflow/io.hpp"
#include "jacflow/random.hpp"
#include "jacflow/symmetry.hpp"
#include "jacflow/verify.hpp"

using namespace jacflow;
using io::Json;

namespace {

std::string parse_failure(const std::string& text) {
  try {
    io::graph_from_json(io::parse_json(text));
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("graph JSON round trip") {
  for (const auto& g : {families::triple_star(), families::petersen(), families::semiedge_bouquet(2)}) {
    auto j = io::graph_to_json(g);
    CHECK(io::graph_from_json(io::parse_json(j.dump())) == g);
  }
  auto j = io::graph_to_json(families::path(2));
  CHECK(j.dump() == R"({"darts":2,"lambda":[1,0],"vertices":[[0],[1]]})");
}

TEST_CASE("graph JSON diagnostics name the offending position") {
  CHECK(parse_failure("{").find("malformed JSON") != std::string::npos);
  CHECK(parse_failure(R"({"lambda":[0],"vertices":[[0]]})").find("missing key \"darts\"") != std::string::npos);
  CHECK(parse_failure(R"({"darts":2,"lambda":[1],"vertices":[[0,1]]})").find("graph.lambda") != std::string::npos);
  CHECK(parse_failure(R"({"darts":2,"lambda":[1,7],"vertices":[[0,1]]})").find("graph.lambda[1]") != std::string::npos);
  CHECK(parse_failure(R"({"darts":2,"lambda":[1,0],"vertices":[[0],["a"]]})").find("graph.vertices[1][0]") !=
        std::string::npos);
  CHECK(parse_failure(R"({"darts":2,"lambda":[1,-1],"vertices":[[0],[1]]})").find("graph.lambda[1]") != std::string::npos);
  auto invalid = parse_failure(R"({"darts":3,"lambda":[1,2,0],"vertices":[[0,1,2]]})");
  CHECK(invalid.find("InvalidGraph") != std::string::npos);
  CHECK(invalid.find("lambda not involution") != std::string::npos);
  CHECK(parse_failure(R"({"darts":2,"lambda":[1,0],"vertices":[[0,1],[]]})").find("empty") != std::string::npos);
}

TEST_CASE("group, permutation, voltage and covering JSON") {
  auto q8 = FiniteGroup::quaternion();
  CHECK(io::group_from_json(io::group_to_json(q8)) == q8);
  CHECK_THROWS_AS(io::group_from_json(io::parse_json(R"({"order":2,"table":[[0,1],[1,1]]})")), Error);
  CHECK_THROWS_AS(io::group_from_json(io::parse_json(R"({"order":2,"table":[[0,1]]})")), Error);
  auto p = parse_cycles("(0 2 1)", 4);
  CHECK(io::permutation_from_json(io::permutation_to_json(p)) == p);
  CHECK_THROWS_AS(io::permutation_from_json(io::parse_json("[0,0]")), Error);

  auto v = generate::random_voltage(5, families::complete(4), FiniteGroup::cyclic(3));
  auto back = io::voltage_from_json(io::parse_json(io::voltage_to_json(v).dump()));
  CHECK(back.xi == v.xi);
  CHECK(back.tree == v.tree);
  CHECK(back.base == v.base);
  auto c = derived_graph(v);
  auto cb = io::covering_from_json(io::covering_to_json(c));
  CHECK(cb.total == c.total);
  CHECK(cb.projection == c.projection);
}

TEST_CASE("Jacobian report JSON") {
  auto g = families::triple_star();
  auto j = io::jacobian_report(g, jacobian(g));
  CHECK(j["factors"] == Json::array({3, 3}));
  CHECK(j["order"] == "9");
  CHECK(j["xi"].size() == g.edge_count());
  CHECK(io::integer_json(Integer("123456789012345678901234567890")) == "123456789012345678901234567890");
  CHECK(io::integer_json(Integer(-4)) == -4);
}

TEST_CASE("atomic file writes") {
  auto dir = std::filesystem::temp_directory_path() / "jacflow_io_test";
  std::filesystem::create_directories(dir);
  auto file = dir / "out.json";
  io::write_file_atomic(file, "first\n");
  io::write_file_atomic(file, "second\n");
  CHECK(io::read_file(file) == "second\n");
  std::size_t entries = 0;
  for ([[maybe_unused]] const auto& e : std::filesystem::directory_iterator(dir)) ++entries;
  CHECK(entries == 1);
  std::filesystem::remove_all(dir);
  CHECK_THROWS_AS(io::read_file(dir / "missing.json"), Error);
}

TEST_CASE("rng is reproducible and streams differ") {
  Rng a(42, 0), b(42, 0), c(42, 1), d(43, 0);
  std::vector<std::uint64_t> va, vb, vc, vd;
  for (int i = 0; i < 8; ++i) va.push_back(a.next()), vb.push_back(b.next()), vc.push_back(c.next()), vd.push_back(d.next());
  CHECK(va == vb);
  CHECK(va != vc);
  CHECK(va != vd);
  CHECK(Rng::splitmix64(0) == 0xE220A8397B1DCDAFull);
  Rng u(7);
  std::vector<int> hist(5, 0);
  for (int i = 0; i < 5000; ++i) {
    auto x = u.uniform(5);
    REQUIRE(x < 5);
    ++hist[x];
  }
  for (int h : hist) CHECK(h > 800);
  Rng bern(9);
  int heads = 0;
  for (int i = 0; i < 4000; ++i) heads += bern.bernoulli(0.25);
  CHECK(heads > 800);
  CHECK(heads < 1200);
}

TEST_CASE("generators are deterministic and valid") {
  CHECK(generate::gnp_simple(1, 6, 0.5) == generate::gnp_simple(1, 6, 0.5));
  for (std::uint64_t s = 0; s < 30; ++s) {
    auto g = generate::gnp_simple(s, 7, 0.3);
    CHECK(g.is_simple());
    CHECK(is_connected(g));
    CHECK(g.vertex_count() == 7);
    auto m = generate::random_multigraph(s, 5, 6, 2);
    CHECK(is_connected(m));
    for (const auto& cls : classify_edges(m).parallel_classes) CHECK(cls.size() <= 2);
    auto extra = generate::add_loops_and_semiedges(s, m, 3);
    CHECK(extra.edge_count() == m.edge_count() + 3);
    for (const FiniteGroup& grp : {FiniteGroup::cyclic(3), FiniteGroup::symmetric(3)}) {
      auto base = generate::random_multigraph(s, 3, 4, 3);
      try {
        auto v = generate::random_voltage(s, base, grp);
        CHECK(validate_voltage(v).empty());
        CHECK(v.tree.has_value());
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::HypothesisUnmet);
      }
    }
    auto conn = generate::random_connection(s, FiniteGroup::dihedral(4), 3);
    CHECK(conn.size() >= 3);
    CHECK_NOTHROW(cayley_multigraph(FiniteGroup::dihedral(4), conn));
  }
  CHECK_THROWS_AS(generate::gnp_simple(1, 0, 0.5), Error);
  CHECK_THROWS_AS(generate::gnp_simple(1, 5, 0.0), Error);
  CHECK_THROWS_AS(generate::random_voltage(1, families::path(3), FiniteGroup::cyclic(3)), Error);
}

TEST_CASE("left-regular action is semiregular with the Cayley graph as quotient cover") {
  auto q8 = FiniteGroup::quaternion();
  std::vector<GroupIndex> m{2, 3, 4, 5};
  auto g = cayley_multigraph(q8, m);
  auto act = generate::left_regular_action(q8, m);
  CHECK(act.order() == 8);
  CHECK(is_semiregular(act, g));
  for (const auto& f : act.generators()) CHECK(is_automorphism(g, f));
  auto q = quotient_graph(g, act);
  CHECK(q.base.vertex_count() == 1);
}

TEST_CASE("suites run and report") {
  verify::SuiteOptions small{3, 4, 12};
  for (const auto& name : verify::suite_names()) {
    auto r = verify::run_suite(name, small);
    CHECK_MESSAGE(r.passed(), verify::summary(r));
    auto j = verify::to_json(r);
    CHECK(j["suite"] == name);
    CHECK(j["cases"].size() == r.cases.size());
    CHECK(verify::to_json(verify::run_suite(name, small)).dump() == j.dump());
  }
  CHECK_THROWS_AS(verify::run_suite("nope"), Error);
  CHECK(verify::count_invertible_2x2(2) == 6);
  CHECK(verify::count_invertible_2x2(3) == 48);
  CHECK(verify::count_invertible_2x2(5) == 480);
}
