#include "jacflow/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "jacflow/covers.hpp"
#include "jacflow/error.hpp"
#include "jacflow/families.hpp"
#include "jacflow/generate.hpp"
#include "jacflow/jacobian.hpp"
#include "jacflow/random.hpp"
#include "jacflow/symmetry.hpp"

namespace jacflow::verify {

namespace {

using io::Json;

// A check returns whether its predicate held and fills in diagnostics.
using Check = std::function<bool(VerificationCase&)>;

void run_case(SuiteResult& r, std::string id, std::string inputs, std::string predicate, const Check& check) {
  VerificationCase c{std::move(id), std::move(inputs), std::move(predicate), Outcome::Fail, "", Json::object()};
  try {
    c.outcome = check(c) ? Outcome::Pass : Outcome::Fail;
  } catch (const Error& e) {
    c.diagnostics = e.what();
    c.outcome = e.kind() == ErrorKind::ScaleExceeded ? Outcome::ScaleExceeded
                : e.kind() == ErrorKind::HypothesisUnmet ? Outcome::HypothesisUnmet
                                                         : Outcome::Fail;
  } catch (const std::exception& e) {
    c.diagnostics = e.what();
  }
  r.cases.push_back(std::move(c));
}

std::string factors_string(const AbelianGroup& g) {
  std::string s = "[";
  for (std::size_t i = 0; i < g.factors().size(); ++i) s += (i ? "," : "") + g.factors()[i].get_str();
  return s + "]";
}

Json factors_json(const AbelianGroup& g) {
  Json out = Json::array();
  for (const auto& d : g.factors()) out.push_back(io::integer_json(d));
  return out;
}

std::string seed_string(std::uint64_t seed) { return "seed " + std::to_string(seed); }

PermGroup vertex_group(const DartGraph& g, const std::string& cycles) {
  return PermGroup::generate(g.dart_count(), {extend_vertex_permutation(g, parse_cycles(cycles, g.vertex_count()))});
}

PermGroup rotations(std::size_t n, std::size_t step) {
  std::vector<std::uint32_t> img(2 * n);
  for (std::uint32_t x = 0; x < 2 * n; ++x) img[x] = static_cast<std::uint32_t>((x + 2 * step) % (2 * n));
  return PermGroup::generate(2 * n, {Permutation(img)});
}

Json faithfulness_json(const FaithfulnessReport& f) {
  return Json{{"connected", f.connected},
              {"simple", f.simple},
              {"three_edge_connected", f.three_edge_connected},
              {"semiregular", f.semiregular},
              {"group_order", f.group_order},
              {"kernel_size", f.kernel_size},
              {"image_size", f.image_size},
              {"injective", f.injective},
              {"hypotheses_hold", f.hypotheses_hold},
              {"theorem_violation", f.theorem_violation}};
}

// Connection sets for the nonabelian Cayley graphs.
struct NamedConnection {
  std::string name;
  FiniteGroup group;
  std::vector<GroupIndex> connection;
};

std::vector<NamedConnection> nonabelian_connections() {
  std::vector<NamedConnection> out;
  auto s3 = FiniteGroup::symmetric(3);
  out.push_back({"cay-s3-transpositions", s3, s3.involutions()});
  auto d4 = FiniteGroup::dihedral(4);
  GroupIndex r = 0, s = 0;
  for (GroupIndex g = 1; g < d4.order() && r == 0; ++g)
    if (d4.element_order(g) == 4) r = g;
  auto rotations_sub = d4.generated_subgroup({r});
  for (GroupIndex g : d4.involutions())
    if (!std::binary_search(rotations_sub.begin(), rotations_sub.end(), g)) {
      s = g;
      break;
    }
  out.push_back({"cay-d4-r-rinv-s", d4, {r, d4.inverse(r), s}});
  out.push_back({"cay-q8-pm-i-pm-j", FiniteGroup::quaternion(), {2, 3, 4, 5}});
  return out;
}

void suite_example72(SuiteResult& r) {
  const DartGraph x = families::triple_star();
  run_case(r, "aut-order", "triple star: 3 parallel edges from a centre to each of two outer vertices",
           "|Aut(X)| = 72", [&](VerificationCase& c) {
             auto order = automorphisms(x).order();
             c.details["aut_order"] = order;
             c.diagnostics = "|Aut| = " + std::to_string(order);
             return order == 72;
           });
  run_case(r, "jacobian", "triple star", "Jac(X) = Z3 + Z3", [&](VerificationCase& c) {
    auto jac = jacobian(x);
    c.details["factors"] = factors_json(jac.group);
    c.diagnostics = "factors " + factors_string(jac.group);
    return jac.group.factors() == std::vector<Integer>{3, 3} && validate_flow(x, jac).empty();
  });
  run_case(r, "tree-count", "triple star", "tau(X) = 9", [&](VerificationCase& c) {
    Integer tau = spanning_tree_count(x);
    c.details["tau"] = io::integer_json(tau);
    c.diagnostics = "tau = " + tau.get_str();
    return tau == 9 && spanning_tree_enumerate(x).size() == 9;
  });
  run_case(r, "gl2-3", "all 81 matrices over Z3", "48 invertible 2x2 matrices", [&](VerificationCase& c) {
    auto n = count_invertible_2x2(3);
    c.details["count"] = n;
    c.diagnostics = std::to_string(n) + " invertible";
    return n == 48;
  });
  run_case(r, "kernel", "triple star with its full automorphism group", "theta kernel has more than one element",
           [&](VerificationCase& c) {
             auto aut = automorphisms(x);
             auto kernel = theta_kernel(aut, jacobian(x));
             c.details["kernel_size"] = kernel.size();
             c.diagnostics = "kernel size " + std::to_string(kernel.size());
             return kernel.size() > 1;
           });
}

void suite_p1(SuiteResult& r) {
  const std::size_t simple = r.options.count, multi = std::max<std::size_t>(1, r.options.count / 5);
  std::size_t enumerated = 0;
  auto compare = [&](VerificationCase& c, const DartGraph& g) {
    const Integer jac = jacobian(g).group.order();
    const Integer tau = spanning_tree_count(g);
    c.details = Json{{"vertices", g.vertex_count()}, {"edges", g.edge_count()}, {"jac_order", io::integer_json(jac)},
                     {"tau", io::integer_json(tau)}};
    c.diagnostics = "|Jac| = " + jac.get_str() + ", tau = " + tau.get_str();
    bool ok = jac == tau;
    if (g.edge_count() <= r.options.scale_cap) {
      const auto trees = spanning_tree_enumerate(g, r.options.scale_cap).size();
      c.details["enumerated"] = trees;
      c.diagnostics += ", enumerated " + std::to_string(trees);
      ok = ok && Integer(static_cast<unsigned long>(trees)) == tau;
      ++enumerated;
    }
    return ok;
  };
  for (std::size_t i = 0; i < simple; ++i) {
    const std::uint64_t s = Rng::derive(r.options.seed, i);
    Rng pick(s, 1u << 20);
    const std::size_t n = pick.between(5, 9);
    const double p = std::vector<double>{0.3, 0.5, 0.7}[pick.uniform(3)];
    std::ostringstream in;
    in << "gnp-simple n=" << n << " p=" << p << " " << seed_string(s);
    run_case(r, "simple/" + std::to_string(i), in.str(), "|Jac| = tau (= enumeration when small)",
             [&](VerificationCase& c) { return compare(c, generate::gnp_simple(s, n, p)); });
  }
  for (std::size_t i = 0; i < multi; ++i) {
    const std::uint64_t s = Rng::derive(r.options.seed ^ 0x6d756c7469ull, i);
    Rng pick(s, 1u << 20);
    const std::size_t n = pick.between(2, 7), extra = pick.between(1, 8);
    std::ostringstream in;
    in << "random-multigraph n=" << n << " extra=" << extra << " " << seed_string(s);
    run_case(r, "multigraph/" + std::to_string(i), in.str(), "|Jac| = tau (= enumeration when small)",
             [&](VerificationCase& c) { return compare(c, generate::random_multigraph(s, n, extra)); });
  }
  r.notes.push_back(std::to_string(enumerated) + " instances also checked against spanning-tree enumeration");
}

void suite_pfold(SuiteResult& r) {
  constexpr std::size_t kAttempts = 500;
  std::size_t three_ec = 0, rejected = 0;
  for (std::size_t i = 0; i < r.options.count; ++i) {
    const std::size_t p = std::vector<std::size_t>{2, 3, 5}[i % 3];
    const std::uint64_t s = Rng::derive(r.options.seed, i);
    std::ostringstream in;
    in << "random-voltage Z" << p << " over random bases, " << seed_string(s);
    run_case(r, "z" + std::to_string(p) + "/" + std::to_string(i), in.str(),
             "tau(X) >= p tau(Y), strict when X is 3-edge-connected", [&](VerificationCase& c) {
               for (std::size_t a = 0; a < kAttempts; ++a) {
                 const std::uint64_t sa = Rng::derive(s, a);
                 Rng pick(sa, 1u << 20);
                 const std::size_t n = pick.between(1, 4);
                 DartGraph base = n == 1 ? families::semiedge_bouquet(1)
                                         : generate::random_multigraph(sa, n, pick.between(1, 5), 2);
                 const std::size_t extras = pick.uniform(p == 2 ? 4 : 3);
                 if (extras) base = generate::add_loops_and_semiedges(sa ^ 0x5e, base, extras);
                 try {
                   auto v = generate::random_voltage(sa, base, FiniteGroup::cyclic(p), 4);
                   auto rep = verify_pfold(v);
                   c.details = Json{{"p", p},
                                    {"attempt", a},
                                    {"base", io::graph_to_json(base)},
                                    {"xi", v.xi},
                                    {"tau_total", io::integer_json(rep.tau_total)},
                                    {"tau_base", io::integer_json(rep.tau_base)},
                                    {"three_edge_connected", rep.three_edge_connected},
                                    {"strict", rep.strict}};
                   c.diagnostics = "tau(X) = " + rep.tau_total.get_str() + ", p tau(Y) = " +
                                   Integer(rep.tau_base * static_cast<unsigned long>(p)).get_str() +
                                   (rep.three_edge_connected ? ", 3-edge-connected" : "");
                   if (rep.three_edge_connected) ++three_ec;
                   return !rep.violation;
                 } catch (const Error& e) {
                   if (e.kind() != ErrorKind::HypothesisUnmet) throw;
                   ++rejected;
                 }
               }
               throw Error(ErrorKind::HypothesisUnmet, "no draw met the hypotheses");
             });
  }
  r.notes.push_back(std::to_string(three_ec) + " derived graphs were 3-edge-connected");
  r.notes.push_back(std::to_string(rejected) + " draws rejected for unmet hypotheses");
}

void suite_main(SuiteResult& r) {
  struct Instance {
    std::string id, inputs;
    std::function<std::pair<DartGraph, PermGroup>()> build;
  };
  std::vector<Instance> instances;
  instances.push_back({"k4/z2", "K4 with the vertex permutation (0 1)(2 3)", [] {
                         auto g = families::complete(4);
                         return std::pair{g, vertex_group(g, "(0 1)(2 3)")};
                       }});
  instances.push_back({"petersen/z5", "Petersen graph with the rotation (0 1 2 3 4)(5 6 7 8 9)", [] {
                         auto g = families::petersen();
                         return std::pair{g, vertex_group(g, "(0 1 2 3 4)(5 6 7 8 9)")};
                       }});
  for (const auto& nc : nonabelian_connections()) {
    if (nc.name == "cay-d4-r-rinv-s") continue;
    instances.push_back({nc.name, nc.name + " with the left-regular action", [nc] {
                           return std::pair{cayley_multigraph(nc.group, nc.connection),
                                            generate::left_regular_action(nc.group, nc.connection)};
                         }});
  }
  instances.push_back({"cube/z2", "cube Q3 with the antipodal map v -> v xor 7", [] {
                         auto g = families::cube();
                         std::vector<std::uint32_t> img(8);
                         for (std::uint32_t v = 0; v < 8; ++v) img[v] = v ^ 7u;
                         return std::pair{g, PermGroup::generate(g.dart_count(),
                                                                 {extend_vertex_permutation(g, Permutation(img))})};
                       }});
  for (const auto& inst : instances)
    run_case(r, inst.id, inst.inputs, "hypotheses hold, |kernel| = 1 and |Theta(G)| = |G|", [&](VerificationCase& c) {
      auto [g, group] = inst.build();
      auto f = verify_faithful(g, group);
      c.details = faithfulness_json(f);
      c.diagnostics = "|G| = " + std::to_string(f.group_order) + ", kernel " + std::to_string(f.kernel_size) +
                      ", image " + std::to_string(f.image_size) + (f.hypotheses_hold ? "" : ", hypotheses fail");
      return f.hypotheses_hold && f.kernel_size == 1 && f.image_size == f.group_order && !f.theorem_violation;
    });
  for (std::size_t n = 3; n <= 8; ++n)
    run_case(r, "control/c" + std::to_string(n), "C" + std::to_string(n) + " with its rotation group",
             "semiregular, only 2-edge-connected, kernel is the whole group", [&](VerificationCase& c) {
               auto f = verify_faithful(families::cycle(n), rotations(n, 1));
               c.details = faithfulness_json(f);
               c.diagnostics = "kernel " + std::to_string(f.kernel_size) + " of " + std::to_string(f.group_order);
               return f.semiregular && !f.three_edge_connected && f.kernel_size == f.group_order && f.image_size == 1;
             });
}

void suite_cayley_rank(SuiteResult& r) {
  for (const auto& nc : nonabelian_connections())
    run_case(r, nc.name, nc.name + " with the left-regular action",
             "edge connectivity = valency >= 3 and Jac not cyclic", [&](VerificationCase& c) {
               auto g = cayley_multigraph(nc.group, nc.connection);
               const std::size_t lambda = edge_connectivity(g), valency = g.valency(0);
               auto rank = jac_rank_check(g, generate::left_regular_action(nc.group, nc.connection));
               auto jac = jacobian(g).group;
               c.details = Json{{"edge_connectivity", lambda},
                                {"valency", valency},
                                {"factors", factors_json(jac)},
                                {"rank", rank.rank},
                                {"corollary_applies", rank.corollary_applies}};
               c.diagnostics = "lambda " + std::to_string(lambda) + ", valency " + std::to_string(valency) +
                               ", Jac " + factors_string(jac);
               return lambda == valency && valency >= 3 && rank.rank >= 2 && !rank.cyclic && rank.corollary_applies &&
                      !rank.corollary_violation;
             });
}

void suite_semiedge_null(SuiteResult& r) {
  for (std::size_t i = 0; i < r.options.count; ++i) {
    const std::uint64_t s = Rng::derive(r.options.seed, i);
    Rng pick(s, 1u << 20);
    const std::size_t n = pick.between(2, 7), extra = pick.between(0, 6), k = pick.between(1, 5);
    std::ostringstream in;
    in << "random-multigraph n=" << n << " extra=" << extra << " plus " << k << " loops/semiedges, " << seed_string(s);
    run_case(r, "random/" + std::to_string(i), in.str(), "invariant factors unchanged", [&](VerificationCase& c) {
      auto g = generate::random_multigraph(s, n, extra);
      auto h = generate::add_loops_and_semiedges(s ^ 0x5e, g, k);
      auto before = jacobian(g), after = jacobian(h);
      c.details = Json{{"before", factors_json(before.group)}, {"after", factors_json(after.group)}};
      c.diagnostics = factors_string(before.group) + " -> " + factors_string(after.group);
      return before.group == after.group && validate_flow(h, after).empty();
    });
  }
  run_case(r, "k4-quotient", "K4 / <(0 1)(2 3)>", "|Jac| equals tau of the loop- and semiedge-free reduction",
           [&](VerificationCase& c) {
             auto k4 = families::complete(4);
             auto q = quotient_graph(k4, vertex_group(k4, "(0 1)(2 3)")).base;
             auto jac = jacobian(q);
             auto reduced = without_loops_and_semiedges(q);
             const Integer tau = spanning_tree_count(reduced);
             c.details = Json{{"semiedges", classify_edges(q).semiedges.size()},
                              {"factors", factors_json(jac.group)},
                              {"tau_reduced", io::integer_json(tau)}};
             c.diagnostics = "Jac " + factors_string(jac.group) + ", tau(reduction) = " + tau.get_str();
             return q.has_semiedges() && validate_flow(q, jac).empty() && jac.group.order() == tau &&
                    jac.group == jacobian(reduced).group;
           });
}

void suite_local_group(SuiteResult& r) {
  auto record = [](VerificationCase& c, const LocalGroupReport& lg) {
    c.details = Json{{"subgroup_order", io::integer_json(lg.subgroup_order)},
                     {"ambient_order", io::integer_json(lg.ambient_order)},
                     {"acting_order", lg.acting_order}};
    c.diagnostics = "|K| = " + lg.subgroup_order.get_str() + ", |G| = " + std::to_string(lg.acting_order);
    return lg.divides;
  };
  for (std::size_t step : {3u, 2u}) {
    const std::size_t order = 6 / step;
    run_case(r, "c6/z" + std::to_string(order), "C6 by rotations of order " + std::to_string(order),
             "|K| divides |G| and |K| = " + std::to_string(order), [&](VerificationCase& c) {
               auto c6 = families::cycle(6);
               auto g = rotations(6, step);
               auto lg = local_group(quotient_graph(c6, g), jacobian(c6), g);
               return record(c, lg) && lg.subgroup_order == static_cast<unsigned long>(order);
             });
  }
  std::size_t from_covers = 0;
  for (std::size_t i = 0; i < r.options.count; ++i) {
    const std::uint64_t s = Rng::derive(r.options.seed, i);
    run_case(r, "random/" + std::to_string(i), "xi-invariant quotient, " + seed_string(s), "|K| divides |G|",
             [&](VerificationCase& c) {
               // Odd cases: kernel of Theta on the covering group of a random
               // cyclic cover. Even cases, and odd ones with trivial kernel:
               // a rotation subgroup of a random cycle.
               if (i % 2 == 1) {
                 for (std::size_t a = 0; a < 64; ++a) {
                   const std::uint64_t sa = Rng::derive(s, a);
                   Rng pick(sa, 1u << 20);
                   auto base = generate::random_multigraph(sa, pick.between(2, 4), pick.between(0, 3), 2);
                   const std::size_t m = pick.between(2, 6);
                   std::optional<CoveringMap> found;
                   try {
                     found = derived_graph(generate::random_voltage(sa, base, FiniteGroup::cyclic(m), 8));
                   } catch (const Error&) {
                     continue;
                   }
                   const CoveringMap& cover = *found;
                   auto ct = covering_transformations(cover);
                   auto flow = jacobian(cover.total);
                   auto kernel = theta_kernel(PermGroup::from_elements(cover.total.dart_count(), ct), flow);
                   if (kernel.size() < 2) continue;
                   auto h = PermGroup::from_elements(cover.total.dart_count(), kernel);
                   ++from_covers;
                   c.inputs = "kernel of Theta on CT of a Z" + std::to_string(m) + " cover, " + seed_string(sa);
                   return record(c, local_group(quotient_graph(cover.total, h), flow, h));
                 }
               }
               Rng pick(s, 1u << 21);
               const std::size_t n = pick.between(3, 12);
               std::vector<std::size_t> divisors;
               for (std::size_t d = 2; d <= n; ++d)
                 if (n % d == 0) divisors.push_back(d);
               const std::size_t d = divisors[pick.uniform(divisors.size())];
               c.inputs = "C" + std::to_string(n) + " by rotations of order " + std::to_string(d) + ", " + seed_string(s);
               auto cyc = families::cycle(n);
               auto g = rotations(n, n / d);
               return record(c, local_group(quotient_graph(cyc, g), jacobian(cyc), g));
             });
  }
  r.notes.push_back(std::to_string(from_covers) + " randomised cases came from kernels on covering groups");
}

void suite_covering(SuiteResult& r) {
  const std::vector<std::pair<std::string, FiniteGroup>> groups{
      {"Z2", FiniteGroup::cyclic(2)},       {"Z3", FiniteGroup::cyclic(3)},       {"Z4", FiniteGroup::cyclic(4)},
      {"Z5", FiniteGroup::cyclic(5)},       {"Z6", FiniteGroup::cyclic(6)},       {"S3", FiniteGroup::symmetric(3)},
      {"D4", FiniteGroup::dihedral(4)},     {"Q8", FiniteGroup::quaternion()}};
  auto check = [](VerificationCase& c, const CoveringMap& cover, std::size_t order) {
    auto rep = validate_covering(cover);
    auto mon = monodromy_fibre_action(cover, 0);
    c.details = Json{{"fold", rep.fold},
                     {"is_covering", rep.is_covering},
                     {"is_regular", rep.is_regular},
                     {"ct_order", rep.ct_order},
                     {"monodromy_order", mon.group.order()}};
    c.diagnostics = "fold " + std::to_string(rep.fold) + ", |CT| = " + std::to_string(rep.ct_order) +
                    ", |Mon| = " + std::to_string(mon.group.order());
    return rep.is_covering && rep.is_regular && rep.ct_order == order && rep.fold == order &&
           mon.group.order() == rep.fold;
  };
  for (std::size_t i = 0; i < r.options.count; ++i) {
    const auto& [name, group] = groups[i % groups.size()];
    const std::uint64_t s = Rng::derive(r.options.seed, i);
    run_case(r, "voltage/" + std::to_string(i), "random-voltage " + name + " over a random base, " + seed_string(s),
             "regular, |CT| = |G|, |Mon| = fold", [&](VerificationCase& c) {
               for (std::size_t a = 0;; ++a) {
                 const std::uint64_t sa = Rng::derive(s, a);
                 Rng pick(sa, 1u << 20);
                 auto base = generate::random_multigraph(sa, pick.between(2, 4), pick.between(1, 4), 3);
                 if (pick.bernoulli(0.5)) base = generate::add_loops_and_semiedges(sa ^ 0x5e, base, pick.between(1, 2));
                 try {
                   return check(c, derived_graph(generate::random_voltage(sa, base, group, 16)), group.order());
                 } catch (const Error& e) {
                   if (e.kind() != ErrorKind::HypothesisUnmet || a >= 64) throw;
                 }
               }
             });
  }
  for (std::size_t i = 2; i < groups.size(); i += 2) {
    const auto& [name, group] = groups[i];
    const std::uint64_t s = Rng::derive(r.options.seed ^ 0xca1, i);
    run_case(r, "cayley/" + name, "bouquet of a random connection set of " + name + ", " + seed_string(s),
             "derived graph is Cay(G, M), regular, |CT| = |G|, |Mon| = fold", [&](VerificationCase& c) {
               auto m = generate::random_connection(s, group, 3);
               auto cover = derived_graph(connection_bouquet(group, m));
               return cover.total == cayley_multigraph(group, m) && check(c, cover, group.order());
             });
  }
}

const std::map<std::string, std::pair<std::size_t, void (*)(SuiteResult&)>>& registry() {
  static const std::map<std::string, std::pair<std::size_t, void (*)(SuiteResult&)>> r{
      {"p1", {100, suite_p1}},
      {"pfold", {100, suite_pfold}},
      {"main", {0, suite_main}},
      {"cayley-rank", {0, suite_cayley_rank}},
      {"example72", {0, suite_example72}},
      {"semiedge-null", {25, suite_semiedge_null}},
      {"local-group", {20, suite_local_group}},
      {"covering", {32, suite_covering}},
  };
  return r;
}

}  // namespace

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::HypothesisUnmet: return "hypothesis-unmet";
    case Outcome::ScaleExceeded: return "scale-exceeded";
  }
  return "fail";
}

bool SuiteResult::passed() const { return count(Outcome::Pass) == cases.size(); }

std::size_t SuiteResult::count(Outcome o) const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(), [o](const VerificationCase& c) { return c.outcome == o; }));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"p1",        "pfold",         "main",        "cayley-rank",
                                              "example72", "semiedge-null", "local-group", "covering"};
  return names;
}

std::size_t default_count(const std::string& suite) {
  auto it = registry().find(suite);
  return it == registry().end() ? 0 : it->second.first;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& options) {
  auto it = registry().find(name);
  if (it == registry().end()) throw Error(ErrorKind::Parse, "unknown suite \"" + name + "\"");
  SuiteResult r{name, options, {}, {}, 0.0};
  if (r.options.count == 0) r.options.count = it->second.first;
  const auto start = std::chrono::steady_clock::now();
  it->second.second(r);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

Json to_json(const SuiteResult& r) {
  Json cases = Json::array();
  for (const auto& c : r.cases)
    cases.push_back(Json{{"id", c.id},
                         {"inputs", c.inputs},
                         {"predicate", c.predicate},
                         {"outcome", to_string(c.outcome)},
                         {"diagnostics", c.diagnostics},
                         {"details", c.details}});
  return Json{{"suite", r.suite},
              {"seed", r.options.seed},
              {"count", r.options.count},
              {"passed", r.passed()},
              {"totals", Json{{"pass", r.count(Outcome::Pass)},
                              {"fail", r.count(Outcome::Fail)},
                              {"hypothesis-unmet", r.count(Outcome::HypothesisUnmet)},
                              {"scale-exceeded", r.count(Outcome::ScaleExceeded)}}},
              {"notes", r.notes},
              {"cases", cases}};
}

std::string summary(const SuiteResult& r) {
  std::ostringstream out;
  out << "suite " << r.suite << ": " << r.count(Outcome::Pass) << "/" << r.cases.size() << " passed";
  if (!r.passed()) out << " (" << r.count(Outcome::Fail) << " failed, " << r.count(Outcome::HypothesisUnmet)
                       << " hypothesis-unmet, " << r.count(Outcome::ScaleExceeded) << " scale-exceeded)";
  out << ", seed " << r.options.seed << ", " << std::fixed;
  out.precision(2);
  out << r.seconds << " s\n";
  for (const auto& c : r.cases)
    if (c.outcome != Outcome::Pass) out << "  " << to_string(c.outcome) << " " << c.id << ": " << c.diagnostics << "\n";
  for (const auto& n : r.notes) out << "  note: " << n << "\n";
  return out.str();
}

std::size_t count_invertible_2x2(unsigned p) {
  std::size_t count = 0;
  for (unsigned a = 0; a < p; ++a)
    for (unsigned b = 0; b < p; ++b)
      for (unsigned c = 0; c < p; ++c)
        for (unsigned d = 0; d < p; ++d)
          if ((a * d % p + p - b * c % p) % p != 0) ++count;
  return count;
}

}  // namespace jacflow::verify
