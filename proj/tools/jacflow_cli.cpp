// jacflow command-line interface.
//
// Exit codes: 0 success, 1 verification failure, 2 usage, parse or invalid
// input, 3 unmet precondition (disconnected graph, non-semiregular group...),
// 4 scale cap exceeded.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "jacflow/covers.hpp"
#include "jacflow/error.hpp"
#include "jacflow/generate.hpp"
#include "jacflow/io.hpp"
#include "jacflow/jacobian.hpp"
#include "jacflow/symmetry.hpp"
#include "jacflow/verify.hpp"

using namespace jacflow;
using io::Json;

namespace {

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kPrecondition = 3, kScale = 4 };

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::ScaleExceeded: return kScale;
    case ErrorKind::Disconnected:
    case ErrorKind::SemiedgePresent:
    case ErrorKind::LoopOrSemiedgePresent:
    case ErrorKind::NotASpanningTree:
    case ErrorKind::NotSemiregular:
    case ErrorKind::NotACovering:
    case ErrorKind::NotXiInvariant:
    case ErrorKind::HypothesisUnmet: return kPrecondition;
    default: return kUsage;
  }
}

struct Common {
  std::string format = "table";
  std::string output;
};

void emit(const Common& common, const Json& json, const std::string& table) {
  const std::string text = common.format == "json" ? io::dump(json) : table;
  if (common.output.empty()) std::cout << text;
  else io::write_file_atomic(common.output, text);
}

void add_common(CLI::App* sub, Common& common) {
  sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  sub->add_option("--output", common.output, "Write to this file (atomically) instead of stdout");
}

std::string join_factors(const AbelianGroup& g) {
  std::string s = "[";
  for (std::size_t i = 0; i < g.factors().size(); ++i) s += (i ? "," : "") + g.factors()[i].get_str();
  return s + "]";
}

std::string coords_string(const GroupElement& e) {
  std::string s = "(";
  for (std::size_t i = 0; i < e.coords.size(); ++i) s += (i ? "," : "") + e.coords[i].get_str();
  return s + ")";
}

std::string graph_table(const DartGraph& g) {
  std::ostringstream out;
  auto cls = classify_edges(g);
  out << "vertices: " << g.vertex_count() << ", darts: " << g.dart_count() << ", edges: " << g.edge_count()
      << " (" << cls.ordinary.size() << " ordinary, " << cls.loops.size() << " loops, " << cls.semiedges.size()
      << " semiedges)\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out << "  vertex " << v << ":";
    for (Dart x : g.darts_at(v)) out << " " << x << "->" << g.head(x);
    out << "\n";
  }
  return out.str();
}

std::vector<GroupIndex> parse_connection(const std::string& spec, const FiniteGroup& group) {
  if (spec == "involutions" || spec == "transpositions") return group.involutions();
  std::vector<GroupIndex> out;
  if (spec == "all") {
    for (GroupIndex g = 1; g < group.order(); ++g) out.push_back(g);
    return out;
  }
  std::string token;
  std::istringstream in(spec);
  while (std::getline(in, token, ',')) {
    try {
      std::size_t used = 0;
      unsigned long v = std::stoul(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      out.push_back(v);
    } catch (const std::exception&) {
      throw Error(ErrorKind::Parse, "connection entry \"" + token + "\" is not an element index");
    }
  }
  if (out.empty()) throw Error(ErrorKind::Parse, "empty connection set");
  return out;
}

int cmd_jac(const std::string& graph_file, const Common& common) {
  const DartGraph g = io::graph_from_json(io::load_json(graph_file));
  const JFlow flow = jacobian(g);
  std::ostringstream table;
  table << "factors: " << join_factors(flow.group) << ", order: " << flow.group.order().get_str() << "\n";
  table << "rank: " << flow.group.rank() << "\n";
  for (const auto& e : g.edges()) table << "  xi(" << e.dart << ") = " << coords_string(flow.xi[e.dart]) << "\n";
  Json j = io::jacobian_report(g, flow);
  j["rank"] = flow.group.rank();
  emit(common, j, table.str());
  return kOk;
}

int cmd_verify(const std::string& suite, const verify::SuiteOptions& options, const Common& common) {
  auto result = verify::run_suite(suite, options);
  emit(common, verify::to_json(result), verify::summary(result));
  if (!common.output.empty() || common.format == "json") std::cerr << verify::summary(result);
  return result.passed() ? kOk : kFailed;
}

Json covering_report_json(const CoveringReport& r) {
  return Json{{"is_homomorphism", r.is_homomorphism}, {"is_covering", r.is_covering}, {"fold", r.fold},
              {"is_regular", r.is_regular},           {"ct_order", r.ct_order},       {"problems", r.problems}};
}

int cmd_cover(const std::string& voltage_file, const Common& common) {
  const VoltageAssignment v = io::voltage_from_json(io::load_json(voltage_file));
  const CoveringMap c = derived_graph(v);
  const CoveringReport r = validate_covering(c);
  std::ostringstream table;
  table << "derived graph\n" << graph_table(c.total);
  table << "fold: " << r.fold << ", regular: " << (r.is_regular ? "yes" : "no") << ", |CT|: " << r.ct_order << "\n";
  emit(common, Json{{"covering", io::covering_to_json(c)}, {"report", covering_report_json(r)}}, table.str());
  return r.is_covering ? kOk : kFailed;
}

int cmd_quotient(const std::string& graph_file, const std::vector<std::string>& perms,
                 const std::vector<std::string>& dart_perms, const Common& common) {
  const DartGraph g = io::graph_from_json(io::load_json(graph_file));
  std::vector<Permutation> gens;
  for (const auto& p : perms) gens.push_back(extend_vertex_permutation(g, parse_cycles(p, g.vertex_count())));
  for (const auto& p : dart_perms) gens.push_back(parse_cycles(p, g.dart_count()));
  for (const auto& f : gens)
    if (!is_automorphism(g, f)) throw Error(ErrorKind::NotAnAutomorphism, f.cycle_string() + " is not an automorphism");
  const PermGroup group = PermGroup::generate(g.dart_count(), gens);
  const CoveringMap c = quotient_graph(g, group);
  std::ostringstream table;
  table << "group order: " << group.order() << "\nquotient graph\n" << graph_table(c.base);
  emit(common, Json{{"group_order", group.order()}, {"quotient", io::graph_to_json(c.base)}, {"projection", c.projection}},
       table.str());
  return kOk;
}

int cmd_cayley(const std::string& group_file, const std::string& conn, const Common& common) {
  const FiniteGroup group = io::group_from_json(io::load_json(group_file));
  const auto m = parse_connection(conn, group);
  const DartGraph g = cayley_multigraph(group, m);
  std::ostringstream table;
  table << "connection: [";
  for (std::size_t i = 0; i < m.size(); ++i) table << (i ? "," : "") << m[i];
  table << "]\n" << graph_table(g);
  emit(common, Json{{"connection", m}, {"graph", io::graph_to_json(g)}}, table.str());
  return kOk;
}

int cmd_aut(const std::string& graph_file, std::size_t cap, const Common& common) {
  const DartGraph g = io::graph_from_json(io::load_json(graph_file));
  SearchLimits limits;
  limits.max_vertices = cap;
  const PermGroup aut = automorphisms(g, limits);
  std::ostringstream table;
  table << "order: " << aut.order() << "\n";
  Json gens = Json::array();
  for (const auto& f : aut.generators()) {
    table << "  " << f.cycle_string() << "\n";
    gens.push_back(io::permutation_to_json(f));
  }
  emit(common, Json{{"order", aut.order()}, {"generators", gens}}, table.str());
  return kOk;
}

int cmd_trees(const std::string& graph_file, bool enumerate, std::size_t cap, const Common& common) {
  const DartGraph g = io::graph_from_json(io::load_json(graph_file));
  const Integer tau = spanning_tree_count(g);
  std::ostringstream table;
  table << tau.get_str() << "\n";
  Json j{{"count", tau.get_str()}};
  if (enumerate) {
    Json trees = Json::array();
    for (const auto& t : spanning_tree_enumerate(g, cap)) {
      trees.push_back(t.edges);
      table << " ";
      for (auto e : t.edges) table << " " << e;
      table << "\n";
    }
    j["trees"] = trees;
  }
  emit(common, j, table.str());
  return kOk;
}

struct GenerateArgs {
  std::string family;
  std::uint64_t seed = 1;
  std::size_t n = 6;
  double p = 0.5;
  std::size_t extra = 3;
  std::size_t size = 3;
  std::string graph, group;
};

int cmd_generate(const GenerateArgs& a, const Common& common) {
  Json out;
  std::string table;
  if (a.family == "gnp-simple") {
    auto g = generate::gnp_simple(a.seed, a.n, a.p);
    out = io::graph_to_json(g);
    table = graph_table(g);
  } else if (a.family == "random-multigraph") {
    auto g = generate::random_multigraph(a.seed, a.n, a.extra);
    out = io::graph_to_json(g);
    table = graph_table(g);
  } else if (a.family == "random-voltage") {
    if (a.graph.empty() || a.group.empty()) throw Error(ErrorKind::Parse, "random-voltage needs --graph and --group");
    auto v = generate::random_voltage(a.seed, io::graph_from_json(io::load_json(a.graph)),
                                      io::group_from_json(io::load_json(a.group)));
    out = io::voltage_to_json(v);
    table = "voltages:";
    for (auto x : v.xi) table += " " + std::to_string(x);
    table += "\n";
  } else if (a.family == "random-cayley") {
    if (a.group.empty()) throw Error(ErrorKind::Parse, "random-cayley needs --group");
    auto group = io::group_from_json(io::load_json(a.group));
    auto m = generate::random_connection(a.seed, group, a.size);
    auto g = cayley_multigraph(group, m);
    out = Json{{"connection", m}, {"graph", io::graph_to_json(g)}};
    table = graph_table(g);
  } else {
    throw Error(ErrorKind::Parse, "unknown family \"" + a.family + "\"");
  }
  emit(common, out, table);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph Jacobians, harmonic flows, coverings and symmetry checks"};
  app.require_subcommand(1);
  Common common;
  std::string graph_file, group_file, voltage_file, conn, suite;
  std::vector<std::string> perms, dart_perms;
  verify::SuiteOptions options;
  std::size_t aut_cap = kDefaultAutomorphismVertexCap, tree_cap = kDefaultEnumerationEdgeCap;
  bool enumerate = false;
  GenerateArgs gen;

  auto* jac = app.add_subcommand("jac", "Jacobian invariant factors and J-flow");
  jac->add_option("--graph", graph_file, "Graph JSON")->required();
  add_common(jac, common);

  auto* ver = app.add_subcommand("verify", "Run a verification suite");
  ver->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(verify::suite_names()));
  ver->add_option("--seed", options.seed, "Base seed");
  ver->add_option("--count", options.count, "Number of random instances (0 = suite default)");
  ver->add_option("--scale-cap", options.scale_cap, "Largest edge count for the enumeration oracle");
  add_common(ver, common);

  auto* cover = app.add_subcommand("cover", "Derived graph of a voltage assignment");
  cover->add_option("--voltage", voltage_file, "Voltage JSON")->required();
  add_common(cover, common);

  auto* quot = app.add_subcommand("quotient", "Quotient by the group generated by the given permutations");
  quot->add_option("--graph", graph_file, "Graph JSON")->required();
  quot->add_option("--perm", perms, "Vertex permutation in cycle notation (simple graphs)");
  quot->add_option("--dart-perm", dart_perms, "Dart permutation in cycle notation");
  add_common(quot, common);

  auto* cay = app.add_subcommand("cayley", "Cayley multigraph of a group");
  cay->add_option("--group", group_file, "Group JSON")->required();
  cay->add_option("--conn", conn, "involutions | transpositions | all | comma-separated element indices")->required();
  add_common(cay, common);

  auto* aut = app.add_subcommand("aut", "Automorphism group");
  aut->add_option("--graph", graph_file, "Graph JSON")->required();
  aut->add_option("--scale-cap", aut_cap, "Largest vertex count searched");
  add_common(aut, common);

  auto* trees = app.add_subcommand("trees", "Spanning tree count");
  trees->add_option("--graph", graph_file, "Graph JSON")->required();
  trees->add_flag("--enumerate", enumerate, "Also list the trees");
  trees->add_option("--scale-cap", tree_cap, "Largest edge count enumerated");
  add_common(trees, common);

  auto* gn = app.add_subcommand("generate", "Seeded random instance");
  gn->add_option("family", gen.family, "gnp-simple | random-multigraph | random-voltage | random-cayley")
      ->required()
      ->check(CLI::IsMember({"gnp-simple", "random-multigraph", "random-voltage", "random-cayley"}));
  gn->add_option("--seed", gen.seed, "Seed");
  gn->add_option("--n", gen.n, "Vertex count");
  gn->add_option("--p", gen.p, "Edge probability (gnp-simple)");
  gn->add_option("--extra", gen.extra, "Extra edges (random-multigraph)");
  gn->add_option("--size", gen.size, "Minimum connection size (random-cayley)");
  gn->add_option("--graph", gen.graph, "Base graph JSON (random-voltage)");
  gn->add_option("--group", gen.group, "Group JSON (random-voltage, random-cayley)");
  add_common(gn, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*jac) return cmd_jac(graph_file, common);
    if (*ver) return cmd_verify(suite, options, common);
    if (*cover) return cmd_cover(voltage_file, common);
    if (*quot) return cmd_quotient(graph_file, perms, dart_perms, common);
    if (*cay) return cmd_cayley(group_file, conn, common);
    if (*aut) return cmd_aut(graph_file, aut_cap, common);
    if (*trees) return cmd_trees(graph_file, enumerate, tree_cap, common);
    if (*gn) return cmd_generate(gen, common);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
