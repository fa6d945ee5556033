#include "jacflow/io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>
#include <unistd.h>

#include "jacflow/error.hpp"

namespace jacflow::io {

namespace {

[[noreturn]] void parse_error(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::Parse, where + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) parse_error(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) parse_error(where, std::string("missing key \"") + key + "\"");
  return *it;
}

std::uint64_t natural(const Json& j, const std::string& where, std::uint64_t bound) {
  if (!j.is_number_integer()) parse_error(where, "expected a non-negative integer");
  if (j.is_number_unsigned()) {
    auto v = j.get<std::uint64_t>();
    if (v >= bound) parse_error(where, std::to_string(v) + " is out of range (must be < " + std::to_string(bound) + ")");
    return v;
  }
  auto v = j.get<std::int64_t>();
  if (v < 0 || static_cast<std::uint64_t>(v) >= bound)
    parse_error(where, std::to_string(v) + " is out of range (must be < " + std::to_string(bound) + ")");
  return static_cast<std::uint64_t>(v);
}

const Json& array(const Json& j, const std::string& where) {
  if (!j.is_array()) parse_error(where, "expected an array");
  return j;
}

std::string at(const std::string& base, std::size_t i) { return base + "[" + std::to_string(i) + "]"; }

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  auto tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::Parse, "cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw Error(ErrorKind::Parse, "short write to " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw Error(ErrorKind::Parse, "cannot rename into " + path.string() + ": " + ec.message());
  }
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::Parse, "malformed JSON at byte " + std::to_string(e.byte));
  }
}

Json load_json(const std::filesystem::path& path) {
  try {
    return parse_json(read_file(path));
  } catch (const Error& e) {
    throw Error(e.kind(), path.string() + ": " + std::string(e.what()).substr(to_string(e.kind()).size() + 2));
  }
}

Json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
  return v.get_str();
}

DartGraph graph_from_json(const Json& j) {
  const std::uint64_t limit = std::numeric_limits<Dart>::max();
  const std::uint64_t n = natural(field(j, "darts", "graph"), "graph.darts", limit);
  const Json& lam = array(field(j, "lambda", "graph"), "graph.lambda");
  if (lam.size() != n)
    parse_error("graph.lambda", "has " + std::to_string(lam.size()) + " entries, expected " + std::to_string(n));
  GraphParts parts;
  parts.dart_count = n;
  for (std::size_t i = 0; i < lam.size(); ++i) parts.lambda.push_back(static_cast<Dart>(natural(lam[i], at("graph.lambda", i), n)));
  const Json& verts = array(field(j, "vertices", "graph"), "graph.vertices");
  for (std::size_t v = 0; v < verts.size(); ++v) {
    const Json& cls = array(verts[v], at("graph.vertices", v));
    std::vector<Dart> darts;
    for (std::size_t k = 0; k < cls.size(); ++k)
      darts.push_back(static_cast<Dart>(natural(cls[k], at(at("graph.vertices", v), k), n)));
    parts.vertices.push_back(std::move(darts));
  }
  return DartGraph(std::move(parts));
}

Json graph_to_json(const DartGraph& g) {
  return Json{{"darts", g.dart_count()}, {"lambda", g.lambda()}, {"vertices", g.vertices()}};
}

FiniteGroup group_from_json(const Json& j) {
  const std::uint64_t n = natural(field(j, "order", "group"), "group.order", 1u << 20);
  const Json& rows = array(field(j, "table", "group"), "group.table");
  if (rows.size() != n) parse_error("group.table", "has " + std::to_string(rows.size()) + " rows, expected " + std::to_string(n));
  std::vector<std::vector<GroupIndex>> table;
  for (std::size_t r = 0; r < n; ++r) {
    const Json& row = array(rows[r], at("group.table", r));
    if (row.size() != n)
      parse_error(at("group.table", r), "has " + std::to_string(row.size()) + " entries, expected " + std::to_string(n));
    std::vector<GroupIndex> out;
    for (std::size_t c = 0; c < n; ++c) out.push_back(natural(row[c], at(at("group.table", r), c), n));
    table.push_back(std::move(out));
  }
  return FiniteGroup::from_table(std::move(table));
}

Json group_to_json(const FiniteGroup& g) { return Json{{"order", g.order()}, {"table", g.table()}}; }

Permutation permutation_from_json(const Json& j) {
  const Json& arr = array(j, "permutation");
  std::vector<std::uint32_t> img;
  for (std::size_t i = 0; i < arr.size(); ++i)
    img.push_back(static_cast<std::uint32_t>(natural(arr[i], at("permutation", i), arr.size())));
  try {
    return Permutation(std::move(img));
  } catch (const Error& e) {
    throw Error(ErrorKind::Parse, std::string("permutation: ") + e.what());
  }
}

Json permutation_to_json(const Permutation& p) { return p.image(); }

VoltageAssignment voltage_from_json(const Json& j) {
  VoltageAssignment v{graph_from_json(field(j, "base", "voltage")), group_from_json(field(j, "group", "voltage")), {}, {}};
  const Json& xi = array(field(j, "xi", "voltage"), "voltage.xi");
  if (xi.size() != v.base.dart_count())
    parse_error("voltage.xi", "has " + std::to_string(xi.size()) + " entries, expected " + std::to_string(v.base.dart_count()));
  for (std::size_t i = 0; i < xi.size(); ++i) v.xi.push_back(natural(xi[i], at("voltage.xi", i), v.group.order()));
  if (j.contains("tree")) {
    const Json& tree = array(j["tree"], "voltage.tree");
    SpanningTree t;
    for (std::size_t i = 0; i < tree.size(); ++i)
      t.edges.push_back(v.base.edge_of(static_cast<Dart>(natural(tree[i], at("voltage.tree", i), v.base.dart_count()))));
    std::sort(t.edges.begin(), t.edges.end());
    t.edges.erase(std::unique(t.edges.begin(), t.edges.end()), t.edges.end());
    v.tree = std::move(t);
  }
  return v;
}

Json voltage_to_json(const VoltageAssignment& v) {
  Json j{{"base", graph_to_json(v.base)}, {"group", group_to_json(v.group)}, {"xi", v.xi}};
  if (v.tree) {
    std::vector<Dart> darts;
    for (std::size_t e : v.tree->edges) darts.push_back(v.base.edges()[e].dart);
    j["tree"] = darts;
  }
  return j;
}

CoveringMap covering_from_json(const Json& j) {
  CoveringMap c{graph_from_json(field(j, "total", "covering")), graph_from_json(field(j, "base", "covering")), {}};
  const Json& p = array(field(j, "projection", "covering"), "covering.projection");
  if (p.size() != c.total.dart_count())
    parse_error("covering.projection",
                "has " + std::to_string(p.size()) + " entries, expected " + std::to_string(c.total.dart_count()));
  for (std::size_t i = 0; i < p.size(); ++i)
    c.projection.push_back(static_cast<Dart>(natural(p[i], at("covering.projection", i), c.base.dart_count())));
  return c;
}

Json covering_to_json(const CoveringMap& c) {
  return Json{{"total", graph_to_json(c.total)}, {"base", graph_to_json(c.base)}, {"projection", c.projection}};
}

Json jacobian_report(const DartGraph& g, const JFlow& flow) {
  Json factors = Json::array();
  for (const auto& d : flow.group.factors()) factors.push_back(integer_json(d));
  Json xi = Json::array();
  for (const auto& e : g.edges()) {
    Json coords = Json::array();
    for (const auto& c : flow.xi[e.dart].coords) coords.push_back(integer_json(c));
    xi.push_back(std::move(coords));
  }
  return Json{{"factors", factors}, {"order", flow.group.order().get_str()}, {"xi", xi}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace jacflow::io
