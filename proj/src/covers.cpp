#include "jacflow/covers.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "jacflow/error.hpp"
#include "jacflow/symmetry.hpp"

namespace jacflow {

std::vector<std::string> validate_voltage(const VoltageAssignment& v) {
  std::vector<std::string> out;
  const DartGraph& g = v.base;
  if (v.xi.size() != g.dart_count()) {
    out.push_back("voltage list has " + std::to_string(v.xi.size()) + " entries for " + std::to_string(g.dart_count()) +
                  " darts");
    return out;
  }
  for (Dart x = 0; x < g.dart_count(); ++x) {
    if (v.xi[x] >= v.group.order()) {
      out.push_back("voltage of dart " + std::to_string(x) + " is not a group element");
      return out;
    }
  }
  for (Dart x = 0; x < g.dart_count(); ++x)
    if (v.xi[g.inverse(x)] != v.group.inverse(v.xi[x]))
      out.push_back("voltage of dart " + std::to_string(g.inverse(x)) + " is not the inverse of dart " +
                    std::to_string(x));
  if (v.tree) {
    if (!is_spanning_tree(g, *v.tree)) {
      out.emplace_back("designated tree is not a spanning tree of the base");
    } else {
      for (std::size_t e : v.tree->edges) {
        Dart x = g.edges()[e].dart;
        if (v.xi[x] != FiniteGroup::identity())
          out.push_back("tree dart " + std::to_string(x) + " carries a non-trivial voltage");
      }
    }
    std::vector<GroupIndex> gens(v.xi.begin(), v.xi.end());
    if (v.group.generated_subgroup(gens).size() != v.group.order())
      out.emplace_back("voltages do not generate the group");
  }
  return out;
}

CoveringMap derived_graph(const VoltageAssignment& v) {
  auto problems = validate_voltage(v);
  if (!problems.empty()) throw Error(ErrorKind::InvalidVoltage, problems.front());
  const DartGraph& g = v.base;
  const std::size_t n = g.dart_count(), order = v.group.order();
  GraphParts parts;
  parts.dart_count = n * order;
  parts.lambda.resize(parts.dart_count);
  std::vector<Dart> projection(parts.dart_count);
  for (GroupIndex h = 0; h < order; ++h)
    for (Dart x = 0; x < n; ++x) {
      const Dart d = static_cast<Dart>(h * n + x);
      parts.lambda[d] = static_cast<Dart>(v.group.multiply(h, v.xi[x]) * n + g.inverse(x));
      projection[d] = x;
    }
  for (GroupIndex h = 0; h < order; ++h)
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
      std::vector<Dart> cls;
      for (Dart x : g.darts_at(u)) cls.push_back(static_cast<Dart>(h * n + x));
      parts.vertices.push_back(std::move(cls));
    }
  return {DartGraph(std::move(parts)), g, std::move(projection)};
}

CoveringMap quotient_graph(const DartGraph& g, const PermGroup& group) {
  if (group.degree() != g.dart_count()) throw Error(ErrorKind::DimensionMismatch, "group does not act on these darts");
  if (!is_semiregular(group, g)) throw Error(ErrorKind::NotSemiregular, "quotients need a semiregular group");
  constexpr Dart kUnset = ~Dart{0};
  std::vector<Dart> dart_orbit(g.dart_count(), kUnset);
  std::vector<Dart> reps;
  for (Dart x = 0; x < g.dart_count(); ++x) {
    if (dart_orbit[x] != kUnset) continue;
    for (const auto& f : group.elements()) dart_orbit[f(x)] = static_cast<Dart>(reps.size());
    reps.push_back(x);
  }
  std::vector<Vertex> vertex_orbit(g.vertex_count(), kUnset);
  Vertex nv = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (vertex_orbit[v] != kUnset) continue;
    for (const auto& f : group.elements()) vertex_orbit[g.vertex_of(f(g.darts_at(v).front()))] = nv;
    ++nv;
  }
  GraphParts parts;
  parts.dart_count = reps.size();
  parts.vertices.resize(nv);
  for (Dart o = 0; o < reps.size(); ++o) {
    parts.lambda.push_back(dart_orbit[g.inverse(reps[o])]);
    parts.vertices[vertex_orbit[g.vertex_of(reps[o])]].push_back(o);
  }
  return {g, DartGraph(std::move(parts)), std::move(dart_orbit)};
}

namespace {

// The dart at total vertex u lying over base dart z, if any.
std::optional<Dart> lift_at(const CoveringMap& c, Vertex u, Dart z) {
  for (Dart x : c.total.darts_at(u))
    if (c.projection[x] == z) return x;
  return std::nullopt;
}

Vertex base_vertex_of(const CoveringMap& c, Vertex total_vertex) {
  return c.base.vertex_of(c.projection[c.total.darts_at(total_vertex).front()]);
}

// Covering transformation sending dart 0 to `target`, grown by unique
// lifting; nullopt if the lift is inconsistent.
std::optional<DartPermutation> transformation_from(const CoveringMap& c, Dart target) {
  const DartGraph& t = c.total;
  constexpr Dart kUnset = ~Dart{0};
  std::vector<Dart> img(t.dart_count(), kUnset);
  std::vector<bool> visited_vertex(t.vertex_count(), false);
  std::queue<Dart> work;
  auto set = [&](Dart x, Dart y) {
    if (img[x] == kUnset) {
      img[x] = y;
      work.push(x);
      return true;
    }
    return img[x] == y;
  };
  if (!set(0, target)) return std::nullopt;
  while (!work.empty()) {
    Dart x = work.front();
    work.pop();
    if (!set(t.inverse(x), t.inverse(img[x]))) return std::nullopt;
    const Vertex v = t.vertex_of(x);
    if (visited_vertex[v]) continue;
    visited_vertex[v] = true;
    const Vertex w = t.vertex_of(img[x]);
    for (Dart z : t.darts_at(v)) {
      auto y = lift_at(c, w, c.projection[z]);
      if (!y || !set(z, *y)) return std::nullopt;
    }
  }
  if (std::find(img.begin(), img.end(), kUnset) != img.end()) return std::nullopt;
  std::vector<std::uint32_t> image(img.begin(), img.end());
  std::vector<bool> hit(image.size(), false);
  for (auto y : image) {
    if (hit[y]) return std::nullopt;
    hit[y] = true;
  }
  DartPermutation f(std::move(image));
  if (!is_automorphism(t, f)) return std::nullopt;
  return f;
}

}  // namespace

CoveringReport validate_covering(const CoveringMap& c) {
  CoveringReport r;
  const DartGraph &t = c.total, &b = c.base;
  if (c.projection.size() != t.dart_count()) {
    r.problems.emplace_back("projection length differs from the total dart count");
    return r;
  }
  for (Dart y : c.projection)
    if (y >= b.dart_count()) {
      r.problems.emplace_back("projection leaves the base dart range");
      return r;
    }
  r.is_homomorphism = true;
  for (Dart x = 0; x < t.dart_count(); ++x)
    if (c.projection[t.inverse(x)] != b.inverse(c.projection[x])) {
      r.problems.push_back("projection does not commute with lambda at dart " + std::to_string(x));
      r.is_homomorphism = false;
      break;
    }
  bool bijective_on_stars = true;
  for (Vertex u = 0; u < t.vertex_count(); ++u) {
    const Vertex v = base_vertex_of(c, u);
    std::vector<Dart> images;
    for (Dart x : t.darts_at(u)) {
      if (b.vertex_of(c.projection[x]) != v) {
        r.problems.push_back("vertex " + std::to_string(u) + " is split across base vertices");
        r.is_homomorphism = false;
      }
      images.push_back(c.projection[x]);
    }
    std::sort(images.begin(), images.end());
    auto star = b.darts_at(v);
    if (!std::equal(images.begin(), images.end(), star.begin(), star.end())) {
      if (r.is_homomorphism) r.problems.push_back("vertex " + std::to_string(u) + " does not map bijectively onto its image");
      bijective_on_stars = false;
    }
  }
  std::vector<std::size_t> fibre(b.dart_count(), 0);
  for (Dart y : c.projection) ++fibre[y];
  const bool onto = std::none_of(fibre.begin(), fibre.end(), [](std::size_t k) { return k == 0; });
  if (!onto) r.problems.emplace_back("projection is not onto");
  r.is_covering = r.is_homomorphism && bijective_on_stars && onto;
  if (!r.is_covering) return r;
  if (std::adjacent_find(fibre.begin(), fibre.end(), std::not_equal_to<>()) != fibre.end()) {
    r.problems.emplace_back("fibres have different sizes");
    return r;
  }
  r.fold = fibre.front();
  if (!is_connected(t) || !is_connected(b)) {
    r.problems.emplace_back("regularity is decided for connected graphs only");
    return r;
  }
  r.ct_order = covering_transformations(c).size();
  r.is_regular = r.ct_order == r.fold;
  return r;
}

std::vector<DartPermutation> covering_transformations(const CoveringMap& c) {
  std::vector<DartPermutation> out;
  if (c.projection.size() != c.total.dart_count() || c.total.dart_count() == 0)
    throw Error(ErrorKind::NotACovering, "projection length differs from the total dart count");
  const Dart z0 = c.projection[0];
  for (Dart y = 0; y < c.total.dart_count(); ++y) {
    if (c.projection[y] != z0) continue;
    if (auto f = transformation_from(c, y)) out.push_back(std::move(*f));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Monodromy monodromy_fibre_action(const CoveringMap& c, Vertex base_vertex) {
  auto report = validate_covering(c);
  if (!report.is_covering) throw Error(ErrorKind::NotACovering, report.problems.empty() ? "" : report.problems.front());
  if (base_vertex >= c.base.vertex_count()) throw Error(ErrorKind::NotACovering, "base vertex out of range");
  Monodromy m;
  for (Vertex u = 0; u < c.total.vertex_count(); ++u)
    if (base_vertex_of(c, u) == base_vertex) m.fibre.push_back(u);
  std::map<Vertex, std::uint32_t> position;
  for (std::uint32_t i = 0; i < m.fibre.size(); ++i) position[m.fibre[i]] = i;

  const SpanningTree tree = bfs_spanning_tree(c.base);
  std::vector<Permutation> generators;
  for (const Walk& cyc : fundamental_cycles(c.base, tree)) {
    const Vertex start = c.base.vertex_of(cyc.darts.front());
    Walk w{tree_path(c.base, tree, base_vertex, start)};
    w.darts.insert(w.darts.end(), cyc.darts.begin(), cyc.darts.end());
    auto back = tree_path(c.base, tree, start, base_vertex);
    w.darts.insert(w.darts.end(), back.begin(), back.end());
    std::vector<std::uint32_t> img(m.fibre.size());
    for (std::uint32_t i = 0; i < m.fibre.size(); ++i) {
      Vertex u = m.fibre[i];
      for (Dart z : w.darts) u = c.total.head(*lift_at(c, u, z));
      img[i] = position.at(u);
    }
    generators.emplace_back(std::move(img));
  }
  m.group = PermGroup::generate(m.fibre.size(), std::move(generators));
  return m;
}

std::vector<Permutation> fibre_action(const CoveringMap& c, Vertex base_vertex,
                                      const std::vector<DartPermutation>& transformations) {
  std::vector<Vertex> fibre;
  for (Vertex u = 0; u < c.total.vertex_count(); ++u)
    if (base_vertex_of(c, u) == base_vertex) fibre.push_back(u);
  std::vector<Permutation> out;
  for (const auto& f : transformations) {
    std::vector<std::uint32_t> img;
    for (Vertex u : fibre) {
      Vertex w = c.total.vertex_of(f(c.total.darts_at(u).front()));
      img.push_back(static_cast<std::uint32_t>(std::lower_bound(fibre.begin(), fibre.end(), w) - fibre.begin()));
    }
    out.emplace_back(std::move(img));
  }
  return out;
}

LocalGroupReport local_group(const CoveringMap& c, const JFlow& flow, const PermGroup& group) {
  if (flow.xi.size() != c.total.dart_count()) throw Error(ErrorKind::DimensionMismatch, "flow is not on the total graph");
  for (const auto& f : group.elements())
    for (Dart x = 0; x < c.total.dart_count(); ++x)
      if (flow.xi[f(x)] != flow.xi[x])
        throw Error(ErrorKind::NotXiInvariant, "element " + f.cycle_string() + " moves the flow at dart " + std::to_string(x));

  std::vector<std::optional<GroupElement>> pushed(c.base.dart_count());
  for (Dart x = 0; x < c.total.dart_count(); ++x) {
    auto& slot = pushed[c.projection[x]];
    if (!slot) slot = flow.xi[x];
    else if (*slot != flow.xi[x])
      throw Error(ErrorKind::NotXiInvariant, "flow is not constant on the fibre over base dart " +
                                                 std::to_string(c.projection[x]));
  }

  LocalGroupReport r;
  for (const Walk& w : fundamental_cycles(c.base, bfs_spanning_tree(c.base))) {
    GroupElement s = flow.group.zero();
    for (Dart z : w.darts) s = flow.group.add(s, pushed[z].value());
    r.defects.push_back(std::move(s));
  }
  r.subgroup_order = flow.group.subgroup_order(r.defects);
  r.ambient_order = flow.group.order();
  r.acting_order = group.order();
  r.divides = mpz_divisible_p(Integer(static_cast<unsigned long>(r.acting_order)).get_mpz_t(),
                              r.subgroup_order.get_mpz_t()) != 0;
  return r;
}

std::vector<std::size_t> connection_pairing(const FiniteGroup& group, const std::vector<GroupIndex>& connection) {
  std::map<GroupIndex, std::vector<std::size_t>> copies;
  for (std::size_t j = 0; j < connection.size(); ++j) {
    if (connection[j] >= group.order()) throw Error(ErrorKind::InvalidGroup, "connection entry is not a group element");
    if (connection[j] == FiniteGroup::identity())
      throw Error(ErrorKind::IdentityInConnection, "connection multiset contains the identity");
    copies[connection[j]].push_back(j);
  }
  std::vector<std::size_t> pair(connection.size());
  for (const auto& [x, idx] : copies) {
    const GroupIndex inv = group.inverse(x);
    auto it = copies.find(inv);
    if (it == copies.end() || it->second.size() != idx.size())
      throw Error(ErrorKind::NotInverseClosed, "element " + std::to_string(x) + " and its inverse have different multiplicity");
    for (std::size_t r = 0; r < idx.size(); ++r) pair[idx[r]] = it->second[r];
  }
  return pair;
}

DartGraph cayley_multigraph(const FiniteGroup& group, const std::vector<GroupIndex>& connection) {
  const auto pair = connection_pairing(group, connection);
  const std::size_t k = connection.size();
  GraphParts parts;
  parts.dart_count = group.order() * k;
  parts.lambda.resize(parts.dart_count);
  for (GroupIndex g = 0; g < group.order(); ++g) {
    std::vector<Dart> cls;
    for (std::size_t j = 0; j < k; ++j) {
      const auto d = static_cast<Dart>(g * k + j);
      parts.lambda[d] = static_cast<Dart>(group.multiply(g, connection[j]) * k + pair[j]);
      cls.push_back(d);
    }
    parts.vertices.push_back(std::move(cls));
  }
  return DartGraph(std::move(parts));
}

VoltageAssignment connection_bouquet(const FiniteGroup& group, const std::vector<GroupIndex>& connection) {
  const auto pair = connection_pairing(group, connection);
  GraphParts parts;
  parts.dart_count = connection.size();
  for (std::size_t j = 0; j < connection.size(); ++j) parts.lambda.push_back(static_cast<Dart>(pair[j]));
  std::vector<Dart> all(connection.size());
  for (Dart j = 0; j < all.size(); ++j) all[j] = j;
  parts.vertices.push_back(std::move(all));
  return {DartGraph(std::move(parts)), group, connection, SpanningTree{}};
}

QuotientVoltages voltages_from_quotient(const DartGraph& total, const PermGroup& group) {
  const CoveringMap c = quotient_graph(total, group);
  const DartGraph& base = c.base;
  const SpanningTree tree = bfs_spanning_tree(base);
  std::vector<bool> in_tree(base.edge_count(), false);
  for (std::size_t e : tree.edges) in_tree[e] = true;

  // Lift the tree starting from the smallest total vertex over base vertex 0.
  constexpr Vertex kUnset = ~Vertex{0};
  std::vector<Vertex> lift(base.vertex_count(), kUnset);
  for (Vertex u = 0; u < total.vertex_count() && lift[0] == kUnset; ++u)
    if (base_vertex_of(c, u) == 0) lift[0] = u;
  std::queue<Vertex> q;
  q.push(0);
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop();
    for (Dart z : base.darts_at(v)) {
      if (!in_tree[base.edge_of(z)] || lift[base.head(z)] != kUnset) continue;
      lift[base.head(z)] = total.head(*lift_at(c, lift[v], z));
      q.push(base.head(z));
    }
  }

  // label[t] = index of the element carrying lift[base vertex of t] to t.
  std::vector<GroupIndex> label(total.vertex_count(), 0);
  for (GroupIndex i = 0; i < group.order(); ++i) {
    const Permutation act = vertex_action(total, group.elements()[i]);
    for (Vertex v = 0; v < base.vertex_count(); ++v) label[act(lift[v])] = i;
  }

  QuotientVoltages out{{base, FiniteGroup::from_perm_group(group), std::vector<GroupIndex>(base.dart_count()), tree}, {}};
  std::vector<Dart> lifted(base.dart_count());
  for (Dart z = 0; z < base.dart_count(); ++z) {
    lifted[z] = *lift_at(c, lift[base.vertex_of(z)], z);
    out.voltages.xi[z] = label[total.head(lifted[z])];
  }
  out.derived_to_total.resize(total.dart_count());
  for (GroupIndex i = 0; i < group.order(); ++i)
    for (Dart z = 0; z < base.dart_count(); ++z)
      out.derived_to_total[i * base.dart_count() + z] = group.elements()[i](lifted[z]);
  return out;
}

namespace {

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

PFoldReport verify_pfold(const VoltageAssignment& v) {
  PFoldReport r;
  r.p = v.group.order();
  if (!is_prime(r.p)) throw Error(ErrorKind::HypothesisUnmet, "voltage group order " + std::to_string(r.p) + " is not prime");
  if (!is_connected(v.base)) throw Error(ErrorKind::HypothesisUnmet, "base graph is disconnected");
  const CoveringMap c = derived_graph(v);
  if (!c.total.is_simple()) throw Error(ErrorKind::HypothesisUnmet, "derived graph is not simple");
  if (!is_connected(c.total)) throw Error(ErrorKind::HypothesisUnmet, "derived graph is disconnected");
  const std::size_t lambda = edge_connectivity(c.total);
  if (lambda < 2) throw Error(ErrorKind::HypothesisUnmet, "derived graph is not 2-edge-connected");
  r.three_edge_connected = lambda >= 3;
  r.tau_total = spanning_tree_count(c.total);
  r.tau_base = spanning_tree_count(v.base);
  const Integer bound = r.tau_base * static_cast<unsigned long>(r.p);
  r.bound_holds = r.tau_total >= bound;
  r.strict = r.tau_total > bound;
  r.violation = !r.bound_holds || (r.three_edge_connected && !r.strict);
  return r;
}

}  // namespace jacflow
