#include "jacflow/dartgraph.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>
#include <utility>

#include "jacflow/error.hpp"

namespace jacflow {

std::vector<std::string> validate(const GraphParts& parts) {
  std::vector<std::string> out;
  const std::size_t n = parts.dart_count;
  if (n == 0) out.emplace_back("graph has no darts");
  if (parts.lambda.size() != n) {
    out.push_back("lambda has " + std::to_string(parts.lambda.size()) + " entries, expected " + std::to_string(n));
    return out;
  }
  bool in_range = true;
  for (std::size_t x = 0; x < n; ++x) {
    if (parts.lambda[x] >= n) {
      out.push_back("lambda[" + std::to_string(x) + "] = " + std::to_string(parts.lambda[x]) + " is out of range");
      in_range = false;
    }
  }
  if (in_range) {
    for (std::size_t x = 0; x < n; ++x)
      if (parts.lambda[parts.lambda[x]] != x) {
        out.push_back("lambda not involution at dart " + std::to_string(x));
        break;
      }
  }
  std::vector<long> owner(n, -1);
  for (std::size_t v = 0; v < parts.vertices.size(); ++v) {
    if (parts.vertices[v].empty()) out.push_back("vertex " + std::to_string(v) + " is empty");
    for (Dart x : parts.vertices[v]) {
      if (x >= n) {
        out.push_back("vertex " + std::to_string(v) + " lists dart " + std::to_string(x) + " which is out of range");
        continue;
      }
      if (owner[x] >= 0)
        out.push_back("dart " + std::to_string(x) + " appears in vertices " + std::to_string(owner[x]) + " and " +
                      std::to_string(v));
      else
        owner[x] = static_cast<long>(v);
    }
  }
  for (std::size_t x = 0; x < n; ++x)
    if (owner[x] < 0) out.push_back("dart " + std::to_string(x) + " belongs to no vertex");
  return out;
}

DartGraph::DartGraph(GraphParts parts) {
  auto problems = validate(parts);
  if (!problems.empty()) {
    std::string msg;
    for (const auto& p : problems) msg += (msg.empty() ? "" : "; ") + p;
    throw Error(ErrorKind::InvalidGraph, msg);
  }
  lambda_ = std::move(parts.lambda);
  vertices_ = std::move(parts.vertices);
  vertex_of_.assign(lambda_.size(), 0);
  for (Vertex v = 0; v < vertices_.size(); ++v) {
    std::sort(vertices_[v].begin(), vertices_[v].end());
    for (Dart x : vertices_[v]) vertex_of_[x] = v;
  }
  edge_index_.assign(lambda_.size(), 0);
  for (Dart x = 0; x < lambda_.size(); ++x) {
    if (!is_positive(x)) continue;
    const Dart y = lambda_[x];
    EdgeKind k = x == y                            ? EdgeKind::Semiedge
                 : vertex_of_[x] == vertex_of_[y] ? EdgeKind::Loop
                                                   : EdgeKind::Ordinary;
    edge_index_[x] = edge_index_[y] = edges_.size();
    edges_.push_back({x, y, k});
  }
}

DartGraph DartGraph::from_incidence(std::vector<Dart> lambda, const std::vector<Vertex>& vertex_of) {
  GraphParts parts;
  parts.dart_count = lambda.size();
  parts.lambda = std::move(lambda);
  if (vertex_of.size() != parts.dart_count)
    throw Error(ErrorKind::InvalidGraph, "incidence array length differs from dart count");
  std::size_t nv = 0;
  for (Vertex v : vertex_of) nv = std::max<std::size_t>(nv, v + 1);
  parts.vertices.resize(nv);
  for (Dart x = 0; x < vertex_of.size(); ++x) parts.vertices[vertex_of[x]].push_back(x);
  return DartGraph(std::move(parts));
}

bool DartGraph::has_semiedges() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.kind == EdgeKind::Semiedge; });
}

bool DartGraph::has_loops() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.kind == EdgeKind::Loop; });
}

bool DartGraph::is_simple() const {
  auto cls = classify_edges(*this);
  if (!cls.semiedges.empty() || !cls.loops.empty()) return false;
  return std::all_of(cls.parallel_classes.begin(), cls.parallel_classes.end(),
                     [](const auto& c) { return c.size() == 1; });
}

Dart GraphBuilder::add_edge(Vertex u, Vertex w) {
  const auto x = static_cast<Dart>(lambda_.size());
  lambda_.push_back(x + 1);
  lambda_.push_back(x);
  vertex_of_.push_back(u);
  vertex_of_.push_back(w);
  return x;
}

Dart GraphBuilder::add_semiedge(Vertex v) {
  const auto x = static_cast<Dart>(lambda_.size());
  lambda_.push_back(x);
  vertex_of_.push_back(v);
  return x;
}

DartGraph GraphBuilder::build() const {
  GraphParts parts;
  parts.dart_count = lambda_.size();
  parts.lambda = lambda_;
  parts.vertices.resize(vertex_count_);
  for (Dart x = 0; x < vertex_of_.size(); ++x) {
    if (vertex_of_[x] >= vertex_count_) throw Error(ErrorKind::InvalidGraph, "builder vertex out of range");
    parts.vertices[vertex_of_[x]].push_back(x);
  }
  return DartGraph(std::move(parts));
}

EdgeClassification classify_edges(const DartGraph& g) {
  EdgeClassification out;
  std::map<std::pair<Vertex, Vertex>, std::vector<std::size_t>> by_ends;
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const Edge& e = g.edges()[i];
    switch (e.kind) {
      case EdgeKind::Semiedge: out.semiedges.push_back(i); break;
      case EdgeKind::Loop: out.loops.push_back(i); break;
      case EdgeKind::Ordinary: {
        out.ordinary.push_back(i);
        Vertex a = g.vertex_of(e.dart), b = g.head(e.dart);
        by_ends[{std::min(a, b), std::max(a, b)}].push_back(i);
        break;
      }
    }
  }
  for (auto& [ends, cls] : by_ends) out.parallel_classes.push_back(std::move(cls));
  return out;
}

bool is_connected(const DartGraph& g) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Dart x : g.darts_at(v)) {
      Vertex w = g.head(x);
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == g.vertex_count();
}

namespace {

// Unit-capacity max-flow on the undirected multigraph of ordinary edges.
class UnitFlowNetwork {
 public:
  explicit UnitFlowNetwork(const DartGraph& g) : adj_(g.vertex_count()) {
    for (const Edge& e : g.edges()) {
      if (e.kind != EdgeKind::Ordinary) continue;
      Vertex u = g.vertex_of(e.dart), w = g.head(e.dart);
      adj_[u].push_back(arcs_.size());
      arcs_.push_back({w, 1});
      adj_[w].push_back(arcs_.size());
      arcs_.push_back({u, 1});
    }
  }

  std::size_t max_flow(Vertex s, Vertex t, std::size_t stop_at) {
    for (std::size_t i = 0; i < arcs_.size(); ++i) arcs_[i].cap = 1;
    std::size_t flow = 0;
    std::vector<long> via(adj_.size());
    while (flow < stop_at) {
      std::fill(via.begin(), via.end(), -1);
      via[s] = -2;
      std::queue<Vertex> q;
      q.push(s);
      while (!q.empty() && via[t] == -1) {
        Vertex v = q.front();
        q.pop();
        for (std::size_t a : adj_[v]) {
          if (arcs_[a].cap == 0 || via[arcs_[a].to] != -1) continue;
          via[arcs_[a].to] = static_cast<long>(a);
          q.push(arcs_[a].to);
        }
      }
      if (via[t] == -1) break;
      for (Vertex v = t; v != s;) {
        auto a = static_cast<std::size_t>(via[v]);
        arcs_[a].cap -= 1;
        arcs_[a ^ 1].cap += 1;
        v = arcs_[a ^ 1].to;
      }
      ++flow;
    }
    return flow;
  }

 private:
  struct Arc {
    Vertex to;
    int cap;
  };
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<Arc> arcs_;
};

}  // namespace

std::size_t edge_connectivity(const DartGraph& g) {
  if (g.has_semiedges()) throw Error(ErrorKind::SemiedgePresent, "edge connectivity is defined for semiedge-free graphs");
  if (g.vertex_count() < 2) return 0;
  // Every cut separates vertex 0 from some t, so fixing the source suffices.
  UnitFlowNetwork net(g);
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (Vertex t = 1; t < g.vertex_count(); ++t) best = std::min(best, net.max_flow(0, t, best));
  return best;
}

IntMatrix kirchhoff_matrix(const DartGraph& g) {
  IntMatrix l(g.vertex_count(), g.vertex_count());
  for (const Edge& e : g.edges()) {
    if (e.kind != EdgeKind::Ordinary) continue;
    Vertex u = g.vertex_of(e.dart), w = g.head(e.dart);
    l(u, u) += 1;
    l(w, w) += 1;
    l(u, w) -= 1;
    l(w, u) -= 1;
  }
  return l;
}

Integer spanning_tree_count(const DartGraph& g) {
  if (!is_connected(g)) throw Error(ErrorKind::Disconnected, "spanning trees of a disconnected graph");
  const std::size_t n = g.vertex_count();
  IntMatrix l = kirchhoff_matrix(g);
  IntMatrix minor(n - 1, n - 1);
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j) minor(i - 1, j - 1) = l(i, j);
  return determinant(minor);
}

namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

void enumerate_from(const DartGraph& g, const std::vector<std::size_t>& ordinary, std::size_t next,
                    std::vector<std::size_t>& chosen, const DisjointSets& sets, std::vector<SpanningTree>& out) {
  const std::size_t need = g.vertex_count() - 1;
  if (chosen.size() == need) {
    out.push_back({chosen});
    return;
  }
  for (std::size_t i = next; i + (need - chosen.size()) <= ordinary.size(); ++i) {
    const Edge& e = g.edges()[ordinary[i]];
    DisjointSets branch = sets;
    if (!branch.unite(g.vertex_of(e.dart), g.head(e.dart))) continue;
    chosen.push_back(ordinary[i]);
    enumerate_from(g, ordinary, i + 1, chosen, branch, out);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<SpanningTree> spanning_tree_enumerate(const DartGraph& g, std::size_t max_edges) {
  if (!is_connected(g)) throw Error(ErrorKind::Disconnected, "spanning trees of a disconnected graph");
  auto ordinary = classify_edges(g).ordinary;
  if (ordinary.size() > max_edges)
    throw Error(ErrorKind::ScaleExceeded, std::to_string(ordinary.size()) + " ordinary edges exceed the enumeration cap of " +
                                              std::to_string(max_edges));
  std::vector<SpanningTree> out;
  std::vector<std::size_t> chosen;
  enumerate_from(g, ordinary, 0, chosen, DisjointSets(g.vertex_count()), out);
  return out;
}

SpanningTree bfs_spanning_tree(const DartGraph& g) {
  SpanningTree t;
  std::vector<bool> seen(g.vertex_count(), false);
  std::queue<Vertex> q;
  seen[0] = true;
  q.push(0);
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop();
    for (Dart x : g.darts_at(v)) {
      Vertex w = g.head(x);
      if (seen[w]) continue;
      seen[w] = true;
      t.edges.push_back(g.edge_of(x));
      q.push(w);
    }
  }
  std::sort(t.edges.begin(), t.edges.end());
  return t;
}

bool is_spanning_tree(const DartGraph& g, const SpanningTree& t) {
  if (t.edges.size() + 1 != g.vertex_count()) return false;
  DisjointSets sets(g.vertex_count());
  for (std::size_t e : t.edges) {
    if (e >= g.edge_count() || g.edges()[e].kind != EdgeKind::Ordinary) return false;
    if (!sets.unite(g.vertex_of(g.edges()[e].dart), g.head(g.edges()[e].dart))) return false;
  }
  return true;
}

bool is_walk(const DartGraph& g, const Walk& w) {
  if (w.darts.empty()) return false;
  for (Dart x : w.darts)
    if (x >= g.dart_count()) return false;
  for (std::size_t i = 0; i + 1 < w.darts.size(); ++i)
    if (g.vertex_of(w.darts[i + 1]) != g.head(w.darts[i])) return false;
  return true;
}

bool is_closed(const DartGraph& g, const Walk& w) {
  return is_walk(g, w) && g.vertex_of(w.darts.front()) == g.head(w.darts.back());
}

Walk reversed(const DartGraph& g, const Walk& w) {
  Walk r;
  for (auto it = w.darts.rbegin(); it != w.darts.rend(); ++it) r.darts.push_back(g.inverse(*it));
  return r;
}

std::vector<Dart> tree_path(const DartGraph& g, const SpanningTree& t, Vertex from, Vertex to) {
  std::vector<bool> in_tree(g.edge_count(), false);
  for (std::size_t e : t.edges) in_tree[e] = true;
  std::vector<long> arrived_by(g.vertex_count(), -1);
  std::vector<bool> seen(g.vertex_count(), false);
  std::queue<Vertex> q;
  seen[from] = true;
  q.push(from);
  while (!q.empty() && !seen[to]) {
    Vertex v = q.front();
    q.pop();
    for (Dart x : g.darts_at(v)) {
      Vertex w = g.head(x);
      if (!in_tree[g.edge_of(x)] || seen[w]) continue;
      seen[w] = true;
      arrived_by[w] = x;
      q.push(w);
    }
  }
  if (!seen[to]) throw Error(ErrorKind::NotASpanningTree, "tree does not connect the requested vertices");
  std::vector<Dart> path;
  for (Vertex v = to; v != from; v = g.vertex_of(static_cast<Dart>(arrived_by[v])))
    path.push_back(static_cast<Dart>(arrived_by[v]));
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<Walk> fundamental_cycles(const DartGraph& g, const SpanningTree& t) {
  if (!is_spanning_tree(g, t)) throw Error(ErrorKind::NotASpanningTree, "edge set is not a spanning tree");
  std::vector<bool> in_tree(g.edge_count(), false);
  for (std::size_t e : t.edges) in_tree[e] = true;
  std::vector<Walk> cycles;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edges()[i];
    if (e.kind != EdgeKind::Ordinary || in_tree[i]) continue;
    Walk w{{e.dart}};
    auto back = tree_path(g, t, g.head(e.dart), g.vertex_of(e.dart));
    w.darts.insert(w.darts.end(), back.begin(), back.end());
    cycles.push_back(std::move(w));
  }
  for (const Edge& e : g.edges())
    if (e.kind == EdgeKind::Loop || e.kind == EdgeKind::Semiedge) cycles.push_back(Walk{{e.dart}});
  return cycles;
}

DartGraph without_loops_and_semiedges(const DartGraph& g) {
  std::vector<Dart> renumber(g.dart_count(), 0);
  Dart next = 0;
  for (Dart x = 0; x < g.dart_count(); ++x)
    if (g.kind(x) == EdgeKind::Ordinary) renumber[x] = next++;
  GraphParts parts;
  parts.dart_count = next;
  parts.lambda.resize(next);
  parts.vertices.resize(g.vertex_count());
  for (Dart x = 0; x < g.dart_count(); ++x) {
    if (g.kind(x) != EdgeKind::Ordinary) continue;
    parts.lambda[renumber[x]] = renumber[g.inverse(x)];
    parts.vertices[g.vertex_of(x)].push_back(renumber[x]);
  }
  return DartGraph(std::move(parts));
}

DartGraph relabel_darts(const DartGraph& g, const std::vector<Dart>& image) {
  if (image.size() != g.dart_count()) throw Error(ErrorKind::InvalidGraph, "relabelling has the wrong length");
  GraphParts parts;
  parts.dart_count = g.dart_count();
  parts.lambda.assign(g.dart_count(), 0);
  for (Dart x = 0; x < g.dart_count(); ++x) parts.lambda.at(image[x]) = image[g.inverse(x)];
  for (const auto& cls : g.vertices()) {
    std::vector<Dart> mapped;
    for (Dart x : cls) mapped.push_back(image[x]);
    parts.vertices.push_back(std::move(mapped));
  }
  return DartGraph(std::move(parts));
}

}  // namespace jacflow
