#include "jacflow/symmetry.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <set>
#include <string>
#include <tuple>

#include "jacflow/error.hpp"

namespace jacflow {

bool is_automorphism(const DartGraph& g, const DartPermutation& f) {
  if (f.degree() != g.dart_count()) return false;
  for (Dart x = 0; x < g.dart_count(); ++x)
    if (f(g.inverse(x)) != g.inverse(f(x))) return false;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto darts = g.darts_at(v);
    const Vertex target = g.vertex_of(f(darts.front()));
    for (Dart x : darts)
      if (g.vertex_of(f(x)) != target) return false;
  }
  return true;
}

bool is_isomorphism(const DartGraph& a, const DartGraph& b, const std::vector<Dart>& map) {
  if (map.size() != a.dart_count() || a.dart_count() != b.dart_count() || a.vertex_count() != b.vertex_count())
    return false;
  std::vector<bool> hit(b.dart_count(), false);
  for (Dart y : map) {
    if (y >= b.dart_count() || hit[y]) return false;
    hit[y] = true;
  }
  for (Dart x = 0; x < a.dart_count(); ++x)
    if (map[a.inverse(x)] != b.inverse(map[x])) return false;
  std::vector<bool> vertex_hit(b.vertex_count(), false);
  for (Vertex v = 0; v < a.vertex_count(); ++v) {
    const Vertex target = b.vertex_of(map[a.darts_at(v).front()]);
    if (vertex_hit[target] || b.valency(target) != a.valency(v)) return false;
    vertex_hit[target] = true;
    for (Dart x : a.darts_at(v))
      if (b.vertex_of(map[x]) != target) return false;
  }
  return true;
}

namespace {

// Per-graph adjacency data for the isomorphism search.
struct Profile {
  std::size_t n = 0;
  std::vector<std::vector<std::size_t>> mult;            // ordinary edges between u != w
  std::vector<std::vector<std::vector<Dart>>> toward;    // ordinary darts at u with head w
  std::vector<std::vector<Dart>> loops;                  // D+ dart of each loop at u
  std::vector<std::vector<Dart>> semiedges;
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, std::vector<std::size_t>>> signature;

  explicit Profile(const DartGraph& g) : n(g.vertex_count()) {
    mult.assign(n, std::vector<std::size_t>(n, 0));
    toward.assign(n, std::vector<std::vector<Dart>>(n));
    loops.resize(n);
    semiedges.resize(n);
    for (Dart x = 0; x < g.dart_count(); ++x) {
      const Vertex u = g.vertex_of(x);
      switch (g.kind(x)) {
        case EdgeKind::Ordinary:
          toward[u][g.head(x)].push_back(x);
          ++mult[u][g.head(x)];
          break;
        case EdgeKind::Loop:
          if (g.is_positive(x)) loops[u].push_back(x);
          break;
        case EdgeKind::Semiedge: semiedges[u].push_back(x); break;
      }
    }
    for (Vertex u = 0; u < n; ++u) {
      std::vector<std::size_t> nbr;
      for (Vertex w = 0; w < n; ++w)
        if (mult[u][w]) nbr.push_back(mult[u][w]);
      std::sort(nbr.begin(), nbr.end());
      signature.emplace_back(g.valency(u), loops[u].size(), semiedges[u].size(), std::move(nbr));
    }
  }
};

struct Bundle {
  enum class Kind { Parallel, Loop, Semiedge } kind;
  std::vector<Dart> from;
  std::vector<Dart> to;
};

class IsomorphismSearch {
 public:
  IsomorphismSearch(const DartGraph& a, const DartGraph& b, SearchLimits limits, std::size_t stop_after)
      : a_(a), b_(b), pa_(a), pb_(b), limits_(limits), stop_after_(stop_after) {}

  std::vector<DartPermutation> run() {
    if (a_.vertex_count() > limits_.max_vertices || b_.vertex_count() > limits_.max_vertices)
      throw Error(ErrorKind::ScaleExceeded, "isomorphism search is capped at " + std::to_string(limits_.max_vertices) +
                                                " vertices");
    if (a_.vertex_count() != b_.vertex_count() || a_.dart_count() != b_.dart_count()) return {};
    order_ = bfs_order();
    sigma_.assign(pa_.n, 0);
    used_.assign(pb_.n, false);
    assign(0);
    std::sort(results_.begin(), results_.end());
    return std::move(results_);
  }

 private:
  const DartGraph& a_;
  const DartGraph& b_;
  Profile pa_, pb_;
  SearchLimits limits_;
  std::size_t stop_after_;
  std::vector<Vertex> order_;
  std::vector<Vertex> sigma_;
  std::vector<bool> used_;
  std::vector<DartPermutation> results_;

  bool done() const { return results_.size() >= stop_after_; }

  std::vector<Vertex> bfs_order() const {
    std::vector<Vertex> order;
    std::vector<bool> seen(pa_.n, false);
    for (Vertex s = 0; s < pa_.n; ++s) {
      if (seen[s]) continue;
      std::queue<Vertex> q;
      q.push(s);
      seen[s] = true;
      while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        order.push_back(v);
        for (Dart x : a_.darts_at(v))
          if (!seen[a_.head(x)]) {
            seen[a_.head(x)] = true;
            q.push(a_.head(x));
          }
      }
    }
    return order;
  }

  void assign(std::size_t depth) {
    if (done()) return;
    if (depth == order_.size()) {
      extend_to_darts();
      return;
    }
    const Vertex u = order_[depth];
    for (Vertex c = 0; c < pb_.n; ++c) {
      if (used_[c] || pa_.signature[u] != pb_.signature[c]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) {
        const Vertex w = order_[k];
        ok = pa_.mult[u][w] == pb_.mult[c][sigma_[w]];
      }
      if (!ok) continue;
      sigma_[u] = c;
      used_[c] = true;
      assign(depth + 1);
      used_[c] = false;
      if (done()) return;
    }
  }

  void extend_to_darts() {
    std::vector<Bundle> bundles;
    auto check = [](std::size_t m) {
      if (m > kMaxParallelMultiplicity)
        throw Error(ErrorKind::ScaleExceeded, "edge multiplicity " + std::to_string(m) + " exceeds " +
                                                  std::to_string(kMaxParallelMultiplicity));
    };
    for (Vertex u = 0; u < pa_.n; ++u) {
      for (Vertex w = u + 1; w < pa_.n; ++w)
        if (pa_.mult[u][w]) {
          check(pa_.mult[u][w]);
          bundles.push_back({Bundle::Kind::Parallel, pa_.toward[u][w], pb_.toward[sigma_[u]][sigma_[w]]});
        }
      if (!pa_.loops[u].empty()) {
        check(pa_.loops[u].size());
        bundles.push_back({Bundle::Kind::Loop, pa_.loops[u], pb_.loops[sigma_[u]]});
      }
      if (!pa_.semiedges[u].empty()) {
        check(pa_.semiedges[u].size());
        bundles.push_back({Bundle::Kind::Semiedge, pa_.semiedges[u], pb_.semiedges[sigma_[u]]});
      }
    }
    std::vector<std::uint32_t> image(a_.dart_count(), 0);
    extend_bundle(bundles, 0, image);
  }

  void extend_bundle(const std::vector<Bundle>& bundles, std::size_t i, std::vector<std::uint32_t>& image) {
    if (done()) return;
    if (i == bundles.size()) {
      results_.emplace_back(image);
      if (results_.size() > limits_.max_results)
        throw Error(ErrorKind::ScaleExceeded, "more than " + std::to_string(limits_.max_results) + " isomorphisms");
      return;
    }
    const Bundle& bd = bundles[i];
    const std::size_t m = bd.from.size();
    std::vector<std::size_t> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    const std::size_t orientations = bd.kind == Bundle::Kind::Loop ? (std::size_t{1} << m) : 1;
    do {
      for (std::size_t mask = 0; mask < orientations; ++mask) {
        for (std::size_t k = 0; k < m; ++k) {
          const Dart x = bd.from[k];
          Dart y = bd.to[perm[k]];
          if ((mask >> k) & 1) y = b_.inverse(y);
          image[x] = y;
          image[a_.inverse(x)] = b_.inverse(y);
        }
        extend_bundle(bundles, i + 1, image);
        if (done()) return;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
};

}  // namespace

std::vector<DartPermutation> isomorphisms(const DartGraph& a, const DartGraph& b, SearchLimits limits) {
  return IsomorphismSearch(a, b, limits, std::numeric_limits<std::size_t>::max()).run();
}

std::optional<DartPermutation> find_isomorphism(const DartGraph& a, const DartGraph& b, SearchLimits limits) {
  auto found = IsomorphismSearch(a, b, limits, 1).run();
  if (found.empty()) return std::nullopt;
  return found.front();
}

PermGroup automorphisms(const DartGraph& g, SearchLimits limits) {
  return PermGroup::from_elements(g.dart_count(), isomorphisms(g, g, limits));
}

Permutation vertex_action(const DartGraph& g, const DartPermutation& f) {
  std::vector<std::uint32_t> img(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) img[v] = g.vertex_of(f(g.darts_at(v).front()));
  return Permutation(std::move(img));
}

DartPermutation extend_vertex_permutation(const DartGraph& g, const Permutation& on_vertices) {
  if (!g.is_simple()) throw Error(ErrorKind::InvalidGraph, "vertex permutations determine darts only on simple graphs");
  if (on_vertices.degree() != g.vertex_count())
    throw Error(ErrorKind::NotAnAutomorphism, "vertex permutation has the wrong degree");
  std::vector<std::uint32_t> img(g.dart_count());
  for (Dart x = 0; x < g.dart_count(); ++x) {
    const Vertex u = on_vertices(g.vertex_of(x)), w = on_vertices(g.head(x));
    bool found = false;
    for (Dart y : g.darts_at(u))
      if (g.head(y) == w) {
        img[x] = y;
        found = true;
        break;
      }
    if (!found) throw Error(ErrorKind::NotAnAutomorphism, "vertex permutation does not preserve adjacency");
  }
  return DartPermutation(std::move(img));
}

bool is_semiregular(const PermGroup& group, const DartGraph& g) {
  for (const auto& f : group.elements()) {
    if (f.is_identity()) continue;
    if (f.has_fixed_point() || vertex_action(g, f).has_fixed_point()) return false;
  }
  return true;
}

JacAutomorphism::JacAutomorphism(AbelianGroup group, IntMatrix matrix)
    : group_(std::move(group)), matrix_(std::move(matrix)) {
  const std::size_t k = group_.rank();
  if (matrix_.rows() != k || matrix_.cols() != k)
    throw Error(ErrorKind::DimensionMismatch, "automorphism matrix must be rank x rank");
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) matrix_(i, j) = mod_floor(matrix_(i, j), group_.factors()[i]);
}

JacAutomorphism JacAutomorphism::identity(const AbelianGroup& group) {
  return JacAutomorphism(group, IntMatrix::identity(group.rank()));
}

GroupElement JacAutomorphism::apply(const GroupElement& a) const {
  const std::size_t k = group_.rank();
  std::vector<Integer> out(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) out[i] += matrix_(i, j) * a.coords[j];
  return group_.reduce(std::move(out));
}

bool JacAutomorphism::is_identity() const { return *this == identity(group_); }

bool JacAutomorphism::is_well_defined() const {
  const auto& d = group_.factors();
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d.size(); ++j) {
      Integer t = matrix_(i, j) * d[j];
      if (!mpz_divisible_p(t.get_mpz_t(), d[i].get_mpz_t())) return false;
    }
  return true;
}

JacAutomorphism operator*(const JacAutomorphism& a, const JacAutomorphism& b) {
  if (!(a.group_ == b.group_)) throw Error(ErrorKind::DimensionMismatch, "composing automorphisms of different groups");
  return JacAutomorphism(a.group_, a.matrix_ * b.matrix_);
}

JacAutomorphism theta(const DartGraph& g, const DartPermutation& f, const JFlow& flow) {
  if (!is_automorphism(g, f)) throw Error(ErrorKind::NotAnAutomorphism, "permutation " + f.cycle_string());
  const AbelianGroup& grp = flow.group;
  const std::size_t k = grp.rank();
  if (flow.basis_preimages.size() != k || flow.xi.size() != g.dart_count())
    throw Error(ErrorKind::DimensionMismatch, "flow was not produced by jacobian() for this graph");
  IntMatrix m(k, k);
  for (std::size_t j = 0; j < k; ++j) {
    const auto& coeff = flow.basis_preimages[j];
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      if (coeff[e] == 0) continue;
      const GroupElement& img = flow.xi[f(g.edges()[e].dart)];
      for (std::size_t i = 0; i < k; ++i) m(i, j) += coeff[e] * img.coords[i];
    }
  }
  JacAutomorphism result(grp, std::move(m));
  for (Dart x = 0; x < g.dart_count(); ++x)
    if (result.apply(flow.xi[x]) != flow.xi[f(x)])
      throw Error(ErrorKind::NotAnAutomorphism, "induced map does not carry xi(x) to xi(f(x))");
  return result;
}

std::vector<DartPermutation> theta_kernel(const PermGroup& group, const JFlow& flow) {
  std::vector<DartPermutation> out;
  for (const auto& f : group.elements()) {
    bool invariant = true;
    for (Dart x = 0; x < flow.xi.size() && invariant; ++x) invariant = flow.xi[f(x)] == flow.xi[x];
    if (invariant) out.push_back(f);
  }
  return out;
}

bool is_simple_three_edge_connected(const DartGraph& g) {
  return g.is_simple() && is_connected(g) && edge_connectivity(g) >= 3;
}

FaithfulnessReport verify_faithful(const DartGraph& g, const PermGroup& group) {
  FaithfulnessReport r;
  r.connected = is_connected(g);
  r.simple = g.is_simple();
  r.three_edge_connected = r.connected && !g.has_semiedges() && edge_connectivity(g) >= 3;
  r.semiregular = is_semiregular(group, g);
  r.group_order = group.order();
  if (!r.connected) return r;
  const JFlow flow = jacobian(g);
  r.kernel_size = theta_kernel(group, flow).size();
  std::set<std::string> images;
  for (const auto& f : group.elements()) images.insert(theta(g, f, flow).matrix().to_string());
  r.image_size = images.size();
  r.injective = r.kernel_size == 1;
  r.hypotheses_hold = r.simple && r.three_edge_connected && r.semiregular;
  r.theorem_violation = r.hypotheses_hold && !r.injective;
  return r;
}

RankReport jac_rank_check(const DartGraph& g) {
  RankReport r;
  r.rank = jacobian(g).group.rank();
  r.cyclic = r.rank <= 1;
  return r;
}

RankReport jac_rank_check(const DartGraph& g, const PermGroup& group) {
  RankReport r = jac_rank_check(g);
  r.corollary_applies = !group.is_abelian() && is_semiregular(group, g) && is_simple_three_edge_connected(g);
  r.corollary_violation = r.corollary_applies && r.cyclic;
  return r;
}

}  // namespace jacflow
