#include "jacflow/jacobian.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "jacflow/error.hpp"

namespace jacflow {

AbelianGroup::AbelianGroup(std::vector<Integer> factors) : factors_(std::move(factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2) throw Error(ErrorKind::InvalidGroup, "invariant factor below 2");
    if (i > 0 && !mpz_divisible_p(factors_[i].get_mpz_t(), factors_[i - 1].get_mpz_t()))
      throw Error(ErrorKind::InvalidGroup, "invariant factors are not divisor-chained");
  }
}

Integer AbelianGroup::order() const {
  Integer n = 1;
  for (const auto& d : factors_) n *= d;
  return n;
}

GroupElement AbelianGroup::zero() const { return {std::vector<Integer>(factors_.size())}; }

GroupElement AbelianGroup::reduce(std::vector<Integer> coords) const {
  if (coords.size() != factors_.size()) throw Error(ErrorKind::DimensionMismatch, "element has the wrong rank");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = mod_floor(coords[i], factors_[i]);
  return {std::move(coords)};
}

GroupElement AbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
  std::vector<Integer> c(factors_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coords[i] + b.coords[i];
  return reduce(std::move(c));
}

GroupElement AbelianGroup::negate(const GroupElement& a) const {
  std::vector<Integer> c(factors_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = -a.coords[i];
  return reduce(std::move(c));
}

GroupElement AbelianGroup::scale(const GroupElement& a, const Integer& k) const {
  std::vector<Integer> c(factors_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coords[i] * k;
  return reduce(std::move(c));
}

bool AbelianGroup::is_zero(const GroupElement& a) const {
  return std::all_of(a.coords.begin(), a.coords.end(), [](const Integer& x) { return x == 0; });
}

Integer AbelianGroup::subgroup_order(const std::vector<GroupElement>& generators) const {
  // |H| = |A| / |A/H|, and A/H = Z^k / (d_i e_i, generators).
  const std::size_t k = rank();
  if (k == 0) return 1;
  IntMatrix rel(0, 0);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Integer> row(k);
    row[i] = factors_[i];
    rel.append_row(row);
  }
  for (const auto& g : generators) rel.append_row(g.coords);
  auto quotient = invariant_factors(rel, k);
  Integer q = 1;
  for (const auto& d : quotient.torsion) q *= d;
  return order() / q;
}

namespace {

std::vector<Integer> dart_coefficients(const DartGraph& g, const std::vector<Dart>& darts) {
  std::vector<Integer> row(g.edge_count());
  for (Dart x : darts) row[g.edge_of(x)] += g.is_positive(x) ? 1 : -1;
  return row;
}

}  // namespace

IntMatrix relation_matrix(const DartGraph& g) {
  if (!is_connected(g)) throw Error(ErrorKind::Disconnected, "the Jacobian needs a connected graph");
  IntMatrix rel(0, g.edge_count());
  std::set<std::vector<Integer>> seen;
  auto add = [&](std::vector<Integer> row) {
    bool zero = std::all_of(row.begin(), row.end(), [](const Integer& x) { return x == 0; });
    if (zero || !seen.insert(row).second) return;
    rel.append_row(row);
  };
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto star = g.darts_at(v);
    add(dart_coefficients(g, {star.begin(), star.end()}));
  }
  for (const Walk& w : fundamental_cycles(g, bfs_spanning_tree(g))) add(dart_coefficients(g, w.darts));
  return rel;
}

JFlow jacobian(const DartGraph& g) {
  const IntMatrix rel = relation_matrix(g);
  const std::size_t n = g.edge_count();
  const SnfResult snf = smith_normal_form(rel);
  const auto diag = snf.diagonal();
  if (diag.size() != n) throw std::logic_error("relation quotient of a connected graph has free part");

  std::vector<std::size_t> kept;
  std::vector<Integer> factors;
  for (std::size_t i = 0; i < diag.size(); ++i)
    if (diag[i] > 1) {
      kept.push_back(i);
      factors.push_back(diag[i]);
    }

  JFlow flow{AbelianGroup(factors), {}, {}};
  // y -> y * v carries rowspace(rel) onto rowspace(s), so generator e_x maps
  // to row x of v and basis vector i lifts to row i of v_inv.
  std::vector<GroupElement> positive(n);
  for (std::size_t e = 0; e < n; ++e) {
    std::vector<Integer> c;
    for (std::size_t i : kept) c.push_back(snf.v(e, i));
    positive[e] = flow.group.reduce(std::move(c));
  }
  flow.xi.resize(g.dart_count());
  for (Dart x = 0; x < g.dart_count(); ++x) {
    const auto& p = positive[g.edge_of(x)];
    flow.xi[x] = g.is_positive(x) ? p : flow.group.negate(p);
  }
  for (std::size_t i : kept) flow.basis_preimages.push_back(snf.v_inv.row(i));
  return flow;
}

GroupElement walk_sum(const JFlow& f, const Walk& w) {
  GroupElement s = f.group.zero();
  for (Dart x : w.darts) s = f.group.add(s, f.xi.at(x));
  return s;
}

std::vector<std::string> validate_flow(const DartGraph& g, const JFlow& f) {
  std::vector<std::string> out;
  if (f.xi.size() != g.dart_count()) {
    out.push_back("flow has " + std::to_string(f.xi.size()) + " values for " + std::to_string(g.dart_count()) + " darts");
    return out;
  }
  for (Dart x = 0; x < g.dart_count(); ++x)
    if (!f.group.is_zero(f.group.add(f.xi[x], f.xi[g.inverse(x)])))
      out.push_back("FLW violated at dart " + std::to_string(x));
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    GroupElement s = f.group.zero();
    for (Dart x : g.darts_at(v)) s = f.group.add(s, f.xi[x]);
    if (!f.group.is_zero(s)) out.push_back("KLV violated at vertex " + std::to_string(v));
  }
  if (!is_connected(g)) return out;
  for (const Walk& w : fundamental_cycles(g, bfs_spanning_tree(g))) {
    if (f.group.is_zero(walk_sum(f, w))) continue;
    std::string darts;
    for (Dart x : w.darts) darts += (darts.empty() ? "" : " ") + std::to_string(x);
    out.push_back("KLC violated on cycle [" + darts + "]");
  }
  return out;
}

bool flow_generates(const JFlow& f) { return f.group.generated_by(f.xi); }

IntMatrix laplacian(const DartGraph& g) {
  if (g.has_loops() || g.has_semiedges())
    throw Error(ErrorKind::LoopOrSemiedgePresent, "the Laplacian is taken on graphs without loops and semiedges");
  return kirchhoff_matrix(g);
}

Integer Divisor::degree() const {
  Integer s = 0;
  for (const auto& v : values) s += v;
  return s;
}

std::vector<Integer> divisor_flow(const DartGraph& g, const Divisor& f) {
  if (f.values.size() != g.vertex_count()) throw Error(ErrorKind::DimensionMismatch, "divisor has the wrong length");
  std::vector<Integer> nu(g.dart_count());
  for (Dart x = 0; x < g.dart_count(); ++x) nu[x] = f.values[g.head(x)] - f.values[g.vertex_of(x)];
  return nu;
}

AbelianGroup jacobian_via_divisors(const DartGraph& g) {
  IntMatrix l = laplacian(g);
  if (!is_connected(g)) throw Error(ErrorKind::Disconnected, "the Jacobian needs a connected graph");
  return AbelianGroup(invariant_factors(l, g.vertex_count()).torsion);
}

}  // namespace jacflow
