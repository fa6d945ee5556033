#pragma once

// Brute-force reference computations used only by the tests. None of these
// share code paths with the library routines they check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "jacflow/dartgraph.hpp"
#include "jacflow/intlinalg.hpp"

namespace oracle {

using jacflow::Dart;
using jacflow::DartGraph;
using jacflow::IntMatrix;
using jacflow::Integer;
using jacflow::Vertex;

// Laplace expansion along the first row.
inline Integer cofactor_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Integer total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, k = 0; j < n; ++j)
        if (j != c) minor(i - 1, k++) = m(i, j);
    Integer term = m(0, c) * cofactor_det(minor);
    total += (c % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

inline void subsets(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> pick(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
    if (depth == k) {
      f(pick);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      pick[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
}

// Invariant factors from determinantal divisors: D_k = gcd of all k x k
// minors and s_k = D_k / D_{k-1}. Zero-rank tail omitted.
inline std::vector<Integer> determinantal_factors(const IntMatrix& m) {
  std::vector<Integer> out;
  Integer prev = 1;
  for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
    Integer g = 0;
    subsets(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
      subsets(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
        IntMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rows[i], cols[j]);
        Integer d = cofactor_det(sub);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      });
    });
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

// Closed walks through ordinary edges visiting distinct vertices, each found
// once per orientation and starting at its smallest vertex.
inline std::vector<std::vector<Dart>> simple_cycles(const DartGraph& g) {
  std::vector<std::vector<Dart>> out;
  std::vector<Dart> path;
  std::vector<bool> on_path(g.vertex_count(), false);
  std::function<void(Vertex, Vertex)> dfs = [&](Vertex s, Vertex v) {
    for (Dart x : g.darts_at(v)) {
      if (g.kind(x) != jacflow::EdgeKind::Ordinary) continue;
      const Vertex w = g.head(x);
      if (w == s) {
        if (path.size() == 1 && g.edge_of(path[0]) == g.edge_of(x)) continue;
        if (path.empty()) continue;
        auto c = path;
        c.push_back(x);
        out.push_back(std::move(c));
      } else if (w > s && !on_path[w]) {
        on_path[w] = true;
        path.push_back(x);
        dfs(s, w);
        path.pop_back();
        on_path[w] = false;
      }
    }
  };
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    on_path[s] = true;
    dfs(s, s);
    on_path[s] = false;
  }
  for (const auto& e : g.edges())
    if (e.kind != jacflow::EdgeKind::Ordinary) out.push_back({e.dart});
  return out;
}

// Number of Z_m-valued assignments on D+ meeting Kirchhoff's vertex law and
// the cycle law on every simple cycle. Equals |Hom(Jac(g), Z_m)|.
inline std::size_t count_harmonic_maps(const DartGraph& g, unsigned m) {
  const auto cycles = simple_cycles(g);
  const std::size_t n = g.edge_count();
  std::vector<unsigned> value(n, 0);
  auto at = [&](Dart x) -> long {
    long v = value[g.edge_of(x)];
    return g.is_positive(x) ? v : -v;
  };
  auto ok = [&] {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      long s = 0;
      for (Dart x : g.darts_at(v)) s += at(x);
      if (((s % long(m)) + m) % m != 0) return false;
    }
    for (const auto& c : cycles) {
      long s = 0;
      for (Dart x : c) s += at(x);
      if (((s % long(m)) + m) % m != 0) return false;
    }
    return true;
  };
  std::size_t count = 0;
  for (;;) {
    if (ok()) ++count;
    std::size_t i = 0;
    while (i < n && ++value[i] == m) value[i++] = 0;
    if (i == n) break;
  }
  return count;
}

inline std::size_t hom_count(const std::vector<Integer>& factors, unsigned m) {
  std::size_t c = 1;
  for (const auto& d : factors) c *= std::gcd(static_cast<std::size_t>(d.get_ui()), std::size_t{m});
  return c;
}

// |Aut| of a graph without loops or semiedges: vertex permutations that keep
// every edge multiplicity, times m! for each parallel class.
inline std::size_t count_multigraph_automorphisms(const DartGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<int>> mult(n, std::vector<int>(n, 0));
  for (const auto& e : g.edges()) {
    ++mult[g.vertex_of(e.dart)][g.head(e.dart)];
    ++mult[g.head(e.dart)][g.vertex_of(e.dart)];
  }
  std::size_t vertex_maps = 0;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) ok = mult[i][j] == mult[p[i]][p[j]];
    if (ok) ++vertex_maps;
  } while (std::next_permutation(p.begin(), p.end()));
  std::size_t per = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (int k = 2; k <= mult[i][j]; ++k) per *= k;
  return vertex_maps * per;
}

inline std::size_t invertible_2x2_mod(unsigned p) {
  std::size_t c = 0;
  for (unsigned a = 0; a < p; ++a)
    for (unsigned b = 0; b < p; ++b)
      for (unsigned cc = 0; cc < p; ++cc)
        for (unsigned d = 0; d < p; ++d)
          if ((a * d + p * p - b * cc) % p != 0) ++c;
  return c;
}

inline bool is_complete_bipartite_33(const DartGraph& g) {
  if (g.vertex_count() != 6 || !g.is_simple() || g.edge_count() != 9) return false;
  std::vector<int> side(6, -1);
  side[0] = 0;
  std::vector<Vertex> stack{0};
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Dart x : g.darts_at(v)) {
      Vertex w = g.head(x);
      if (side[w] == -1) {
        side[w] = 1 - side[v];
        stack.push_back(w);
      } else if (side[w] == side[v]) {
        return false;
      }
    }
  }
  return std::count(side.begin(), side.end(), 0) == 3;
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long lo, long hi) {
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  return m;
}

}  // namespace oracle
