#pragma once

// Reference implementations used only by the tests. They share no code with
// the library beyond the Graph container.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "zdg/graph.hpp"

namespace oracle {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

inline zdg::Graph random_graph(std::size_t n, double density,
                               std::mt19937_64& rng) {
  std::bernoulli_distribution coin(density);
  zdg::Graph g(n);
  for (zdg::Vertex u = 0; u < n; ++u) {
    for (zdg::Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

inline zdg::Graph permuted(const zdg::Graph& g,
                           const std::vector<zdg::Vertex>& perm) {
  zdg::Graph h(g.order());
  for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
  return h;
}

// Any ordered (a, b, c, d) with ab, cd edges and ac, bd non-edges.
inline bool has_alternating_four_cycle(const zdg::Graph& g) {
  const auto n = static_cast<zdg::Vertex>(g.order());
  for (zdg::Vertex a = 0; a < n; ++a) {
    for (zdg::Vertex b = 0; b < n; ++b) {
      if (b == a || !g.adjacent(a, b)) continue;
      for (zdg::Vertex c = 0; c < n; ++c) {
        if (c == a || c == b || g.adjacent(a, c)) continue;
        for (zdg::Vertex d = 0; d < n; ++d) {
          if (d == a || d == b || d == c) continue;
          if (g.adjacent(c, d) && !g.adjacent(b, d)) return true;
        }
      }
    }
  }
  return false;
}

// Threshold by definition: some vertex is isolated or dominating, remove it,
// repeat. Any choice works, so take the first one found.
inline bool is_threshold_by_peeling(const zdg::Graph& g) {
  std::vector<bool> alive(g.order(), true);
  std::size_t left = g.order();
  while (left > 1) {
    bool removed = false;
    for (zdg::Vertex v = 0; v < g.order() && !removed; ++v) {
      if (!alive[v]) continue;
      std::size_t deg = 0;
      for (zdg::Vertex u = 0; u < g.order(); ++u) {
        if (alive[u] && u != v && g.adjacent(u, v)) ++deg;
      }
      if (deg == 0 || deg == left - 1) {
        alive[v] = false;
        --left;
        removed = true;
      }
    }
    if (!removed) return false;
  }
  return true;
}

// Orbits from all n! permutations, as sorted vertex sets.
inline std::set<std::vector<zdg::Vertex>> orbits_by_permutations(
    const zdg::Graph& g) {
  const std::size_t n = g.order();
  std::vector<zdg::Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  const auto edges = g.edges();
  do {
    bool ok = true;
    for (auto [u, v] : edges) {
      if (!g.adjacent(perm[u], perm[v])) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    for (std::size_t v = 0; v < n; ++v) parent[find(v)] = find(perm[v]);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::map<std::size_t, std::vector<zdg::Vertex>> groups;
  for (std::size_t v = 0; v < n; ++v) {
    groups[find(v)].push_back(static_cast<zdg::Vertex>(v));
  }
  std::set<std::vector<zdg::Vertex>> out;
  for (auto& [root, vs] : groups) out.insert(vs);
  return out;
}

inline std::set<std::vector<zdg::Vertex>> as_set(const zdg::Partition& p) {
  std::set<std::vector<zdg::Vertex>> out;
  for (const auto& b : p.blocks) out.insert(b.vertices);
  return out;
}

// Determinant over Q by plain Gaussian elimination.
inline cpp_int determinant(std::vector<std::vector<cpp_rational>> m) {
  const std::size_t n = m.size();
  cpp_rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      const cpp_rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return boost::multiprecision::numerator(det);
}

// det(xI - M) by evaluating at x = 0..n and Lagrange interpolation.
// Coefficients ascending.
inline std::vector<cpp_int> charpoly(
    const std::vector<std::vector<std::int64_t>>& m) {
  const std::size_t n = m.size();
  std::vector<cpp_rational> coeffs(n + 1, 0);
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<std::vector<cpp_rational>> a(n, std::vector<cpp_rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] = (i == j ? cpp_rational(k) : cpp_rational(0)) - m[i][j];
      }
    }
    const cpp_rational value = cpp_rational(determinant(a));
    // Basis polynomial prod_{j != k} (x - j) / (k - j), ascending.
    std::vector<cpp_rational> basis{1};
    cpp_rational denom = 1;
    for (std::size_t j = 0; j <= n; ++j) {
      if (j == k) continue;
      std::vector<cpp_rational> next(basis.size() + 1, 0);
      for (std::size_t t = 0; t < basis.size(); ++t) {
        next[t + 1] += basis[t];
        next[t] -= basis[t] * cpp_rational(j);
      }
      basis = std::move(next);
      denom *= cpp_rational(static_cast<long long>(k) - static_cast<long long>(j));
    }
    for (std::size_t t = 0; t <= n; ++t) coeffs[t] += value * basis[t] / denom;
  }
  std::vector<cpp_int> out;
  for (const auto& c : coeffs) out.push_back(boost::multiprecision::numerator(c));
  return out;
}

inline std::vector<std::vector<std::int64_t>> adjacency(const zdg::Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<std::int64_t>> a(n, std::vector<std::int64_t>(n, 0));
  for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = 1;
  return a;
}

// Rank over Q.
inline std::size_t rank(std::vector<std::vector<cpp_rational>> m) {
  std::size_t r = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      const cpp_rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

inline std::size_t multiplicity(const zdg::Graph& g, std::int64_t lambda) {
  const auto a = adjacency(g);
  const std::size_t n = a.size();
  std::vector<std::vector<cpp_rational>> m(n, std::vector<cpp_rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m[i][j] = a[i][j] - (i == j ? lambda : 0);
    }
  }
  return n - rank(m);
}

}  // namespace oracle
