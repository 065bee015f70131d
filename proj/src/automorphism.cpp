#include "zdg/automorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "zdg/errors.hpp"

namespace zdg {

namespace {

using Color = std::uint32_t;
using Coloring = std::vector<Color>;
using AdjList = std::vector<std::vector<Vertex>>;

AdjList adjacency_lists(const Graph& g) {
  AdjList adj(g.order());
  for (Vertex v = 0; v < g.order(); ++v) adj[v] = g.neighbors(v);
  return adj;
}

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> parent;
};

std::size_t count_colors(const Coloring& c) {
  Coloring sorted = c;
  std::sort(sorted.begin(), sorted.end());
  return static_cast<std::size_t>(
      std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

std::vector<std::size_t> histogram(const Coloring& c, std::size_t colors) {
  std::vector<std::size_t> h(colors, 0);
  for (Color x : c) ++h[x];
  return h;
}

// Refines both colourings with one shared signature table so that equal
// colours keep meaning the same thing on both sides. Returns false as soon as
// the two sides stop having matching colour-class sizes.
bool refine_pair(const AdjList& a, Coloring& ca, const AdjList& b,
                 Coloring& cb) {
  std::size_t colors = std::max(count_colors(ca), count_colors(cb));
  while (true) {
    std::map<std::pair<Color, std::vector<Color>>, Color> table;
    auto recolor = [&](const AdjList& adj, const Coloring& c, Coloring& out,
                       bool first_side) -> bool {
      out.resize(c.size());
      std::vector<Color> sig;
      for (Vertex v = 0; v < c.size(); ++v) {
        sig.clear();
        for (Vertex w : adj[v]) sig.push_back(c[w]);
        std::sort(sig.begin(), sig.end());
        auto key = std::make_pair(c[v], sig);
        auto it = table.find(key);
        if (it == table.end()) {
          if (!first_side) return false;
          it = table.emplace(std::move(key), static_cast<Color>(table.size()))
                   .first;
        }
        out[v] = it->second;
      }
      return true;
    };
    Coloring na, nb;
    // The first side fixes the table; a signature seen only on the second
    // side means no colour-preserving isomorphism exists.
    if (!recolor(a, ca, na, true)) return false;
    if (&a == &b && &ca == &cb) {
      nb = na;
    } else if (!recolor(b, cb, nb, false)) {
      return false;
    }
    const std::size_t next = table.size();
    if (histogram(na, next) != histogram(nb, next)) return false;
    ca = std::move(na);
    cb = std::move(nb);
    if (next == colors) return true;
    colors = next;
  }
}

bool preserves(const Graph& a, const Graph& b, const std::vector<Vertex>& map) {
  for (auto [u, v] : a.edges()) {
    if (!b.adjacent(map[u], map[v])) return false;
  }
  return a.edge_count() == b.edge_count();
}

// Individualization-refinement search for a colour-preserving isomorphism
// a -> b. Exhaustive over the target cell at each level.
std::optional<std::vector<Vertex>> search(const Graph& ga, const AdjList& a,
                                          Coloring ca, const Graph& gb,
                                          const AdjList& b, Coloring cb) {
  if (!refine_pair(a, ca, b, cb)) return std::nullopt;
  const std::size_t colors = count_colors(ca);
  const auto sizes = histogram(ca, colors);
  std::size_t cell = colors;
  for (std::size_t c = 0; c < colors; ++c) {
    if (sizes[c] > 1 && (cell == colors || sizes[c] < sizes[cell])) cell = c;
  }
  if (cell == colors) {
    std::vector<Vertex> where(colors);
    for (Vertex v = 0; v < cb.size(); ++v) where[cb[v]] = v;
    std::vector<Vertex> map(ca.size());
    for (Vertex v = 0; v < ca.size(); ++v) map[v] = where[ca[v]];
    if (preserves(ga, gb, map)) return map;
    return std::nullopt;
  }
  Vertex x = 0;
  while (ca[x] != cell) ++x;
  const auto fresh = static_cast<Color>(colors);
  for (Vertex y = 0; y < cb.size(); ++y) {
    if (cb[y] != cell) continue;
    Coloring na = ca;
    Coloring nb = cb;
    na[x] = fresh;
    nb[y] = fresh;
    if (auto found = search(ga, a, std::move(na), gb, b, std::move(nb))) {
      return found;
    }
  }
  return std::nullopt;
}

Coloring dense(const std::vector<std::size_t>& raw) {
  std::vector<std::size_t> keys = raw;
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  Coloring out(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    out[i] = static_cast<Color>(
        std::lower_bound(keys.begin(), keys.end(), raw[i]) - keys.begin());
  }
  return out;
}

// Orbits of the coloured graph q, as a root per vertex.
std::vector<std::size_t> coloured_orbits(const Graph& q, Coloring c0) {
  const AdjList adj = adjacency_lists(q);
  Coloring stable = c0;
  refine_pair(adj, stable, adj, stable);
  const std::size_t m = q.order();
  DisjointSets orbit(m);
  for (Vertex u = 0; u < m; ++u) {
    std::vector<std::size_t> failed;
    for (Vertex v = u + 1; v < m; ++v) {
      if (stable[v] != stable[u] || orbit.find(u) == orbit.find(v)) continue;
      const std::size_t root = orbit.find(v);
      if (std::any_of(failed.begin(), failed.end(), [&](std::size_t r) {
            return orbit.find(r) == root;
          })) {
        continue;
      }
      Coloring ca = stable;
      Coloring cb = stable;
      const auto fresh = static_cast<Color>(count_colors(stable));
      ca[u] = fresh;
      cb[v] = fresh;
      if (auto perm = search(q, adj, std::move(ca), q, adj, std::move(cb))) {
        for (Vertex w = 0; w < m; ++w) orbit.unite(w, (*perm)[w]);
      } else {
        failed.push_back(v);
      }
    }
  }
  std::vector<std::size_t> roots(m);
  for (std::size_t v = 0; v < m; ++v) roots[v] = orbit.find(v);
  return roots;
}

}  // namespace

Partition aut_orbits(const Graph& g, std::size_t cap) {
  const Partition twins = twin_partition(g);
  const std::size_t m = twins.blocks.size();
  if (m > cap) {
    throw OracleCapExceeded("twin quotient has " + std::to_string(m) +
                            " vertices, orbit oracle cap is " +
                            std::to_string(cap));
  }
  Graph q(m);
  std::vector<std::size_t> raw(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& bi = twins.blocks[i].vertices;
    const bool clique = bi.size() > 1 && g.adjacent(bi[0], bi[1]);
    raw[i] = bi.size() * 2 + (clique ? 1 : 0);
    for (std::size_t j = i + 1; j < m; ++j) {
      if (g.adjacent(bi[0], twins.blocks[j].vertices[0])) {
        q.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  const auto roots = coloured_orbits(q, dense(raw));
  std::vector<std::size_t> ids(g.order());
  for (std::size_t i = 0; i < m; ++i) {
    for (Vertex v : twins.blocks[i].vertices) ids[v] = roots[i];
  }
  return partition_from_ids(ids, PartitionKind::kAutOrbit, "O");
}

bool is_automorphism(const Graph& g, const std::vector<Vertex>& perm) {
  if (perm.size() != g.order()) return false;
  std::vector<char> hit(perm.size(), 0);
  for (Vertex v : perm) {
    if (v >= perm.size() || hit[v]) return false;
    hit[v] = 1;
  }
  return preserves(g, g, perm);
}

Partition permutation_orbits(const Graph& g) {
  const std::size_t n = g.order();
  if (n > 9) {
    throw OracleCapExceeded("permutation enumeration is limited to n <= 9");
  }
  const auto edges = g.edges();
  DisjointSets orbit(n);
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  do {
    bool ok = true;
    for (auto [u, v] : edges) {
      if (!g.adjacent(perm[u], perm[v])) {
        ok = false;
        break;
      }
    }
    if (ok) {
      for (Vertex v = 0; v < n; ++v) orbit.unite(v, perm[v]);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<std::size_t> ids(n);
  for (std::size_t v = 0; v < n; ++v) ids[v] = orbit.find(v);
  return partition_from_ids(ids, PartitionKind::kAutOrbit, "O");
}

namespace {

class PlainSearch {
 public:
  explicit PlainSearch(const Graph& g) : g_(g), n_(g.order()), deg_(n_) {
    for (Vertex v = 0; v < n_; ++v) deg_[v] = g.degree(v);
  }

  std::optional<std::vector<Vertex>> find(Vertex u, Vertex v) {
    if (deg_[u] != deg_[v]) return std::nullopt;
    order_.assign(1, u);
    for (Vertex w = 0; w < n_; ++w) {
      if (w != u) order_.push_back(w);
    }
    // Neighbours of already placed vertices first keeps the consistency
    // check tight early in the search.
    std::stable_sort(order_.begin() + 1, order_.end(), [&](Vertex x, Vertex y) {
      return g_.adjacent(u, x) > g_.adjacent(u, y);
    });
    map_.assign(n_, 0);
    used_.assign(n_, 0);
    map_[u] = v;
    used_[v] = 1;
    if (extend(1)) return map_;
    return std::nullopt;
  }

 private:
  bool extend(std::size_t depth) {
    if (depth == n_) return true;
    const Vertex x = order_[depth];
    for (Vertex y = 0; y < n_; ++y) {
      if (used_[y] || deg_[y] != deg_[x]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) {
        const Vertex w = order_[k];
        ok = g_.adjacent(x, w) == g_.adjacent(y, map_[w]);
      }
      if (!ok) continue;
      map_[x] = y;
      used_[y] = 1;
      if (extend(depth + 1)) return true;
      used_[y] = 0;
    }
    return false;
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<std::size_t> deg_;
  std::vector<Vertex> order_;
  std::vector<Vertex> map_;
  std::vector<char> used_;
};

}  // namespace

Partition brute_force_orbits(const Graph& g, std::size_t max_n) {
  const std::size_t n = g.order();
  if (n > max_n) {
    throw OracleCapExceeded("plain automorphism search is limited to n <= " +
                            std::to_string(max_n));
  }
  PlainSearch search(g);
  DisjointSets orbit(n);
  for (Vertex u = 0; u < n; ++u) {
    std::vector<std::size_t> failed;
    for (Vertex v = u + 1; v < n; ++v) {
      if (orbit.find(u) == orbit.find(v)) continue;
      const std::size_t root = orbit.find(v);
      if (std::any_of(failed.begin(), failed.end(), [&](std::size_t r) {
            return orbit.find(r) == root;
          })) {
        continue;
      }
      if (auto perm = search.find(u, v)) {
        for (Vertex w = 0; w < n; ++w) orbit.unite(w, (*perm)[w]);
      } else {
        failed.push_back(v);
      }
    }
  }
  std::vector<std::size_t> ids(n);
  for (std::size_t v = 0; v < n; ++v) ids[v] = orbit.find(v);
  return partition_from_ids(ids, PartitionKind::kAutOrbit, "O");
}

std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a,
                                                    const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) {
    return std::nullopt;
  }
  if (a.order() == 0) return std::vector<Vertex>{};
  const AdjList la = adjacency_lists(a);
  const AdjList lb = adjacency_lists(b);
  return search(a, la, Coloring(a.order(), 0), b, lb, Coloring(b.order(), 0));
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  return find_isomorphism(a, b).has_value();
}

}  // namespace zdg
