#include "zdg/graph.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "zdg/errors.hpp"
#include "zdg/number_theory.hpp"
#include "zdg/ring_spec_parser.hpp"

namespace zdg {

Graph::Graph(std::size_t n)
    : n_(n), words_((n + 63) / 64), bits_(n * ((n + 63) / 64), 0) {
  labels_.reserve(n);
  for (std::size_t v = 0; v < n; ++v) labels_.push_back(std::to_string(v));
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u >= n_ || v >= n_) throw Error("edge endpoint out of range");
  if (u == v) throw Error("self-loops are not allowed");
  set_row_bit(u, v);
  set_row_bit(v, u);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  bits_[u * words_ + v / 64] &= ~(std::uint64_t{1} << (v % 64));
  bits_[v * words_ + u / 64] &= ~(std::uint64_t{1} << (u % 64));
}

std::size_t Graph::degree(Vertex u) const {
  std::size_t d = 0;
  for (std::uint64_t w : row(u)) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (std::uint64_t w : bits_) total += static_cast<std::size_t>(std::popcount(w));
  return total / 2;
}

std::vector<Vertex> Graph::neighbors(Vertex u) const {
  std::vector<Vertex> out;
  const auto r = row(u);
  for (std::size_t i = 0; i < words_; ++i) {
    for (std::uint64_t w = r[i]; w != 0; w &= w - 1) {
      out.push_back(static_cast<Vertex>(i * 64 + std::countr_zero(w)));
    }
  }
  return out;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < n_; ++u) {
    const auto r = row(u);
    for (std::size_t i = (u + 1) / 64; i < words_; ++i) {
      std::uint64_t w = r[i];
      if (i == (u + 1) / 64) w &= ~std::uint64_t{0} << ((u + 1) % 64);
      for (; w != 0; w &= w - 1) {
        out.emplace_back(u, static_cast<Vertex>(i * 64 + std::countr_zero(w)));
      }
    }
  }
  return out;
}

void Graph::set_labels(std::vector<std::string> labels) {
  if (labels.size() != n_) throw Error("label count does not match order");
  labels_ = std::move(labels);
}

bool Graph::check_symmetric() const {
  for (Vertex u = 0; u < n_; ++u) {
    if (adjacent(u, u)) return false;
    for (Vertex v : neighbors(u)) {
      if (!adjacent(v, u)) return false;
    }
  }
  return true;
}

std::string to_string(PartitionKind kind) {
  switch (kind) {
    case PartitionKind::kGcdClass:
      return "gcd";
    case PartitionKind::kTwin:
      return "twin";
    case PartitionKind::kAutOrbit:
      return "aut";
    case PartitionKind::kCustom:
      return "custom";
  }
  return "custom";
}

void Partition::validate(std::size_t n) const {
  std::vector<char> seen(n, 0);
  std::size_t total = 0;
  for (const Block& b : blocks) {
    if (b.vertices.empty()) throw Error("partition has an empty block");
    if (!std::is_sorted(b.vertices.begin(), b.vertices.end())) {
      throw Error("partition block '" + b.label + "' is not sorted");
    }
    for (Vertex v : b.vertices) {
      if (v >= n) throw Error("partition vertex out of range");
      if (seen[v]) throw Error("partition blocks overlap");
      seen[v] = 1;
    }
    total += b.vertices.size();
  }
  if (total != n) throw Error("partition does not cover every vertex");
}

std::vector<std::size_t> Partition::block_of(std::size_t n) const {
  std::vector<std::size_t> out(n, 0);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (Vertex v : blocks[i].vertices) out[v] = i;
  }
  return out;
}

std::vector<std::size_t> Partition::sizes() const {
  std::vector<std::size_t> out;
  out.reserve(blocks.size());
  for (const Block& b : blocks) out.push_back(b.vertices.size());
  return out;
}

Partition partition_from_ids(std::span<const std::size_t> ids,
                             PartitionKind kind, const std::string& prefix) {
  Partition p;
  p.kind = kind;
  std::unordered_map<std::size_t, std::size_t> slot;
  for (std::size_t v = 0; v < ids.size(); ++v) {
    auto [it, fresh] = slot.try_emplace(ids[v], p.blocks.size());
    if (fresh) {
      p.blocks.push_back({prefix + std::to_string(p.blocks.size()), {}});
    }
    p.blocks[it->second].vertices.push_back(static_cast<Vertex>(v));
  }
  return p;
}

bool refines(const Partition& fine, const Partition& coarse, std::size_t n) {
  const auto owner = coarse.block_of(n);
  for (const Block& b : fine.blocks) {
    for (Vertex v : b.vertices) {
      if (owner[v] != owner[b.vertices.front()]) return false;
    }
  }
  return true;
}

Graph build_zero_divisor_graph(const Ring& ring, std::uint64_t cap) {
  const std::uint32_t n = ring.size();
  if (n > cap) throw SizeCapExceeded(n, cap);
  Graph g(n);
  std::vector<Element> ann;
  for (Element a = 0; a < n; ++a) {
    ann.clear();
    ring.annihilator(a, ann);
    for (Element b : ann) {
      if (b != a) g.set_row_bit(a, b);
    }
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (Element a = 0; a < n; ++a) labels.push_back(ring.label(a));
  g.set_labels(std::move(labels));
  g.set_provenance(render_ring_spec(ring.spec()));
  return g;
}

Partition gcd_class_partition(const Ring& ring) {
  const auto* zn = std::get_if<spec::Zn>(&ring.spec().node);
  if (zn == nullptr) {
    throw WrongRingKind("gcd classes are defined for Z/n only, got " +
                        render_ring_spec(ring.spec()));
  }
  const std::uint64_t n = zn->n;
  const auto ds = divisors(n);
  std::unordered_map<std::uint64_t, std::size_t> index;
  Partition p;
  p.kind = PartitionKind::kGcdClass;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    index[ds[i]] = i;
    p.blocks.push_back({"A_" + std::to_string(ds[i]), {}});
  }
  for (std::uint64_t x = 0; x < n; ++x) {
    p.blocks[index.at(std::gcd(x, n))].vertices.push_back(
        static_cast<Vertex>(x));
  }
  return p;
}

namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent[b] = a;
  }
  std::vector<std::size_t> parent;
};

std::uint64_t hash_words(std::span<const std::uint64_t> words) {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (std::uint64_t w : words) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

// Unites vertices whose (optionally closed) neighbourhood rows are identical.
void merge_equal_rows(const Graph& g, bool closed, UnionFind& uf) {
  const std::size_t words = g.words_per_row();
  std::vector<std::uint64_t> buf(words);
  std::unordered_map<std::uint64_t, std::vector<Vertex>> reps;
  auto load = [&](Vertex v, std::vector<std::uint64_t>& out) {
    const auto r = g.row(v);
    std::copy(r.begin(), r.end(), out.begin());
    if (closed) out[v / 64] |= std::uint64_t{1} << (v % 64);
  };
  std::vector<std::uint64_t> other(words);
  for (Vertex v = 0; v < g.order(); ++v) {
    load(v, buf);
    auto& bucket = reps[hash_words(buf)];
    bool matched = false;
    for (Vertex r : bucket) {
      load(r, other);
      if (other == buf) {
        uf.unite(r, v);
        matched = true;
        break;
      }
    }
    if (!matched) bucket.push_back(v);
  }
}

}  // namespace

Partition twin_partition(const Graph& g) {
  UnionFind uf(g.order());
  merge_equal_rows(g, false, uf);
  merge_equal_rows(g, true, uf);
  std::vector<std::size_t> ids(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) ids[v] = uf.find(v);
  return partition_from_ids(ids, PartitionKind::kTwin, "T");
}

Graph divisor_graph(std::uint64_t n) {
  if (n < 2) throw Error("divisor graph needs n >= 2");
  std::vector<std::uint64_t> proper;
  for (std::uint64_t d : divisors(n)) {
    if (d > 1 && d < n) proper.push_back(d);
  }
  Graph g(proper.size());
  for (std::size_t i = 0; i < proper.size(); ++i) {
    for (std::size_t j = i + 1; j < proper.size(); ++j) {
      const unsigned __int128 prod =
          static_cast<unsigned __int128>(proper[i]) * proper[j];
      if (prod % n == 0) {
        g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  std::vector<std::string> labels;
  for (std::uint64_t d : proper) labels.push_back(std::to_string(d));
  g.set_labels(std::move(labels));
  return g;
}

Graph generalized_join(const JoinSkeleton& sk) {
  const std::size_t k = sk.skeleton.order();
  if (sk.parts.size() != k) {
    throw Error("join skeleton has " + std::to_string(k) + " vertices but " +
                std::to_string(sk.parts.size()) + " parts");
  }
  std::vector<std::size_t> offset(k + 1, 0);
  for (std::size_t i = 0; i < k; ++i) {
    offset[i + 1] = offset[i] + sk.parts[i].order();
  }
  Graph g(offset[k]);
  std::vector<std::string> labels;
  labels.reserve(offset[k]);
  for (std::size_t i = 0; i < k; ++i) {
    const Graph& part = sk.parts[i];
    for (auto [u, v] : part.edges()) {
      g.add_edge(static_cast<Vertex>(offset[i] + u),
                 static_cast<Vertex>(offset[i] + v));
    }
    labels.insert(labels.end(), part.labels().begin(), part.labels().end());
  }
  for (auto [i, j] : sk.skeleton.edges()) {
    for (std::size_t u = offset[i]; u < offset[i + 1]; ++u) {
      for (std::size_t v = offset[j]; v < offset[j + 1]; ++v) {
        g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
      }
    }
  }
  g.set_labels(std::move(labels));
  return g;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vs) {
  Graph h(vs.size());
  std::vector<std::string> labels;
  labels.reserve(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i] >= g.order()) throw Error("induced subgraph vertex out of range");
    labels.push_back(g.label(vs[i]));
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (vs[i] == vs[j]) throw Error("induced subgraph vertex repeated");
      if (g.adjacent(vs[i], vs[j])) {
        h.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  h.set_labels(std::move(labels));
  return h;
}

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph empty_graph(std::size_t n) { return Graph(n); }

std::vector<OrbitBlockInfo> orbit_block_classification(std::uint64_t p,
                                                        unsigned alpha,
                                                        std::uint64_t cap) {
  if (!is_prime(p)) throw CompositePrimeError(p);
  if (alpha < 1) throw Error("alpha must be at least 1");
  const auto order = checked_pow(p, alpha);
  if (!order || *order > cap) {
    throw SizeCapExceeded(order.value_or(UINT64_MAX), cap);
  }
  std::vector<OrbitBlockInfo> out;
  for (unsigned i = 0; i <= alpha; ++i) {
    OrbitBlockInfo info;
    info.i = i;
    info.size = i == alpha ? 1 : euler_phi(*checked_pow(p, alpha - i));
    info.kind = (2 * i >= alpha || info.size == 1) ? BlockKind::kComplete
                                                    : BlockKind::kIndependent;
    out.push_back(info);
  }
  return out;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(g.order(), -1);
  std::vector<Vertex> frontier{source};
  dist[source] = 0;
  for (int level = 1; !frontier.empty(); ++level) {
    std::vector<Vertex> next;
    for (Vertex u : frontier) {
      for (Vertex v : g.neighbors(u)) {
        if (dist[v] < 0) {
          dist[v] = level;
          next.push_back(v);
        }
      }
    }
    frontier = std::move(next);
  }
  return dist;
}

}  // namespace zdg
