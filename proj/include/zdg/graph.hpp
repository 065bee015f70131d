#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "zdg/ring.hpp"

namespace zdg {

using Vertex = std::uint32_t;

// Simple undirected graph stored as one adjacency bitset row per vertex.
// Rows are kept symmetric with an empty diagonal.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  std::size_t order() const { return n_; }
  std::size_t words_per_row() const { return words_; }

  bool adjacent(Vertex u, Vertex v) const {
    return (bits_[u * words_ + v / 64] >> (v % 64)) & 1U;
  }
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  std::span<const std::uint64_t> row(Vertex u) const {
    return {bits_.data() + u * words_, words_};
  }

  std::size_t degree(Vertex u) const;
  std::size_t edge_count() const;
  std::vector<Vertex> neighbors(Vertex u) const;
  // Sorted (u < v) pairs in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);
  const std::string& label(Vertex v) const { return labels_[v]; }

  const std::optional<std::string>& provenance() const { return provenance_; }
  void set_provenance(std::optional<std::string> p) {
    provenance_ = std::move(p);
  }

  // Same edge set (labels and provenance are ignored).
  bool same_edges(const Graph& other) const {
    return n_ == other.n_ && bits_ == other.bits_;
  }

  // Marks row u's bit v directly. Used by builders that fill each row from
  // a symmetric source; call check_symmetric() afterwards when in doubt.
  void set_row_bit(Vertex u, Vertex v) {
    bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
  }
  bool check_symmetric() const;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::string> labels_;
  std::optional<std::string> provenance_;
};

enum class PartitionKind { kGcdClass, kTwin, kAutOrbit, kCustom };

std::string to_string(PartitionKind kind);

struct Block {
  std::string label;
  std::vector<Vertex> vertices;  // sorted
};

struct Partition {
  PartitionKind kind = PartitionKind::kCustom;
  std::vector<Block> blocks;

  // Throws zdg::Error unless blocks are sorted, disjoint and cover [0, n).
  void validate(std::size_t n) const;
  std::vector<std::size_t> block_of(std::size_t n) const;
  std::vector<std::size_t> sizes() const;
};

// Builds a partition from a block id per vertex; blocks are ordered by their
// smallest vertex and labelled prefix + "0", prefix + "1", ...
Partition partition_from_ids(std::span<const std::size_t> ids,
                             PartitionKind kind,
                             const std::string& prefix = "B");

// Every block of `fine` lies inside one block of `coarse`.
bool refines(const Partition& fine, const Partition& coarse, std::size_t n);

struct JoinSkeleton {
  Graph skeleton;
  std::vector<Graph> parts;
};

// Gamma(R): all ring elements are vertices, distinct a, b adjacent iff ab = 0.
Graph build_zero_divisor_graph(const Ring& ring,
                               std::uint64_t cap = kDefaultSizeCap);

// A_d = {x in Z_n : gcd(x, n) = d} for every divisor d of n, ascending d,
// labelled "A_d". Throws WrongRingKind unless the ring is Z/n.
Partition gcd_class_partition(const Ring& ring);

// u ~ v iff N(u) \ {v} == N(v) \ {u}. Blocks are cliques or independent sets.
Partition twin_partition(const Graph& g);

// Upsilon_n: proper divisors 1 < d < n, distinct d_i d_j adjacent iff
// n | d_i d_j.
Graph divisor_graph(std::uint64_t n);

// Parts laid out consecutively; part i fully joined to part j when {i, j} is a
// skeleton edge.
Graph generalized_join(const JoinSkeleton& sk);

// Subgraph on `vs` (in the given order) with labels carried over.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vs);

Graph complete_graph(std::size_t n);
Graph empty_graph(std::size_t n);

enum class BlockKind { kComplete, kIndependent };

struct OrbitBlockInfo {
  unsigned i = 0;  // block of elements with p-adic valuation i
  BlockKind kind = BlockKind::kIndependent;
  std::uint64_t size = 0;
};

// Closed-form inventory of the valuation blocks of Gamma(Z_{p^alpha}):
// size phi(p^(alpha-i)) (1 for i = alpha), complete iff 2i >= alpha.
std::vector<OrbitBlockInfo> orbit_block_classification(
    std::uint64_t p, unsigned alpha, std::uint64_t cap = kDefaultSizeCap);

// Shortest-path distances from `source` (unreachable = -1).
std::vector<int> bfs_distances(const Graph& g, Vertex source);

}  // namespace zdg
