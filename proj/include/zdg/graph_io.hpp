#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "zdg/graph.hpp"

namespace zdg {

// {"n": int, "labels": [string], "edges": [[u, v], ...], "provenance": ...}
// with u < v and edges in lexicographic order. Output is compact and
// byte-deterministic.
std::string graph_to_json(const Graph& g);
Graph graph_from_json(std::string_view text);

// Undirected DOT; with a partition, each block becomes a same-rank cluster.
std::string graph_to_dot(const Graph& g,
                         const std::optional<Partition>& partition = {});

// {"kind": ..., "blocks": [{"label", "size", "vertices", "members"}]} where
// members are the vertex labels of g.
std::string partition_to_json(const Partition& p, const Graph& g);
Partition partition_from_json(std::string_view text, std::size_t n);

}  // namespace zdg
