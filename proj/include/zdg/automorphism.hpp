#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "zdg/graph.hpp"

namespace zdg {

inline constexpr std::size_t kOrbitOracleCap = 5000;

// Orbits of Aut(g). Twin classes are collapsed first (they always lie inside
// one orbit); the quotient, coloured by class size and type, is searched with
// colour refinement plus individualization-refinement backtracking.
// Throws OracleCapExceeded when the quotient has more than `cap` vertices.
Partition aut_orbits(const Graph& g, std::size_t cap = kOrbitOracleCap);

// Orbits from every one of the n! permutations. Throws OracleCapExceeded for
// n > 9.
Partition permutation_orbits(const Graph& g);

// Orbits from a plain backtracking search for u -> v automorphisms (degree
// filter and adjacency consistency only, no refinement). Exhaustive, meant as
// an independent check for small graphs. Throws OracleCapExceeded for
// n > max_n.
Partition brute_force_orbits(const Graph& g, std::size_t max_n = 60);

// An isomorphism a -> b as a vertex map, if one exists.
std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a,
                                                    const Graph& b);
bool are_isomorphic(const Graph& a, const Graph& b);

// True when perm is a bijection on [0, n) preserving adjacency.
bool is_automorphism(const Graph& g, const std::vector<Vertex>& perm);

}  // namespace zdg
