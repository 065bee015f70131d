#include <gtest/gtest.h>

#include <numeric>

#include "oracles.hpp"
#include "zdg/automorphism.hpp"
#include "zdg/errors.hpp"
#include "zdg/graph.hpp"
#include "zdg/number_theory.hpp"
#include "zdg/ring_spec_parser.hpp"

namespace {

using namespace zdg;
using Edges = std::vector<std::pair<Vertex, Vertex>>;

Graph beck(const char* text) {
  return build_zero_divisor_graph(make_ring(parse_ring_spec(text)));
}

std::vector<std::size_t> sorted_sizes(const Partition& p) {
  auto s = p.sizes();
  std::sort(s.begin(), s.end());
  return s;
}

TEST(Graph, StarForField) {
  const Graph g = beck("GF(5)");
  EXPECT_EQ(g.order(), 5u);
  EXPECT_EQ(g.edges(), (Edges{{0, 1}, {0, 2}, {0, 3}, {0, 4}}));
}

TEST(Graph, ProductOfSmallFields) {
  const Graph g = beck("Z/2 x Z/3");
  EXPECT_EQ(g.order(), 6u);
  // Componentwise products vanish: 0 with all 5, (1,0) with (0,1), (0,2).
  EXPECT_EQ(g.edge_count(), 7u);
}

TEST(Graph, EdgesAreExactlyZeroProducts) {
  for (const char* text : {"Z/36", "FamA(2,3)", "Z/2 x GF(4)", "FamD(3)",
                           "Z/4[x]/(x^2)"}) {
    const Ring r = make_ring(parse_ring_spec(text));
    const Graph g = build_zero_divisor_graph(r);
    ASSERT_TRUE(g.check_symmetric());
    for (Vertex a = 0; a < r.size(); ++a) {
      EXPECT_FALSE(g.adjacent(a, a));
      for (Vertex b = a + 1; b < r.size(); ++b) {
        EXPECT_EQ(g.adjacent(a, b), r.mul(a, b) == 0) << text;
      }
    }
    EXPECT_EQ(g.labels()[1], r.label(1));
    EXPECT_EQ(g.provenance(), render_ring_spec(r.spec()));
  }
}

TEST(Graph, ZeroDominatesAndDiameterAtMostTwo) {
  for (const char* text : {"Z/60", "FamB(3)", "Z/2 x Z/2 x Z/3", "GF(7)",
                           "FamC(2)"}) {
    const Graph g = beck(text);
    EXPECT_EQ(g.degree(0), g.order() - 1) << text;
    for (Vertex s : {Vertex{0}, Vertex{1}, static_cast<Vertex>(g.order() - 1)}) {
      for (int d : bfs_distances(g, s)) {
        EXPECT_GE(d, 0);
        EXPECT_LE(d, 2);
      }
    }
  }
}

TEST(Graph, SizeCap) {
  const Ring r = make_ring(spec::Zn{5000});
  EXPECT_THROW(build_zero_divisor_graph(r, 1000), SizeCapExceeded);
}

TEST(Graph, GcdClasses) {
  const Partition z27 = gcd_class_partition(make_ring(spec::Zn{27}));
  ASSERT_EQ(z27.blocks.size(), 4u);
  EXPECT_EQ(z27.sizes(), (std::vector<std::size_t>{18, 6, 2, 1}));
  EXPECT_EQ(z27.blocks[0].label, "A_1");
  EXPECT_EQ(z27.blocks[1].label, "A_3");
  EXPECT_EQ(z27.blocks[1].vertices, (std::vector<Vertex>{3, 6, 12, 15, 21, 24}));
  EXPECT_EQ(z27.blocks[3].label, "A_27");
  EXPECT_EQ(z27.kind, PartitionKind::kGcdClass);

  const Partition z4 = gcd_class_partition(make_ring(spec::Zn{4}));
  ASSERT_EQ(z4.blocks.size(), 3u);
  EXPECT_EQ(z4.blocks[0].vertices, (std::vector<Vertex>{1, 3}));
  EXPECT_EQ(z4.blocks[1].vertices, (std::vector<Vertex>{2}));
  EXPECT_EQ(z4.blocks[2].vertices, (std::vector<Vertex>{0}));

  const Partition z12 = gcd_class_partition(make_ring(spec::Zn{12}));
  std::vector<std::string> labels;
  for (const auto& b : z12.blocks) labels.push_back(b.label);
  EXPECT_EQ(labels, (std::vector<std::string>{"A_1", "A_2", "A_3", "A_4",
                                              "A_6", "A_12"}));
  EXPECT_EQ(z12.sizes(), (std::vector<std::size_t>{4, 2, 2, 2, 1, 1}));

  EXPECT_THROW(gcd_class_partition(make_ring(spec::GF{5, 1})), WrongRingKind);
}

TEST(Graph, TwinClasses) {
  const Graph star = beck("GF(5)");
  EXPECT_EQ(oracle::as_set(twin_partition(star)),
            (std::set<std::vector<Vertex>>{{0}, {1, 2, 3, 4}}));
  const Graph z27 = beck("Z/27");
  EXPECT_EQ(oracle::as_set(twin_partition(z27)),
            oracle::as_set(gcd_class_partition(make_ring(spec::Zn{27}))));
  EXPECT_EQ(oracle::as_set(twin_partition(beck("Z/4"))),
            (std::set<std::vector<Vertex>>{{0}, {1, 2, 3}}));
}

TEST(Graph, TwinRuleMatchesDefinition) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = oracle::random_graph(2 + trial % 11, 0.5, rng);
    const auto owner = twin_partition(g).block_of(g.order());
    for (Vertex u = 0; u < g.order(); ++u) {
      for (Vertex v = u + 1; v < g.order(); ++v) {
        bool twins = true;
        for (Vertex w = 0; w < g.order(); ++w) {
          if (w != u && w != v && g.adjacent(u, w) != g.adjacent(v, w)) {
            twins = false;
          }
        }
        ASSERT_EQ(owner[u] == owner[v], twins);
      }
    }
  }
}

TEST(Graph, GcdRefinesTwinRefinesOrbits) {
  for (std::uint64_t n = 2; n <= 300; ++n) {
    const Ring r = make_ring(spec::Zn{n});
    const Graph g = build_zero_divisor_graph(r);
    const Partition gcd = gcd_class_partition(r);
    const Partition twin = twin_partition(g);
    ASSERT_TRUE(refines(gcd, twin, n)) << n;
    ASSERT_TRUE(refines(twin, aut_orbits(g), n)) << n;
    std::size_t total = 0;
    for (std::size_t s : gcd.sizes()) total += s;
    ASSERT_EQ(total, n);
  }
}

TEST(Graph, DivisorGraph) {
  const Graph u12 = divisor_graph(12);
  EXPECT_EQ(u12.labels(), (std::vector<std::string>{"2", "3", "4", "6"}));
  // 2-6, 3-4, 4-6 as vertex indices into {2,3,4,6}.
  EXPECT_EQ(u12.edges(), (Edges{{0, 3}, {1, 2}, {2, 3}}));
  const Graph u49 = divisor_graph(49);
  EXPECT_EQ(u49.order(), 1u);
  EXPECT_EQ(u49.edge_count(), 0u);
  const Graph u8 = divisor_graph(8);
  EXPECT_EQ(u8.order(), 2u);
  EXPECT_EQ(u8.edges(), (Edges{{0, 1}}));
  EXPECT_EQ(divisor_graph(7).order(), 0u);
}

TEST(Graph, GeneralizedJoin) {
  JoinSkeleton c4{complete_graph(2), {empty_graph(2), empty_graph(2)}};
  const Graph g = generalized_join(c4);
  EXPECT_EQ(g.edges(), (Edges{{0, 2}, {0, 3}, {1, 2}, {1, 3}}));

  JoinSkeleton none{empty_graph(3), {complete_graph(2), empty_graph(3),
                                     complete_graph(3)}};
  const Graph u = generalized_join(none);
  EXPECT_EQ(u.order(), 8u);
  EXPECT_EQ(u.edge_count(), 1u + 3u);
}

TEST(Graph, Z27JoinReconstruction) {
  const Ring r = make_ring(spec::Zn{27});
  const Graph g = build_zero_divisor_graph(r);
  const Partition gcd = gcd_class_partition(r);
  Graph skeleton(4);
  for (unsigned i = 0; i <= 3; ++i)
    for (unsigned j = i + 1; j <= 3; ++j)
      if (i + j >= 3) skeleton.add_edge(i, j);
  JoinSkeleton sk{skeleton, {empty_graph(18), empty_graph(6),
                             complete_graph(2), complete_graph(1)}};
  std::vector<Vertex> order;
  for (const auto& b : gcd.blocks) {
    order.insert(order.end(), b.vertices.begin(), b.vertices.end());
  }
  EXPECT_TRUE(induced_subgraph(g, order).same_edges(generalized_join(sk)));
}

TEST(Graph, InducedSubgraph) {
  const Ring r = make_ring(spec::Zn{27});
  const Graph g = build_zero_divisor_graph(r);
  const std::vector<Vertex> a9{9, 18};
  const Graph k2 = induced_subgraph(g, a9);
  EXPECT_EQ(k2.edge_count(), 1u);
  EXPECT_EQ(k2.labels(), (std::vector<std::string>{"9", "18"}));
  const std::vector<Vertex> a3{3, 6, 12, 15, 21, 24};
  EXPECT_EQ(induced_subgraph(g, a3).edge_count(), 0u);
  EXPECT_EQ(induced_subgraph(g, std::vector<Vertex>{}).order(), 0u);
}

TEST(Graph, OrbitBlockClassification) {
  auto kinds = [](std::uint64_t p, unsigned a) {
    std::vector<std::pair<BlockKind, std::uint64_t>> out;
    for (const auto& info : orbit_block_classification(p, a)) {
      out.emplace_back(info.kind, info.size);
    }
    return out;
  };
  using K = BlockKind;
  using V = std::vector<std::pair<BlockKind, std::uint64_t>>;
  EXPECT_EQ(kinds(3, 3), (V{{K::kIndependent, 18}, {K::kIndependent, 6},
                           {K::kComplete, 2}, {K::kComplete, 1}}));
  EXPECT_EQ(kinds(2, 2),
            (V{{K::kIndependent, 2}, {K::kComplete, 1}, {K::kComplete, 1}}));
  EXPECT_EQ(kinds(5, 1), (V{{K::kIndependent, 4}, {K::kComplete, 1}}));
  EXPECT_THROW(orbit_block_classification(6, 2), CompositePrimeError);
  EXPECT_THROW(orbit_block_classification(2, 20), SizeCapExceeded);
}

TEST(Graph, OrbitSizesSumToPrimePower) {
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
    for (unsigned a = 1; checked_pow(p, a).value_or(UINT64_MAX) <= 100000; ++a) {
      std::uint64_t total = 0;
      for (const auto& info : orbit_block_classification(p, a)) {
        total += info.size;
      }
      EXPECT_EQ(total, *checked_pow(p, a));
    }
  }
}

TEST(Graph, PartitionHelpers) {
  const std::vector<std::size_t> ids{2, 0, 2, 1, 0};
  const Partition p = partition_from_ids(ids, PartitionKind::kCustom);
  ASSERT_EQ(p.blocks.size(), 3u);
  EXPECT_EQ(p.blocks[0].vertices, (std::vector<Vertex>{0, 2}));
  EXPECT_EQ(p.blocks[1].vertices, (std::vector<Vertex>{1, 4}));
  EXPECT_EQ(p.blocks[2].vertices, (std::vector<Vertex>{3}));
  EXPECT_NO_THROW(p.validate(5));
  EXPECT_THROW(p.validate(6), Error);
  Partition bad = p;
  bad.blocks[2].vertices = {1};
  EXPECT_THROW(bad.validate(5), Error);
}

}  // namespace
