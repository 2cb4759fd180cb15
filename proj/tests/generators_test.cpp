#include <gtest/gtest.h>

#include "kpvc/exact.hpp"
#include "kpvc/generators.hpp"
#include "oracles.hpp"

using namespace kpvc;

TEST(Families, BasicCounts) {
  EXPECT_EQ(make_path(5).size(), 4u);
  EXPECT_EQ(make_cycle(6).size(), 6u);
  EXPECT_EQ(make_star(4).order(), 5u);
  EXPECT_EQ(make_star(4).degree(0), 4u);
  EXPECT_EQ(make_complete(5).size(), 10u);
  EXPECT_THROW(make_cycle(2), PreconditionError);
}

TEST(Families, H6IsFourRegular) {
  const Graph h = make_h6();
  EXPECT_EQ(h.order(), 6u);
  EXPECT_EQ(h.size(), 12u);
  for (Vertex v = 0; v < 6; ++v) EXPECT_EQ(h.degree(v), 4u);
  EXPECT_FALSE(h.has_edge(0, 1));
  EXPECT_FALSE(h.has_edge(2, 3));
  EXPECT_FALSE(h.has_edge(4, 5));
}

TEST(Families, TightSparse3Counts) {
  const Graph c4 = make_tight_sparse3(1, 0);
  EXPECT_EQ(c4, make_cycle(4));
  const Graph g = make_tight_sparse3(3, 2);
  EXPECT_EQ(g.order(), 24u);
  EXPECT_EQ(g.size(), 36u);
  EXPECT_EQ((2 * g.order() + g.size()) / 6, 14u);
  EXPECT_EQ(psi_exact(g, 3).psi, 14u);
}

TEST(Families, TightSparse3RatioClaim) {
  for (std::size_t b = 1; b <= 5; ++b) {
    for (std::size_t a = b; a <= 2 * b; ++a) {
      const std::size_t x = 3 * (2 * b - a);
      const std::size_t y = 2 * (a - b);
      const Graph g = make_tight_sparse3(x, y);
      EXPECT_EQ(g.order(), 4 * x + 6 * y);
      EXPECT_EQ(g.size(), 4 * x + 12 * y);
      EXPECT_EQ(g.size() * b, g.order() * a) << "a=" << a << " b=" << b;
      EXPECT_EQ((2 * g.order() + g.size()) % 6, 0u);
      EXPECT_EQ((2 * g.order() + g.size()) / 6, 2 * x + 4 * y);
    }
  }
}

TEST(Families, GenFamilyDispatch) {
  EXPECT_EQ(gen_family("path", {5}), make_path(5));
  EXPECT_EQ(gen_family("h6", {}), make_h6());
  EXPECT_EQ(gen_family("tight_sparse3", {1, 1}).order(), 10u);
  EXPECT_EQ(gen_family("tight_sparse3", {1, 1}).size(), 16u);
  EXPECT_EQ(gen_family("random_tree", {9, 3}), make_random_tree(9, RandomSeed{3}));
  EXPECT_THROW(gen_family("cycle", {2}), PreconditionError);
  EXPECT_THROW(gen_family("path", {}), PreconditionError);
  EXPECT_THROW(gen_family("petersen", {}), PreconditionError);
}

TEST(RandomTree, IsSpanningTreeAndSeeded) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t n = 1 + seed % 30;
    const Graph t = make_random_tree(n, RandomSeed{seed});
    EXPECT_EQ(t.order(), n);
    EXPECT_EQ(t.size(), n - 1);
    EXPECT_EQ(connected_components(t).count, 1u);
    EXPECT_EQ(t, make_random_tree(n, RandomSeed{seed}));
  }
}

TEST(RandomMop, SmallCases) {
  const auto tri = make_random_mop(3, RandomSeed{5});
  EXPECT_EQ(tri.cycle.size(), 3u);
  EXPECT_TRUE(tri.chords.empty());
  const auto sq = make_random_mop(4, RandomSeed{5});
  EXPECT_EQ(sq.chords.size(), 1u);
  const auto h = make_random_mop(12, RandomSeed{7});
  EXPECT_EQ(h.chords.size(), 9u);
  EXPECT_NO_THROW(validate_embedding(h, true));
  EXPECT_THROW(make_random_mop(2, RandomSeed{0}), PreconditionError);
}

TEST(RandomMop, AlwaysMaximalOuterplanar) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t n = 3 + seed % 50;
    const auto h = make_random_mop(n, RandomSeed{seed});
    EXPECT_NO_THROW(validate_embedding(h, true));
    EXPECT_EQ(to_graph(h).size(), 2 * n - 3);
  }
}

TEST(Doubled, TriangleAndSquare) {
  const OuterplanarEmbedding tri{{0, 1, 2}, {}};
  const Graph t = make_outerplanar_doubled(tri);
  EXPECT_EQ(t.order(), 6u);
  EXPECT_EQ(t.size(), 3u + 6u);
  EXPECT_EQ(psi_exact(t, 3).psi, 3u);

  const OuterplanarEmbedding sq{{0, 1, 2, 3}, {{0, 2}}};
  const Graph s = make_outerplanar_doubled(sq);
  EXPECT_EQ(s.order(), 8u);
  EXPECT_EQ(s.size(), 5u + 8u);
  EXPECT_EQ(psi_exact(s, 3).psi, 4u);
}

TEST(Doubled, PsiAtLeastBaseOrder) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::size_t n = 3 + seed % 6;
    const auto h = make_random_mop(n, RandomSeed{seed});
    const Graph d = make_outerplanar_doubled(h);
    EXPECT_EQ(d.order(), 2 * n);
    EXPECT_EQ(d.size(), to_graph(h).size() + 2 * n);
    EXPECT_GE(psi_exact(d, 3).psi, n);
  }
}

TEST(Reduction, SmallGadgets) {
  const Graph k2 = make_complete(2);
  const auto r3 = reduce_vc_to_kpvc(k2, 3);
  EXPECT_EQ(r3.gadget.order(), 4u);
  EXPECT_EQ(connected_components(r3.gadget).count, 1u);
  EXPECT_EQ(r3.gadget.max_degree(), 2u);  // P4
  EXPECT_EQ(psi_exact(r3.gadget, 3).psi, 1u);

  const auto k3 = reduce_vc_to_kpvc(make_complete(3), 3);
  EXPECT_EQ(k3.gadget.order(), 6u);
  EXPECT_EQ(psi_exact(k3.gadget, 3).psi, 2u);

  const auto r5 = reduce_vc_to_kpvc(k2, 5);
  EXPECT_EQ(r5.gadget.order(), 6u);
  EXPECT_EQ(r5.gadget.size(), 5u);
  EXPECT_TRUE(is_forest(r5.gadget));
  EXPECT_EQ(r5.gadget.max_degree(), 2u);  // P6
  EXPECT_EQ(psi_exact(r5.gadget, 5).psi, 1u);

  EXPECT_THROW(reduce_vc_to_kpvc(k2, 2), PreconditionError);
}

TEST(Reduction, MapAndCounts) {
  const Graph g = make_random_gnp(6, 0.5, RandomSeed{11});
  for (std::size_t k = 3; k <= 8; ++k) {
    const auto r = reduce_vc_to_kpvc(g, k);
    const std::size_t len = (k - 1) / 2;
    EXPECT_EQ(r.gadget.order(), 6 * (1 + len));
    EXPECT_EQ(r.gadget.size(), g.size() + 6 * len);
    const auto fresh = std::count(r.original_of.begin(), r.original_of.end(), std::nullopt);
    EXPECT_EQ(static_cast<std::size_t>(fresh), 6 * len);
    for (Vertex v = 0; v < 6; ++v) EXPECT_EQ(r.original_of[v], v);
  }
}

TEST(Reduction, EqualsMinimumVertexCover) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = make_random_gnp(1 + seed % 6, 0.45, RandomSeed{seed});
    const std::size_t vc = oracle::min_vertex_cover(g);
    for (std::size_t k = 3; k <= 5; ++k) {
      EXPECT_EQ(psi_exact(reduce_vc_to_kpvc(g, k).gadget, k, 24).psi, vc)
          << "seed " << seed << " k " << k;
    }
  }
}
