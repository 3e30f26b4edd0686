#include "chaincert/errors.hpp"
#include "chaincert/homology.hpp"
#include "support/builders.hpp"
#include "support/corpus.hpp"
#include "support/oracle.hpp"
#include "support/random_instances.hpp"

#include <gtest/gtest.h>

using namespace chaincert;

namespace {

const Ring Z = Ring::integers();
const Ring Q = Ring::rationals();
const Ring Z2 = Ring::integers_mod(2);

ComplexRef cycle_graph(int n, const std::string& prefix) {
  std::vector<std::string> edges;
  for (int i = 0; i < n; ++i) edges.push_back(prefix + std::to_string(i) + " " + prefix + std::to_string((i + 1) % n));
  return build::ref(edges);
}

}  // namespace

TEST(Homology, PointIsTrivial) {
  auto p = build::complex({"p"});
  for (int k = 0; k < 4; ++k) {
    for (const Ring& r : {Z, Q, Z2}) EXPECT_TRUE(homology(p, k, r).is_trivial());
  }
}

TEST(Homology, Circle) {
  auto h = homology(build::complex({"0 1", "1 2", "0 2"}), 1, Z);
  EXPECT_EQ(h.free_rank, 1u);
  EXPECT_TRUE(h.torsion.empty());
  EXPECT_EQ(h.describe(), "Z^1");
  for (const auto& g : h.generators) EXPECT_TRUE(is_cycle(g, Z));
}

TEST(Homology, ProjectivePlane) {
  auto rp2 = corpus::from_facets(corpus::projective_plane());
  auto h = homology(rp2, 1, Z);
  EXPECT_EQ(h.free_rank, 0u);
  EXPECT_EQ(h.torsion, (std::vector<Integer>{2}));
  EXPECT_TRUE(homology(rp2, 2, Z).is_trivial());
  EXPECT_EQ(homology(rp2, 1, Z2).free_rank, 1u);
  EXPECT_EQ(homology(rp2, 2, Z2).free_rank, 1u);
  EXPECT_TRUE(homology(rp2, 1, Q).is_trivial());
}

TEST(Homology, ReducedDegreeZero) {
  auto two = build::complex({"a", "b", "c d"});
  EXPECT_EQ(homology(two, 0, Z).free_rank, 2u);
  EXPECT_TRUE(homology(build::complex({"a b"}), 0, Z).is_trivial());
}

TEST(Homology, CompositeModulus) {
  // RP^2 over Z/4: H_1 = Z/2 and H_2 = Z/2 (universal coefficients).
  auto rp2 = corpus::from_facets(corpus::projective_plane());
  Ring z4 = Ring::integers_mod(4);
  auto h1 = homology(rp2, 1, z4);
  EXPECT_EQ(h1.free_rank, 0u);
  EXPECT_EQ(h1.torsion, (std::vector<Integer>{2}));
  auto h2 = homology(rp2, 2, z4);
  EXPECT_EQ(h2.torsion, (std::vector<Integer>{2}));
  auto torus = corpus::from_facets(corpus::torus());
  Ring z6 = Ring::integers_mod(6);
  EXPECT_EQ(homology(torus, 1, z6).free_rank, 2u);
  EXPECT_EQ(homology(torus, 1, z6).describe(), "(Z/6)^2");
}

TEST(Homology, CorpusMatchesOracle) {
  for (const auto& [name, facets] : corpus::regression_corpus()) {
    auto k = corpus::from_facets(facets);
    oracle::Complex ok(facets);
    for (int d = 0; d <= 3; ++d) {
      auto hz = homology(k, d, Z);
      auto expect = oracle::homology_z(ok, d);
      EXPECT_EQ(hz.free_rank, expect.free_rank) << name << " H_" << d;
      std::vector<long long> tors;
      for (const auto& t : hz.torsion) tors.push_back(static_cast<long long>(t));
      EXPECT_EQ(tors, expect.torsion) << name << " H_" << d;
      EXPECT_EQ(homology(k, d, Q).free_rank, oracle::betti(ok, d, 0)) << name;
      EXPECT_EQ(homology(k, d, Z2).free_rank, oracle::betti(ok, d, 2)) << name;
      EXPECT_TRUE(homology(k, d, Z2).torsion.empty());
    }
  }
  auto klein = corpus::from_facets(corpus::klein_bottle());
  EXPECT_EQ(homology(klein, 1, Z).describe(), "Z^1 + Z/2");
  EXPECT_TRUE(homology(klein, 2, Z).is_trivial());
}

TEST(Homology, EulerCharacteristic) {
  for (const auto& [name, facets] : corpus::regression_corpus()) {
    auto k = corpus::from_facets(facets);
    long chain_sum = 0, homology_sum = 0;
    for (int d = 0; d <= k.dimension(); ++d) {
      long sign = d % 2 == 0 ? 1 : -1;
      chain_sum += sign * static_cast<long>(k.count(d));
      homology_sum += sign * static_cast<long>(homology(k, d, Q).free_rank);
    }
    // Reduced homology: chi = 1 + sum (-1)^d rank H~_d.
    EXPECT_EQ(chain_sum, 1 + homology_sum) << name;
  }
}

TEST(Homology, GeneratorsAreCycles) {
  std::mt19937_64 rng(41);
  const std::vector<Ring> rings{Z, Q, Z2, Ring::integers_mod(6)};
  for (int trial = 0; trial < 40; ++trial) {
    auto k = random_instances::random_complex(rng, 7, 3, "v");
    for (const auto& r : rings) {
      for (int d = 0; d <= k->dimension(); ++d) {
        auto h = homology(*k, d, r);
        ASSERT_EQ(h.orders.size(), h.generators.size());
        for (const auto& g : h.generators) {
          EXPECT_TRUE(is_cycle(g, r));
          EXPECT_TRUE(carried_by(g, *k));
        }
        if (r == Z) {
          for (std::size_t i = 0; i + 1 < h.torsion.size(); ++i) EXPECT_EQ(h.torsion[i + 1] % h.torsion[i], 0);
          EXPECT_EQ(homology(*k, d, Q).free_rank, h.free_rank);
        }
      }
    }
  }
}

TEST(InducedMap, IdentityInclusion) {
  auto circle = build::ref({"0 1", "1 2", "0 2"});
  auto m = induced_map_of_inclusion(circle, circle, 1, Z);
  EXPECT_EQ(m.matrix, RingMatrix::identity(1));
}

TEST(InducedMap, CircleIntoDisk) {
  auto circle = build::ref({"0 1", "1 2", "0 2"});
  auto disk = build::ref({"0 1 2"});
  EXPECT_TRUE(induced_map_of_inclusion(circle, disk, 1, Z).is_zero());
}

TEST(InducedMap, DegreeTwoCover) {
  auto hexagon = cycle_graph(6, "h");
  auto triangle = cycle_graph(3, "t");
  std::map<Vertex, Vertex> a;
  for (int i = 0; i < 6; ++i) a["h" + std::to_string(i)] = "t" + std::to_string(i % 3);
  SimplicialMap wrap(hexagon, triangle, a);
  auto m = induced_map(induced_morphism(wrap, 2, Z), 1);
  ASSERT_EQ(m.matrix.rows(), 1u);
  ASSERT_EQ(m.matrix.cols(), 1u);
  EXPECT_EQ(abs(m.matrix.get(0, 0)), 2);
  auto m3 = induced_map(induced_morphism(wrap, 2, Ring::integers_mod(3)), 1);
  EXPECT_TRUE(m3.matrix.get(0, 0) == 1 || m3.matrix.get(0, 0) == 2);
  EXPECT_TRUE(induced_map(induced_morphism(wrap, 2, Z2), 1).is_zero());
}

TEST(InducedMap, RejectsNonMorphism) {
  auto edge = build::ref({"a b"});
  auto tri = build::ref({"a b c"});
  std::map<Simplex, Chain> a{{{"a"}, build::chain({{1, "a"}}, Z)},
                             {{"b"}, build::chain({{1, "b"}}, Z)},
                             {{"a", "b"}, build::chain({{1, "a c"}}, Z)}};
  EXPECT_THROW(induced_map(ChainMorphism(edge, tri, 1, Z, a), 0), PreconditionFailure);
}

TEST(TrivialInduced, Examples) {
  auto point = build::complex({"0"});
  auto disk = build::complex({"0 1 2"});
  auto circle = build::complex({"0 1", "1 2", "0 2"});
  for (int k = 0; k < 3; ++k) EXPECT_TRUE(is_trivial_induced(point, disk, k, Z).trivial);

  auto same = is_trivial_induced(circle, circle, 1, Z);
  EXPECT_FALSE(same.trivial);
  ASSERT_TRUE(same.witness);
  EXPECT_EQ(same.witness->terms().size(), 3u);

  auto bounded = is_trivial_induced(circle, disk, 1, Z);
  EXPECT_TRUE(bounded.trivial);
  ASSERT_EQ(bounded.fillings.size(), 1u);
  EXPECT_EQ(boundary(bounded.fillings[0], Z), bounded.generators[0]);

  EXPECT_THROW(is_trivial_induced(disk, circle, 1, Z), PreconditionFailure);
}

TEST(FillCycle, Examples) {
  auto disk = build::complex({"v0 v1 v2"});
  auto zero = fill_cycle(Chain(1), disk, Z);
  ASSERT_TRUE(zero);
  EXPECT_TRUE(zero->is_zero());
  auto x = fill_cycle(build::chain({{1, "v1"}, {-1, "v0"}}, Z), disk, Z);
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, build::chain({{1, "v0 v1"}}, Z));
  auto hollow = build::complex({"v0 v1", "v1 v2", "v0 v2"});
  auto loop = build::chain({{1, "v0 v1"}, {1, "v1 v2"}, {-1, "v0 v2"}}, Z);
  EXPECT_FALSE(fill_cycle(loop, hollow, Z));
  EXPECT_TRUE(fill_cycle(loop, disk, Z));

  EXPECT_THROW(fill_cycle(build::chain({{1, "v0 v1"}}, Z), disk, Z), PreconditionFailure);
  EXPECT_THROW(fill_cycle(build::chain({{1, "v0"}}, Z), disk, Z), PreconditionFailure);
  EXPECT_THROW(fill_cycle(build::chain({{1, "v1"}, {-1, "q"}}, Z), disk, Z), PreconditionFailure);
}

TEST(FillCycle, RandomFillsAreExact) {
  std::mt19937_64 rng(53);
  const std::vector<Ring> rings{Z, Q, Z2, Ring::integers_mod(4), Ring::integers_mod(6)};
  int successes = 0, total = 0;
  while (total < 1000) {
    auto u = random_instances::random_complex(rng, 8, 3, "v");
    const Ring& ring = rings[rng() % rings.size()];
    int k = static_cast<int>(rng() % std::max(1, u->dimension()));
    // Mix guaranteed boundaries with arbitrary cycles of a subcomplex.
    Chain c(k);
    if (rng() % 2) {
      c = boundary(random_instances::random_chain(rng, *u, k + 1, ring), ring);
      if (c.is_zero()) c = Chain(k);
    } else {
      auto gens = homology(*u, k, ring).generators;
      for (const auto& g : gens)
        if (rng() % 2) c.add(g, Scalar(1 + static_cast<int>(rng() % 3)), ring);
    }
    ++total;
    auto x = fill_cycle(c, *u, ring);
    if (!x) {
      EXPECT_FALSE(c.is_zero());
      continue;
    }
    ++successes;
    EXPECT_EQ(boundary(*x, ring), c.is_zero() ? Chain(k) : c);
    EXPECT_TRUE(carried_by(*x, *u));
  }
  EXPECT_GT(successes, 300);
}

TEST(CrossPath, TrivialInducedAgreesWithInducedMap) {
  std::mt19937_64 rng(61);
  const std::vector<Ring> rings{Z, Q, Z2, Ring::integers_mod(4)};
  for (int trial = 0; trial < 80; ++trial) {
    auto u = random_instances::random_complex(rng, 7, 3, "v");
    VertexSet sub;
    for (const auto& v : u->vertices())
      if (rng() % 3) sub.insert(v);
    if (sub.empty()) sub.insert(u->vertices()[0]);
    auto v = share(full_subcomplex(*u, sub));
    const Ring& ring = rings[rng() % rings.size()];
    for (int k = 0; k <= v->dimension(); ++k) {
      bool by_fill = is_trivial_induced(*v, *u, k, ring).trivial;
      bool by_matrix = induced_map_of_inclusion(v, u, k, ring).is_zero();
      EXPECT_EQ(by_fill, by_matrix);
    }
  }
}
