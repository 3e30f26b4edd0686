#include "chaincert/chain.hpp"
#include "chaincert/errors.hpp"
#include "support/builders.hpp"
#include "support/random_instances.hpp"

#include <gtest/gtest.h>

using namespace chaincert;

namespace {
const Ring Z = Ring::integers();
}

TEST(Boundary, Examples) {
  auto e = build::chain({{1, "v0 v1"}}, Z);
  EXPECT_EQ(boundary(e, Z), build::chain({{1, "v1"}, {-1, "v0"}}, Z));
  auto t = build::chain({{1, "v0 v1 v2"}}, Z);
  EXPECT_TRUE(boundary(boundary(t, Z), Z).is_zero());
  Ring z2 = Ring::integers_mod(2);
  auto t2 = build::chain({{2, "v0 v1 v2"}}, z2);
  EXPECT_TRUE(boundary(t2, z2).is_zero());
  EXPECT_TRUE(boundary(build::chain({{3, "a"}}, Z), Z).is_zero());
}

TEST(Augmentation, Examples) {
  EXPECT_EQ(augmentation(build::chain({{4, "v"}}, Z), Z), 4);
  EXPECT_EQ(augmentation(build::chain({{1, "v1"}, {-1, "v0"}}, Z), Z), 0);
  Ring z5 = Ring::integers_mod(5);
  EXPECT_EQ(augmentation(build::chain({{3, "a"}, {2, "b"}}, z5), z5), 0);
  EXPECT_THROW(augmentation(build::chain({{1, "a b"}}, Z), Z), PreconditionFailure);
}

TEST(Carrier, Examples) {
  EXPECT_TRUE(carrier(Chain(1)).simplexes.empty());
  EXPECT_TRUE(carrier(Chain(1)).vertices.empty());
  auto c = carrier(build::chain({{1, "v0 v1"}}, Z));
  EXPECT_EQ(c.simplexes.size(), 1u);
  EXPECT_EQ(c.vertices, build::vset("v0 v1"));
  auto cancel = build::chain({{1, "a b"}, {-1, "a b"}}, Z);
  EXPECT_TRUE(carrier(cancel).vertices.empty());
}

TEST(Chain, OrientationSign) {
  auto c = Chain::oriented({"b", "a"}, Scalar(1), Z);
  EXPECT_EQ(c.coefficient({"a", "b"}), -1);
  EXPECT_EQ(c.to_string(), "-[a,b]");
}

TEST(ChainMorphism, VerifyExamples) {
  auto k = build::ref({"a b c"});
  EXPECT_TRUE(verify_chain_morphism(identity_morphism(k, 2, Z)).ok);

  auto target = build::ref({"x y"});
  SimplicialMap f(k, target, {{"a", "x"}, {"b", "y"}, {"c", "y"}});
  EXPECT_TRUE(verify_chain_morphism(induced_morphism(f, 2, Z)).ok);

  // Send edge [a,b] to an edge whose boundary does not match.
  auto edge = build::ref({"a b"});
  auto tri = build::ref({"a b c"});
  std::map<Simplex, Chain> a{{{"a"}, build::chain({{1, "a"}}, Z)},
                             {{"b"}, build::chain({{1, "b"}}, Z)},
                             {{"a", "b"}, build::chain({{1, "a c"}}, Z)}};
  ChainMorphism bad(edge, tri, 1, Z, a);
  auto report = verify_chain_morphism(bad);
  EXPECT_FALSE(report.ok);
  ASSERT_EQ(report.violations.size(), 1u);
  EXPECT_EQ(report.violations[0].simplex, (Simplex{"a", "b"}));
}

TEST(ChainMorphism, StructuralValidation) {
  auto edge = build::ref({"a b"});
  std::map<Simplex, Chain> missing{{{"a"}, build::chain({{1, "a"}}, Z)}};
  EXPECT_THROW(ChainMorphism(edge, edge, 0, Z, missing), InputError);
  std::map<Simplex, Chain> wrong_dim{{{"a"}, build::chain({{1, "a b"}}, Z)}, {{"b"}, build::chain({{1, "b"}}, Z)}};
  EXPECT_THROW(ChainMorphism(edge, edge, 0, Z, wrong_dim), InputError);
}

TEST(IsCorrect, Examples) {
  auto k = build::ref({"v w1 w2"});
  EXPECT_TRUE(is_correct(identity_morphism(k, 2, Z)));
  auto point = build::ref({"v"});
  ChainMorphism twice(point, k, 0, Z, {{{"v"}, build::chain({{2, "w1"}}, Z)}});
  EXPECT_FALSE(is_correct(twice));
  ChainMorphism cancel(point, k, 0, Z, {{{"v"}, build::chain({{1, "w1"}, {1, "w2"}, {-1, "w2"}}, Z)}});
  EXPECT_TRUE(is_correct(cancel));
}

TEST(IsClose, Examples) {
  auto hollow = build::ref({"0 1", "1 2", "0 2"});
  auto id = identity_morphism(hollow, 1, Z);
  Cover whole(hollow, {{"all", hollow->vertex_set()}});
  EXPECT_TRUE(is_close(id, id, whole).ok);

  Cover pairs(hollow, {{"A", build::vset("0 1")}, {"B", build::vset("1 2")}, {"C", build::vset("0 2")}});
  // Faces of each edge span only that edge; shift psi by one vertex so an
  // edge's data spans all three vertices.
  SimplicialMap rot(hollow, hollow, {{"0", "1"}, {"1", "2"}, {"2", "0"}});
  auto psi = induced_morphism(rot, 1, Z);
  auto rep = is_close(id, psi, pairs);
  EXPECT_FALSE(rep.ok);
  ASSERT_TRUE(rep.counterexample);
  EXPECT_EQ(rep.counterexample_carrier, build::vset("0 1 2"));
  EXPECT_TRUE(is_close(id, id, pairs).ok);

  // Correct morphisms agreeing on vertices are close for the open-star cover.
  auto tri = build::ref({"a b c", "c d", "b d"});
  auto phi = identity_morphism(tri, 2, Z);
  std::map<Simplex, Chain> a = phi.assignment();
  a[{"c", "d"}] = build::chain({{1, "c b"}, {1, "b d"}}, Z);
  ChainMorphism alt(tri, tri, 2, Z, a);
  EXPECT_TRUE(is_close(phi, phi, open_star_cover(tri)).ok);
  EXPECT_TRUE(is_close(phi, alt, Cover(tri, {{"all", tri->vertex_set()}})).ok);
}

TEST(IsClose, SymmetricAndMonotone) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 60; ++trial) {
    auto k = random_instances::random_complex(rng, 6, 2, "v");
    auto a = random_instances::random_self_map(rng, k);
    auto b = random_instances::random_self_map(rng, k);
    auto phi = induced_morphism(a, 2, Z);
    auto psi = induced_morphism(b, 2, Z);
    Cover fine = open_star_cover(k);
    std::vector<CoverMember> grown;
    for (const auto& m : fine.members()) {
      VertexSet s = m.vertices;
      s.insert(k->vertices()[rng() % k->vertices().size()]);
      grown.push_back({m.name, s});
    }
    Cover coarse(k, grown);
    auto ab = is_close(phi, psi, fine);
    EXPECT_EQ(ab.ok, is_close(psi, phi, fine).ok);
    if (ab.ok) EXPECT_TRUE(is_close(phi, psi, coarse).ok);
  }
}

TEST(VerifyHomotopy, Examples) {
  auto tri = build::ref({"a b c"});
  auto id = identity_morphism(tri, 2, Z);
  auto zero = ChainHomotopy::zero(tri, tri, 1, Z);
  EXPECT_TRUE(verify_homotopy(zero, id, id).ok);

  // Cone from vertex a: D(v) = -[a,v], D([u,v]) = -[a,u,v], zero on faces containing a.
  SimplicialMap to_a(tri, tri, {{"a", "a"}, {"b", "a"}, {"c", "a"}});
  auto constant = induced_morphism(to_a, 2, Z);
  std::map<Simplex, Chain> cone;
  for (const auto& s : tri->all_simplexes()) {
    if (s.size() > 2) continue;
    if (s[0] == "a") {
      cone[s] = Chain(dimension_of(s) + 1);
    } else {
      std::vector<Vertex> ordered{"a"};
      ordered.insert(ordered.end(), s.begin(), s.end());
      cone[s] = Chain::oriented(ordered, Scalar(-1), Z);
    }
  }
  ChainHomotopy d(tri, tri, 1, Z, cone);
  auto rep = verify_homotopy(d, constant, id);
  EXPECT_TRUE(rep.ok) << (rep.violations.empty() ? "" : rep.violations[0].message);

  auto bad = verify_homotopy(zero, id, constant);
  EXPECT_FALSE(bad.ok);
  EXPECT_EQ(bad.violations.front().simplex, (Simplex{"b"}));

  Cover whole(tri, {{"all", tri->vertex_set()}});
  auto with_cover = verify_homotopy(d, constant, id, &whole);
  ASSERT_TRUE(with_cover.smallness);
  EXPECT_TRUE(with_cover.smallness->ok);
}

TEST(InducedMorphism, Examples) {
  auto edge = build::ref({"a b"});
  auto id = induced_morphism(SimplicialMap::identity(edge), 1, Z);
  EXPECT_EQ(id, identity_morphism(edge, 1, Z));

  auto point = build::ref({"v"});
  SimplicialMap collapse(edge, point, {{"a", "v"}, {"b", "v"}});
  EXPECT_TRUE(induced_morphism(collapse, 1, Z)({"a", "b"}).is_zero());

  auto target = build::ref({"p q"});
  SimplicialMap swap(edge, target, {{"a", "q"}, {"b", "p"}});
  EXPECT_EQ(induced_morphism(swap, 1, Z)({"a", "b"}), build::chain({{-1, "p q"}}, Z));
  EXPECT_TRUE(is_correct(induced_morphism(swap, 1, Z)));
}

TEST(InducedMorphism, RespectsComposition) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    auto k = random_instances::random_complex(rng, 7, 3, "v");
    auto f = random_instances::random_self_map(rng, k);
    auto g = random_instances::random_self_map(rng, k);
    for (const Ring& ring : {Z, Ring::integers_mod(3)}) {
      auto lhs = induced_morphism(compose(g, f), 3, ring);
      auto rhs = compose(induced_morphism(g, 3, ring), induced_morphism(f, 3, ring));
      EXPECT_EQ(lhs.assignment(), rhs.assignment());
    }
  }
}
