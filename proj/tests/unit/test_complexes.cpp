#include "chaincert/complex.hpp"
#include "chaincert/errors.hpp"
#include "support/builders.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace chaincert;

TEST(ValidateComplex, ClosureOfTriangle) {
  auto k = build::complex({"a b c"});
  EXPECT_EQ(k.size(), 7u);
  EXPECT_EQ(k.dimension(), 2);
}

TEST(ValidateComplex, PointFromVertexList) {
  auto k = validate_complex({"a"}, {});
  EXPECT_EQ(k.size(), 1u);
  EXPECT_EQ(k.dimension(), 0);
}

TEST(ValidateComplex, HollowTriangle) {
  auto k = build::complex({"a b", "b c", "a c"});
  EXPECT_EQ(k.size(), 6u);
  EXPECT_EQ(k.count(2), 0u);
}

TEST(ValidateComplex, Errors) {
  EXPECT_THROW(validate_complex({"a", "b"}, {{"a", "z"}}), InputError);
  EXPECT_THROW(validate_complex({}, {{"a", "a"}}), InputError);
  EXPECT_THROW(validate_complex({}, {{}}), InputError);
  EXPECT_THROW(validate_complex({}, {{"a", "b", "c"}}, 1), InputError);
}

TEST(ValidateComplex, Idempotent) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::vector<Vertex>> raw;
    for (int i = 0; i < 5; ++i) {
      std::vector<Vertex> s;
      for (int v = 0; v < 7; ++v)
        if (rng() % 3 == 0) s.push_back("v" + std::to_string(v));
      if (!s.empty()) raw.push_back(s);
    }
    auto k = validate_complex({}, raw);
    auto again = validate_complex(k.vertices(), k.all_simplexes());
    EXPECT_EQ(k, again);
    EXPECT_EQ(validate_complex(k.vertices(), k.maximal_simplexes()), k);
  }
}

TEST(Orient, PermutationSign) {
  EXPECT_EQ(orient({"a", "b", "c"}).first, 1);
  EXPECT_EQ(orient({"b", "a", "c"}).first, -1);
  EXPECT_EQ(orient({"c", "a", "b"}).first, 1);
}

TEST(Star, Examples) {
  auto k = build::ref({"A", "B"});
  Cover disjoint(k, {{"A", {"A"}}, {"B", {"B"}}});
  EXPECT_EQ(star({"A"}, disjoint), build::vset("A"));

  auto path = build::ref({"0 1", "1 2"});
  Cover c(path, {{"p", build::vset("0 1")}, {"q", build::vset("1 2")}});
  EXPECT_EQ(star(build::vset("0 1"), c), build::vset("0 1 2"));

  auto tri = build::ref({"0 1 2 3"});
  Cover three(tri, {{"x", build::vset("0 1")}, {"y", build::vset("1 2")}, {"z", build::vset("2 0 3")}});
  EXPECT_EQ(star(build::vset("0 1"), three), build::vset("0 1 2 3"));
  EXPECT_THROW(star(build::vset("9"), three), PreconditionFailure);
}

TEST(StarRefinement, Examples) {
  auto path = build::ref({"0 1", "1 2"});
  Cover whole(path, {{"all", path->vertex_set()}});
  EXPECT_TRUE(check_star_refinement(whole, whole).ok);

  Cover singletons(path, {{"s0", {"0"}}, {"s1", {"1"}}, {"s2", {"2"}}});
  auto v = check_star_refinement(singletons, whole);
  EXPECT_TRUE(v.ok);
  EXPECT_EQ(v.witness.at("s1"), "all");

  Cover pq(path, {{"p", build::vset("0 1")}, {"q", build::vset("1 2")}});
  auto bad = check_star_refinement(pq, pq);
  EXPECT_FALSE(bad.ok);
  EXPECT_EQ(bad.counterexample, "p");
}

TEST(StarRefinement, ImpliesMemberwiseRefinement) {
  std::mt19937_64 rng(4);
  auto k = build::ref({"0 1 2", "2 3", "3 4 5", "5 0"});
  const auto verts = k->vertices();
  auto random_cover = [&](int n) {
    std::vector<CoverMember> ms;
    for (int i = 0; i < n; ++i) {
      VertexSet s;
      for (const auto& v : verts)
        if (rng() % 2) s.insert(v);
      if (s.empty()) s.insert(verts[rng() % verts.size()]);
      ms.push_back({"m" + std::to_string(i), s});
    }
    ms.push_back({"z", {verts.begin(), verts.end()}});
    return Cover(k, ms);
  };
  for (int trial = 0; trial < 100; ++trial) {
    Cover fine = random_cover(3), coarse = random_cover(3);
    auto v = check_star_refinement(fine, coarse);
    if (!v.ok) continue;
    for (const auto& m : fine.members()) EXPECT_NE(coarse.first_containing(m.vertices), nullptr);
  }
}

TEST(Nerve, Examples) {
  auto two = build::ref({"a", "b"});
  Cover disjoint(two, {{"A", {"a"}}, {"B", {"b"}}});
  auto n1 = nerve(disjoint, 3);
  EXPECT_EQ(n1.vertices().size(), 2u);
  EXPECT_EQ(n1.count(1), 0u);

  auto hollow = build::ref({"0 1", "1 2", "0 2"});
  Cover edges(hollow, {{"A", build::vset("0 1")}, {"B", build::vset("1 2")}, {"C", build::vset("0 2")}});
  auto n2 = nerve(edges, 3);
  EXPECT_EQ(n2, build::complex({"A B", "B C", "A C"}));

  auto tri = build::ref({"0 1 2"});
  Cover shared(tri, {{"A", build::vset("0 1")}, {"B", build::vset("0 2")}, {"C", build::vset("0")}});
  auto n3 = nerve(shared, 1);
  EXPECT_EQ(n3, build::complex({"A B", "B C", "A C"}));
  EXPECT_EQ(nerve(shared, 2).count(2), 1u);
}

TEST(Nerve, MonotoneUnderAddingMembers) {
  std::mt19937_64 rng(8);
  auto k = build::ref({"0 1 2 3", "3 4", "4 5 6"});
  const auto verts = k->vertices();
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<CoverMember> ms{{"all", {verts.begin(), verts.end()}}};
    for (int i = 0; i < 4; ++i) {
      VertexSet s;
      for (const auto& v : verts)
        if (rng() % 3 == 0) s.insert(v);
      if (s.empty()) s.insert(verts[0]);
      ms.push_back({"m" + std::to_string(i), s});
    }
    auto small = nerve(Cover(k, ms), 3);
    EXPECT_EQ(small.vertices().size(), ms.size());
    ms.push_back({"extra", build::vset("2 4")});
    auto big = nerve(Cover(k, ms), 3);
    EXPECT_TRUE(small.is_subcomplex_of(big));
  }
}

TEST(PreimageCover, Examples) {
  auto k = build::ref({"a b c"});
  Cover stars = open_star_cover(k);
  auto id = SimplicialMap::identity(k);
  auto pre = preimage_cover(id, stars);
  ASSERT_EQ(pre.size(), stars.size());
  for (std::size_t i = 0; i < pre.size(); ++i) {
    EXPECT_EQ(pre.members()[i].name, stars.members()[i].name);
    EXPECT_EQ(pre.members()[i].vertices, stars.members()[i].vertices);
  }

  auto edge = build::ref({"a b"});
  auto point = build::ref({"v"});
  SimplicialMap collapse(edge, point, {{"a", "v"}, {"b", "v"}});
  Cover pc(point, {{"V", {"v"}}});
  EXPECT_EQ(preimage_cover(collapse, pc).member("V").vertices, build::vset("a b"));

  // Prism over an edge, projected to the edge.
  auto prism = build::ref({"a0 a1 b1", "a0 b0 b1"});
  auto base = build::ref({"a b"});
  SimplicialMap proj(prism, base, {{"a0", "a"}, {"a1", "a"}, {"b0", "b"}, {"b1", "b"}});
  Cover base_stars = open_star_cover(base);
  EXPECT_EQ(preimage_cover(proj, base_stars).member("a").vertices, build::vset("a0 a1 b0 b1"));
  Cover base_points(base, {{"A", {"a"}}, {"B", {"b"}}});
  EXPECT_EQ(preimage_cover(proj, base_points).member("B").vertices, build::vset("b0 b1"));

  auto two = build::ref({"x", "y"});
  SimplicialMap not_onto(point, two, {{"v", "x"}});
  Cover two_points(two, {{"X", {"x"}}, {"Y", {"y"}}});
  EXPECT_THROW(preimage_cover(not_onto, two_points), PreconditionFailure);
}

TEST(FullSubcomplex, Examples) {
  auto hollow = build::complex({"0 1", "1 2", "0 2"});
  EXPECT_EQ(full_subcomplex(hollow, hollow.vertex_set()), hollow);
  EXPECT_EQ(full_subcomplex(hollow, {"1"}).size(), 1u);
  EXPECT_EQ(full_subcomplex(hollow, build::vset("0 2")), build::complex({"0 2"}));
}

TEST(OpenStarCover, Examples) {
  auto point = build::ref({"p"});
  auto c1 = open_star_cover(point);
  ASSERT_EQ(c1.size(), 1u);
  EXPECT_EQ(c1.members()[0].vertices, build::vset("p"));

  auto edge = build::ref({"a b"});
  auto c2 = open_star_cover(edge);
  EXPECT_EQ(c2.member("a").vertices, build::vset("a b"));
  EXPECT_EQ(c2.member("b").vertices, build::vset("a b"));

  auto hollow = build::ref({"0 1", "1 2", "0 2"});
  for (const auto& m : open_star_cover(hollow).members()) EXPECT_EQ(m.vertices.size(), 3u);
}

TEST(Cover, Validation) {
  auto k = build::ref({"a b"});
  EXPECT_THROW(Cover(k, {{"A", {"a"}}}), InputError);
  EXPECT_THROW(Cover(k, {{"A", {"a", "b"}}, {"A", {"a"}}}), InputError);
  EXPECT_THROW(Cover(k, {{"A", {"a", "b"}}, {"B", {}}}), InputError);
  EXPECT_THROW(Cover(k, {{"A", {"a", "b", "z"}}}), InputError);
}

TEST(SimplicialMap, Validation) {
  auto edge = build::ref({"a b"});
  auto two = build::ref({"x", "y"});
  EXPECT_THROW(SimplicialMap(edge, two, {{"a", "x"}, {"b", "y"}}), InputError);
  EXPECT_THROW(SimplicialMap(edge, two, {{"a", "x"}}), InputError);
  SimplicialMap ok(edge, two, {{"a", "x"}, {"b", "x"}});
  EXPECT_FALSE(ok.is_vertex_surjective());
  auto id = SimplicialMap::identity(edge);
  EXPECT_TRUE(id.is_surjective());
}

TEST(Tower, DefectsAndValidation) {
  auto path = build::ref({"0 1", "1 2"});
  Cover pq(path, {{"p", build::vset("0 1")}, {"q", build::vset("1 2")}});
  Cover whole(path, {{"all", path->vertex_set()}});
  FiltrationTower good(path, {pq, whole}, {{{"p", "all"}, {"q", "all"}}}, {{{"p", "all"}, {"q", "all"}}});
  EXPECT_TRUE(tower_defects(good).empty());
  EXPECT_EQ(good.n(), 0);

  FiltrationTower bad(path, {pq, pq}, {{{"p", "p"}, {"q", "q"}}}, {{{"p", "p"}, {"q", "p"}}});
  auto defects = tower_defects(bad);
  ASSERT_EQ(defects.size(), 3u);
  EXPECT_EQ(defects[0].kind, TowerDefect::Kind::star_not_contained);
  EXPECT_EQ(defects[2].kind, TowerDefect::Kind::pair_not_nested);

  EXPECT_THROW(FiltrationTower(path, {pq}, {}, {}), InputError);
  EXPECT_THROW(FiltrationTower(path, {pq, whole}, {{{"p", "all"}}}, {{{"p", "all"}, {"q", "all"}}}), InputError);
  EXPECT_THROW(FiltrationTower(path, {pq, whole}, {{{"p", "zz"}, {"q", "all"}}}, {{{"p", "all"}, {"q", "all"}}}),
               InputError);
  EXPECT_TRUE(tower_defects(FiltrationTower::trivial(path, 2)).empty());
}
