#include "chaincert/errors.hpp"
#include "chaincert/uvn.hpp"
#include "support/builders.hpp"
#include "support/corpus.hpp"
#include "support/random_instances.hpp"

#include <gtest/gtest.h>

#include <cstdio>

using namespace chaincert;

namespace {
const Ring Z = Ring::integers();

std::string pad(int i) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "%02d", i);
  return buf;
}

// 12-gon on c00..c11 with U_0 = closed vertex stars and U_1 = arcs of seven
// vertices, which contain the U_0-star of the matching member.
FiltrationTower polygon_tower(const ComplexRef& circle, int arc_levels) {
  const int m = 12;
  auto arc = [&](int i, int radius) {
    VertexSet s;
    for (int d = -radius; d <= radius; ++d) s.insert("c" + pad(((i + d) % m + m) % m));
    return s;
  };
  std::vector<CoverMember> small, wide;
  std::map<std::string, std::string> ident;
  for (int i = 0; i < m; ++i) {
    small.push_back({"m" + pad(i), arc(i, 1)});
    wide.push_back({"m" + pad(i), arc(i, 3)});
    ident["m" + pad(i)] = "m" + pad(i);
  }
  std::vector<Cover> levels{Cover(circle, small), Cover(circle, wide)};
  std::vector<std::map<std::string, std::string>> w{ident}, p{ident};
  for (int extra = 0; extra < arc_levels; ++extra) {
    levels.push_back(Cover(circle, {{"all", circle->vertex_set()}}));
    std::map<std::string, std::string> to_all;
    for (const auto& mem : levels[levels.size() - 2].members()) to_all[mem.name] = "all";
    w.push_back(to_all);
    p.push_back(to_all);
  }
  return FiltrationTower(circle, levels, w, p);
}

ComplexRef polygon() {
  std::vector<std::string> edges;
  for (int i = 0; i < 12; ++i) edges.push_back("c" + pad(i) + " c" + pad((i + 1) % 12));
  return build::ref(edges);
}
}  // namespace

TEST(CheckUvnPair, Examples) {
  auto simplex = build::complex({"a b c d"});
  auto point = build::complex({"a"});
  EXPECT_TRUE(check_uvn_pair(point, simplex, 3, Z).ok);

  auto circle = build::complex({"a b", "b c", "a c"});
  auto r = check_uvn_pair(circle, circle, 1, Z);
  EXPECT_FALSE(r.ok);
  ASSERT_TRUE(r.failing_degree);
  EXPECT_EQ(*r.failing_degree, 1);
  EXPECT_TRUE(r.degrees.back().witness);

  auto disk = build::complex({"a b c"});
  EXPECT_TRUE(check_uvn_pair(circle, disk, 1, Z).ok);
  EXPECT_THROW(check_uvn_pair(disk, circle, 1, Z), PreconditionFailure);
}

TEST(CheckUvnPair, AcyclicSourceAlwaysPasses) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    auto u = random_instances::random_complex(rng, 7, 3, "v");
    const Simplex facet = u->maximal_simplexes().front();
    auto cone = full_subcomplex(*u, VertexSet(facet.begin(), facet.end()));
    for (const Ring& ring : {Z, Ring::integers_mod(2), Ring::rationals()}) {
      EXPECT_TRUE(check_uvn_pair(cone, *u, 3, ring).ok);
    }
  }
}

TEST(CheckUvnPair, MonotoneInTarget) {
  // Growing U keeps trivial pairs trivial.
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 60; ++trial) {
    auto u = random_instances::random_complex(rng, 7, 2, "v");
    VertexSet sub, mid;
    for (const auto& v : u->vertices()) {
      if (rng() % 2) sub.insert(v);
      if (rng() % 3) mid.insert(v);
    }
    mid.insert(sub.begin(), sub.end());
    auto v = full_subcomplex(*u, sub);
    auto w = full_subcomplex(*u, mid);
    if (check_uvn_pair(v, w, 2, Z).ok) EXPECT_TRUE(check_uvn_pair(v, *u, 2, Z).ok);
  }
}

TEST(CheckUvnMap, Examples) {
  auto simplex = build::ref({"a b c"});
  EXPECT_TRUE(check_uvn_map(SimplicialMap::identity(simplex), FiltrationTower::trivial(simplex, 2), 2, Z).ok);

  auto prism = build::ref({"a0 b0 b1", "a0 a1 b1"});
  auto edge = build::ref({"a b"});
  SimplicialMap collapse(prism, edge, {{"a0", "a"}, {"a1", "a"}, {"b0", "b"}, {"b1", "b"}});
  auto stars = open_star_cover(edge);
  FiltrationTower star_tower(edge, {stars, stars, stars}, {{{"a", "a"}, {"b", "b"}}, {{"a", "a"}, {"b", "b"}}},
                             {{{"a", "a"}, {"b", "b"}}, {{"a", "a"}, {"b", "b"}}});
  auto prism_report = check_uvn_map(collapse, star_tower, 1, Z);
  EXPECT_TRUE(prism_report.ok);
  EXPECT_EQ(prism_report.obligations.size(), 4u);

  auto circle = build::ref({"a b", "b c", "a c"});
  auto point = build::ref({"p"});
  SimplicialMap crush(circle, point, {{"a", "p"}, {"b", "p"}, {"c", "p"}});
  auto bad = check_uvn_map(crush, FiltrationTower::trivial(point, 1), 1, Z);
  EXPECT_FALSE(bad.ok);
  EXPECT_TRUE(bad.defects.empty());
  EXPECT_FALSE(bad.homologically_ok());
  EXPECT_EQ(bad.obligations.back().level, 1);
  EXPECT_FALSE(bad.obligations.back().result.trivial);
  // Only H_0 is checked at n = 0.
  EXPECT_TRUE(check_uvn_map(crush, FiltrationTower::trivial(point, 0), 0, Z).ok);
}

TEST(CheckUvnMap, Preconditions) {
  auto circle = build::ref({"a b", "b c", "a c"});
  auto edge = build::ref({"a b"});
  SimplicialMap into(edge, circle, {{"a", "a"}, {"b", "b"}});
  EXPECT_THROW(check_uvn_map(into, FiltrationTower::trivial(circle, 1), 1, Z), PreconditionFailure);
  EXPECT_THROW(check_uvn_map(SimplicialMap::identity(circle), FiltrationTower::trivial(circle, 0), 1, Z),
               PreconditionFailure);
  EXPECT_THROW(check_uvn_map(SimplicialMap::identity(circle), FiltrationTower::trivial(edge, 1), 1, Z),
               PreconditionFailure);
}

TEST(CheckUvnMap, DefectsFailTheCheck) {
  auto edge = build::ref({"a b"});
  Cover points(edge, {{"a", build::vset("a")}, {"b", build::vset("b")}});
  // Each closed star is the whole edge, which the single points do not contain.
  FiltrationTower tower(edge, {open_star_cover(edge), points}, {{{"a", "a"}, {"b", "b"}}}, {{{"a", "a"}, {"b", "b"}}});
  auto r = check_uvn_map(SimplicialMap::identity(edge), tower, 0, Z);
  EXPECT_FALSE(r.ok);
  EXPECT_TRUE(r.homologically_ok());
  EXPECT_EQ(r.defects.size(), 4u);
  EXPECT_TRUE(r.obligations.empty());
}

TEST(CheckLcn, Examples) {
  auto circle = polygon();
  EXPECT_TRUE(check_lcn(circle, polygon_tower(circle, 0), 0, Z).ok);
  // Arcs have no H_1, so the extra level only pairs arcs with the whole circle.
  EXPECT_TRUE(check_lcn(circle, polygon_tower(circle, 1), 1, Z).ok);
  // The whole circle paired with itself at degree 1 fails.
  EXPECT_FALSE(check_lcn(circle, FiltrationTower::trivial(circle, 1), 1, Z).ok);
}

TEST(CheckApproxLcn, Examples) {
  auto path = build::complex({"a b", "b c"});
  auto ends = build::complex({"a", "c"});
  auto r0 = check_approx_lcn_degree(ends, ends, path, 0, Z);
  EXPECT_TRUE(r0.ok);
  ASSERT_EQ(r0.entries.size(), 1u);

  auto circle = build::complex({"a b", "b c", "a c"});
  auto disk = build::complex({"a b c"});
  auto r1 = check_approx_lcn(circle, circle, disk, 1, Z);
  EXPECT_TRUE(r1.ok);
  for (const auto& e : r1.entries) {
    ASSERT_TRUE(e.companion);
    EXPECT_EQ(*e.companion, e.cycle);
    ASSERT_TRUE(e.filling);
    EXPECT_EQ(boundary(*e.filling, Z), e.cycle);
  }

  auto r2 = check_approx_lcn(circle, circle, circle, 1, Z);
  EXPECT_FALSE(r2.ok);
  EXPECT_FALSE(check_approx_lcn(circle, circle, circle, 1, Z, VertexMatch::relaxed).ok);
  EXPECT_THROW(check_approx_lcn(disk, circle, disk, 1, Z), PreconditionFailure);
}

TEST(CheckApproxLcn, TorsionCompanion) {
  // In the projective plane an odd 1-cycle does not bound but twice it does,
  // on the same vertices.
  auto rp2 = corpus::from_facets(corpus::projective_plane());
  auto skeleton = rp2.skeleton(1);
  EXPECT_FALSE(is_trivial_induced(skeleton, rp2, 1, Z).trivial);
  auto r = check_approx_lcn_degree(skeleton, skeleton, rp2, 1, Z);
  EXPECT_TRUE(r.ok);
  bool saw_multiple = false;
  for (const auto& e : r.entries) {
    ASSERT_TRUE(e.companion);
    EXPECT_EQ(carrier_vertices(*e.companion), carrier_vertices(e.cycle));
    EXPECT_EQ(boundary(*e.filling, Z), *e.companion);
    if (!(*e.companion == e.cycle)) saw_multiple = true;
  }
  EXPECT_TRUE(saw_multiple);
}

TEST(CheckApproxLcn, Properties) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    auto u = random_instances::random_complex(rng, 7, 2, "v");
    VertexSet sub;
    for (const auto& v : u->vertices()) {
      if (rng() % 3) sub.insert(v);
    }
    auto v = full_subcomplex(*u, sub);
    auto strict = check_approx_lcn(v, v, *u, 1, Z);
    auto relaxed = check_approx_lcn(v, v, *u, 1, Z, VertexMatch::relaxed);
    if (check_uvn_pair(v, *u, 1, Z).ok) EXPECT_TRUE(strict.ok);
    if (strict.ok) EXPECT_TRUE(relaxed.ok);
    for (const auto& e : relaxed.entries) {
      if (!e.ok) continue;
      EXPECT_TRUE(subset_of(carrier_vertices(*e.companion), carrier_vertices(e.cycle)));
      EXPECT_EQ(boundary(*e.filling, Z), *e.companion);
      EXPECT_TRUE(carried_by(*e.filling, *u));
    }
  }
}
