#include "chaincert/generators.hpp"
#include "chaincert/uvn.hpp"

#include <gtest/gtest.h>

using namespace chaincert;

namespace {
const Ring Z = Ring::integers();
}

TEST(Generators, Deterministic) {
  for (const auto& family : instance_families()) {
    auto a = generate_instance(family, 42, Z);
    auto b = generate_instance(family, 42, Z);
    EXPECT_EQ(*a.x, *b.x);
    EXPECT_EQ(*a.problem.k, *b.problem.k);
    EXPECT_EQ(a.problem.phi_l, b.problem.phi_l);
    EXPECT_EQ(a.f.assignment(), b.f.assignment());
  }
  EXPECT_THROW(generate_instance("torus", 1, Z), InputError);
}

TEST(Generators, RandomCollapsibleIsAcyclic) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    auto k = random_collapsible(rng, 8, 3, 40, "v");
    EXPECT_LE(k.size(), 40u);
    EXPECT_LE(k.dimension(), 3);
    for (int d = 0; d <= k.dimension(); ++d) EXPECT_TRUE(homology(k, d, Z).is_trivial());
  }
}

TEST(Generators, UvnInstancesSatisfyTheirTower) {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    auto inst = generate_instance("uvn", seed, Z);
    const int n = inst.tower.n();
    EXPECT_LE(inst.problem.k->dimension(), n + 1);
    EXPECT_LE(inst.problem.k->size(), 40u);
    for (const auto& v : inst.y->vertices()) {
      auto fiber = full_subcomplex(*inst.x, inst.f.preimage({v}));
      for (int d = 0; d <= fiber.dimension(); ++d) EXPECT_TRUE(homology(fiber, d, Z).is_trivial());
    }
    for (int k = 0; k <= n; ++k) EXPECT_FALSE(star_pair_failure(inst.f, inst.tower, k, Z)) << seed;
    EXPECT_TRUE(check_uvn_map(inst.f, inst.tower, n, Z).ok) << seed;
    auto cert = extend_realization(inst.problem);
    auto check = verify_extension(inst.problem, cert);
    EXPECT_TRUE(check.ok) << seed << ": " << (check.problems.empty() ? "" : check.problems[0]);
  }
}

TEST(Generators, PrismLiftsSucceed) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto inst = generate_instance("prism", seed, Z);
    ASSERT_TRUE(inst.target_morphism && inst.lift_phi_l);
    auto lift = approximate_lift(inst.problem.k, inst.lift_l, *inst.lift_phi_l, *inst.target_morphism, inst.f,
                                 inst.tower, Z);
    auto check = verify_lift(inst.problem.k, *inst.target_morphism, inst.f, inst.tower, lift);
    EXPECT_TRUE(check.ok) << seed << ": " << (check.problems.empty() ? "" : check.problems[0]);
  }
}

TEST(Generators, ObstructionsAreNotFillable) {
  for (const std::string family : {"obstruction-h1", "obstruction-h2"}) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      for (const Ring& ring : {Z, Ring::integers_mod(2), Ring::rationals()}) {
        auto inst = generate_instance(family, seed, ring);
        try {
          extend_realization(inst.problem);
          ADD_FAILURE() << family << " seed " << seed << " extended";
        } catch (const NotFillable& e) {
          EXPECT_EQ(e.degree(), family == "obstruction-h1" ? 1 : 2);
          EXPECT_FALSE(fill_cycle(e.cycle(), *inst.x, ring));
        }
      }
    }
  }
}
