#pragma once

#include "chaincert/constructors.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace chaincert {

/// Random instance for the constructors. All families are deterministic in
/// the seed.
///
///   uvn             contractible Y, X an inflation of Y with fibers of one
///                   or two vertices, K a copy of Y, L the vertices and some
///                   edges lifted into random fiber vertices.
///   prism           X = Y x [0,1] with the staircase triangulation over a
///                   contractible Y of dimension <= 2; K = Y, phi the identity
///                   of Y and L a few vertices lifted at random.
///   obstruction-h1  K the cone over a cycle X, L = X plus the apex.
///   obstruction-h2  K the cone over a triangulated 2-sphere X, L likewise.
///
/// For uvn and prism the tower has U_0 = maximal simplexes of Y and each later
/// level the stars of the previous one, coarsened to {all} from the first
/// level where star_pair_failure() reports a member. Obstruction instances
/// use the trivial tower.
struct GeneratedInstance {
  std::string family;
  std::uint64_t seed = 0;
  Ring ring;
  ComplexRef x;
  ComplexRef y;
  SimplicialMap f;
  FiltrationTower tower;
  RealizationProblem problem;  // every vertex of K lifted
  /// prism only: phi on K into Y, and the partial lift handed to
  /// approximate_lift, which may omit vertices.
  std::optional<ChainMorphism> target_morphism;
  ComplexRef lift_l;
  std::optional<ChainMorphism> lift_phi_l;
};

std::vector<std::string> instance_families();

/// Throws InputError for an unknown family.
GeneratedInstance generate_instance(const std::string& family, std::uint64_t seed, const Ring& ring);

/// Random collapsible complex: a simplex of dimension 1..max_dim grown by
/// coning new vertices over existing simplexes of dimension < max_dim while
/// the size stays within max_size. Vertices are prefix0, prefix1, ...
SimplicialComplex random_collapsible(std::mt19937_64& rng, int max_vertices, int max_dim, std::size_t max_size,
                                     const std::string& prefix);

/// Tower on y as described above, for the map f onto y, with n + 2 levels.
FiltrationTower star_tower(const SimplicialMap& f, int n, const Ring& ring);

}  // namespace chaincert
