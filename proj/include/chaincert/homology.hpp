#pragma once

#include "chaincert/chain.hpp"
#include "chaincert/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace chaincert {

/// Reduced homology group H_k(K; G) as a direct sum of cyclic modules, one per
/// generator. Over Z an order of 0 means a free summand; over Q every order is
/// 0; over Z/m the orders divide m and a summand of order m counts as free.
struct HomologyGroup {
  Ring ring = Ring::integers();
  int degree = 0;
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;  // invariant factors > 1, each dividing the next
  std::vector<Chain> generators;
  std::vector<Integer> orders;

  bool is_trivial() const { return generators.empty(); }
  /// "0", "Z^2 + Z/2", "Q^1", "(Z/4)^1 + Z/2".
  std::string describe() const;
};

/// Matrix of d_k : C_k -> C_{k-1} in the canonical simplex order. d_0 is the
/// augmentation row, which makes degree 0 reduced.
RingMatrix boundary_matrix(const SimplicialComplex& complex, int k, const Ring& ring);
Column to_column(const Chain& c, const SimplicialComplex& complex);
Chain from_column(const Column& x, const SimplicialComplex& complex, int k, const Ring& ring);

/// Cycle in the reduced sense: dc = 0, or augmentation 0 in degree 0.
bool is_cycle(const Chain& c, const Ring& ring);

HomologyGroup homology(const SimplicialComplex& complex, int k, const Ring& ring);

/// Expresses cycles of a complex on the generators of one of its homology
/// groups. Each coordinate is reduced modulo the generator's order.
class HomologyCoordinates {
 public:
  HomologyCoordinates(const SimplicialComplex& complex, const HomologyGroup& group);
  /// Throws PreconditionFailure if c is not a cycle carried by the complex.
  std::vector<Scalar> operator()(const Chain& c) const;

 private:
  const SimplicialComplex* complex_;
  HomologyGroup group_;
  std::optional<LinearSystem> system_;
};

struct InducedMap {
  HomologyGroup source;
  HomologyGroup target;
  /// Column j holds the coordinates of phi(g_j) on the target generators.
  RingMatrix matrix;
  bool is_zero() const { return matrix.is_zero(); }
};

/// H_k(phi). Throws PreconditionFailure if phi breaks the chain-morphism law
/// or is not defined through degree k + 1. Each column is recomputed from a
/// shifted representative; a disagreement throws Error.
InducedMap induced_map(const ChainMorphism& phi, int k);
InducedMap induced_map_of_inclusion(const ComplexRef& sub, const ComplexRef& super, int k, const Ring& ring);

/// Factored d_{k+1} of one region, for repeated fills.
class CycleFiller {
 public:
  CycleFiller(const SimplicialComplex& region, int k, const Ring& ring);
  int degree() const { return k_; }
  /// x with dx = c carried by the region, or nothing if c does not bound
  /// there. Throws PreconditionFailure if c is not a k-cycle in the region.
  std::optional<Chain> fill(const Chain& c) const;

 private:
  const SimplicialComplex* region_;
  int k_;
  Ring ring_;
  LinearSystem system_;
};

std::optional<Chain> fill_cycle(const Chain& c, const SimplicialComplex& region, const Ring& ring);

struct TrivialityReport {
  bool trivial = true;
  int degree = 0;
  std::vector<Chain> generators;  // generators of H_k(V) that were filled
  std::vector<Chain> fillings;    // one per filled generator, carried by U
  std::optional<Chain> witness;   // first generator that does not bound in U
};

/// Whether H_k(V) -> H_k(U) is zero, decided by filling each generator of
/// H_k(V) inside U. Throws PreconditionFailure unless V is a subcomplex of U.
TrivialityReport is_trivial_induced(const SimplicialComplex& v, const SimplicialComplex& u, int k, const Ring& ring);

}  // namespace chaincert
