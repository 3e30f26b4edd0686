#pragma once

#include "chaincert/homology.hpp"

#include <optional>
#include <string>
#include <vector>

namespace chaincert {

struct UvnPairReport {
  bool ok = true;
  std::vector<TrivialityReport> degrees;  // k = 0..n, stops after the first failure
  std::optional<int> failing_degree;
};

/// H_k(V) -> H_k(U) is zero for every k <= n. Throws PreconditionFailure
/// unless V is a subcomplex of U.
UvnPairReport check_uvn_pair(const SimplicialComplex& v, const SimplicialComplex& u, int n, const Ring& ring);

struct UvnObligation {
  int level = 0;
  std::string member;   // V in U_k
  std::string paired;   // p_k(V) in U_{k+1}
  VertexSet preimage_member;
  VertexSet preimage_paired;
  TrivialityReport result;  // at the single degree k
};

struct UvnMapReport {
  bool ok = true;
  std::vector<TowerDefect> defects;
  std::vector<UvnObligation> obligations;  // by level, then member name
  bool homologically_ok() const;
};

/// For each k <= n and each V in U_k: f^{-1}(V) -> f^{-1}(p_k(V)) is trivial
/// on H_k. Pairs with V not inside p_k(V) are reported as tower defects and
/// skipped. Throws PreconditionFailure if the tower is not on f's target, has
/// fewer than n + 2 levels, or f misses a target vertex.
UvnMapReport check_uvn_map(const SimplicialMap& f, const FiltrationTower& tower, int n, const Ring& ring);
UvnMapReport check_lcn(const ComplexRef& x, const FiltrationTower& tower, int n, const Ring& ring);

enum class VertexMatch { strict, relaxed };

struct ApproxLcnEntry {
  int degree = 0;
  Chain cycle;                     // generator of Z_k(V)
  std::optional<Chain> companion;  // cycle in W on the same vertices
  std::optional<Chain> filling;    // d(filling) = companion inside U
  bool ok = false;
};

struct ApproxLcnReport {
  bool ok = true;
  std::vector<ApproxLcnEntry> entries;  // by degree, then generator order
};

/// For each k <= n and each generator c of Z_k(V), looks for a cycle c' in W
/// that bounds in U and whose vertex set equals that of c (strict) or is a
/// nonempty part of it (relaxed). Throws PreconditionFailure unless
/// V, W, U are nested subcomplexes.
ApproxLcnReport check_approx_lcn(const SimplicialComplex& v, const SimplicialComplex& w, const SimplicialComplex& u,
                                 int n, const Ring& ring, VertexMatch match = VertexMatch::strict);
/// The same search at the single degree k.
ApproxLcnReport check_approx_lcn_degree(const SimplicialComplex& v, const SimplicialComplex& w,
                                        const SimplicialComplex& u, int k, const Ring& ring,
                                        VertexMatch match = VertexMatch::strict);

}  // namespace chaincert
