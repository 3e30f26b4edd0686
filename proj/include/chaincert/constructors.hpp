#pragma once

#include "chaincert/errors.hpp"
#include "chaincert/homology.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace chaincert {

/// A cycle that bounds in none of the regions allowed for a simplex.
class NotFillable : public Error {
 public:
  NotFillable(Simplex simplex, Chain cycle, int level, std::vector<std::string> regions);

  const Simplex& simplex() const { return simplex_; }
  const Chain& cycle() const { return cycle_; }
  int degree() const { return cycle_.dim(); }
  /// Level of the cover the regions were taken from.
  int level() const { return level_; }
  /// Member names tried, in the order tried.
  const std::vector<std::string>& regions() const { return regions_; }

 private:
  Simplex simplex_;
  Chain cycle_;
  int level_;
  std::vector<std::string> regions_;
};

/// A lift was built but is not close to the morphism it should approximate.
class CloseFail : public Error {
 public:
  explicit CloseFail(CloseReport report);
  const CloseReport& report() const { return report_; }

 private:
  CloseReport report_;
};

class EmptyA : public PreconditionFailure {
 public:
  EmptyA() : PreconditionFailure("the subcomplex A has no vertices") {}
};

class NoCanonicalAssignment : public InputError {
 public:
  using InputError::InputError;
};

/// Extend phi_l : C(L) -> C(X) to all of C(K), where X is the source of f and
/// the tower lives on the target of f.
struct RealizationProblem {
  ComplexRef k;
  ComplexRef l;
  ChainMorphism phi_l;
  SimplicialMap f;
  FiltrationTower tower;
  Ring ring;
  /// Optional target-side vertex sets; a region holding guide[sigma] is
  /// preferred for sigma.
  std::map<Simplex, VertexSet> guide;
};

struct FillRecord {
  Simplex simplex;
  int level = 0;
  std::string member;
  Chain cycle;
  Chain filling;
};

struct ExtensionCertificate {
  ChainMorphism phi;
  /// sigma -> member of the level-(dim sigma) cover whose preimage carries phi
  /// on every face of sigma.
  std::map<Simplex, std::string> cover_assignment;
  std::vector<FillRecord> fill_log;  // in processing order
};

/// Checks the hypotheses on p and throws PreconditionFailure with the first
/// one that fails: L a subcomplex of K holding every vertex, phi_l a correct
/// chain morphism into the source of f defined on all of L, each simplex's
/// data on L inside one level-0 preimage member, no tower defects, f onto the
/// target vertices and dim K at most n + 1.
void check_realization_problem(const RealizationProblem& p);

/// Fills the simplexes of K outside L by increasing dimension. For a
/// k-simplex the boundary cycle is filled inside f^{-1}(R) for a level-k
/// member R holding the image of the faces' carriers. Candidates, without
/// repeats: the pairs of level-(k-1) members holding that image in name
/// order, the pairs and then the witnesses of the facets' members in facet
/// order, then every level-k member in name order. Always succeeds when
/// star_pair_failure() finds nothing for k = 0..n.
ExtensionCertificate extend_realization(const RealizationProblem& p);

struct CertificateCheck {
  bool ok = true;
  std::vector<std::string> problems;
};

/// Re-checks a certificate against its problem: restriction to L, the
/// chain-morphism law, the recorded members and smallness for the top cover.
CertificateCheck verify_extension(const RealizationProblem& p, const ExtensionCertificate& cert);

struct LiftResult {
  ExtensionCertificate extension;
  ComplexRef l;            // L with any missing vertices added
  ChainMorphism phi_l;     // phi_l with lifted vertices added
  CloseReport closeness;   // phi against f_# phi_K for the top cover
};

/// phi : C(K) -> C(Y) on the target side, phi_l its partial lift. Missing
/// vertices of L are lifted to the least vertex of their fiber. Throws
/// CloseFail if the lift is not close to phi for the top cover.
LiftResult approximate_lift(const ComplexRef& k, const ComplexRef& l, const ChainMorphism& phi_l,
                            const ChainMorphism& phi, const SimplicialMap& f, const FiltrationTower& tower,
                            const Ring& ring);

/// Re-checks a lift: the extension, phi|L = f_# phi_l, and closeness.
CertificateCheck verify_lift(const ComplexRef& k, const ChainMorphism& phi, const SimplicialMap& f,
                             const FiltrationTower& tower, const LiftResult& lift);

struct HomotopyProblem {
  ChainMorphism phi;
  ChainMorphism psi;
  ComplexRef a;                      // subcomplex of the source, may be empty
  std::optional<ChainHomotopy> d_a;  // required when a is nonempty
  SimplicialMap f;
  FiltrationTower tower;
  Ring ring;
};

struct HomotopyCertificate {
  ChainHomotopy d;
  /// sigma -> member of the level-(dim sigma + 1) cover whose preimage holds
  /// |D|, |phi| and |psi| on every face of sigma.
  std::map<Simplex, std::string> cover_assignment;
  std::vector<FillRecord> fill_log;
};

/// Star form of the level-k pair condition: for each V in U_k, St(V, U_k) lies
/// in p_k(V) and f^{-1}(St(V, U_k)) -> f^{-1}(p_k(V)) is zero on H_k. With f
/// onto the vertices, f^{-1}(St(V, U_k)) is the star of f^{-1}(V) in the
/// preimage cover. Returns the first member where it fails.
std::optional<std::string> star_pair_failure(const SimplicialMap& f, const FiltrationTower& tower, int k,
                                             const Ring& ring);
/// star_pair_failure at k = 0, a hypothesis of build_homotopy.
std::optional<std::string> degree_zero_star_failure(const SimplicialMap& f, const FiltrationTower& tower,
                                                    const Ring& ring);

void check_homotopy_problem(const HomotopyProblem& p);

/// D with dD + Dd = phi - psi through degree n, extending D_A. Degree k fills
/// phi(s) - psi(s) - D(ds) inside f^{-1}(R) for a level-(k+1) member R chosen
/// as in extend_realization.
HomotopyCertificate build_homotopy(const HomotopyProblem& p);

CertificateCheck verify_homotopy_certificate(const HomotopyProblem& p, const HomotopyCertificate& cert);

struct DugundjiProblem {
  ComplexRef m;
  VertexSet a;
  ChainMorphism phi;  // on full_subcomplex(m, a), into the source of f
  SimplicialMap f;
  FiltrationTower tower;
  Ring ring;
  int radius = 1;     // negative: every vertex reachable from A
};

struct DugundjiResult {
  ComplexRef w;                      // (n+1)-skeleton of the full subcomplex on W
  std::map<Vertex, Vertex> nearest;  // w -> a(w) for w outside A
  std::map<Vertex, int> distance;    // edge-path distance to A
  /// w with rho(a(w), w) < 2 rho(w, A) failing; empty when all hold.
  std::vector<Vertex> factor_two_failures;
  ExtensionCertificate extension;
  RealizationProblem problem;        // the extension problem that was solved
};

DugundjiResult dugundji_extend(const DugundjiProblem& p);

/// Oriented simplex on the array, or the zero chain if a name repeats.
Chain theta(const std::vector<Vertex>& array, const Ring& ring);

struct NerveResult {
  ComplexRef nerve;
  ExtensionCertificate big_phi;      // C(K) -> C(X)
  RealizationProblem problem;
  std::map<Vertex, Vertex> kappa;    // vertex of Y -> member name
  ChainMorphism lambda_kappa;        // theta applied to kappa, C(Y) -> C(K)
  CloseReport closeness;             // inclusion Y -> Z against f_# Phi lambda_kappa
};

/// Y a subcomplex of the target Z of f, cover a cover of Y. K is the nerve
/// truncated to dimension n + 1. Phi sends each member V to the least vertex
/// of f^{-1}(V) and is completed by extend_realization. kappa sends a vertex
/// to the first member holding its closed star, or failing that the first
/// member holding it. Throws PreconditionFailure if theta of kappa leaves K.
NerveResult nerve_factorization(const ComplexRef& y, const Cover& cover, const SimplicialMap& f,
                                const FiltrationTower& tower, const Ring& ring);

}  // namespace chaincert
