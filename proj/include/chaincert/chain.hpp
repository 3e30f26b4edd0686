#pragma once

#include "chaincert/complex.hpp"
#include "chaincert/ring.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace chaincert {

/// Sparse G-combination of oriented k-simplexes. Simplexes are keyed by their
/// sorted vertex tuple and zero coefficients are never stored, so equal chains
/// compare equal term for term.
class Chain {
 public:
  explicit Chain(int dim = 0) : dim_(dim) {}

  /// coefficient * [ordered...]; the ordering contributes its permutation sign.
  static Chain oriented(const std::vector<Vertex>& ordered, const Scalar& coefficient, const Ring& ring);
  static Chain elementary(const Simplex& s, const Ring& ring) { return oriented(s, Scalar(1), ring); }

  int dim() const { return dim_; }
  const std::map<Simplex, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const Simplex& s) const;

  /// Adds coefficient * s (s sorted, of this chain's dimension).
  void add(const Simplex& s, const Scalar& coefficient, const Ring& ring);
  void add(const Chain& other, const Scalar& factor, const Ring& ring);

  Chain plus(const Chain& other, const Ring& ring) const;
  Chain minus(const Chain& other, const Ring& ring) const;
  Chain scaled(const Scalar& factor, const Ring& ring) const;

  std::string to_string() const;

  friend bool operator==(const Chain& a, const Chain& b) { return a.dim_ == b.dim_ && a.terms_ == b.terms_; }

 private:
  int dim_;
  std::map<Simplex, Scalar> terms_;
};

Chain boundary(const Chain& c, const Ring& ring);
/// Sum of coefficients of a 0-chain. Throws PreconditionFailure otherwise.
Scalar augmentation(const Chain& c, const Ring& ring);

struct Carrier {
  std::set<Simplex> simplexes;
  VertexSet vertices;
};
Carrier carrier(const Chain& c);
VertexSet carrier_vertices(const Chain& c);

/// True iff every simplex of c lies in the complex.
bool carried_by(const Chain& c, const SimplicialComplex& complex);

/// Assignment of chains to the simplexes of a source complex up to degree_cap,
/// landing in the chains of a target complex. Used for both chain morphisms
/// (shift 0) and chain homotopies (shift 1).
class ChainAssignment {
 public:
  /// Throws InputError if the assignment misses a source simplex of dimension
  /// at most degree_cap, has a key outside that range, assigns a chain of the
  /// wrong dimension, or uses simplexes outside the target.
  ChainAssignment(ComplexRef source, ComplexRef target, int degree_cap, Ring ring,
                  std::map<Simplex, Chain> assignment, int shift);

  const ComplexRef& source() const { return source_; }
  const ComplexRef& target() const { return target_; }
  int degree_cap() const { return degree_cap_; }
  const Ring& ring() const { return ring_; }
  const std::map<Simplex, Chain>& assignment() const { return assignment_; }
  /// Largest source dimension actually assigned.
  int top_degree() const { return std::min(degree_cap_, source_->dimension()); }

  bool defined_on(const Simplex& s) const { return assignment_.count(s) > 0; }
  const Chain& operator()(const Simplex& s) const;
  /// Linear extension. Throws PreconditionFailure outside the domain.
  Chain apply(const Chain& c) const;

  friend bool operator==(const ChainAssignment& a, const ChainAssignment& b) {
    return *a.source_ == *b.source_ && *a.target_ == *b.target_ && a.degree_cap_ == b.degree_cap_ &&
           a.ring_ == b.ring_ && a.assignment_ == b.assignment_;
  }

 protected:
  ComplexRef source_, target_;
  int degree_cap_;
  Ring ring_;
  std::map<Simplex, Chain> assignment_;
  int shift_;
};

class ChainMorphism : public ChainAssignment {
 public:
  ChainMorphism(ComplexRef source, ComplexRef target, int degree_cap, Ring ring, std::map<Simplex, Chain> assignment)
      : ChainAssignment(std::move(source), std::move(target), degree_cap, std::move(ring), std::move(assignment), 0) {}
};

class ChainHomotopy : public ChainAssignment {
 public:
  ChainHomotopy(ComplexRef source, ComplexRef target, int degree_cap, Ring ring, std::map<Simplex, Chain> assignment)
      : ChainAssignment(std::move(source), std::move(target), degree_cap, std::move(ring), std::move(assignment), 1) {}

  static ChainHomotopy zero(ComplexRef source, ComplexRef target, int degree_cap, Ring ring);
};

struct Violation {
  Simplex simplex;
  std::string message;
};

struct LawReport {
  bool ok = true;
  std::vector<Violation> violations;
};

/// Checks d phi = phi d on every generator up to the cap and eps phi_0 = eps.
LawReport verify_chain_morphism(const ChainMorphism& phi);

/// Each vertex goes to e * [w] for a single target vertex w.
bool is_correct(const ChainMorphism& phi);

struct CloseReport {
  bool ok = false;
  std::map<Simplex, std::string> assignment;  // sigma -> member name
  std::optional<Simplex> counterexample;
  VertexSet counterexample_carrier;
};

/// For every source simplex sigma up to the common cap, some member contains
/// the carriers of phi(tau) and psi(tau) for all faces tau of sigma. The first
/// such member in name order is recorded.
CloseReport is_close(const ChainMorphism& phi, const ChainMorphism& psi, const Cover& cover);
CloseReport is_small(const ChainMorphism& phi, const Cover& cover);

struct HomotopyReport {
  bool ok = true;
  std::vector<Violation> violations;
  std::optional<CloseReport> smallness;  // present when a cover was supplied
};

/// Checks dD(sigma) = phi(sigma) - psi(sigma) - D(d sigma) on every generator
/// up to the cap of D (no D term in degree 0). With a cover, also checks that
/// for each sigma one member holds |D(tau)| for the faces tau and |phi(v)|,
/// |psi(v)| for the vertices v.
HomotopyReport verify_homotopy(const ChainHomotopy& d, const ChainMorphism& phi, const ChainMorphism& psi,
                               const Cover* cover = nullptr);

/// f_# : simplex -> signed image simplex, or 0 when the image is degenerate.
ChainMorphism induced_morphism(const SimplicialMap& f, int degree_cap, const Ring& ring);
ChainMorphism identity_morphism(const ComplexRef& complex, int degree_cap, const Ring& ring);
/// Inclusion of a subcomplex. Throws PreconditionFailure if it is not one.
ChainMorphism inclusion_morphism(const ComplexRef& sub, const ComplexRef& super, int degree_cap, const Ring& ring);
/// g after f, on the common cap.
ChainMorphism compose(const ChainMorphism& g, const ChainMorphism& f);
/// Restriction to a subcomplex of the source.
ChainMorphism restrict_to(const ChainMorphism& phi, const ComplexRef& sub);
ChainHomotopy restrict_to(const ChainHomotopy& d, const ComplexRef& sub);

}  // namespace chaincert
