#pragma once

#include "chaincert/matrix.hpp"
#include "chaincert/ring.hpp"

#include <optional>
#include <vector>

namespace chaincert {

using IntMatrix = std::vector<std::vector<Integer>>;

IntMatrix to_int_matrix(const RingMatrix& a);
IntMatrix int_identity(std::size_t n);

/// U * A * V = D with U, V unimodular and D diagonal, d_i >= 0, d_i | d_{i+1}.
struct SmithForm {
  IntMatrix left;           // U, empty unless requested
  IntMatrix diagonal;       // D
  IntMatrix right;          // V, empty unless requested
  IntMatrix left_inverse;   // U^{-1}, empty unless requested
  std::size_t rank = 0;

  /// The nonzero diagonal entries d_1 | d_2 | ... | d_rank.
  std::vector<Integer> invariant_factors() const;
};

struct SmithOptions {
  bool left = true;
  bool right = true;
  bool left_inverse = false;
};

/// Smith normal form over Z. Pivots are chosen by minimal absolute value.
SmithForm smith_normal_form(const IntMatrix& a, std::size_t cols, SmithOptions options = {});
SmithForm smith_normal_form(const RingMatrix& a, SmithOptions options = {});

/// Howell normal form of the row module generated by `rows` over Z/m. Rows of
/// the result are in echelon order, each pivot divides m, entries above a
/// pivot are reduced below it, and for every j the rows that vanish on the
/// first j columns span every element of the module that does.
IntMatrix howell_form(IntMatrix rows, std::size_t cols, const Integer& modulus);

/// A*x = b over a ring, factored once so repeated right-hand sides are cheap.
/// Z uses the Smith form, Z/m the Howell form of [A^T | I], Q reduced row
/// echelon form. Underdetermined systems yield the particular solution with
/// free variables set to zero, so results are reproducible.
class LinearSystem {
 public:
  LinearSystem(const RingMatrix& a, Ring ring);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Ring& ring() const { return ring_; }

  std::optional<Column> solve(const Column& b) const;
  /// Generators of {x : A x = 0}. A lattice basis over Z, a basis over Q and a
  /// generating set over Z/m.
  std::vector<Column> kernel() const;

 private:
  std::optional<Column> solve_integers(const Column& b) const;
  std::optional<Column> solve_rationals(const Column& b) const;
  std::optional<Column> solve_modular(const Column& b) const;

  Ring ring_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;

  SmithForm smith_;

  std::vector<std::vector<Rational>> echelon_;    // [R | T], T*A = R
  std::vector<std::size_t> pivot_columns_;

  IntMatrix howell_;                             // rows of H([A^T | I])
};

std::optional<Column> solve_linear(const RingMatrix& a, const Column& b, const Ring& ring);
std::vector<Column> kernel_basis(const RingMatrix& a, const Ring& ring);

/// Rank over a field (Q or Z/p). Throws PreconditionFailure for other rings.
std::size_t field_rank(const RingMatrix& a, const Ring& ring);

}  // namespace chaincert
