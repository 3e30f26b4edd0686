#pragma once

#include "chaincert/ring.hpp"

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace chaincert {

using Column = std::vector<Scalar>;

/// Sparse matrix over a coefficient ring. Zero entries are never stored and
/// entries() iterates row-major in ascending order.
class RingMatrix {
 public:
  using Index = std::pair<std::size_t, std::size_t>;

  RingMatrix() = default;
  RingMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  static RingMatrix from_rows(const std::vector<std::vector<Scalar>>& rows);
  static RingMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar get(std::size_t r, std::size_t c) const;
  /// Stores value as given; zero erases the entry.
  void set(std::size_t r, std::size_t c, const Scalar& value);
  const std::map<Index, Scalar>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  Column column(std::size_t c) const;
  Column multiply(const Column& x, const Ring& ring) const;
  RingMatrix multiply(const RingMatrix& other, const Ring& ring) const;
  RingMatrix transpose() const;
  std::vector<std::vector<Scalar>> to_dense() const;

  friend bool operator==(const RingMatrix& a, const RingMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::map<Index, Scalar> entries_;
};

}  // namespace chaincert
