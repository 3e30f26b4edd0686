#include "chaincert/matrix.hpp"

#include "chaincert/errors.hpp"

namespace chaincert {

RingMatrix RingMatrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  RingMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

RingMatrix RingMatrix::identity(std::size_t n) {
  RingMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Scalar(1));
  return m;
}

Scalar RingMatrix::get(std::size_t r, std::size_t c) const {
  auto it = entries_.find({r, c});
  return it == entries_.end() ? Scalar(0) : it->second;
}

void RingMatrix::set(std::size_t r, std::size_t c, const Scalar& value) {
  if (r >= rows_ || c >= cols_) throw DimensionMismatch("matrix index out of range");
  if (value == 0) {
    entries_.erase({r, c});
  } else {
    entries_[{r, c}] = value;
  }
}

Column RingMatrix::column(std::size_t c) const {
  Column out(rows_, Scalar(0));
  for (const auto& [idx, v] : entries_) {
    if (idx.second == c) out[idx.first] = v;
  }
  return out;
}

Column RingMatrix::multiply(const Column& x, const Ring& ring) const {
  if (x.size() != cols_) throw DimensionMismatch("matrix-vector dimension mismatch");
  Column out(rows_, Scalar(0));
  for (const auto& [idx, v] : entries_) {
    out[idx.first] += v * x[idx.second];
  }
  for (auto& v : out) v = ring.normalize(v);
  return out;
}

RingMatrix RingMatrix::multiply(const RingMatrix& other, const Ring& ring) const {
  if (cols_ != other.rows_) throw DimensionMismatch("matrix-matrix dimension mismatch");
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> other_rows(other.rows_);
  for (const auto& [idx, v] : other.entries_) other_rows[idx.first].emplace_back(idx.second, v);
  std::map<Index, Scalar> acc;
  for (const auto& [idx, v] : entries_) {
    for (const auto& [c, w] : other_rows[idx.second]) acc[{idx.first, c}] += v * w;
  }
  RingMatrix out(rows_, other.cols_);
  for (const auto& [idx, v] : acc) out.set(idx.first, idx.second, ring.normalize(v));
  return out;
}

RingMatrix RingMatrix::transpose() const {
  RingMatrix t(cols_, rows_);
  for (const auto& [idx, v] : entries_) t.entries_[{idx.second, idx.first}] = v;
  return t;
}

std::vector<std::vector<Scalar>> RingMatrix::to_dense() const {
  std::vector<std::vector<Scalar>> d(rows_, std::vector<Scalar>(cols_, Scalar(0)));
  for (const auto& [idx, v] : entries_) d[idx.first][idx.second] = v;
  return d;
}

}  // namespace chaincert
