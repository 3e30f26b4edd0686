#include "chaincert/linalg.hpp"

#include "chaincert/errors.hpp"

#include <algorithm>
#include <utility>

namespace chaincert {

IntMatrix to_int_matrix(const RingMatrix& a) {
  IntMatrix out(a.rows(), std::vector<Integer>(a.cols(), Integer(0)));
  for (const auto& [idx, v] : a.entries()) {
    if (denominator(v) != 1) throw InputError("integer matrix expected");
    out[idx.first][idx.second] = numerator(v);
  }
  return out;
}

IntMatrix int_identity(std::size_t n) {
  IntMatrix id(n, std::vector<Integer>(n, Integer(0)));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

std::vector<Integer> SmithForm::invariant_factors() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < rank; ++i) out.push_back(diagonal[i][i]);
  return out;
}

namespace {

// Elementary unimodular operations applied to the working matrix and mirrored
// on whichever transforms are being tracked.
class SmithWork {
 public:
  SmithWork(IntMatrix s, std::size_t cols, const SmithOptions& opt)
      : s_(std::move(s)), m_(s_.size()), n_(cols) {
    if (opt.left) u_ = int_identity(m_);
    if (opt.right) v_ = int_identity(n_);
    if (opt.left_inverse) uinv_ = int_identity(m_);
    track_u_ = opt.left;
    track_v_ = opt.right;
    track_uinv_ = opt.left_inverse;
  }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(s_[i], s_[j]);
    if (track_u_) std::swap(u_[i], u_[j]);
    if (track_uinv_) {
      for (auto& row : uinv_) std::swap(row[i], row[j]);
    }
  }

  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (auto& row : s_) std::swap(row[i], row[j]);
    if (track_v_) {
      for (auto& row : v_) std::swap(row[i], row[j]);
    }
  }

  // row_dst -= q * row_src
  void row_axpy(std::size_t dst, std::size_t src, const Integer& q) {
    axpy(s_[dst], s_[src], q);
    if (track_u_) axpy(u_[dst], u_[src], q);
    if (track_uinv_) {
      for (auto& row : uinv_) {
        if (row[dst] != 0) row[src] += q * row[dst];
      }
    }
  }

  // col_dst -= q * col_src
  void col_axpy(std::size_t dst, std::size_t src, const Integer& q) {
    for (auto& row : s_) {
      if (row[src] != 0) row[dst] -= q * row[src];
    }
    if (track_v_) {
      for (auto& row : v_) {
        if (row[src] != 0) row[dst] -= q * row[src];
      }
    }
  }

  void negate_row(std::size_t i) {
    for (auto& x : s_[i]) x = -x;
    if (track_u_) {
      for (auto& x : u_[i]) x = -x;
    }
    if (track_uinv_) {
      for (auto& row : uinv_) row[i] = -row[i];
    }
  }

  SmithForm run() {
    std::size_t t = 0;
    while (t < m_ && t < n_) {
      if (!place_pivot(t)) break;
      for (;;) {
        bool dirty = false;
        for (std::size_t i = t + 1; i < m_; ++i) {
          if (s_[i][t] == 0) continue;
          Integer q = s_[i][t] / s_[t][t];
          if (q != 0) row_axpy(i, t, q);
          if (s_[i][t] != 0) dirty = true;
        }
        for (std::size_t j = t + 1; j < n_; ++j) {
          if (s_[t][j] == 0) continue;
          Integer q = s_[t][j] / s_[t][t];
          if (q != 0) col_axpy(j, t, q);
          if (s_[t][j] != 0) dirty = true;
        }
        if (dirty) {
          shrink_pivot(t);
          continue;
        }
        if (abs_value(s_[t][t]) != 1 && fix_divisibility(t)) continue;
        break;
      }
      if (s_[t][t] < 0) negate_row(t);
      ++t;
    }
    SmithForm out;
    out.rank = t;
    out.diagonal = std::move(s_);
    out.left = std::move(u_);
    out.right = std::move(v_);
    out.left_inverse = std::move(uinv_);
    return out;
  }

 private:
  static void axpy(std::vector<Integer>& dst, const std::vector<Integer>& src, const Integer& q) {
    for (std::size_t c = 0; c < src.size(); ++c) {
      if (src[c] != 0) dst[c] -= q * src[c];
    }
  }

  // Moves a minimal-magnitude nonzero entry of the trailing block to (t, t).
  bool place_pivot(std::size_t t) {
    bool found = false;
    std::size_t bi = 0, bj = 0;
    Integer best;
    for (std::size_t i = t; i < m_ && !(found && best == 1); ++i) {
      for (std::size_t j = t; j < n_; ++j) {
        if (s_[i][j] == 0) continue;
        Integer a = abs_value(s_[i][j]);
        if (!found || a < best) {
          found = true;
          best = a;
          bi = i;
          bj = j;
          if (best == 1) break;
        }
      }
    }
    if (!found) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  // After a reduction sweep, moves the smallest leftover in row/column t to
  // the pivot position. Leftovers are strictly smaller than the old pivot.
  void shrink_pivot(std::size_t t) {
    bool found = false, in_column = true;
    std::size_t where = 0;
    Integer best;
    for (std::size_t i = t + 1; i < m_; ++i) {
      if (s_[i][t] == 0) continue;
      Integer a = abs_value(s_[i][t]);
      if (!found || a < best) {
        found = true;
        best = a;
        where = i;
        in_column = true;
      }
    }
    for (std::size_t j = t + 1; j < n_; ++j) {
      if (s_[t][j] == 0) continue;
      Integer a = abs_value(s_[t][j]);
      if (!found || a < best) {
        found = true;
        best = a;
        where = j;
        in_column = false;
      }
    }
    if (in_column) {
      swap_rows(t, where);
    } else {
      swap_cols(t, where);
    }
  }

  // Ensures the pivot divides the trailing block by folding an offending row
  // into row t; the next sweep then lowers the pivot.
  bool fix_divisibility(std::size_t t) {
    const Integer& p = s_[t][t];
    for (std::size_t i = t + 1; i < m_; ++i) {
      for (std::size_t j = t + 1; j < n_; ++j) {
        if (s_[i][j] != 0 && s_[i][j] % p != 0) {
          row_axpy(t, i, Integer(-1));
          return true;
        }
      }
    }
    return false;
  }

  IntMatrix s_;
  std::size_t m_, n_;
  IntMatrix u_, v_, uinv_;
  bool track_u_ = false, track_v_ = false, track_uinv_ = false;
};

struct Bezout {
  Integer g, s, t;
};

// s*a + t*b = g = gcd(a, b) for a, b >= 0.
Bezout extended_gcd(const Integer& a, const Integer& b) {
  Integer old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  return {old_r, old_s, old_t};
}

// A unit u mod m with u*a = gcd(a, m) (mod m), 0 < a < m.
Integer normalizing_unit(const Integer& a, const Integer& m) {
  Integer g = gcd(a, m);
  Integer mm = m / g;
  Integer ap = a / g;
  Integer u = floor_mod(extended_gcd(floor_mod(ap, mm), mm).s, mm);
  while (gcd(u, m) != 1) u += mm;
  return u;
}

void reduce_row(std::vector<Integer>& row, const Integer& m) {
  for (auto& x : row) x = floor_mod(x, m);
}

bool is_zero_row(const std::vector<Integer>& row) {
  return std::all_of(row.begin(), row.end(), [](const Integer& x) { return x == 0; });
}

std::size_t leading_column(const std::vector<Integer>& row) {
  for (std::size_t c = 0; c < row.size(); ++c) {
    if (row[c] != 0) return c;
  }
  return row.size();
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a, std::size_t cols, SmithOptions options) {
  for (const auto& row : a) {
    if (row.size() != cols) throw DimensionMismatch("ragged integer matrix");
  }
  return SmithWork(a, cols, options).run();
}

SmithForm smith_normal_form(const RingMatrix& a, SmithOptions options) {
  return smith_normal_form(to_int_matrix(a), a.cols(), options);
}

IntMatrix howell_form(IntMatrix rows, std::size_t cols, const Integer& modulus) {
  for (auto& row : rows) {
    if (row.size() != cols) throw DimensionMismatch("ragged matrix in Howell form");
    reduce_row(row, modulus);
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      if (rows[r][c] == 0) {
        std::swap(rows[r], rows[i]);
        continue;
      }
      Bezout bz = extended_gcd(rows[r][c], rows[i][c]);
      Integer a = rows[r][c] / bz.g;
      Integer b = rows[i][c] / bz.g;
      std::vector<Integer> top(cols), bottom(cols);
      for (std::size_t k = 0; k < cols; ++k) {
        top[k] = floor_mod(bz.s * rows[r][k] + bz.t * rows[i][k], modulus);
        bottom[k] = floor_mod(b * rows[r][k] - a * rows[i][k], modulus);
      }
      rows[r] = std::move(top);
      rows[i] = std::move(bottom);
    }
    if (rows[r][c] == 0) continue;
    Integer u = normalizing_unit(rows[r][c], modulus);
    if (u != 1) {
      for (auto& x : rows[r]) x = floor_mod(x * u, modulus);
    }
    const Integer p = rows[r][c];
    for (std::size_t j = 0; j < r; ++j) {
      Integer q = rows[j][c] / p;
      if (q == 0) continue;
      for (std::size_t k = 0; k < cols; ++k) rows[j][k] = floor_mod(rows[j][k] - q * rows[r][k], modulus);
    }
    // The annihilator multiple keeps the row module saturated below the pivot.
    std::vector<Integer> ann(cols);
    Integer factor = modulus / p;
    for (std::size_t k = 0; k < cols; ++k) ann[k] = floor_mod(factor * rows[r][k], modulus);
    if (!is_zero_row(ann)) rows.push_back(std::move(ann));
    ++r;
  }
  rows.resize(std::min(r, rows.size()));
  return rows;
}

LinearSystem::LinearSystem(const RingMatrix& a, Ring ring)
    : ring_(std::move(ring)), rows_(a.rows()), cols_(a.cols()) {
  switch (ring_.kind()) {
    case RingKind::integers:
      smith_ = smith_normal_form(to_int_matrix(a), cols_, SmithOptions{true, true, false});
      break;
    case RingKind::rationals: {
      echelon_.assign(rows_, std::vector<Rational>(cols_ + rows_, Rational(0)));
      for (const auto& [idx, v] : a.entries()) echelon_[idx.first][idx.second] = v;
      for (std::size_t i = 0; i < rows_; ++i) echelon_[i][cols_ + i] = 1;
      std::size_t r = 0;
      for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t p = r;
        while (p < rows_ && echelon_[p][c] == 0) ++p;
        if (p == rows_) continue;
        std::swap(echelon_[r], echelon_[p]);
        Rational inv = 1 / echelon_[r][c];
        for (auto& x : echelon_[r]) x *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
          if (i == r || echelon_[i][c] == 0) continue;
          Rational f = echelon_[i][c];
          for (std::size_t k = 0; k < echelon_[i].size(); ++k) {
            if (echelon_[r][k] != 0) echelon_[i][k] -= f * echelon_[r][k];
          }
        }
        pivot_columns_.push_back(c);
        ++r;
      }
      break;
    }
    case RingKind::integers_mod: {
      const Integer& m = ring_.modulus();
      IntMatrix rows(cols_, std::vector<Integer>(rows_ + cols_, Integer(0)));
      for (const auto& [idx, v] : a.entries()) rows[idx.second][idx.first] = floor_mod(numerator(v), m);
      for (std::size_t j = 0; j < cols_; ++j) rows[j][rows_ + j] = 1;
      howell_ = howell_form(std::move(rows), rows_ + cols_, m);
      break;
    }
  }
}

std::optional<Column> LinearSystem::solve(const Column& b) const {
  if (b.size() != rows_) throw DimensionMismatch("right-hand side has wrong length");
  switch (ring_.kind()) {
    case RingKind::integers:
      return solve_integers(b);
    case RingKind::rationals:
      return solve_rationals(b);
    case RingKind::integers_mod:
      return solve_modular(b);
  }
  return std::nullopt;
}

std::optional<Column> LinearSystem::solve_integers(const Column& b) const {
  std::vector<Integer> rhs(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    if (denominator(b[i]) != 1) throw InputError("non-integral right-hand side over Z");
    rhs[i] = numerator(b[i]);
  }
  std::vector<Integer> c(rows_, Integer(0));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < rows_; ++k) {
      if (smith_.left[i][k] != 0 && rhs[k] != 0) c[i] += smith_.left[i][k] * rhs[k];
    }
  }
  std::vector<Integer> y(smith_.rank);
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i < smith_.rank) {
      const Integer& d = smith_.diagonal[i][i];
      if (c[i] % d != 0) return std::nullopt;
      y[i] = c[i] / d;
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  Column x(cols_, Scalar(0));
  for (std::size_t j = 0; j < cols_; ++j) {
    Integer acc = 0;
    for (std::size_t i = 0; i < smith_.rank; ++i) {
      if (y[i] != 0 && smith_.right[j][i] != 0) acc += smith_.right[j][i] * y[i];
    }
    x[j] = Scalar(acc);
  }
  return x;
}

std::optional<Column> LinearSystem::solve_rationals(const Column& b) const {
  std::vector<Rational> c(rows_, Rational(0));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < rows_; ++k) {
      const Rational& t = echelon_[i][cols_ + k];
      if (t != 0 && b[k] != 0) c[i] += t * b[k];
    }
  }
  for (std::size_t i = pivot_columns_.size(); i < rows_; ++i) {
    if (c[i] != 0) return std::nullopt;
  }
  Column x(cols_, Scalar(0));
  for (std::size_t r = 0; r < pivot_columns_.size(); ++r) x[pivot_columns_[r]] = c[r];
  return x;
}

std::optional<Column> LinearSystem::solve_modular(const Column& b) const {
  const Integer& m = ring_.modulus();
  const std::size_t width = rows_ + cols_;
  std::vector<Integer> v(width, Integer(0));
  for (std::size_t i = 0; i < rows_; ++i) {
    if (denominator(b[i]) != 1) throw InputError("non-integral right-hand side over Z/m");
    v[i] = floor_mod(numerator(b[i]), m);
  }
  std::size_t h = 0;
  for (std::size_t c = 0; c < rows_; ++c) {
    while (h < howell_.size() && leading_column(howell_[h]) < c) ++h;
    bool has_pivot = h < howell_.size() && leading_column(howell_[h]) == c;
    if (v[c] == 0) {
      if (has_pivot) ++h;
      continue;
    }
    if (!has_pivot) return std::nullopt;
    const Integer& p = howell_[h][c];
    if (v[c] % p != 0) return std::nullopt;
    Integer q = v[c] / p;
    for (std::size_t k = 0; k < width; ++k) {
      if (howell_[h][k] != 0) v[k] = floor_mod(v[k] - q * howell_[h][k], m);
    }
    ++h;
  }
  Column x(cols_);
  for (std::size_t j = 0; j < cols_; ++j) x[j] = Scalar(floor_mod(-v[rows_ + j], m));
  return x;
}

std::vector<Column> LinearSystem::kernel() const {
  std::vector<Column> out;
  switch (ring_.kind()) {
    case RingKind::integers:
      for (std::size_t i = smith_.rank; i < cols_; ++i) {
        Column col(cols_);
        int sign = 0;
        for (std::size_t j = 0; j < cols_; ++j) {
          if (sign == 0 && smith_.right[j][i] != 0) sign = smith_.right[j][i] < 0 ? -1 : 1;
        }
        for (std::size_t j = 0; j < cols_; ++j) col[j] = Scalar(smith_.right[j][i] * sign);
        out.push_back(std::move(col));
      }
      break;
    case RingKind::rationals: {
      std::vector<bool> is_pivot(cols_, false);
      for (auto c : pivot_columns_) is_pivot[c] = true;
      for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        Column col(cols_, Scalar(0));
        col[f] = 1;
        for (std::size_t r = 0; r < pivot_columns_.size(); ++r) col[pivot_columns_[r]] = -echelon_[r][f];
        out.push_back(std::move(col));
      }
      break;
    }
    case RingKind::integers_mod:
      for (const auto& row : howell_) {
        if (leading_column(row) < rows_) continue;
        Column col(cols_);
        for (std::size_t j = 0; j < cols_; ++j) col[j] = Scalar(row[rows_ + j]);
        out.push_back(std::move(col));
      }
      break;
  }
  return out;
}

std::optional<Column> solve_linear(const RingMatrix& a, const Column& b, const Ring& ring) {
  if (b.size() != a.rows()) throw DimensionMismatch("right-hand side has wrong length");
  return LinearSystem(a, ring).solve(b);
}

std::vector<Column> kernel_basis(const RingMatrix& a, const Ring& ring) {
  return LinearSystem(a, ring).kernel();
}

std::size_t field_rank(const RingMatrix& a, const Ring& ring) {
  if (!ring.is_field()) throw PreconditionFailure("rank is only defined here over a field");
  if (ring.kind() == RingKind::rationals) {
    return a.cols() - LinearSystem(a, ring).kernel().size();
  }
  IntMatrix rows(a.rows(), std::vector<Integer>(a.cols(), Integer(0)));
  for (const auto& [idx, v] : a.entries()) rows[idx.first][idx.second] = numerator(v);
  return howell_form(std::move(rows), a.cols(), ring.modulus()).size();
}

}  // namespace chaincert
