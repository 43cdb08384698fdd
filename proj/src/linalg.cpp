#include "sgen/linalg.hpp"

#include <algorithm>

namespace sgen {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw dimension_error("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

Vec Matrix::row(std::size_t r) const {
  Vec v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
  return v;
}

std::pair<Matrix, std::size_t> rref(const Matrix& m) {
  std::vector<Vec> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));

  std::size_t nrows = rows.size(), ncols = m.cols();
  std::size_t lead = 0;
  for (std::size_t col = 0; col < ncols && lead < nrows; ++col) {
    std::size_t pivot = nrows;
    for (std::size_t r = lead; r < nrows; ++r) {
      if (rows[r][col] != 0) { pivot = r; break; }
    }
    if (pivot == nrows) continue;
    std::swap(rows[lead], rows[pivot]);
    Rat inv = rows[lead][col];
    for (std::size_t c = col; c < ncols; ++c) rows[lead][c] /= inv;
    for (std::size_t r = 0; r < nrows; ++r) {
      if (r == lead || rows[r][col] == 0) continue;
      Rat f = rows[r][col];
      for (std::size_t c = col; c < ncols; ++c) rows[r][c] -= f * rows[lead][c];
    }
    ++lead;
  }
  rows.resize(lead);
  return {Matrix::from_rows(rows, ncols), lead};
}

std::size_t rank(const Matrix& m) { return rref(m).second; }

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (b.size() != m.rows()) throw dimension_error("rhs length mismatch");
  // Eliminate on [m | b] and read a particular solution off the pivots.
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols()) = b[r];
  }
  auto [red, rk] = rref(aug);
  Vec x(m.cols());
  for (std::size_t r = 0; r < rk; ++r) {
    std::size_t piv = red.cols();
    for (std::size_t c = 0; c < red.cols(); ++c) {
      if (red.at(r, c) != 0) { piv = c; break; }
    }
    if (piv == m.cols()) return std::nullopt;  // row 0 = 1: inconsistent
    x[piv] = red.at(r, m.cols());
  }
  return x;
}

std::vector<Vec> nullspace(const Matrix& m) {
  auto [red, rk] = rref(m);
  std::vector<std::size_t> pivcols;
  std::vector<bool> ispiv(m.cols(), false);
  for (std::size_t r = 0; r < rk; ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (red.at(r, c) != 0) {
        pivcols.push_back(c);
        ispiv[c] = true;
        break;
      }
    }
  }
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (ispiv[free]) continue;
    Vec v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < rk; ++r) v[pivcols[r]] = -red.at(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Subspace Subspace::span(const std::vector<Vec>& vectors, std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

Vec Subspace::reduce(Vec v) const {
  if (v.size() != ambient_) throw dimension_error("vector/ambient mismatch");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rat& f = v[pivots_[r]];
    if (f == 0) continue;
    Rat c = f;
    for (std::size_t j = pivots_[r]; j < ambient_; ++j) v[j] -= c * rows_[r][j];
  }
  return v;
}

bool Subspace::insert(Vec v) {
  v = reduce(std::move(v));
  std::size_t piv = ambient_;
  for (std::size_t j = 0; j < ambient_; ++j) {
    if (v[j] != 0) { piv = j; break; }
  }
  if (piv == ambient_) return false;
  Rat inv = v[piv];
  for (std::size_t j = piv; j < ambient_; ++j) v[j] /= inv;
  // back-eliminate the new pivot from existing rows
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Rat f = rows_[r][piv];
    if (f == 0) continue;
    for (std::size_t j = piv; j < ambient_; ++j) rows_[r][j] -= f * v[j];
  }
  auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, piv);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

bool Subspace::contains(const Vec& v) const {
  Vec r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](const Rat& x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw dimension_error("ambient mismatch");
  for (const auto& r : other.rows_) {
    if (!contains(r)) return false;
  }
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw dimension_error("ambient mismatch");
  Subspace s = *this;
  for (const auto& r : other.rows_) s.insert(r);
  return s;
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw dimension_error("ambient mismatch");
  // x in both spans: x = a^T S = b^T T, i.e. (a,b) in the nullspace of
  // [S^T | -T^T].
  std::size_t ds = dim(), dt = other.dim();
  if (ds == 0 || dt == 0) return Subspace(ambient_);
  Matrix m(ambient_, ds + dt);
  for (std::size_t c = 0; c < ds; ++c)
    for (std::size_t r = 0; r < ambient_; ++r) m.at(r, c) = rows_[c][r];
  for (std::size_t c = 0; c < dt; ++c)
    for (std::size_t r = 0; r < ambient_; ++r) m.at(r, ds + c) = -other.rows_[c][r];
  Subspace out(ambient_);
  for (const auto& ab : nullspace(m)) {
    Vec x(ambient_);
    for (std::size_t c = 0; c < ds; ++c)
      for (std::size_t j = 0; j < ambient_; ++j) x[j] += ab[c] * rows_[c][j];
    out.insert(std::move(x));
  }
  return out;
}

}  // namespace sgen
