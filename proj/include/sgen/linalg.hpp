#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sgen/rational.hpp"

namespace sgen {

struct dimension_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Dense rational matrix. Dimensions are fixed at construction.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rat& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  Vec row(std::size_t r) const;

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Rat> a_;
};

/// Reduced row-echelon form with zero rows dropped; second component is the
/// rank. Pivot tie-break: first nonzero entry in column order.
std::pair<Matrix, std::size_t> rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// One exact solution of m x = b, or nullopt when inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

/// Basis of the right nullspace {x : m x = 0}.
std::vector<Vec> nullspace(const Matrix& m);

/// Linear subspace kept as canonical RREF rows (pivots = 1, pivot columns
/// otherwise zero, pivot columns strictly increasing).
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

  static Subspace span(const std::vector<Vec>& vectors, std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Adds v to the span; returns true when the dimension grew.
  bool insert(Vec v);

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;

  /// Residue of v after elimination against the basis rows.
  Vec reduce(Vec v) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  Matrix basis_matrix() const { return Matrix::from_rows(rows_, ambient_); }

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && rows_ == o.rows_;
  }

 private:
  std::size_t ambient_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace sgen
