// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "rankecp/field.hpp"

namespace rankecp {

/// Dense row-major matrix over one field of a tower.
class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols);

  static Matrix identity(FieldPtr field, std::size_t n);
  static Matrix from_rows(FieldPtr field, const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const FieldPtr& field() const noexcept { return field_; }
  bool empty() const noexcept { return rows_ == 0; }

  Element operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Element& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  std::span<const Element> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::span<Element> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  Vector row_vector(std::size_t i) const { return Vector(row(i).begin(), row(i).end()); }
  std::vector<Vector> row_vectors() const;
  void append_row(std::span<const Element> r);

  const Vector& data() const noexcept { return data_; }
  /// Row-major flattening (length rows*cols).
  Vector flatten() const { return data_; }
  static Matrix unflatten(FieldPtr field, std::span<const Element> flat, std::size_t rows, std::size_t cols);

  Matrix transposed() const;
  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  bool is_zero() const;

  bool operator==(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }

 private:
  FieldPtr field_;
  std::size_t rows_ = 0, cols_ = 0;
  Vector data_;
};

Element dot(const Field& f, std::span<const Element> a, std::span<const Element> b);
/// y += s * x
void axpy(const Field& f, Element s, std::span<const Element> x, std::span<Element> y);
Vector add(const Field& f, std::span<const Element> a, std::span<const Element> b);
Vector sub(const Field& f, std::span<const Element> a, std::span<const Element> b);
Vector scale(const Field& f, Element s, std::span<const Element> a);
bool is_zero(std::span<const Element> v);

struct Echelon {
  Matrix reduced;                   ///< reduced row-echelon form, zero rows dropped
  std::vector<std::size_t> pivots;  ///< pivot column of each row
};

/// Gauss-Jordan elimination with first-nonzero pivoting.
Echelon rref(const Matrix& a);
std::size_t rank(const Matrix& a);
/// Basis (in RREF) of the right kernel {x : a x^T = 0}.
Matrix kernel(const Matrix& a);

/// F-linear subspace of F^ambient, stored as its RREF basis.
class Subspace {
 public:
  Subspace() = default;
  Subspace(FieldPtr field, std::size_t ambient);

  static Subspace span(const Matrix& generators);
  static Subspace span(FieldPtr field, const std::vector<Vector>& generators, std::size_t ambient);
  static Subspace whole(FieldPtr field, std::size_t ambient);

  std::size_t dimension() const noexcept { return basis_.rows(); }
  std::size_t ambient() const noexcept { return ambient_; }
  const Matrix& basis() const noexcept { return basis_; }
  const FieldPtr& field() const noexcept { return basis_.field(); }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  bool contains(std::span<const Element> v) const;
  bool contains(const Subspace& other) const;
  /// Orthogonal complement under the standard dot product.
  Subspace orthogonal() const;
  Subspace intersect(const Subspace& other) const;
  Subspace sum(const Subspace& other) const;
  /// Coordinates of v in the RREF basis; nullopt when v is outside.
  std::optional<Vector> coordinates(std::span<const Element> v) const;

  bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }

 private:
  Matrix basis_;
  std::vector<std::size_t> pivots_;
  std::size_t ambient_ = 0;
};

/// Solution set of a x = b: a particular solution (if consistent) plus the kernel.
struct AffineSolution {
  std::optional<Vector> particular;
  Subspace kernel;
  bool consistent() const noexcept { return particular.has_value(); }
  bool unique() const noexcept { return consistent() && kernel.dimension() == 0; }
};

AffineSolution solve_linear(const Matrix& a, std::span<const Element> b);

}  // namespace rankecp
