// SPDX-License-Identifier: Apache-2.0

#include "rankecp/matrix.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "rankecp/errors.hpp"

namespace rankecp {

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
  Matrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(FieldPtr field, const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(std::move(field), rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw ParameterError("row length mismatch");
    std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
  }
  return m;
}

Matrix Matrix::unflatten(FieldPtr field, std::span<const Element> flat, std::size_t rows, std::size_t cols) {
  if (flat.size() != rows * cols) throw ParameterError("flattened size mismatch");
  Matrix m(std::move(field), rows, cols);
  std::copy(flat.begin(), flat.end(), m.data_.begin());
  return m;
}

std::vector<Vector> Matrix::row_vectors() const {
  std::vector<Vector> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row_vector(i));
  return out;
}

void Matrix::append_row(std::span<const Element> r) {
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  if (r.size() != cols_) throw ParameterError("row length mismatch");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

Matrix Matrix::transposed() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw ParameterError("matrix product dimension mismatch");
  Matrix out(field_, rows_, rhs.cols_);
  const Field& f = *field_;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Element a = (*this)(i, k);
      if (a != 0) axpy(f, a, rhs.row(k), out.row(i));
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ParameterError("matrix sum dimension mismatch");
  Matrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_->add(data_[i], rhs.data_[i]);
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ParameterError("matrix difference dimension mismatch");
  Matrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_->sub(data_[i], rhs.data_[i]);
  return out;
}

bool Matrix::is_zero() const { return rankecp::is_zero(data_); }

// ---------------------------------------------------------------------------

Element dot(const Field& f, std::span<const Element> a, std::span<const Element> b) {
  if (a.size() != b.size()) throw ParameterError("dot product length mismatch");
  Element acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) acc = f.add(acc, f.mul(a[i], b[i]));
  return acc;
}

void axpy(const Field& f, Element s, std::span<const Element> x, std::span<Element> y) {
  if (s == 0) return;
  if (s == 1) {
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i] != 0) y[i] = f.add(y[i], x[i]);
    return;
  }
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) y[i] = f.add(y[i], f.mul(s, x[i]));
}

Vector add(const Field& f, std::span<const Element> a, std::span<const Element> b) {
  if (a.size() != b.size()) throw ParameterError("vector length mismatch");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
  return out;
}

Vector sub(const Field& f, std::span<const Element> a, std::span<const Element> b) {
  if (a.size() != b.size()) throw ParameterError("vector length mismatch");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.sub(a[i], b[i]);
  return out;
}

Vector scale(const Field& f, Element s, std::span<const Element> a) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.mul(s, a[i]);
  return out;
}

bool is_zero(std::span<const Element> v) {
  return std::all_of(v.begin(), v.end(), [](Element x) { return x == 0; });
}

// ---------------------------------------------------------------------------

Echelon rref(const Matrix& a) {
  Matrix m = a;
  const Field& f = *m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, col) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    const Element s = m(r, col);
    if (s != 1) {
      const Element si = f.inv(s);
      for (std::size_t j = col; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), si);
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, col) == 0) continue;
      axpy(f, f.neg(m(i, col)), m.row(r), m.row(i));
    }
    pivots.push_back(col);
    ++r;
  }
  Matrix reduced(m.field(), r, m.cols());
  for (std::size_t i = 0; i < r; ++i) std::copy(m.row(i).begin(), m.row(i).end(), reduced.row(i).begin());
  return {std::move(reduced), std::move(pivots)};
}

namespace {

std::size_t rank_gf2(const Matrix& a) {
  std::vector<std::uint64_t> rows(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j)) rows[i] |= std::uint64_t{1} << j;
  std::size_t r = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::uint64_t v = rows[i];
    if (v == 0) continue;
    const std::uint64_t low = v & (~v + 1);
    for (std::size_t k = i + 1; k < rows.size(); ++k)
      if (rows[k] & low) rows[k] ^= v;
    ++r;
  }
  return r;
}

}  // namespace

std::size_t rank(const Matrix& a) {
  if (a.field() && a.field()->size() == 2 && a.cols() <= 64) return rank_gf2(a);
  return rref(a).pivots.size();
}

Matrix kernel(const Matrix& a) {
  const auto ech = rref(a);
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  const Field& f = *a.field();
  Matrix k(a.field(), 0, n);
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) v[ech.pivots[r]] = f.neg(ech.reduced(r, free));
    k.append_row(v);
  }
  if (k.rows() == 0) return Matrix(a.field(), 0, n);
  return rref(k).reduced;
}

// ---------------------------------------------------------------------------

Subspace::Subspace(FieldPtr field, std::size_t ambient) : basis_(std::move(field), 0, ambient), ambient_(ambient) {}

Subspace Subspace::span(const Matrix& generators) {
  Subspace s(generators.field(), generators.cols());
  auto ech = rref(generators);
  s.basis_ = std::move(ech.reduced);
  s.pivots_ = std::move(ech.pivots);
  return s;
}

Subspace Subspace::span(FieldPtr field, const std::vector<Vector>& generators, std::size_t ambient) {
  return span(Matrix::from_rows(std::move(field), generators, ambient));
}

Subspace Subspace::whole(FieldPtr field, std::size_t ambient) {
  return span(Matrix::identity(std::move(field), ambient));
}

std::optional<Vector> Subspace::coordinates(std::span<const Element> v) const {
  if (v.size() != ambient_) throw ParameterError("vector length does not match the ambient space");
  const Field& f = *field();
  Vector rest(v.begin(), v.end());
  Vector coords(dimension(), 0);
  for (std::size_t r = 0; r < dimension(); ++r) {
    const Element c = rest[pivots_[r]];
    coords[r] = c;
    if (c != 0) axpy(f, f.neg(c), basis_.row(r), rest);
  }
  if (!is_zero(rest)) return std::nullopt;
  return coords;
}

bool Subspace::contains(std::span<const Element> v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t r = 0; r < other.dimension(); ++r)
    if (!contains(other.basis_.row(r))) return false;
  return true;
}

Subspace Subspace::orthogonal() const {
  if (dimension() == 0) return whole(field(), ambient_);
  return span(kernel(basis_));
}

Subspace Subspace::sum(const Subspace& other) const {
  Matrix g = basis_;
  for (std::size_t r = 0; r < other.dimension(); ++r) g.append_row(other.basis_.row(r));
  if (g.rows() == 0) return Subspace(field(), ambient_);
  return span(g);
}

Subspace Subspace::intersect(const Subspace& other) const {
  return orthogonal().sum(other.orthogonal()).orthogonal();
}

// ---------------------------------------------------------------------------

AffineSolution solve_linear(const Matrix& a, std::span<const Element> b) {
  if (b.size() != a.rows()) throw ParameterError("right-hand side length mismatch");
  Matrix aug(a.field(), a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::copy(a.row(i).begin(), a.row(i).end(), aug.row(i).begin());
    aug(i, a.cols()) = b[i];
  }
  const auto ech = rref(aug);
  AffineSolution sol;
  sol.kernel = Subspace::span(kernel(a));
  if (sol.kernel.ambient() == 0) sol.kernel = Subspace(a.field(), a.cols());
  if (!ech.pivots.empty() && ech.pivots.back() == a.cols()) return sol;
  Vector x(a.cols(), 0);
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) x[ech.pivots[r]] = ech.reduced(r, a.cols());
  sol.particular = std::move(x);
  return sol;
}

}  // namespace rankecp
