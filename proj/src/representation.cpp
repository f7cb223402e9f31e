// SPDX-License-Identifier: Apache-2.0

#include "rankecp/representation.hpp"

#include <algorithm>

#include "rankecp/errors.hpp"

namespace rankecp {

Matrix mat_rep(const Basis& basis, std::span<const Element> c) {
  const std::size_t m = basis.size();
  Matrix out(basis.base(), m, c.size());
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] == 0) continue;
    const Vector coords = basis.coordinates(c[j]);
    for (std::size_t i = 0; i < m; ++i) out(i, j) = coords[i];
  }
  return out;
}

Vector rep_inverse(const Basis& basis, const Matrix& mat) {
  if (mat.rows() != basis.size()) throw ParameterError("matrix height does not match the basis size");
  Vector out(mat.cols(), 0);
  Vector column(mat.rows());
  for (std::size_t j = 0; j < mat.cols(); ++j) {
    for (std::size_t i = 0; i < mat.rows(); ++i) column[i] = mat(i, j);
    out[j] = basis.combine(column);
  }
  return out;
}

std::size_t rank_weight(const Basis& basis, std::span<const Element> c) { return rank(mat_rep(basis, c)); }

Subspace rank_support(const Basis& basis, std::span<const Element> c) { return Subspace::span(mat_rep(basis, c)); }

std::size_t hamming_weight(std::span<const Element> c) {
  return static_cast<std::size_t>(std::count_if(c.begin(), c.end(), [](Element x) { return x != 0; }));
}

Matrix diag_embed(FieldPtr fq, std::span<const Element> c) {
  Matrix d(std::move(fq), c.size(), c.size());
  for (std::size_t i = 0; i < c.size(); ++i) d(i, i) = c[i];
  return d;
}

Vector extension_embed(const FieldTower& tower, std::span<const Element> c) {
  if (c.size() != tower.m()) throw ParameterError("extension map needs n equal to the extension degree m");
  const Field& f = *tower.ext_field();
  Vector out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!tower.base_field()->contains(c[i])) throw ParameterError("entry outside F_q");
    out[i] = f.mul(tower.alpha()[i], c[i]);
  }
  return out;
}

std::size_t fq_rank(const FieldPtr& f, std::uint32_t q, std::span<const Element> elements) {
  const std::uint32_t d = degree_over(f->size(), q);
  Matrix coords(subfield_of_size(f, q), 0, d);
  for (Element x : elements) coords.append_row(digits(x, q, d));
  return rank(coords);
}

Vector frobenius(const Field& f, std::span<const Element> v, std::uint32_t q, std::int64_t j) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = frobenius(f, v[i], q, j);
  return out;
}

}  // namespace rankecp
