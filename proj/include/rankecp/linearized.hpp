// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <span>

#include "rankecp/field.hpp"
#include "rankecp/matrix.hpp"

namespace rankecp {

/// q-linearized polynomial sum_i a_i x^{[i r]} with coefficients in `field`.
/// The zero polynomial has no coefficients; trailing zeros are trimmed.
class LinearizedPoly {
 public:
  LinearizedPoly(FieldPtr field, std::uint32_t q, Vector coeffs = {}, std::uint32_t stride = 1);

  static LinearizedPoly identity(FieldPtr field, std::uint32_t q, std::uint32_t stride = 1);
  /// c x^{[index * stride]}
  static LinearizedPoly monomial(FieldPtr field, std::uint32_t q, Element c, std::size_t index,
                                 std::uint32_t stride = 1);

  const FieldPtr& field() const noexcept { return field_; }
  std::uint32_t q() const noexcept { return q_; }
  std::uint32_t stride() const noexcept { return stride_; }
  const Vector& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Index of the leading term (q-degree / stride); nullopt for zero.
  std::optional<std::size_t> degree() const;

  /// F(x) in the coefficient field.
  Element operator()(Element x) const { return eval_in(*field_, x); }
  /// F(x) for x in an extension `ext` of the coefficient field.
  Element eval_in(const Field& ext, Element x) const;
  Vector eval(std::span<const Element> points) const;
  Vector eval_in(const Field& ext, std::span<const Element> points) const;

  LinearizedPoly operator+(const LinearizedPoly& o) const;
  LinearizedPoly scaled(Element c) const;

  bool operator==(const LinearizedPoly& o) const {
    return q_ == o.q_ && stride_ == o.stride_ && coeffs_ == o.coeffs_;
  }

 private:
  FieldPtr field_;
  std::uint32_t q_;
  std::uint32_t stride_;
  Vector coeffs_;
};

/// Symbolic product F o G. With `reduce`, exponents are folded using
/// x^{[D]} = x for D the degree of the coefficient field over F_q; the result
/// then agrees with F o G only as a map on the coefficient field.
LinearizedPoly symbolic_mul(const LinearizedPoly& f, const LinearizedPoly& g, bool reduce = false);

/// Rows (b^{[0]}, ..., b^{[(count-1) stride]}): count x |b| matrix.
Matrix frobenius_rows(FieldPtr field, std::uint32_t q, std::span<const Element> b, std::size_t count,
                      std::uint32_t stride = 1);

/// Moore matrix: entry (i, j) = beta_i^{[j]}, j < width.
Matrix moore_matrix(FieldPtr field, std::uint32_t q, std::span<const Element> elements, std::size_t width);

/// The unique F of q-degree < [n] with F(points_i) = values_i, built from the
/// annihilator chain G_i = L_{i,n} o ... (omitting L_{i,i}) o ... o L_{i,1}.
/// Points must be F_q-independent (ParameterError otherwise).
LinearizedPoly interpolate(FieldPtr field, std::uint32_t q, std::span<const Element> values,
                           std::span<const Element> points);

/// Same polynomial obtained by solving the Moore system directly.
LinearizedPoly interpolate_moore(FieldPtr field, std::uint32_t q, std::span<const Element> values,
                                 std::span<const Element> points);

}  // namespace rankecp
