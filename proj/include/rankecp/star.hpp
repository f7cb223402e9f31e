// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>

#include "rankecp/codes.hpp"
#include "rankecp/field.hpp"
#include "rankecp/matrix.hpp"

namespace rankecp {

/// c * d = sum_i c_i d_i for c in F_{q^m}^m and d = sum_i alpha_i d_i.
/// Matrix side: M(c * d) = M(c) M(d).
Vector star(const FieldTower& tower, std::span<const Element> c, std::span<const Element> d);
/// The same product for an arbitrary F_q-basis of a field of the tower; d may
/// lie in a subfield of basis.field().
Vector star(const Basis& basis, std::span<const Element> c, std::span<const Element> d);

/// (alpha_1, ..., alpha_n); requires n <= m.
Vector alpha_n(const FieldTower& tower, std::size_t n);

/// phi_n: F_{q^m}^n -> F_{q^m}^m. For n <= m interpolate at alpha_1..alpha_n and
/// evaluate at alpha_1..alpha_m; for n >= m keep the first m coordinates.
Vector phi_n(const FieldTower& tower, std::span<const Element> c);
/// The m x n matrix of phi_n over F_{q^m}.
Matrix phi_n_matrix(const FieldTower& tower, std::size_t n);

/// Fixes the tower, the length n and the map phi used by c *_phi d = phi(c) * d.
class StarContext {
 public:
  StarContext(FieldTower tower, std::size_t n);
  /// phi given by its m x n matrix over F_{q^m}. For n <= m it must send
  /// alpha_n to alpha (ParameterError otherwise).
  StarContext(FieldTower tower, std::size_t n, Matrix phi);

  const FieldTower& tower() const noexcept { return tower_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t m() const noexcept { return tower_.m(); }
  const Matrix& phi_matrix() const noexcept { return phi_; }

  Vector phi(std::span<const Element> c) const;
  Vector star(std::span<const Element> c, std::span<const Element> d) const;

 private:
  FieldTower tower_;
  std::size_t n_;
  Matrix phi_;
};

/// c(d) = (c . d_1, ..., c . d_m); M(c(d)) = M(c) M(d)^T.
Vector transposed_pairing(const FieldTower& tower, std::span<const Element> c, std::span<const Element> d);
/// b^T for b of length m, defined by M(b^T) = M(b)^T.
Vector vec_transpose(const FieldTower& tower, std::span<const Element> b);

/// B * A = span of b_i * (alpha_l a_j); B has length m.
ExtLinearCode space_product(const ExtLinearCode& b, const ExtLinearCode& a);
/// B * A with the product taken over `star_basis` (|B| = its size).
ExtLinearCode space_product(const Basis& star_basis, const ExtLinearCode& b, const ExtLinearCode& a);
/// phi(B) * A for B of length n.
ExtLinearCode space_product(const StarContext& ctx, const ExtLinearCode& b, const ExtLinearCode& a);
/// F_q-span of B_i A_j.
MatrixCode space_product(const MatrixCode& b, const MatrixCode& a);

/// phi(C) as a code in F_{q^m}^m.
ExtLinearCode apply_phi(const StarContext& ctx, const ExtLinearCode& c);

}  // namespace rankecp
