// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>

#include "rankecp/field.hpp"
#include "rankecp/matrix.hpp"

namespace rankecp {

/// M(c): the m x n matrix over F_q whose column j holds the coordinates of c_j
/// in `basis`, i.e. row i is the vector c_i in c = sum_i alpha_i c_i.
Matrix mat_rep(const Basis& basis, std::span<const Element> c);
Vector rep_inverse(const Basis& basis, const Matrix& mat);

std::size_t rank_weight(const Basis& basis, std::span<const Element> c);
/// Row space of M(c) in F_q^n.
Subspace rank_support(const Basis& basis, std::span<const Element> c);

std::size_t hamming_weight(std::span<const Element> c);

/// D(c) = diag(c) for c over F_q.
Matrix diag_embed(FieldPtr fq, std::span<const Element> c);

/// E(c) = (alpha_1 c_1, ..., alpha_n c_n); requires the tower's m to equal n.
Vector extension_embed(const FieldTower& tower, std::span<const Element> c);

/// Dimension over F_q of the span of `elements` (elements of f).
std::size_t fq_rank(const FieldPtr& f, std::uint32_t q, std::span<const Element> elements);

/// Entrywise x -> x^(q^j).
Vector frobenius(const Field& f, std::span<const Element> v, std::uint32_t q, std::int64_t j);

}  // namespace rankecp
