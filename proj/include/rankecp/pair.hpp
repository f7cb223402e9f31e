// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>

#include "rankecp/codes.hpp"
#include "rankecp/star.hpp"

namespace rankecp {

/// A candidate pair of type I. B has length m, or length n in which case the
/// product is taken through phi_n. With `star_basis` set (a basis of F_{q^N}
/// with N = |B|), b * a is instead computed in F_{q^N}^n, which contains
/// F_{q^m}^n.
struct ExtPair {
  ExtLinearCode a, b, c;
  std::size_t t = 0;
  bool locating_only = false;
  std::optional<Basis> star_basis = std::nullopt;
};

/// A candidate pair of type II: A, C in F_q^{m x n} and B in F_q^{m x m}.
struct MatrixPair {
  MatrixCode a, b, c;
  std::size_t t = 0;
  bool locating_only = false;
};

/// The left factors used in products with A: B itself, or phi_n(B).
inline ExtLinearCode effective_b(const ExtPair& p) {
  if (p.star_basis || p.b.length() == p.a.tower().m()) return p.b;
  return apply_phi(StarContext(p.a.tower(), p.b.length()), p.b);
}

/// b * a for b a row of effective_b(p).
inline Vector pair_star(const ExtPair& p, std::span<const Element> b, std::span<const Element> a) {
  return p.star_basis ? star(*p.star_basis, b, a) : star(p.a.tower(), b, a);
}

/// span of b * (alpha_l a) over the bases of effective_b(p) and A.
ExtLinearCode pair_product(const ExtPair& p);

}  // namespace rankecp
