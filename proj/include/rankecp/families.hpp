// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rankecp/codes.hpp"
#include "rankecp/pair.hpp"
#include "rankecp/rng.hpp"

namespace rankecp {

/// Gab_{k,m,n}(r, b): evaluations at b of sum_{j<k} a_j x^{[jr]}. m comes from
/// the tower and n = |b|.
struct GabidulinSpec {
  std::size_t k = 0;
  std::uint32_t r = 1;
  Vector b;
};

/// Throws ParameterError unless n <= m, k <= n, gcd(r, m) = 1 and b is F_q-independent.
void validate(const FieldTower& tower, const GabidulinSpec& spec);
ExtLinearCode gabidulin(const FieldTower& tower, const GabidulinSpec& spec);

struct GabidulinDual {
  ExtLinearCode code;
  /// A point vector b' with code = Gab_{n-k}(r, b'), when one was recovered.
  std::optional<Vector> b_prime;
};

/// The dual computed generically, then recognised as a Gabidulin code: with h
/// spanning Gab_{n-1}(r, b)^perp the candidate b' = h^{[-(n-k-1)r]} is kept
/// only if Gab_{n-k}(r, b') reproduces the dual.
GabidulinDual gabidulin_dual(const FieldTower& tower, const GabidulinSpec& spec);

/// A = Gab_{t+1}(r, b), B = Gab_{t,m,m}(r, alpha), C = Gab_{2t}(r, b)^perp.
/// With `b_on_alpha_n` (r = 1 only) B is Gab_{t,m,n}(1, alpha_n) instead.
ExtPair gabidulin_recp(const FieldTower& tower, std::size_t t, std::uint32_t r, const Vector& b,
                       bool b_on_alpha_n = false);

/// True when x, x^{[1]}, ..., x^{[d-1]} are F_q-independent, d = [f : F_q].
bool is_normal(const FieldPtr& f, std::uint32_t q, Element x);
/// Seeded random search for a normal element of f over F_q.
Element find_normal_element(const FieldPtr& f, std::uint32_t q, Rng& rng);

/// (alpha, alpha^{[1]}, ..., alpha^{[n-1]}) as a basis of F_{q^n}/F_q.
Basis normal_basis(const FieldTower& tower, Element normal);

/// M_alpha(I): rows (alpha^{[i]}, alpha^{[i+1]}, ..., alpha^{[i+n-1]}), i in I.
Matrix moore_index_matrix(const FieldTower& tower, Element normal, const std::vector<std::size_t>& index);

/// True when i in I implies i + m mod n in I.
bool is_closed(const std::vector<std::size_t>& index, std::size_t m, std::size_t n);

/// Elements of F_{q^m}^n satisfying the parity rows given over F_{q^n}.
ExtLinearCode subfield_subcode(const FieldTower& tower, const Matrix& parity_top);
/// Intersection of the F_{q^n}-code generated by `generator_top` with F_{q^m}^n.
ExtLinearCode subfield_subcode_of_span(const FieldTower& tower, const Matrix& generator_top);

/// The F_{q^m}-linear code with parity-check matrix M_alpha(I).
ExtLinearCode skew_cyclic_code(const FieldTower& tower, Element normal, const std::vector<std::size_t>& index);

/// (c_{n-1}^q, c_0^q, ..., c_{n-2}^q)
Vector q_shift(const FieldTower& tower, std::span<const Element> c);
bool is_q_cyclic(const ExtLinearCode& c);

/// Longest run of cyclically consecutive elements of `index` modulo n.
std::size_t longest_run(const std::vector<std::size_t>& index, std::size_t n);

/// A, B: subfield subcodes of the spans of M_alpha(I), M_alpha(J); C has
/// parity-check matrix M_alpha(I + J). Products b * a are taken in F_{q^n}^n
/// over the normal basis. The pair is flagged locating-only unless
/// d_R(A) + d_R(C) > n is confirmed by enumeration.
ExtPair skew_cyclic_locating_pair(const FieldTower& tower, Element normal, const std::vector<std::size_t>& i_set,
                                  const std::vector<std::size_t>& j_set, std::size_t t);

}  // namespace rankecp
