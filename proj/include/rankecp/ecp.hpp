// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <span>
#include <string>

#include "rankecp/codes.hpp"
#include "rankecp/pair.hpp"

namespace rankecp {

enum class DecodeStatus { Success, LocatedOnly, Failure };

const char* to_string(DecodeStatus s);

template <class Word>
struct DecodeOutcome {
  DecodeStatus status = DecodeStatus::Failure;
  std::optional<Word> codeword;
  std::optional<Word> error;
  std::optional<Subspace> located;  ///< L' = Row(a)^perp for the chosen a
  std::size_t kernel_dim = 0;       ///< dim_{F_q} K(r)
  std::string reason;               ///< set on failure
};

/// K(r) = { a in A : (b * a) . r = 0 for all b in B }, returned through M_alpha
/// as an F_q-linear matrix code (its canonical basis fixes the chosen a).
MatrixCode kernel_space(const ExtPair& p, std::span<const Element> r);
/// K(R) = { A in A : <B A, R> = 0 for all B in B }.
MatrixCode kernel_space(const MatrixPair& p, const Matrix& r);

/// The e with RSupp(e) in L and e H^T = r H^T, returned as (r - e, e).
/// Throws ParameterError when dim L >= d (if `distance` is given) or the
/// solution is not unique, InconsistentInput when there is none.
std::pair<Vector, Vector> erasure_decode(const ExtLinearCode& c, std::span<const Element> r, const Subspace& l,
                                         std::optional<std::size_t> distance = std::nullopt);
/// Matrix version: E = Z G_L with Z unknown over F_q, solved against a basis of C*.
std::pair<Matrix, Matrix> erasure_decode(const MatrixCode& c, const Matrix& r, const Subspace& l,
                                         std::optional<std::size_t> distance = std::nullopt);

DecodeOutcome<Vector> decode_type1(const ExtPair& p, std::span<const Element> r);
DecodeOutcome<Matrix> decode_type2(const MatrixPair& p, const Matrix& r);

/// L' containing RSupp(e) when wt(e) <= t; nullopt when K(r) = 0.
std::optional<Subspace> locate_support(const ExtPair& p, std::span<const Element> r);
std::optional<Subspace> locate_support(const MatrixPair& p, const Matrix& r);

template <class Word>
struct PairCertificate {
  bool product = false;       ///< B * A in C^perp (or BA in C*)
  bool dimension = false;     ///< dim A > t (or dim_{F_q} A > mt)
  bool dual_distance = false; ///< d_R(B^perp) > t (or d_R(B*) > t)
  bool distance_sum = false;  ///< d_R(A) + d_R(C) > n
  std::optional<Word> product_witness;
  std::optional<Word> dual_witness;  ///< a minimum-weight word of B^perp
  std::optional<Word> a_witness, c_witness;
  std::size_t dim_a = 0, d_b_dual = 0, d_a = 0, d_c = 0;

  bool locating() const { return product && dimension && dual_distance; }
  bool correcting() const { return locating() && distance_sum; }
};

PairCertificate<Vector> validate_pair(const ExtPair& p);
PairCertificate<Matrix> validate_pair(const MatrixPair& p);

/// (M_alpha(A), M_alpha(B)) for M_alpha'(C).
MatrixPair convert_pair(const ExtPair& p);

// ---------------------------------------------------------------------------
// Hamming-metric error-correcting pairs and their diagonal embedding.

struct HammingEcp {
  Subspace a, b, c;  ///< codes in F_q^n
  std::size_t t = 0;
};

/// GRS_k(x, y): rows (y_i x_i^j)_i for j < k.
Subspace grs_code(const FieldPtr& f, const Vector& x, const Vector& y, std::size_t k);
/// For C = GRS_k(x, 1) and t = floor((n - k) / 2): A = GRS_{t+1}(x, 1) and
/// B = GRS_t(x, y') with y'_i = 1 / prod_{j != i} (x_i - x_j), so A * B lies in
/// GRS_{n-k}(x, y') = C^perp.
HammingEcp grs_pair(const FieldPtr& f, const Vector& x, std::size_t k);

/// Minimum Hamming distance by enumeration (n + 1 for the zero code).
std::size_t hamming_distance(const Subspace& code);

struct HammingCertificate {
  bool product = false, dimension = false, dual_distance = false, distance_sum = false;
  bool valid() const { return product && dimension && dual_distance && distance_sum; }
};
HammingCertificate validate(const HammingEcp& ecp);

/// (D(A), D(B), D(C)); throws ParameterError if the Hamming ECP is invalid.
MatrixPair hamming_embed_pair(const HammingEcp& ecp);

/// Type-II machinery on D(r) for the embedded pair; returns the Hamming words.
DecodeOutcome<Vector> decode_hamming(const MatrixPair& embedded, std::span<const Element> r);
/// The classical error-correcting-pair decoder working on vectors directly.
DecodeOutcome<Vector> decode_hamming_classical(const HammingEcp& ecp, std::span<const Element> r);
/// K_H(r) = { a in A : (a * b) . r = 0 for all b in B }.
Subspace hamming_kernel(const HammingEcp& ecp, std::span<const Element> r);

}  // namespace rankecp
