// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rankecp/field.hpp"
#include "rankecp/matrix.hpp"
#include "rankecp/rng.hpp"

namespace rankecp {

/// Largest codebook the brute-force routines will enumerate.
inline constexpr std::uint64_t kEnumerationBudget = std::uint64_t{1} << 20;

/// An F_{q^m}-linear code in F_{q^m}^n, stored by its RREF generator matrix.
class ExtLinearCode {
 public:
  ExtLinearCode(FieldTower tower, Subspace space);

  static ExtLinearCode from_generators(FieldTower tower, const std::vector<Vector>& rows, std::size_t n);
  static ExtLinearCode zero(FieldTower tower, std::size_t n);
  static ExtLinearCode full(FieldTower tower, std::size_t n);

  const FieldTower& tower() const noexcept { return tower_; }
  std::size_t length() const noexcept { return space_.ambient(); }
  std::size_t dimension() const noexcept { return space_.dimension(); }
  const Subspace& space() const noexcept { return space_; }
  const Matrix& generator() const noexcept { return space_.basis(); }
  /// RREF basis of the dual code; G H^T = 0.
  const Matrix& parity_check() const noexcept { return parity_; }

  bool contains(std::span<const Element> c) const { return space_.contains(c); }
  Vector encode(std::span<const Element> message) const;

  bool operator==(const ExtLinearCode& o) const { return space_ == o.space_; }

 private:
  FieldTower tower_;
  Subspace space_;
  Matrix parity_;
};

enum class BasisChoice { Alpha, AlphaPrime };

/// An F_q-linear code in F_q^{m x n}; matrices are flattened row-major and the
/// flattened basis is kept in RREF.
class MatrixCode {
 public:
  MatrixCode(FieldPtr fq, std::size_t m, std::size_t n, Subspace flat,
             BasisChoice basis_used = BasisChoice::Alpha);

  static MatrixCode from_matrices(FieldPtr fq, std::size_t m, std::size_t n, const std::vector<Matrix>& gens,
                                  BasisChoice basis_used = BasisChoice::Alpha);
  static MatrixCode zero(FieldPtr fq, std::size_t m, std::size_t n);

  const FieldPtr& field() const noexcept { return fq_; }
  std::size_t rows() const noexcept { return m_; }
  std::size_t cols() const noexcept { return n_; }
  std::size_t dimension() const noexcept { return flat_.dimension(); }
  const Subspace& space() const noexcept { return flat_; }
  std::vector<Matrix> basis() const;
  Matrix basis_matrix(std::size_t i) const;
  BasisChoice basis_used() const noexcept { return basis_used_; }

  bool contains(const Matrix& a) const;
  bool contains(const MatrixCode& other) const { return flat_.contains(other.flat_); }

  bool operator==(const MatrixCode& o) const {
    return m_ == o.m_ && n_ == o.n_ && flat_ == o.flat_;
  }

 private:
  FieldPtr fq_;
  std::size_t m_, n_;
  Subspace flat_;
  BasisChoice basis_used_;
};

ExtLinearCode dual(const ExtLinearCode& c);
/// Dual under <C, D> = Tr(C D^T).
MatrixCode dual(const MatrixCode& c);

const Basis& basis_of(const FieldTower& tower, BasisChoice which);
/// M_beta(C): the F_q-span of M_beta(alpha_l g_j).
MatrixCode to_matrix_code(const ExtLinearCode& c, BasisChoice which = BasisChoice::Alpha);

/// A(L) = { a in A : RSupp(a) is orthogonal to L }; L is a subspace of F_q^n.
ExtLinearCode shorten(const ExtLinearCode& a, const Subspace& l);
MatrixCode shorten(const MatrixCode& a, const Subspace& l);

/// Number of codewords, or nullopt if it exceeds 2^64.
std::optional<std::uint64_t> codebook_size(const ExtLinearCode& c);
std::optional<std::uint64_t> codebook_size(const MatrixCode& c);

enum class DistanceMode { Brute, Bound };

template <class Word>
struct MinimumDistance {
  std::size_t distance;         ///< n + 1 for the zero code
  std::optional<Word> witness;  ///< a codeword of minimum weight (brute mode)
};

/// Brute mode enumerates the code (SizeError beyond kEnumerationBudget);
/// bound mode returns the Singleton upper bound.
MinimumDistance<Vector> min_rank_distance(const ExtLinearCode& c, DistanceMode mode = DistanceMode::Brute);
MinimumDistance<Matrix> min_rank_distance(const MatrixCode& c, DistanceMode mode = DistanceMode::Brute);

template <class Word>
struct MlDecision {
  Word codeword;
  std::size_t distance;
  bool tie;
};

/// Exhaustive nearest-codeword search in the rank metric. The codebook is
/// materialized once so repeated queries are cheap.
class MlOracle {
 public:
  explicit MlOracle(const ExtLinearCode& c);
  explicit MlOracle(const MatrixCode& c);

  MlDecision<Vector> decode(std::span<const Element> received) const;
  MlDecision<Matrix> decode(const Matrix& received) const;

 private:
  struct Best {
    std::size_t index;
    std::size_t distance;
    bool tie;
  };
  Best search(std::span<const Element> flat_received) const;

  FieldPtr fq_;
  std::size_t m_, n_;
  std::optional<Basis> basis_;           // set for extension codes
  std::vector<Vector> flat_;             // M(c), row-major
  std::vector<Vector> words_;            // extension form (extension codes only)
  std::vector<std::vector<std::uint64_t>> masks_;  // row bitmasks when q = 2
};

MlDecision<Vector> ml_decode_oracle(const ExtLinearCode& c, std::span<const Element> received);
MlDecision<Matrix> ml_decode_oracle(const MatrixCode& c, const Matrix& received);

/// X Y with X in F_q^{m x t}, Y in F_q^{t x n} uniformly random of full rank t.
Matrix random_rank_error(const FieldPtr& fq, std::size_t m, std::size_t n, std::size_t t, Rng& rng);
/// Same error in extension form under `basis`.
Vector random_rank_error(const Basis& basis, std::size_t n, std::size_t t, Rng& rng);

Element random_element(const Field& f, Rng& rng);
Vector random_vector(const Field& f, std::size_t n, Rng& rng);
Matrix random_matrix(const FieldPtr& f, std::size_t rows, std::size_t cols, Rng& rng);
ExtLinearCode random_ext_code(const FieldTower& tower, std::size_t n, std::size_t k, Rng& rng);
MatrixCode random_matrix_code(const FieldPtr& fq, std::size_t m, std::size_t n, std::size_t k, Rng& rng);
/// Uniformly random codeword.
Vector random_codeword(const ExtLinearCode& c, Rng& rng);
Matrix random_codeword(const MatrixCode& c, Rng& rng);

}  // namespace rankecp
