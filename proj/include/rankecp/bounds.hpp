// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rankecp/codes.hpp"
#include "rankecp/rng.hpp"

namespace rankecp {

struct Premise {
  std::string statement;
  bool holds = false;
  std::optional<std::size_t> measured;  ///< brute-forced quantity behind the premise, if any
};

/// Outcome of checking one bound. Premises are established by enumeration;
/// the conclusion is only evaluated when all of them hold.
struct BoundReport {
  std::string name;
  std::map<std::string, std::int64_t> parameters;
  std::vector<Premise> premises;
  std::string conclusion;
  std::optional<std::size_t> actual;  ///< brute-forced left-hand side of the conclusion
  bool vacuous = false;               ///< the bounded code is zero
  bool equality = false;              ///< the inequality binds
  std::optional<bool> mrd;            ///< MRD certification of the bounded code, when applicable
  std::optional<Matrix> witness;      ///< counterexample to a failed premise
  bool pass = false;

  bool premises_hold() const;
};

/// d_R(D) + d_R(D*) <= n + 2.
BoundReport singleton_sum(const MatrixCode& d);

/// B A in C*, d_R(A*) > a > 0, d_R(B*) > b > 0  =>  d_R(C) >= a + b.
BoundReport bound_product(const MatrixCode& a, const MatrixCode& b, const MatrixCode& c, std::size_t a_param,
                          std::size_t b_param);

/// B A in C*, d_R(B*) > b > 0, d_R(C*) > c > 0  =>  d_R(A) >= b + c. When
/// dim A is a multiple of m the report also carries an MRD check of A.
BoundReport bound_dual_product(const MatrixCode& a, const MatrixCode& b, const MatrixCode& c, std::size_t b_param,
                               std::size_t c_param);

/// (1) B A in C*, (2) dim A > m a, (3) d_R(B*) > b, (4) d_R(A) + a + b > n,
/// (5) d_R(A*) > 1  =>  d_R(C) > a + b.
BoundReport roos_bound(const MatrixCode& a, const MatrixCode& b, const MatrixCode& c, std::size_t a_param,
                       std::size_t b_param);

struct RankHtParams {
  std::size_t b = 0, c = 1, delta = 2, w = 0;
};

/// Skew-cyclic code with parity-check matrix M_alpha(I) (root space spanned by
/// alpha^{[i]}, i in I) against the set { alpha^{[b + i + j c]} }.
BoundReport rank_ht_bound(const FieldTower& tower, Element normal, const std::vector<std::size_t>& root_index,
                          const RankHtParams& params);

enum class Orientation { Auto, AsGiven, Transposed };

/// Singleton bound with equality. AsGiven: dim = m (n - d + 1); Transposed:
/// dim = n (m - d + 1); Auto picks AsGiven iff n <= m. The zero code is MRD.
bool mrd_check(const MatrixCode& code, Orientation orientation = Orientation::Auto);
bool mrd_check(const ExtLinearCode& code, Orientation orientation = Orientation::Auto);

/// The F_q-span of all products B A (an m x n code).
MatrixCode product_code(const MatrixCode& b, const MatrixCode& a);

/// Random codes with B A in C*: A and B are rank-preserving images of subcodes
/// of Gabidulin-derived codes or uniformly random codes, and C is a random
/// subcode of (B A)*.
struct BoundInstance {
  MatrixCode a, b, c;
};
BoundInstance random_bound_instance(std::uint32_t q, std::size_t m, std::size_t n, Rng& rng);

}  // namespace rankecp
