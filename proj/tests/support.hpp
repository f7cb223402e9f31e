// SPDX-License-Identifier: Apache-2.0
// Shared helpers for the test programs.

#pragma once

#include <set>
#include <vector>

#include "rankecp/codes.hpp"
#include "rankecp/matrix.hpp"

namespace rankecp::testing {

/// Every vector of F^n, in odometer order (first coordinate fastest).
inline std::vector<Vector> all_vectors(const Field& f, std::size_t n) {
  std::vector<Vector> out;
  Vector v(n, 0);
  while (true) {
    out.push_back(v);
    std::size_t i = 0;
    while (i < n && ++v[i] == f.size()) v[i++] = 0;
    if (i == n) break;
  }
  return out;
}

/// All distinct rank-one m x n matrices u v^T.
inline std::vector<Matrix> all_rank_one(const FieldPtr& fq, std::size_t m, std::size_t n) {
  std::set<Vector> seen;
  std::vector<Matrix> out;
  const auto us = all_vectors(*fq, m);
  const auto vs = all_vectors(*fq, n);
  for (const auto& u : us) {
    if (is_zero(u)) continue;
    for (const auto& v : vs) {
      if (is_zero(v)) continue;
      Matrix e(fq, m, n);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) e(i, j) = fq->mul(u[i], v[j]);
      if (seen.insert(e.data()).second) out.push_back(std::move(e));
    }
  }
  return out;
}

}  // namespace rankecp::testing
