// SPDX-License-Identifier: Apache-2.0

#include <algorithm>

#include "doctest.h"
#include "rankecp/codes.hpp"
#include "rankecp/ecp.hpp"
#include "rankecp/errors.hpp"
#include "rankecp/families.hpp"
#include "rankecp/representation.hpp"
#include "support.hpp"

using namespace rankecp;
using rankecp::testing::all_vectors;

namespace {

/// Minimum rank weight over every nonzero vector of the ambient space that the code contains.
std::size_t naive_distance(const ExtLinearCode& c) {
  std::size_t best = c.length() + 1;
  for (const auto& v : all_vectors(*c.tower().ext_field(), c.length()))
    if (!is_zero(v) && c.contains(v)) best = std::min(best, rank_weight(c.tower().alpha(), v));
  return best;
}

std::size_t naive_distance(const MatrixCode& c) {
  std::size_t best = c.cols() + 1;
  for (const auto& v : all_vectors(*c.field(), c.rows() * c.cols())) {
    const Matrix mv = Matrix::unflatten(c.field(), v, c.rows(), c.cols());
    if (!is_zero(v) && c.contains(mv)) best = std::min(best, rank(mv));
  }
  return best;
}

std::vector<Vector> codewords(const ExtLinearCode& c) {
  std::vector<Vector> out;
  for (const auto& v : all_vectors(*c.tower().ext_field(), c.length()))
    if (c.contains(v)) out.push_back(v);
  return out;
}

}  // namespace

TEST_SUITE("code_core") {

TEST_CASE("extension duals") {
  const auto t = FieldTower::make(2, 2);
  const auto c = ExtLinearCode::from_generators(t, {{1, 2}}, 2);
  CHECK(dual(c) == ExtLinearCode::from_generators(t, {{2, 1}}, 2));
  CHECK(dual(ExtLinearCode::full(t, 3)).dimension() == 0);
  Rng rng(1);
  const auto u = FieldTower::make(3, 2);
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = 1 + rng.below(5);
    const auto code = random_ext_code(u, n, rng.below(n + 1), rng);
    CHECK(dual(dual(code)) == code);
    CHECK(code.dimension() + dual(code).dimension() == n);
    const Matrix g = code.generator(), h = code.parity_check();
    for (std::size_t a = 0; a < g.rows(); ++a)
      for (std::size_t b = 0; b < h.rows(); ++b) CHECK(dot(*u.ext_field(), g.row(a), h.row(b)) == 0);
  }
}

TEST_CASE("trace duals of matrix codes") {
  const auto t = FieldTower::make(2, 3);
  const FieldPtr& fq = t.base_field();
  CHECK(dual(MatrixCode::zero(fq, 3, 2)).dimension() == 6);
  Rng rng(2);
  for (int i = 0; i < 30; ++i) {
    const auto c = random_matrix_code(fq, 3, 3, rng.below(10), rng);
    const auto d = dual(c);
    CHECK(c.dimension() + d.dimension() == 9);
    CHECK(dual(d) == c);
    for (const auto& x : c.basis())
      for (const auto& y : d.basis()) {
        const Matrix p = x * y.transposed();
        Element tr = 0;
        for (std::size_t k = 0; k < 3; ++k) tr = fq->add(tr, p(k, k));
        CHECK(tr == 0);
      }
  }
}

TEST_CASE("duality: M_alpha'(C^perp) = M_alpha(C)*") {
  for (std::uint32_t m : {2u, 3u}) {
    const auto t = FieldTower::make(2, m);
    Rng rng(m);
    for (int i = 0; i < 50; ++i) {
      const auto c = random_ext_code(t, m, rng.below(m + 1), rng);
      CHECK(to_matrix_code(dual(c), BasisChoice::AlphaPrime) == dual(to_matrix_code(c, BasisChoice::Alpha)));
    }
  }
}

TEST_CASE("matrix representation preserves distances") {
  const auto t = FieldTower::make(2, 3);
  Rng rng(3);
  CHECK(to_matrix_code(ExtLinearCode::zero(t, 3)).dimension() == 0);
  for (int i = 0; i < 20; ++i) {
    const auto c = random_ext_code(t, 3, 1 + rng.below(2), rng);
    const auto mc = to_matrix_code(c);
    CHECK(mc.dimension() == 3 * c.dimension());
    CHECK(min_rank_distance(c).distance == min_rank_distance(mc).distance);
    CHECK(min_rank_distance(dual(c)).distance == min_rank_distance(dual(mc)).distance);
  }
}

TEST_CASE("shortening") {
  const auto t = FieldTower::make(2, 2);
  const FieldPtr& fq = t.base_field();
  Rng rng(4);
  for (int i = 0; i < 30; ++i) {
    const auto a = random_ext_code(t, 3, 1 + rng.below(3), rng);
    CHECK(shorten(a, Subspace(fq, 3)) == a);
    CHECK(shorten(a, Subspace::whole(fq, 3)).dimension() == 0);
    const std::size_t dl = rng.below(4);
    const Subspace l = Subspace::span(random_matrix(fq, dl, 3, rng));
    const auto s = shorten(a, l);
    CHECK(s.dimension() + l.dimension() >= a.dimension());
    const Subspace lperp = l.orthogonal();
    std::size_t filtered = 0;
    for (const auto& v : codewords(a))
      if (lperp.contains(rank_support(t.alpha(), v))) {
        ++filtered;
        CHECK(s.contains(v));
      }
    CHECK(filtered == codebook_size(s).value());
  }
  for (int i = 0; i < 20; ++i) {
    const auto a = random_matrix_code(fq, 2, 3, 1 + rng.below(5), rng);
    const Subspace l = Subspace::span(random_matrix(fq, rng.below(3), 3, rng));
    const auto s = shorten(a, l);
    const Subspace lperp = l.orthogonal();
    std::size_t filtered = 0;
    for (const auto& v : all_vectors(*fq, 6)) {
      const Matrix mv = Matrix::unflatten(fq, v, 2, 3);
      if (!a.contains(mv)) continue;
      if (lperp.contains(Subspace::span(mv))) {
        ++filtered;
        CHECK(s.contains(mv));
      }
    }
    CHECK(filtered == codebook_size(s).value());
  }
}

TEST_CASE("minimum distance") {
  const auto t = FieldTower::make(2, 2);
  CHECK(min_rank_distance(ExtLinearCode::zero(t, 2)).distance == 3);
  CHECK(min_rank_distance(MatrixCode::zero(t.base_field(), 2, 5)).distance == 6);
  CHECK(min_rank_distance(gabidulin(t, {1, 1, {1, 2}})).distance == 2);
  const auto u = FieldTower::make(2, 4);
  const auto g = gabidulin(u, {2, 1, u.alpha().elements()});
  const auto md = min_rank_distance(g);
  CHECK(md.distance == 3);
  REQUIRE(md.witness);
  CHECK(rank_weight(u.alpha(), *md.witness) == 3);
  CHECK(g.contains(*md.witness));
  CHECK(min_rank_distance(g, DistanceMode::Bound).distance == 3);
  CHECK_THROWS_AS(min_rank_distance(gabidulin(FieldTower::make(2, 8), {4, 1, FieldTower::make(2, 8).alpha().elements()})),
                  SizeError);
}

TEST_CASE("brute force matches a naive ambient scan, including non-prime q") {
  for (auto [q, m] : {std::pair{2u, 2u}, {4u, 2u}, {3u, 2u}, {8u, 1u}, {9u, 1u}}) {
    const auto t = FieldTower::make(q, m);
    Rng rng(q * 10 + m);
    for (int i = 0; i < 8; ++i) {
      const std::size_t n = 2 + rng.below(2);
      const auto c = random_ext_code(t, n, 1 + rng.below(n), rng);
      CAPTURE(q);
      CHECK(min_rank_distance(c).distance == naive_distance(c));
      CHECK(codebook_size(c).value() == codewords(c).size());
    }
    for (int i = 0; i < 4 && q <= 4; ++i) {
      const auto c = random_matrix_code(t.base_field(), 2, 2, 1 + rng.below(3), rng);
      CHECK(min_rank_distance(c).distance == naive_distance(c));
    }
  }
}

TEST_CASE("Singleton bound on brute-forced codes") {
  Rng rng(5);
  for (std::uint32_t m : {2u, 3u}) {
    const auto t = FieldTower::make(2, m);
    for (int i = 0; i < 30; ++i) {
      const std::size_t n = 1 + rng.below(4);
      const auto c = random_matrix_code(t.base_field(), m, n, rng.below(m * n + 1), rng);
      const std::size_t d = min_rank_distance(c).distance;
      if (c.dimension() == 0) continue;
      const std::size_t big = std::max<std::size_t>(m, n), small = std::min<std::size_t>(m, n);
      CHECK(c.dimension() <= big * (small - d + 1));
    }
  }
}

TEST_CASE("Hamming distance equals rank distance of the diagonal embedding") {
  const auto f2 = FieldTower::make(2, 1).base_field();
  Rng rng(6);
  for (int i = 0; i < 30; ++i) {
    const std::size_t n = 3 + rng.below(3);
    const Subspace h = Subspace::span(random_matrix(f2, 1 + rng.below(n - 1), n, rng));
    if (h.dimension() == 0) continue;
    std::vector<Matrix> gens;
    for (std::size_t r = 0; r < h.dimension(); ++r) gens.push_back(diag_embed(f2, h.basis().row(r)));
    const auto d = MatrixCode::from_matrices(f2, n, n, gens);
    CHECK(hamming_distance(h) == min_rank_distance(d).distance);
  }
}

TEST_CASE("ML oracle") {
  const auto t = FieldTower::make(2, 4);
  const auto g = gabidulin(t, {2, 1, t.alpha().elements()});
  Rng rng(7);
  const MlOracle oracle(g);
  for (int i = 0; i < 50; ++i) {
    const Vector c = random_codeword(g, rng);
    const auto same = oracle.decode(c);
    CHECK(same.codeword == c);
    CHECK(same.distance == 0);
    CHECK_FALSE(same.tie);
    const Vector r = add(*t.ext_field(), c, random_rank_error(t.alpha(), 4, 1, rng));
    const auto d = oracle.decode(r);
    CHECK(d.codeword == c);
    CHECK(d.distance == 1);
    CHECK_FALSE(d.tie);
  }
  // a word equidistant from two codewords exists beyond the unique radius
  const auto words = codewords(g);
  bool found = false;
  for (int i = 0; i < 200 && !found; ++i) {
    const Vector r = random_vector(*t.ext_field(), 4, rng);
    const auto d = oracle.decode(r);
    std::size_t at_min = 0, best = 99;
    Vector first;
    for (const auto& w : words) {
      const std::size_t dist = rank_weight(t.alpha(), sub(*t.ext_field(), r, w));
      if (dist < best) {
        best = dist;
        at_min = 0;
      }
      if (dist == best) ++at_min;
    }
    for (const auto& w : words)
      if (rank_weight(t.alpha(), sub(*t.ext_field(), r, w)) == best && (first.empty() || w < first)) first = w;
    CHECK(d.distance == best);
    CHECK(d.tie == (at_min > 1));
    CHECK(d.codeword == first);
    found = d.tie;
  }
  CHECK(found);
}

TEST_CASE("random rank errors") {
  const auto t = FieldTower::make(2, 4);
  const FieldPtr& fq = t.base_field();
  Rng rng(8);
  CHECK(random_rank_error(fq, 4, 4, 0, rng).is_zero());
  for (std::size_t r = 0; r <= 4; ++r)
    for (int i = 0; i < 250; ++i) CHECK(rank(random_rank_error(fq, 4, 4, r, rng)) == r);
  Rng a(99), b(99);
  CHECK(random_rank_error(fq, 4, 4, 2, a) == random_rank_error(fq, 4, 4, 2, b));
  CHECK(random_rank_error(t.alpha(), 4, 3, a) == random_rank_error(t.alpha(), 4, 3, b));
  CHECK_THROWS_AS(random_rank_error(fq, 4, 3, 4, rng), ParameterError);
}

}
