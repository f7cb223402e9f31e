// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"
#include "rankecp/codes.hpp"
#include "rankecp/representation.hpp"
#include "support.hpp"

using namespace rankecp;
using rankecp::testing::all_vectors;

TEST_SUITE("matrix_space") {

TEST_CASE("mat_rep on F_4 with basis (1, w)") {
  const auto t = FieldTower::make(2, 2);
  const Matrix m = mat_rep(t.alpha(), Vector{2, 3});
  CHECK(m == Matrix::from_rows(t.base_field(), {{0, 1}, {1, 1}}, 2));
  CHECK(mat_rep(t.alpha(), Vector{0, 0}).is_zero());
  CHECK(rank_weight(t.alpha(), Vector{2, 3}) == 2);
  CHECK(rank_weight(t.alpha(), Vector{0, 0}) == 0);
  CHECK(rank_support(t.alpha(), Vector{0, 0}).dimension() == 0);
}

TEST_CASE("mat_rep round trip and linearity") {
  const auto t = FieldTower::make(3, 3);
  const Field& f = *t.ext_field();
  Rng rng(11);
  for (int i = 0; i < 1000; ++i) {
    const Vector c = random_vector(f, 4, rng), d = random_vector(f, 4, rng);
    CHECK(rep_inverse(t.alpha(), mat_rep(t.alpha(), c)) == c);
    CHECK(rep_inverse(t.alpha_dual(), mat_rep(t.alpha_dual(), c)) == c);
    CHECK(mat_rep(t.alpha(), add(f, c, d)) == mat_rep(t.alpha(), c) + mat_rep(t.alpha(), d));
    const Element lam = static_cast<Element>(rng.below(3));
    Matrix scaled = mat_rep(t.alpha(), c);
    for (std::size_t r = 0; r < scaled.rows(); ++r)
      for (std::size_t k = 0; k < scaled.cols(); ++k) scaled(r, k) = t.base_field()->mul(lam, scaled(r, k));
    CHECK(mat_rep(t.alpha(), scale(f, lam, c)) == scaled);
  }
}

TEST_CASE("rank weight and support") {
  const auto t = FieldTower::make(2, 4);
  CHECK(rank_weight(t.alpha(), Vector(5, 1)) == 1);
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    const Vector c = random_vector(*t.ext_field(), 6, rng);
    const std::size_t w = rank_weight(t.alpha(), c);
    CHECK(w <= 4);
    CHECK(rank_support(t.alpha(), c).dimension() == w);
    CHECK(w <= hamming_weight(c));
  }
  const auto u = FieldTower::make(2, 2);
  for (const auto& c : all_vectors(*u.ext_field(), 2)) CHECK(rank_weight(u.alpha(), c) <= hamming_weight(c));
}

TEST_CASE("diagonal and extension embeddings") {
  const auto f2 = FieldTower::make(2, 1).base_field();
  const Matrix d = diag_embed(f2, Vector{1, 0, 1});
  CHECK(rank(d) == 2);
  CHECK(d(0, 0) == 1);
  CHECK(d(1, 1) == 0);
  CHECK(diag_embed(f2, Vector{0, 0, 0}).is_zero());
  CHECK(diag_embed(f2, Vector(4, 1)) == Matrix::identity(f2, 4));

  const auto t = FieldTower::make(2, 2);
  CHECK(extension_embed(t, Vector{1, 1}) == Vector{1, 2});
  CHECK(extension_embed(t, Vector{0, 0}) == Vector{0, 0});
  for (const auto& c : all_vectors(*t.base_field(), 2))
    CHECK(rank_weight(t.alpha(), extension_embed(t, c)) == hamming_weight(c));
  const auto t3 = FieldTower::make(3, 3);
  for (const auto& c : all_vectors(*t3.base_field(), 3))
    CHECK(rank(diag_embed(t3.base_field(), c)) == hamming_weight(c));
}

TEST_CASE("solve_linear") {
  const auto t = FieldTower::make(2, 2);
  const FieldPtr& f = t.ext_field();
  const auto id = Matrix::identity(f, 3);
  const auto s = solve_linear(id, Vector{1, 2, 3});
  REQUIRE(s.unique());
  CHECK(*s.particular == Vector{1, 2, 3});

  const auto z = solve_linear(Matrix(f, 2, 3), Vector{0, 0});
  CHECK(z.consistent());
  CHECK(z.kernel.dimension() == 3);
  CHECK_FALSE(solve_linear(Matrix(f, 2, 3), Vector{1, 0}).consistent());

  Rng rng(8);
  for (int i = 0; i < 100; ++i) {
    Matrix a;
    do a = random_matrix(f, 5, 5, rng);
    while (rank(a) != 5);
    const Vector b = random_vector(*f, 5, rng);
    const auto sol = solve_linear(a, b);
    REQUIRE(sol.unique());
    Vector ax(5, 0);
    for (std::size_t r = 0; r < 5; ++r) ax[r] = dot(*f, a.row(r), *sol.particular);
    CHECK(ax == b);
  }
}

TEST_CASE("rank-nullity and canonical subspaces") {
  const auto t = FieldTower::make(3, 2);
  const FieldPtr& f = t.ext_field();
  Rng rng(21);
  for (int i = 0; i < 100; ++i) {
    const std::size_t rows = 1 + rng.below(5), cols = 1 + rng.below(6);
    const Matrix a = random_matrix(f, rows, cols, rng);
    CHECK(rank(a) + kernel(a).rows() == cols);

    // Same space from a different generating set: identical RREF.
    const Subspace s = Subspace::span(a);
    Matrix mix;
    do mix = random_matrix(f, rows, rows, rng);
    while (rank(mix) != rows);
    const Subspace s2 = Subspace::span(mix * a);
    CHECK(s == s2);
    CHECK(s.contains(s2));
    CHECK(s2.contains(s));
    CHECK(s.orthogonal().orthogonal() == s);
    CHECK(s.dimension() + s.orthogonal().dimension() == cols);
  }
}

}
