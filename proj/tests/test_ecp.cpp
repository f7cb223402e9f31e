// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"
#include "rankecp/codes.hpp"
#include "rankecp/ecp.hpp"
#include "rankecp/errors.hpp"
#include "rankecp/families.hpp"
#include "rankecp/representation.hpp"
#include "support.hpp"

using namespace rankecp;
using rankecp::testing::all_rank_one;

namespace {

struct Gab {
  FieldTower t = FieldTower::make(2, 4);
  ExtPair p = gabidulin_recp(t, 1, 1, t.alpha().elements());
  MatrixPair mp = convert_pair(p);
};

const Gab& gab() {
  static const Gab g;
  return g;
}

MatrixCode diag_code(const FieldPtr& f, const Subspace& s) {
  std::vector<Matrix> gens;
  for (std::size_t r = 0; r < s.dimension(); ++r) gens.push_back(diag_embed(f, s.basis().row(r)));
  return MatrixCode::from_matrices(f, s.ambient(), s.ambient(), gens);
}

}  // namespace

TEST_SUITE("ecp_decoder") {

TEST_CASE("K(r) for type-I pairs") {
  const auto& g = gab();
  const Field& f = *g.t.ext_field();
  const auto all_a = to_matrix_code(g.p.a);
  CHECK(kernel_space(g.p, Vector(4, 0)) == all_a);
  Rng rng(1);
  for (int i = 0; i < 30; ++i) {
    const Vector c = random_codeword(g.p.c, rng);
    CHECK(kernel_space(g.p, c) == all_a);
    const Vector e = random_rank_error(g.t.alpha(), 4, 1, rng);
    const Vector r = add(f, c, e);
    const auto k = kernel_space(g.p, r);
    CHECK(k == kernel_space(g.p, e));
    CHECK(k == to_matrix_code(shorten(g.p.a, rank_support(g.t.alpha(), e))));
  }
}

TEST_CASE("K(R) for type-II pairs") {
  const auto& g = gab();
  const FieldPtr& fq = g.t.base_field();
  CHECK(kernel_space(g.mp, Matrix(fq, 4, 4)) == g.mp.a);
  Rng rng(2);
  for (int i = 0; i < 30; ++i) {
    const Matrix c = random_codeword(g.mp.c, rng);
    CHECK(kernel_space(g.mp, c) == kernel_space(g.mp, Matrix(fq, 4, 4)));
    const Matrix e = random_rank_error(fq, 4, 4, 1, rng);
    CHECK(kernel_space(g.mp, c + e) == shorten(g.mp.a, Subspace::span(e)));
  }
}

TEST_CASE("A(L) is inside K(e), with equality on the error's support") {
  const auto& g = gab();
  Rng rng(3);
  for (int i = 0; i < 40; ++i) {
    const Vector e = random_rank_error(g.t.alpha(), 4, 1, rng);
    const Subspace l = rank_support(g.t.alpha(), e);
    const auto k = kernel_space(g.p, e);
    const auto al = to_matrix_code(shorten(g.p.a, l));
    CHECK(k.contains(al));
    CHECK(k == al);
    // any L containing the support still gives a subcode of K(e)
    const Subspace bigger = l.sum(Subspace::span(random_matrix(g.t.base_field(), 1, 4, rng)));
    CHECK(k.contains(to_matrix_code(shorten(g.p.a, bigger))));
  }
}

TEST_CASE("erasure decoding") {
  const auto t = FieldTower::make(2, 4);
  const Field& f = *t.ext_field();
  const auto c = gabidulin(t, {2, 1, t.alpha().elements()});
  Rng rng(4);
  const Vector w = random_codeword(c, rng);
  const auto [x0, e0] = erasure_decode(c, w, Subspace(t.base_field(), 4));
  CHECK(x0 == w);
  CHECK(is_zero(e0));
  for (int i = 0; i < 200; ++i) {
    const Vector cw = random_codeword(c, rng);
    const Vector e = random_rank_error(t.alpha(), 4, 1, rng);
    const auto [x, err] = erasure_decode(c, add(f, cw, e), rank_support(t.alpha(), e));
    CHECK(x == cw);
    CHECK(err == e);
  }
  const Vector e2 = random_rank_error(t.alpha(), 4, 2, rng);
  const Vector cw = random_codeword(c, rng);
  CHECK_NOTHROW(erasure_decode(c, add(f, cw, e2), rank_support(t.alpha(), e2)));
  const Subspace l3 = Subspace::span(random_rank_error(t.base_field(), 3, 4, 3, rng));
  CHECK_THROWS_AS(erasure_decode(c, cw, l3), ParameterError);
  // r not explained by the support model
  const Vector e1 = random_rank_error(t.alpha(), 4, 1, rng);
  Subspace other;
  do other = Subspace::span(random_matrix(t.base_field(), 1, 4, rng));
  while (other.dimension() == 0 || other.contains(rank_support(t.alpha(), e1)));
  CHECK_THROWS_AS(erasure_decode(c, add(f, cw, e1), other), InconsistentInput);

  const auto mc = to_matrix_code(c);
  const Matrix E = random_rank_error(t.base_field(), 4, 4, 1, rng);
  const Matrix C = random_codeword(mc, rng);
  const auto [X, EE] = erasure_decode(mc, C + E, Subspace::span(E));
  CHECK(X == C);
  CHECK(EE == E);
}

TEST_CASE("type-I decoding of all rank-1 errors") {
  const auto& g = gab();
  const Field& f = *g.t.ext_field();
  Rng rng(5);
  const auto errors = all_rank_one(g.t.base_field(), 4, 4);
  REQUIRE(errors.size() == 225);
  for (int k = 0; k < 3; ++k) {
    const Vector c = random_codeword(g.p.c, rng);
    const auto ok = decode_type1(g.p, c);
    CHECK(ok.status == DecodeStatus::Success);
    CHECK(is_zero(*ok.error));
    std::size_t exact = 0;
    for (const auto& em : errors) {
      const Vector e = rep_inverse(g.t.alpha(), em);
      const auto out = decode_type1(g.p, add(f, c, e));
      exact += out.status == DecodeStatus::Success && *out.codeword == c && *out.error == e;
    }
    CHECK(exact == errors.size());
  }
}

TEST_CASE("beyond the radius the decoder fails or is caught") {
  const auto& g = gab();
  const Field& f = *g.t.ext_field();
  Rng rng(6);
  std::size_t failures = 0;
  for (int i = 0; i < 200; ++i) {
    const Vector c = random_codeword(g.p.c, rng);
    const Vector r = add(f, c, random_rank_error(g.t.alpha(), 4, 2, rng));
    const auto out = decode_type1(g.p, r);
    if (out.status != DecodeStatus::Success) {
      ++failures;
      CHECK_FALSE(out.reason.empty());
      continue;
    }
    CHECK(*out.codeword != c);
    CHECK(g.p.c.contains(*out.codeword));
    CHECK(rank_weight(g.t.alpha(), sub(f, r, *out.codeword)) <= 1);
  }
  CHECK(failures > 0);
  // never a success at distance > t
  for (int i = 0; i < 300; ++i) {
    const Vector r = random_vector(f, 4, rng);
    const auto out = decode_type1(g.p, r);
    if (out.status == DecodeStatus::Success) {
      CHECK(g.p.c.contains(*out.codeword));
      CHECK(rank_weight(g.t.alpha(), *out.error) <= 1);
      CHECK(add(f, *out.codeword, *out.error) == r);
    }
  }
}

TEST_CASE("type-II decoding and agreement with type I") {
  const auto& g = gab();
  const Field& f = *g.t.ext_field();
  const Basis& ap = g.t.alpha_dual();
  Rng rng(7);
  const Matrix c0 = random_codeword(g.mp.c, rng);
  const auto z = decode_type2(g.mp, c0);
  CHECK(z.status == DecodeStatus::Success);
  CHECK(z.error->is_zero());
  std::size_t agree = 0;
  for (int i = 0; i < 200; ++i) {
    const Vector c = random_codeword(g.p.c, rng);
    const Vector r = add(f, c, random_rank_error(g.t.alpha(), 4, 1, rng));
    const auto one = decode_type1(g.p, r);
    const auto two = decode_type2(g.mp, mat_rep(ap, r));
    agree += one.status == DecodeStatus::Success && two.status == DecodeStatus::Success &&
             mat_rep(ap, *one.codeword) == *two.codeword;
  }
  CHECK(agree == 200);

  MatrixPair empty = g.mp;
  empty.a = MatrixCode::zero(g.t.base_field(), 4, 4);
  const auto out = decode_type2(empty, c0);
  CHECK(out.status == DecodeStatus::Failure);
}

TEST_CASE("converted pair") {
  const auto& g = gab();
  const auto cert = validate_pair(g.mp);
  CHECK(cert.correcting());
  CHECK(g.mp.a.dimension() == 4 * g.p.a.dimension());
  CHECK(g.mp.a.dimension() > 4 * g.mp.t);
  CHECK(g.mp.c == to_matrix_code(g.p.c, BasisChoice::AlphaPrime));
}

TEST_CASE("locating the support") {
  const auto& g = gab();
  const Field& f = *g.t.ext_field();
  Rng rng(8);
  const Vector c = random_codeword(g.p.c, rng);
  CHECK(locate_support(g.p, c).has_value());
  const std::size_t da = min_rank_distance(g.p.a).distance;
  for (int i = 0; i < 50; ++i) {
    const Vector e = random_rank_error(g.t.alpha(), 4, 1, rng);
    const auto l = locate_support(g.p, add(f, c, e));
    REQUIRE(l);
    CHECK(l->contains(rank_support(g.t.alpha(), e)));
    CHECK(l->dimension() <= 4 - da);
  }

  const auto t = FieldTower::make(2, 2).with_top(2);
  Rng nr(17);
  const Element a = find_normal_element(t.top_field(), 2, nr);
  const auto sp = skew_cyclic_locating_pair(t, a, {0, 2}, {1, 3}, 1);
  const auto errors = all_rank_one(t.base_field(), 2, 4);
  CHECK(errors.size() == 45);
  for (int k = 0; k < 3; ++k) {
    const Vector cw = random_codeword(sp.c, rng);
    for (const auto& em : errors) {
      const Vector e = rep_inverse(t.alpha(), em);
      const auto l = locate_support(sp, add(*t.ext_field(), cw, e));
      REQUIRE(l);
      CHECK(l->contains(rank_support(t.alpha(), e)));
    }
  }
}

TEST_CASE("pair validation") {
  const auto& g = gab();
  ExtPair wide = g.p;
  wide.t = 2;
  const auto c2 = validate_pair(wide);
  CHECK_FALSE(c2.dimension);

  ExtPair broken = g.p;
  broken.b = ExtLinearCode::from_generators(g.t, {{1, 0, 0, 0}}, 4);
  const auto cb = validate_pair(broken);
  CHECK_FALSE(cb.dual_distance);
  REQUIRE(cb.dual_witness);
  CHECK(dual(broken.b).contains(*cb.dual_witness));
  CHECK(rank_weight(g.t.alpha(), *cb.dual_witness) <= 1);

  ExtPair wrong = g.p;
  wrong.c = ExtLinearCode::full(g.t, 4);
  const auto cw = validate_pair(wrong);
  CHECK_FALSE(cw.product);
  REQUIRE(cw.product_witness);
  CHECK_FALSE(dual(wrong.c).contains(*cw.product_witness));
}

TEST_CASE("Hamming pairs through the diagonal embedding") {
  const FieldPtr f8 = FieldTower::make(8, 1).base_field();
  const Vector x{1, 2, 3, 4, 5, 6, 7};
  const HammingEcp ecp = grs_pair(f8, x, 3);
  CHECK(validate(ecp).valid());
  CHECK(ecp.t == 2);
  CHECK(ecp.c.dimension() == 3);
  CHECK(hamming_distance(ecp.c) == 5);
  const MatrixPair emb = hamming_embed_pair(ecp);
  Rng rng(9);
  for (int k = 0; k < 3; ++k) {
    Vector c(7, 0);
    for (std::size_t j = 0; j < 3; ++j) axpy(*f8, random_element(*f8, rng), ecp.c.basis().row(j), c);
    const auto z = decode_hamming(emb, c);
    CHECK(z.status == DecodeStatus::Success);
    CHECK(is_zero(*z.error));
    for (int i = 0; i < 100; ++i) {
      Vector e(7, 0);
      const std::size_t w = 1 + rng.below(2);
      for (std::size_t s = 0; s < w; ++s) e[rng.below(7)] = static_cast<Element>(1 + rng.below(7));
      const Vector r = add(*f8, c, e);
      const auto a = decode_hamming(emb, r);
      const auto b = decode_hamming_classical(ecp, r);
      CHECK(a.status == DecodeStatus::Success);
      CHECK(*a.codeword == c);
      CHECK(a.codeword == b.codeword);

      CHECK(kernel_space(emb, diag_embed(f8, r)) == diag_code(f8, hamming_kernel(ecp, r)));
    }
  }
  HammingEcp bad = ecp;
  bad.t = 3;
  CHECK_FALSE(validate(bad).valid());
}

}
