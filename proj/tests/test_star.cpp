// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"
#include "rankecp/codes.hpp"
#include "rankecp/errors.hpp"
#include "rankecp/families.hpp"
#include "rankecp/linearized.hpp"
#include "rankecp/representation.hpp"
#include "rankecp/star.hpp"
#include "support.hpp"

using namespace rankecp;
using rankecp::testing::all_vectors;

TEST_SUITE("star_products") {

TEST_CASE("star on F_4^2") {
  const auto t = FieldTower::make(2, 2);
  const Vector alpha = t.alpha().elements();
  for (const auto& d : all_vectors(*t.ext_field(), 2)) {
    CHECK(star(t, alpha, d) == d);
    CHECK(star(t, Vector{0, 0}, d) == Vector{0, 0});
  }
  CHECK(star(t, Vector{1, 3}, Vector{1, 2}) == Vector{1, 3});
  CHECK_THROWS_AS(star(t, Vector{1, 2, 3}, Vector{1, 2}), ParameterError);
}

TEST_CASE("associativity, exhaustive over F_4^2") {
  const auto t = FieldTower::make(2, 2);
  const auto all = all_vectors(*t.ext_field(), 2);
  bool ok = true;
  for (const auto& a : all)
    for (const auto& b : all)
      for (const auto& c : all) ok = ok && star(t, a, star(t, b, c)) == star(t, star(t, a, b), c);
  CHECK(ok);
}

TEST_CASE("M(c * d) = M(c) M(d)") {
  const auto t = FieldTower::make(2, 4);
  Rng rng(1);
  for (int i = 0; i < 1000; ++i) {
    const Vector c = random_vector(*t.ext_field(), 4, rng), d = random_vector(*t.ext_field(), 6, rng);
    CHECK(mat_rep(t.alpha(), star(t, c, d)) == mat_rep(t.alpha(), c) * mat_rep(t.alpha(), d));
  }
  const StarContext ctx(t, 3);
  for (int i = 0; i < 200; ++i) {
    const Vector c = random_vector(*t.ext_field(), 3, rng), d = random_vector(*t.ext_field(), 3, rng);
    CHECK(mat_rep(t.alpha(), ctx.star(c, d)) == mat_rep(t.alpha(), ctx.phi(c)) * mat_rep(t.alpha(), d));
  }
}

TEST_CASE("phi_n") {
  const auto t = FieldTower::make(2, 2);
  CHECK(phi_n(t, Vector{2}) == Vector{2, 3});
  Rng rng(2);
  const auto u = FieldTower::make(2, 3);
  for (int i = 0; i < 50; ++i) {
    const Vector c = random_vector(*u.ext_field(), 3, rng);
    CHECK(phi_n(u, c) == c);
    const Vector longer = random_vector(*u.ext_field(), 5, rng);
    CHECK(phi_n(u, longer) == Vector(longer.begin(), longer.begin() + 3));
  }
  for (std::size_t n = 1; n <= 3; ++n) CHECK(phi_n(u, alpha_n(u, n)) == u.alpha().elements());
  CHECK_THROWS_AS(alpha_n(u, 4), ParameterError);
  // F_{q^m}-linear
  const StarContext ctx(u, 2);
  for (int i = 0; i < 50; ++i) {
    const Vector a = random_vector(*u.ext_field(), 2, rng), b = random_vector(*u.ext_field(), 2, rng);
    const Element s = random_element(*u.ext_field(), rng);
    const Field& f = *u.ext_field();
    CHECK(ctx.phi(add(f, scale(f, s, a), b)) == add(f, scale(f, s, ctx.phi(a)), ctx.phi(b)));
  }
}

TEST_CASE("evaluation is preserved") {
  auto run = [](std::uint32_t m, std::size_t n, int trials) {
    const auto t = FieldTower::make(2, m);
    const FieldPtr& f = t.ext_field();
    const StarContext ctx(t, n);
    const Vector an = alpha_n(t, n);
    Rng rng(m * 100 + n);
    std::size_t bad = 0;
    for (int i = 0; i < trials; ++i) {
      const LinearizedPoly fp(f, 2, random_vector(*f, n, rng));
      const LinearizedPoly gp(f, 2, random_vector(*f, 1 + rng.below(m), rng));
      const Vector b = random_vector(*f, n, rng);
      if (symbolic_mul(fp, gp).eval(b) != ctx.star(fp.eval(an), gp.eval(b))) ++bad;
    }
    return bad;
  };
  CHECK(run(4, 4, 500) == 0);
  CHECK(run(4, 2, 200) == 0);
  CHECK(run(3, 1, 100) == 0);
  CHECK(run(2, 2, 200) == 0);
  CHECK(alpha_n(FieldTower::make(2, 4), 4) == FieldTower::make(2, 4).alpha().elements());
}

TEST_CASE("transposed pairing") {
  const auto t = FieldTower::make(2, 4);
  const Field& f = *t.ext_field();
  Rng rng(3);
  CHECK(is_zero(transposed_pairing(t, random_vector(f, 4, rng), Vector(4, 0))));
  for (int i = 0; i < 500; ++i) {
    const Vector c = random_vector(f, 4, rng), d = random_vector(f, 4, rng), b = random_vector(f, 4, rng);
    const Vector cd = transposed_pairing(t, c, d);
    CHECK(mat_rep(t.alpha(), cd) == mat_rep(t.alpha(), c) * mat_rep(t.alpha(), d).transposed());
    CHECK(vec_transpose(t, cd) == transposed_pairing(t, d, c));
    CHECK(mat_rep(t.alpha(), vec_transpose(t, b)) == mat_rep(t.alpha(), b).transposed());
    CHECK(dot(f, star(t, b, c), d) == dot(f, b, transposed_pairing(t, d, c)));
  }
  const auto u = FieldTower::make(2, 2);
  const auto all = all_vectors(*u.ext_field(), 2);
  for (const auto& c : all)
    for (const auto& d : all)
      CHECK(is_zero(transposed_pairing(u, c, d)) ==
            rank_support(u.alpha(), d).orthogonal().contains(rank_support(u.alpha(), c)));
}

TEST_CASE("E(a * b) = E(a) star E(b)") {
  const auto t = FieldTower::make(2, 2);
  const Field& f2 = *t.base_field();
  for (const auto& a : all_vectors(f2, 2))
    for (const auto& b : all_vectors(f2, 2)) {
      const Vector ab{f2.mul(a[0], b[0]), f2.mul(a[1], b[1])};
      CHECK(star(t, extension_embed(t, a), extension_embed(t, b)) == extension_embed(t, ab));
    }
}

TEST_CASE("a different phi gives a different product on a probe") {
  // phi = phi_n + Delta with Delta alpha_n = 0 still fixes alpha_n.
  const auto t = FieldTower::make(2, 4);
  const Field& f = *t.ext_field();
  const std::size_t n = 2;
  const Vector an = alpha_n(t, n);
  Matrix phi = phi_n_matrix(t, n);
  const Element lam = 7;
  for (std::size_t i = 0; i < 4; ++i) {
    phi(i, 0) = f.add(phi(i, 0), f.mul(lam, an[1]));
    phi(i, 1) = f.sub(phi(i, 1), f.mul(lam, an[0]));
  }
  const StarContext ours(t, n), other(t, n, phi);
  CHECK(other.phi(an) == t.alpha().elements());
  Rng rng(6);
  std::size_t separated = 0, trials = 0;
  for (int k = 0; k < 20; ++k) {
    const Vector c = random_vector(f, n, rng);
    if (ours.phi(c) == other.phi(c)) continue;
    ++trials;
    // probes d = alpha_i e_1 read off coordinate i of phi(c)
    for (std::size_t i = 0; i < 4; ++i) {
      Vector d(n, 0);
      d[0] = t.alpha()[i];
      if (ours.star(c, d) != other.star(c, d)) {
        ++separated;
        break;
      }
    }
  }
  CHECK(trials > 0);
  CHECK(separated == trials);

  // and it breaks evaluation preservation somewhere
  bool broken = false;
  for (int k = 0; k < 100 && !broken; ++k) {
    const LinearizedPoly fp(t.ext_field(), 2, random_vector(f, n, rng));
    const LinearizedPoly gp(t.ext_field(), 2, random_vector(f, 3, rng));
    const Vector b = random_vector(f, n, rng);
    broken = symbolic_mul(fp, gp).eval(b) != other.star(fp.eval(an), gp.eval(b));
  }
  CHECK(broken);
  Matrix bad = phi_n_matrix(t, n);
  bad(0, 0) = f.add(bad(0, 0), 1);
  CHECK_THROWS_AS(StarContext(t, n, bad), ParameterError);
}

TEST_CASE("space products") {
  const auto t = FieldTower::make(2, 4);
  const Field& f = *t.ext_field();
  const Vector a = t.alpha().elements();
  const Vector b = add(f, a, frobenius(f, a, 2, 1));
  const auto A = ExtLinearCode::from_generators(t, {a}, 4);
  const auto B = ExtLinearCode::from_generators(t, {b}, 4);
  CHECK(A.dimension() == 1);
  CHECK(B.dimension() == 1);
  CHECK(space_product(B, A).dimension() == 2);

  CHECK(space_product(ExtLinearCode::zero(t, 4), A).dimension() == 0);
  CHECK(space_product(B, ExtLinearCode::zero(t, 4)).dimension() == 0);

  const auto g1 = gabidulin(t, {1, 1, a}), g2 = gabidulin(t, {2, 1, a});
  CHECK(space_product(g1, g2) == g2);
}

TEST_CASE("matrix-side products match extension products") {
  const auto t = FieldTower::make(2, 3);
  const FieldPtr& fq = t.base_field();
  Rng rng(44);
  for (int i = 0; i < 20; ++i) {
    const auto b = random_ext_code(t, 3, 1 + rng.below(2), rng);
    const auto a = random_ext_code(t, 4, 1 + rng.below(2), rng);
    CHECK(to_matrix_code(space_product(b, a)) == space_product(to_matrix_code(b), to_matrix_code(a)));
  }
  const auto id = MatrixCode::from_matrices(fq, 3, 3, {Matrix::identity(fq, 3)});
  const auto code = random_matrix_code(fq, 3, 4, 5, rng);
  CHECK(space_product(id, code) == code);
  CHECK(space_product(MatrixCode::zero(fq, 3, 3), code).dimension() == 0);
}

}
