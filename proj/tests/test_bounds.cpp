// SPDX-License-Identifier: Apache-2.0

#include <algorithm>

#include "doctest.h"
#include "rankecp/bounds.hpp"
#include "rankecp/codes.hpp"
#include "rankecp/ecp.hpp"
#include "rankecp/errors.hpp"
#include "rankecp/families.hpp"
#include "rankecp/representation.hpp"
#include "support.hpp"

using namespace rankecp;
using rankecp::testing::all_rank_one;

namespace {

const Premise* find_premise(const BoundReport& r, const std::string& statement) {
  for (const auto& p : r.premises)
    if (p.statement == statement) return &p;
  return nullptr;
}

MatrixCode gab_matrix(const FieldTower& t, std::size_t k, std::size_t n) {
  return to_matrix_code(gabidulin(t, {k, 1, Vector(t.alpha().elements().begin(), t.alpha().elements().begin() + n)}));
}

MatrixCode transpose_code(const MatrixCode& c) {
  std::vector<Matrix> gens;
  for (const auto& b : c.basis()) gens.push_back(b.transposed());
  return MatrixCode::from_matrices(c.field(), c.cols(), c.rows(), gens);
}

MatrixCode subcode(const MatrixCode& c, std::size_t k, Rng& rng) {
  Matrix coeffs;
  do coeffs = random_matrix(c.field(), k, c.dimension(), rng);
  while (rank(coeffs) != k);
  return MatrixCode(c.field(), c.rows(), c.cols(), Subspace::span(coeffs * c.space().basis()));
}

}  // namespace

TEST_SUITE("rank_bounds") {

TEST_CASE("Singleton sum") {
  const auto t = FieldTower::make(2, 2);
  const auto d = to_matrix_code(ExtLinearCode::from_generators(t, {{1, 2}}, 2));
  const auto r = singleton_sum(d);
  CHECK(r.pass);
  CHECK(r.actual.value() == 4);
  CHECK(r.equality);

  const auto z = singleton_sum(MatrixCode::zero(t.base_field(), 2, 3));
  CHECK(z.pass);
  CHECK(z.equality);
  CHECK(z.actual.value() == 5);

  Rng rng(1);
  bool strict = false;
  for (int i = 0; i < 50 && !strict; ++i) {
    const auto c = random_matrix_code(t.base_field(), 3, 3, 2 + rng.below(5), rng);
    const auto rep = singleton_sum(c);
    CHECK(rep.pass);
    strict = !rep.equality;
    if (strict) CHECK_FALSE(mrd_check(c));
  }
  CHECK(strict);
}

TEST_CASE("first product bound on converted Gabidulin data") {
  const auto t = FieldTower::make(2, 4);
  const auto mp = convert_pair(gabidulin_recp(t, 1, 1, t.alpha().elements()));
  const auto r = bound_product(mp.a, mp.b, mp.c, 2, 1);
  CHECK(r.premises_hold());
  CHECK(r.pass);
  CHECK(r.actual.value() == 3);
  CHECK(r.equality);

  const auto zero_a = bound_product(mp.a, mp.b, mp.c, 0, 1);
  CHECK_FALSE(zero_a.premises_hold());
  CHECK_FALSE(zero_a.pass);
  CHECK_FALSE(find_premise(zero_a, "a > 0")->holds);
  CHECK_FALSE(zero_a.actual.has_value());
}

TEST_CASE("MRD: every subcode of (BA)* has distance at least 2t + 1") {
  const auto t = FieldTower::make(2, 4);
  Rng rng(2);
  for (std::size_t tt : {1u}) {
    const auto a = gab_matrix(t, tt + 1, 4), b = gab_matrix(t, tt, 4);
    CHECK(min_rank_distance(a).distance == 4 - tt);
    CHECK(a.dimension() == 4 * (tt + 1));
    CHECK(min_rank_distance(b).distance == 4 - tt + 1);
    const auto room = dual(product_code(b, a));
    for (int i = 0; i < 5; ++i) {
      const auto d = subcode(room, 1 + rng.below(room.dimension()), rng);
      CHECK(min_rank_distance(d).distance >= 2 * tt + 1);
      CHECK(bound_product(a, b, d, tt + 1, tt).pass);
      CHECK(validate_pair(MatrixPair{a, b, d, tt}).correcting());
    }
  }
}

TEST_CASE("dual product bound") {
  const auto t = FieldTower::make(2, 4);
  const auto mp = convert_pair(gabidulin_recp(t, 1, 1, t.alpha().elements()));
  const auto r = bound_dual_product(mp.a, mp.b, mp.c, 1, 2);
  CHECK(r.premises_hold());
  CHECK(r.pass);
  CHECK(r.actual.value() >= 3);
  REQUIRE(r.mrd.has_value());
  CHECK(*r.mrd);

  const auto bad = bound_dual_product(mp.a, mp.b, mp.c, 1, 3);
  CHECK_FALSE(bad.premises_hold());
  CHECK_FALSE(find_premise(bad, "d_R(C*) > c")->holds);
}

TEST_CASE("Roos bound") {
  const auto t = FieldTower::make(2, 4);
  const auto mp = convert_pair(gabidulin_recp(t, 1, 1, t.alpha().elements()));
  const auto r = roos_bound(mp.a, mp.b, mp.c, 1, 1);
  CHECK(r.premises_hold());
  CHECK(r.pass);
  CHECK(r.actual.value() == 3);

  // A too large: d_R(A) + a + b > n is the only premise that breaks
  const auto a = gab_matrix(t, 3, 4), b = gab_matrix(t, 1, 4);
  const auto c = dual(product_code(b, a));
  const auto v = roos_bound(a, b, c, 1, 1);
  CHECK_FALSE(v.premises_hold());
  std::size_t failing = 0;
  for (const auto& p : v.premises) failing += !p.holds;
  CHECK(failing == 1);
  CHECK_FALSE(find_premise(v, "d_R(A) + a + b > n")->holds);
}

TEST_CASE("subcodes certified by the Roos bound decode all rank-1 errors") {
  const auto t = FieldTower::make(2, 4);
  const auto mp = convert_pair(gabidulin_recp(t, 1, 1, t.alpha().elements()));
  const auto room = dual(product_code(mp.b, mp.a));
  const auto errors = all_rank_one(t.base_field(), 4, 4);
  Rng rng(3);
  for (int i = 0; i < 3; ++i) {
    const auto d = subcode(room, 1 + rng.below(room.dimension()), rng);
    REQUIRE(roos_bound(mp.a, mp.b, d, 1, 1).pass);
    const MatrixPair p{mp.a, mp.b, d, 1};
    const Matrix c = random_codeword(d, rng);
    std::size_t exact = 0;
    for (const auto& e : errors) {
      const auto out = decode_type2(p, c + e);
      exact += out.status == DecodeStatus::Success && *out.codeword == c;
    }
    CHECK(exact == errors.size());
  }
}

TEST_CASE("rank Hartmann-Tzeng bound") {
  const auto t = FieldTower::make(2, 2).with_top(2);
  Rng nr(17);
  const Element a = find_normal_element(t.top_field(), 2, nr);
  for (const std::vector<std::size_t>& root : {std::vector<std::size_t>{0, 2}, {1, 3}}) {
    const auto r = rank_ht_bound(t, a, root, {root[0], 1, 2, 0});
    CHECK(r.premises_hold());
    CHECK(r.pass);
    CHECK(r.actual.value() == min_rank_distance(skew_cyclic_code(t, a, root)).distance);
  }
  const auto g = rank_ht_bound(t, a, {0, 2}, {0, 2, 2, 0});
  CHECK_FALSE(find_premise(g, "gcd(c, n) < delta")->holds);
  CHECK_FALSE(g.pass);

  const auto u = FieldTower::make(2, 4).with_top(2);
  const Element b = find_normal_element(u.top_field(), 2, nr);
  const auto dep = rank_ht_bound(u, b, {0, 1, 2, 4, 5, 6}, {0, 1, 3, 1});
  CHECK_FALSE(find_premise(dep, "the alpha-set is linearly independent")->holds);
  REQUIRE(dep.witness);
  CHECK_FALSE(dep.witness->is_zero());
  CHECK_THROWS_AS(rank_ht_bound(t, 1, {0, 2}, {}), ParameterError);
}

TEST_CASE("MRD checks") {
  const auto t = FieldTower::make(2, 4);
  for (std::size_t n = 2; n <= 4; ++n)
    for (std::size_t k = 1; k <= n; ++k) {
      const auto g = gab_matrix(t, k, n);
      CHECK(mrd_check(g));
      CHECK(mrd_check(transpose_code(g)));
      CHECK(mrd_check(transpose_code(g), Orientation::Transposed));
    }
  CHECK(mrd_check(MatrixCode::zero(t.base_field(), 3, 3)));
  const FieldPtr& fq = t.base_field();
  Matrix e11(fq, 2, 2);
  e11(0, 0) = 1;
  CHECK_FALSE(mrd_check(MatrixCode::from_matrices(fq, 2, 2, {e11})));

  Rng rng(4);
  for (int i = 0; i < 60; ++i) {
    const std::size_t m = 2 + rng.below(2), n = 2 + rng.below(2);
    const auto c = random_matrix_code(fq, m, n, 1 + rng.below(m * n - 1), rng);
    if (mrd_check(c)) CHECK(mrd_check(dual(c)));
  }
}

TEST_CASE("random admissible instances never contradict the bounds") {
  Rng rng(5);
  std::size_t checked = 0;
  for (int i = 0; i < 40; ++i) {
    const auto inst = random_bound_instance(2, 3, 2 + rng.below(2), rng);
    for (std::size_t a = 1; a <= 2; ++a)
      for (std::size_t b = 1; b <= 2; ++b) {
        const auto r = bound_product(inst.a, inst.b, inst.c, a, b);
        if (r.premises_hold()) {
          ++checked;
          CHECK(r.pass);
        }
        const auto s = roos_bound(inst.a, inst.b, inst.c, a, b);
        if (s.premises_hold()) CHECK(s.pass);
        const auto d = bound_dual_product(inst.a, inst.b, inst.c, a, b);
        if (d.premises_hold()) CHECK(d.pass);
      }
  }
  CHECK(checked > 0);
}

}
