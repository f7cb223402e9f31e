// SPDX-License-Identifier: Apache-2.0

#include "rankecp/bounds.hpp"

#include <numeric>

#include "rankecp/errors.hpp"
#include "rankecp/families.hpp"
#include "rankecp/representation.hpp"

namespace rankecp {

bool BoundReport::premises_hold() const {
  for (const auto& p : premises)
    if (!p.holds) return false;
  return true;
}

namespace {

std::size_t distance(const MatrixCode& c) { return min_rank_distance(c).distance; }

void check_shapes(const MatrixCode& a, const MatrixCode& b, const MatrixCode& c) {
  const std::size_t m = a.rows(), n = a.cols();
  if (b.rows() != m || b.cols() != m || c.rows() != m || c.cols() != n)
    throw ParameterError("need A, C in F_q^{m x n} and B in F_q^{m x m}");
  if (a.field()->size() != b.field()->size() || a.field()->size() != c.field()->size()) throw ParameterError("codes over different fields");
}

/// Appends the premise "B A in C*" and returns a violating product if any.
void product_premise(BoundReport& r, const MatrixCode& a, const MatrixCode& b, const MatrixCode& c) {
  const MatrixCode c_star = dual(c);
  Premise p{"B A is contained in C*", true, std::nullopt};
  for (const auto& bm : b.basis()) {
    for (const auto& am : a.basis()) {
      Matrix w = bm * am;
      if (!c_star.contains(w)) {
        p.holds = false;
        r.witness = std::move(w);
        break;
      }
    }
    if (!p.holds) break;
  }
  r.premises.push_back(std::move(p));
}

void positive_premise(BoundReport& r, const char* name, std::size_t value) {
  r.premises.push_back({std::string(name) + " > 0", value > 0, std::nullopt});
}

/// d_R(code) > bound, with the measured distance recorded.
void distance_premise(BoundReport& r, const std::string& statement, const MatrixCode& code, std::size_t bound) {
  const auto md = min_rank_distance(code);
  const bool holds = md.distance > bound;
  if (!holds && md.witness && !r.witness) r.witness = *md.witness;
  r.premises.push_back({statement, holds, md.distance});
}

/// Evaluates "d_R(code) >= bound" (or > when strict) once the premises hold.
void conclude(BoundReport& r, const MatrixCode& code, std::size_t bound, bool strict) {
  if (!r.premises_hold()) return;
  const std::size_t d = distance(code);
  r.actual = d;
  r.vacuous = code.dimension() == 0;
  const bool holds = strict ? d > bound : d >= bound;
  r.equality = strict ? d == bound + 1 : d == bound;
  r.pass = r.vacuous || holds;
}

Matrix random_invertible(const FieldPtr& f, std::size_t n, Rng& rng) {
  Matrix p;
  do p = random_matrix(f, n, n, rng);
  while (rank(p) != n);
  return p;
}

Matrix inverse(const Matrix& p) {
  const std::size_t n = p.rows();
  Matrix aug(p.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = p(i, j);
    aug(i, n + i) = 1;
  }
  const auto ech = rref(aug);
  Matrix inv(p.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = ech.reduced(i, n + j);
  return inv;
}

MatrixCode random_subcode(const MatrixCode& code, std::size_t k, Rng& rng) {
  const FieldPtr& fq = code.field();
  if (k == 0 || code.dimension() == 0) return MatrixCode::zero(fq, code.rows(), code.cols());
  k = std::min(k, code.dimension());
  Matrix coeffs;
  do coeffs = random_matrix(fq, k, code.dimension(), rng);
  while (rank(coeffs) != k);
  return MatrixCode(fq, code.rows(), code.cols(), Subspace::span(coeffs * code.space().basis()));
}

MatrixCode transform(const MatrixCode& code, const Matrix& left, const Matrix& right) {
  std::vector<Matrix> gens;
  for (const auto& g : code.basis()) gens.push_back(left * g * right);
  return MatrixCode::from_matrices(code.field(), left.rows(), right.cols(), gens);
}

Vector random_independent(const FieldTower& tower, std::size_t n, Rng& rng) {
  Vector b;
  do b = random_vector(*tower.ext_field(), n, rng);
  while (fq_rank(tower.ext_field(), tower.q(), b) != n);
  return b;
}

std::size_t uniform_in(Rng& rng, std::size_t lo, std::size_t hi) { return lo + rng.below(hi - lo + 1); }

}  // namespace

// ---------------------------------------------------------------------------

BoundReport singleton_sum(const MatrixCode& d) {
  BoundReport r;
  r.name = "singleton";
  const std::size_t n = d.cols();
  r.parameters["m"] = static_cast<std::int64_t>(d.rows());
  r.parameters["n"] = static_cast<std::int64_t>(n);
  r.conclusion = "d_R(D) + d_R(D*) <= n + 2";
  const std::size_t dd = distance(d), ds = distance(dual(d));
  r.parameters["d"] = static_cast<std::int64_t>(dd);
  r.parameters["d_dual"] = static_cast<std::int64_t>(ds);
  r.actual = dd + ds;
  r.equality = *r.actual == n + 2;
  r.pass = *r.actual <= n + 2;
  return r;
}

BoundReport bound_product(const MatrixCode& a, const MatrixCode& b, const MatrixCode& c, std::size_t a_param,
                          std::size_t b_param) {
  check_shapes(a, b, c);
  BoundReport r;
  r.name = "product";
  r.parameters["a"] = static_cast<std::int64_t>(a_param);
  r.parameters["b"] = static_cast<std::int64_t>(b_param);
  r.conclusion = "d_R(C) >= a + b";
  positive_premise(r, "a", a_param);
  positive_premise(r, "b", b_param);
  product_premise(r, a, b, c);
  distance_premise(r, "d_R(A*) > a", dual(a), a_param);
  distance_premise(r, "d_R(B*) > b", dual(b), b_param);
  conclude(r, c, a_param + b_param, false);
  return r;
}

BoundReport bound_dual_product(const MatrixCode& a, const MatrixCode& b, const MatrixCode& c, std::size_t b_param,
                               std::size_t c_param) {
  check_shapes(a, b, c);
  BoundReport r;
  r.name = "dual-product";
  r.parameters["b"] = static_cast<std::int64_t>(b_param);
  r.parameters["c"] = static_cast<std::int64_t>(c_param);
  r.conclusion = "d_R(A) >= b + c";
  positive_premise(r, "b", b_param);
  positive_premise(r, "c", c_param);
  product_premise(r, a, b, c);
  distance_premise(r, "d_R(B*) > b", dual(b), b_param);
  distance_premise(r, "d_R(C*) > c", dual(c), c_param);
  conclude(r, a, b_param + c_param, false);
  if (r.pass && a.dimension() % a.rows() == 0) r.mrd = mrd_check(a);
  return r;
}

BoundReport roos_bound(const MatrixCode& a, const MatrixCode& b, const MatrixCode& c, std::size_t a_param,
                       std::size_t b_param) {
  check_shapes(a, b, c);
  const std::size_t m = a.rows(), n = a.cols();
  BoundReport r;
  r.name = "roos";
  r.parameters["a"] = static_cast<std::int64_t>(a_param);
  r.parameters["b"] = static_cast<std::int64_t>(b_param);
  r.conclusion = "d_R(C) > a + b";
  positive_premise(r, "a", a_param);
  positive_premise(r, "b", b_param);
  product_premise(r, a, b, c);
  r.premises.push_back({"dim A > m a", a.dimension() > m * a_param, a.dimension()});
  distance_premise(r, "d_R(B*) > b", dual(b), b_param);
  const std::size_t da = distance(a);
  r.premises.push_back({"d_R(A) + a + b > n", da + a_param + b_param > n, da});
  distance_premise(r, "d_R(A*) > 1", dual(a), 1);
  conclude(r, c, a_param + b_param, true);
  return r;
}

BoundReport rank_ht_bound(const FieldTower& tower, Element normal, const std::vector<std::size_t>& root_index,
                          const RankHtParams& prm) {
  const std::size_t m = tower.m(), n = tower.n();
  const FieldPtr& top = tower.top_field();
  BoundReport r;
  r.name = "rank-ht";
  r.parameters["b"] = static_cast<std::int64_t>(prm.b);
  r.parameters["c"] = static_cast<std::int64_t>(prm.c);
  r.parameters["delta"] = static_cast<std::int64_t>(prm.delta);
  r.parameters["w"] = static_cast<std::int64_t>(prm.w);
  r.conclusion = "d_R(C) >= delta + w";
  positive_premise(r, "c", prm.c);
  positive_premise(r, "delta", prm.delta);
  r.premises.push_back({"delta + w <= m", prm.delta + prm.w <= m, std::nullopt});
  const std::size_t g = std::gcd(prm.c, n);
  r.premises.push_back({"gcd(c, n) < delta", g < prm.delta, g});
  r.premises.push_back({"root space is closed under i -> i + m", is_closed(root_index, m, n), std::nullopt});
  if (!is_normal(top, tower.q(), normal)) throw ParameterError("alpha is not a normal element");

  const auto n32 = static_cast<std::uint32_t>(n);
  auto coords = [&](std::size_t e) { return digits(frobenius(*top, normal, tower.q(), e % n), tower.q(), n32); };
  std::vector<Vector> set;
  for (std::size_t j = 0; j <= prm.w; ++j)
    for (std::size_t i = 0; i + 2 <= prm.delta; ++i) set.push_back(coords(prm.b + i + j * prm.c));
  const FieldPtr& fq = tower.base_field();
  Premise indep{"the alpha-set is linearly independent", true, set.size()};
  if (!set.empty()) {
    const Matrix cols = Matrix::from_rows(fq, set, n).transposed();
    const Matrix dep = kernel(cols);
    if (dep.rows() > 0) {
      indep.holds = false;
      if (!r.witness) r.witness = Matrix::unflatten(fq, dep.row(0), 1, set.size());
    }
  }
  r.premises.push_back(std::move(indep));
  std::vector<Vector> roots;
  for (auto i : root_index) roots.push_back(coords(i));
  const Subspace t_space = roots.empty() ? Subspace(fq, n) : Subspace::span(fq, roots, n);
  bool inside = true;
  for (const auto& v : set) inside = inside && t_space.contains(v);
  r.premises.push_back({"the alpha-set lies in the root space", inside, t_space.dimension()});
  if (!r.premises_hold()) return r;

  const ExtLinearCode code = skew_cyclic_code(tower, normal, root_index);
  conclude(r, to_matrix_code(code), prm.delta + prm.w, false);
  return r;
}

bool mrd_check(const MatrixCode& code, Orientation orientation) {
  const std::size_t m = code.rows(), n = code.cols(), k = code.dimension();
  if (k == 0) return true;
  const std::size_t d = distance(code);
  if (orientation == Orientation::Auto) orientation = n <= m ? Orientation::AsGiven : Orientation::Transposed;
  if (orientation == Orientation::AsGiven) return d <= n && k == m * (n - d + 1);
  return d <= m && k == n * (m - d + 1);
}

bool mrd_check(const ExtLinearCode& code, Orientation orientation) {
  return mrd_check(to_matrix_code(code), orientation);
}

MatrixCode product_code(const MatrixCode& b, const MatrixCode& a) {
  std::vector<Matrix> gens;
  for (const auto& bm : b.basis())
    for (const auto& am : a.basis()) gens.push_back(bm * am);
  return MatrixCode::from_matrices(a.field(), b.rows(), a.cols(), gens);
}

BoundInstance random_bound_instance(std::uint32_t q, std::size_t m, std::size_t n, Rng& rng) {
  const FieldTower tower = FieldTower::make(q, static_cast<std::uint32_t>(m));
  const FieldPtr& fq = tower.base_field();
  MatrixCode a = MatrixCode::zero(fq, m, n), b = MatrixCode::zero(fq, m, m);
  if (n <= m && rng.below(4) != 0) {
    // Gabidulin-derived codes under rank-preserving maps, then subcodes.
    const std::size_t ka = uniform_in(rng, 1, n), kb = uniform_in(rng, 1, m);
    a = to_matrix_code(gabidulin(tower, {ka, 1, random_independent(tower, n, rng)}));
    b = to_matrix_code(gabidulin(tower, {kb, 1, random_independent(tower, m, rng)}));
    if (rng.below(2)) a = random_subcode(a, uniform_in(rng, 1, a.dimension()), rng);
    if (rng.below(2)) b = random_subcode(b, uniform_in(rng, 1, b.dimension()), rng);
    const Matrix p = random_invertible(fq, m, rng);
    a = transform(a, p, random_invertible(fq, n, rng));
    b = transform(b, random_invertible(fq, m, rng), inverse(p));
  } else {
    a = random_matrix_code(fq, m, n, uniform_in(rng, 1, m * n - 1), rng);
    b = random_matrix_code(fq, m, m, uniform_in(rng, 1, m * m - 1), rng);
  }
  const MatrixCode room = dual(product_code(b, a));
  MatrixCode c = room.dimension() == 0 ? room : random_subcode(room, uniform_in(rng, 1, room.dimension()), rng);
  return {std::move(a), std::move(b), std::move(c)};
}

}  // namespace rankecp
