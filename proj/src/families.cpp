// SPDX-License-Identifier: Apache-2.0

#include "rankecp/families.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "rankecp/errors.hpp"
#include "rankecp/linearized.hpp"
#include "rankecp/representation.hpp"

namespace rankecp {

void validate(const FieldTower& tower, const GabidulinSpec& spec) {
  const std::size_t n = spec.b.size(), m = tower.m();
  if (n == 0 || n > m) throw ParameterError("Gabidulin codes need 1 <= n <= m");
  if (spec.k > n) throw ParameterError("Gabidulin dimension exceeds the length");
  if (spec.r == 0 || std::gcd<std::size_t>(spec.r, m) != 1) throw ParameterError("stride r must be coprime to m");
  for (Element x : spec.b)
    if (!tower.ext_field()->contains(x)) throw ParameterError("evaluation point outside F_{q^m}");
  if (fq_rank(tower.ext_field(), tower.q(), spec.b) != n)
    throw ParameterError("evaluation points are not F_q-independent");
}

ExtLinearCode gabidulin(const FieldTower& tower, const GabidulinSpec& spec) {
  validate(tower, spec);
  if (spec.k == 0) return ExtLinearCode::zero(tower, spec.b.size());
  return ExtLinearCode(tower, Subspace::span(frobenius_rows(tower.ext_field(), tower.q(), spec.b, spec.k, spec.r)));
}

GabidulinDual gabidulin_dual(const FieldTower& tower, const GabidulinSpec& spec) {
  ExtLinearCode d = dual(gabidulin(tower, spec));
  const std::size_t n = spec.b.size(), kd = n - spec.k;
  if (kd == 0) return {std::move(d), std::nullopt};
  // h spans Gab_{n-1}(r, b)^perp; the shifts h^{[-ir]}, i < n - k, are orthogonal
  // to b^{[jr]} for j < k, so b' = h^{[-(n-k-1)r]} is the candidate.
  const ExtLinearCode h = dual(gabidulin(tower, {n - 1, spec.r, spec.b}));
  if (h.dimension() != 1) return {std::move(d), std::nullopt};
  const Field& f = *tower.ext_field();
  const std::int64_t shift = -static_cast<std::int64_t>((kd - 1) * spec.r);
  Vector bp = frobenius(f, h.generator().row(0), tower.q(), shift);
  if (fq_rank(tower.ext_field(), tower.q(), bp) != n) return {std::move(d), std::nullopt};
  if (gabidulin(tower, {kd, spec.r, bp}) != d) return {std::move(d), std::nullopt};
  return {std::move(d), std::move(bp)};
}

ExtPair gabidulin_recp(const FieldTower& tower, std::size_t t, std::uint32_t r, const Vector& b, bool b_on_alpha_n) {
  const std::size_t n = b.size(), m = tower.m();
  if (t == 0 || 2 * t >= n) throw ParameterError("Gabidulin pairs need 0 < 2t < n");
  if (n > m) throw ParameterError("Gabidulin pairs need n <= m");
  ExtPair p{gabidulin(tower, {t + 1, r, b}), ExtLinearCode::zero(tower, m), dual(gabidulin(tower, {2 * t, r, b})), t};
  if (b_on_alpha_n) {
    if (r != 1) throw ParameterError("the alpha_n variant needs r = 1");
    p.b = gabidulin(tower, {t, 1, alpha_n(tower, n)});
  } else {
    p.b = gabidulin(tower, {t, r, tower.alpha().elements()});
  }
  return p;
}

// ---------------------------------------------------------------------------

bool is_normal(const FieldPtr& f, std::uint32_t q, Element x) {
  const std::uint32_t d = degree_over(f->size(), q);
  Vector orbit(d);
  for (std::uint32_t j = 0; j < d; ++j) orbit[j] = frobenius(*f, x, q, j);
  return fq_rank(f, q, orbit) == d;
}

Element find_normal_element(const FieldPtr& f, std::uint32_t q, Rng& rng) {
  for (int attempt = 0; attempt < 100000; ++attempt) {
    const Element x = static_cast<Element>(rng.below(f->size()));
    if (is_normal(f, q, x)) return x;
  }
  throw SearchError("no normal element found");
}

Basis normal_basis(const FieldTower& tower, Element normal) {
  const FieldPtr& top = tower.top_field();
  Vector orbit(tower.n());
  for (std::size_t j = 0; j < orbit.size(); ++j) orbit[j] = frobenius(*top, normal, tower.q(), static_cast<std::int64_t>(j));
  return Basis(top, tower.base_field(), orbit);
}

Matrix moore_index_matrix(const FieldTower& tower, Element normal, const std::vector<std::size_t>& index) {
  const FieldPtr& top = tower.top_field();
  const std::size_t n = tower.n();
  Matrix out(top, index.size(), n);
  for (std::size_t r = 0; r < index.size(); ++r) {
    if (index[r] >= n) throw ParameterError("index outside 0..n-1");
    for (std::size_t j = 0; j < n; ++j)
      out(r, j) = frobenius(*top, normal, tower.q(), static_cast<std::int64_t>(index[r] + j));
  }
  return out;
}

bool is_closed(const std::vector<std::size_t>& index, std::size_t m, std::size_t n) {
  const std::set<std::size_t> s(index.begin(), index.end());
  return std::all_of(s.begin(), s.end(), [&](std::size_t i) { return s.count((i + m) % n) == 1; });
}

ExtLinearCode subfield_subcode(const FieldTower& tower, const Matrix& parity_top) {
  const std::size_t n = parity_top.cols(), s = tower.s();
  const std::uint32_t big_q = tower.ext_field()->size();
  // h c = 0 with c over F_{q^m} splits into s equations, one per F_{q^m}-digit of h.
  Matrix eqs(tower.ext_field(), parity_top.rows() * s, n);
  for (std::size_t r = 0; r < parity_top.rows(); ++r)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector d = digits(parity_top(r, j), big_q, static_cast<std::uint32_t>(s));
      for (std::size_t k = 0; k < s; ++k) eqs(r * s + k, j) = d[k];
    }
  if (eqs.rows() == 0) return ExtLinearCode::full(tower, n);
  const Matrix k = kernel(eqs);
  if (k.rows() == 0) return ExtLinearCode::zero(tower, n);
  return ExtLinearCode(tower, Subspace::span(k));
}

ExtLinearCode subfield_subcode_of_span(const FieldTower& tower, const Matrix& generator_top) {
  const std::size_t n = generator_top.cols();
  if (generator_top.rows() == 0) return ExtLinearCode::zero(tower, n);
  return subfield_subcode(tower, kernel(generator_top));
}

ExtLinearCode skew_cyclic_code(const FieldTower& tower, Element normal, const std::vector<std::size_t>& index) {
  if (!is_closed(index, tower.m(), tower.n())) throw ParameterError("index set is not closed under i -> i + m");
  if (!is_normal(tower.top_field(), tower.q(), normal)) throw ParameterError("element is not normal over F_q");
  return subfield_subcode(tower, moore_index_matrix(tower, normal, index));
}

Vector q_shift(const FieldTower& tower, std::span<const Element> c) {
  const Field& f = *tower.ext_field();
  Vector out(c.size());
  for (std::size_t j = 0; j < c.size(); ++j) out[(j + 1) % c.size()] = frobenius(f, c[j], tower.q(), 1);
  return out;
}

bool is_q_cyclic(const ExtLinearCode& c) {
  // The shift is additive and semilinear, so checking a basis suffices.
  for (std::size_t i = 0; i < c.dimension(); ++i)
    if (!c.contains(q_shift(c.tower(), c.generator().row(i)))) return false;
  return true;
}

std::size_t longest_run(const std::vector<std::size_t>& index, std::size_t n) {
  const std::set<std::size_t> s(index.begin(), index.end());
  if (s.size() >= n) return n;
  std::size_t best = 0;
  for (std::size_t start : s) {
    if (s.count((start + n - 1) % n)) continue;
    std::size_t len = 0;
    while (s.count((start + len) % n)) ++len;
    best = std::max(best, len);
  }
  return best;
}

ExtPair skew_cyclic_locating_pair(const FieldTower& tower, Element normal, const std::vector<std::size_t>& i_set,
                                  const std::vector<std::size_t>& j_set, std::size_t t) {
  const std::size_t m = tower.m(), n = tower.n();
  if (!is_closed(i_set, m, n) || !is_closed(j_set, m, n))
    throw ParameterError("index sets must be closed under i -> i + m");
  if (std::set<std::size_t>(i_set.begin(), i_set.end()).size() <= t) throw ParameterError("need #I > t");
  if (longest_run(j_set, n) + 1 <= t) throw ParameterError("J needs a run of at least t consecutive elements");
  std::set<std::size_t> sum;
  for (auto i : i_set)
    for (auto j : j_set) sum.insert((i + j) % n);
  ExtPair p{subfield_subcode_of_span(tower, moore_index_matrix(tower, normal, i_set)),
            subfield_subcode_of_span(tower, moore_index_matrix(tower, normal, j_set)),
            skew_cyclic_code(tower, normal, std::vector<std::size_t>(sum.begin(), sum.end())), t, true,
            normal_basis(tower, normal)};
  const auto sa = codebook_size(p.a), sc = codebook_size(p.c);
  if (sa && sc && *sa <= kEnumerationBudget && *sc <= kEnumerationBudget)
    p.locating_only = min_rank_distance(p.a).distance + min_rank_distance(p.c).distance <= n;
  return p;
}

}  // namespace rankecp
