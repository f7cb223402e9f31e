// SPDX-License-Identifier: Apache-2.0

#include "rankecp/ecp.hpp"

#include <algorithm>

#include "rankecp/errors.hpp"
#include "rankecp/representation.hpp"

namespace rankecp {

const char* to_string(DecodeStatus s) {
  switch (s) {
    case DecodeStatus::Success: return "success";
    case DecodeStatus::LocatedOnly: return "located-only";
    case DecodeStatus::Failure: return "failure";
  }
  return "failure";
}

namespace {

/// The F_q-spanning set alpha_l a_j of an extension code, j major.
std::vector<Vector> fq_spanning(const ExtLinearCode& a) {
  const FieldTower& t = a.tower();
  std::vector<Vector> out;
  for (std::size_t j = 0; j < a.dimension(); ++j)
    for (std::size_t l = 0; l < t.m(); ++l) out.push_back(scale(*t.ext_field(), t.alpha()[l], a.generator().row(j)));
  return out;
}

Subspace located_from(const Matrix& a0) { return Subspace::span(a0).orthogonal(); }

}  // namespace

ExtLinearCode pair_product(const ExtPair& p) {
  const ExtLinearCode b = effective_b(p);
  return p.star_basis ? space_product(*p.star_basis, b, p.a) : space_product(b, p.a);
}

MatrixCode kernel_space(const ExtPair& p, std::span<const Element> r) {
  const FieldTower& t = p.a.tower();
  const std::size_t m = t.m(), n = p.a.length();
  if (r.size() != n) throw ParameterError("received word has the wrong length");
  const Field& f = *t.ext_field();
  const ExtLinearCode b = effective_b(p);
  const auto span_a = fq_spanning(p.a);
  // Each F_{q^m} condition (b_i * a) . r = 0 is linear over F_q in the
  // coordinates of a on {alpha_l a_j}; its m F_q-digits give m equations.
  Matrix eqs(t.base_field(), b.dimension() * m, span_a.size());
  for (std::size_t i = 0; i < b.dimension(); ++i)
    for (std::size_t v = 0; v < span_a.size(); ++v) {
      const Element s = dot(f, pair_star(p, b.generator().row(i), span_a[v]), r);
      const Vector d = digits(s, t.q(), static_cast<std::uint32_t>(m));
      for (std::size_t k = 0; k < m; ++k) eqs(i * m + k, v) = d[k];
    }
  Matrix images(t.base_field(), 0, m * n);
  for (const auto& v : span_a) images.append_row(mat_rep(t.alpha(), v).data());
  const FieldPtr& fq = t.base_field();
  if (span_a.empty()) return MatrixCode::zero(fq, m, n);
  const Matrix sols = eqs.rows() == 0 ? Matrix::identity(fq, span_a.size()) : kernel(eqs);
  if (sols.rows() == 0) return MatrixCode::zero(fq, m, n);
  return MatrixCode(fq, m, n, Subspace::span(sols * images));
}

MatrixCode kernel_space(const MatrixPair& p, const Matrix& r) {
  const std::size_t m = p.a.rows(), n = p.a.cols();
  if (r.rows() != m || r.cols() != n) throw ParameterError("received matrix has the wrong shape");
  const FieldPtr& fq = p.a.field();
  if (p.a.dimension() == 0) return MatrixCode::zero(fq, m, n);
  const auto as = p.a.basis();
  const auto bs = p.b.basis();
  Matrix eqs(fq, bs.size(), as.size());
  for (std::size_t i = 0; i < bs.size(); ++i)
    for (std::size_t j = 0; j < as.size(); ++j) eqs(i, j) = dot(*fq, (bs[i] * as[j]).data(), r.data());
  const Matrix sols = eqs.rows() == 0 ? Matrix::identity(fq, as.size()) : kernel(eqs);
  if (sols.rows() == 0) return MatrixCode::zero(fq, m, n);
  return MatrixCode(fq, m, n, Subspace::span(sols * p.a.space().basis()), p.a.basis_used());
}

// ---------------------------------------------------------------------------

std::pair<Vector, Vector> erasure_decode(const ExtLinearCode& c, std::span<const Element> r, const Subspace& l,
                                         std::optional<std::size_t> distance) {
  const std::size_t n = c.length();
  if (r.size() != n || l.ambient() != n) throw ParameterError("length mismatch in erasure decoding");
  if (distance && l.dimension() >= *distance) throw ParameterError("erasure support must have dimension below d_R(C)");
  const Field& f = *c.tower().ext_field();
  const Matrix& h = c.parity_check();
  if (l.dimension() == 0) {
    if (!c.contains(r)) throw InconsistentInput("received word is not a codeword");
    return {Vector(r.begin(), r.end()), Vector(n, 0)};
  }
  Matrix eqs(c.tower().ext_field(), h.rows(), l.dimension());
  Vector rhs(h.rows());
  for (std::size_t k = 0; k < h.rows(); ++k) {
    for (std::size_t j = 0; j < l.dimension(); ++j) eqs(k, j) = dot(f, l.basis().row(j), h.row(k));
    rhs[k] = dot(f, r, h.row(k));
  }
  const auto sol = solve_linear(eqs, rhs);
  if (!sol.consistent()) throw InconsistentInput("no error with the given support explains the syndrome");
  if (!sol.unique()) throw ParameterError("erasure support must have dimension below d_R(C)");
  Vector e(n, 0);
  for (std::size_t j = 0; j < l.dimension(); ++j) axpy(f, (*sol.particular)[j], l.basis().row(j), e);
  return {sub(f, r, e), e};
}

std::pair<Matrix, Matrix> erasure_decode(const MatrixCode& c, const Matrix& r, const Subspace& l,
                                         std::optional<std::size_t> distance) {
  const std::size_t m = c.rows(), n = c.cols();
  if (r.rows() != m || r.cols() != n || l.ambient() != n) throw ParameterError("shape mismatch in erasure decoding");
  if (distance && l.dimension() >= *distance) throw ParameterError("erasure support must have dimension below d_R(C)");
  const FieldPtr& fq = c.field();
  const std::size_t ell = l.dimension();
  if (ell == 0) {
    if (!c.contains(r)) throw InconsistentInput("received word is not a codeword");
    return {r, Matrix(fq, m, n)};
  }
  const Matrix& g = l.basis();
  const Matrix gt = g.transposed();
  const auto hs = dual(c).basis();
  // <Z G, H> = sum_{i,p} Z_{ip} (H G^T)_{ip}
  Matrix eqs(fq, hs.size(), m * ell);
  Vector rhs(hs.size());
  for (std::size_t k = 0; k < hs.size(); ++k) {
    const Matrix hg = hs[k] * gt;
    std::copy(hg.data().begin(), hg.data().end(), eqs.row(k).begin());
    rhs[k] = dot(*fq, hs[k].data(), r.data());
  }
  const auto sol = solve_linear(eqs, rhs);
  if (!sol.consistent()) throw InconsistentInput("no error with the given support explains the syndrome");
  if (!sol.unique()) throw ParameterError("erasure support must have dimension below d_R(C)");
  const Matrix e = Matrix::unflatten(fq, *sol.particular, m, ell) * g;
  return {r - e, e};
}

// ---------------------------------------------------------------------------

DecodeOutcome<Vector> decode_type1(const ExtPair& p, std::span<const Element> r) {
  DecodeOutcome<Vector> out;
  const MatrixCode k = kernel_space(p, r);
  out.kernel_dim = k.dimension();
  if (k.dimension() == 0) {
    out.reason = "K(r) is zero";
    return out;
  }
  out.located = located_from(k.basis_matrix(0));
  if (p.locating_only) {
    out.status = DecodeStatus::LocatedOnly;
    return out;
  }
  try {
    auto [c, e] = erasure_decode(p.c, r, *out.located);
    if (rank_weight(p.a.tower().alpha(), e) > p.t) {
      out.reason = "recovered error exceeds rank t";
      return out;
    }
    out.codeword = std::move(c);
    out.error = std::move(e);
    out.status = DecodeStatus::Success;
  } catch (const ParameterError& ex) {
    out.reason = ex.what();
  } catch (const InconsistentInput& ex) {
    out.reason = ex.what();
  }
  return out;
}

DecodeOutcome<Matrix> decode_type2(const MatrixPair& p, const Matrix& r) {
  DecodeOutcome<Matrix> out;
  const MatrixCode k = kernel_space(p, r);
  out.kernel_dim = k.dimension();
  if (k.dimension() == 0) {
    out.reason = "K(R) is zero";
    return out;
  }
  out.located = located_from(k.basis_matrix(0));
  if (p.locating_only) {
    out.status = DecodeStatus::LocatedOnly;
    return out;
  }
  try {
    auto [c, e] = erasure_decode(p.c, r, *out.located);
    if (rank(e) > p.t) {
      out.reason = "recovered error exceeds rank t";
      return out;
    }
    out.codeword = std::move(c);
    out.error = std::move(e);
    out.status = DecodeStatus::Success;
  } catch (const ParameterError& ex) {
    out.reason = ex.what();
  } catch (const InconsistentInput& ex) {
    out.reason = ex.what();
  }
  return out;
}

std::optional<Subspace> locate_support(const ExtPair& p, std::span<const Element> r) {
  const MatrixCode k = kernel_space(p, r);
  if (k.dimension() == 0) return std::nullopt;
  return located_from(k.basis_matrix(0));
}

std::optional<Subspace> locate_support(const MatrixPair& p, const Matrix& r) {
  const MatrixCode k = kernel_space(p, r);
  if (k.dimension() == 0) return std::nullopt;
  return located_from(k.basis_matrix(0));
}

// ---------------------------------------------------------------------------

PairCertificate<Vector> validate_pair(const ExtPair& p) {
  PairCertificate<Vector> cert;
  const std::size_t n = p.a.length();
  const ExtLinearCode b = effective_b(p);
  const ExtLinearCode c_perp = dual(p.c);
  cert.product = true;
  const auto span_a = fq_spanning(p.a);
  for (std::size_t i = 0; i < b.dimension() && cert.product; ++i)
    for (const auto& v : span_a) {
      Vector w = pair_star(p, b.generator().row(i), v);
      if (!c_perp.contains(w)) {
        cert.product = false;
        cert.product_witness = std::move(w);
        break;
      }
    }
  cert.dim_a = p.a.dimension();
  cert.dimension = cert.dim_a > p.t;
  auto db = min_rank_distance(dual(b));
  cert.d_b_dual = db.distance;
  cert.dual_distance = db.distance > p.t;
  if (!cert.dual_distance) cert.dual_witness = db.witness;
  auto da = min_rank_distance(p.a);
  auto dc = min_rank_distance(p.c);
  cert.d_a = da.distance;
  cert.d_c = dc.distance;
  cert.distance_sum = da.distance + dc.distance > n;
  cert.a_witness = da.witness;
  cert.c_witness = dc.witness;
  return cert;
}

PairCertificate<Matrix> validate_pair(const MatrixPair& p) {
  PairCertificate<Matrix> cert;
  const std::size_t m = p.a.rows(), n = p.a.cols();
  const MatrixCode c_star = dual(p.c);
  cert.product = true;
  const auto bs = p.b.basis();
  const auto as = p.a.basis();
  for (std::size_t i = 0; i < bs.size() && cert.product; ++i)
    for (const auto& a : as) {
      Matrix w = bs[i] * a;
      if (!c_star.contains(w)) {
        cert.product = false;
        cert.product_witness = std::move(w);
        break;
      }
    }
  cert.dim_a = p.a.dimension();
  cert.dimension = cert.dim_a > m * p.t;
  auto db = min_rank_distance(dual(p.b));
  cert.d_b_dual = db.distance;
  cert.dual_distance = db.distance > p.t;
  if (!cert.dual_distance) cert.dual_witness = db.witness;
  auto da = min_rank_distance(p.a);
  auto dc = min_rank_distance(p.c);
  cert.d_a = da.distance;
  cert.d_c = dc.distance;
  cert.distance_sum = da.distance + dc.distance > n;
  cert.a_witness = da.witness;
  cert.c_witness = dc.witness;
  return cert;
}

MatrixPair convert_pair(const ExtPair& p) {
  if (p.star_basis) throw ParameterError("pairs with a product basis over F_{q^n} cannot be converted");
  return MatrixPair{to_matrix_code(p.a, BasisChoice::Alpha), to_matrix_code(effective_b(p), BasisChoice::Alpha),
                    to_matrix_code(p.c, BasisChoice::AlphaPrime), p.t, p.locating_only};
}

// ---------------------------------------------------------------------------

namespace {

Vector star_product(const Field& f, std::span<const Element> a, std::span<const Element> b) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.mul(a[i], b[i]);
  return out;
}

}  // namespace

std::size_t hamming_distance(const Subspace& code) {
  const std::size_t n = code.ambient(), k = code.dimension();
  if (k == 0) return n + 1;
  const Field& f = *code.field();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    total *= f.size();
    if (total > kEnumerationBudget) throw SizeError("code too large for brute-force enumeration");
  }
  std::size_t best = n + 1;
  Vector msg(k, 0);
  while (true) {
    std::size_t i = 0;
    while (i < k && ++msg[i] == f.size()) msg[i++] = 0;
    if (i == k) break;
    Vector word(n, 0);
    for (std::size_t j = 0; j < k; ++j) axpy(f, msg[j], code.basis().row(j), word);
    best = std::min(best, hamming_weight(word));
  }
  return best;
}

HammingCertificate validate(const HammingEcp& ecp) {
  HammingCertificate cert;
  const std::size_t n = ecp.a.ambient();
  const Field& f = *ecp.a.field();
  const Subspace c_perp = ecp.c.orthogonal();
  cert.product = true;
  for (std::size_t i = 0; i < ecp.a.dimension() && cert.product; ++i)
    for (std::size_t j = 0; j < ecp.b.dimension(); ++j)
      if (!c_perp.contains(star_product(f, ecp.a.basis().row(i), ecp.b.basis().row(j)))) {
        cert.product = false;
        break;
      }
  cert.dimension = ecp.a.dimension() > ecp.t;
  cert.dual_distance = hamming_distance(ecp.b.orthogonal()) > ecp.t;
  cert.distance_sum = hamming_distance(ecp.a) + hamming_distance(ecp.c) > n;
  return cert;
}

MatrixPair hamming_embed_pair(const HammingEcp& ecp) {
  if (!validate(ecp).valid()) throw ParameterError("not a Hamming-metric error-correcting pair");
  const FieldPtr& fq = ecp.a.field();
  const std::size_t n = ecp.a.ambient();
  auto embed = [&](const Subspace& s) {
    std::vector<Matrix> gens;
    for (std::size_t i = 0; i < s.dimension(); ++i) gens.push_back(diag_embed(fq, s.basis().row(i)));
    return MatrixCode::from_matrices(fq, n, n, gens);
  };
  return MatrixPair{embed(ecp.a), embed(ecp.b), embed(ecp.c), ecp.t, false};
}

DecodeOutcome<Vector> decode_hamming(const MatrixPair& embedded, std::span<const Element> r) {
  const FieldPtr& fq = embedded.a.field();
  const auto inner = decode_type2(embedded, diag_embed(fq, r));
  DecodeOutcome<Vector> out;
  out.status = inner.status;
  out.located = inner.located;
  out.kernel_dim = inner.kernel_dim;
  out.reason = inner.reason;
  if (inner.status != DecodeStatus::Success) return out;
  const std::size_t n = r.size();
  Vector c(n), e(n);
  for (std::size_t i = 0; i < n; ++i) {
    c[i] = (*inner.codeword)(i, i);
    e[i] = (*inner.error)(i, i);
  }
  if (diag_embed(fq, e) != *inner.error) {
    out.status = DecodeStatus::Failure;
    out.reason = "recovered error is not diagonal";
    return out;
  }
  out.codeword = std::move(c);
  out.error = std::move(e);
  return out;
}

Subspace hamming_kernel(const HammingEcp& ecp, std::span<const Element> r) {
  const Field& f = *ecp.a.field();
  const std::size_t ka = ecp.a.dimension();
  if (ka == 0) return Subspace(ecp.a.field(), ecp.a.ambient());
  Matrix eqs(ecp.a.field(), ecp.b.dimension(), ka);
  for (std::size_t i = 0; i < ecp.b.dimension(); ++i)
    for (std::size_t j = 0; j < ka; ++j)
      eqs(i, j) = dot(f, star_product(f, ecp.a.basis().row(j), ecp.b.basis().row(i)), r);
  const Matrix sols = eqs.rows() == 0 ? Matrix::identity(ecp.a.field(), ka) : kernel(eqs);
  if (sols.rows() == 0) return Subspace(ecp.a.field(), ecp.a.ambient());
  return Subspace::span(sols * ecp.a.basis());
}

DecodeOutcome<Vector> decode_hamming_classical(const HammingEcp& ecp, std::span<const Element> r) {
  DecodeOutcome<Vector> out;
  const Field& f = *ecp.a.field();
  const std::size_t n = r.size();
  const Subspace k = hamming_kernel(ecp, r);
  out.kernel_dim = k.dimension();
  if (k.dimension() == 0) {
    out.reason = "K(r) is zero";
    return out;
  }
  // Error positions lie among the zeros of the chosen a.
  std::vector<std::size_t> zeros;
  for (std::size_t i = 0; i < n; ++i)
    if (k.basis()(0, i) == 0) zeros.push_back(i);
  const Matrix h = ecp.c.orthogonal().basis();
  Matrix eqs(ecp.a.field(), h.rows(), zeros.size());
  Vector rhs(h.rows());
  for (std::size_t row = 0; row < h.rows(); ++row) {
    for (std::size_t j = 0; j < zeros.size(); ++j) eqs(row, j) = h(row, zeros[j]);
    rhs[row] = dot(f, h.row(row), r);
  }
  Vector e(n, 0);
  if (!zeros.empty()) {
    const auto sol = solve_linear(eqs, rhs);
    if (!sol.unique()) {
      out.reason = sol.consistent() ? "erasure system is not uniquely solvable" : "erasure system is inconsistent";
      return out;
    }
    for (std::size_t j = 0; j < zeros.size(); ++j) e[zeros[j]] = (*sol.particular)[j];
  } else if (!is_zero(rhs)) {
    out.reason = "erasure system is inconsistent";
    return out;
  }
  if (hamming_weight(e) > ecp.t) {
    out.reason = "recovered error exceeds weight t";
    return out;
  }
  out.codeword = sub(f, r, e);
  out.error = std::move(e);
  out.status = DecodeStatus::Success;
  return out;
}

}  // namespace rankecp

namespace rankecp {

Subspace grs_code(const FieldPtr& f, const Vector& x, const Vector& y, std::size_t k) {
  const std::size_t n = x.size();
  if (y.size() != n || k > n) throw ParameterError("GRS parameters out of range");
  if (k == 0) return Subspace(f, n);
  Matrix g(f, k, n);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < n; ++i) g(j, i) = f->mul(y[i], f->pow(x[i], j));
  return Subspace::span(g);
}

HammingEcp grs_pair(const FieldPtr& f, const Vector& x, std::size_t k) {
  const std::size_t n = x.size();
  if (k == 0 || k >= n) throw ParameterError("GRS pair needs 0 < k < n");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (x[i] == x[j]) throw ParameterError("GRS points must be distinct");
  const std::size_t t = (n - k) / 2;
  Vector ones(n, 1), dual_mult(n);
  for (std::size_t i = 0; i < n; ++i) {
    Element prod = 1;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) prod = f->mul(prod, f->sub(x[i], x[j]));
    dual_mult[i] = f->inv(prod);
  }
  return HammingEcp{grs_code(f, x, ones, t + 1), grs_code(f, x, dual_mult, t), grs_code(f, x, ones, k), t};
}

}  // namespace rankecp
