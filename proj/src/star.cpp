// SPDX-License-Identifier: Apache-2.0

#include "rankecp/star.hpp"

#include "rankecp/errors.hpp"
#include "rankecp/linearized.hpp"
#include "rankecp/representation.hpp"

namespace rankecp {

Vector star(const FieldTower& tower, std::span<const Element> c, std::span<const Element> d) {
  return star(tower.alpha(), c, d);
}

Vector star(const Basis& basis, std::span<const Element> c, std::span<const Element> d) {
  if (c.size() != basis.size()) throw ParameterError("left factor of a star product must have length m");
  const Field& f = *basis.field();
  const Matrix md = mat_rep(basis, d);
  Vector out(d.size(), 0);
  for (std::size_t i = 0; i < c.size(); ++i) axpy(f, c[i], md.row(i), out);
  return out;
}

Vector alpha_n(const FieldTower& tower, std::size_t n) {
  if (n > tower.m()) throw ParameterError("alpha_n is only defined for n <= m");
  const auto& a = tower.alpha().elements();
  return Vector(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(n));
}

Vector phi_n(const FieldTower& tower, std::span<const Element> c) {
  const std::size_t m = tower.m();
  if (c.size() >= m) return Vector(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(m));
  const Vector points = alpha_n(tower, c.size());
  return interpolate(tower.ext_field(), tower.q(), c, points).eval(tower.alpha().elements());
}

Matrix phi_n_matrix(const FieldTower& tower, std::size_t n) {
  Matrix phi(tower.ext_field(), tower.m(), n);
  Vector e(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    e[j] = 1;
    const Vector col = phi_n(tower, e);
    for (std::size_t i = 0; i < tower.m(); ++i) phi(i, j) = col[i];
    e[j] = 0;
  }
  return phi;
}

// ---------------------------------------------------------------------------

StarContext::StarContext(FieldTower tower, std::size_t n)
    : tower_(std::move(tower)), n_(n), phi_(phi_n_matrix(tower_, n)) {}

StarContext::StarContext(FieldTower tower, std::size_t n, Matrix phi)
    : tower_(std::move(tower)), n_(n), phi_(std::move(phi)) {
  if (phi_.rows() != tower_.m() || phi_.cols() != n_) throw ParameterError("phi must be an m x n matrix");
  if (n_ <= tower_.m() && this->phi(alpha_n(tower_, n_)) != tower_.alpha().elements())
    throw ParameterError("phi does not map alpha_n to alpha");
}

Vector StarContext::phi(std::span<const Element> c) const {
  if (c.size() != n_) throw ParameterError("vector length does not match the context");
  const Field& f = *tower_.ext_field();
  Vector out(tower_.m(), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = dot(f, phi_.row(i), c);
  return out;
}

Vector StarContext::star(std::span<const Element> c, std::span<const Element> d) const {
  if (d.size() != n_) throw ParameterError("vector length does not match the context");
  return rankecp::star(tower_, phi(c), d);
}

// ---------------------------------------------------------------------------

Vector transposed_pairing(const FieldTower& tower, std::span<const Element> c, std::span<const Element> d) {
  if (c.size() != d.size()) throw ParameterError("transposed pairing needs equal lengths");
  const Field& f = *tower.ext_field();
  const Matrix md = mat_rep(tower.alpha(), d);
  Vector out(tower.m());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = dot(f, c, md.row(i));
  return out;
}

Vector vec_transpose(const FieldTower& tower, std::span<const Element> b) {
  if (b.size() != tower.m()) throw ParameterError("transpose needs a vector of length m");
  return rep_inverse(tower.alpha(), mat_rep(tower.alpha(), b).transposed());
}

// ---------------------------------------------------------------------------

namespace {

/// Accumulates a span, stopping once the whole ambient space is reached.
class SpanBuilder {
 public:
  SpanBuilder(FieldPtr f, std::size_t ambient) : space_(std::move(f), ambient) {}
  bool full() const { return space_.dimension() == space_.ambient(); }
  void add(std::span<const Element> v) {
    if (full() || is_zero(v) || space_.contains(v)) return;
    Matrix g = space_.basis();
    if (g.rows() == 0) g = Matrix(space_.field(), 0, space_.ambient());
    g.append_row(v);
    space_ = Subspace::span(g);
  }
  const Subspace& space() const { return space_; }

 private:
  Subspace space_;
};

}  // namespace

ExtLinearCode space_product(const ExtLinearCode& b, const ExtLinearCode& a) {
  return space_product(a.tower().alpha(), b, a);
}

ExtLinearCode space_product(const Basis& star_basis, const ExtLinearCode& b, const ExtLinearCode& a) {
  const FieldTower& t = a.tower();
  if (b.length() != star_basis.size()) throw ParameterError("left code length must match the product basis");
  const Field& f = *t.ext_field();
  SpanBuilder acc(t.ext_field(), a.length());
  for (std::size_t i = 0; i < b.dimension() && !acc.full(); ++i)
    for (std::size_t j = 0; j < a.dimension() && !acc.full(); ++j)
      for (std::size_t l = 0; l < t.m() && !acc.full(); ++l) {
        const Vector v = star(star_basis, b.generator().row(i), scale(f, t.alpha()[l], a.generator().row(j)));
        for (Element x : v)
          if (!f.contains(x)) throw ParameterError("product leaves F_{q^m}");
        acc.add(v);
      }
  return ExtLinearCode(t, acc.space());
}

ExtLinearCode apply_phi(const StarContext& ctx, const ExtLinearCode& c) {
  if (c.length() != ctx.n()) throw ParameterError("code length does not match the context");
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < c.dimension(); ++i) rows.push_back(ctx.phi(c.generator().row(i)));
  return ExtLinearCode::from_generators(ctx.tower(), rows, ctx.m());
}

ExtLinearCode space_product(const StarContext& ctx, const ExtLinearCode& b, const ExtLinearCode& a) {
  return space_product(apply_phi(ctx, b), a);
}

MatrixCode space_product(const MatrixCode& b, const MatrixCode& a) {
  if (b.rows() != a.rows() || b.cols() != a.rows()) throw ParameterError("left code must be m x m");
  SpanBuilder acc(a.field(), a.rows() * a.cols());
  const auto bb = b.basis();
  const auto ab = a.basis();
  for (const auto& x : bb) {
    if (acc.full()) break;
    for (const auto& y : ab) acc.add((x * y).data());
  }
  return MatrixCode(a.field(), a.rows(), a.cols(), acc.space(), a.basis_used());
}

}  // namespace rankecp
