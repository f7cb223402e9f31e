// SPDX-License-Identifier: Apache-2.0

#include "rankecp/linearized.hpp"

#include "rankecp/errors.hpp"
#include "rankecp/representation.hpp"

namespace rankecp {

namespace {

void trim(Vector& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

void check_points(const FieldPtr& field, std::uint32_t q, std::span<const Element> values,
                  std::span<const Element> points) {
  if (values.size() != points.size()) throw ParameterError("values and points differ in length");
  if (fq_rank(field, q, points) != points.size())
    throw ParameterError("interpolation points are F_q-linearly dependent");
}

}  // namespace

LinearizedPoly::LinearizedPoly(FieldPtr field, std::uint32_t q, Vector coeffs, std::uint32_t stride)
    : field_(std::move(field)), q_(q), stride_(stride), coeffs_(std::move(coeffs)) {
  if (stride_ == 0) throw ParameterError("stride must be positive");
  trim(coeffs_);
}

LinearizedPoly LinearizedPoly::identity(FieldPtr field, std::uint32_t q, std::uint32_t stride) {
  return LinearizedPoly(std::move(field), q, {1}, stride);
}

LinearizedPoly LinearizedPoly::monomial(FieldPtr field, std::uint32_t q, Element c, std::size_t index,
                                        std::uint32_t stride) {
  Vector coeffs(index + 1, 0);
  coeffs[index] = c;
  return LinearizedPoly(std::move(field), q, std::move(coeffs), stride);
}

std::optional<std::size_t> LinearizedPoly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Element LinearizedPoly::eval_in(const Field& ext, Element x) const {
  Element acc = 0;
  Element power = x;  // x^{[i r]}
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i > 0) power = frobenius(ext, power, q_, stride_);
    if (coeffs_[i] != 0) acc = ext.add(acc, ext.mul(coeffs_[i], power));
  }
  return acc;
}

Vector LinearizedPoly::eval(std::span<const Element> points) const { return eval_in(*field_, points); }

Vector LinearizedPoly::eval_in(const Field& ext, std::span<const Element> points) const {
  Vector out(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) out[i] = eval_in(ext, points[i]);
  return out;
}

LinearizedPoly LinearizedPoly::operator+(const LinearizedPoly& o) const {
  if (stride_ != o.stride_) throw ParameterError("stride mismatch");
  Vector c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Element a = i < coeffs_.size() ? coeffs_[i] : 0;
    const Element b = i < o.coeffs_.size() ? o.coeffs_[i] : 0;
    c[i] = field_->add(a, b);
  }
  return LinearizedPoly(field_, q_, std::move(c), stride_);
}

LinearizedPoly LinearizedPoly::scaled(Element c) const {
  return LinearizedPoly(field_, q_, scale(*field_, c, coeffs_), stride_);
}

LinearizedPoly symbolic_mul(const LinearizedPoly& f, const LinearizedPoly& g, bool reduce) {
  if (f.stride() != g.stride()) throw ParameterError("stride mismatch in symbolic product");
  const Field& k = *f.field();
  if (f.is_zero() || g.is_zero()) return LinearizedPoly(f.field(), f.q(), {}, f.stride());
  const std::size_t fold = reduce ? degree_over(k.size(), f.q()) : 0;
  const std::size_t len = f.coeffs().size() + g.coeffs().size() - 1;
  Vector c(reduce ? std::min(len, fold) : len, 0);
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    const Element a = f.coeffs()[i];
    if (a == 0) continue;
    for (std::size_t j = 0; j < g.coeffs().size(); ++j) {
      const Element b = g.coeffs()[j];
      if (b == 0) continue;
      const Element term = k.mul(a, frobenius(k, b, f.q(), static_cast<std::int64_t>(i * f.stride())));
      const std::size_t idx = reduce ? (i + j) % fold : i + j;
      c[idx] = k.add(c[idx], term);
    }
  }
  return LinearizedPoly(f.field(), f.q(), std::move(c), f.stride());
}

Matrix frobenius_rows(FieldPtr field, std::uint32_t q, std::span<const Element> b, std::size_t count,
                      std::uint32_t stride) {
  Matrix out(field, count, b.size());
  for (std::size_t j = 0; j < b.size(); ++j) {
    Element x = b[j];
    for (std::size_t i = 0; i < count; ++i) {
      out(i, j) = x;
      x = frobenius(*field, x, q, stride);
    }
  }
  return out;
}

Matrix moore_matrix(FieldPtr field, std::uint32_t q, std::span<const Element> elements, std::size_t width) {
  return frobenius_rows(std::move(field), q, elements, width).transposed();
}

LinearizedPoly interpolate(FieldPtr field, std::uint32_t q, std::span<const Element> values,
                           std::span<const Element> points) {
  check_points(field, q, values, points);
  const Field& k = *field;
  const std::size_t n = points.size();
  LinearizedPoly result(field, q);
  for (std::size_t i = 0; i < n; ++i) {
    if (values[i] == 0) continue;
    LinearizedPoly g = LinearizedPoly::identity(field, q);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      // L = x^{[1]} - (beta^{[1]} / beta) x annihilates beta = G(point_j).
      const Element beta = g(points[j]);
      const Element ratio = k.div(frobenius(k, beta, q, 1), beta);
      const LinearizedPoly l(field, q, {k.neg(ratio), 1});
      g = symbolic_mul(l, g);
    }
    const Element gi = g(points[i]);
    result = result + g.scaled(k.div(values[i], gi));
  }
  return result;
}

LinearizedPoly interpolate_moore(FieldPtr field, std::uint32_t q, std::span<const Element> values,
                                 std::span<const Element> points) {
  check_points(field, q, values, points);
  const Matrix system = moore_matrix(field, q, points, points.size());
  const auto sol = solve_linear(system, values);
  if (!sol.unique()) throw ParameterError("Moore system is singular");
  return LinearizedPoly(field, q, *sol.particular);
}

}  // namespace rankecp
