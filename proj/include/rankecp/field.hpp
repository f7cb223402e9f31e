// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace rankecp {

/// Field element. For a field built as F[x]/(f) over a subfield F of size Q the
/// value is sum c_i Q^i with c_i the (recursively encoded) coefficient of x^i.
/// Subfield elements keep their integer value in every extension of the tower.
using Element = std::uint32_t;
using Vector = std::vector<Element>;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
 public:
  /// Prime field F_p.
  static FieldPtr prime(std::uint32_t p);
  /// base[x]/(modulus); modulus is monic, little-endian, degree >= 1 and
  /// irreducible over base (checked, throws ReducibleModulus otherwise).
  static FieldPtr extension(FieldPtr base, Vector modulus);

  std::uint32_t size() const noexcept { return size_; }
  std::uint32_t characteristic() const noexcept { return p_; }
  /// Degree over base(); 1 for prime fields.
  std::uint32_t degree() const noexcept { return degree_; }
  const FieldPtr& base() const noexcept { return base_; }
  bool is_prime() const noexcept { return base_ == nullptr; }
  /// Monic modulus over base(); {0, 1} for prime fields.
  const Vector& modulus() const noexcept { return modulus_; }
  bool contains(Element x) const noexcept { return x < size_; }

  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  Element neg(Element a) const;
  Element mul(Element a, Element b) const;
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  Element pow(Element a, std::uint64_t e) const;

  /// A generator of the multiplicative group.
  Element primitive() const noexcept { return generator_; }

  /// Coefficients of x over base() (length degree()).
  Vector coefficients(Element x) const;
  Element from_coefficients(std::span<const Element> coeffs) const;

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

 private:
  Field() = default;
  Element slow_mul(Element a, Element b) const;
  void build_tables();

  std::uint32_t size_ = 0;
  std::uint32_t p_ = 0;
  std::uint32_t degree_ = 1;
  FieldPtr base_;
  Vector modulus_;
  Element generator_ = 1;
  bool tabled_ = false;
  std::vector<std::uint32_t> log_;
  std::vector<Element> exp_;
  std::vector<std::uint16_t> add_table_;
};

/// True iff the monic polynomial (little-endian over `base`) has no factor of
/// degree between 1 and deg/2.
bool is_irreducible(const Field& base, std::span<const Element> poly);

/// The shipped default modulus: a Conway polynomial for prime `base` when one is
/// tabled, else the first monic irreducible in the order sum c_i |base|^i.
Vector default_modulus(const Field& base, std::uint32_t degree);

/// Number of F_q-digits of an element of a field of size `size` (log_q size).
std::uint32_t degree_over(std::uint32_t size, std::uint32_t q);

/// x^(q^j) in f, j reduced modulo the degree of f over F_q.
Element frobenius(const Field& f, Element x, std::uint32_t q, std::int64_t j);

/// Sum of x^(Q^i) over the relative degree of f over F_Q.
Element trace(const Field& f, Element x, std::uint32_t subfield_size);

/// Base-q digits of x (the coordinates over F_q in the tower's polynomial basis).
Vector digits(Element x, std::uint32_t q, std::uint32_t count);
Element from_digits(std::span<const Element> d, std::uint32_t q);

/// An F_q-basis of a field f of the tower, with the coordinate map.
class Basis {
 public:
  /// Throws ParameterError when the elements are not an F_q-basis of f.
  Basis(FieldPtr field, FieldPtr base, Vector elements);

  const Vector& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  Element operator[](std::size_t i) const { return elements_[i]; }
  const FieldPtr& field() const noexcept { return field_; }
  const FieldPtr& base() const noexcept { return base_; }

  /// Coordinates c with x = sum c_i b_i, c_i in F_q.
  Vector coordinates(Element x) const;
  Element combine(std::span<const Element> coords) const;

  /// The trace-dual basis: Tr(b_i b'_j) = delta_ij.
  Basis dual() const;

  bool operator==(const Basis& other) const { return elements_ == other.elements_; }

 private:
  FieldPtr field_;
  FieldPtr base_;
  Vector elements_;
  Vector inverse_;  // d x d, row-major; digits(x) * inverse_ = coordinates
};

enum class Level { Base, Ext, Top };

/// F_q < F_{q^m} (< F_{q^n}, n = s m) with a distinguished basis alpha of
/// F_{q^m}/F_q and its dual. Immutable once built.
class FieldTower {
 public:
  static FieldTower make(std::uint32_t q, std::uint32_t m,
                         std::optional<Vector> modulus = std::nullopt);

  /// Adds F_{q^n} as a degree-s extension of F_{q^m}.
  FieldTower with_top(std::uint32_t s, std::optional<Vector> top_modulus = std::nullopt) const;
  /// Replaces alpha (default: polynomial basis 1, x, ..., x^{m-1}).
  FieldTower with_basis(Vector alpha) const;

  std::uint32_t q() const noexcept { return q_; }
  std::uint32_t m() const noexcept { return m_; }
  std::uint32_t s() const noexcept { return s_; }
  std::uint32_t n() const noexcept { return s_ * m_; }
  bool has_top() const noexcept { return top_ != nullptr; }

  const FieldPtr& base_field() const noexcept { return base_; }
  const FieldPtr& ext_field() const noexcept { return ext_; }
  /// Throws ParameterError if the tower has no top level.
  const FieldPtr& top_field() const;
  const FieldPtr& field(Level level) const;

  const Basis& alpha() const noexcept { return *alpha_; }
  const Basis& alpha_dual() const noexcept { return *alpha_dual_; }

  Element frobenius(Element x, std::int64_t j, Level level = Level::Ext) const;
  /// Relative trace; `to` must be strictly below or equal to `from`.
  Element trace(Element x, Level from, Level to = Level::Base) const;

  bool operator==(const FieldTower& o) const;

 private:
  FieldTower() = default;
  std::uint32_t q_ = 0, m_ = 0, s_ = 1;
  FieldPtr base_, ext_, top_;
  std::shared_ptr<const Basis> alpha_, alpha_dual_;
};

/// Supported base-field sizes: prime powers up to 16.
bool is_supported_q(std::uint32_t q);

/// The subfield of size `size` reached by walking f's base chain (f itself included).
FieldPtr subfield_of_size(const FieldPtr& f, std::uint32_t size);

}  // namespace rankecp
