// SPDX-License-Identifier: Apache-2.0

#include "rankecp/field.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>

#include "rankecp/errors.hpp"

namespace rankecp {

namespace {

constexpr std::uint32_t kTableLimit = 1u << 16;

bool is_prime_number(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// q = p^e, or {0, 0} if q is not a prime power.
std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint32_t q) {
  if (q < 2) return {0, 0};
  std::uint32_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t e = 0;
  while (q % p == 0) {
    q /= p;
    ++e;
  }
  return q == 1 ? std::pair{p, e} : std::pair{0u, 0u};
}

// Conway polynomials, little-endian.
const std::map<std::pair<std::uint32_t, std::uint32_t>, Vector>& conway_table() {
  static const std::map<std::pair<std::uint32_t, std::uint32_t>, Vector> table = {
      {{2, 1}, {1, 1}},
      {{2, 2}, {1, 1, 1}},
      {{2, 3}, {1, 1, 0, 1}},
      {{2, 4}, {1, 1, 0, 0, 1}},
      {{2, 5}, {1, 0, 1, 0, 0, 1}},
      {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
      {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
      {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
      {{3, 1}, {1, 1}},
      {{3, 2}, {2, 2, 1}},
      {{3, 3}, {1, 2, 0, 1}},
      {{3, 4}, {2, 0, 0, 2, 1}},
      {{3, 5}, {1, 2, 0, 0, 0, 1}},
      {{3, 6}, {2, 2, 1, 0, 2, 0, 1}},
      {{5, 1}, {3, 1}},
      {{5, 2}, {2, 4, 1}},
      {{5, 3}, {3, 3, 0, 1}},
      {{5, 4}, {2, 4, 4, 0, 1}},
      {{7, 1}, {4, 1}},
      {{7, 2}, {3, 6, 1}},
      {{7, 3}, {4, 0, 6, 1}},
      {{11, 1}, {9, 1}},
      {{11, 2}, {2, 7, 1}},
      {{13, 1}, {11, 1}},
      {{13, 2}, {2, 12, 1}},
  };
  return table;
}

// Remainder of a modulo the monic polynomial b over f (both little-endian).
Vector poly_rem(const Field& f, Vector a, std::span<const Element> b) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const Element lead = a.back();
    if (lead != 0) {
      const std::size_t shift = a.size() - 1 - db;
      for (std::size_t i = 0; i < db; ++i)
        a[shift + i] = f.sub(a[shift + i], f.mul(lead, b[i]));
    }
    a.pop_back();
  }
  return a;
}

std::optional<Vector> invert_square(const Field& f, Vector a, std::size_t d) {
  Vector inv(d * d, 0);
  for (std::size_t i = 0; i < d; ++i) inv[i * d + i] = 1;
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t piv = col;
    while (piv < d && a[piv * d + col] == 0) ++piv;
    if (piv == d) return std::nullopt;
    if (piv != col) {
      for (std::size_t j = 0; j < d; ++j) {
        std::swap(a[piv * d + j], a[col * d + j]);
        std::swap(inv[piv * d + j], inv[col * d + j]);
      }
    }
    const Element s = f.inv(a[col * d + col]);
    for (std::size_t j = 0; j < d; ++j) {
      a[col * d + j] = f.mul(a[col * d + j], s);
      inv[col * d + j] = f.mul(inv[col * d + j], s);
    }
    for (std::size_t r = 0; r < d; ++r) {
      if (r == col || a[r * d + col] == 0) continue;
      const Element factor = a[r * d + col];
      for (std::size_t j = 0; j < d; ++j) {
        a[r * d + j] = f.sub(a[r * d + j], f.mul(factor, a[col * d + j]));
        inv[r * d + j] = f.sub(inv[r * d + j], f.mul(factor, inv[col * d + j]));
      }
    }
  }
  return inv;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_supported_q(std::uint32_t q) {
  auto [p, e] = prime_power(q);
  return p != 0 && q <= 16;
}

FieldPtr subfield_of_size(const FieldPtr& f, std::uint32_t size) {
  for (FieldPtr cur = f; cur; cur = cur->base())
    if (cur->size() == size) return cur;
  if (f && size == f->characteristic()) return Field::prime(size);
  throw ParameterError("no subfield of size " + std::to_string(size) + " in the tower");
}

// ---------------------------------------------------------------------------
// Field

FieldPtr Field::prime(std::uint32_t p) {
  if (!is_prime_number(p)) throw ParameterError("not a prime: " + std::to_string(p));
  auto f = std::shared_ptr<Field>(new Field());
  f->size_ = p;
  f->p_ = p;
  f->degree_ = 1;
  f->modulus_ = {0, 1};
  f->build_tables();
  return f;
}

FieldPtr Field::extension(FieldPtr base, Vector modulus) {
  if (!base) throw ParameterError("extension of a null field");
  if (modulus.size() < 2) throw ParameterError("modulus must have degree >= 1");
  if (modulus.back() != 1) throw ParameterError("modulus must be monic");
  for (Element c : modulus)
    if (!base->contains(c)) throw ParameterError("modulus coefficient outside the base field");
  if (!is_irreducible(*base, modulus)) throw ReducibleModulus("modulus is reducible over the base field");

  const std::uint64_t size = [&] {
    std::uint64_t s = 1;
    for (std::size_t i = 1; i < modulus.size(); ++i) s *= base->size();
    return s;
  }();
  if (size > (1ull << 31)) throw UnsupportedParameter("field too large");

  auto f = std::shared_ptr<Field>(new Field());
  f->size_ = static_cast<std::uint32_t>(size);
  f->p_ = base->characteristic();
  f->degree_ = static_cast<std::uint32_t>(modulus.size() - 1);
  f->base_ = std::move(base);
  f->modulus_ = std::move(modulus);
  f->build_tables();
  return f;
}

Vector Field::coefficients(Element x) const {
  if (is_prime()) return {x};
  return digits(x, base_->size(), degree_);
}

Element Field::from_coefficients(std::span<const Element> coeffs) const {
  if (is_prime()) return coeffs.empty() ? 0 : coeffs[0];
  return from_digits(coeffs, base_->size());
}

Element Field::add(Element a, Element b) const {
  if (p_ == 2) return a ^ b;
  if (!add_table_.empty()) return add_table_[a * size_ + b];
  Element r = 0, place = 1;
  while (a != 0 || b != 0) {
    r += ((a % p_ + b % p_) % p_) * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return r;
}

Element Field::neg(Element a) const {
  if (p_ == 2) return a;
  Element r = 0, place = 1;
  while (a != 0) {
    r += ((p_ - a % p_) % p_) * place;
    a /= p_;
    place *= p_;
  }
  return r;
}

Element Field::slow_mul(Element a, Element b) const {
  if (is_prime()) return static_cast<Element>((std::uint64_t{a} * b) % p_);
  const Field& k = *base_;
  const Vector ca = coefficients(a), cb = coefficients(b);
  Vector prod(2 * degree_ - 1, 0);
  for (std::uint32_t i = 0; i < degree_; ++i) {
    if (ca[i] == 0) continue;
    for (std::uint32_t j = 0; j < degree_; ++j)
      prod[i + j] = k.add(prod[i + j], k.mul(ca[i], cb[j]));
  }
  return from_coefficients(poly_rem(k, std::move(prod), modulus_));
}

Element Field::mul(Element a, Element b) const {
  if (a == 0 || b == 0) return 0;
  if (tabled_) {
    std::uint32_t l = log_[a] + log_[b];
    if (l >= size_ - 1) l -= size_ - 1;
    return exp_[l];
  }
  return slow_mul(a, b);
}

Element Field::inv(Element a) const {
  if (a == 0) throw DivisionByZero("inverse of zero");
  if (tabled_) return exp_[(size_ - 1 - log_[a]) % (size_ - 1)];
  return pow(a, size_ - 2);
}

Element Field::pow(Element a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  if (tabled_) {
    const std::uint64_t l = (std::uint64_t{log_[a]} * (e % (size_ - 1))) % (size_ - 1);
    return exp_[l];
  }
  Element result = 1, base = a;
  while (e != 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

void Field::build_tables() {
  if (p_ != 2 && size_ <= 256) {
    add_table_.resize(std::size_t{size_} * size_);
    for (Element a = 0; a < size_; ++a)
      for (Element b = 0; b < size_; ++b) {
        Element r = 0, place = 1, x = a, y = b;
        while (x != 0 || y != 0) {
          r += ((x % p_ + y % p_) % p_) * place;
          x /= p_;
          y /= p_;
          place *= p_;
        }
        add_table_[a * size_ + b] = static_cast<std::uint16_t>(r);
      }
  }
  if (size_ == 2) {
    generator_ = 1;
  } else {
    const auto factors = prime_factors(size_ - 1);
    auto slow_pow = [&](Element x, std::uint64_t e) {
      Element r = 1;
      while (e != 0) {
        if (e & 1) r = slow_mul(r, x);
        x = slow_mul(x, x);
        e >>= 1;
      }
      return r;
    };
    generator_ = 0;
    for (Element g = 2; g < size_ && generator_ == 0; ++g) {
      bool ok = true;
      for (auto r : factors)
        if (slow_pow(g, (size_ - 1) / r) == 1) {
          ok = false;
          break;
        }
      if (ok) generator_ = g;
    }
  }
  if (size_ > kTableLimit) return;
  exp_.assign(size_ - 1, 0);
  log_.assign(size_, 0);
  Element x = 1;
  for (std::uint32_t i = 0; i < size_ - 1; ++i) {
    exp_[i] = x;
    log_[x] = i;
    x = slow_mul(x, generator_);
  }
  tabled_ = true;
}

// ---------------------------------------------------------------------------
// Polynomials and helpers

bool is_irreducible(const Field& base, std::span<const Element> poly) {
  const std::size_t d = poly.size() - 1;
  if (d == 0) return false;
  const std::uint32_t Q = base.size();
  for (std::size_t k = 1; k <= d / 2; ++k) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < k; ++i) count *= Q;
    for (std::uint64_t v = 0; v < count; ++v) {
      Vector divisor = digits(static_cast<Element>(v), Q, static_cast<std::uint32_t>(k));
      divisor.push_back(1);
      const Vector r = poly_rem(base, Vector(poly.begin(), poly.end()), divisor);
      if (std::all_of(r.begin(), r.end(), [](Element c) { return c == 0; })) return false;
    }
  }
  return true;
}

Vector default_modulus(const Field& base, std::uint32_t degree) {
  if (degree == 0) throw ParameterError("degree must be positive");
  if (base.is_prime()) {
    auto it = conway_table().find({base.size(), degree});
    if (it != conway_table().end()) return it->second;
  }
  const std::uint32_t Q = base.size();
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < degree; ++i) count *= Q;
  for (std::uint64_t v = 0; v < count; ++v) {
    Vector poly = digits(static_cast<Element>(v), Q, degree);
    poly.push_back(1);
    if (is_irreducible(base, poly)) return poly;
  }
  throw SearchError("no irreducible polynomial found");
}

std::uint32_t degree_over(std::uint32_t size, std::uint32_t q) {
  std::uint32_t d = 0;
  std::uint64_t s = 1;
  while (s < size) {
    s *= q;
    ++d;
  }
  if (s != size) throw ParameterError("field size is not a power of q");
  return d;
}

Element frobenius(const Field& f, Element x, std::uint32_t q, std::int64_t j) {
  const auto d = static_cast<std::int64_t>(degree_over(f.size(), q));
  std::int64_t k = j % d;
  if (k < 0) k += d;
  for (std::int64_t i = 0; i < k; ++i) x = f.pow(x, q);
  return x;
}

Element trace(const Field& f, Element x, std::uint32_t subfield_size) {
  const std::uint32_t d = degree_over(f.size(), subfield_size);
  Element acc = 0, y = x;
  for (std::uint32_t i = 0; i < d; ++i) {
    acc = f.add(acc, y);
    y = f.pow(y, subfield_size);
  }
  return acc;
}

Vector digits(Element x, std::uint32_t q, std::uint32_t count) {
  Vector out(count, 0);
  for (std::uint32_t i = 0; i < count; ++i) {
    out[i] = x % q;
    x /= q;
  }
  return out;
}

Element from_digits(std::span<const Element> d, std::uint32_t q) {
  Element v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * q + d[i];
  return v;
}

// ---------------------------------------------------------------------------
// Basis

Basis::Basis(FieldPtr field, FieldPtr base, Vector elements)
    : field_(std::move(field)), base_(std::move(base)), elements_(std::move(elements)) {
  const std::uint32_t q = base_->size();
  const std::uint32_t d = degree_over(field_->size(), q);
  if (elements_.size() != d) throw ParameterError("basis has the wrong number of elements");
  Vector coords(std::size_t{d} * d);
  for (std::uint32_t i = 0; i < d; ++i) {
    if (!field_->contains(elements_[i])) throw ParameterError("basis element outside the field");
    const Vector row = digits(elements_[i], q, d);
    std::copy(row.begin(), row.end(), coords.begin() + i * d);
  }
  auto inv = invert_square(*base_, std::move(coords), d);
  if (!inv) throw ParameterError("basis elements are linearly dependent over F_q");
  inverse_ = std::move(*inv);
}

Vector Basis::coordinates(Element x) const {
  const std::uint32_t q = base_->size();
  const std::size_t d = elements_.size();
  const Vector dig = digits(x, q, static_cast<std::uint32_t>(d));
  Vector out(d, 0);
  for (std::size_t i = 0; i < d; ++i) {
    if (dig[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) out[j] = base_->add(out[j], base_->mul(dig[i], inverse_[i * d + j]));
  }
  return out;
}

Element Basis::combine(std::span<const Element> coords) const {
  Element acc = 0;
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] != 0) acc = field_->add(acc, field_->mul(coords[i], elements_[i]));
  return acc;
}

Basis Basis::dual() const {
  const std::size_t d = elements_.size();
  const std::uint32_t q = base_->size();
  Vector gram(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) gram[i * d + j] = trace(*field_, field_->mul(elements_[i], elements_[j]), q);
  auto ginv = invert_square(*base_, std::move(gram), d);
  if (!ginv) throw ParameterError("trace form is degenerate");
  Vector dual(d, 0);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k) dual[j] = field_->add(dual[j], field_->mul((*ginv)[j * d + k], elements_[k]));
  return Basis(field_, base_, std::move(dual));
}

// ---------------------------------------------------------------------------
// FieldTower

FieldTower FieldTower::make(std::uint32_t q, std::uint32_t m, std::optional<Vector> modulus) {
  auto [p, e] = prime_power(q);
  if (p == 0 || q > 16) throw UnsupportedParameter("q must be a prime power <= 16, got " + std::to_string(q));
  if (m == 0) throw ParameterError("extension degree must be positive");
  FieldTower t;
  t.q_ = q;
  t.m_ = m;
  auto prime_field = Field::prime(p);
  t.base_ = e == 1 ? prime_field : Field::extension(prime_field, default_modulus(*prime_field, e));
  Vector mod = modulus ? std::move(*modulus) : default_modulus(*t.base_, m);
  if (mod.size() != m + 1) throw ParameterError("modulus degree does not match m");
  t.ext_ = Field::extension(t.base_, std::move(mod));
  Vector poly_basis(m);
  Element x = 1;
  for (std::uint32_t i = 0; i < m; ++i, x *= q) poly_basis[i] = x;
  t.alpha_ = std::make_shared<const Basis>(t.ext_, t.base_, std::move(poly_basis));
  t.alpha_dual_ = std::make_shared<const Basis>(t.alpha_->dual());
  return t;
}

FieldTower FieldTower::with_top(std::uint32_t s, std::optional<Vector> top_modulus) const {
  if (s == 0) throw ParameterError("top degree must be positive");
  FieldTower t = *this;
  t.s_ = s;
  Vector mod = top_modulus ? std::move(*top_modulus) : default_modulus(*ext_, s);
  if (mod.size() != s + 1) throw ParameterError("top modulus degree does not match s");
  t.top_ = Field::extension(ext_, std::move(mod));
  return t;
}

FieldTower FieldTower::with_basis(Vector alpha) const {
  FieldTower t = *this;
  t.alpha_ = std::make_shared<const Basis>(ext_, base_, std::move(alpha));
  t.alpha_dual_ = std::make_shared<const Basis>(t.alpha_->dual());
  return t;
}

const FieldPtr& FieldTower::top_field() const {
  if (!top_) throw ParameterError("tower has no top level");
  return top_;
}

const FieldPtr& FieldTower::field(Level level) const {
  switch (level) {
    case Level::Base: return base_;
    case Level::Ext: return ext_;
    case Level::Top: return top_field();
  }
  return ext_;
}

Element FieldTower::frobenius(Element x, std::int64_t j, Level level) const {
  return rankecp::frobenius(*field(level), x, q_, j);
}

Element FieldTower::trace(Element x, Level from, Level to) const {
  if (static_cast<int>(to) > static_cast<int>(from)) throw ParameterError("trace levels are not nested");
  return rankecp::trace(*field(from), x, field(to)->size());
}

bool FieldTower::operator==(const FieldTower& o) const {
  auto same = [](const FieldPtr& a, const FieldPtr& b) {
    if (!a || !b) return a == b;
    return a->size() == b->size() && a->modulus() == b->modulus();
  };
  return q_ == o.q_ && m_ == o.m_ && s_ == o.s_ && same(base_, o.base_) && same(ext_, o.ext_) &&
         same(top_, o.top_) && alpha_->elements() == o.alpha_->elements();
}

}  // namespace rankecp
