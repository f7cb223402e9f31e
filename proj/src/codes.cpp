// SPDX-License-Identifier: Apache-2.0

#include "rankecp/codes.hpp"

#include <algorithm>
#include <limits>

#include "rankecp/errors.hpp"
#include "rankecp/representation.hpp"

namespace rankecp {

namespace {

Matrix parity_of(const Subspace& s) { return s.orthogonal().basis(); }

std::optional<std::uint64_t> power(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / base) return std::nullopt;
    r *= base;
  }
  return r;
}

void check_budget(std::optional<std::uint64_t> size) {
  if (!size || *size > kEnumerationBudget) throw SizeError("code too large for brute-force enumeration");
}

/// Visits every F_q-combination of `basis` (flattened words), odometer order.
/// Incrementing a digit adds its basis vector; after q steps the digit wraps and
/// the accumulated q * b vanishes in characteristic p.
template <class Visit>
void for_each_combination(const Field& fq, const std::vector<Vector>& basis, std::size_t len, Visit&& visit) {
  // Adding a vector to itself cycles with period p, so each F_q-coordinate is
  // split into F_p-digits by scaling the basis with 1, x, ..., x^{e-1}.
  const std::uint32_t p = fq.characteristic();
  std::vector<Vector> steps;
  for (const auto& b : basis)
    for (Element s = 1; s < fq.size(); s *= p) steps.push_back(scale(fq, s, b));
  Vector word(len, 0);
  std::vector<std::uint32_t> digit(steps.size(), 0);
  visit(word);
  while (true) {
    std::size_t i = 0;
    while (i < steps.size()) {
      axpy(fq, 1, steps[i], word);
      if (++digit[i] < p) break;
      digit[i] = 0;
      ++i;
    }
    if (i == steps.size()) return;
    visit(word);
  }
}

std::vector<Vector> flat_spanning_set(const ExtLinearCode& c) {
  const FieldTower& t = c.tower();
  const Field& f = *t.ext_field();
  std::vector<Vector> out;
  for (std::size_t j = 0; j < c.dimension(); ++j)
    for (std::size_t l = 0; l < t.m(); ++l)
      out.push_back(mat_rep(t.alpha(), scale(f, t.alpha()[l], c.generator().row(j))).flatten());
  return out;
}

/// Rank of an m x n matrix given row-major, stopping once it exceeds `limit`.
std::size_t bounded_rank(const Field& f, Vector& a, std::size_t m, std::size_t n, std::size_t limit) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < m; ++col) {
    std::size_t piv = r;
    while (piv < m && a[piv * n + col] == 0) ++piv;
    if (piv == m) continue;
    if (piv != r)
      for (std::size_t j = col; j < n; ++j) std::swap(a[piv * n + j], a[r * n + j]);
    const Element inv = f.inv(a[r * n + col]);
    for (std::size_t i = r + 1; i < m; ++i) {
      const Element x = a[i * n + col];
      if (x == 0) continue;
      const Element s = f.neg(f.mul(x, inv));
      for (std::size_t j = col; j < n; ++j)
        if (a[r * n + j] != 0) a[i * n + j] = f.add(a[i * n + j], f.mul(s, a[r * n + j]));
    }
    if (++r > limit) return r;
  }
  return r;
}

std::size_t bounded_rank_gf2(std::vector<std::uint64_t>& rows, std::size_t limit) {
  std::size_t r = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::uint64_t v = rows[i];
    if (v == 0) continue;
    const std::uint64_t low = v & (~v + 1);
    for (std::size_t k = i + 1; k < rows.size(); ++k)
      if (rows[k] & low) rows[k] ^= v;
    if (++r > limit) return r;
  }
  return r;
}

std::vector<std::uint64_t> row_masks(std::span<const Element> flat, std::size_t m, std::size_t n) {
  std::vector<std::uint64_t> rows(m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (flat[i * n + j]) rows[i] |= std::uint64_t{1} << j;
  return rows;
}

}  // namespace

// ---------------------------------------------------------------------------

ExtLinearCode::ExtLinearCode(FieldTower tower, Subspace space) : tower_(std::move(tower)), space_(std::move(space)) {
  if (space_.field() && space_.field()->size() != tower_.ext_field()->size())
    throw ParameterError("code space is not over the extension field");
  if (!space_.field()) space_ = Subspace(tower_.ext_field(), space_.ambient());
  parity_ = parity_of(space_);
}

ExtLinearCode ExtLinearCode::from_generators(FieldTower tower, const std::vector<Vector>& rows, std::size_t n) {
  if (rows.empty()) return zero(std::move(tower), n);
  FieldPtr f = tower.ext_field();
  for (const auto& r : rows)
    for (Element x : r)
      if (!f->contains(x)) throw ParameterError("generator entry outside F_{q^m}");
  return ExtLinearCode(std::move(tower), Subspace::span(f, rows, n));
}

ExtLinearCode ExtLinearCode::zero(FieldTower tower, std::size_t n) {
  FieldPtr f = tower.ext_field();
  return ExtLinearCode(std::move(tower), Subspace(f, n));
}

ExtLinearCode ExtLinearCode::full(FieldTower tower, std::size_t n) {
  FieldPtr f = tower.ext_field();
  return ExtLinearCode(std::move(tower), Subspace::whole(f, n));
}

Vector ExtLinearCode::encode(std::span<const Element> message) const {
  if (message.size() != dimension()) throw ParameterError("message length must equal the code dimension");
  Vector out(length(), 0);
  for (std::size_t i = 0; i < dimension(); ++i) axpy(*tower_.ext_field(), message[i], generator().row(i), out);
  return out;
}

// ---------------------------------------------------------------------------

MatrixCode::MatrixCode(FieldPtr fq, std::size_t m, std::size_t n, Subspace flat, BasisChoice basis_used)
    : fq_(std::move(fq)), m_(m), n_(n), flat_(std::move(flat)), basis_used_(basis_used) {
  if (flat_.ambient() != m_ * n_) throw ParameterError("flattened space has the wrong ambient dimension");
  if (!flat_.field()) flat_ = Subspace(fq_, m_ * n_);
}

MatrixCode MatrixCode::from_matrices(FieldPtr fq, std::size_t m, std::size_t n, const std::vector<Matrix>& gens,
                                     BasisChoice basis_used) {
  Matrix flat(fq, 0, m * n);
  for (const auto& g : gens) {
    if (g.rows() != m || g.cols() != n) throw ParameterError("generator matrix has the wrong shape");
    flat.append_row(g.data());
  }
  if (flat.rows() == 0) return MatrixCode(fq, m, n, Subspace(fq, m * n), basis_used);
  return MatrixCode(fq, m, n, Subspace::span(flat), basis_used);
}

MatrixCode MatrixCode::zero(FieldPtr fq, std::size_t m, std::size_t n) {
  return MatrixCode(fq, m, n, Subspace(fq, m * n));
}

Matrix MatrixCode::basis_matrix(std::size_t i) const {
  return Matrix::unflatten(fq_, flat_.basis().row(i), m_, n_);
}

std::vector<Matrix> MatrixCode::basis() const {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < dimension(); ++i) out.push_back(basis_matrix(i));
  return out;
}

bool MatrixCode::contains(const Matrix& a) const {
  if (a.rows() != m_ || a.cols() != n_) throw ParameterError("matrix shape mismatch");
  return flat_.contains(a.data());
}

// ---------------------------------------------------------------------------

ExtLinearCode dual(const ExtLinearCode& c) { return ExtLinearCode(c.tower(), c.space().orthogonal()); }

MatrixCode dual(const MatrixCode& c) {
  return MatrixCode(c.field(), c.rows(), c.cols(), c.space().orthogonal(), c.basis_used());
}

const Basis& basis_of(const FieldTower& tower, BasisChoice which) {
  return which == BasisChoice::Alpha ? tower.alpha() : tower.alpha_dual();
}

MatrixCode to_matrix_code(const ExtLinearCode& c, BasisChoice which) {
  const FieldTower& t = c.tower();
  const Basis& b = basis_of(t, which);
  const Field& f = *t.ext_field();
  std::vector<Matrix> gens;
  for (std::size_t j = 0; j < c.dimension(); ++j)
    for (std::size_t l = 0; l < t.m(); ++l) gens.push_back(mat_rep(b, scale(f, t.alpha()[l], c.generator().row(j))));
  return MatrixCode::from_matrices(t.base_field(), t.m(), c.length(), gens, which);
}

ExtLinearCode shorten(const ExtLinearCode& a, const Subspace& l) {
  if (l.ambient() != a.length()) throw ParameterError("support space has the wrong ambient dimension");
  if (a.dimension() == 0 || l.dimension() == 0) return a;
  const FieldPtr& f = a.tower().ext_field();
  // x G v^T = 0 for each basis vector v of L (entries of v lie in F_q).
  Matrix eqs(f, l.dimension(), a.dimension());
  for (std::size_t r = 0; r < l.dimension(); ++r)
    for (std::size_t j = 0; j < a.dimension(); ++j) eqs(r, j) = dot(*f, a.generator().row(j), l.basis().row(r));
  const Matrix sols = kernel(eqs);
  if (sols.rows() == 0) return ExtLinearCode::zero(a.tower(), a.length());
  return ExtLinearCode(a.tower(), Subspace::span(sols * a.generator()));
}

MatrixCode shorten(const MatrixCode& a, const Subspace& l) {
  if (l.ambient() != a.cols()) throw ParameterError("support space has the wrong ambient dimension");
  if (a.dimension() == 0 || l.dimension() == 0) return a;
  const FieldPtr& f = a.field();
  const std::size_t m = a.rows(), n = a.cols(), k = a.dimension();
  // sum_j x_j A_j v^T = 0 gives m equations per basis vector v of L.
  Matrix eqs(f, l.dimension() * m, k);
  for (std::size_t j = 0; j < k; ++j) {
    const auto flat = a.space().basis().row(j);
    for (std::size_t r = 0; r < l.dimension(); ++r)
      for (std::size_t i = 0; i < m; ++i) eqs(r * m + i, j) = dot(*f, flat.subspan(i * n, n), l.basis().row(r));
  }
  const Matrix sols = kernel(eqs);
  if (sols.rows() == 0) return MatrixCode(f, m, n, Subspace(f, m * n), a.basis_used());
  return MatrixCode(f, m, n, Subspace::span(sols * a.space().basis()), a.basis_used());
}

std::optional<std::uint64_t> codebook_size(const ExtLinearCode& c) {
  return power(c.tower().ext_field()->size(), c.dimension());
}

std::optional<std::uint64_t> codebook_size(const MatrixCode& c) { return power(c.field()->size(), c.dimension()); }

// ---------------------------------------------------------------------------

namespace {

std::size_t singleton_bound(std::size_t kq, std::size_t m, std::size_t n) {
  const std::size_t big = std::max(m, n), small = std::min(m, n);
  if (kq == 0) return n + 1;
  return small - (kq + big - 1) / big + 1;
}

template <class Word, class Convert>
MinimumDistance<Word> brute_minimum(const Field& fq, const std::vector<Vector>& basis, std::size_t m, std::size_t n,
                                    std::optional<std::uint64_t> size, Convert&& convert) {
  if (basis.empty()) return {n + 1, std::nullopt};
  check_budget(size);
  std::size_t best = n + 1;
  Vector best_word;
  const bool gf2 = fq.size() == 2 && n <= 64;
  Vector scratch;
  for_each_combination(fq, basis, m * n, [&](const Vector& w) {
    if (best == 1 || is_zero(w)) return;
    std::size_t r;
    if (gf2) {
      auto rows = row_masks(w, m, n);
      r = bounded_rank_gf2(rows, best - 1);
    } else {
      scratch = w;
      r = bounded_rank(fq, scratch, m, n, best - 1);
    }
    if (r < best) {
      best = r;
      best_word = w;
    }
  });
  return {best, convert(best_word)};
}

}  // namespace

MinimumDistance<Vector> min_rank_distance(const ExtLinearCode& c, DistanceMode mode) {
  const FieldTower& t = c.tower();
  if (mode == DistanceMode::Bound) return {singleton_bound(t.m() * c.dimension(), t.m(), c.length()), std::nullopt};
  const FieldPtr& fq = t.base_field();
  return brute_minimum<Vector>(*fq, flat_spanning_set(c), t.m(), c.length(), codebook_size(c), [&](const Vector& w) {
    return rep_inverse(t.alpha(), Matrix::unflatten(fq, w, t.m(), c.length()));
  });
}

MinimumDistance<Matrix> min_rank_distance(const MatrixCode& c, DistanceMode mode) {
  if (mode == DistanceMode::Bound) return {singleton_bound(c.dimension(), c.rows(), c.cols()), std::nullopt};
  return brute_minimum<Matrix>(*c.field(), c.space().basis().row_vectors(), c.rows(), c.cols(), codebook_size(c),
                               [&](const Vector& w) { return Matrix::unflatten(c.field(), w, c.rows(), c.cols()); });
}

// ---------------------------------------------------------------------------

MlOracle::MlOracle(const ExtLinearCode& c)
    : fq_(c.tower().base_field()), m_(c.tower().m()), n_(c.length()), basis_(c.tower().alpha()) {
  check_budget(codebook_size(c));
  auto basis = flat_spanning_set(c);
  // The F_q-spanning set has m k vectors that are F_q-independent.
  for_each_combination(*fq_, basis, m_ * n_, [&](const Vector& w) { flat_.push_back(w); });
  for (const auto& w : flat_) words_.push_back(rep_inverse(*basis_, Matrix::unflatten(fq_, w, m_, n_)));
  if (fq_->size() == 2 && n_ <= 64)
    for (const auto& w : flat_) masks_.push_back(row_masks(w, m_, n_));
}

MlOracle::MlOracle(const MatrixCode& c) : fq_(c.field()), m_(c.rows()), n_(c.cols()) {
  check_budget(codebook_size(c));
  for_each_combination(*fq_, c.space().basis().row_vectors(), m_ * n_, [&](const Vector& w) { flat_.push_back(w); });
  if (fq_->size() == 2 && n_ <= 64)
    for (const auto& w : flat_) masks_.push_back(row_masks(w, m_, n_));
}

MlOracle::Best MlOracle::search(std::span<const Element> received) const {
  const Field& f = *fq_;
  std::vector<std::uint64_t> rmask;
  if (!masks_.empty()) rmask = row_masks(received, m_, n_);
  Best best{0, std::numeric_limits<std::size_t>::max(), false};
  Vector diff(m_ * n_);
  std::vector<std::uint64_t> rows(m_);
  // Ties are resolved towards the lexicographically smallest codeword; ranks are
  // only computed exactly up to the current best distance.
  auto smaller = [&](std::size_t a, std::size_t b) {
    const auto& wa = words_.empty() ? flat_[a] : words_[a];
    const auto& wb = words_.empty() ? flat_[b] : words_[b];
    return std::lexicographical_compare(wa.begin(), wa.end(), wb.begin(), wb.end());
  };
  for (std::size_t idx = 0; idx < flat_.size(); ++idx) {
    const std::size_t limit = best.distance == std::numeric_limits<std::size_t>::max() ? m_ * n_ : best.distance;
    std::size_t r;
    if (!masks_.empty()) {
      for (std::size_t i = 0; i < m_; ++i) rows[i] = rmask[i] ^ masks_[idx][i];
      r = bounded_rank_gf2(rows, limit);
    } else {
      for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = f.sub(received[i], flat_[idx][i]);
      r = bounded_rank(f, diff, m_, n_, limit);
    }
    if (r < best.distance) {
      best = {idx, r, false};
    } else if (r == best.distance) {
      best.tie = true;
      if (smaller(idx, best.index)) best.index = idx;
    }
  }
  return best;
}

MlDecision<Vector> MlOracle::decode(std::span<const Element> received) const {
  if (!basis_) throw ParameterError("oracle was built for a matrix code");
  if (received.size() != n_) throw ParameterError("received word has the wrong length");
  const Best b = search(mat_rep(*basis_, received).data());
  return {words_[b.index], b.distance, b.tie};
}

MlDecision<Matrix> MlOracle::decode(const Matrix& received) const {
  if (received.rows() != m_ || received.cols() != n_) throw ParameterError("received matrix has the wrong shape");
  const Best b = search(received.data());
  return {Matrix::unflatten(fq_, flat_[b.index], m_, n_), b.distance, b.tie};
}

MlDecision<Vector> ml_decode_oracle(const ExtLinearCode& c, std::span<const Element> received) {
  return MlOracle(c).decode(received);
}

MlDecision<Matrix> ml_decode_oracle(const MatrixCode& c, const Matrix& received) {
  return MlOracle(c).decode(received);
}

// ---------------------------------------------------------------------------

Element random_element(const Field& f, Rng& rng) { return static_cast<Element>(rng.below(f.size())); }

Vector random_vector(const Field& f, std::size_t n, Rng& rng) {
  Vector v(n);
  for (auto& x : v) x = random_element(f, rng);
  return v;
}

Matrix random_matrix(const FieldPtr& f, std::size_t rows, std::size_t cols, Rng& rng) {
  Matrix a(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a(i, j) = random_element(*f, rng);
  return a;
}

Matrix random_rank_error(const FieldPtr& fq, std::size_t m, std::size_t n, std::size_t t, Rng& rng) {
  if (t > std::min(m, n)) throw ParameterError("error rank exceeds min(m, n)");
  if (t == 0) return Matrix(fq, m, n);
  Matrix x, y;
  do x = random_matrix(fq, m, t, rng);
  while (rank(x) != t);
  do y = random_matrix(fq, t, n, rng);
  while (rank(y) != t);
  return x * y;
}

Vector random_rank_error(const Basis& basis, std::size_t n, std::size_t t, Rng& rng) {
  return rep_inverse(basis, random_rank_error(basis.base(), basis.size(), n, t, rng));
}

ExtLinearCode random_ext_code(const FieldTower& tower, std::size_t n, std::size_t k, Rng& rng) {
  if (k > n) throw ParameterError("dimension exceeds length");
  if (k == 0) return ExtLinearCode::zero(tower, n);
  Matrix g;
  do g = random_matrix(tower.ext_field(), k, n, rng);
  while (rank(g) != k);
  return ExtLinearCode(tower, Subspace::span(g));
}

MatrixCode random_matrix_code(const FieldPtr& fq, std::size_t m, std::size_t n, std::size_t k, Rng& rng) {
  if (k > m * n) throw ParameterError("dimension exceeds mn");
  if (k == 0) return MatrixCode::zero(fq, m, n);
  Matrix g;
  do g = random_matrix(fq, k, m * n, rng);
  while (rank(g) != k);
  return MatrixCode(fq, m, n, Subspace::span(g));
}

Vector random_codeword(const ExtLinearCode& c, Rng& rng) {
  return c.encode(random_vector(*c.tower().ext_field(), c.dimension(), rng));
}

Matrix random_codeword(const MatrixCode& c, Rng& rng) {
  Vector x(c.rows() * c.cols(), 0);
  for (std::size_t i = 0; i < c.dimension(); ++i)
    axpy(*c.field(), random_element(*c.field(), rng), c.space().basis().row(i), x);
  return Matrix::unflatten(c.field(), x, c.rows(), c.cols());
}

}  // namespace rankecp
