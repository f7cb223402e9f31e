// SPDX-License-Identifier: Apache-2.0

#include "rankecp/io.hpp"

#include <fstream>
#include <sstream>

#include "rankecp/errors.hpp"

namespace rankecp::io {

namespace {

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::uint64_t as_uint(const json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    throw FormatError(std::string("\"") + what + "\" must be a non-negative integer");
  return j.get<std::uint64_t>();
}

std::uint64_t uint_field(const json& j, const char* key) { return as_uint(require(j, key), key); }

std::uint64_t uint_field(const json& j, const char* key, std::uint64_t fallback) {
  return j.contains(key) ? as_uint(j.at(key), key) : fallback;
}

Vector plain_vector(const json& j, const char* what) {
  if (!j.is_array()) throw FormatError(std::string("\"") + what + "\" must be an array");
  Vector v;
  for (const auto& x : j) v.push_back(static_cast<Element>(as_uint(x, what)));
  return v;
}

std::vector<std::size_t> index_set(const json& j, const char* key) {
  std::vector<std::size_t> out;
  for (auto x : plain_vector(require(j, key), key)) out.push_back(x);
  return out;
}

const char* basis_name(BasisChoice b) { return b == BasisChoice::Alpha ? "alpha" : "alpha_prime"; }

BasisChoice basis_from(const json& j) {
  if (!j.contains("basis_used")) return BasisChoice::Alpha;
  const auto s = j.at("basis_used").get<std::string>();
  if (s == "alpha") return BasisChoice::Alpha;
  if (s == "alpha_prime") return BasisChoice::AlphaPrime;
  throw FormatError("basis_used must be \"alpha\" or \"alpha_prime\"");
}

template <class Word>
json outcome_json(const DecodeOutcome<Word>& o) {
  json j;
  j["status"] = to_string(o.status);
  j["kernel_dim"] = o.kernel_dim;
  if (!o.reason.empty()) j["reason"] = o.reason;
  if (o.codeword) j["codeword"] = to_json(*o.codeword);
  if (o.error) j["error"] = to_json(*o.error);
  if (o.located) j["located"] = to_json(*o.located);
  return j;
}

template <class Word>
json certificate_json(const PairCertificate<Word>& c) {
  json j;
  j["product"] = c.product;
  j["dimension"] = c.dimension;
  j["dual_distance"] = c.dual_distance;
  j["distance_sum"] = c.distance_sum;
  j["locating"] = c.locating();
  j["correcting"] = c.correcting();
  j["dim_a"] = c.dim_a;
  j["d_b_dual"] = c.d_b_dual;
  j["d_a"] = c.d_a;
  j["d_c"] = c.d_c;
  if (c.product_witness) j["product_witness"] = to_json(*c.product_witness);
  if (c.dual_witness) j["dual_witness"] = to_json(*c.dual_witness);
  return j;
}

}  // namespace

json parse(std::string_view text, std::string_view source) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw FormatError(std::string(source) + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " +
                      e.what());
  }
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), path);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------

json to_json(const FieldTower& tower) {
  json j;
  j["q"] = tower.q();
  j["m"] = tower.m();
  j["modulus"] = tower.ext_field()->modulus();
  if (tower.has_top()) {
    j["s"] = tower.s();
    j["top_modulus"] = tower.top_field()->modulus();
  }
  const Vector& alpha = tower.alpha().elements();
  bool polynomial = true;
  for (std::size_t i = 0, x = 1; i < alpha.size(); ++i, x *= tower.q()) polynomial = polynomial && alpha[i] == x;
  if (!polynomial) j["alpha"] = alpha;
  return j;
}

FieldTower tower_from_json(const json& j) {
  const auto q = static_cast<std::uint32_t>(uint_field(j, "q"));
  const auto m = static_cast<std::uint32_t>(uint_field(j, "m"));
  std::optional<Vector> modulus;
  if (j.contains("modulus")) modulus = plain_vector(j.at("modulus"), "modulus");
  FieldTower t = FieldTower::make(q, m, modulus);
  const auto s = static_cast<std::uint32_t>(uint_field(j, "s", 1));
  if (s > 1 || j.contains("top_modulus")) {
    std::optional<Vector> top;
    if (j.contains("top_modulus")) top = plain_vector(j.at("top_modulus"), "top_modulus");
    t = t.with_top(s, top);
  }
  if (j.contains("alpha")) t = t.with_basis(plain_vector(j.at("alpha"), "alpha"));
  return t;
}

FieldPtr base_field_from_json(const json& j) {
  return FieldTower::make(static_cast<std::uint32_t>(uint_field(j, "q")), 1).base_field();
}

json to_json(std::span<const Element> v) { return json(Vector(v.begin(), v.end())); }

json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row_vector(i));
  return rows;
}

Vector vector_from_json(const json& j, const Field& f, std::size_t length) {
  Vector v = plain_vector(j, "vector");
  if (v.size() != length)
    throw FormatError("expected a vector of length " + std::to_string(length) + ", got " + std::to_string(v.size()));
  for (auto x : v)
    if (!f.contains(x)) throw FormatError("element " + std::to_string(x) + " is outside the field");
  return v;
}

Matrix matrix_from_json(const json& j, const FieldPtr& f, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) throw FormatError("expected a matrix with " + std::to_string(rows) + " rows");
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Vector r = vector_from_json(j[i], *f, cols);
    std::copy(r.begin(), r.end(), m.row(i).begin());
  }
  return m;
}

// ---------------------------------------------------------------------------

json to_json(const ExtLinearCode& c) {
  json j;
  j["field"] = to_json(c.tower());
  j["n"] = c.length();
  j["kind"] = "ext";
  j["basis_used"] = "alpha";
  j["generators"] = to_json(c.generator());
  return j;
}

json to_json(const MatrixCode& c) {
  json j;
  j["field"] = {{"q", c.field()->size()}, {"m", c.rows()}};
  j["n"] = c.cols();
  j["kind"] = "matrix";
  j["basis_used"] = basis_name(c.basis_used());
  json gens = json::array();
  for (const auto& g : c.basis()) gens.push_back(to_json(g));
  j["generators"] = gens;
  return j;
}

ExtLinearCode ext_code_from_json(const json& j) {
  if (j.contains("kind") && j.at("kind") != "ext") throw FormatError("expected an ext code");
  FieldTower t = tower_from_json(require(j, "field"));
  const std::size_t n = uint_field(j, "n");
  const json& g = require(j, "generators");
  if (!g.is_array()) throw FormatError("\"generators\" must be an array");
  std::vector<Vector> rows;
  for (const auto& r : g) rows.push_back(vector_from_json(r, *t.ext_field(), n));
  return ExtLinearCode::from_generators(std::move(t), rows, n);
}

MatrixCode matrix_code_from_json(const json& j) {
  if (require(j, "kind") != "matrix") throw FormatError("expected a matrix code");
  const json& f = require(j, "field");
  const FieldPtr fq = base_field_from_json(f);
  const std::size_t m = uint_field(f, "m"), n = uint_field(j, "n");
  const json& g = require(j, "generators");
  if (!g.is_array()) throw FormatError("\"generators\" must be an array");
  std::vector<Matrix> gens;
  for (const auto& x : g) gens.push_back(matrix_from_json(x, fq, m, n));
  return MatrixCode::from_matrices(fq, m, n, gens, basis_from(j));
}

AnyCode code_from_json(const json& j) {
  const std::string kind = j.contains("kind") ? j.at("kind").get<std::string>() : "ext";
  if (kind == "ext") return ext_code_from_json(j);
  if (kind == "matrix") return matrix_code_from_json(j);
  throw FormatError("code kind must be \"ext\" or \"matrix\"");
}

// ---------------------------------------------------------------------------

json to_json(const ExtPair& p) {
  json j;
  j["kind"] = "I";
  j["t"] = p.t;
  j["locating_only"] = p.locating_only;
  j["A"] = to_json(p.a);
  j["B"] = to_json(p.b);
  j["C"] = to_json(p.c);
  if (p.star_basis) j["star_basis"] = p.star_basis->elements();
  return j;
}

json to_json(const MatrixPair& p) {
  json j;
  j["kind"] = "II";
  j["t"] = p.t;
  j["locating_only"] = p.locating_only;
  j["A"] = to_json(p.a);
  j["B"] = to_json(p.b);
  j["C"] = to_json(p.c);
  return j;
}

AnyPair pair_from_json(const json& j) {
  const std::string kind = require(j, "kind").get<std::string>();
  const std::size_t t = uint_field(j, "t");
  const bool locating_only = j.value("locating_only", false);
  if (kind == "I") {
    ExtPair p{ext_code_from_json(require(j, "A")), ext_code_from_json(require(j, "B")),
              ext_code_from_json(require(j, "C")), t, locating_only};
    if (j.contains("star_basis")) {
      const FieldTower& tw = p.a.tower();
      p.star_basis = Basis(tw.top_field(), tw.base_field(), plain_vector(j.at("star_basis"), "star_basis"));
    }
    return p;
  }
  if (kind == "II")
    return MatrixPair{matrix_code_from_json(require(j, "A")), matrix_code_from_json(require(j, "B")),
                      matrix_code_from_json(require(j, "C")), t, locating_only};
  throw FormatError("pair kind must be \"I\" or \"II\"");
}

// ---------------------------------------------------------------------------

json to_json(const LinearizedPoly& p) { return {{"r", p.stride()}, {"coeffs", p.coeffs()}}; }

LinearizedPoly poly_from_json(const json& j, FieldPtr field, std::uint32_t q) {
  const auto r = static_cast<std::uint32_t>(uint_field(j, "r", 1));
  const Vector coeffs = plain_vector(require(j, "coeffs"), "coeffs");
  for (auto x : coeffs)
    if (!field->contains(x)) throw FormatError("coefficient outside the field");
  return LinearizedPoly(std::move(field), q, coeffs, r);
}

json to_json(const GabidulinSpec& s, const FieldTower& tower) {
  json j = {{"q", tower.q()}, {"m", tower.m()}, {"k", s.k}, {"n", s.b.size()}, {"r", s.r}, {"b", s.b}};
  j["field"] = to_json(tower);
  return j;
}

std::pair<GabidulinSpec, FieldTower> gabidulin_spec_from_json(const json& j) {
  FieldTower t = j.contains("field") ? tower_from_json(j.at("field"))
                                     : FieldTower::make(static_cast<std::uint32_t>(uint_field(j, "q", 2)),
                                                        static_cast<std::uint32_t>(uint_field(j, "m")));
  GabidulinSpec s;
  s.k = uint_field(j, "k");
  s.r = static_cast<std::uint32_t>(uint_field(j, "r", 1));
  const std::size_t n = uint_field(j, "n", t.m());
  if (j.contains("b")) {
    s.b = vector_from_json(j.at("b"), *t.ext_field(), n);
  } else {
    if (n > t.m()) throw FormatError("default evaluation points need n <= m");
    s.b.assign(t.alpha().elements().begin(), t.alpha().elements().begin() + static_cast<std::ptrdiff_t>(n));
  }
  return {std::move(s), std::move(t)};
}

json to_json(const SkewSpec& s) {
  return {{"q", s.q}, {"m", s.m}, {"s", s.s}, {"normal", s.normal}, {"I", s.i_set}, {"J", s.j_set}, {"t", s.t}};
}

SkewSpec skew_spec_from_json(const json& j) {
  SkewSpec s;
  s.q = static_cast<std::uint32_t>(uint_field(j, "q", 2));
  s.m = static_cast<std::uint32_t>(uint_field(j, "m"));
  s.s = static_cast<std::uint32_t>(uint_field(j, "s"));
  s.normal = static_cast<Element>(uint_field(j, "normal"));
  s.i_set = index_set(j, "I");
  s.j_set = index_set(j, "J");
  s.t = uint_field(j, "t", 1);
  return s;
}

// ---------------------------------------------------------------------------

json to_json(const Subspace& s) {
  return {{"dimension", s.dimension()}, {"ambient", s.ambient()}, {"basis", to_json(s.basis())}};
}

json to_json(const DecodeOutcome<Vector>& o) { return outcome_json(o); }
json to_json(const DecodeOutcome<Matrix>& o) { return outcome_json(o); }
json to_json(const PairCertificate<Vector>& c) { return certificate_json(c); }
json to_json(const PairCertificate<Matrix>& c) { return certificate_json(c); }

json to_json(const BoundReport& r) {
  json j;
  j["name"] = r.name;
  j["parameters"] = r.parameters;
  json prem = json::array();
  for (const auto& p : r.premises) {
    json x = {{"statement", p.statement}, {"holds", p.holds}};
    if (p.measured) x["measured"] = *p.measured;
    prem.push_back(x);
  }
  j["premises"] = prem;
  j["premises_hold"] = r.premises_hold();
  j["conclusion"] = r.conclusion;
  if (r.actual) j["actual"] = *r.actual;
  j["vacuous"] = r.vacuous;
  j["equality"] = r.equality;
  if (r.mrd) j["mrd"] = *r.mrd;
  if (r.witness) j["witness"] = to_json(*r.witness);
  j["pass"] = r.pass;
  return j;
}

}  // namespace rankecp::io
