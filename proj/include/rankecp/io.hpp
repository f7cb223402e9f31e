// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "json.hpp"
#include "rankecp/bounds.hpp"
#include "rankecp/codes.hpp"
#include "rankecp/ecp.hpp"
#include "rankecp/families.hpp"
#include "rankecp/linearized.hpp"
#include "rankecp/pair.hpp"

namespace rankecp::io {

using json = nlohmann::json;

/// Parses text; syntax errors become FormatError "<source>:<line>:<col>: ...".
json parse(std::string_view text, std::string_view source = "<input>");
json read_file(const std::string& path);
/// Two-space indented, sorted keys, trailing newline.
std::string dump(const json& j);

json to_json(const FieldTower& tower);
FieldTower tower_from_json(const json& j);
/// F_q for descriptors that only carry q (matrix codes).
FieldPtr base_field_from_json(const json& j);

json to_json(std::span<const Element> v);
json to_json(const Matrix& m);
Vector vector_from_json(const json& j, const Field& f, std::size_t length);
Matrix matrix_from_json(const json& j, const FieldPtr& f, std::size_t rows, std::size_t cols);

json to_json(const ExtLinearCode& c);
json to_json(const MatrixCode& c);
using AnyCode = std::variant<ExtLinearCode, MatrixCode>;
AnyCode code_from_json(const json& j);
ExtLinearCode ext_code_from_json(const json& j);
MatrixCode matrix_code_from_json(const json& j);

json to_json(const ExtPair& p);
json to_json(const MatrixPair& p);
using AnyPair = std::variant<ExtPair, MatrixPair>;
AnyPair pair_from_json(const json& j);

json to_json(const LinearizedPoly& p);
LinearizedPoly poly_from_json(const json& j, FieldPtr field, std::uint32_t q);

json to_json(const GabidulinSpec& s, const FieldTower& tower);
/// The spec and its tower; "b" defaults to the first n elements of alpha.
std::pair<GabidulinSpec, FieldTower> gabidulin_spec_from_json(const json& j);

struct SkewSpec {
  std::uint32_t q = 2, m = 2, s = 2;
  Element normal = 0;
  std::vector<std::size_t> i_set, j_set;
  std::size_t t = 1;
};
json to_json(const SkewSpec& s);
SkewSpec skew_spec_from_json(const json& j);

json to_json(const DecodeOutcome<Vector>& o);
json to_json(const DecodeOutcome<Matrix>& o);
json to_json(const PairCertificate<Vector>& c);
json to_json(const PairCertificate<Matrix>& c);
json to_json(const BoundReport& r);
json to_json(const Subspace& s);

}  // namespace rankecp::io
