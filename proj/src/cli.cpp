// SPDX-License-Identifier: Apache-2.0

#include "rankecp/cli.hpp"

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "rankecp/bounds.hpp"
#include "rankecp/errors.hpp"
#include "rankecp/io.hpp"
#include "rankecp/representation.hpp"

namespace rankecp {

namespace {

using io::json;

struct Session {
  RunConfig cfg;
  std::ostream& out;
  std::ostream& err;

  void emit(const json& j) const {
    const std::string text = io::dump(j);
    if (cfg.output.empty()) {
      out << text;
      return;
    }
    std::ofstream f(cfg.output);
    if (!f) throw FormatError("cannot write " + cfg.output);
    f << text;
  }

  void log(int level, const std::string& msg) const {
    if (cfg.verbosity >= level) err << msg << '\n';
  }

  Rng rng(const char* label) const { return Rng::stream(cfg.seed, label); }
};

const json& unwrap(const json& j, const char* key) { return j.is_object() && j.contains(key) ? j.at(key) : j; }

/// A code file, a document with a "code" entry, or a pair (its C).
io::AnyCode load_code(const std::string& path) {
  const json j = io::read_file(path);
  if (j.is_object() && j.contains("code")) return io::code_from_json(j.at("code"));
  if (j.is_object() && j.contains("C")) return io::code_from_json(j.at("C"));
  return io::code_from_json(j);
}

io::AnyPair load_pair(const std::string& path) { return io::pair_from_json(unwrap(io::read_file(path), "pair")); }

MatrixPair as_matrix_pair(const io::AnyPair& p) {
  if (const auto* m = std::get_if<MatrixPair>(&p)) return *m;
  return convert_pair(std::get<ExtPair>(p));
}

MatrixCode as_matrix_code(const io::AnyCode& c) {
  if (const auto* m = std::get_if<MatrixCode>(&c)) return *m;
  return to_matrix_code(std::get<ExtLinearCode>(c));
}

json word_doc(const ExtLinearCode& c, const Vector& w) {
  return {{"kind", "ext"}, {"field", io::to_json(c.tower())}, {"n", c.length()}, {"codeword", io::to_json(w)}};
}

json word_doc(const MatrixCode& c, const Matrix& w) {
  return {{"kind", "matrix"},
          {"field", {{"q", c.field()->size()}, {"m", c.rows()}}},
          {"n", c.cols()},
          {"codeword", io::to_json(w)}};
}

// ---------------------------------------------------------------------------

struct FieldOpts {
  std::uint32_t q = 2, m = 1, s = 1;
  std::vector<Element> modulus, top_modulus;
};

int run_field(const Session& ss, const FieldOpts& o) {
  FieldTower t = FieldTower::make(o.q, o.m, o.modulus.empty() ? std::nullopt : std::optional<Vector>(o.modulus));
  if (o.s > 1) t = t.with_top(o.s, o.top_modulus.empty() ? std::nullopt : std::optional<Vector>(o.top_modulus));
  json j = io::to_json(t);
  j["size"] = t.ext_field()->size();
  j["primitive"] = t.ext_field()->primitive();
  j["alpha"] = t.alpha().elements();
  j["alpha_dual"] = t.alpha_dual().elements();
  if (t.has_top()) j["top_size"] = t.top_field()->size();
  ss.emit(j);
  return kExitOk;
}

struct GabOpts {
  std::uint32_t q = 2, m = 4, r = 1;
  std::size_t n = 0, k = 0, t = 0;
  std::vector<Element> b;
  bool on_alpha_n = false;
  std::string spec;
};

int run_gabidulin(const Session& ss, const GabOpts& o) {
  std::optional<FieldTower> tower;
  GabidulinSpec spec;
  if (!o.spec.empty()) {
    auto [s, t] = io::gabidulin_spec_from_json(io::read_file(o.spec));
    spec = std::move(s);
    tower = std::move(t);
  } else {
    tower = FieldTower::make(o.q, o.m);
    const std::size_t n = o.n ? o.n : o.m;
    if (!o.b.empty()) {
      spec.b = o.b;
    } else {
      if (n > o.m) throw ParameterError("default evaluation points need n <= m");
      spec.b.assign(tower->alpha().elements().begin(), tower->alpha().elements().begin() + static_cast<long>(n));
    }
    spec.r = o.r;
    spec.k = o.k;
  }
  if (o.t > 0) {
    const ExtPair pair = gabidulin_recp(*tower, o.t, spec.r, spec.b, o.on_alpha_n);
    json j;
    j["code"] = io::to_json(pair.c);
    j["pair"] = io::to_json(pair);
    const auto d = gabidulin_dual(*tower, {2 * o.t, spec.r, spec.b});
    if (d.b_prime) j["code_spec"] = io::to_json(GabidulinSpec{spec.b.size() - 2 * o.t, spec.r, *d.b_prime}, *tower);
    ss.emit(j);
    return kExitOk;
  }
  if (spec.k == 0) throw ParameterError("give --k (code) or --t (pair)");
  const ExtLinearCode code = gabidulin(*tower, spec);
  const auto d = gabidulin_dual(*tower, spec);
  json j;
  j["spec"] = io::to_json(spec, *tower);
  j["code"] = io::to_json(code);
  j["dual"] = io::to_json(d.code);
  if (d.b_prime) j["dual_spec"] = io::to_json(GabidulinSpec{spec.b.size() - spec.k, spec.r, *d.b_prime}, *tower);
  ss.emit(j);
  return kExitOk;
}

struct SkewOpts {
  io::SkewSpec spec;
  std::optional<Element> normal;
  std::string file;
};

int run_skew(const Session& ss, SkewOpts o) {
  if (!o.file.empty()) {
    o.spec = io::skew_spec_from_json(io::read_file(o.file));
    o.normal = o.spec.normal;
  }
  const FieldTower tower = FieldTower::make(o.spec.q, o.spec.m).with_top(o.spec.s);
  if (o.normal) {
    o.spec.normal = *o.normal;
  } else {
    Rng rng = ss.rng("normal");
    o.spec.normal = find_normal_element(tower.top_field(), tower.q(), rng);
    ss.log(1, "normal element " + std::to_string(o.spec.normal));
  }
  const ExtPair pair = skew_cyclic_locating_pair(tower, o.spec.normal, o.spec.i_set, o.spec.j_set, o.spec.t);
  json j;
  j["spec"] = io::to_json(o.spec);
  j["code"] = io::to_json(pair.c);
  j["pair"] = io::to_json(pair);
  j["q_cyclic"] = is_q_cyclic(pair.c);
  ss.emit(j);
  return kExitOk;
}

struct EncodeOpts {
  std::string code;
  std::vector<Element> message;
};

int run_encode(const Session& ss, const EncodeOpts& o) {
  const io::AnyCode any = load_code(o.code);
  Rng rng = ss.rng("encode");
  if (const auto* c = std::get_if<ExtLinearCode>(&any)) {
    const Field& f = *c->tower().ext_field();
    const Vector msg = o.message.empty() ? random_vector(f, c->dimension(), rng)
                                         : io::vector_from_json(json(o.message), f, c->dimension());
    ss.emit(word_doc(*c, c->encode(msg)));
    return kExitOk;
  }
  const auto& c = std::get<MatrixCode>(any);
  const Field& f = *c.field();
  const Vector msg =
      o.message.empty() ? random_vector(f, c.dimension(), rng) : io::vector_from_json(json(o.message), f, c.dimension());
  Vector flat(c.rows() * c.cols(), 0);
  for (std::size_t i = 0; i < msg.size(); ++i) axpy(f, msg[i], c.space().basis().row(i), flat);
  ss.emit(word_doc(c, Matrix::unflatten(c.field(), flat, c.rows(), c.cols())));
  return kExitOk;
}

struct CorruptOpts {
  std::string in;
  std::size_t rank = 0;
};

int run_corrupt(const Session& ss, const CorruptOpts& o) {
  json doc = io::read_file(o.in);
  const std::string kind = doc.value("kind", "ext");
  const std::size_t n = doc.at("n").get<std::size_t>();
  Rng rng = ss.rng("corrupt");
  if (kind == "ext") {
    const FieldTower t = io::tower_from_json(doc.at("field"));
    const Field& f = *t.ext_field();
    const Vector c = io::vector_from_json(doc.at("codeword"), f, n);
    const Vector e = random_rank_error(t.alpha(), n, o.rank, rng);
    doc["error"] = io::to_json(e);
    doc["received"] = io::to_json(add(f, c, e));
  } else if (kind == "matrix") {
    const FieldPtr fq = io::base_field_from_json(doc.at("field"));
    const std::size_t m = doc.at("field").at("m").get<std::size_t>();
    const Matrix c = io::matrix_from_json(doc.at("codeword"), fq, m, n);
    const Matrix e = random_rank_error(fq, m, n, o.rank, rng);
    doc["error"] = io::to_json(e);
    doc["received"] = io::to_json(c + e);
  } else {
    throw FormatError("word kind must be \"ext\" or \"matrix\"");
  }
  doc["rank"] = o.rank;
  ss.emit(doc);
  return kExitOk;
}

struct DecodeOpts {
  std::string pair, in;
};

template <class Word>
int finish_decode(const Session& ss, json j, const DecodeOutcome<Word>& out, const std::optional<Word>& sent,
                  const std::optional<MlDecision<Word>>& ml, std::size_t decoded_distance) {
  bool flagged = false;
  if (sent && out.codeword) {
    j["recovered_sent"] = *out.codeword == *sent;
    flagged = flagged || !(*out.codeword == *sent);
  }
  if (ml) {
    json o = {{"codeword", io::to_json(ml->codeword)}, {"distance", ml->distance}, {"tie", ml->tie}};
    if (out.codeword) {
      o["decoded_is_nearest"] = decoded_distance == ml->distance;
      flagged = flagged || decoded_distance != ml->distance;
    }
    j["oracle"] = o;
  }
  j["miscorrection"] = out.status == DecodeStatus::Success && flagged;
  ss.emit(j);
  return out.status == DecodeStatus::Success && !flagged ? kExitOk : kExitDecodeFailure;
}

int run_decode(const Session& ss, const DecodeOpts& o) {
  const io::AnyPair pair = load_pair(o.pair);
  const json doc = io::read_file(o.in);
  const bool has_received = doc.contains("received");
  const json& word = has_received ? doc.at("received") : doc.at("codeword");
  const std::size_t n = doc.at("n").get<std::size_t>();
  if (const auto* p = std::get_if<ExtPair>(&pair)) {
    if (doc.value("kind", "ext") != "ext") throw FormatError("a type-I pair decodes ext words");
    const FieldTower& t = p->c.tower();
    const Field& f = *t.ext_field();
    const Vector r = io::vector_from_json(word, f, n);
    const auto out = decode_type1(*p, r);
    std::optional<Vector> sent;
    if (has_received && doc.contains("codeword")) sent = io::vector_from_json(doc.at("codeword"), f, n);
    std::optional<MlDecision<Vector>> ml;
    const auto size = codebook_size(p->c);
    if (size && *size <= kEnumerationBudget) ml = ml_decode_oracle(p->c, r);
    const std::size_t dd = out.codeword ? rank_weight(t.alpha(), sub(f, r, *out.codeword)) : 0;
    return finish_decode(ss, io::to_json(out), out, sent, ml, dd);
  }
  const auto& p = std::get<MatrixPair>(pair);
  if (doc.value("kind", "ext") != "matrix") throw FormatError("a type-II pair decodes matrix words");
  const FieldPtr& fq = p.c.field();
  const Matrix r = io::matrix_from_json(word, fq, p.c.rows(), n);
  const auto out = decode_type2(p, r);
  std::optional<Matrix> sent;
  if (has_received && doc.contains("codeword")) sent = io::matrix_from_json(doc.at("codeword"), fq, p.c.rows(), n);
  std::optional<MlDecision<Matrix>> ml;
  const auto size = codebook_size(p.c);
  if (size && *size <= kEnumerationBudget) ml = ml_decode_oracle(p.c, r);
  const std::size_t dd = out.codeword ? rank(r - *out.codeword) : 0;
  return finish_decode(ss, io::to_json(out), out, sent, ml, dd);
}

int run_validate(const Session& ss, const std::string& path) {
  const io::AnyPair pair = load_pair(path);
  bool ok = false;
  json j;
  if (const auto* p = std::get_if<ExtPair>(&pair)) {
    const auto cert = validate_pair(*p);
    ok = p->locating_only ? cert.locating() : cert.correcting();
    j = io::to_json(cert);
  } else {
    const auto& mp = std::get<MatrixPair>(pair);
    const auto cert = validate_pair(mp);
    ok = mp.locating_only ? cert.locating() : cert.correcting();
    j = io::to_json(cert);
  }
  ss.emit(j);
  return ok ? kExitOk : kExitDecodeFailure;
}

int run_distance(const Session& ss, const std::string& path, bool bound) {
  const io::AnyCode any = load_code(path);
  const DistanceMode mode = bound ? DistanceMode::Bound : DistanceMode::Brute;
  json j;
  j["mode"] = bound ? "bound" : "brute";
  if (const auto* c = std::get_if<ExtLinearCode>(&any)) {
    const auto d = min_rank_distance(*c, mode);
    j["distance"] = d.distance;
    j["dimension"] = c->dimension();
    if (d.witness) j["witness"] = io::to_json(*d.witness);
  } else {
    const auto& mc = std::get<MatrixCode>(any);
    const auto d = min_rank_distance(mc, mode);
    j["distance"] = d.distance;
    j["dimension"] = mc.dimension();
    if (d.witness) j["witness"] = io::to_json(*d.witness);
  }
  ss.emit(j);
  return kExitOk;
}

struct BoundsOpts {
  std::string name, code, pair;
  std::optional<std::size_t> a, b, c;
  std::uint32_t q = 2, m = 2, s = 2;
  std::optional<Element> normal;
  std::vector<std::size_t> root;
  std::size_t delta = 2, w = 0;
};

int run_bounds(const Session& ss, const BoundsOpts& o) {
  BoundReport r;
  if (o.name == "singleton") {
    if (o.code.empty()) throw ParameterError("singleton needs --code");
    r = singleton_sum(as_matrix_code(load_code(o.code)));
  } else if (o.name == "product" || o.name == "dual-product" || o.name == "roos") {
    if (o.pair.empty()) throw ParameterError(o.name + " needs --pair");
    const MatrixPair p = as_matrix_pair(load_pair(o.pair));
    const std::size_t t = p.t, n = p.a.cols();
    if (o.name == "product") {
      r = bound_product(p.a, p.b, p.c, o.a.value_or(t + 1), o.b.value_or(t));
    } else if (o.name == "dual-product") {
      r = bound_dual_product(p.a, p.b, p.c, o.b.value_or(t), o.c.value_or(n > 2 * t ? n - 2 * t : 0));
    } else {
      r = roos_bound(p.a, p.b, p.c, o.a.value_or(t), o.b.value_or(t));
    }
  } else if (o.name == "rank-ht") {
    const FieldTower tower = FieldTower::make(o.q, o.m).with_top(o.s);
    Element normal;
    if (o.normal) {
      normal = *o.normal;
    } else {
      Rng rng = ss.rng("normal");
      normal = find_normal_element(tower.top_field(), tower.q(), rng);
    }
    RankHtParams prm;
    prm.b = o.b.value_or(0);
    prm.c = o.c.value_or(1);
    prm.delta = o.delta;
    prm.w = o.w;
    r = rank_ht_bound(tower, normal, o.root, prm);
    r.parameters["normal"] = normal;
  } else {
    throw ParameterError("unknown bound " + o.name);
  }
  ss.emit(io::to_json(r));
  return r.pass ? kExitOk : kExitDecodeFailure;
}

int run_convert(const Session& ss, const std::string& path) {
  const io::AnyPair pair = load_pair(path);
  const auto* p = std::get_if<ExtPair>(&pair);
  if (!p) throw ParameterError("convert-pair expects a type-I pair");
  ss.emit(io::to_json(convert_pair(*p)));
  return kExitOk;
}

struct HammingOpts {
  std::size_t codewords = 2, weight = 2;
};

int run_hamming(const Session& ss, const HammingOpts& o) {
  const FieldPtr f8 = FieldTower::make(8, 1).base_field();
  Vector x;
  for (Element e = 1; e < 8; ++e) x.push_back(e);
  const HammingEcp ecp = grs_pair(f8, x, 3);
  const MatrixPair embedded = hamming_embed_pair(ecp);
  if (o.weight > ecp.t) throw ParameterError("--weight exceeds t = " + std::to_string(ecp.t));
  Rng rng = ss.rng("hamming");
  std::size_t total = 0, exact = 0, agree = 0;
  for (std::size_t w = 0; w < o.codewords; ++w) {
    Vector c(7, 0);
    for (std::size_t j = 0; j < ecp.c.dimension(); ++j)
      axpy(*f8, random_element(*f8, rng), ecp.c.basis().row(j), c);
    // every error of weight 1..weight: positions by bitmask, values by odometer
    for (unsigned mask = 1; mask < (1u << 7); ++mask) {
      const auto wt = static_cast<std::size_t>(std::popcount(mask));
      if (wt > o.weight) continue;
      std::vector<std::size_t> pos;
      for (std::size_t i = 0; i < 7; ++i)
        if (mask >> i & 1u) pos.push_back(i);
      std::vector<Element> val(wt, 1);
      while (true) {
        Vector r = c;
        for (std::size_t i = 0; i < wt; ++i) r[pos[i]] = f8->add(r[pos[i]], val[i]);
        const auto a = decode_hamming(embedded, r);
        const auto b = decode_hamming_classical(ecp, r);
        ++total;
        if (a.status == DecodeStatus::Success && *a.codeword == c) ++exact;
        if (a.status == b.status && a.codeword == b.codeword) ++agree;
        std::size_t i = 0;
        while (i < wt && ++val[i] == 8) val[i++] = 1;
        if (i == wt) break;
      }
    }
  }
  ss.log(1, std::to_string(total) + " instances decoded");
  json j;
  j["code"] = {{"q", 8}, {"n", 7}, {"k", ecp.c.dimension()}, {"d", hamming_distance(ecp.c)}, {"points", x}};
  j["t"] = ecp.t;
  j["max_error_weight"] = o.weight;
  j["instances"] = total;
  j["exact"] = exact;
  j["agree_with_classical"] = agree;
  j["pair"] = io::to_json(embedded);
  ss.emit(j);
  return exact == total && agree == total ? kExitOk : kExitDecodeFailure;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rank-metric codes and error-correcting pairs"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--seed", cfg.seed, "seed for every randomized step")->capture_default_str();
  app.add_option("-o,--out", cfg.output, "write JSON here instead of stdout");
  app.add_flag("-v,--verbose", cfg.verbosity, "diagnostics on stderr (repeatable)");

  FieldOpts fo;
  auto* field = app.add_subcommand("field", "describe a field tower");
  field->add_option("--q", fo.q)->required();
  field->add_option("--m", fo.m)->required();
  field->add_option("--s", fo.s);
  field->add_option("--modulus", fo.modulus)->delimiter(',');
  field->add_option("--top-modulus", fo.top_modulus)->delimiter(',');

  GabOpts go;
  auto* gab = app.add_subcommand("gabidulin", "Gabidulin code, or the decodable code and its pair with --t");
  gab->add_option("--q", go.q);
  gab->add_option("--m", go.m);
  gab->add_option("--n", go.n);
  gab->add_option("--k", go.k);
  gab->add_option("--t", go.t);
  gab->add_option("--r", go.r);
  gab->add_option("--b", go.b)->delimiter(',');
  gab->add_flag("--b-on-alpha-n", go.on_alpha_n);
  gab->add_option("--spec", go.spec, "Gabidulin spec JSON");

  SkewOpts so;
  std::optional<Element> skew_normal;
  auto* skew = app.add_subcommand("skew", "skew-cyclic code with its error-locating pair");
  skew->add_option("--q", so.spec.q);
  skew->add_option("--m", so.spec.m);
  skew->add_option("--s", so.spec.s);
  skew->add_option("--I", so.spec.i_set)->delimiter(',');
  skew->add_option("--J", so.spec.j_set)->delimiter(',');
  skew->add_option("--t", so.spec.t);
  skew->add_option("--normal", skew_normal);
  skew->add_option("--spec", so.file, "skew spec JSON");

  EncodeOpts eo;
  auto* enc = app.add_subcommand("encode", "encode a message (random when omitted)");
  enc->add_option("--code", eo.code)->required();
  enc->add_option("--message", eo.message)->delimiter(',');

  CorruptOpts co;
  auto* cor = app.add_subcommand("corrupt", "add a random error of given rank");
  cor->add_option("--in", co.in)->required();
  cor->add_option("--rank", co.rank)->required();

  DecodeOpts dopt;
  auto* dec = app.add_subcommand("decode", "decode a received word with a pair");
  dec->add_option("--pair", dopt.pair)->required();
  dec->add_option("--in", dopt.in)->required();

  std::string validate_path;
  auto* val = app.add_subcommand("validate-pair", "check the pair conditions by enumeration");
  val->add_option("--pair", validate_path)->required();

  std::string distance_path;
  bool distance_bound = false;
  auto* dist = app.add_subcommand("distance", "minimum rank distance");
  dist->add_option("--code", distance_path)->required();
  dist->add_flag("--brute", "enumerate the code (default)");
  dist->add_flag("--bound", distance_bound, "Singleton upper bound only");

  BoundsOpts bo;
  auto* bnd = app.add_subcommand("bounds", "verify a distance bound");
  bnd->add_option("--name", bo.name)
      ->required()
      ->check(CLI::IsMember({"singleton", "product", "dual-product", "roos", "rank-ht"}));
  bnd->add_option("--code", bo.code);
  bnd->add_option("--pair", bo.pair);
  bnd->add_option("--a", bo.a);
  bnd->add_option("--b", bo.b);
  bnd->add_option("--c", bo.c);
  bnd->add_option("--q", bo.q);
  bnd->add_option("--m", bo.m);
  bnd->add_option("--s", bo.s);
  bnd->add_option("--normal", bo.normal);
  bnd->add_option("--root", bo.root)->delimiter(',');
  bnd->add_option("--delta", bo.delta);
  bnd->add_option("--w", bo.w);

  std::string convert_path;
  auto* conv = app.add_subcommand("convert-pair", "type-I pair to its type-II matrix form");
  conv->add_option("--pair", convert_path)->required();

  HammingOpts ho;
  auto* ham = app.add_subcommand("hamming-demo", "[7,3,5] GRS code decoded through the diagonal embedding");
  ham->add_option("--codewords", ho.codewords);
  ham->add_option("--weight", ho.weight);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }

  const Session ss{cfg, out, err};
  try {
    if (*field) return run_field(ss, fo);
    if (*gab) return run_gabidulin(ss, go);
    if (*skew) {
      so.normal = skew_normal;
      return run_skew(ss, so);
    }
    if (*enc) return run_encode(ss, eo);
    if (*cor) return run_corrupt(ss, co);
    if (*dec) return run_decode(ss, dopt);
    if (*val) return run_validate(ss, validate_path);
    if (*dist) return run_distance(ss, distance_path, distance_bound);
    if (*bnd) return run_bounds(ss, bo);
    if (*conv) return run_convert(ss, convert_path);
    if (*ham) return run_hamming(ss, ho);
  } catch (const json::exception& e) {
    err << "error: malformed input: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const InconsistentInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const SearchError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }
  return kExitInvalidInput;
}

int cli_main(int argc, const char* const* argv) { return cli_main(argc, argv, std::cout, std::cerr); }

}  // namespace rankecp
