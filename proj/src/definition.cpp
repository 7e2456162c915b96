#include "spbw/definition.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "spbw/expr.hpp"

namespace spbw {

namespace {

const std::set<std::string> kBuiltinSigma = {"id", "swap", "half", "eval0"};
const std::set<std::string> kBuiltinDelta = {"zero", "d/dt"};

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  throw DefinitionError((path.empty() ? "/" : path) + ": " + what);
}

void check_keys(const Json& j, const std::string& path, const std::set<std::string>& required,
                const std::set<std::string>& optional = {}) {
  if (!j.is_object()) bad(path, "expected an object");
  for (const auto& [k, v] : j.items()) {
    (void)v;
    if (!required.count(k) && !optional.count(k)) bad(path, "unknown key '" + k + "'");
  }
  for (const auto& k : required)
    if (!j.contains(k)) bad(path, "missing key '" + k + "'");
}

std::uint32_t get_uint(const Json& j, const std::string& path) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) bad(path, "expected a non-negative integer");
  auto v = j.get<unsigned long long>();
  if (v > 0xffffffffULL) bad(path, "integer out of range");
  return static_cast<std::uint32_t>(v);
}

std::vector<std::uint32_t> get_index_list(const Json& j, const std::string& path, std::size_t bound) {
  if (!j.is_array()) bad(path, "expected an array");
  std::vector<std::uint32_t> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    auto v = get_uint(j[k], path + "/" + std::to_string(k));
    if (v >= bound) bad(path + "/" + std::to_string(k), "index " + std::to_string(v) + " out of range");
    out.push_back(v);
  }
  return out;
}

std::vector<std::vector<std::uint32_t>> get_matrix(const Json& j, const std::string& path, std::size_t m) {
  if (!j.is_array() || j.size() != m) bad(path, "expected a " + std::to_string(m) + "x" + std::to_string(m) + " matrix");
  std::vector<std::vector<std::uint32_t>> out;
  for (std::size_t r = 0; r < m; ++r) {
    auto row = get_index_list(j[r], path + "/" + std::to_string(r), m);
    if (row.size() != m) bad(path + "/" + std::to_string(r), "row has the wrong length");
    out.push_back(std::move(row));
  }
  return out;
}

RingDescriptor ring_from_json_at(const Json& j, const std::string& path) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) bad(path, "ring needs a string 'kind'");
  const std::string kind = j["kind"];
  if (kind == "modular") {
    check_keys(j, path, {"kind", "modulus"});
    return RingDescriptor::modular(get_uint(j["modulus"], path + "/modulus"));
  }
  if (kind == "product") {
    check_keys(j, path, {"kind", "factors"});
    if (!j["factors"].is_array() || j["factors"].size() < 2) bad(path + "/factors", "expected at least two factors");
    std::vector<RingDescriptor> fs;
    for (std::size_t k = 0; k < j["factors"].size(); ++k)
      fs.push_back(ring_from_json_at(j["factors"][k], path + "/factors/" + std::to_string(k)));
    return RingDescriptor::product(std::move(fs));
  }
  if (kind == "upper-triangular") {
    check_keys(j, path, {"kind", "base"});
    return RingDescriptor::upper_triangular(ring_from_json_at(j["base"], path + "/base"));
  }
  if (kind == "truncated-poly") {
    check_keys(j, path, {"kind", "base", "modulus"});
    auto base = ring_from_json_at(j["base"], path + "/base");
    std::vector<std::uint32_t> mod;
    if (!j["modulus"].is_array() || j["modulus"].size() < 2) bad(path + "/modulus", "expected a monic modulus of degree >= 1");
    for (std::size_t k = 0; k < j["modulus"].size(); ++k) mod.push_back(get_uint(j["modulus"][k], path + "/modulus/" + std::to_string(k)));
    return RingDescriptor::truncated(std::move(base), std::move(mod));
  }
  if (kind == "table") {
    check_keys(j, path, {"kind", "size", "add", "mul"}, {"zero", "one", "neg"});
    RingDescriptor d;
    d.kind = RingKind::FiniteTable;
    d.size = get_uint(j["size"], path + "/size");
    if (d.size < 2) bad(path + "/size", "a ring table needs at least two elements");
    if (d.size > 4096) bad(path + "/size", "table too large");
    d.add_table = get_matrix(j["add"], path + "/add", d.size);
    d.mul_table = get_matrix(j["mul"], path + "/mul", d.size);
    d.zero_index = j.contains("zero") ? get_uint(j["zero"], path + "/zero") : 0;
    d.one_index = j.contains("one") ? get_uint(j["one"], path + "/one") : 1;
    if (d.zero_index >= d.size) bad(path + "/zero", "index out of range");
    if (d.one_index >= d.size) bad(path + "/one", "index out of range");
    if (j.contains("neg")) {
      d.neg_table = get_index_list(j["neg"], path + "/neg", d.size);
      if (d.neg_table.size() != d.size) bad(path + "/neg", "wrong length");
    } else {
      for (std::uint32_t a = 0; a < d.size; ++a) {
        std::optional<std::uint32_t> inv;
        for (std::uint32_t b = 0; b < d.size; ++b)
          if (d.add_table[a][b] == d.zero_index) inv = b;
        if (!inv) throw InvalidTable("element " + std::to_string(a) + " has no additive inverse");
        d.neg_table.push_back(*inv);
      }
    }
    return d;
  }
  if (kind == "matrix-zq") {
    check_keys(j, path, {"kind"});
    return RingDescriptor::matrix_zq();
  }
  if (kind == "poly-zp") {
    check_keys(j, path, {"kind", "modulus"});
    return RingDescriptor::poly_over_field(get_uint(j["modulus"], path + "/modulus"));
  }
  if (kind == "integers") {
    check_keys(j, path, {"kind"});
    return RingDescriptor::integers();
  }
  bad(path + "/kind", "unknown ring kind '" + kind + "'");
}

Element element_from_json(const Ring& r, const Json& j, const std::string& path) {
  try {
    if (j.is_string()) return parse_element(r, j.get<std::string>());
    if (j.is_number_integer()) return r.from_integer(j.get<long long>());
  } catch (const ParseError& e) {
    bad(path, e.what());
  }
  bad(path, "expected an element literal (string) or an integer");
}

EndoMap sigma_from_json(const RingPtr& ring, const Json& j, const std::string& path) {
  if (j.is_string()) {
    if (!kBuiltinSigma.count(j.get<std::string>())) bad(path, "unknown endomorphism '" + j.get<std::string>() + "'");
    return builtin_endomap(ring, j.get<std::string>());
  }
  check_keys(j, path, {"table"});
  const auto& f = as_finite(*ring, "sigma table");
  auto t = get_index_list(j["table"], path + "/table", f.size());
  if (t.size() != f.size()) bad(path + "/table", "table needs one entry per element");
  return EndoMap::from_table(ring, std::move(t), "table");
}

SigmaDerivation delta_from_json(const EndoMap& sigma, const Json& j, const std::string& path) {
  if (j.is_string()) {
    if (!kBuiltinDelta.count(j.get<std::string>())) bad(path, "unknown derivation '" + j.get<std::string>() + "'");
    return builtin_derivation(sigma, j.get<std::string>());
  }
  check_keys(j, path, {"table"});
  const auto& f = as_finite(*sigma.ring(), "delta table");
  auto t = get_index_list(j["table"], path + "/table", f.size());
  if (t.size() != f.size()) bad(path + "/table", "table needs one entry per element");
  return SigmaDerivation::from_table(sigma, std::move(t), "table");
}

std::pair<std::size_t, std::size_t> pair_from_json(const Json& j, const std::string& path, std::size_t n) {
  auto i = get_uint(j["i"], path + "/i"), k = get_uint(j["j"], path + "/j");
  if (i < 1 || k > n || i >= k) bad(path, "need 1 <= i < j <= n");
  return {i - 1, k - 1};
}

Json sigma_to_json(const EndoMap& s) {
  if (s.is_identity()) return "id";
  if (kBuiltinSigma.count(s.name())) return s.name();
  if (!s.has_table()) throw DefinitionError("endomorphism '" + s.name() + "' has no serializable form");
  return Json{{"table", s.table()}};
}

Json delta_to_json(const SigmaDerivation& d) {
  if (d.is_zero()) return "zero";
  if (kBuiltinDelta.count(d.name())) return d.name();
  if (!d.has_table()) throw DefinitionError("derivation '" + d.name() + "' has no serializable form");
  return Json{{"table", d.table()}};
}

}  // namespace

const Json& definition_schema() {
  static const Json schema = Json::parse(R"({
  "$schema": "https://json-schema.org/draft/2020-12/schema",
  "title": "skew PBW extension definition",
  "type": "object",
  "additionalProperties": false,
  "required": ["ring", "extension"],
  "properties": {
    "name": {"type": "string"},
    "ring": {"$ref": "#/$defs/ring"},
    "extension": {
      "type": "object",
      "additionalProperties": false,
      "required": ["n"],
      "properties": {
        "n": {"type": "integer", "minimum": 1},
        "sigma": {"type": "array", "items": {"$ref": "#/$defs/map"}},
        "delta": {"type": "array", "items": {"$ref": "#/$defs/map"}},
        "c": {"type": "array", "items": {
          "type": "object", "additionalProperties": false, "required": ["i", "j", "value"],
          "properties": {"i": {"type": "integer"}, "j": {"type": "integer"}, "value": {"$ref": "#/$defs/element"}}}},
        "r": {"type": "array", "items": {
          "type": "object", "additionalProperties": false, "required": ["i", "j", "values"],
          "properties": {"i": {"type": "integer"}, "j": {"type": "integer"},
                         "values": {"type": "array", "items": {"$ref": "#/$defs/element"}}}}}
      }
    },
    "order": {"enum": ["deglex", "lex", "degrevlex"]},
    "flags": {
      "type": "object",
      "additionalProperties": false,
      "properties": {"quasi_commutative": {"type": "boolean"}, "bijective": {"type": "boolean"}}
    }
  },
  "$defs": {
    "element": {"oneOf": [{"type": "string"}, {"type": "integer"}]},
    "map": {"oneOf": [
      {"enum": ["id", "swap", "half", "eval0", "zero", "d/dt"]},
      {"type": "object", "additionalProperties": false, "required": ["table"],
       "properties": {"table": {"type": "array", "items": {"type": "integer", "minimum": 0}}}}]},
    "ring": {"type": "object", "required": ["kind"], "oneOf": [
      {"additionalProperties": false, "required": ["kind", "modulus"],
       "properties": {"kind": {"const": "modular"}, "modulus": {"type": "integer", "minimum": 2}}},
      {"additionalProperties": false, "required": ["kind", "factors"],
       "properties": {"kind": {"const": "product"}, "factors": {"type": "array", "minItems": 2, "items": {"$ref": "#/$defs/ring"}}}},
      {"additionalProperties": false, "required": ["kind", "base"],
       "properties": {"kind": {"const": "upper-triangular"}, "base": {"$ref": "#/$defs/ring"}}},
      {"additionalProperties": false, "required": ["kind", "base", "modulus"],
       "properties": {"kind": {"const": "truncated-poly"}, "base": {"$ref": "#/$defs/ring"},
                      "modulus": {"type": "array", "minItems": 2, "items": {"type": "integer", "minimum": 0}}}},
      {"additionalProperties": false, "required": ["kind", "size", "add", "mul"],
       "properties": {"kind": {"const": "table"}, "size": {"type": "integer", "minimum": 2},
                      "add": {"type": "array"}, "mul": {"type": "array"}, "neg": {"type": "array"},
                      "zero": {"type": "integer"}, "one": {"type": "integer"}}},
      {"additionalProperties": false, "required": ["kind"], "properties": {"kind": {"const": "matrix-zq"}}},
      {"additionalProperties": false, "required": ["kind", "modulus"],
       "properties": {"kind": {"const": "poly-zp"}, "modulus": {"type": "integer", "minimum": 2}}},
      {"additionalProperties": false, "required": ["kind"], "properties": {"kind": {"const": "integers"}}}
    ]}
  }
})");
  return schema;
}

RingDescriptor ring_from_json(const Json& j) { return ring_from_json_at(j, "/ring"); }

Json ring_to_json(const RingDescriptor& d) {
  switch (d.kind) {
    case RingKind::Modular: return {{"kind", "modular"}, {"modulus", d.modulus}};
    case RingKind::DirectProduct: {
      Json fs = Json::array();
      for (const auto& f : d.factors) fs.push_back(ring_to_json(f));
      return {{"kind", "product"}, {"factors", fs}};
    }
    case RingKind::UpperTriangular2x2: return {{"kind", "upper-triangular"}, {"base", ring_to_json(d.factors.at(0))}};
    case RingKind::TruncatedPoly:
      return {{"kind", "truncated-poly"}, {"base", ring_to_json(d.factors.at(0))}, {"modulus", d.poly_modulus}};
    case RingKind::FiniteTable:
      return {{"kind", "table"}, {"size", d.size},      {"add", d.add_table}, {"mul", d.mul_table},
              {"neg", d.neg_table}, {"zero", d.zero_index}, {"one", d.one_index}};
    case RingKind::StructuredMatrixZQ: return {{"kind", "matrix-zq"}};
    case RingKind::PolyOverField: return {{"kind", "poly-zp"}, {"modulus", d.modulus}};
    case RingKind::Integers: return {{"kind", "integers"}};
  }
  return {};
}

ExtensionPtr load_definition(const Json& doc, const Limits& limits) {
  check_keys(doc, "", {"ring", "extension"}, {"name", "order", "flags"});
  if (doc.contains("name") && !doc["name"].is_string()) bad("/name", "expected a string");
  RingPtr ring = validate_ring(ring_from_json(doc["ring"]), limits);

  const Json& ext = doc["extension"];
  check_keys(ext, "/extension", {"n"}, {"sigma", "delta", "c", "r"});
  const std::size_t n = get_uint(ext["n"], "/extension/n");
  if (n < 1 || n > 16) bad("/extension/n", "n must be between 1 and 16");

  SkewPresentation p = trivial_presentation(ring, n, doc.value("name", std::string{}));
  if (ext.contains("sigma")) {
    if (!ext["sigma"].is_array() || ext["sigma"].size() != n) bad("/extension/sigma", "expected one entry per variable");
    for (std::size_t i = 0; i < n; ++i) p.sigma[i] = sigma_from_json(ring, ext["sigma"][i], "/extension/sigma/" + std::to_string(i));
  }
  for (std::size_t i = 0; i < n; ++i) p.delta[i] = SigmaDerivation::zero(p.sigma[i]);
  if (ext.contains("delta")) {
    if (!ext["delta"].is_array() || ext["delta"].size() != n) bad("/extension/delta", "expected one entry per variable");
    for (std::size_t i = 0; i < n; ++i)
      p.delta[i] = delta_from_json(p.sigma[i], ext["delta"][i], "/extension/delta/" + std::to_string(i));
  }
  if (ext.contains("c")) {
    if (!ext["c"].is_array()) bad("/extension/c", "expected an array");
    for (std::size_t k = 0; k < ext["c"].size(); ++k) {
      const std::string path = "/extension/c/" + std::to_string(k);
      const Json& e = ext["c"][k];
      check_keys(e, path, {"i", "j", "value"});
      auto ij = pair_from_json(e, path, n);
      if (p.c.count(ij)) bad(path, "duplicate entry");
      p.c[ij] = element_from_json(*ring, e["value"], path + "/value");
    }
  }
  if (ext.contains("r")) {
    if (!ext["r"].is_array()) bad("/extension/r", "expected an array");
    for (std::size_t k = 0; k < ext["r"].size(); ++k) {
      const std::string path = "/extension/r/" + std::to_string(k);
      const Json& e = ext["r"][k];
      check_keys(e, path, {"i", "j", "values"});
      auto ij = pair_from_json(e, path, n);
      if (p.r.count(ij)) bad(path, "duplicate entry");
      if (!e["values"].is_array() || e["values"].size() != n + 1) bad(path + "/values", "expected n+1 values r0..rn");
      std::vector<Element> vals;
      for (std::size_t l = 0; l <= n; ++l)
        vals.push_back(element_from_json(*ring, e["values"][l], path + "/values/" + std::to_string(l)));
      p.r[ij] = std::move(vals);
    }
  }
  if (doc.contains("order")) {
    if (!doc["order"].is_string()) bad("/order", "expected a string");
    try {
      p.order.kind = order_from_name(doc["order"].get<std::string>());
    } catch (const Error& e) {
      bad("/order", e.what());
    }
  }
  if (doc.contains("flags")) {
    const Json& f = doc["flags"];
    check_keys(f, "/flags", {}, {"quasi_commutative", "bijective"});
    if (f.contains("quasi_commutative")) {
      if (!f["quasi_commutative"].is_boolean()) bad("/flags/quasi_commutative", "expected a boolean");
      p.claim_quasi_commutative = f["quasi_commutative"].get<bool>();
    }
    if (f.contains("bijective")) {
      if (!f["bijective"].is_boolean()) bad("/flags/bijective", "expected a boolean");
      p.claim_bijective = f["bijective"].get<bool>();
    }
  }
  return validate_presentation(std::move(p), limits);
}

ExtensionPtr load_definition_text(const std::string& text, const Limits& limits) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw DefinitionError(std::string("not a valid JSON document: ") + e.what());
  }
  return load_definition(doc, limits);
}

ExtensionPtr load_definition_file(const std::string& path, const Limits& limits) {
  std::ifstream in(path);
  if (!in) throw DefinitionError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return load_definition_text(ss.str(), limits);
}

Json to_definition(const SkewExtension& a) {
  const auto& R = a.ring();
  const std::size_t n = a.n();
  Json ext;
  ext["n"] = n;
  Json sig = Json::array(), del = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    sig.push_back(sigma_to_json(a.sigma(i)));
    del.push_back(delta_to_json(a.delta(i)));
  }
  ext["sigma"] = sig;
  ext["delta"] = del;
  Json cs = Json::array(), rs = Json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!R.is_one(a.c(i, j))) cs.push_back({{"i", i + 1}, {"j", j + 1}, {"value", R.format(a.c(i, j))}});
      const auto& r = a.r(i, j);
      if (std::any_of(r.begin(), r.end(), [&](const Element& x) { return !R.is_zero(x); })) {
        Json vals = Json::array();
        for (const auto& x : r) vals.push_back(R.format(x));
        rs.push_back({{"i", i + 1}, {"j", j + 1}, {"values", vals}});
      }
    }
  if (!cs.empty()) ext["c"] = cs;
  if (!rs.empty()) ext["r"] = rs;

  Json doc;
  if (!a.name().empty()) doc["name"] = a.name();
  doc["ring"] = ring_to_json(R.descriptor());
  doc["extension"] = ext;
  doc["order"] = order_name(a.order().kind);
  doc["flags"] = {{"quasi_commutative", a.flags().quasi_commutative}, {"bijective", a.flags().bijective}};
  return doc;
}

std::string canonical_text(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace spbw
