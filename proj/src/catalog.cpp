#include "spbw/catalog.hpp"

#include <map>

namespace spbw {

namespace {

using P = PropertyId;
constexpr Basis C = Basis::Construction, K = Basis::HandComputation, S = Basis::Search;

struct Row {
  PropertyId p;
  const char* status;
  Basis basis;
  unsigned degree = kCatalogDegree;
};
constexpr const char* H = "Holds";
constexpr const char* F = "FailsWithWitness";
constexpr const char* V2 = "VerifiedUpTo(2)";

struct Raw {
  const char* name;
  const char* note;
  const char* doc;
  std::vector<Row> rows;
};

const std::vector<Raw>& raw_entries() {
  static const std::vector<Raw> entries = {
      {"z2-trivial", "Z_2 with sigma = id, delta = 0, one variable",
       R"({"name":"z2-trivial","ring":{"kind":"modular","modulus":2},"extension":{"n":1}})",
       {{P::SigmaRigid, H, C}, {P::SDArmendariz, V2, C}, {P::SDWeakArmendariz, H, C},
        {P::SigmaSkewArmendariz, V2, C}, {P::WeakSigmaSkewArmendariz, H, C}, {P::SkewArmendariz, V2, C},
        {P::WeakSkewArmendariz, H, C}, {P::SDQuasiBaer, H, C}, {P::Reduced, H, C}, {P::Abelian, H, C},
        {P::IFP, H, C}, {P::Baer, H, C}, {P::QuasiBaer, H, C}, {P::PP, H, C}, {P::PQBaer, H, C}}},
      {"z4-trivial", "Z_4 with sigma = id, delta = 0, one variable",
       R"({"name":"z4-trivial","ring":{"kind":"modular","modulus":4},"extension":{"n":1}})",
       {{P::SigmaRigid, F, K}, {P::SDArmendariz, V2, S}, {P::SDWeakArmendariz, H, S},
        {P::SigmaSkewArmendariz, V2, S}, {P::WeakSigmaSkewArmendariz, H, S}, {P::SkewArmendariz, V2, S},
        {P::WeakSkewArmendariz, H, S}, {P::SDQuasiBaer, F, K}, {P::Reduced, F, K}, {P::Abelian, H, K},
        {P::IFP, H, C}, {P::Baer, F, K}, {P::QuasiBaer, F, K}, {P::PP, F, K}, {P::PQBaer, F, K}}},
      {"z6-trivial", "Z_6 with sigma = id, delta = 0, one variable",
       R"({"name":"z6-trivial","ring":{"kind":"modular","modulus":6},"extension":{"n":1}})",
       {{P::SigmaRigid, H, K}, {P::SDArmendariz, V2, S}, {P::SDWeakArmendariz, H, S},
        {P::SigmaSkewArmendariz, V2, S}, {P::WeakSigmaSkewArmendariz, H, S}, {P::SkewArmendariz, V2, S},
        {P::WeakSkewArmendariz, H, S}, {P::SDQuasiBaer, H, K}, {P::Reduced, H, K}, {P::Abelian, H, C},
        {P::IFP, H, C}, {P::Baer, H, K}, {P::QuasiBaer, H, K}, {P::PP, H, K}, {P::PQBaer, H, K}}},
      {"z2xz2-swap", "Z_2 x Z_2 with sigma swapping the components, one variable",
       R"({"name":"z2xz2-swap","ring":{"kind":"product","factors":[{"kind":"modular","modulus":2},{"kind":"modular","modulus":2}]},
           "extension":{"n":1,"sigma":["swap"]}})",
       {{P::SigmaRigid, F, K}, {P::SDArmendariz, F, K}, {P::SDWeakArmendariz, F, K},
        {P::SigmaSkewArmendariz, F, K}, {P::WeakSigmaSkewArmendariz, F, K}, {P::SkewArmendariz, F, K},
        {P::WeakSkewArmendariz, F, K}, {P::SDQuasiBaer, H, K}, {P::Reduced, H, C}, {P::Abelian, H, C},
        {P::IFP, H, C}, {P::Baer, H, K}, {P::QuasiBaer, H, K}, {P::PP, H, K}, {P::PQBaer, H, K}}},
      {"ut2z2-trivial", "upper triangular 2x2 matrices over Z_2, sigma = id, delta = 0, one variable",
       R"({"name":"ut2z2-trivial","ring":{"kind":"upper-triangular","base":{"kind":"modular","modulus":2}},"extension":{"n":1}})",
       {{P::SigmaRigid, F, K}, {P::SDArmendariz, F, S}, {P::SDWeakArmendariz, F, S},
        {P::SigmaSkewArmendariz, F, S}, {P::WeakSigmaSkewArmendariz, F, S}, {P::SkewArmendariz, F, S},
        {P::WeakSkewArmendariz, F, S}, {P::SDQuasiBaer, H, S}, {P::Reduced, F, K}, {P::Abelian, F, K},
        {P::IFP, F, K}, {P::Baer, H, S}, {P::QuasiBaer, H, S}, {P::PP, H, S}, {P::PQBaer, H, S}}},
      {"quantum-plane-z3", "Z_3 with x2 x1 = 2 x1 x2",
       R"({"name":"quantum-plane-z3","ring":{"kind":"modular","modulus":3},
           "extension":{"n":2,"c":[{"i":1,"j":2,"value":"2"}]}})",
       {{P::SigmaRigid, H, C}, {P::SDArmendariz, V2, S}, {P::SDWeakArmendariz, H, S},
        {P::SigmaSkewArmendariz, V2, S}, {P::WeakSigmaSkewArmendariz, H, S}, {P::SkewArmendariz, V2, S},
        {P::WeakSkewArmendariz, H, S}, {P::SDQuasiBaer, H, C}, {P::Reduced, H, C}, {P::Abelian, H, C},
        {P::IFP, H, C}, {P::Baer, H, C}, {P::QuasiBaer, H, C}, {P::PP, H, C}, {P::PQBaer, H, C}}},
      {"weyl-z5", "Z_5 with x2 x1 = x1 x2 + 1",
       R"({"name":"weyl-z5","ring":{"kind":"modular","modulus":5},
           "extension":{"n":2,"r":[{"i":1,"j":2,"values":["1","0","0"]}]}})",
       {{P::SigmaRigid, H, C}, {P::SDArmendariz, "VerifiedUpTo(1)", S, 1}, {P::SDWeakArmendariz, H, S},
        {P::SigmaSkewArmendariz, "VerifiedUpTo(1)", S, 1}, {P::WeakSigmaSkewArmendariz, H, S},
        {P::SkewArmendariz, "VerifiedUpTo(1)", S, 1}, {P::WeakSkewArmendariz, H, S}, {P::SDQuasiBaer, H, C},
        {P::Reduced, H, C}, {P::Abelian, H, C}, {P::IFP, H, C}, {P::Baer, H, C}, {P::QuasiBaer, H, C},
        {P::PP, H, C}, {P::PQBaer, H, C}}},
      {"diff-poly-z5", "Z_5[t] with sigma = id and delta = d/dt",
       R"({"name":"diff-poly-z5","ring":{"kind":"poly-zp","modulus":5},"extension":{"n":1,"sigma":["id"],"delta":["d/dt"]}})",
       {{P::SigmaRigid, H, C}, {P::Reduced, H, C}, {P::Abelian, H, C}}},
      {"matrix-zq-half", "matrices (a,t;0,a) with a in Z, t in Q, sigma(a,t) = (a,t/2)",
       R"({"name":"matrix-zq-half","ring":{"kind":"matrix-zq"},"extension":{"n":1,"sigma":["half"]}})",
       {{P::SigmaRigid, F, K}, {P::Reduced, F, K}, {P::Abelian, H, K}}},
      {"z2poly-eval0", "Z_2[t] with sigma(f) = f(0), delta = 0",
       R"({"name":"z2poly-eval0","ring":{"kind":"poly-zp","modulus":2},"extension":{"n":1,"sigma":["eval0"]}})",
       {{P::SigmaRigid, F, K}, {P::Reduced, H, C}, {P::Abelian, H, C}}},
  };
  return entries;
}

const Raw& find_raw(const std::string& name) {
  for (const auto& r : raw_entries())
    if (name == r.name) return r;
  throw UnknownEntry("no catalog entry named '" + name + "'");
}

}  // namespace

const char* basis_name(Basis b) {
  switch (b) {
    case Basis::Construction: return "construction";
    case Basis::HandComputation: return "hand-computation";
    case Basis::Search: return "search";
  }
  return "?";
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& r : raw_entries()) v.emplace_back(r.name);
    return v;
  }();
  return names;
}

CatalogEntry catalog_load(const std::string& name, const Limits& limits) {
  const Raw& raw = find_raw(name);
  CatalogEntry e;
  e.name = raw.name;
  e.note = raw.note;
  e.definition = Json::parse(raw.doc);
  e.extension = load_definition(e.definition, limits);
  e.expected = expected_table(name);
  return e;
}

const std::vector<Expectation>& expected_table(const std::string& name) {
  static const std::map<std::string, std::vector<Expectation>> tables = [] {
    std::map<std::string, std::vector<Expectation>> out;
    for (const auto& r : raw_entries())
      for (const auto& row : r.rows) out[r.name].push_back({row.p, row.status, row.degree, row.basis});
    return out;
  }();
  find_raw(name);
  return tables.at(name);
}

}  // namespace spbw
