#include "spbw/verdict.hpp"

#include <algorithm>

namespace spbw {

const std::vector<PropertyId>& all_properties() {
  static const std::vector<PropertyId> v = {
      PropertyId::SigmaRigid,      PropertyId::SDArmendariz,       PropertyId::SDWeakArmendariz,
      PropertyId::SigmaSkewArmendariz, PropertyId::WeakSigmaSkewArmendariz, PropertyId::SkewArmendariz,
      PropertyId::WeakSkewArmendariz, PropertyId::SDQuasiBaer,      PropertyId::Reduced,
      PropertyId::Abelian,         PropertyId::IFP,                PropertyId::Baer,
      PropertyId::QuasiBaer,       PropertyId::PP,                 PropertyId::PQBaer};
  return v;
}

const std::vector<PropertyId>& extension_properties() {
  static const std::vector<PropertyId> v(all_properties().begin(), all_properties().begin() + 8);
  return v;
}

const std::vector<PropertyId>& classical_properties() {
  static const std::vector<PropertyId> v(all_properties().begin() + 8, all_properties().end());
  return v;
}

bool is_classical(PropertyId p) {
  const auto& c = classical_properties();
  return std::find(c.begin(), c.end(), p) != c.end();
}

bool is_weak(PropertyId p) {
  return p == PropertyId::SDWeakArmendariz || p == PropertyId::WeakSigmaSkewArmendariz ||
         p == PropertyId::WeakSkewArmendariz;
}

std::string property_name(PropertyId p) {
  switch (p) {
    case PropertyId::SigmaRigid: return "sigma-rigid";
    case PropertyId::SDArmendariz: return "sd-armendariz";
    case PropertyId::SDWeakArmendariz: return "sd-weak-armendariz";
    case PropertyId::SigmaSkewArmendariz: return "sigma-skew-armendariz";
    case PropertyId::WeakSigmaSkewArmendariz: return "weak-sigma-skew-armendariz";
    case PropertyId::SkewArmendariz: return "skew-armendariz";
    case PropertyId::WeakSkewArmendariz: return "weak-skew-armendariz";
    case PropertyId::SDQuasiBaer: return "sd-quasi-baer";
    case PropertyId::Reduced: return "reduced";
    case PropertyId::Abelian: return "abelian";
    case PropertyId::IFP: return "ifp";
    case PropertyId::Baer: return "baer";
    case PropertyId::QuasiBaer: return "quasi-baer";
    case PropertyId::PP: return "pp";
    case PropertyId::PQBaer: return "pq-baer";
  }
  return "?";
}

PropertyId property_from_name(const std::string& s) {
  for (auto p : all_properties())
    if (property_name(p) == s) return p;
  throw ParseError("unknown property '" + s + "'");
}

const char* status_name(Status s) {
  switch (s) {
    case Status::Holds: return "Holds";
    case Status::FailsWithWitness: return "FailsWithWitness";
    case Status::VerifiedUpTo: return "VerifiedUpTo";
  }
  return "?";
}

Verdict Verdict::holds(PropertyId p, std::uint64_t examined) {
  Verdict v;
  v.property = p;
  v.status = Status::Holds;
  v.pairs_examined = examined;
  return v;
}

Verdict Verdict::fails(Witness w, std::uint64_t examined) {
  Verdict v;
  v.property = w.property;
  v.status = Status::FailsWithWitness;
  v.witness = std::move(w);
  v.pairs_examined = examined;
  return v;
}

Verdict Verdict::verified_up_to(PropertyId p, unsigned bound, std::uint64_t examined) {
  Verdict v;
  v.property = p;
  v.status = Status::VerifiedUpTo;
  v.bound = bound;
  v.pairs_examined = examined;
  return v;
}

std::string status_label(const Verdict& v) {
  if (v.status == Status::VerifiedUpTo) return "VerifiedUpTo(" + std::to_string(*v.bound) + ")";
  return status_name(v.status);
}

}  // namespace spbw
