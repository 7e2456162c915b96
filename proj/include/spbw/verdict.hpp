#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "spbw/skew_poly.hpp"

namespace spbw {

enum class PropertyId {
  SigmaRigid,
  SDArmendariz,
  SDWeakArmendariz,
  SigmaSkewArmendariz,
  WeakSigmaSkewArmendariz,
  SkewArmendariz,
  WeakSkewArmendariz,
  SDQuasiBaer,
  Reduced,
  Abelian,
  IFP,
  Baer,
  QuasiBaer,
  PP,
  PQBaer,
};

const std::vector<PropertyId>& all_properties();
const std::vector<PropertyId>& extension_properties();
const std::vector<PropertyId>& classical_properties();
bool is_classical(PropertyId p);
bool is_weak(PropertyId p);
std::string property_name(PropertyId p);  // kebab-case
PropertyId property_from_name(const std::string& s);

enum class Status { Holds, FailsWithWitness, VerifiedUpTo };

const char* status_name(Status s);

// a with a² = 0
struct NilpotentWitness {
  Element a;
};
// idempotent e and x with ex != xe
struct NonCentralIdempotentWitness {
  Element e, x;
};
// a·s = 0 but a·x·s != 0
struct IfpWitness {
  Element a, s, x;
};
// A set (subset, principal right ideal, or ideal) whose right annihilator is not e·R.
struct AnnihilatorWitness {
  std::vector<Element> subset;
  std::vector<Element> annihilator;
};
// r != 0 with r·σ^α(r) = 0
struct RigidWitness {
  Element r;
  ExponentVector alpha;
};
// fg = 0 while the variant's product at (left, right) is nonzero.
// left/right are the exponents of the offending coefficients of f and g.
struct PairWitness {
  SkewPoly f, g;
  ExponentVector left, right;
  SkewPoly product;
};
// f != 0 with f² = 0
struct PolyNilpotentWitness {
  SkewPoly f;
};

using WitnessData = std::variant<NilpotentWitness, NonCentralIdempotentWitness, IfpWitness, AnnihilatorWitness,
                                 RigidWitness, PairWitness, PolyNilpotentWitness>;

struct Witness {
  PropertyId property;
  WitnessData data;
};

struct Verdict {
  PropertyId property = PropertyId::Reduced;
  Status status = Status::Holds;
  std::optional<unsigned> bound;  // set for VerifiedUpTo
  std::optional<Witness> witness;
  std::uint64_t pairs_examined = 0;

  static Verdict holds(PropertyId p, std::uint64_t examined = 0);
  static Verdict fails(Witness w, std::uint64_t examined = 0);
  static Verdict verified_up_to(PropertyId p, unsigned bound, std::uint64_t examined = 0);
  bool fails() const { return status == Status::FailsWithWitness; }
};

std::string status_label(const Verdict& v);  // "Holds", "FailsWithWitness", "VerifiedUpTo(2)"

}  // namespace spbw
