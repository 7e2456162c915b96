#pragma once

#include <functional>
#include <string>
#include <vector>

#include "spbw/ring.hpp"

namespace spbw {

using ElementFn = std::function<Element(const Element&)>;

// Additive, multiplicative, unital map R -> R. Finite rings keep an index table.
class EndoMap {
 public:
  EndoMap() = default;
  static EndoMap identity(RingPtr ring);
  static EndoMap from_table(RingPtr ring, std::vector<std::uint32_t> table, std::string name);
  static EndoMap from_rule(RingPtr ring, std::string name, ElementFn rule, bool bijective = false);

  Element operator()(const Element& a) const;
  const std::string& name() const { return name_; }
  const RingPtr& ring() const { return ring_; }
  bool has_table() const { return !table_.empty(); }
  const std::vector<std::uint32_t>& table() const { return table_; }
  bool is_identity() const;
  // Closed-form rules declare bijectivity; tables compute it.
  bool declared_bijective() const { return bijective_; }
  // this ∘ inner
  EndoMap compose(const EndoMap& inner) const;
  // Action on the ring's sample; equal signatures mean equal maps for finite rings.
  std::vector<Element> signature() const;

 private:
  RingPtr ring_;
  std::string name_;
  std::vector<std::uint32_t> table_;
  ElementFn rule_;
  bool identity_ = false;
  bool bijective_ = false;
};

// Additive δ with δ(ab) = σ(a)δ(b) + δ(a)b.
class SigmaDerivation {
 public:
  SigmaDerivation() = default;
  static SigmaDerivation zero(EndoMap sigma);
  static SigmaDerivation from_table(EndoMap sigma, std::vector<std::uint32_t> table, std::string name);
  static SigmaDerivation from_rule(EndoMap sigma, std::string name, ElementFn rule);

  Element operator()(const Element& a) const;
  const EndoMap& sigma() const { return sigma_; }
  const std::string& name() const { return name_; }
  bool is_zero() const { return zero_; }
  bool has_table() const { return !table_.empty(); }
  const std::vector<std::uint32_t>& table() const { return table_; }

 private:
  EndoMap sigma_;
  std::string name_;
  std::vector<std::uint32_t> table_;
  ElementFn rule_;
  bool zero_ = false;
};

struct MapReport {
  bool injective = false;
  bool surjective = false;
  bool exhaustive = false;  // false when structured-ring checks were sampled
};

// Throws AxiomViolation with the offending elements.
MapReport validate_endomorphism(const EndoMap& sigma, const Limits& limits = {});
void validate_derivation(const SigmaDerivation& delta, const Limits& limits = {});

// Named maps: endomorphisms "id", "swap", "half", "eval0"; derivations "zero", "d/dt".
EndoMap builtin_endomap(const RingPtr& ring, const std::string& name);
SigmaDerivation builtin_derivation(const EndoMap& sigma, const std::string& name);

// Closure under composition, identity first, then breadth-first discovery order.
// Structured rings compare maps by their action on the sample and give up past `cap` maps.
std::vector<EndoMap> monoid_closure(const std::vector<EndoMap>& sigmas, std::size_t cap = 4096);

}  // namespace spbw
