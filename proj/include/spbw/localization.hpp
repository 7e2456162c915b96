#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spbw/theorems.hpp"

namespace spbw {

struct MultiplicativeSet {
  std::uint64_t ring_id = 0;
  // Every member for finite rings; the sampled members for structured rings.
  std::vector<Element> elements;
  std::function<bool(const Element&)> contains;
  bool contains_one = false;
  bool excludes_zero = false;
  bool closed_under_product = false;
  bool subset_of_regular = false;
  bool exhaustive = false;  // flags checked on every member
  bool valid() const { return contains_one && excludes_zero && closed_under_product; }
};

bool is_regular(const Ring& ring, const Element& a);
// Non zero-divisors of a finite ring, ascending.
std::vector<Element> regular_elements(const Ring& ring);

// Explicit set of a finite ring with its flags computed.
MultiplicativeSet multiplicative_set(const Ring& ring, std::vector<Element> elements);
// All regular elements; by predicate for commutative structured rings.
MultiplicativeSet regular_set(const Ring& ring);

enum class OreSide { Left, Right };

struct OreCheck {
  bool holds = true;
  std::optional<std::pair<Element, Element>> witness;  // (a, s) with no (s', a')
};

// Left: s'a = a's has a solution for every a, s. Right: a s' = s a'.
OreCheck check_ore(const Ring& ring, const MultiplicativeSet& S, OreSide side);

// s^{-1}a, written a/s.
struct Fraction {
  Element num, den;
  bool operator==(const Fraction& o) const = default;
};

class FractionRing;
using FractionRingPtr = std::shared_ptr<const FractionRing>;

class FractionRing {
 public:
  // Throws DenominatorNotRegular, NotOre, UnsupportedInfinite.
  static FractionRingPtr localize(RingPtr base, MultiplicativeSet S);

  const Ring& base() const { return *base_; }
  const MultiplicativeSet& denominators() const { return S_; }
  // Finite rings: Q is identified with R and fractions reduce to (s^{-1}a)/1.
  bool is_finite_iso() const { return base_->is_finite(); }

  Fraction make(const Element& a, const Element& s) const;
  Fraction embed(const Element& a) const { return make(a, base_->one()); }
  Fraction canonical(const Fraction& x) const;
  Fraction zero() const { return embed(base_->zero()); }
  Fraction one() const { return embed(base_->one()); }
  Fraction add(const Fraction& x, const Fraction& y) const;
  Fraction neg(const Fraction& x) const;
  Fraction mul(const Fraction& x, const Fraction& y) const;
  // Works on raw representatives.
  bool equivalent(const Fraction& x, const Fraction& y) const;
  std::string format(const Fraction& x) const;
  // Raw representatives a/s for a in the base sample and s in S, capped per side.
  std::vector<Fraction> sample(std::size_t per_side = 12) const;

  // Embedding R -> Q bijective, additive and multiplicative on all pairs (finite rings).
  bool verify_isomorphism() const;

 private:
  FractionRing(RingPtr base, MultiplicativeSet S) : base_(std::move(base)), S_(std::move(S)) {}
  Element s_inverse_times(const Element& s, const Element& a) const;

  RingPtr base_;
  MultiplicativeSet S_;
};

struct ExtendedMapOnFractions {
  FractionRingPtr Q;
  EndoMap sigma;
  SigmaDerivation delta;
  Fraction apply_sigma(const Fraction& x) const;
  // -delta(s)/sigma(s) * a/s + delta(a)/sigma(s)
  Fraction apply_delta(const Fraction& x) const;
};

// Throws SigmaDoesNotPreserveS unless sigma(S) = S (sampled for structured rings).
ExtendedMapOnFractions extend_maps_to_fractions(const EndoMap& sigma, const SigmaDerivation& delta, FractionRingPtr Q);
// First failing identity on sampled fractions: additivity, multiplicativity, the derivation rule,
// agreement with the base maps on a/1, independence of the representative.
std::optional<std::string> check_extended_maps(const ExtendedMapOnFractions& m);

TheoremReport verify_localization(const ExtensionPtr& a, unsigned D, const Limits& limits = {});

}  // namespace spbw
