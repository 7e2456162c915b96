#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "spbw/maps.hpp"
#include "spbw/skew_poly.hpp"

namespace spbw {

// Raw data of A = σ(R)<x_1,...,x_n>. Variable indices are 0-based here.
struct SkewPresentation {
  RingPtr ring;
  std::size_t n = 1;
  std::vector<EndoMap> sigma;
  std::vector<SigmaDerivation> delta;
  // (i,j) with i < j. Missing c entries mean 1, missing r entries mean 0.
  std::map<std::pair<std::size_t, std::size_t>, Element> c;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Element>> r;  // r_0, r_1..r_n
  MonomialOrder order;
  // Claimed flags; validation recomputes them and rejects false claims.
  std::optional<bool> claim_quasi_commutative, claim_bijective;
  std::string name;
};

// Convenience for the common case: every σ_i = id, δ_i = 0, c = 1, r = 0.
SkewPresentation trivial_presentation(RingPtr ring, std::size_t n, std::string name = {});

struct PresentationFlags {
  bool quasi_commutative = false;
  bool bijective = false;
  bool sigma_injective = false;
  bool exhaustive = false;  // axioms checked on every element (finite rings)
};

class SkewExtension;
using ExtensionPtr = std::shared_ptr<const SkewExtension>;

// Validated presentation with the normal-form engine.
class SkewExtension {
 public:
  const SkewPresentation& presentation() const { return p_; }
  const Ring& ring() const { return *p_.ring; }
  const RingPtr& ring_ptr() const { return p_.ring; }
  std::size_t n() const { return p_.n; }
  const PresentationFlags& flags() const { return flags_; }
  const MonomialOrder& order() const { return p_.order; }
  const std::string& name() const { return p_.name; }
  const EndoMap& sigma(std::size_t i) const { return p_.sigma.at(i); }
  const SigmaDerivation& delta(std::size_t i) const { return p_.delta.at(i); }
  // c_{i,j} and r^{(i,j)} for i < j
  const Element& c(std::size_t i, std::size_t j) const;
  const std::vector<Element>& r(std::size_t i, std::size_t j) const;
  std::uint64_t rewrite_budget() const { return budget_; }

  SkewPoly constant(const Element& a) const { return SkewPoly::constant(ring(), n(), a); }
  SkewPoly variable(std::size_t i) const { return SkewPoly::term(ring(), ring().one(), ExponentVector::unit(n(), i)); }
  SkewPoly monomial(const ExponentVector& a) const { return SkewPoly::term(ring(), ring().one(), a); }

  // σ^α(a) = σ_1^{α_1}(...(σ_n^{α_n}(a)))
  Element sigma_alpha(const ExponentVector& alpha, const Element& a) const;

  SkewPoly var_times_coeff(std::size_t i, const Element& a) const;
  // x_j x_i rewritten for j > i
  SkewPoly swap_rewrite(std::size_t j, std::size_t i) const;
  SkewPoly monomial_times_coeff(const ExponentVector& alpha, const Element& a) const;
  SkewPoly monomial_times_poly(const ExponentVector& alpha, const SkewPoly& g) const;
  SkewPoly var_times_poly(std::size_t i, const SkewPoly& g) const;
  SkewPoly poly_mul(const SkewPoly& f, const SkewPoly& g) const;
  SkewPoly add(const SkewPoly& f, const SkewPoly& g) const { return poly_add(ring(), f, g); }
  SkewPoly sub(const SkewPoly& f, const SkewPoly& g) const { return poly_sub(ring(), f, g); }
  std::string render(const SkewPoly& f) const { return spbw::render(ring(), f, order()); }
  void check(const SkewPoly& f) const;

  // Used by validate_presentation only.
  SkewExtension(SkewPresentation p, PresentationFlags flags, std::uint64_t budget);

 private:
  struct Budget;
  SkewPoly var_times_monomial(std::size_t i, const ExponentVector& g, Budget& b) const;
  SkewPoly var_times_poly(std::size_t i, const SkewPoly& g, Budget& b) const;

  SkewPresentation p_;
  PresentationFlags flags_;
  std::uint64_t budget_;
  std::vector<std::vector<Element>> c_;
  std::vector<std::vector<std::vector<Element>>> r_;
  mutable std::mutex memo_mutex_;
  mutable std::map<std::pair<std::size_t, ExponentVector>, SkewPoly> memo_;
};

ExtensionPtr validate_presentation(SkewPresentation p, const Limits& limits = {});

struct ExtensionHypotheses {
  bool ok = true;
  std::string failure;  // first failing identity with its witness elements
};

// σ_iδ_j = δ_jσ_i, δ_iδ_j = δ_jδ_i, δ_k(c_{i,j}) = δ_k(r_l^{(i,j)}) = 0.
ExtensionHypotheses check_extension_hypotheses(const SkewExtension& a, const Limits& limits = {});
// Coefficientwise σ_k and δ_k on A; extend_delta assumes the hypotheses were checked.
SkewPoly extend_sigma(const SkewExtension& a, std::size_t k, const SkewPoly& f);
SkewPoly extend_delta(const SkewExtension& a, std::size_t k, const SkewPoly& f);
// Throws HypothesesFail when the hypotheses do not hold.
void require_extension_hypotheses(const SkewExtension& a, const Limits& limits = {});

using PolyMap = std::function<SkewPoly(const SkewPoly&)>;
PolyMap extended_sigma(ExtensionPtr a, std::size_t k);
// Checks the hypotheses once, then returns the coefficientwise map.
PolyMap extended_delta(ExtensionPtr a, std::size_t k, const Limits& limits = {});

}  // namespace spbw
