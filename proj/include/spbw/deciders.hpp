#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spbw/algebra.hpp"
#include "spbw/ring_props.hpp"
#include "spbw/verdict.hpp"

namespace spbw {

// Extension properties and, for classical ids, the coefficient ring's property.
Verdict decide(const ExtensionPtr& a, PropertyId property, unsigned D, const Limits& limits = {});

// f != 0 with f² = 0 among polynomials of degree <= D.
Verdict is_reduced_up_to(const ExtensionPtr& a, unsigned D, const Limits& limits = {});

// Two-sided ideals I with σ_i(I) = I and δ_i(I) ⊆ I for every i.
std::vector<Ideal> sigma_delta_ideals(const SkewExtension& a, const Limits& limits = {});
// Ideals with σ_i(I) = I only.
std::vector<Ideal> sigma_ideals(const SkewExtension& a, const Limits& limits = {});

// Ordered maps σ^α with every α needed to cover the monoid, ascending (degree, deglex).
// Finite rings: exact via power cycles. Structured rings: |α| <= cap unless the powers cycle.
struct SigmaPowers {
  std::vector<ExponentVector> alphas;
  bool exact = false;
};
SigmaPowers sigma_powers(const SkewExtension& a, const Limits& limits = {});

struct ImplicationRow {
  PropertyId stronger, weaker;
  bool inconsistent = false;
  std::string note;
};

struct PropertyOutcome {
  PropertyId property;
  std::optional<Verdict> verdict;
  std::string error;  // set when the decider raised
};

struct ImplicationReport {
  std::vector<PropertyOutcome> outcomes;
  std::vector<ImplicationRow> rows;
  std::size_t inconsistent_count() const;
  const PropertyOutcome& outcome(PropertyId p) const;
};

// Every chain edge checked by implication_report, stronger first.
const std::vector<std::pair<PropertyId, PropertyId>>& implication_edges();

ImplicationReport implication_report(const ExtensionPtr& a, unsigned D, const Limits& limits = {});

}  // namespace spbw
