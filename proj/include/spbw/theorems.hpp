#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spbw/deciders.hpp"

namespace spbw {

enum class TheoremId {
  DeltaAnnihilation,
  RigidEquivalence,
  IdempotentStability,
  IdempotentsInR,
  WeakImpliesAbelian,
  AbelianOfA,
  ExtendedDerivation,
  SDQuasiBaerTransfer,
  QuasiBaerEquivalence,
  BaerTransfer,
  PPTransfer,
  IfpQuasiBaerTransfer,
  IdempotentDecomposition,
  LocalizationArmendariz,
};

const std::vector<TheoremId>& all_theorems();
std::string theorem_name(TheoremId t);  // kebab-case
// Throws DefinitionError for unknown names.
TheoremId theorem_from_name(const std::string& s);
// One-line statement of the claim being checked.
const char* theorem_claim(TheoremId t);

// Presumed values come from bounded searches or probes and never count as proof.
enum class Truth { True, False, PresumedTrue, PresumedFalse, Unknown };
const char* truth_name(Truth t);

struct Statement {
  std::string label;
  Truth truth = Truth::Unknown;
  std::optional<unsigned> bound;
  std::string detail;
};

enum class TheoremStatus { Consistent, Violation, HypothesesNotMet, Inconclusive };
const char* theorem_status_name(TheoremStatus s);

struct TheoremReport {
  TheoremId id = TheoremId::DeltaAnnihilation;
  std::string instance;
  unsigned degree = 0;
  std::vector<Statement> hypotheses;
  std::vector<Statement> conclusions;
  TheoremStatus status = TheoremStatus::Inconclusive;
  std::string note;
  std::optional<std::string> witness;  // set for Violation
};

// Decider and search errors end up as Inconclusive with the cause in the note.
TheoremReport verify(TheoremId t, const ExtensionPtr& a, unsigned D, const Limits& limits = {});
std::vector<TheoremReport> run_all(const ExtensionPtr& a, unsigned D, const Limits& limits = {});

struct SuiteCounts {
  std::size_t consistent = 0, violation = 0, hypotheses_not_met = 0, inconclusive = 0;
};
SuiteCounts count_statuses(const std::vector<TheoremReport>& reports);

std::string describe_instance(const SkewExtension& a);

// Status rules shared with the localization module.
namespace theorem_rules {
// Premise implies conclusion, under computed gates.
TheoremStatus implication(const std::vector<Statement>& gates, const Statement& premise, const Statement& conclusion);
// All statements equivalent, under gates and an optional premise.
TheoremStatus equivalence(const std::vector<Statement>& gates, const Statement* premise,
                          const std::vector<Statement>& statements);
Statement from_verdict(std::string label, const Verdict& v, const SkewExtension& a);
}  // namespace theorem_rules

}  // namespace spbw
