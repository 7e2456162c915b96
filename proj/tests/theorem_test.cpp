#include <doctest.h>

#include "helpers.hpp"
#include "spbw/theorems.hpp"

using namespace spbw;
using testing_util::entry;

namespace {

Statement st(Truth t) { return {"s", t, std::nullopt, {}}; }

}  // namespace

TEST_CASE("status rules") {
  using theorem_rules::equivalence;
  using theorem_rules::implication;
  const auto T = st(Truth::True), F = st(Truth::False), PT = st(Truth::PresumedTrue), PF = st(Truth::PresumedFalse),
             U = st(Truth::Unknown);

  CHECK(implication({F}, T, T) == TheoremStatus::HypothesesNotMet);
  CHECK(implication({U}, T, T) == TheoremStatus::Inconclusive);
  CHECK(implication({T}, F, F) == TheoremStatus::HypothesesNotMet);
  CHECK(implication({T}, T, T) == TheoremStatus::Consistent);
  CHECK(implication({T}, T, F) == TheoremStatus::Violation);
  // bounded evidence never produces a violation
  CHECK(implication({T}, PT, F) == TheoremStatus::Inconclusive);
  CHECK(implication({PT}, T, F) == TheoremStatus::Inconclusive);
  CHECK(implication({T}, T, PF) == TheoremStatus::Inconclusive);
  CHECK(implication({T}, PT, PT) == TheoremStatus::Consistent);
  CHECK(implication({T}, U, T) == TheoremStatus::Consistent);

  CHECK(equivalence({T}, nullptr, {F, F, F}) == TheoremStatus::Consistent);
  CHECK(equivalence({T}, nullptr, {T, PT}) == TheoremStatus::Consistent);
  CHECK(equivalence({T}, nullptr, {T, F}) == TheoremStatus::Violation);
  CHECK(equivalence({T}, nullptr, {T, F, PT}) == TheoremStatus::Violation);
  CHECK(equivalence({U}, nullptr, {T, F}) == TheoremStatus::Inconclusive);
  CHECK(equivalence({T}, nullptr, {T, U}) == TheoremStatus::Inconclusive);
  CHECK(equivalence({F}, nullptr, {T, F}) == TheoremStatus::HypothesesNotMet);
  CHECK(equivalence({T}, &F, {T, F}) == TheoremStatus::HypothesesNotMet);
}

TEST_CASE("names round trip") {
  for (auto t : all_theorems()) CHECK(theorem_from_name(theorem_name(t)) == t);
  CHECK_THROWS_AS(theorem_from_name("no-such-theorem"), DefinitionError);
  CHECK(all_theorems().size() == 14);
}

TEST_CASE("rigid equivalence on Z2xZ2 with the swap") {
  auto r = verify(TheoremId::RigidEquivalence, entry("z2xz2-swap"), 2);
  CHECK(r.status == TheoremStatus::Consistent);
  REQUIRE(r.conclusions.size() == 3);
  for (const auto& s : r.conclusions) CHECK(s.truth == Truth::False);
}

TEST_CASE("weak implies Abelian through the contrapositive") {
  auto r = verify(TheoremId::WeakImpliesAbelian, entry("ut2z2-trivial"), 2);
  CHECK(r.status == TheoremStatus::Consistent);
  REQUIRE(r.hypotheses.size() == 1);
  CHECK(r.hypotheses[0].truth == Truth::False);
  CHECK(r.hypotheses[0].detail.find("f=") != std::string::npos);
  CHECK(r.conclusions[0].truth == Truth::False);

  // an Abelian ring exercises the direct direction
  auto z = verify(TheoremId::WeakImpliesAbelian, entry("z2xz2-swap"), 2);
  CHECK(z.status == TheoremStatus::Consistent);
  CHECK(z.conclusions[0].truth == Truth::True);
}

TEST_CASE("single theorem examples") {
  CHECK(verify(TheoremId::IdempotentStability, entry("z2poly-eval0"), 2).status == TheoremStatus::Consistent);
  CHECK(verify(TheoremId::ExtendedDerivation, entry("weyl-z5"), 2).status == TheoremStatus::Consistent);
  CHECK(verify(TheoremId::ExtendedDerivation, entry("diff-poly-z5"), 2).status == TheoremStatus::Consistent);
  for (const auto& name : {"z2-trivial", "z2xz2-swap", "quantum-plane-z3", "ut2z2-trivial"})
    CHECK(verify(TheoremId::DeltaAnnihilation, entry(name), 2).status == TheoremStatus::Consistent);
}

TEST_CASE("suite on the trivial field") {
  for (const auto& r : run_all(entry("z2-trivial"), 2)) {
    CAPTURE(theorem_name(r.id));
    CHECK((r.status == TheoremStatus::Consistent || r.status == TheoremStatus::HypothesesNotMet));
  }
}

TEST_CASE("no catalog instance produces a violation, and raising D keeps it that way") {
  for (const auto& name : catalog_names()) {
    auto a = entry(name);
    const auto d1 = run_all(a, 1), d2 = run_all(a, 2);
    REQUIRE(d1.size() == d2.size());
    for (std::size_t i = 0; i < d1.size(); ++i) {
      CAPTURE(name);
      CAPTURE(theorem_name(d1[i].id));
      CHECK(d1[i].status != TheoremStatus::Violation);
      CHECK(d2[i].status != TheoremStatus::Violation);
    }
  }
}

TEST_CASE("invalid presentations never reach the suite") {
  auto p = trivial_presentation(testing_util::z(4), 2, "bad");
  p.c[{0, 1}] = Element(2u);
  CHECK_THROWS_AS(validate_presentation(p), PresentationInconsistent);
}
