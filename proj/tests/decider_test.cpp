#include <doctest.h>

#include "helpers.hpp"
#include "spbw/deciders.hpp"
#include "spbw/replay.hpp"
#include "spbw/report.hpp"

using namespace spbw;
using testing_util::entry;
using testing_util::P;

namespace {

ExtensionPtr commutative(std::uint32_t p) {
  return validate_presentation(trivial_presentation(testing_util::z(p), 1, "commutative"));
}

std::optional<Verdict> try_decide(const ExtensionPtr& a, PropertyId p, unsigned D, const Limits& L = {}) {
  try {
    return decide(a, p, D, L);
  } catch (const Error&) {
    return std::nullopt;
  }
}

unsigned witness_degree(const Witness& w) {
  if (const auto* p = std::get_if<PairWitness>(&w.data)) return static_cast<unsigned>(std::max(p->f.degree(), p->g.degree()));
  if (const auto* p = std::get_if<PolyNilpotentWitness>(&w.data)) return static_cast<unsigned>(p->f.degree());
  return 0;
}

}  // namespace

TEST_CASE("reducedness of A") {
  CHECK(status_label(is_reduced_up_to(commutative(2), 1)) == "VerifiedUpTo(1)");

  auto s = entry("z2xz2-swap");
  auto v = is_reduced_up_to(s, 1);
  REQUIRE(v.fails());
  const auto& f = std::get<PolyNilpotentWitness>(v.witness->data).f;
  CHECK(f.num_terms() == 1);
  CHECK(f.degree() == 1);
  CHECK(s->poly_mul(f, f).is_zero());

  auto z4 = is_reduced_up_to(commutative(4), 1);
  REQUIRE(z4.fails());
  CHECK(commutative(4)->render(std::get<PolyNilpotentWitness>(z4.witness->data).f) == "2");
}

TEST_CASE("sigma-rigid witnesses") {
  auto s = entry("z2xz2-swap");
  auto v = decide(s, PropertyId::SigmaRigid, 2);
  REQUIRE(v.fails());
  const auto& w = std::get<RigidWitness>(v.witness->data);
  CHECK(w.alpha == ExponentVector(std::vector<std::uint32_t>{1}));
  CHECK(s->ring().is_zero(s->ring().mul(w.r, s->sigma_alpha(w.alpha, w.r))));
  CHECK(replay(s, *v.witness));

  auto m = entry("matrix-zq-half");
  auto mv = decide(m, PropertyId::SigmaRigid, 2);
  REQUIRE(mv.fails());
  CHECK(m->ring().format(std::get<RigidWitness>(mv.witness->data).r) == "[0,1]");
  CHECK(replay(m, *mv.witness));

  auto z = entry("z2poly-eval0");
  auto zv = decide(z, PropertyId::SigmaRigid, 2);
  REQUIRE(zv.fails());
  CHECK(z->ring().format(std::get<RigidWitness>(zv.witness->data).r) == "t");
  CHECK(replay(z, *zv.witness));
}

TEST_CASE("skew-Armendariz on Z2xZ2 with the swap") {
  auto s = entry("z2xz2-swap");
  auto v = decide(s, PropertyId::SkewArmendariz, 1);
  REQUIRE(v.fails());
  const auto& w = std::get<PairWitness>(v.witness->data);
  CHECK(w.f == P(s, "(0,1) + (0,1)*x1"));
  CHECK(w.g == P(s, "(1,0) - (0,1)*x1"));
  CHECK(s->render(w.product) == "(0,1)");
  CHECK(replay(s, *v.witness));
  CHECK(describe_witness(*s, *v.witness) == "f=(0,1)*x1 + (0,1); g=(0,1)*x1 + (1,0); a0*b1=(0,1)");
}

TEST_CASE("verdict examples") {
  CHECK(status_label(decide(commutative(2), PropertyId::SkewArmendariz, 2)) == "VerifiedUpTo(2)");
  auto ut = entry("ut2z2-trivial");
  auto v = decide(ut, PropertyId::WeakSkewArmendariz, 1);
  REQUIRE(v.fails());
  CHECK(replay(ut, *v.witness));
  CHECK(decide(entry("z2xz2-swap"), PropertyId::SDQuasiBaer, 2).status == Status::Holds);
}

TEST_CASE("implication reports") {
  auto z2 = implication_report(entry("z2-trivial"), 2);
  for (const auto& o : z2.outcomes) {
    REQUIRE(o.verdict);
    CHECK(o.verdict->status != Status::FailsWithWitness);
  }
  auto ut = implication_report(entry("ut2z2-trivial"), 2);
  for (auto p : {PropertyId::SDArmendariz, PropertyId::SDWeakArmendariz, PropertyId::SigmaSkewArmendariz,
                 PropertyId::WeakSigmaSkewArmendariz, PropertyId::SkewArmendariz, PropertyId::WeakSkewArmendariz}) {
    CAPTURE(property_name(p));
    REQUIRE(ut.outcome(p).verdict);
    CHECK(ut.outcome(p).verdict->fails());
  }
  auto sw = implication_report(entry("z2xz2-swap"), 2);
  CHECK(sw.outcome(PropertyId::SigmaRigid).verdict->fails());
  CHECK(sw.outcome(PropertyId::SkewArmendariz).verdict->fails());
}

TEST_CASE("chain consistency on every catalog entry") {
  for (const auto& name : catalog_names()) {
    CAPTURE(name);
    for (unsigned D : {1u, 2u}) CHECK(implication_report(entry(name), D).inconsistent_count() == 0);
  }
}

TEST_CASE("every witness replays and failures persist as D grows") {
  for (const auto& name : catalog_names()) {
    auto a = entry(name);
    for (auto p : all_properties()) {
      CAPTURE(name);
      CAPTURE(property_name(p));
      auto v1 = try_decide(a, p, 1);
      auto v2 = try_decide(a, p, 2);
      for (const auto* v : {&v1, &v2})
        if (*v && (*v)->fails()) {
          CHECK((is_classical(p) ? replay_classical(a->ring(), *(*v)->witness) : replay(a, *(*v)->witness)));
        }
      if (v1 && v1->fails() && v2) {
        CHECK(v2->fails());
        CHECK(witness_degree(*v2->witness) <= 2);
      }
      if (a->ring().is_finite() && is_weak(p) && v2) CHECK(v2->status != Status::VerifiedUpTo);
    }
  }
}

TEST_CASE("verdicts do not depend on the thread count") {
  Limits one, many;
  many.threads = 4;
  for (const auto& name : testing_util::finite_entries()) {
    auto a = entry(name);
    for (auto p : extension_properties()) {
      CAPTURE(name);
      CAPTURE(property_name(p));
      auto x = try_decide(a, p, 2, one), y = try_decide(a, p, 2, many), z = try_decide(a, p, 2, many);
      REQUIRE(x.has_value() == y.has_value());
      if (!x) continue;
      const auto jx = verdict_json(*a, *x, 2).dump();
      CHECK(jx == verdict_json(*a, *y, 2).dump());
      CHECK(jx == verdict_json(*a, *z, 2).dump());
    }
  }
}

TEST_CASE("search cap is enforced") {
  Limits tiny;
  tiny.multiplication_cap = 16;
  CHECK_THROWS_AS(decide(entry("ut2z2-trivial"), PropertyId::SkewArmendariz, 2, tiny), SearchSpaceCapExceeded);
}
