#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "spbw/localization.hpp"

using namespace spbw;
using testing_util::names;

TEST_CASE("regular elements against the oracle") {
  CHECK(names(*testing_util::z(6), regular_elements(*testing_util::z(6))) == std::set<std::string>{"1", "5"});
  CHECK(names(*testing_util::z(4), regular_elements(*testing_util::z(4))) == std::set<std::string>{"1", "3"});
  CHECK(names(*testing_util::z(6), regular_elements(*testing_util::z(6))) == oracle::names(oracle::zn(6), oracle::regular(oracle::zn(6))));
  CHECK(names(*testing_util::ut2z2(), regular_elements(*testing_util::ut2z2())) ==
        oracle::names(oracle::ut2z2(), oracle::regular(oracle::ut2z2())));
}

TEST_CASE("finite localizations are isomorphic to the ring") {
  auto z6 = testing_util::z(6);
  auto Q = FractionRing::localize(z6, multiplicative_set(*z6, {Element(1u), Element(5u)}));
  CHECK(Q->verify_isomorphism());
  // 5^{-1} = 5
  CHECK(Q->canonical(Q->make(Element(1u), Element(5u))) == Q->embed(Element(5u)));

  auto z4 = testing_util::z(4);
  CHECK(FractionRing::localize(z4, multiplicative_set(*z4, {Element(1u), Element(3u)}))->verify_isomorphism());

  for (const auto& name : testing_util::finite_entries()) {
    CAPTURE(name);
    auto R = testing_util::entry(name)->ring_ptr();
    CHECK(FractionRing::localize(R, regular_set(*R))->verify_isomorphism());
  }
}

TEST_CASE("bad denominator sets are refused") {
  auto z4 = testing_util::z(4);
  CHECK_THROWS_AS(FractionRing::localize(z4, multiplicative_set(*z4, {Element(1u), Element(2u)})), Error);
  CHECK(check_ore(*testing_util::z(6), regular_set(*testing_util::z(6)), OreSide::Left).holds);
}

TEST_CASE("fractions over the integers") {
  auto Z = validate_ring(RingDescriptor::integers());
  auto Q = FractionRing::localize(Z, regular_set(*Z));
  const auto half = Q->make(BigInt(1), BigInt(2));
  const auto two_quarters = Q->make(BigInt(2), BigInt(4));
  CHECK(Q->canonical(two_quarters) == Q->canonical(half));
  CHECK(Q->format(Q->canonical(two_quarters)) == "1/2");
  CHECK(Q->equivalent(two_quarters, half));
  CHECK(Q->format(Q->add(half, half)) == "1");
  CHECK(Q->format(Q->mul(Q->make(BigInt(-2), BigInt(3)), Q->make(BigInt(3), BigInt(-4)))) == "1/2");

  SUBCASE("equivalence is an equivalence relation on samples") {
    const auto xs = Q->sample(6);
    for (const auto& x : xs) {
      CHECK(Q->equivalent(x, x));
      for (const auto& y : xs) {
        CHECK(Q->equivalent(x, y) == Q->equivalent(y, x));
        if (!Q->equivalent(x, y)) continue;
        for (const auto& z : xs)
          if (Q->equivalent(y, z)) CHECK(Q->equivalent(x, z));
      }
    }
  }
}

TEST_CASE("extended maps on fractions") {
  SUBCASE("sigma bar of the halving map") {
    auto a = testing_util::entry("matrix-zq-half");
    auto Q = FractionRing::localize(a->ring_ptr(), regular_set(a->ring()));
    auto m = extend_maps_to_fractions(a->sigma(0), a->delta(0), Q);
    const auto x = Q->embed(parse_element(a->ring(), "[0,1]"));
    CHECK(Q->format(m.apply_sigma(x)) == "[0,1/2]");
    CHECK_FALSE(check_extended_maps(m).has_value());
  }
  SUBCASE("delta bar restricts to delta and is a derivation") {
    auto a = testing_util::entry("diff-poly-z5");
    auto Q = FractionRing::localize(a->ring_ptr(), regular_set(a->ring()));
    auto m = extend_maps_to_fractions(a->sigma(0), a->delta(0), Q);
    for (const auto& r : a->ring().sample()) CHECK(Q->equivalent(m.apply_delta(Q->embed(r)), Q->embed(a->delta(0)(r))));
    const auto inv_t = Q->make(a->ring().one(), parse_element(a->ring(), "t"));
    // d(1/t) = -1/t^2
    CHECK(Q->equivalent(m.apply_delta(inv_t), Q->make(a->ring().neg(a->ring().one()), parse_element(a->ring(), "t^2"))));
    CHECK_FALSE(check_extended_maps(m).has_value());
  }
}

TEST_CASE("localization theorem on the finite catalog") {
  CHECK(verify_localization(testing_util::entry("z6-trivial"), 2).status == TheoremStatus::Consistent);
  for (const auto& name : testing_util::finite_entries()) {
    CAPTURE(name);
    CHECK(verify_localization(testing_util::entry(name), 2).status == TheoremStatus::Consistent);
  }
}
