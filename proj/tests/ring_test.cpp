#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "spbw/maps.hpp"
#include "spbw/ring_props.hpp"

using namespace spbw;
using testing_util::names;

namespace {

RingDescriptor z4_table() {
  RingDescriptor d;
  d.kind = RingKind::FiniteTable;
  d.size = 4;
  d.add_table.assign(4, std::vector<std::uint32_t>(4));
  d.mul_table.assign(4, std::vector<std::uint32_t>(4));
  d.neg_table.resize(4);
  for (std::uint32_t a = 0; a < 4; ++a) {
    d.neg_table[a] = (4 - a) % 4;
    for (std::uint32_t b = 0; b < 4; ++b) {
      d.add_table[a][b] = (a + b) % 4;
      d.mul_table[a][b] = (a * b) % 4;
    }
  }
  return d;
}

Element lit(const RingPtr& R, const std::string& s) { return parse_element(*R, s); }

std::vector<Element> all(const RingPtr& R) { return R->sample(); }

struct Case {
  const char* label;
  RingPtr ring;
  oracle::PlainRing plain;
};

std::vector<Case> small_rings() {
  return {{"Z4", testing_util::z(4), oracle::zn(4)},
          {"Z6", testing_util::z(6), oracle::zn(6)},
          {"Z2xZ2", testing_util::z2xz2(), oracle::z2xz2()},
          {"UT2(Z2)", testing_util::ut2z2(), oracle::ut2z2()}};
}

}  // namespace

TEST_CASE("ring construction") {
  auto z4 = validate_ring(RingDescriptor::modular(4));
  CHECK(z4->size() == 4);
  CHECK(names(*z4, all(z4)) == std::set<std::string>{"0", "1", "2", "3"});
  CHECK(testing_util::ut2z2()->size() == 8);

  SUBCASE("table from Z4 matches modular arithmetic") {
    auto t = validate_ring(z4_table());
    for (std::uint32_t a = 0; a < 4; ++a)
      for (std::uint32_t b = 0; b < 4; ++b) CHECK(t->mul(Element(a), Element(b)) == Element((a * b) % 4));
  }
  SUBCASE("mismatched table shapes are rejected") {
    RingDescriptor d;
    d.kind = RingKind::FiniteTable;
    d.size = 2;
    d.mul_table = {{0, 0}, {0, 1}};
    d.add_table = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
    d.neg_table = {0, 1};
    CHECK_THROWS_AS(validate_ring(d), InvalidTable);
  }
}

TEST_CASE("every single-entry corruption of a Z4 table is rejected") {
  int rejected = 0, total = 0;
  for (int which = 0; which < 2; ++which)
    for (std::uint32_t a = 0; a < 4; ++a)
      for (std::uint32_t b = 0; b < 4; ++b)
        for (std::uint32_t v = 0; v < 4; ++v) {
          auto d = z4_table();
          auto& cell = which ? d.mul_table[a][b] : d.add_table[a][b];
          if (cell == v) continue;
          cell = v;
          ++total;
          try {
            validate_ring(d);
          } catch (const Error& e) {
            CHECK((e.code() == ErrorCode::AxiomViolation || e.code() == ErrorCode::InvalidTable));
            ++rejected;
          }
        }
  CHECK(total == 96);
  CHECK(rejected == total);
}

TEST_CASE("UT2(Z2) multiplication matches plain matrix arithmetic") {
  auto R = testing_util::ut2z2();
  auto U = oracle::ut2z2();
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      auto ex = lit(R, U.fmt(x)), ey = lit(R, U.fmt(y));
      CHECK(R->format(R->mul(ex, ey)) == U.fmt(U.mul(x, y)));
      CHECK(R->format(R->add(ex, ey)) == U.fmt(U.add(x, y)));
    }
}

TEST_CASE("annihilators against the oracle") {
  CHECK(names(*testing_util::z(4), right_annihilator(*testing_util::z(4), {Element(2u)})) ==
        std::set<std::string>{"0", "2"});
  CHECK(right_annihilator(*testing_util::z(6), {Element(0u)}).size() == 6);

  auto R = testing_util::ut2z2();
  auto E12 = lit(R, "[[0,1],[0,0]]");
  CHECK(names(*R, right_annihilator(*R, {E12})) == oracle::names(oracle::ut2z2(), oracle::right_annihilator(oracle::ut2z2(), {2})));
  CHECK(right_annihilator(*R, {E12}).size() == 4);

  for (const auto& c : small_rings()) {
    CAPTURE(c.label);
    const auto elems = all(c.ring);
    // every singleton and pair
    for (int x = 0; x < c.plain.m; ++x)
      for (int y = x; y < c.plain.m; ++y) {
        auto got = right_annihilator(*c.ring, {lit(c.ring, c.plain.fmt(x)), lit(c.ring, c.plain.fmt(y))});
        CHECK(names(*c.ring, got) == oracle::names(c.plain, oracle::right_annihilator(c.plain, {x, y})));
        // closed under addition and right multiplication
        for (const auto& u : got) {
          for (const auto& v : got) CHECK(std::find(got.begin(), got.end(), c.ring->add(u, v)) != got.end());
          for (const auto& r : elems) CHECK(std::find(got.begin(), got.end(), c.ring->mul(u, r)) != got.end());
        }
      }
  }
}

TEST_CASE("idempotents, semicentral idempotents and ideals against the oracle") {
  CHECK(names(*testing_util::z(4), idempotents(*testing_util::z(4))) == std::set<std::string>{"0", "1"});
  CHECK(names(*testing_util::z(6), idempotents(*testing_util::z(6))) == std::set<std::string>{"0", "1", "3", "4"});
  CHECK(idempotents(*testing_util::z2xz2()).size() == 4);

  for (const auto& c : small_rings()) {
    CAPTURE(c.label);
    CHECK(names(*c.ring, idempotents(*c.ring)) == oracle::names(c.plain, oracle::idempotents(c.plain)));
    CHECK(names(*c.ring, semicentral_idempotents(*c.ring, Side::Left)) ==
          oracle::names(c.plain, oracle::left_semicentral(c.plain)));
    std::set<std::set<std::string>> got, want;
    for (const auto& I : enumerate_two_sided_ideals(*c.ring)) got.insert(names(*c.ring, I.elements));
    for (const auto& I : oracle::two_sided_ideals(c.plain)) want.insert(oracle::names(c.plain, I));
    CHECK(got == want);
  }
  CHECK(enumerate_two_sided_ideals(*testing_util::z(4)).size() == 3);
  CHECK(enumerate_two_sided_ideals(*testing_util::z2xz2()).size() == 4);
  const auto ut = enumerate_two_sided_ideals(*testing_util::ut2z2());
  CHECK(ut.size() == 5);
  auto R = testing_util::ut2z2();
  bool strictly_upper = false;
  for (const auto& I : ut) strictly_upper = strictly_upper || names(*R, I.elements) == std::set<std::string>{"[[0,0],[0,0]]", "[[0,1],[0,0]]"};
  CHECK(strictly_upper);

  // commutative: every idempotent is semicentral
  CHECK(names(*testing_util::z(6), semicentral_idempotents(*testing_util::z(6), Side::Left)) ==
        std::set<std::string>{"0", "1", "3", "4"});
}

TEST_CASE("classical deciders against the oracle") {
  SUBCASE("Z4 is not Baer, r(2) = {0,2}") {
    auto R = testing_util::z(4);
    auto v = decide_classical(*R, PropertyId::Baer);
    REQUIRE(v.fails());
    const auto& w = std::get<AnnihilatorWitness>(v.witness->data);
    CHECK(names(*R, w.annihilator) == std::set<std::string>{"0", "2"});
    CHECK_FALSE(oracle::is_baer(oracle::zn(4)));
  }
  SUBCASE("UT2(Z2) is not Abelian") {
    auto R = testing_util::ut2z2();
    auto v = decide_classical(*R, PropertyId::Abelian);
    REQUIRE(v.fails());
    const auto& w = std::get<NonCentralIdempotentWitness>(v.witness->data);
    CHECK(R->mul(w.e, w.x) != R->mul(w.x, w.e));
    CHECK_FALSE(oracle::is_abelian(oracle::ut2z2()));
  }
  SUBCASE("Baer and Abelian agree with the oracle on every small ring") {
    for (const auto& c : small_rings()) {
      CAPTURE(c.label);
      CHECK(decide_classical(*c.ring, PropertyId::Baer).status == (oracle::is_baer(c.plain) ? Status::Holds : Status::FailsWithWitness));
      CHECK(decide_classical(*c.ring, PropertyId::Abelian).status == (oracle::is_abelian(c.plain) ? Status::Holds : Status::FailsWithWitness));
    }
    CHECK(decide_classical(*testing_util::z2xz2(), PropertyId::Baer).status == Status::Holds);
  }
  SUBCASE("prime fields satisfy every classical property") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u})
      for (auto prop : classical_properties()) CHECK(decide_classical(*testing_util::z(p), prop).status == Status::Holds);
  }
}

TEST_CASE("classical implication lattice on every catalog ring") {
  const std::vector<std::pair<PropertyId, PropertyId>> edges = {
      {PropertyId::Baer, PropertyId::QuasiBaer}, {PropertyId::Baer, PropertyId::PP},
      {PropertyId::QuasiBaer, PropertyId::PQBaer}, {PropertyId::PP, PropertyId::PQBaer},
      {PropertyId::Reduced, PropertyId::Abelian}, {PropertyId::Reduced, PropertyId::IFP}};
  for (const auto& name : testing_util::finite_entries()) {
    CAPTURE(name);
    auto a = testing_util::entry(name);
    for (auto [s, w] : edges)
      if (decide_classical(a->ring(), s).status == Status::Holds) CHECK(decide_classical(a->ring(), w).status == Status::Holds);
  }
}

TEST_CASE("monoid closure") {
  auto R = testing_util::z2xz2();
  auto id = EndoMap::identity(R);
  CHECK(monoid_closure({id}).size() == 1);
  auto swap = builtin_endomap(R, "swap");
  auto cl = monoid_closure({swap});
  REQUIRE(cl.size() == 2);
  CHECK(cl[0].is_identity());
  for (const auto& f : cl)
    for (const auto& g : cl) {
      const auto sig = f.compose(g).signature();
      CHECK(std::any_of(cl.begin(), cl.end(), [&](const EndoMap& h) { return h.signature() == sig; }));
    }

  auto P = validate_ring(RingDescriptor::poly_over_field(2));
  auto ev = monoid_closure({builtin_endomap(P, "eval0")});
  CHECK(ev.size() == 2);
}

TEST_CASE("structured rings refuse enumeration") {
  auto Q = validate_ring(RingDescriptor::matrix_zq());
  CHECK_THROWS_AS(idempotents(*Q), UnsupportedInfinite);
  CHECK(Q->closed_form_idempotents().size() == 2);
  auto P = validate_ring(RingDescriptor::poly_over_field(2));
  CHECK(P->closed_form_idempotents().size() == 2);
}
