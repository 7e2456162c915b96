#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "spbw/bounded.hpp"

using namespace spbw;
using testing_util::entry;
using testing_util::P;

namespace {

ExponentVector ev(std::vector<std::uint32_t> e) { return ExponentVector(std::move(e)); }

SkewPoly random_poly(const SkewExtension& a, unsigned D, std::mt19937_64& rng) {
  SkewPoly f;
  for (const auto& m : monomials_up_to(a.n(), D)) f.add_term(a.ring(), m, a.ring().random(rng));
  return f;
}

ExtensionPtr commutative(std::uint32_t p, std::size_t n) {
  return validate_presentation(trivial_presentation(testing_util::z(p), n, "commutative"));
}

// Entries with |R| <= 4 and n <= 2, as used by the bounded ring-axiom checks.
std::vector<std::string> small_finite_entries() {
  std::vector<std::string> out;
  for (const auto& n : testing_util::finite_entries()) {
    auto a = entry(n);
    if (a->ring().size() <= 4 && a->n() <= 2) out.push_back(n);
  }
  return out;
}

}  // namespace

TEST_CASE("presentations validate") {
  CHECK(commutative(2, 3)->flags().quasi_commutative);
  auto q = entry("quantum-plane-z3");
  CHECK(q->n() == 2);
  CHECK(q->ring().format(q->c(0, 1)) == "2");
  auto w = entry("weyl-z5");
  CHECK(w->ring().format(w->r(0, 1)[0]) == "1");
}

TEST_CASE("single-variable rewrites") {
  auto s = entry("z2xz2-swap");
  const auto& R = s->ring();
  CHECK(s->render(s->var_times_coeff(0, parse_element(R, "(1,0)"))) == "(0,1)*x1");
  CHECK(s->render(s->var_times_coeff(0, R.one())) == "x1");
  CHECK(s->render(s->monomial_times_coeff(ev({2}), parse_element(R, "(1,0)"))) == "(1,0)*x1^2");
  CHECK(s->monomial_times_coeff(ev({0}), parse_element(R, "(0,1)")) == s->constant(parse_element(R, "(0,1)")));

  auto d = entry("diff-poly-z5");
  const auto t = parse_element(d->ring(), "t");
  CHECK(d->render(d->var_times_coeff(0, t)) == "t*x1 + 1");
  CHECK(d->render(d->monomial_times_coeff(ev({2}), t)) == "t*x1^2 + 2*x1");
}

TEST_CASE("variable swaps") {
  CHECK(entry("quantum-plane-z3")->render(entry("quantum-plane-z3")->swap_rewrite(1, 0)) == "2*x1*x2");
  auto c = commutative(2, 2);
  CHECK(c->render(c->swap_rewrite(1, 0)) == "x1*x2");
  auto w = entry("weyl-z5");
  CHECK(w->render(w->swap_rewrite(1, 0)) == "x1*x2 + 1");
}

TEST_CASE("products") {
  auto s = entry("z2xz2-swap");
  CHECK(s->poly_mul(P(s, "(0,1) + (0,1)*x1"), P(s, "(1,0) - (0,1)*x1")).is_zero());

  auto c = commutative(2, 1);
  CHECK(c->render(c->poly_mul(P(c, "1 + x1"), P(c, "1 + x1"))) == "x1^2 + 1");

  auto w = entry("weyl-z5");
  const auto x1 = w->variable(0), x2 = w->variable(1);
  const auto left = w->poly_mul(x2, w->poly_mul(x2, x1));
  const auto right = w->poly_mul(w->poly_mul(x2, x2), x1);
  CHECK(left == right);
  CHECK(w->render(left) == "x1*x2^2 + 2*x2");
}

TEST_CASE("leading data") {
  auto q = entry("quantum-plane-z3");
  auto ld = leading_data(q->ring(), P(q, "1 + 2*x1 + x1*x2"), q->order());
  CHECK(q->render(ld.lm) == "x1*x2");
  CHECK(q->ring().format(ld.lc) == "1");
  CHECK(ld.deg == 2u);

  auto z = leading_data(q->ring(), SkewPoly{}, q->order());
  CHECK_FALSE(z.exp.has_value());
  CHECK_FALSE(z.deg.has_value());
  CHECK(z.lm.is_zero());

  auto tie = leading_data(q->ring(), P(q, "x1^2 + x1*x2"), q->order());
  CHECK(q->render(tie.lm) == "x1*x2");
}

TEST_CASE("normal form agrees with the naive word rewriter") {
  std::mt19937_64 rng(7);
  std::vector<std::string> names = testing_util::finite_entries();
  names.push_back("diff-poly-z5");
  for (const auto& name : names) {
    CAPTURE(name);
    auto a = entry(name);
    oracle::NaiveRewriter naive(*a);
    const unsigned D = a->n() == 1 ? 3 : 2;
    for (int k = 0; k < 150; ++k) {
      const auto f = random_poly(*a, D, rng), g = random_poly(*a, D, rng);
      CHECK(oracle::NaiveRewriter::terms_of(a->poly_mul(f, g)) == naive.product(f, g));
    }
  }
}

TEST_CASE("ring axioms of A at degree 2") {
  for (const auto& name : small_finite_entries()) {
    CAPTURE(name);
    auto a = entry(name);
    const auto space = all_polys_up_to(a, 2);
    const auto one = a->constant(a->ring().one());
    std::uint64_t failures = 0;
    auto check = [&](const SkewPoly& f, const SkewPoly& g, const SkewPoly& h) {
      if (a->poly_mul(a->poly_mul(f, g), h) != a->poly_mul(f, a->poly_mul(g, h))) ++failures;
      if (a->poly_mul(f, a->add(g, h)) != a->add(a->poly_mul(f, g), a->poly_mul(f, h))) ++failures;
    };
    const double triples = double(space.size()) * double(space.size()) * double(space.size());
    if (triples <= 1e6) {
      for (const auto& f : space)
        for (const auto& g : space)
          for (const auto& h : space) check(f, g, h);
    } else {
      std::mt19937_64 rng(11);
      std::uniform_int_distribution<std::size_t> pick(0, space.size() - 1);
      for (int k = 0; k < 20000; ++k) check(space[pick(rng)], space[pick(rng)], space[pick(rng)]);
    }
    for (const auto& f : space) {
      CHECK(a->poly_mul(one, f) == f);
      CHECK(a->poly_mul(f, one) == f);
    }
    CHECK(failures == 0);
  }
}

TEST_CASE("normal form does not depend on parenthesization") {
  std::mt19937_64 rng(3);
  for (const auto& name : {"weyl-z5", "quantum-plane-z3", "z2xz2-swap", "ut2z2-trivial"}) {
    CAPTURE(name);
    auto a = entry(name);
    for (int k = 0; k < 40; ++k) {
      std::vector<SkewPoly> seq;
      for (int i = 0; i < 5; ++i) seq.push_back(random_poly(*a, 1, rng));
      SkewPoly left = seq[0];
      for (std::size_t i = 1; i < seq.size(); ++i) left = a->poly_mul(left, seq[i]);
      // random binary tree over the same sequence
      std::vector<SkewPoly> work = seq;
      while (work.size() > 1) {
        std::uniform_int_distribution<std::size_t> pick(0, work.size() - 2);
        const std::size_t i = pick(rng);
        work[i] = a->poly_mul(work[i], work[i + 1]);
        work.erase(work.begin() + static_cast<long>(i) + 1);
      }
      CHECK(work[0] == left);
    }
  }
}

TEST_CASE("degree law") {
  std::mt19937_64 rng(5);
  for (const auto& name : catalog_names()) {
    auto a = entry(name);
    const bool domain = name == "z2-trivial" || name == "quantum-plane-z3" || name == "weyl-z5" || name == "diff-poly-z5";
    for (int k = 0; k < 60; ++k) {
      const auto f = random_poly(*a, 2, rng), g = random_poly(*a, 2, rng);
      if (f.is_zero() || g.is_zero()) continue;
      const int d = a->poly_mul(f, g).degree();
      CHECK(d <= f.degree() + g.degree());
      if (domain) CHECK(d == f.degree() + g.degree());
    }
  }
}

TEST_CASE("x^alpha r has leading coefficient sigma^alpha(r)") {
  for (const auto& name : testing_util::finite_entries()) {
    CAPTURE(name);
    auto a = entry(name);
    for (const auto& alpha : monomials_up_to(a->n(), 3)) {
      // compose the maps directly: sigma_1^{a_1} o ... o sigma_n^{a_n}
      EndoMap s = EndoMap::identity(a->ring_ptr());
      for (std::size_t i = 0; i < a->n(); ++i)
        for (std::uint32_t k = 0; k < alpha[i]; ++k) s = s.compose(a->sigma(i));
      for (const auto& r : a->ring().sample()) CHECK(a->monomial_times_coeff(alpha, r).coeff(a->ring(), alpha) == s(r));
    }
  }
}

TEST_CASE("quasi-commutative products of monomials are monomials") {
  for (const auto& name : catalog_names()) {
    auto a = entry(name);
    if (!a->flags().quasi_commutative) continue;
    CAPTURE(name);
    const auto mons = monomials_up_to(a->n(), 2);
    for (const auto& u : mons)
      for (const auto& v : mons) CHECK(a->poly_mul(a->monomial(u), a->monomial(v)).num_terms() == 1);
  }
}

TEST_CASE("extended maps") {
  SUBCASE("sigma bar is coefficientwise") {
    auto s = entry("z2xz2-swap");
    CHECK(s->render(extend_sigma(*s, 0, P(s, "(1,0) + (0,1)*x1"))) == "(1,0)*x1 + (0,1)");
  }
  SUBCASE("delta bar product rule instance") {
    auto d = entry("diff-poly-z5");
    const auto t = P(d, "t"), tx = P(d, "t*x1");
    const auto lhs = extend_delta(*d, 0, d->poly_mul(t, tx));
    CHECK(d->render(lhs) == "2*t*x1");
    const auto rhs = d->add(d->poly_mul(extend_sigma(*d, 0, t), extend_delta(*d, 0, tx)), d->poly_mul(extend_delta(*d, 0, t), tx));
    CHECK(lhs == rhs);
  }
  SUBCASE("sigma bar is additive and multiplicative, delta bar is a sigma bar derivation") {
    for (const auto& name : testing_util::finite_entries()) {
      auto a = entry(name);
      if (!check_extension_hypotheses(*a).ok) continue;
      CAPTURE(name);
      const auto mons = monomials_up_to(a->n(), 2);
      const auto coeffs = a->ring().sample();
      for (std::size_t k = 0; k < a->n(); ++k)
        for (const auto& u : mons)
          for (const auto& v : mons)
            for (const auto& c : coeffs)
              for (const auto& e : coeffs) {
                const auto f = SkewPoly::term(a->ring(), c, u), g = SkewPoly::term(a->ring(), e, v);
                const auto fg = a->poly_mul(f, g);
                CHECK(extend_sigma(*a, k, a->add(f, g)) == a->add(extend_sigma(*a, k, f), extend_sigma(*a, k, g)));
                CHECK(extend_sigma(*a, k, fg) == a->poly_mul(extend_sigma(*a, k, f), extend_sigma(*a, k, g)));
                CHECK(extend_delta(*a, k, fg) ==
                      a->add(a->poly_mul(extend_sigma(*a, k, f), extend_delta(*a, k, g)), a->poly_mul(extend_delta(*a, k, f), g)));
              }
    }
  }
}

TEST_CASE("bounded searches") {
  auto c = commutative(2, 1);
  CHECK(idempotents_up_to(c, 2).size() == 2);
  CHECK(all_polys_up_to(c, 2).size() == 8);
  CHECK(bounded_right_annihilator(c, {SkewPoly{}}, 1).size() == 4);

  auto s = entry("z2xz2-swap");
  const auto ex = P(s, "(1,0)*x1");
  const auto ann = bounded_right_annihilator(s, {ex}, 1);
  CHECK(std::find(ann.begin(), ann.end(), ex) != ann.end());
}
