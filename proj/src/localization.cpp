#include "spbw/localization.hpp"

#include <algorithm>
#include <set>

namespace spbw {

namespace {

bool structured_commutative(const Ring& R) {
  switch (R.kind()) {
    case RingKind::Integers:
    case RingKind::PolyOverField:
    case RingKind::StructuredMatrixZQ:
      return true;
    default:
      return false;
  }
}

// ---------------------------------------------------------------- Z_p[t] division

PolyZp poly_of(const Element& x) { return std::get<PolyZp>(x.v); }

// (quotient, remainder) of f by a nonzero g.
std::pair<PolyZp, PolyZp> divmod(const PolyZpRing& R, PolyZp f, const PolyZp& g) {
  const std::uint32_t p = R.p();
  const std::uint32_t lead_inv = R.inv_mod(g.c.back());
  PolyZp q;
  if (f.c.size() >= g.c.size()) q.c.assign(f.c.size() - g.c.size() + 1, 0);
  while (!f.c.empty() && f.c.size() >= g.c.size()) {
    const std::size_t shift = f.c.size() - g.c.size();
    const std::uint32_t k = static_cast<std::uint32_t>(std::uint64_t{f.c.back()} * lead_inv % p);
    q.c[shift] = k;
    for (std::size_t i = 0; i < g.c.size(); ++i)
      f.c[shift + i] = static_cast<std::uint32_t>((f.c[shift + i] + std::uint64_t{p - k} * g.c[i]) % p);
    f = PolyZpRing::trim(std::move(f));
  }
  return {PolyZpRing::trim(std::move(q)), std::move(f)};
}

PolyZp poly_gcd(const PolyZpRing& R, PolyZp a, PolyZp b) {
  while (!b.c.empty()) {
    auto r = divmod(R, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// ---------------------------------------------------------------- canonical fractions

Fraction canonical_integers(const Fraction& x) {
  BigInt a = std::get<BigInt>(x.num.v), s = std::get<BigInt>(x.den.v);
  if (a == 0) return {Element(BigInt(0)), Element(BigInt(1))};
  const BigInt g = boost::multiprecision::gcd(a, s);
  a /= g;
  s /= g;
  if (s < 0) {
    a = -a;
    s = -s;
  }
  return {Element(a), Element(s)};
}

Fraction canonical_poly(const PolyZpRing& R, const Fraction& x) {
  PolyZp a = poly_of(x.num), s = poly_of(x.den);
  if (a.c.empty()) return {R.zero(), R.one()};
  const PolyZp g = poly_gcd(R, a, s);
  a = divmod(R, a, g).first;
  s = divmod(R, s, g).first;
  const std::uint32_t k = R.inv_mod(s.c.back());
  PolyZp kk;
  kk.c = {k};
  return {R.mul(Element(a), Element(kk)), R.mul(Element(s), Element(kk))};
}

// (a,t)/(b,u) is (q, r) over Q with q = a/b and r = (tb - au)/b^2; the denominator is (d, 0)
// with d the positive denominator of q.
Fraction canonical_matzq(const Fraction& x) {
  const auto& n = std::get<MatZQ>(x.num.v);
  const auto& s = std::get<MatZQ>(x.den.v);
  const Rational b(s.a);
  const Rational q = Rational(n.a) / b;
  const Rational r = (n.t * b - Rational(n.a) * s.t) / (b * b);
  const BigInt d = boost::multiprecision::denominator(q);
  const Rational dq(d);
  return {Element(MatZQ{boost::multiprecision::numerator(q), Rational(r * dq)}), Element(MatZQ{d, Rational(0)})};
}

}  // namespace

// ---------------------------------------------------------------- regular elements

bool is_regular(const Ring& R, const Element& a) {
  if (R.is_finite()) {
    for (const auto& x : R.sample())
      if (!R.is_zero(x) && (R.is_zero(R.mul(a, x)) || R.is_zero(R.mul(x, a)))) return false;
    return !R.is_zero(a);
  }
  switch (R.kind()) {
    case RingKind::Integers:
    case RingKind::PolyOverField:
      return !R.is_zero(a);
    case RingKind::StructuredMatrixZQ:
      return std::get<MatZQ>(a.v).a != 0;
    default:
      throw UnsupportedInfinite("regular elements of " + R.descriptor().describe());
  }
}

std::vector<Element> regular_elements(const Ring& R) {
  as_finite(R, "regular_elements");
  std::vector<Element> out;
  for (const auto& x : R.sample())
    if (is_regular(R, x)) out.push_back(x);
  return out;
}

MultiplicativeSet multiplicative_set(const Ring& R, std::vector<Element> elements) {
  as_finite(R, "multiplicative_set");
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  MultiplicativeSet S;
  S.ring_id = R.id();
  S.exhaustive = true;
  S.elements = elements;
  auto members = std::make_shared<std::set<Element>>(elements.begin(), elements.end());
  S.contains = [members](const Element& x) { return members->count(x) > 0; };
  S.contains_one = members->count(R.one()) > 0;
  S.excludes_zero = members->count(R.zero()) == 0;
  S.closed_under_product = true;
  for (const auto& x : elements)
    for (const auto& y : elements) S.closed_under_product = S.closed_under_product && members->count(R.mul(x, y));
  S.subset_of_regular = std::all_of(elements.begin(), elements.end(), [&](const Element& x) { return is_regular(R, x); });
  return S;
}

MultiplicativeSet regular_set(const Ring& R) {
  if (R.is_finite()) return multiplicative_set(R, regular_elements(R));
  if (!structured_commutative(R)) throw UnsupportedInfinite("regular elements of " + R.descriptor().describe());
  MultiplicativeSet S;
  S.ring_id = R.id();
  const Ring* rp = &R;
  S.contains = [rp](const Element& x) { return is_regular(*rp, x); };
  for (const auto& x : R.sample())
    if (is_regular(R, x)) S.elements.push_back(x);
  S.contains_one = is_regular(R, R.one());
  S.excludes_zero = !is_regular(R, R.zero());
  S.closed_under_product = true;
  for (const auto& x : S.elements)
    for (const auto& y : S.elements) S.closed_under_product = S.closed_under_product && is_regular(R, R.mul(x, y));
  S.subset_of_regular = true;
  return S;
}

OreCheck check_ore(const Ring& R, const MultiplicativeSet& S, OreSide side) {
  if (R.is_commutative()) return {};  // s' = s, a' = a
  as_finite(R, "check_ore");
  const auto elems = R.sample();
  for (const auto& a : elems)
    for (const auto& s : S.elements) {
      bool found = false;
      for (const auto& s2 : S.elements) {
        for (const auto& a2 : elems) {
          found = side == OreSide::Left ? R.mul(s2, a) == R.mul(a2, s) : R.mul(a, s2) == R.mul(s, a2);
          if (found) break;
        }
        if (found) break;
      }
      if (!found) return {false, std::make_pair(a, s)};
    }
  return {};
}

// ---------------------------------------------------------------- fraction ring

FractionRingPtr FractionRing::localize(RingPtr base, MultiplicativeSet S) {
  const Ring& R = *base;
  if (!S.valid()) throw DenominatorNotRegular("the denominator set is not multiplicative");
  if (R.is_finite()) {
    for (const auto& s : S.elements)
      if (!is_regular(R, s)) throw DenominatorNotRegular(R.format(s) + " is a zero-divisor");
    const auto ore = check_ore(R, S, OreSide::Left);
    if (!ore.holds)
      throw NotOre("no s', a' with s'a = a's for a=" + R.format(ore.witness->first) +
                   ", s=" + R.format(ore.witness->second));
  } else if (!structured_commutative(R)) {
    throw UnsupportedInfinite("localization of " + R.descriptor().describe());
  } else if (!S.subset_of_regular) {
    throw DenominatorNotRegular("the denominator set contains zero-divisors");
  }
  return FractionRingPtr(new FractionRing(std::move(base), std::move(S)));
}

// A regular element of a finite ring is a unit: left multiplication by it is injective.
Element FractionRing::s_inverse_times(const Element& s, const Element& a) const {
  const auto inv = base_->inverse(s);
  if (!inv) throw DenominatorNotRegular(base_->format(s) + " has no inverse");
  return base_->mul(*inv, a);
}

Fraction FractionRing::make(const Element& a, const Element& s) const {
  base_->check(a);
  base_->check(s);
  if (!S_.contains(s)) throw DenominatorNotRegular(base_->format(s) + " is not in the denominator set");
  return canonical({a, s});
}

Fraction FractionRing::canonical(const Fraction& x) const {
  const Ring& R = *base_;
  if (R.is_finite()) return {s_inverse_times(x.den, x.num), R.one()};
  switch (R.kind()) {
    case RingKind::Integers: return canonical_integers(x);
    case RingKind::PolyOverField: return canonical_poly(static_cast<const PolyZpRing&>(R), x);
    case RingKind::StructuredMatrixZQ: return canonical_matzq(x);
    default: throw UnsupportedInfinite("fractions over " + R.descriptor().describe());
  }
}

Fraction FractionRing::add(const Fraction& x, const Fraction& y) const {
  const Ring& R = *base_;
  if (R.is_finite()) return {R.add(canonical(x).num, canonical(y).num), R.one()};
  return canonical({R.add(R.mul(x.num, y.den), R.mul(y.num, x.den)), R.mul(x.den, y.den)});
}

Fraction FractionRing::neg(const Fraction& x) const { return canonical({base_->neg(x.num), x.den}); }

Fraction FractionRing::mul(const Fraction& x, const Fraction& y) const {
  const Ring& R = *base_;
  if (R.is_finite()) return {R.mul(canonical(x).num, canonical(y).num), R.one()};
  return canonical({R.mul(x.num, y.num), R.mul(x.den, y.den)});
}

bool FractionRing::equivalent(const Fraction& x, const Fraction& y) const {
  const Ring& R = *base_;
  if (R.is_finite()) return canonical(x) == canonical(y);
  return R.mul(x.num, y.den) == R.mul(y.num, x.den);
}

std::string FractionRing::format(const Fraction& x) const {
  if (base_->is_one(x.den)) return base_->format(x.num);
  return base_->format(x.num) + "/" + base_->format(x.den);
}

std::vector<Fraction> FractionRing::sample(std::size_t per_side) const {
  auto nums = base_->sample();
  auto dens = S_.elements;
  if (!base_->is_finite()) {
    nums.resize(std::min(nums.size(), per_side));
    dens.resize(std::min(dens.size(), per_side));
  }
  std::vector<Fraction> out;
  for (const auto& s : dens)
    for (const auto& a : nums) out.push_back({a, s});
  return out;
}

bool FractionRing::verify_isomorphism() const {
  const Ring& R = *base_;
  as_finite(R, "verify_isomorphism");
  const auto elems = R.sample();
  std::set<Element> images;
  for (const auto& a : elems) images.insert(embed(a).num);
  if (images.size() != elems.size()) return false;
  // every fraction is the image of an element
  for (const auto& x : sample())
    if (!images.count(canonical(x).num)) return false;
  for (const auto& a : elems)
    for (const auto& b : elems) {
      if (!(embed(R.add(a, b)) == add(embed(a), embed(b)))) return false;
      if (!(embed(R.mul(a, b)) == mul(embed(a), embed(b)))) return false;
    }
  return true;
}

// ---------------------------------------------------------------- extended maps

Fraction ExtendedMapOnFractions::apply_sigma(const Fraction& x) const {
  return Q->make(sigma(x.num), sigma(x.den));
}

Fraction ExtendedMapOnFractions::apply_delta(const Fraction& x) const {
  const Ring& R = Q->base();
  const Element ss = sigma(x.den);
  return Q->add(Q->mul(Q->make(R.neg(delta(x.den)), ss), Q->canonical(x)), Q->make(delta(x.num), ss));
}

ExtendedMapOnFractions extend_maps_to_fractions(const EndoMap& sigma, const SigmaDerivation& delta, FractionRingPtr Q) {
  const Ring& R = Q->base();
  const auto& S = Q->denominators();
  std::set<Element> image;
  for (const auto& s : S.elements) {
    const Element t = sigma(s);
    if (!S.contains(t))
      throw SigmaDoesNotPreserveS(sigma.name() + " maps " + R.format(s) + " to " + R.format(t) + ", outside S");
    image.insert(t);
  }
  if (S.exhaustive && image.size() != S.elements.size())
    throw SigmaDoesNotPreserveS(sigma.name() + " maps S onto a proper subset of S");
  return {std::move(Q), sigma, delta};
}

std::optional<std::string> check_extended_maps(const ExtendedMapOnFractions& m) {
  const auto& Q = *m.Q;
  const Ring& R = Q.base();
  const auto xs = Q.sample(6);
  auto show = [&](const Fraction& x) { return Q.format(x); };
  for (const auto& a : R.sample()) {
    if (!(m.apply_delta(Q.embed(a)) == Q.embed(m.delta(a)))) return "delta(a/1) != delta(a) at a=" + R.format(a);
    if (!(m.apply_sigma(Q.embed(a)) == Q.embed(m.sigma(a)))) return "sigma(a/1) != sigma(a) at a=" + R.format(a);
  }
  for (const auto& x : xs) {
    for (const auto& u : Q.denominators().elements) {
      // u*a/(u*s) represents the same fraction when R is commutative or u is central
      const Fraction y{R.mul(u, x.num), R.mul(u, x.den)};
      if (!R.is_commutative() || !Q.equivalent(x, y)) continue;
      if (!(m.apply_sigma(x) == m.apply_sigma(y)) || !(m.apply_delta(x) == m.apply_delta(y)))
        return "extended maps depend on the representative of " + show(x);
      break;
    }
    for (const auto& y : xs) {
      const Fraction s = Q.add(x, y), p = Q.mul(x, y);
      if (!(m.apply_sigma(s) == Q.add(m.apply_sigma(x), m.apply_sigma(y))))
        return "sigma not additive at " + show(x) + ", " + show(y);
      if (!(m.apply_sigma(p) == Q.mul(m.apply_sigma(x), m.apply_sigma(y))))
        return "sigma not multiplicative at " + show(x) + ", " + show(y);
      if (!(m.apply_delta(s) == Q.add(m.apply_delta(x), m.apply_delta(y))))
        return "delta not additive at " + show(x) + ", " + show(y);
      const Fraction rhs = Q.add(Q.mul(m.apply_sigma(x), m.apply_delta(y)), Q.mul(m.apply_delta(x), Q.canonical(y)));
      if (!(m.apply_delta(p) == rhs)) return "derivation rule fails at " + show(x) + ", " + show(y);
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- theorem

TheoremReport verify_localization(const ExtensionPtr& a, unsigned D, const Limits& limits) {
  TheoremReport r;
  r.id = TheoremId::LocalizationArmendariz;
  r.instance = describe_instance(*a);
  r.degree = D;
  const Ring& R = a->ring();
  try {
    std::vector<Statement> gates;
    gates.push_back({"every sigma_i bijective", a->flags().bijective ? Truth::True : Truth::False, {}, {}});
    const auto Q = FractionRing::localize(a->ring_ptr(), regular_set(R));
    if (R.is_finite()) {
      const bool iso = Q->verify_isomorphism();
      gates.push_back({"Q(R) isomorphic to R elementwise", iso ? Truth::True : Truth::False, {},
                       std::to_string(Q->denominators().elements.size()) + " regular elements, all units"});
    } else {
      gates.push_back({"Q(R) exists", Truth::True, {}, "commutative ring, fractions over the regular elements"});
    }
    {
      Statement g{"sigma_i(S) = S and the extended maps are well defined", R.is_finite() ? Truth::True : Truth::PresumedTrue,
                  {}, R.is_finite() ? "checked on every fraction" : "checked on sampled fractions"};
      try {
        for (std::size_t i = 0; i < a->n() && g.truth != Truth::False; ++i) {
          const auto m = extend_maps_to_fractions(a->sigma(i), a->delta(i), Q);
          if (auto bad = check_extended_maps(m)) g = {g.label, Truth::False, {}, "i=" + std::to_string(i + 1) + ": " + *bad};
        }
      } catch (const SigmaDoesNotPreserveS& e) {
        g = {g.label, Truth::False, {}, e.what()};
      }
      gates.push_back(std::move(g));
    }
    auto side = [&](const std::string& label) {
      try {
        return theorem_rules::from_verdict(label, decide(a, PropertyId::WeakSkewArmendariz, D, limits), *a);
      } catch (const Error& e) {
        return Statement{label, Truth::Unknown, {}, e.what()};
      }
    };
    std::vector<Statement> st = {side("R weak skew-Armendariz")};
    if (R.is_finite()) {
      // Q(R) = R, so the extension over Q(R) is the same presentation.
      Statement q = side("Q(R) weak skew-Armendariz");
      q.detail = "decided on the presentation transported along Q(R) = R" + (q.detail.empty() ? "" : "; " + q.detail);
      st.push_back(std::move(q));
    } else {
      st.push_back({"Q(R) weak skew-Armendariz", Truth::Unknown, {}, "no decision procedure over the fraction ring"});
    }
    r.status = theorem_rules::equivalence(gates, nullptr, st);
    r.hypotheses = std::move(gates);
    r.conclusions = std::move(st);
  } catch (const Error& e) {
    r.status = TheoremStatus::Inconclusive;
    r.note = e.what();
  }
  if (r.status == TheoremStatus::HypothesesNotMet)
    for (const auto& s : r.hypotheses)
      if (r.note.empty() && s.truth == Truth::False)
        r.note = s.label + " is false" + (s.detail.empty() ? "" : " (" + s.detail + ")");
  if (r.status == TheoremStatus::Inconclusive && r.note.empty()) {
    for (const auto* list : {&r.hypotheses, &r.conclusions})
      for (const auto& s : *list)
        if (r.note.empty() && s.truth == Truth::Unknown) r.note = s.label + " is unknown (" + s.detail + ")";
  }
  return r;
}

}  // namespace spbw
