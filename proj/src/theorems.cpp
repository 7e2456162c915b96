#include "spbw/theorems.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "spbw/bounded.hpp"
#include "spbw/localization.hpp"
#include "spbw/report.hpp"

namespace spbw {

namespace {

using T = TheoremId;
using P = PropertyId;

struct Info {
  T id;
  const char* name;
  const char* claim;
};

const std::vector<Info>& infos() {
  static const std::vector<Info> v = {
      {T::DeltaAnnihilation, "delta-annihilation",
       "weak skew-Armendariz and ab = 0 imply sigma^alpha(a)*delta^alpha(b) = delta^alpha(a)*b = 0"},
      {T::RigidEquivalence, "rigid-equivalence", "R reduced and skew-Armendariz <=> R Sigma-rigid <=> A reduced"},
      {T::IdempotentStability, "idempotent-stability",
       "weak skew-Armendariz implies sigma_i(e) = e and delta_i(e) = 0 for every idempotent e of R"},
      {T::IdempotentsInR, "idempotents-in-r", "skew-Armendariz implies every idempotent of A lies in R"},
      {T::WeakImpliesAbelian, "weak-implies-abelian", "weak skew-Armendariz implies R Abelian"},
      {T::AbelianOfA, "abelian-of-a", "skew-Armendariz implies A Abelian"},
      {T::ExtendedDerivation, "extended-derivation",
       "coefficientwise delta_k is a coefficientwise-sigma_k-derivation of A"},
      {T::SDQuasiBaerTransfer, "sd-quasi-baer-transfer", "R (Sigma,Delta)-quasi-Baer implies A Sigma-quasi-Baer"},
      {T::QuasiBaerEquivalence, "quasi-baer-equivalence",
       "R (Sigma,Delta)-quasi-Baer <=> A Sigma-quasi-Baer <=> A (Sigma,Delta)-quasi-Baer"},
      {T::BaerTransfer, "baer-transfer", "R Baer <=> A Baer"},
      {T::PPTransfer, "pp-transfer", "R p.p. <=> A p.p."},
      {T::IfpQuasiBaerTransfer, "ifp-quasi-baer-transfer",
       "R quasi-Baer (p.q.-Baer) with IFP <=> A quasi-Baer (p.q.-Baer) with IFP"},
      {T::IdempotentDecomposition, "idempotent-decomposition",
       "R weak skew-Armendariz <=> eR and (1-e)R weak skew-Armendariz"},
      {T::LocalizationArmendariz, "localization-armendariz",
       "R weak skew-Armendariz <=> Q(R) weak skew-Armendariz"},
  };
  return v;
}

const Info& info(T t) {
  for (const auto& i : infos())
    if (i.id == t) return i;
  throw DefinitionError("unknown theorem id");
}

Statement stmt(std::string label, Truth t, std::string detail = {}, std::optional<unsigned> bound = {}) {
  return {std::move(label), t, bound, std::move(detail)};
}

template <class F>
Statement guarded(const std::string& label, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    return stmt(label, Truth::Unknown, e.what());
  }
}

// Past the search cap the bound drops until the search fits; the statement records the bound used.
Statement decide_stmt(const std::string& label, const ExtensionPtr& a, P p, unsigned D, const Limits& L) {
  for (unsigned d = D;; --d) {
    try {
      Statement s = theorem_rules::from_verdict(label, decide(a, p, d, L), *a);
      if (d < D) s.detail = "degree " + std::to_string(D) + " exceeds the search cap; " + s.detail;
      return s;
    } catch (const SearchSpaceCapExceeded& e) {
      if (d <= 1) return stmt(label, Truth::Unknown, e.what());
    } catch (const Error& e) {
      return stmt(label, Truth::Unknown, e.what());
    }
  }
}

bool presumed_true(Truth t) { return t == Truth::True || t == Truth::PresumedTrue; }
bool presumed_false(Truth t) { return t == Truth::False || t == Truth::PresumedFalse; }

Statement conj(std::string label, const std::vector<Statement>& parts) {
  for (Truth t : {Truth::False, Truth::PresumedFalse, Truth::Unknown})
    for (const auto& s : parts)
      if (s.truth == t) return stmt(std::move(label), t, s.label + ": " + s.detail, s.bound);
  std::optional<unsigned> bound;
  std::string detail;
  for (const auto& s : parts)
    if (s.truth == Truth::PresumedTrue) {
      if (s.bound) bound = bound ? std::min(*bound, *s.bound) : *s.bound;
      if (detail.empty()) detail = s.label + ": " + s.detail;
    }
  return stmt(std::move(label), bound || !detail.empty() ? Truth::PresumedTrue : Truth::True, detail, bound);
}

std::string fmt(const Ring& R, const Element& x) { return R.format(x); }

std::string fmt_set(const Ring& R, const std::vector<Element>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + R.format(xs[i]);
  return s + "}";
}

std::string alpha_str(const ExponentVector& a) { return a.size() == 1 ? std::to_string(a[0]) : a.str(); }

// ---------------------------------------------------------------- additive spans

using PolyKey = std::vector<std::pair<std::vector<std::uint32_t>, std::uint32_t>>;

PolyKey key_of(const SkewPoly& f) {
  PolyKey k;
  for (const auto& [e, c] : f.terms()) k.emplace_back(e.e, c.index());
  return k;
}

// Greedy additive generators of a finite set of polynomials.
std::vector<SkewPoly> additive_generators(const SkewExtension& a, const std::vector<SkewPoly>& xs) {
  std::set<PolyKey> span = {PolyKey{}};
  std::vector<SkewPoly> members = {SkewPoly{}}, gens;
  for (const auto& g : xs) {
    if (span.count(key_of(g))) continue;
    gens.push_back(g);
    std::vector<SkewPoly> layer = members;
    for (;;) {
      std::vector<SkewPoly> next;
      for (const auto& s : layer) next.push_back(a.add(s, g));
      if (span.count(key_of(next.front()))) break;
      for (const auto& s : next) {
        span.insert(key_of(s));
        members.push_back(s);
      }
      layer = std::move(next);
    }
  }
  return gens;
}

std::vector<Element> additive_generators(const SkewExtension& a, const std::vector<Element>& xs) {
  std::vector<SkewPoly> ps;
  for (const auto& x : xs) ps.push_back(a.constant(x));
  std::vector<Element> out;
  for (const auto& g : additive_generators(a, ps)) out.push_back(g.coeff(a.ring(), ExponentVector(a.n())));
  return out;
}

// ---------------------------------------------------------------- bounded probes on A

// Polynomials a + b*x_i with b != 0, at most 64, in (i, b, a) order.
std::vector<SkewPoly> linear_probes(const SkewExtension& a) {
  const auto elems = a.ring().sample();
  std::vector<SkewPoly> out;
  for (std::size_t i = 0; i < a.n(); ++i)
    for (const auto& b : elems) {
      if (a.ring().is_zero(b)) continue;
      for (const auto& c : elems) {
        if (out.size() == 64) return out;
        out.push_back(a.add(a.constant(c), SkewPoly::term(a.ring(), b, ExponentVector::unit(a.n(), i))));
      }
    }
  return out;
}

// The idempotent e of R with set = e*A_{<=D}, i.e. every coefficient tuple from eR.
std::optional<Element> generating_idempotent_of(const SkewExtension& a, const std::vector<SkewPoly>& set,
                                                std::size_t M) {
  const auto& R = a.ring();
  for (const auto& e : idempotents(R)) {
    const auto eR = principal_right_ideal(R, e);
    if (saturating_pow(eR.size(), M) != set.size()) continue;
    bool ok = true;
    for (const auto& g : set) {
      for (const auto& [x, c] : g.terms())
        if (!std::binary_search(eR.begin(), eR.end(), c)) {
          ok = false;
          break;
        }
      if (!ok) break;
    }
    if (ok) return e;
  }
  return std::nullopt;
}

struct ProbeSet {
  std::string what;
  std::vector<SkewPoly> F;
};

Statement probe_annihilators(const std::string& label, const ExtensionPtr& a, const std::vector<ProbeSet>& sets,
                             unsigned D, const Limits& L) {
  return guarded(label, [&] {
    as_finite(a->ring(), "annihilator probe");
    const std::size_t M = monomials_up_to(a->n(), D).size();
    for (const auto& s : sets) {
      const auto ann = bounded_right_annihilator(a, s.F, D, L);
      if (!generating_idempotent_of(*a, ann, M))
        return stmt(label, Truth::PresumedFalse,
                    s.what + ": bounded annihilator has " + std::to_string(ann.size()) +
                        " elements and is not e*A_<=" + std::to_string(D) + " for an idempotent e of R",
                    D);
    }
    return stmt(label, Truth::PresumedTrue, std::to_string(sets.size()) + " annihilators probed", D);
  });
}

// I*A for each ideal I, spanned by r*X with r in I and X of degree <= D.
std::vector<ProbeSet> ideal_probes(const SkewExtension& a, const std::vector<Ideal>& ideals, unsigned D) {
  std::vector<ProbeSet> out;
  const auto mons = monomials_up_to(a.n(), D);
  for (const auto& I : ideals) {
    ProbeSet s{"I = " + fmt_set(a.ring(), I.elements), {}};
    for (const auto& r : additive_generators(a, I.elements))
      for (const auto& X : mons) s.F.push_back(SkewPoly::term(a.ring(), r, X));
    out.push_back(std::move(s));
  }
  return out;
}

// f*A spanned by f*b*X, b over additive generators of R.
std::vector<ProbeSet> principal_probes(const SkewExtension& a, const std::vector<SkewPoly>& fs, unsigned D) {
  const auto bs = additive_generators(a, a.ring().sample());
  const auto mons = monomials_up_to(a.n(), D);
  std::vector<ProbeSet> out;
  for (const auto& f : fs) {
    ProbeSet s{"f = " + a.render(f), {}};
    for (const auto& b : bs)
      for (const auto& X : mons) s.F.push_back(a.poly_mul(f, SkewPoly::term(a.ring(), b, X)));
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<SkewPoly> element_probes(const SkewExtension& a) {
  std::vector<SkewPoly> out;
  for (const auto& r : a.ring().sample())
    if (!a.ring().is_zero(r)) out.push_back(a.constant(r));
  for (auto& f : linear_probes(a)) out.push_back(std::move(f));
  return out;
}

std::vector<ProbeSet> singleton_probes(const SkewExtension& a) {
  std::vector<ProbeSet> out;
  for (const auto& f : element_probes(a)) out.push_back({"f = " + a.render(f), {f}});
  return out;
}

// Subsets of R (all when |R| <= 8, else pairs), then linear singletons.
std::vector<ProbeSet> subset_probes(const SkewExtension& a) {
  const auto& R = a.ring();
  const auto elems = R.sample();
  std::vector<ProbeSet> out;
  auto add = [&](const std::vector<Element>& S) {
    ProbeSet s{"S = " + fmt_set(R, S), {}};
    for (const auto& x : S) s.F.push_back(a.constant(x));
    out.push_back(std::move(s));
  };
  if (elems.size() <= 8) {
    for (std::uint32_t mask = 1; mask < (1u << elems.size()); ++mask) {
      std::vector<Element> S;
      for (std::size_t i = 0; i < elems.size(); ++i)
        if (mask >> i & 1) S.push_back(elems[i]);
      add(S);
    }
  } else {
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (std::size_t j = i; j < elems.size(); ++j) add(i == j ? std::vector{elems[i]} : std::vector{elems[i], elems[j]});
  }
  for (const auto& f : linear_probes(a)) out.push_back({"S = {" + a.render(f) + "}", {f}});
  return out;
}

// f*g = 0 with f*h*g != 0 refutes IFP for A outright.
Statement ifp_probe(const std::string& label, const ExtensionPtr& a, unsigned D, const Limits& L) {
  return guarded(label, [&] {
    as_finite(a->ring(), "IFP probe");
    const auto bs = additive_generators(*a, a->ring().sample());
    const auto hs_mons = monomials_up_to(a->n(), 1);
    for (const auto& f : element_probes(*a)) {
      const auto ann = bounded_right_annihilator(a, {f}, D, L);
      for (const auto& g : additive_generators(*a, ann))
        for (const auto& b : bs)
          for (const auto& X : hs_mons) {
            const SkewPoly h = SkewPoly::term(a->ring(), b, X);
            const SkewPoly fhg = a->poly_mul(a->poly_mul(f, h), g);
            if (!fhg.is_zero())
              return stmt(label, Truth::False,
                          "f=" + a->render(f) + "; g=" + a->render(g) + "; h=" + a->render(h) +
                              "; f*g=0; f*h*g=" + a->render(fhg));
          }
    }
    return stmt(label, Truth::PresumedTrue, "right annihilators of probe elements are two-sided", D);
  });
}

// ---------------------------------------------------------------- gates

Statement bijective_gate(const SkewExtension& a) {
  return stmt("every sigma_i bijective", a.flags().bijective ? Truth::True : Truth::False);
}

Statement extension_gate(const SkewExtension& a, const Limits& L) {
  const std::string label = "sigma_i delta_j = delta_j sigma_i, delta_i delta_j = delta_j delta_i, delta_k(c) = delta_k(r) = 0";
  const auto h = check_extension_hypotheses(a, L);
  if (!h.ok) return stmt(label, Truth::False, h.failure);
  if (a.ring().is_finite()) return stmt(label, Truth::True, "checked on every element");
  return stmt(label, Truth::PresumedTrue, "checked on the ring sample");
}

std::vector<Element> idempotents_of(const Ring& R) {
  return R.is_finite() ? idempotents(R) : R.closed_form_idempotents();
}

// First idempotent moved by some sigma_i or not killed by some delta_i.
std::optional<std::string> unstable(const SkewExtension& a, const std::vector<Element>& es) {
  const auto& R = a.ring();
  for (const auto& e : es)
    for (std::size_t i = 0; i < a.n(); ++i) {
      if (a.sigma(i)(e) != e)
        return "e=" + fmt(R, e) + "; sigma_" + std::to_string(i + 1) + "(e)=" + fmt(R, a.sigma(i)(e));
      if (!R.is_zero(a.delta(i)(e)))
        return "e=" + fmt(R, e) + "; delta_" + std::to_string(i + 1) + "(e)=" + fmt(R, a.delta(i)(e));
    }
  return std::nullopt;
}

// ---------------------------------------------------------------- theorems

struct Outcome {
  std::vector<Statement> hypotheses, conclusions;
  TheoremStatus status = TheoremStatus::Inconclusive;
  std::string note;
};

Outcome implication(std::vector<Statement> gates, Statement premise, Statement conclusion) {
  Outcome o;
  o.status = theorem_rules::implication(gates, premise, conclusion);
  o.hypotheses = std::move(gates);
  o.hypotheses.push_back(std::move(premise));
  o.conclusions.push_back(std::move(conclusion));
  return o;
}

Outcome equivalence(std::vector<Statement> gates, std::optional<Statement> premise, std::vector<Statement> st) {
  Outcome o;
  o.status = theorem_rules::equivalence(gates, premise ? &*premise : nullptr, st);
  o.hypotheses = std::move(gates);
  if (premise) o.hypotheses.push_back(std::move(*premise));
  o.conclusions = std::move(st);
  return o;
}

Element delta_alpha(const SkewExtension& a, const ExponentVector& alpha, Element x, bool reversed) {
  const std::size_t n = a.n();
  for (std::size_t s = 0; s < n; ++s) {
    const std::size_t i = reversed ? s : n - 1 - s;
    for (std::uint32_t k = 0; k < alpha[i]; ++k) x = a.delta(i)(x);
  }
  return x;
}

bool deltas_commute(const SkewExtension& a, const std::vector<Element>& elems) {
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = i + 1; j < a.n(); ++j)
      for (const auto& x : elems)
        if (a.delta(i)(a.delta(j)(x)) != a.delta(j)(a.delta(i)(x))) return false;
  return true;
}

Outcome delta_annihilation(const ExtensionPtr& a, unsigned D, const Limits& L) {
  const auto& R = a->ring();
  auto premise = decide_stmt("R weak skew-Armendariz", a, P::WeakSkewArmendariz, D, L);
  const std::string label = "sigma^alpha(a)*delta^alpha(b) = delta^alpha(a)*b = 0 whenever ab = 0";
  bool all_zero = true;
  for (std::size_t i = 0; i < a->n(); ++i) all_zero = all_zero && a->delta(i).is_zero();
  if (all_zero) return implication({}, std::move(premise), stmt(label, Truth::True, "every delta_i is zero"));

  const auto elems = R.sample();
  const auto alphas = monomials_up_to(a->n(), D);
  std::vector<bool> orders = {false};
  if (a->n() > 1 && deltas_commute(*a, elems)) orders.push_back(true);
  for (const auto& x : elems)
    for (const auto& y : elems) {
      if (!R.is_zero(R.mul(x, y))) continue;
      for (const auto& al : alphas)
        for (bool rev : orders) {
          const Element p1 = R.mul(a->sigma_alpha(al, x), delta_alpha(*a, al, y, rev));
          const Element p2 = R.mul(delta_alpha(*a, al, x, rev), y);
          if (!R.is_zero(p1) || !R.is_zero(p2))
            return implication({}, std::move(premise),
                               stmt(label, Truth::False,
                                    "a=" + fmt(R, x) + "; b=" + fmt(R, y) + "; alpha=" + alpha_str(al) +
                                        "; sigma^alpha(a)*delta^alpha(b)=" + fmt(R, p1) +
                                        "; delta^alpha(a)*b=" + fmt(R, p2)));
        }
    }
  const std::string scope = R.is_finite() ? "all pairs with ab = 0" : "sampled pairs with ab = 0";
  return implication({}, std::move(premise), stmt(label, Truth::PresumedTrue, scope + ", |alpha| <= " + std::to_string(D), D));
}

Outcome rigid_equivalence(const ExtensionPtr& a, unsigned D, const Limits& L) {
  const auto& R = a->ring();
  const auto elems = R.sample();
  std::vector<Statement> gates;
  {
    const std::string label = "c_{i,j} invertible and central";
    Statement g = stmt(label, R.is_finite() || R.is_commutative() ? Truth::True : Truth::PresumedTrue);
    for (std::size_t i = 0; i < a->n() && g.truth != Truth::False; ++i)
      for (std::size_t j = i + 1; j < a->n() && g.truth != Truth::False; ++j) {
        const Element& c = a->c(i, j);
        if (!R.inverse(c)) g = stmt(label, Truth::False, "c_{" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "}=" + fmt(R, c) + " is not invertible");
        for (const auto& x : elems)
          if (g.truth != Truth::False && R.mul(c, x) != R.mul(x, c))
            g = stmt(label, Truth::False, "c=" + fmt(R, c) + " does not commute with " + fmt(R, x));
      }
    gates.push_back(std::move(g));
  }
  gates.push_back(stmt("every sigma_i injective", a->flags().sigma_injective ? Truth::True : Truth::False));

  const auto reduced = guarded("R reduced", [&] {
    return theorem_rules::from_verdict("R reduced", decide_classical(R, P::Reduced, L), *a);
  });
  auto s1 = conj("R reduced and skew-Armendariz",
                 {reduced, decide_stmt("R skew-Armendariz", a, P::SkewArmendariz, D, L)});
  auto s2 = decide_stmt("R Sigma-rigid", a, P::SigmaRigid, D, L);
  Statement s3 = guarded("A reduced", [&] {
    if (R.is_finite()) return theorem_rules::from_verdict("A reduced", is_reduced_up_to(a, D, L), *a);
    if (reduced.truth == Truth::False) return stmt("A reduced", Truth::False, "constant " + reduced.detail);
    const bool domain = R.kind() == RingKind::PolyOverField || R.kind() == RingKind::Integers;
    if (domain && a->flags().sigma_injective)
      return stmt("A reduced", Truth::True, "R is a domain and every sigma_i is injective, so A is a domain");
    return stmt("A reduced", Truth::Unknown, "no decision procedure for this ring");
  });
  return equivalence(std::move(gates), std::nullopt, {std::move(s1), std::move(s2), std::move(s3)});
}

Outcome idempotent_stability(const ExtensionPtr& a, unsigned D, const Limits& L) {
  auto premise = decide_stmt("R weak skew-Armendariz", a, P::WeakSkewArmendariz, D, L);
  const std::string label = "sigma_i(e) = e and delta_i(e) = 0 for every idempotent e";
  const auto es = idempotents_of(a->ring());
  if (auto bad = unstable(*a, es)) return implication({}, std::move(premise), stmt(label, Truth::False, *bad));
  return implication({}, std::move(premise), stmt(label, Truth::True, "idempotents " + fmt_set(a->ring(), es)));
}

Outcome idempotents_in_r(const ExtensionPtr& a, unsigned D, const Limits& L) {
  auto premise = decide_stmt("R skew-Armendariz", a, P::SkewArmendariz, D, L);
  const std::string label = "every idempotent of A lies in R";
  auto concl = guarded(label, [&] {
    const auto es = idempotents_up_to(a, D, L);
    for (const auto& e : es)
      if (e.degree() > 0) return stmt(label, Truth::False, "e=" + a->render(e) + "; e^2=e");
    return stmt(label, Truth::PresumedTrue, std::to_string(es.size()) + " idempotents up to degree " + std::to_string(D) + ", all constant", D);
  });
  return implication({}, std::move(premise), std::move(concl));
}

Outcome weak_implies_abelian(const ExtensionPtr& a, unsigned D, const Limits& L) {
  Outcome o;
  auto premise = decide_stmt("R weak skew-Armendariz", a, P::WeakSkewArmendariz, D, L);
  auto concl = guarded("R Abelian", [&] {
    return theorem_rules::from_verdict("R Abelian", decide_classical(a->ring(), P::Abelian, L), *a);
  });
  if (concl.truth == Truth::True) {
    o.status = TheoremStatus::Consistent;
  } else if (concl.truth == Truth::False && premise.truth == Truth::False) {
    o.status = TheoremStatus::Consistent;
    o.note = "contrapositive: R is not Abelian and not weak skew-Armendariz";
  } else if (concl.truth == Truth::False && premise.truth == Truth::True) {
    o.status = TheoremStatus::Violation;
  }
  o.hypotheses.push_back(std::move(premise));
  o.conclusions.push_back(std::move(concl));
  return o;
}

Outcome abelian_of_a(const ExtensionPtr& a, unsigned D, const Limits& L) {
  auto premise = decide_stmt("R skew-Armendariz", a, P::SkewArmendariz, D, L);
  const std::string label = "A Abelian";
  auto concl = guarded(label, [&] {
    const auto es = idempotents_up_to(a, D, L);
    // Commuting with R and every x_i means commuting with all of A.
    std::vector<SkewPoly> gens;
    for (const auto& r : a->ring().sample()) gens.push_back(a->constant(r));
    for (std::size_t i = 0; i < a->n(); ++i) gens.push_back(a->variable(i));
    for (const auto& e : es)
      for (const auto& g : gens) {
        const auto eg = a->poly_mul(e, g), ge = a->poly_mul(g, e);
        if (!(eg == ge))
          return stmt(label, Truth::False,
                      "e=" + a->render(e) + "; g=" + a->render(g) + "; e*g=" + a->render(eg) + "; g*e=" + a->render(ge));
      }
    return stmt(label, Truth::PresumedTrue,
                std::to_string(es.size()) + " idempotents up to degree " + std::to_string(D) + ", all central", D);
  });
  return implication({}, std::move(premise), std::move(concl));
}

Outcome extended_derivation(const ExtensionPtr& a, unsigned D, const Limits& L) {
  const auto& R = a->ring();
  auto gate = extension_gate(*a, L);
  const std::string label = "delta_k(fg) = sigma_k(f)delta_k(g) + delta_k(f)g on A";
  if (gate.truth == Truth::False)
    return implication({}, std::move(gate), stmt(label, Truth::Unknown, "not evaluated"));
  const auto elems = R.sample();
  const std::vector<Element> right(elems.begin(), elems.begin() + std::min<std::size_t>(elems.size(), R.is_finite() ? elems.size() : 25));
  const auto mons = monomials_up_to(a->n(), D);
  std::uint64_t checked = 0;
  bool all_zero = true;
  for (std::size_t k = 0; k < a->n(); ++k) {
    all_zero = all_zero && a->delta(k).is_zero();
    for (const auto& X : mons)
      for (const auto& Y : mons)
        for (const auto& x : elems)
          for (const auto& y : right) {
            const SkewPoly f = SkewPoly::term(R, x, X), g = SkewPoly::term(R, y, Y);
            const SkewPoly lhs = extend_delta(*a, k, a->poly_mul(f, g));
            const SkewPoly rhs = a->add(a->poly_mul(extend_sigma(*a, k, f), extend_delta(*a, k, g)),
                                        a->poly_mul(extend_delta(*a, k, f), g));
            ++checked;
            if (!(lhs == rhs))
              return implication({}, std::move(gate),
                                 stmt(label, Truth::False,
                                      "k=" + std::to_string(k + 1) + "; f=" + a->render(f) + "; g=" + a->render(g) +
                                          "; lhs=" + a->render(lhs) + "; rhs=" + a->render(rhs)));
          }
  }
  const std::string detail = std::to_string(checked) + " monomial pairs of degree <= " + std::to_string(D) +
                             (R.is_finite() ? " with all coefficients" : " with sampled coefficients");
  Statement concl = all_zero ? stmt(label, Truth::True, "every delta_k is zero; " + detail)
                             : stmt(label, Truth::PresumedTrue, detail, D);
  return implication({}, std::move(gate), std::move(concl));
}

Outcome sd_quasi_baer_transfer(const ExtensionPtr& a, unsigned D, const Limits& L) {
  const auto& R = a->ring();
  std::vector<Statement> gates = {bijective_gate(*a)};
  {
    const std::string label = "sigma_i(e) = e and delta_i(e) = 0 for left semicentral e";
    const auto es = R.is_finite() ? semicentral_idempotents(R, Side::Left) : R.closed_form_idempotents();
    auto bad = unstable(*a, es);
    gates.push_back(bad ? stmt(label, Truth::False, *bad) : stmt(label, Truth::True, fmt_set(R, es)));
  }
  gates.push_back(extension_gate(*a, L));
  auto premise = decide_stmt("R (Sigma,Delta)-quasi-Baer", a, P::SDQuasiBaer, D, L);
  const std::string label = "A Sigma-quasi-Baer";
  Statement concl = R.is_finite()
                        ? probe_annihilators(label, a, ideal_probes(*a, sigma_delta_ideals(*a, L), D), D, L)
                        : stmt(label, Truth::Unknown, "annihilator probes need a finite coefficient ring");
  return implication(std::move(gates), std::move(premise), std::move(concl));
}

Outcome quasi_baer_equivalence(const ExtensionPtr& a, unsigned D, const Limits& L) {
  const bool finite = a->ring().is_finite();
  std::vector<Statement> gates = {bijective_gate(*a), extension_gate(*a, L)};
  auto premise = decide_stmt("R skew-Armendariz", a, P::SkewArmendariz, D, L);
  auto s1 = decide_stmt("R (Sigma,Delta)-quasi-Baer", a, P::SDQuasiBaer, D, L);
  auto probe = [&](const std::string& label, bool with_delta) {
    if (!finite) return stmt(label, Truth::Unknown, "annihilator probes need a finite coefficient ring");
    const auto ideals = with_delta ? sigma_delta_ideals(*a, L) : sigma_ideals(*a, L);
    return probe_annihilators(label, a, ideal_probes(*a, ideals, D), D, L);
  };
  return equivalence(std::move(gates), std::move(premise),
                     {std::move(s1), probe("A Sigma-quasi-Baer", false), probe("A (Sigma,Delta)-quasi-Baer", true)});
}

Statement classical_stmt(const std::string& label, const ExtensionPtr& a, P p, const Limits& L) {
  return guarded(label, [&] { return theorem_rules::from_verdict(label, decide_classical(a->ring(), p, L), *a); });
}

Outcome baer_transfer(const ExtensionPtr& a, unsigned D, const Limits& L) {
  auto premise = decide_stmt("R skew-Armendariz", a, P::SkewArmendariz, D, L);
  auto rs = classical_stmt("R Baer", a, P::Baer, L);
  auto as = a->ring().is_finite() ? probe_annihilators("A Baer", a, subset_probes(*a), D, L)
                                  : stmt("A Baer", Truth::Unknown, "annihilator probes need a finite coefficient ring");
  return equivalence({}, std::move(premise), {std::move(rs), std::move(as)});
}

Outcome pp_transfer(const ExtensionPtr& a, unsigned D, const Limits& L) {
  auto premise = decide_stmt("R skew-Armendariz", a, P::SkewArmendariz, D, L);
  auto rs = classical_stmt("R p.p.", a, P::PP, L);
  auto as = a->ring().is_finite() ? probe_annihilators("A p.p.", a, singleton_probes(*a), D, L)
                                  : stmt("A p.p.", Truth::Unknown, "annihilator probes need a finite coefficient ring");
  return equivalence({bijective_gate(*a)}, std::move(premise), {std::move(rs), std::move(as)});
}

TheoremStatus combine(TheoremStatus x, TheoremStatus y) {
  using S = TheoremStatus;
  for (S s : {S::Violation, S::HypothesesNotMet, S::Inconclusive})
    if (x == s || y == s) return s;
  return S::Consistent;
}

Outcome ifp_quasi_baer_transfer(const ExtensionPtr& a, unsigned D, const Limits& L) {
  const bool finite = a->ring().is_finite();
  auto premise = decide_stmt("R skew-Armendariz", a, P::SkewArmendariz, D, L);
  const auto rifp = classical_stmt("R IFP", a, P::IFP, L);
  auto r_qb = conj("R quasi-Baer with IFP", {classical_stmt("R quasi-Baer", a, P::QuasiBaer, L), rifp});
  auto r_pqb = conj("R p.q.-Baer with IFP", {classical_stmt("R p.q.-Baer", a, P::PQBaer, L), rifp});
  Statement a_qb, a_pqb;
  if (finite) {
    const auto aifp = ifp_probe("A IFP", a, D, L);
    const auto ideals = enumerate_two_sided_ideals(a->ring(), L);
    a_qb = conj("A quasi-Baer with IFP",
                {probe_annihilators("A quasi-Baer", a, ideal_probes(*a, ideals, D), D, L), aifp});
    a_pqb = conj("A p.q.-Baer with IFP",
                 {probe_annihilators("A p.q.-Baer", a, principal_probes(*a, element_probes(*a), D), D, L), aifp});
  } else {
    a_qb = stmt("A quasi-Baer with IFP", Truth::Unknown, "annihilator probes need a finite coefficient ring");
    a_pqb = stmt("A p.q.-Baer with IFP", Truth::Unknown, "annihilator probes need a finite coefficient ring");
  }
  const auto s1 = theorem_rules::equivalence({}, &premise, {r_qb, a_qb});
  const auto s2 = theorem_rules::equivalence({}, &premise, {r_pqb, a_pqb});
  Outcome o;
  o.status = combine(s1, s2);
  o.hypotheses.push_back(std::move(premise));
  o.conclusions = {std::move(r_qb), std::move(a_qb), std::move(r_pqb), std::move(a_pqb)};
  return o;
}

// eR as a ring with unit e, with sigma, delta, c and r restricted. Null for e = 0.
ExtensionPtr corner(const ExtensionPtr& a, std::uint32_t e, const Limits& L) {
  const auto& R = as_finite(a->ring(), "corner ring");
  std::vector<std::uint32_t> elems = {0};
  if (e != 0) elems.push_back(e);
  for (std::uint32_t x = 0; x < R.size(); ++x) {
    const std::uint32_t y = R.mul(e, x);
    if (std::find(elems.begin(), elems.end(), y) == elems.end()) elems.push_back(y);
  }
  std::sort(elems.begin() + std::min<std::size_t>(2, elems.size()), elems.end());
  if (elems.size() == 1) return nullptr;
  const std::size_t k = elems.size();
  std::map<std::uint32_t, std::uint32_t> idx;
  for (std::uint32_t i = 0; i < k; ++i) idx[elems[i]] = i;
  RingDescriptor d;
  d.kind = RingKind::FiniteTable;
  d.size = k;
  d.add_table.assign(k, std::vector<std::uint32_t>(k));
  d.mul_table.assign(k, std::vector<std::uint32_t>(k));
  d.neg_table.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    d.neg_table[i] = idx.at(R.neg(elems[i]));
    for (std::size_t j = 0; j < k; ++j) {
      d.add_table[i][j] = idx.at(R.add(elems[i], elems[j]));
      d.mul_table[i][j] = idx.at(R.mul(elems[i], elems[j]));
    }
  }
  SkewPresentation p;
  p.ring = validate_ring(d, L);
  p.n = a->n();
  p.order = a->order();
  p.name = a->name() + " corner at " + R.format(Element(e));
  for (std::size_t i = 0; i < a->n(); ++i) {
    std::vector<std::uint32_t> st(k), dt(k);
    for (std::size_t j = 0; j < k; ++j) {
      st[j] = idx.at(a->sigma(i)(Element(elems[j])).index());
      dt[j] = idx.at(a->delta(i)(Element(elems[j])).index());
    }
    EndoMap s = EndoMap::from_table(p.ring, st, a->sigma(i).name());
    p.delta.push_back(SigmaDerivation::from_table(s, dt, a->delta(i).name()));
    p.sigma.push_back(std::move(s));
  }
  auto restrict = [&](const Element& x) { return Element(idx.at(R.mul(e, x.index()))); };
  for (std::size_t i = 0; i < a->n(); ++i)
    for (std::size_t j = i + 1; j < a->n(); ++j) {
      p.c[{i, j}] = restrict(a->c(i, j));
      std::vector<Element> rs;
      for (const auto& x : a->r(i, j)) rs.push_back(restrict(x));
      p.r[{i, j}] = std::move(rs);
    }
  return validate_presentation(std::move(p), L);
}

Statement corner_wsa(const ExtensionPtr& a, std::uint32_t e, unsigned D, const Limits& L) {
  const std::string label = "eR weak skew-Armendariz, e=" + a->ring().format(Element(e));
  return guarded(label, [&] {
    const auto c = corner(a, e, L);
    if (!c) return stmt(label, Truth::True, "zero ring");
    return theorem_rules::from_verdict(label, decide(c, P::WeakSkewArmendariz, D, L), *c);
  });
}

Outcome idempotent_decomposition(const ExtensionPtr& a, unsigned D, const Limits& L) {
  const auto& R = a->ring();
  std::vector<Statement> gates = {classical_stmt("R Abelian", a, P::Abelian, L)};
  auto s1 = decide_stmt("R weak skew-Armendariz", a, P::WeakSkewArmendariz, D, L);
  std::vector<Statement> st = {s1};
  if (!R.is_finite()) {
    st.push_back(stmt("corner rings weak skew-Armendariz", Truth::Unknown, "corner rings need a finite coefficient ring"));
    return equivalence(std::move(gates), std::nullopt, std::move(st));
  }
  const auto& F = as_finite(R, "idempotent decomposition");
  std::set<std::uint32_t> seen;
  for (const auto& e : idempotents(R)) {
    const std::uint32_t x = e.index(), y = F.add(1, F.neg(x));
    if (x <= 1 || seen.count(x)) continue;
    if (unstable(*a, {e})) continue;
    seen.insert(x);
    seen.insert(y);
    st.push_back(conj("eR and (1-e)R weak skew-Armendariz, e=" + R.format(e),
                      {corner_wsa(a, x, D, L), corner_wsa(a, y, D, L)}));
  }
  Outcome o = equivalence(std::move(gates), std::nullopt, std::move(st));
  if (o.conclusions.size() == 1) o.note = "no sigma/delta-stable idempotent other than 0 and 1";
  return o;
}

Outcome dispatch(T t, const ExtensionPtr& a, unsigned D, const Limits& L) {
  switch (t) {
    case T::DeltaAnnihilation: return delta_annihilation(a, D, L);
    case T::RigidEquivalence: return rigid_equivalence(a, D, L);
    case T::IdempotentStability: return idempotent_stability(a, D, L);
    case T::IdempotentsInR: return idempotents_in_r(a, D, L);
    case T::WeakImpliesAbelian: return weak_implies_abelian(a, D, L);
    case T::AbelianOfA: return abelian_of_a(a, D, L);
    case T::ExtendedDerivation: return extended_derivation(a, D, L);
    case T::SDQuasiBaerTransfer: return sd_quasi_baer_transfer(a, D, L);
    case T::QuasiBaerEquivalence: return quasi_baer_equivalence(a, D, L);
    case T::BaerTransfer: return baer_transfer(a, D, L);
    case T::PPTransfer: return pp_transfer(a, D, L);
    case T::IfpQuasiBaerTransfer: return ifp_quasi_baer_transfer(a, D, L);
    case T::IdempotentDecomposition: return idempotent_decomposition(a, D, L);
    case T::LocalizationArmendariz: break;
  }
  throw DefinitionError("unhandled theorem");
}

std::string violation_witness(const TheoremReport& r) {
  std::string w;
  for (const auto* list : {&r.conclusions, &r.hypotheses})
    for (const auto& s : *list)
      if (s.truth == Truth::False && !s.detail.empty()) w += (w.empty() ? "" : " | ") + s.label + ": " + s.detail;
  return w;
}

}  // namespace

const std::vector<TheoremId>& all_theorems() {
  static const std::vector<TheoremId> v = [] {
    std::vector<TheoremId> out;
    for (const auto& i : infos()) out.push_back(i.id);
    return out;
  }();
  return v;
}

std::string theorem_name(TheoremId t) { return info(t).name; }

TheoremId theorem_from_name(const std::string& s) {
  for (const auto& i : infos())
    if (s == i.name) return i.id;
  throw DefinitionError("unknown theorem '" + s + "'");
}

const char* theorem_claim(TheoremId t) { return info(t).claim; }

const char* truth_name(Truth t) {
  switch (t) {
    case Truth::True: return "true";
    case Truth::False: return "false";
    case Truth::PresumedTrue: return "presumed-true";
    case Truth::PresumedFalse: return "presumed-false";
    case Truth::Unknown: return "unknown";
  }
  return "?";
}

const char* theorem_status_name(TheoremStatus s) {
  switch (s) {
    case TheoremStatus::Consistent: return "Consistent";
    case TheoremStatus::Violation: return "Violation";
    case TheoremStatus::HypothesesNotMet: return "HypothesesNotMet";
    case TheoremStatus::Inconclusive: return "Inconclusive";
  }
  return "?";
}

namespace theorem_rules {

Statement from_verdict(std::string label, const Verdict& v, const SkewExtension& a) {
  switch (v.status) {
    case Status::Holds: return stmt(std::move(label), Truth::True);
    case Status::FailsWithWitness:
      return stmt(std::move(label), Truth::False, v.witness ? describe_witness(a, *v.witness) : std::string{});
    case Status::VerifiedUpTo:
      return stmt(std::move(label), Truth::PresumedTrue, "no counterexample up to degree " + std::to_string(*v.bound), v.bound);
  }
  return stmt(std::move(label), Truth::Unknown);
}

TheoremStatus implication(const std::vector<Statement>& gates, const Statement& premise, const Statement& conclusion) {
  using S = TheoremStatus;
  bool gates_definite = true;
  for (const auto& g : gates)
    if (g.truth == Truth::False) return S::HypothesesNotMet;
  for (const auto& g : gates) {
    if (g.truth == Truth::Unknown || g.truth == Truth::PresumedFalse) return S::Inconclusive;
    gates_definite = gates_definite && g.truth == Truth::True;
  }
  if (conclusion.truth == Truth::True) return S::Consistent;
  if (premise.truth == Truth::False) return S::HypothesesNotMet;
  if (!presumed_true(premise.truth)) return S::Inconclusive;
  if (conclusion.truth == Truth::False)
    return gates_definite && premise.truth == Truth::True ? S::Violation : S::Inconclusive;
  return conclusion.truth == Truth::PresumedTrue ? S::Consistent : S::Inconclusive;
}

TheoremStatus equivalence(const std::vector<Statement>& gates, const Statement* premise,
                          const std::vector<Statement>& statements) {
  using S = TheoremStatus;
  bool definite = true;
  for (const auto& g : gates)
    if (g.truth == Truth::False) return S::HypothesesNotMet;
  for (const auto& g : gates) {
    if (g.truth == Truth::Unknown || g.truth == Truth::PresumedFalse) return S::Inconclusive;
    definite = definite && g.truth == Truth::True;
  }
  if (premise) {
    if (premise->truth == Truth::False) return S::HypothesesNotMet;
    if (!presumed_true(premise->truth)) return S::Inconclusive;
    definite = definite && premise->truth == Truth::True;
  }
  bool any_true = false, any_false = false, any_unknown = false;
  std::size_t pos = 0, neg = 0;
  for (const auto& s : statements) {
    any_true = any_true || s.truth == Truth::True;
    any_false = any_false || s.truth == Truth::False;
    any_unknown = any_unknown || s.truth == Truth::Unknown;
    pos += presumed_true(s.truth);
    neg += presumed_false(s.truth);
  }
  if (any_true && any_false) return definite ? S::Violation : S::Inconclusive;
  if (any_unknown) return S::Inconclusive;
  return pos == statements.size() || neg == statements.size() ? S::Consistent : S::Inconclusive;
}

}  // namespace theorem_rules

std::string describe_instance(const SkewExtension& a) {
  return (a.name().empty() ? std::string("(unnamed)") : a.name()) + ": R = " + a.ring().descriptor().describe() +
         ", n = " + std::to_string(a.n());
}

TheoremReport verify(TheoremId t, const ExtensionPtr& a, unsigned D, const Limits& limits) {
  if (t == TheoremId::LocalizationArmendariz) return verify_localization(a, D, limits);
  TheoremReport r;
  r.id = t;
  r.instance = describe_instance(*a);
  r.degree = D;
  try {
    Outcome o = dispatch(t, a, D, limits);
    r.hypotheses = std::move(o.hypotheses);
    r.conclusions = std::move(o.conclusions);
    r.status = o.status;
    r.note = std::move(o.note);
  } catch (const Error& e) {
    r.status = TheoremStatus::Inconclusive;
    r.note = e.what();
  }
  if (r.status == TheoremStatus::Violation) r.witness = violation_witness(r);
  if (r.status == TheoremStatus::HypothesesNotMet && r.note.empty())
    for (const auto& s : r.hypotheses)
      if (r.note.empty() && s.truth == Truth::False)
        r.note = s.label + " is false" + (s.detail.empty() ? "" : " (" + s.detail + ")");
  if (r.status == TheoremStatus::Inconclusive && r.note.empty()) {
    for (const auto* list : {&r.hypotheses, &r.conclusions})
      for (const auto& s : *list)
        if (r.note.empty() && (s.truth == Truth::Unknown || s.truth == Truth::PresumedFalse))
          r.note = s.label + " is " + truth_name(s.truth) + (s.detail.empty() ? "" : " (" + s.detail + ")");
    if (r.note.empty()) r.note = "bounded verdicts cannot settle the claim";
  }
  return r;
}

std::vector<TheoremReport> run_all(const ExtensionPtr& a, unsigned D, const Limits& limits) {
  std::vector<TheoremReport> out;
  for (TheoremId t : all_theorems()) out.push_back(verify(t, a, D, limits));
  return out;
}

SuiteCounts count_statuses(const std::vector<TheoremReport>& reports) {
  SuiteCounts c;
  for (const auto& r : reports) switch (r.status) {
      case TheoremStatus::Consistent: ++c.consistent; break;
      case TheoremStatus::Violation: ++c.violation; break;
      case TheoremStatus::HypothesesNotMet: ++c.hypotheses_not_met; break;
      case TheoremStatus::Inconclusive: ++c.inconclusive; break;
    }
  return c;
}

}  // namespace spbw
