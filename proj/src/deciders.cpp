#include "spbw/deciders.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "spbw/bounded.hpp"

namespace spbw {

namespace {

constexpr std::size_t kPowerCycleCap = 4096;
constexpr std::size_t kAlphaBoxCap = 1000000;

// Distinct powers id, σ, σ², ... of one map until the first repeat (or the cap for structured rings).
std::size_t power_count(const EndoMap& s, std::size_t cap, bool& cycled) {
  std::set<std::vector<Element>> seen;
  EndoMap cur = EndoMap::identity(s.ring());
  cycled = false;
  for (std::size_t k = 0; k < cap; ++k) {
    if (!seen.insert(cur.signature()).second) {
      cycled = true;
      return k;
    }
    cur = s.compose(cur);
  }
  return cap;
}

PairConclusion conclusion_of(PropertyId p) {
  switch (p) {
    case PropertyId::SDArmendariz:
    case PropertyId::SDWeakArmendariz: return PairConclusion::MonomialProducts;
    case PropertyId::SigmaSkewArmendariz:
    case PropertyId::WeakSigmaSkewArmendariz: return PairConclusion::SigmaPowers;
    default: return PairConclusion::ConstantTimesAll;
  }
}

Verdict decide_rigid(const SkewExtension& A, const Limits& limits) {
  const auto& R = A.ring();
  const SigmaPowers sp = sigma_powers(A, limits);
  std::uint64_t n = 0;
  for (const auto& r : R.sample()) {
    if (R.is_zero(r)) continue;
    for (const auto& alpha : sp.alphas) {
      ++n;
      if (R.is_zero(R.mul(r, A.sigma_alpha(alpha, r))))
        return Verdict::fails({PropertyId::SigmaRigid, RigidWitness{r, alpha}}, n);
    }
  }
  if (sp.exact && R.is_finite()) return Verdict::holds(PropertyId::SigmaRigid, n);
  // In a domain r·σ^α(r) = 0 forces r = 0 once every σ_i is injective.
  const bool domain = R.kind() == RingKind::PolyOverField || R.kind() == RingKind::Integers;
  bool injective = true;
  for (std::size_t i = 0; i < A.n(); ++i) injective = injective && A.sigma(i).declared_bijective();
  if (domain && injective) return Verdict::holds(PropertyId::SigmaRigid, n);
  unsigned bound = 0;
  for (const auto& a : sp.alphas) bound = std::max(bound, a.degree());
  return Verdict::verified_up_to(PropertyId::SigmaRigid, bound, n);
}

Verdict decide_pairs(const ExtensionPtr& a, PropertyId p, unsigned D, const Limits& limits) {
  const bool weak = is_weak(p);
  BoundedSpace space(a, monomials_up_to(a->n(), weak ? 1 : D));
  const PairSearchResult res = search_pairs(space, conclusion_of(p), limits);
  if (res.hit) {
    const auto& h = *res.hit;
    PairWitness w;
    w.f = space.to_poly(h.f);
    w.g = space.to_poly(h.g);
    w.left = space.support()[h.i];
    w.right = space.support()[h.j];
    const auto& R = space.ring();
    switch (conclusion_of(p)) {
      case PairConclusion::ConstantTimesAll:
        w.product = a->constant(R.mul(Element(h.f[h.i]), Element(h.g[h.j])));
        break;
      case PairConclusion::SigmaPowers:
        w.product = a->constant(R.mul(Element(h.f[h.i]), a->sigma_alpha(w.left, Element(h.g[h.j]))));
        break;
      case PairConclusion::MonomialProducts:
        w.product = poly_scale(R, Element(h.f[h.i]), space.dense_to_poly(space.entry(h.i, h.g[h.j], h.j)));
        break;
    }
    return Verdict::fails({p, std::move(w)}, res.examined);
  }
  if (weak) return Verdict::holds(p, res.examined);
  return Verdict::verified_up_to(p, D, res.examined);
}

bool ideal_stable(const SkewExtension& A, const Ideal& I, bool with_delta) {
  for (std::size_t i = 0; i < A.n(); ++i) {
    std::set<Element> image;
    for (const auto& x : I.elements) {
      image.insert(A.sigma(i)(x));
      if (with_delta && !I.contains(A.delta(i)(x))) return false;
    }
    if (image != std::set<Element>(I.elements.begin(), I.elements.end())) return false;
  }
  return true;
}

Verdict decide_sd_quasi_baer(const SkewExtension& A, const Limits& limits) {
  const auto& R = as_finite(A.ring(), "sd-quasi-baer");
  std::uint64_t n = 0;
  for (const auto& I : sigma_delta_ideals(A, limits)) {
    ++n;
    auto ann = right_annihilator(R, I.elements);
    if (!generating_idempotent(R, ann))
      return Verdict::fails({PropertyId::SDQuasiBaer, AnnihilatorWitness{I.elements, ann}}, n);
  }
  return Verdict::holds(PropertyId::SDQuasiBaer, n);
}

}  // namespace

SigmaPowers sigma_powers(const SkewExtension& A, const Limits& limits) {
  const std::size_t n = A.n();
  const bool finite = A.ring().is_finite();
  std::vector<std::size_t> counts(n);
  bool exact = true;
  for (std::size_t i = 0; i < n; ++i) {
    bool cycled = false;
    const std::size_t cap = finite ? kPowerCycleCap : limits.alpha_cap + 1;
    counts[i] = power_count(A.sigma(i), cap, cycled);
    if (!cycled) {
      if (finite) throw SizeCapExceeded("sigma power cycle longer than " + std::to_string(kPowerCycleCap));
      exact = false;
    }
  }
  std::uint64_t box = 1;
  for (auto c : counts) box *= c;
  if (box > kAlphaBoxCap) throw SizeCapExceeded("too many sigma^alpha maps to enumerate");
  SigmaPowers out;
  out.exact = exact;
  ExponentVector cur(n);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      if (exact || cur.degree() <= limits.alpha_cap) out.alphas.push_back(cur);
      return;
    }
    for (std::uint32_t k = 0; k < counts[i]; ++k) {
      cur.e[i] = k;
      self(self, i + 1);
    }
    cur.e[i] = 0;
  };
  rec(rec, 0);
  std::sort(out.alphas.begin(), out.alphas.end(), DegLexLess{});
  return out;
}

std::vector<Ideal> sigma_delta_ideals(const SkewExtension& A, const Limits& limits) {
  std::vector<Ideal> out;
  for (auto& I : enumerate_two_sided_ideals(A.ring(), limits))
    if (ideal_stable(A, I, true)) out.push_back(std::move(I));
  return out;
}

std::vector<Ideal> sigma_ideals(const SkewExtension& A, const Limits& limits) {
  std::vector<Ideal> out;
  for (auto& I : enumerate_two_sided_ideals(A.ring(), limits))
    if (ideal_stable(A, I, false)) out.push_back(std::move(I));
  return out;
}

Verdict decide(const ExtensionPtr& a, PropertyId property, unsigned D, const Limits& limits) {
  if (is_classical(property)) return decide_classical(a->ring(), property, limits);
  switch (property) {
    case PropertyId::SigmaRigid: return decide_rigid(*a, limits);
    case PropertyId::SDQuasiBaer: return decide_sd_quasi_baer(*a, limits);
    default: break;
  }
  if (!a->ring().is_finite())
    throw UnsupportedInfinite(property_name(property) + " search needs a finite coefficient ring");
  if (D < 1 && !is_weak(property)) throw DefinitionError("degree bound must be at least 1");
  return decide_pairs(a, property, D, limits);
}

Verdict is_reduced_up_to(const ExtensionPtr& a, unsigned D, const Limits& limits) {
  BoundedSpace space(a, monomials_up_to(a->n(), D));
  const auto res = search_square_zero(space, true, limits);
  if (!res.hits.empty())
    return Verdict::fails({PropertyId::Reduced, PolyNilpotentWitness{space.to_poly(res.hits.front())}}, res.examined);
  return Verdict::verified_up_to(PropertyId::Reduced, D, res.examined);
}

// ---------------------------------------------------------------- implication report

const std::vector<std::pair<PropertyId, PropertyId>>& implication_edges() {
  using P = PropertyId;
  static const std::vector<std::pair<P, P>> edges = {
      {P::SigmaRigid, P::SDArmendariz},
      {P::SDArmendariz, P::SigmaSkewArmendariz},
      {P::SigmaSkewArmendariz, P::SkewArmendariz},
      {P::SDWeakArmendariz, P::WeakSigmaSkewArmendariz},
      {P::WeakSigmaSkewArmendariz, P::WeakSkewArmendariz},
      {P::SDArmendariz, P::SDWeakArmendariz},
      {P::SigmaSkewArmendariz, P::WeakSigmaSkewArmendariz},
      {P::SkewArmendariz, P::WeakSkewArmendariz},
      {P::Baer, P::QuasiBaer},
      {P::Baer, P::PP},
      {P::QuasiBaer, P::PQBaer},
      {P::PP, P::PQBaer},
      {P::Reduced, P::Abelian},
      {P::Reduced, P::IFP},
  };
  return edges;
}

std::size_t ImplicationReport::inconsistent_count() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const auto& r) { return r.inconsistent; }));
}

const PropertyOutcome& ImplicationReport::outcome(PropertyId p) const {
  for (const auto& o : outcomes)
    if (o.property == p) return o;
  throw DefinitionError("no outcome for " + property_name(p));
}

namespace {

int witness_degree(const Verdict& v) {
  if (!v.witness) return -1;
  if (auto* pw = std::get_if<PairWitness>(&v.witness->data)) return std::max(pw->f.degree(), pw->g.degree());
  return 0;
}

// Pairs where a witness of the weaker property is itself a witness of the stronger one.
bool witness_transfers(PropertyId stronger, PropertyId weaker) {
  using P = PropertyId;
  return (stronger == P::SDArmendariz && weaker == P::SDWeakArmendariz) ||
         (stronger == P::SigmaSkewArmendariz && weaker == P::WeakSigmaSkewArmendariz) ||
         (stronger == P::SkewArmendariz && weaker == P::WeakSkewArmendariz) ||
         (stronger == P::SigmaSkewArmendariz && weaker == P::SkewArmendariz);
}

}  // namespace

ImplicationReport implication_report(const ExtensionPtr& a, unsigned D, const Limits& limits) {
  ImplicationReport rep;
  for (auto p : all_properties()) {
    PropertyOutcome o{p, std::nullopt, {}};
    try {
      o.verdict = decide(a, p, D, limits);
    } catch (const Error& e) {
      o.error = e.what();
    }
    rep.outcomes.push_back(std::move(o));
  }
  for (const auto& [s, w] : implication_edges()) {
    ImplicationRow row{s, w, false, {}};
    const auto& os = rep.outcome(s);
    const auto& ow = rep.outcome(w);
    if (!os.verdict || !ow.verdict) {
      row.note = "not decided";
    } else if (ow.verdict->fails() && os.verdict->status == Status::Holds) {
      row.inconsistent = true;
      row.note = "stronger holds exactly, weaker fails";
    } else if (ow.verdict->fails() && os.verdict->status == Status::VerifiedUpTo && witness_transfers(s, w) &&
               witness_degree(*ow.verdict) <= static_cast<int>(*os.verdict->bound)) {
      row.inconsistent = true;
      row.note = "weaker witness lies inside the stronger property's verified bound";
    } else if (os.verdict->fails()) {
      row.note = "stronger fails";
    } else {
      row.note = "consistent";
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace spbw
