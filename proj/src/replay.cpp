#include "spbw/replay.hpp"

#include <algorithm>
#include <set>

namespace spbw {

namespace {

std::set<Element> as_set(const std::vector<Element>& v) { return {v.begin(), v.end()}; }

std::set<Element> right_ann(const Ring& R, const std::set<Element>& S) {
  std::set<Element> out;
  for (const auto& x : R.sample()) {
    bool ok = true;
    for (const auto& s : S) ok = ok && R.is_zero(R.mul(s, x));
    if (ok) out.insert(x);
  }
  return out;
}

bool is_eR(const Ring& R, const std::set<Element>& T) {
  const auto all = R.sample();
  for (const auto& e : all) {
    if (R.mul(e, e) != e) continue;
    std::set<Element> eR;
    for (const auto& x : all) eR.insert(R.mul(e, x));
    if (eR == T) return true;
  }
  return false;
}

bool is_two_sided_ideal(const Ring& R, const std::set<Element>& I) {
  if (!I.count(R.zero())) return false;
  const auto all = R.sample();
  for (const auto& a : I) {
    for (const auto& b : I)
      if (!I.count(R.add(a, b))) return false;
    for (const auto& x : all)
      if (!I.count(R.mul(x, a)) || !I.count(R.mul(a, x))) return false;
  }
  return true;
}

// The annihilator witness kinds differ only in which sets they range over.
bool replay_annihilator(const Ring& R, PropertyId p, const AnnihilatorWitness& w) {
  if (!R.is_finite()) return false;
  const auto S = as_set(w.subset);
  if (S.empty()) return false;
  switch (p) {
    case PropertyId::Baer: break;
    case PropertyId::PP:
      if (S.size() != 1) return false;
      break;
    case PropertyId::PQBaer: {
      bool principal = false;
      for (const auto& a : R.sample()) {
        std::set<Element> aR;
        for (const auto& x : R.sample()) aR.insert(R.mul(a, x));
        principal = principal || aR == S;
      }
      if (!principal) return false;
      break;
    }
    case PropertyId::QuasiBaer:
    case PropertyId::SDQuasiBaer:
      if (!is_two_sided_ideal(R, S)) return false;
      break;
    default: return false;
  }
  const auto ann = right_ann(R, S);
  return ann == as_set(w.annihilator) && !is_eR(R, ann);
}

// σ^α(a), applying σ_n first as in the definition.
Element apply_sigma_alpha(const SkewExtension& A, const ExponentVector& alpha, Element a) {
  for (std::size_t i = A.n(); i-- > 0;)
    for (std::uint32_t k = 0; k < alpha[i]; ++k) a = A.sigma(i)(a);
  return a;
}

bool replay_pair(const SkewExtension& A, PropertyId p, const PairWitness& w) {
  const auto& R = A.ring();
  if (w.f.is_zero() || w.g.is_zero()) return false;
  if (!A.poly_mul(w.f, w.g).is_zero()) return false;
  if (is_weak(p) && (w.f.degree() > 1 || w.g.degree() > 1)) return false;
  const Element ai = w.f.coeff(R, w.left), bj = w.g.coeff(R, w.right);
  SkewPoly product;
  switch (p) {
    case PropertyId::SkewArmendariz:
    case PropertyId::WeakSkewArmendariz:
      if (!w.left.is_zero()) return false;
      product = A.constant(R.mul(ai, bj));
      break;
    case PropertyId::SigmaSkewArmendariz:
    case PropertyId::WeakSigmaSkewArmendariz:
      product = A.constant(R.mul(ai, apply_sigma_alpha(A, w.left, bj)));
      break;
    case PropertyId::SDArmendariz:
    case PropertyId::SDWeakArmendariz: {
      // a_i X_i b_j Y_j with X_i, Y_j the standard monomials
      SkewPoly left = SkewPoly::term(R, ai, w.left);
      product = A.poly_mul(A.poly_mul(left, A.constant(bj)), A.monomial(w.right));
      break;
    }
    default: return false;
  }
  return !product.is_zero() && product == w.product;
}

}  // namespace

bool replay_classical(const Ring& R, const Witness& w) {
  return std::visit(
      [&](const auto& d) -> bool {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, NilpotentWitness>) {
          return w.property == PropertyId::Reduced && !R.is_zero(d.a) && R.is_zero(R.mul(d.a, d.a));
        } else if constexpr (std::is_same_v<T, NonCentralIdempotentWitness>) {
          return w.property == PropertyId::Abelian && R.mul(d.e, d.e) == d.e && R.mul(d.e, d.x) != R.mul(d.x, d.e);
        } else if constexpr (std::is_same_v<T, IfpWitness>) {
          return w.property == PropertyId::IFP && R.is_zero(R.mul(d.a, d.s)) &&
                 !R.is_zero(R.mul(R.mul(d.a, d.x), d.s));
        } else if constexpr (std::is_same_v<T, AnnihilatorWitness>) {
          return w.property != PropertyId::SDQuasiBaer && replay_annihilator(R, w.property, d);
        } else {
          return false;
        }
      },
      w.data);
}

bool replay(const ExtensionPtr& a, const Witness& w) {
  const SkewExtension& A = *a;
  const auto& R = A.ring();
  if (const auto* pn = std::get_if<PolyNilpotentWitness>(&w.data))
    return w.property == PropertyId::Reduced && !pn->f.is_zero() && A.poly_mul(pn->f, pn->f).is_zero();
  if (is_classical(w.property)) return replay_classical(R, w);
  return std::visit(
      [&](const auto& d) -> bool {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, RigidWitness>) {
          return w.property == PropertyId::SigmaRigid && d.alpha.size() == A.n() && !R.is_zero(d.r) &&
                 R.is_zero(R.mul(d.r, apply_sigma_alpha(A, d.alpha, d.r)));
        } else if constexpr (std::is_same_v<T, PairWitness>) {
          return replay_pair(A, w.property, d);
        } else if constexpr (std::is_same_v<T, AnnihilatorWitness>) {
          if (w.property != PropertyId::SDQuasiBaer || !replay_annihilator(R, w.property, d)) return false;
          const auto I = as_set(d.subset);
          for (std::size_t i = 0; i < A.n(); ++i) {
            std::set<Element> image;
            for (const auto& x : I) {
              image.insert(A.sigma(i)(x));
              if (!I.count(A.delta(i)(x))) return false;
            }
            if (image != I) return false;
          }
          return true;
        } else {
          return false;
        }
      },
      w.data);
}

}  // namespace spbw
