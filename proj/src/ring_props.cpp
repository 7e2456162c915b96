#include "spbw/ring_props.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace spbw {

namespace {

using Mask = std::vector<bool>;

std::vector<Element> to_elements(const Mask& m) {
  std::vector<Element> out;
  for (std::uint32_t i = 0; i < m.size(); ++i)
    if (m[i]) out.emplace_back(i);
  return out;
}

Mask to_mask(std::size_t n, const std::vector<Element>& xs) {
  Mask m(n, false);
  for (const auto& x : xs) m[x.index()] = true;
  return m;
}

// Additive closure of a generating set (finite, so subgroup = all finite sums).
Mask additive_closure(const FiniteRing& r, const Mask& gens) {
  Mask in(r.size(), false);
  in[0] = true;
  std::vector<std::uint32_t> g;
  for (std::uint32_t i = 0; i < gens.size(); ++i)
    if (gens[i]) g.push_back(i);
  std::deque<std::uint32_t> queue{0};
  while (!queue.empty()) {
    const auto x = queue.front();
    queue.pop_front();
    for (auto y : g) {
      const auto s = r.add(x, y);
      if (!in[s]) {
        in[s] = true;
        queue.push_back(s);
      }
    }
  }
  return in;
}

Mask right_ann_mask(const FiniteRing& r, const std::vector<std::uint32_t>& subset) {
  Mask out(r.size(), true);
  for (std::uint32_t x = 0; x < r.size(); ++x)
    for (auto s : subset)
      if (r.mul(s, x) != 0) {
        out[x] = false;
        break;
      }
  return out;
}

Mask right_ideal_mask(const FiniteRing& r, std::uint32_t e) {
  Mask m(r.size(), false);
  for (std::uint32_t x = 0; x < r.size(); ++x) m[r.mul(e, x)] = true;
  return m;
}

struct IdempotentIdeals {
  std::map<Mask, std::uint32_t> by_mask;  // e·R -> smallest e
};

IdempotentIdeals idempotent_ideals(const FiniteRing& r) {
  IdempotentIdeals out;
  for (const auto& e : idempotents(r)) out.by_mask.emplace(right_ideal_mask(r, e.index()), e.index());
  return out;
}

bool ideal_less(const Ideal& a, const Ideal& b) {
  if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
  return a.elements < b.elements;
}

}  // namespace

bool Ideal::contains(const Element& a) const { return std::binary_search(elements.begin(), elements.end(), a); }

std::vector<Element> right_annihilator(const Ring& ring, const std::vector<Element>& subset) {
  const auto& r = as_finite(ring, "right_annihilator");
  std::vector<std::uint32_t> s;
  for (const auto& x : subset) {
    r.check(x);
    s.push_back(x.index());
  }
  if (s.empty()) s.push_back(0);
  return to_elements(right_ann_mask(r, s));
}

std::vector<Element> left_annihilator(const Ring& ring, const std::vector<Element>& subset) {
  const auto& r = as_finite(ring, "left_annihilator");
  std::vector<Element> out;
  for (std::uint32_t x = 0; x < r.size(); ++x) {
    bool ok = true;
    for (const auto& s : subset)
      if (r.mul(x, s.index()) != 0) ok = false;
    if (ok) out.emplace_back(x);
  }
  return out;
}

std::vector<Element> idempotents(const Ring& ring) {
  const auto& r = as_finite(ring, "idempotents");
  std::vector<Element> out;
  for (std::uint32_t e = 0; e < r.size(); ++e)
    if (r.mul(e, e) == e) out.emplace_back(e);
  return out;
}

std::vector<Element> semicentral_idempotents(const Ring& ring, Side side) {
  const auto& r = as_finite(ring, "semicentral_idempotents");
  std::vector<Element> out;
  for (const auto& ee : idempotents(r)) {
    const auto e = ee.index();
    bool ok = true;
    for (std::uint32_t x = 0; x < r.size() && ok; ++x) {
      const auto exe = r.mul(r.mul(e, x), e);
      ok = exe == (side == Side::Left ? r.mul(x, e) : r.mul(e, x));
    }
    if (ok) out.push_back(ee);
  }
  return out;
}

std::vector<Element> central_idempotents(const Ring& ring) {
  const auto& r = as_finite(ring, "central_idempotents");
  std::vector<Element> out;
  for (const auto& ee : idempotents(r)) {
    bool ok = true;
    for (std::uint32_t x = 0; x < r.size() && ok; ++x) ok = r.mul(ee.index(), x) == r.mul(x, ee.index());
    if (ok) out.push_back(ee);
  }
  return out;
}

std::vector<Element> principal_right_ideal(const Ring& ring, const Element& e) {
  const auto& r = as_finite(ring, "principal_right_ideal");
  r.check(e);
  return to_elements(right_ideal_mask(r, e.index()));
}

std::optional<Element> generating_idempotent(const Ring& ring, const std::vector<Element>& set) {
  const auto& r = as_finite(ring, "generating_idempotent");
  const Mask m = to_mask(r.size(), set);
  for (const auto& e : idempotents(r))
    if (right_ideal_mask(r, e.index()) == m) return e;
  return std::nullopt;
}

Ideal make_ideal(const Ring& ring, const std::vector<Element>& elements, std::vector<Element> generators) {
  const auto& r = as_finite(ring, "make_ideal");
  for (const auto& x : elements) r.check(x);
  const Mask m = additive_closure(r, to_mask(r.size(), elements));
  Ideal I;
  I.elements = to_elements(m);
  I.generators = generators.empty() ? elements : std::move(generators);
  I.is_left = I.is_right = true;
  for (std::uint32_t a = 0; a < r.size(); ++a) {
    if (!m[a]) continue;
    for (std::uint32_t x = 0; x < r.size(); ++x) {
      if (!m[r.mul(x, a)]) I.is_left = false;
      if (!m[r.mul(a, x)]) I.is_right = false;
    }
  }
  I.is_two_sided = I.is_left && I.is_right;
  return I;
}

Ideal two_sided_ideal_generated(const Ring& ring, const std::vector<Element>& generators) {
  const auto& r = as_finite(ring, "two_sided_ideal_generated");
  Mask g(r.size(), false);
  for (const auto& a : generators) {
    r.check(a);
    for (std::uint32_t x = 0; x < r.size(); ++x)
      for (std::uint32_t y = 0; y < r.size(); ++y) g[r.mul(r.mul(x, a.index()), y)] = true;
  }
  Ideal I = make_ideal(r, to_elements(g), generators);
  if (!I.is_two_sided) throw AxiomViolation("generated ideal is not two-sided");
  return I;
}

std::vector<Ideal> enumerate_two_sided_ideals(const Ring& ring, const Limits& limits) {
  const auto& r = as_finite(ring, "enumerate_two_sided_ideals");
  if (r.size() > limits.ideal_ring_cap)
    throw SizeCapExceeded("ideal enumeration needs at most " + std::to_string(limits.ideal_ring_cap) +
                          " elements, ring has " + std::to_string(r.size()));
  // every ideal is a sum of principal ones; close the principal ideals under sums
  std::map<Mask, Ideal> found;
  std::vector<Mask> order;
  auto add = [&](Ideal I) {
    Mask m = to_mask(r.size(), I.elements);
    if (found.count(m)) return;
    found.emplace(m, std::move(I));
    order.push_back(std::move(m));
  };
  add(make_ideal(r, {Element(std::uint32_t{0})}, {Element(std::uint32_t{0})}));
  for (std::uint32_t a = 1; a < r.size(); ++a) add(two_sided_ideal_generated(r, {Element(a)}));
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      Mask u(r.size(), false);
      for (std::size_t k = 0; k < r.size(); ++k) u[k] = order[i][k] || order[j][k];
      const Mask closed = additive_closure(r, u);
      if (found.count(closed)) continue;
      auto gens = found.at(order[j]).generators;
      for (const auto& x : found.at(order[i]).generators) gens.push_back(x);
      Ideal I = make_ideal(r, to_elements(closed), gens);
      if (!I.is_two_sided) throw AxiomViolation("sum of ideals is not two-sided");
      add(std::move(I));
    }
  std::vector<Ideal> out;
  for (auto& [m, I] : found) out.push_back(I);
  std::sort(out.begin(), out.end(), ideal_less);
  return out;
}

namespace {

Verdict decide_structured(const Ring& ring, PropertyId property) {
  if (property == PropertyId::Reduced) {
    for (const auto& a : ring.sample())
      if (!ring.is_zero(a) && ring.is_zero(ring.mul(a, a))) return Verdict::fails({property, NilpotentWitness{a}});
    if (ring.kind() == RingKind::PolyOverField || ring.kind() == RingKind::Integers) return Verdict::holds(property);
    throw UnsupportedInfinite("reducedness of " + ring.descriptor().describe() + " has no closed form");
  }
  if (property == PropertyId::Abelian) {
    // closed-form idempotents of the structured kinds are 0 and 1
    const auto ids = ring.closed_form_idempotents();
    for (const auto& e : ids)
      for (const auto& x : ring.sample())
        if (ring.mul(e, x) != ring.mul(x, e)) return Verdict::fails({property, NonCentralIdempotentWitness{e, x}});
    return Verdict::holds(property);
  }
  throw UnsupportedInfinite(property_name(property) + " needs a finite ring");
}

}  // namespace

Verdict decide_classical(const Ring& ring, PropertyId property, const Limits& limits) {
  if (!is_classical(property)) throw DefinitionError(property_name(property) + " is not a classical property");
  if (!ring.is_finite()) return decide_structured(ring, property);
  const auto& r = static_cast<const FiniteRing&>(ring);
  if (r.size() > limits.ring_size_cap) throw SizeCapExceeded("ring exceeds the element cap");
  const std::uint32_t m = static_cast<std::uint32_t>(r.size());
  switch (property) {
    case PropertyId::Reduced:
      for (std::uint32_t a = 1; a < m; ++a)
        if (r.mul(a, a) == 0) return Verdict::fails({property, NilpotentWitness{a}}, a);
      return Verdict::holds(property, m);
    case PropertyId::Abelian: {
      std::uint64_t n = 0;
      for (const auto& e : idempotents(r))
        for (std::uint32_t x = 0; x < m; ++x) {
          ++n;
          if (r.mul(e.index(), x) != r.mul(x, e.index()))
            return Verdict::fails({property, NonCentralIdempotentWitness{e, x}}, n);
        }
      return Verdict::holds(property, n);
    }
    case PropertyId::IFP: {
      std::uint64_t n = 0;
      for (std::uint32_t a = 0; a < m; ++a)
        for (std::uint32_t s = 0; s < m; ++s) {
          if (r.mul(a, s) != 0) continue;
          for (std::uint32_t x = 0; x < m; ++x) {
            ++n;
            if (r.mul(r.mul(a, x), s) != 0) return Verdict::fails({property, IfpWitness{a, s, x}}, n);
          }
        }
      return Verdict::holds(property, n);
    }
    case PropertyId::PP: {
      const auto ii = idempotent_ideals(r);
      for (std::uint32_t a = 0; a < m; ++a) {
        const Mask ann = right_ann_mask(r, {a});
        if (!ii.by_mask.count(ann)) return Verdict::fails({property, AnnihilatorWitness{{a}, to_elements(ann)}}, a + 1);
      }
      return Verdict::holds(property, m);
    }
    case PropertyId::PQBaer: {
      const auto ii = idempotent_ideals(r);
      for (std::uint32_t a = 0; a < m; ++a) {
        std::vector<std::uint32_t> aR;
        for (std::uint32_t x = 0; x < m; ++x) aR.push_back(r.mul(a, x));
        const Mask ann = right_ann_mask(r, aR);
        if (!ii.by_mask.count(ann)) {
          std::set<std::uint32_t> ideal(aR.begin(), aR.end());
          std::vector<Element> subset(ideal.begin(), ideal.end());
          return Verdict::fails({property, AnnihilatorWitness{std::move(subset), to_elements(ann)}}, a + 1);
        }
      }
      return Verdict::holds(property, m);
    }
    case PropertyId::Baer: {
      const auto ii = idempotent_ideals(r);
      // intersection closure of the single-element annihilators, in discovery order
      std::vector<std::pair<Mask, std::vector<Element>>> found;
      std::set<Mask> seen;
      std::uint64_t n = 0;
      auto visit = [&](Mask ann, std::vector<Element> subset) -> std::optional<Verdict> {
        if (!seen.insert(ann).second) return std::nullopt;
        ++n;
        if (!ii.by_mask.count(ann))
          return Verdict::fails({property, AnnihilatorWitness{subset, to_elements(ann)}}, n);
        found.emplace_back(std::move(ann), std::move(subset));
        return std::nullopt;
      };
      for (std::uint32_t a = 0; a < m; ++a)
        if (auto v = visit(right_ann_mask(r, {a}), {Element(a)})) return *v;
      for (std::size_t i = 0; i < found.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
          Mask inter(m);
          for (std::uint32_t k = 0; k < m; ++k) inter[k] = found[i].first[k] && found[j].first[k];
          auto subset = found[j].second;
          for (const auto& x : found[i].second)
            if (std::find(subset.begin(), subset.end(), x) == subset.end()) subset.push_back(x);
          std::sort(subset.begin(), subset.end());
          if (auto v = visit(std::move(inter), std::move(subset))) return *v;
        }
      return Verdict::holds(property, n);
    }
    case PropertyId::QuasiBaer: {
      const auto ii = idempotent_ideals(r);
      std::uint64_t n = 0;
      for (const auto& I : enumerate_two_sided_ideals(r, limits)) {
        ++n;
        std::vector<std::uint32_t> idx;
        for (const auto& x : I.elements) idx.push_back(x.index());
        const Mask ann = right_ann_mask(r, idx);
        if (!ii.by_mask.count(ann)) return Verdict::fails({property, AnnihilatorWitness{I.elements, to_elements(ann)}}, n);
      }
      return Verdict::holds(property, n);
    }
    default: break;
  }
  throw DefinitionError("unhandled classical property");
}

}  // namespace spbw
