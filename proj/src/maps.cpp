#include "spbw/maps.hpp"

#include <map>
#include <set>

namespace spbw {

EndoMap EndoMap::identity(RingPtr ring) {
  EndoMap m;
  m.name_ = "id";
  m.identity_ = true;
  m.bijective_ = true;
  if (ring->is_finite()) {
    m.table_.resize(ring->size());
    for (std::uint32_t i = 0; i < m.table_.size(); ++i) m.table_[i] = i;
  } else {
    m.rule_ = [](const Element& a) { return a; };
  }
  m.ring_ = std::move(ring);
  return m;
}

EndoMap EndoMap::from_table(RingPtr ring, std::vector<std::uint32_t> table, std::string name) {
  const auto& fr = as_finite(*ring, "table map");
  if (table.size() != fr.size()) throw InvalidTable("map table has " + std::to_string(table.size()) + " entries");
  for (auto v : table)
    if (v >= fr.size()) throw InvalidTable("map table entry out of range");
  EndoMap m;
  m.ring_ = std::move(ring);
  m.name_ = std::move(name);
  m.table_ = std::move(table);
  m.identity_ = true;
  for (std::uint32_t i = 0; i < m.table_.size(); ++i)
    if (m.table_[i] != i) m.identity_ = false;
  m.bijective_ = std::set<std::uint32_t>(m.table_.begin(), m.table_.end()).size() == m.table_.size();
  return m;
}

EndoMap EndoMap::from_rule(RingPtr ring, std::string name, ElementFn rule, bool bijective) {
  if (ring->is_finite()) {
    std::vector<std::uint32_t> t;
    for (const auto& a : ring->sample()) t.push_back(rule(a).index());
    return from_table(std::move(ring), std::move(t), std::move(name));
  }
  EndoMap m;
  m.ring_ = std::move(ring);
  m.name_ = std::move(name);
  m.rule_ = std::move(rule);
  m.bijective_ = bijective;
  return m;
}

Element EndoMap::operator()(const Element& a) const {
  if (!table_.empty()) {
    ring_->check(a);
    return table_[a.index()];
  }
  ring_->check(a);
  return rule_(a);
}

bool EndoMap::is_identity() const { return identity_; }

EndoMap EndoMap::compose(const EndoMap& inner) const {
  require_same_ring(*ring_, *inner.ring_);
  if (inner.identity_) return *this;
  if (identity_) return inner;
  const std::string nm = name_ + "*" + inner.name_;
  if (!table_.empty()) {
    std::vector<std::uint32_t> t(table_.size());
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = table_[inner.table_[i]];
    return from_table(ring_, std::move(t), nm);
  }
  auto outer_rule = rule_, inner_rule = inner.rule_;
  EndoMap m;
  m.ring_ = ring_;
  m.name_ = nm;
  m.rule_ = [outer_rule, inner_rule](const Element& a) { return outer_rule(inner_rule(a)); };
  m.bijective_ = bijective_ && inner.bijective_;
  return m;
}

std::vector<Element> EndoMap::signature() const {
  std::vector<Element> out;
  for (const auto& a : ring_->sample()) out.push_back((*this)(a));
  return out;
}

SigmaDerivation SigmaDerivation::zero(EndoMap sigma) {
  SigmaDerivation d;
  d.name_ = "zero";
  d.zero_ = true;
  const auto& ring = sigma.ring();
  if (ring->is_finite()) {
    d.table_.assign(ring->size(), 0);
  } else {
    auto z = ring->zero();
    d.rule_ = [z](const Element&) { return z; };
  }
  d.sigma_ = std::move(sigma);
  return d;
}

SigmaDerivation SigmaDerivation::from_table(EndoMap sigma, std::vector<std::uint32_t> table, std::string name) {
  const auto& fr = as_finite(*sigma.ring(), "table derivation");
  if (table.size() != fr.size())
    throw InvalidTable("derivation table has " + std::to_string(table.size()) + " entries");
  for (auto v : table)
    if (v >= fr.size()) throw InvalidTable("derivation table entry out of range");
  SigmaDerivation d;
  d.sigma_ = std::move(sigma);
  d.name_ = std::move(name);
  d.zero_ = true;
  for (auto v : table)
    if (v != 0) d.zero_ = false;
  d.table_ = std::move(table);
  return d;
}

SigmaDerivation SigmaDerivation::from_rule(EndoMap sigma, std::string name, ElementFn rule) {
  const auto& ring = sigma.ring();
  if (ring->is_finite()) {
    std::vector<std::uint32_t> t;
    for (const auto& a : ring->sample()) t.push_back(rule(a).index());
    return from_table(std::move(sigma), std::move(t), std::move(name));
  }
  SigmaDerivation d;
  d.sigma_ = std::move(sigma);
  d.name_ = std::move(name);
  d.rule_ = std::move(rule);
  return d;
}

Element SigmaDerivation::operator()(const Element& a) const {
  sigma_.ring()->check(a);
  if (!table_.empty()) return table_[a.index()];
  return rule_(a);
}

namespace {

// Pairs checked on structured rings: all sample pairs, then seeded random pairs.
template <typename F>
void for_pairs(const Ring& r, const Limits& limits, F&& f) {
  const auto s = r.sample();
  for (const auto& a : s)
    for (const auto& b : s) f(a, b);
  if (r.is_finite()) return;
  std::mt19937_64 rng(limits.seed);
  for (std::size_t k = 0; k < limits.random_pairs; ++k) {
    auto a = r.random(rng);
    auto b = r.random(rng);
    f(a, b);
  }
}

}  // namespace

MapReport validate_endomorphism(const EndoMap& sigma, const Limits& limits) {
  const Ring& r = *sigma.ring();
  auto show = [&](const Element& a) { return r.format(a); };
  if (sigma(r.one()) != r.one()) throw AxiomViolation(sigma.name() + " does not fix 1");
  for_pairs(r, limits, [&](const Element& a, const Element& b) {
    if (sigma(r.add(a, b)) != r.add(sigma(a), sigma(b)))
      throw AxiomViolation(sigma.name() + " is not additive at (" + show(a) + ", " + show(b) + ")");
    if (sigma(r.mul(a, b)) != r.mul(sigma(a), sigma(b)))
      throw AxiomViolation(sigma.name() + " is not multiplicative at (" + show(a) + ", " + show(b) + ")");
  });
  MapReport rep;
  rep.exhaustive = r.is_finite();
  if (r.is_finite()) {
    std::set<std::uint32_t> img(sigma.table().begin(), sigma.table().end());
    rep.injective = rep.surjective = img.size() == r.size();
  } else {
    // injectivity on the sample only; additive maps are injective iff the kernel is trivial
    rep.injective = true;
    for (const auto& a : r.sample())
      if (!r.is_zero(a) && r.is_zero(sigma(a))) rep.injective = false;
    rep.surjective = sigma.declared_bijective();
    if (!rep.injective && sigma.declared_bijective())
      throw AxiomViolation(sigma.name() + " is declared bijective but has a nonzero kernel element");
  }
  return rep;
}

void validate_derivation(const SigmaDerivation& delta, const Limits& limits) {
  const Ring& r = *delta.sigma().ring();
  const auto& s = delta.sigma();
  auto show = [&](const Element& a) { return r.format(a); };
  for_pairs(r, limits, [&](const Element& a, const Element& b) {
    if (delta(r.add(a, b)) != r.add(delta(a), delta(b)))
      throw AxiomViolation(delta.name() + " is not additive at (" + show(a) + ", " + show(b) + ")");
    const auto lhs = delta(r.mul(a, b));
    const auto rhs = r.add(r.mul(s(a), delta(b)), r.mul(delta(a), b));
    if (lhs != rhs)
      throw AxiomViolation(delta.name() + " breaks the sigma-Leibniz rule at (" + show(a) + ", " + show(b) + ")");
  });
  if (!r.is_zero(delta(r.one()))) throw AxiomViolation(delta.name() + " does not kill 1");
}

EndoMap builtin_endomap(const RingPtr& ring, const std::string& name) {
  if (name == "id") return EndoMap::identity(ring);
  if (name == "swap") {
    const auto& d = ring->descriptor();
    if (d.kind != RingKind::DirectProduct || d.factors.size() != 2 ||
        d.factors[0].describe() != d.factors[1].describe())
      throw DefinitionError("swap needs a product of two equal factors");
    const auto& fr = as_finite(*ring, "swap");
    std::vector<std::uint32_t> t(fr.size());
    for (std::uint32_t i = 0; i < fr.size(); ++i) {
      auto c = fr.layout().coords[i];
      std::swap(c[0], c[1]);
      t[i] = *fr.index_of_coords(c);
    }
    return EndoMap::from_table(ring, std::move(t), "swap");
  }
  if (name == "half") {
    if (ring->kind() != RingKind::StructuredMatrixZQ) throw DefinitionError("half needs the matrix-zq ring");
    return EndoMap::from_rule(ring, "half", [](const Element& a) {
      const auto& m = std::get<MatZQ>(a.v);
      return Element(MatZQ{m.a, m.t / 2});
    }, true);
  }
  if (name == "eval0") {
    if (ring->kind() == RingKind::PolyOverField) {
      return EndoMap::from_rule(ring, "eval0", [](const Element& a) {
        const auto& f = std::get<PolyZp>(a.v);
        PolyZp r;
        if (!f.c.empty()) r.c.push_back(f.c[0]);
        return Element(PolyZpRing::trim(std::move(r)));
      });
    }
    if (ring->kind() == RingKind::TruncatedPoly) {
      const auto& fr = as_finite(*ring, "eval0");
      std::vector<std::uint32_t> t(fr.size());
      for (std::uint32_t i = 0; i < fr.size(); ++i) {
        auto c = fr.layout().coords[i];
        for (std::size_t k = 1; k < c.size(); ++k) c[k] = 0;
        t[i] = *fr.index_of_coords(c);
      }
      return EndoMap::from_table(ring, std::move(t), "eval0");
    }
    throw DefinitionError("eval0 needs a polynomial ring");
  }
  throw DefinitionError("unknown endomorphism '" + name + "'");
}

SigmaDerivation builtin_derivation(const EndoMap& sigma, const std::string& name) {
  if (name == "zero") return SigmaDerivation::zero(sigma);
  if (name == "d/dt") {
    const auto& ring = sigma.ring();
    if (!sigma.is_identity()) throw DefinitionError("d/dt is an ordinary derivation; pair it with sigma = id");
    if (ring->kind() == RingKind::PolyOverField) {
      const std::uint32_t p = ring->descriptor().modulus;
      return SigmaDerivation::from_rule(sigma, "d/dt", [p](const Element& a) {
        const auto& f = std::get<PolyZp>(a.v);
        PolyZp r;
        for (std::size_t k = 1; k < f.c.size(); ++k)
          r.c.push_back(static_cast<std::uint32_t>((std::uint64_t{f.c[k]} * k) % p));
        return Element(PolyZpRing::trim(std::move(r)));
      });
    }
    throw DefinitionError("d/dt needs the poly-zp ring");
  }
  throw DefinitionError("unknown derivation '" + name + "'");
}

std::vector<EndoMap> monoid_closure(const std::vector<EndoMap>& sigmas, std::size_t cap) {
  if (sigmas.empty()) throw DefinitionError("monoid_closure needs at least one map");
  const RingPtr ring = sigmas.front().ring();
  std::vector<EndoMap> out{EndoMap::identity(ring)};
  std::map<std::vector<Element>, std::size_t> seen_struct;
  std::set<std::vector<std::uint32_t>> seen_table;
  auto key_new = [&](const EndoMap& m) {
    if (ring->is_finite()) return seen_table.insert(m.table()).second;
    auto sig = m.signature();
    return seen_struct.emplace(std::move(sig), out.size()).second;
  };
  (void)key_new(out.front());
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& s : sigmas) {
      EndoMap next = s.compose(out[head]);
      if (!key_new(next)) continue;
      if (out.size() >= cap) {
        if (ring->is_finite()) throw SizeCapExceeded("endomorphism monoid exceeds " + std::to_string(cap) + " maps");
        throw ClosureDiverges("composition closure of " + s.name() + " exceeds " + std::to_string(cap) + " maps");
      }
      out.push_back(std::move(next));
    }
  }
  return out;
}

}  // namespace spbw
