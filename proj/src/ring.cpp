#include "spbw/ring.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <sstream>

namespace spbw {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::AxiomViolation: return "AxiomViolation";
    case ErrorCode::InvalidTable: return "InvalidTable";
    case ErrorCode::UnsupportedInfinite: return "UnsupportedInfinite";
    case ErrorCode::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorCode::ClosureDiverges: return "ClosureDiverges";
    case ErrorCode::PresentationInconsistent: return "PresentationInconsistent";
    case ErrorCode::RewriteBudgetExceeded: return "RewriteBudgetExceeded";
    case ErrorCode::HypothesesFail: return "HypothesesFail";
    case ErrorCode::SearchSpaceCapExceeded: return "SearchSpaceCapExceeded";
    case ErrorCode::UnknownEntry: return "UnknownEntry";
    case ErrorCode::NotOre: return "NotOre";
    case ErrorCode::DenominatorNotRegular: return "DenominatorNotRegular";
    case ErrorCode::SigmaDoesNotPreserveS: return "SigmaDoesNotPreserveS";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DefinitionError: return "DefinitionError";
  }
  return "Error";
}

const char* ring_kind_name(RingKind kind) {
  switch (kind) {
    case RingKind::FiniteTable: return "table";
    case RingKind::Modular: return "modular";
    case RingKind::DirectProduct: return "product";
    case RingKind::UpperTriangular2x2: return "upper-triangular";
    case RingKind::TruncatedPoly: return "truncated-poly";
    case RingKind::StructuredMatrixZQ: return "matrix-zq";
    case RingKind::PolyOverField: return "poly-zp";
    case RingKind::Integers: return "integers";
  }
  return "?";
}

RingDescriptor RingDescriptor::modular(std::uint32_t m) {
  RingDescriptor d;
  d.kind = RingKind::Modular;
  d.modulus = m;
  return d;
}

RingDescriptor RingDescriptor::product(std::vector<RingDescriptor> fs) {
  RingDescriptor d;
  d.kind = RingKind::DirectProduct;
  d.factors = std::move(fs);
  return d;
}

RingDescriptor RingDescriptor::upper_triangular(RingDescriptor base) {
  RingDescriptor d;
  d.kind = RingKind::UpperTriangular2x2;
  d.factors.push_back(std::move(base));
  return d;
}

RingDescriptor RingDescriptor::truncated(RingDescriptor base, std::vector<std::uint32_t> monic) {
  RingDescriptor d;
  d.kind = RingKind::TruncatedPoly;
  d.factors.push_back(std::move(base));
  d.poly_modulus = std::move(monic);
  return d;
}

RingDescriptor RingDescriptor::matrix_zq() {
  RingDescriptor d;
  d.kind = RingKind::StructuredMatrixZQ;
  return d;
}

RingDescriptor RingDescriptor::poly_over_field(std::uint32_t p) {
  RingDescriptor d;
  d.kind = RingKind::PolyOverField;
  d.modulus = p;
  return d;
}

RingDescriptor RingDescriptor::integers() {
  RingDescriptor d;
  d.kind = RingKind::Integers;
  return d;
}

std::string RingDescriptor::describe() const {
  switch (kind) {
    case RingKind::Modular: return "Z_" + std::to_string(modulus);
    case RingKind::DirectProduct: {
      std::string s;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) s += "x";
        s += factors[i].describe();
      }
      return s;
    }
    case RingKind::UpperTriangular2x2: return "UT2(" + factors.at(0).describe() + ")";
    case RingKind::TruncatedPoly: {
      std::string s = factors.at(0).describe() + "[t]/(";
      for (std::size_t i = 0; i < poly_modulus.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(poly_modulus[i]);
      }
      return s + ")";
    }
    case RingKind::FiniteTable: return "table(" + std::to_string(size) + ")";
    case RingKind::StructuredMatrixZQ: return "(a,t;0,a) over ZxQ";
    case RingKind::PolyOverField: return "Z_" + std::to_string(modulus) + "[t]";
    case RingKind::Integers: return "Z";
  }
  return "?";
}

namespace {
std::atomic<std::uint64_t> next_ring_id{1};
}

Ring::Ring(RingDescriptor desc) : desc_(std::move(desc)), id_(next_ring_id++) {}

Element Ring::from_integer(long long n) const {
  Element acc = zero();
  Element unit = n < 0 ? neg(one()) : one();
  unsigned long long k = n < 0 ? static_cast<unsigned long long>(-(n + 1)) + 1 : static_cast<unsigned long long>(n);
  // double-and-add so large literals stay cheap
  Element pw = unit;
  while (k) {
    if (k & 1) acc = add(acc, pw);
    pw = add(pw, pw);
    k >>= 1;
  }
  return acc;
}

std::vector<Element> Ring::closed_form_idempotents() const {
  throw UnsupportedInfinite("no closed-form idempotent list for " + desc_.describe());
}

void require_same_ring(const Ring& a, const Ring& b) {
  if (a.id() != b.id()) throw RingMismatch("elements of " + a.descriptor().describe() + " and " + b.descriptor().describe());
}

const FiniteRing& as_finite(const Ring& r, const char* op) {
  if (!r.is_finite()) throw UnsupportedInfinite(std::string(op) + " needs a finite ring, got " + r.descriptor().describe());
  return static_cast<const FiniteRing&>(r);
}

// ---------------------------------------------------------------- FiniteRing

FiniteRing::FiniteRing(RingDescriptor desc, Tables t, Layout layout)
    : Ring(std::move(desc)), t_(std::move(t)), layout_(std::move(layout)) {
  commutative_ = true;
  for (std::size_t a = 0; a < t_.m && commutative_; ++a)
    for (std::size_t b = a + 1; b < t_.m; ++b)
      if (t_.mul[a * t_.m + b] != t_.mul[b * t_.m + a]) {
        commutative_ = false;
        break;
      }
}

void FiniteRing::check(const Element& a) const {
  if (!a.is_index() || a.index() >= t_.m)
    throw RingMismatch("element is not an index of " + descriptor().describe());
}

Element FiniteRing::add(const Element& a, const Element& b) const {
  check(a);
  check(b);
  return add(a.index(), b.index());
}

Element FiniteRing::neg(const Element& a) const {
  check(a);
  return neg(a.index());
}

Element FiniteRing::mul(const Element& a, const Element& b) const {
  check(a);
  check(b);
  return mul(a.index(), b.index());
}

std::vector<Element> FiniteRing::sample() const {
  std::vector<Element> out;
  out.reserve(t_.m);
  for (std::uint32_t i = 0; i < t_.m; ++i) out.emplace_back(i);
  return out;
}

Element FiniteRing::random(std::mt19937_64& rng) const {
  return static_cast<std::uint32_t>(std::uniform_int_distribution<std::size_t>(0, t_.m - 1)(rng));
}

std::optional<Element> FiniteRing::inverse(const Element& a) const {
  check(a);
  for (std::uint32_t b = 0; b < t_.m; ++b)
    if (mul(a.index(), b) == 1 && mul(b, a.index()) == 1) return Element(b);
  return std::nullopt;
}

std::optional<std::uint32_t> FiniteRing::index_of_coords(const std::vector<std::uint32_t>& c) const {
  auto it = layout_.by_coords.find(c);
  if (it == layout_.by_coords.end()) return std::nullopt;
  return it->second;
}

namespace {

std::string format_poly_in_t(const std::vector<std::string>& coeff, const std::vector<bool>& is_zero,
                             const std::vector<bool>& is_one, const std::vector<bool>& compound) {
  std::string s;
  for (std::size_t k = coeff.size(); k-- > 0;) {
    if (is_zero[k]) continue;
    if (!s.empty()) s += " + ";
    std::string mono = k == 0 ? "" : (k == 1 ? "t" : "t^" + std::to_string(k));
    if (k == 0) {
      s += coeff[k];
    } else if (is_one[k]) {
      s += mono;
    } else {
      s += compound[k] ? "(" + coeff[k] + ")" : coeff[k];
      s += "*" + mono;
    }
  }
  return s.empty() ? "0" : s;
}

}  // namespace

std::string FiniteRing::format(const Element& a) const {
  check(a);
  const std::uint32_t i = a.index();
  const auto& d = descriptor();
  switch (d.kind) {
    case RingKind::Modular: return std::to_string(i);
    case RingKind::DirectProduct: {
      std::string s = "(";
      for (std::size_t k = 0; k < layout_.components.size(); ++k) {
        if (k) s += ",";
        s += layout_.components[k]->format(layout_.coords[i][k]);
      }
      return s + ")";
    }
    case RingKind::UpperTriangular2x2: {
      const auto& b = *layout_.components[0];
      const auto& c = layout_.coords[i];
      return "[[" + b.format(c[0]) + "," + b.format(c[1]) + "],[0," + b.format(c[2]) + "]]";
    }
    case RingKind::TruncatedPoly: {
      const auto& b = *layout_.components[0];
      const auto& c = layout_.coords[i];
      std::vector<std::string> cs;
      std::vector<bool> z, o, comp;
      for (auto x : c) {
        cs.push_back(b.format(x));
        z.push_back(x == 0);
        o.push_back(x == 1);
        comp.push_back(b.format_is_compound(x));
      }
      return format_poly_in_t(cs, z, o, comp);
    }
    default: return "#" + std::to_string(i);
  }
}

bool FiniteRing::format_is_compound(const Element& a) const {
  if (descriptor().kind != RingKind::TruncatedPoly) return false;
  const auto& c = layout_.coords[a.index()];
  return std::count_if(c.begin(), c.end(), [](std::uint32_t x) { return x != 0; }) > 1;
}

// ---------------------------------------------------------------- table checks

void check_ring_tables(const FiniteRing::Tables& t) {
  const std::size_t m = t.m;
  if (m < 2) throw InvalidTable("ring needs at least two elements (zero != one)");
  if (t.add.size() != m * m || t.mul.size() != m * m || t.neg.size() != m)
    throw InvalidTable("table dimensions do not match size " + std::to_string(m));
  for (auto v : t.add)
    if (v >= m) throw InvalidTable("add-table index out of range");
  for (auto v : t.mul)
    if (v >= m) throw InvalidTable("mul-table index out of range");
  {
    std::vector<bool> seen(m, false);
    for (auto v : t.neg) {
      if (v >= m) throw InvalidTable("neg-table index out of range");
      if (seen[v]) throw InvalidTable("negation is not a bijection");
      seen[v] = true;
    }
  }
  auto A = [&](std::size_t a, std::size_t b) { return t.add[a * m + b]; };
  auto M = [&](std::size_t a, std::size_t b) { return t.mul[a * m + b]; };
  auto fail = [](const std::string& ax, std::size_t a, std::size_t b, std::size_t c) {
    throw AxiomViolation(ax + " fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                         std::to_string(c) + ")");
  };
  for (std::size_t a = 0; a < m; ++a) {
    if (A(0, a) != a || A(a, 0) != a) fail("additive identity", 0, a, 0);
    if (A(a, t.neg[a]) != 0) fail("additive inverse", a, t.neg[a], 0);
    if (M(1, a) != a || M(a, 1) != a) fail("multiplicative identity", 1, a, 0);
    for (std::size_t b = 0; b < m; ++b)
      if (A(a, b) != A(b, a)) fail("additive commutativity", a, b, 0);
  }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      const auto ab = A(a, b), mab = M(a, b);
      for (std::size_t c = 0; c < m; ++c) {
        if (A(ab, c) != A(a, A(b, c))) fail("additive associativity", a, b, c);
        if (M(mab, c) != M(a, M(b, c))) fail("multiplicative associativity", a, b, c);
        if (M(a, A(b, c)) != A(mab, M(a, c))) fail("left distributivity", a, b, c);
        if (M(ab, c) != A(M(a, c), M(b, c))) fail("right distributivity", a, b, c);
      }
    }
}

// ---------------------------------------------------------------- construction

namespace {

using Coords = std::vector<std::uint32_t>;

// Canonical order: zero, one, then the remaining tuples ordered by `key`.
FiniteRingPtr build_from_coords(RingDescriptor desc, std::vector<FiniteRingPtr> comps, std::vector<Coords> all,
                                const Coords& zero, const Coords& one,
                                const std::function<Coords(const Coords&, const Coords&)>& add,
                                const std::function<Coords(const Coords&, const Coords&)>& mul,
                                const std::function<Coords(const Coords&)>& neg) {
  std::vector<Coords> order;
  order.push_back(zero);
  if (one != zero) order.push_back(one);
  for (auto& c : all)
    if (c != zero && c != one) order.push_back(c);
  FiniteRing::Layout layout;
  layout.components = std::move(comps);
  layout.coords = order;
  for (std::uint32_t i = 0; i < order.size(); ++i) layout.by_coords[order[i]] = i;
  FiniteRing::Tables t;
  t.m = order.size();
  t.add.resize(t.m * t.m);
  t.mul.resize(t.m * t.m);
  t.neg.resize(t.m);
  for (std::size_t a = 0; a < t.m; ++a) {
    t.neg[a] = layout.by_coords.at(neg(order[a]));
    for (std::size_t b = 0; b < t.m; ++b) {
      t.add[a * t.m + b] = layout.by_coords.at(add(order[a], order[b]));
      t.mul[a * t.m + b] = layout.by_coords.at(mul(order[a], order[b]));
    }
  }
  check_ring_tables(t);
  return std::make_shared<FiniteRing>(std::move(desc), std::move(t), std::move(layout));
}

// All tuples over the given radices; `most_significant_first` picks lex vs colex ordering.
std::vector<Coords> all_tuples(const std::vector<std::size_t>& radix, bool most_significant_first) {
  std::vector<Coords> out;
  const std::size_t k = radix.size();
  Coords c(k, 0);
  while (true) {
    out.push_back(c);
    std::size_t pos = 0;
    while (pos < k) {
      const std::size_t idx = most_significant_first ? k - 1 - pos : pos;
      if (++c[idx] < radix[idx]) break;
      c[idx] = 0;
      ++pos;
    }
    if (pos == k) break;
  }
  return out;
}

FiniteRingPtr build_modular(const RingDescriptor& d) {
  const std::uint32_t m = d.modulus;
  if (m < 2) throw InvalidTable("modulus must be at least 2");
  FiniteRing::Tables t;
  t.m = m;
  t.add.resize(std::size_t{m} * m);
  t.mul.resize(std::size_t{m} * m);
  t.neg.resize(m);
  for (std::uint32_t a = 0; a < m; ++a) {
    t.neg[a] = (m - a) % m;
    for (std::uint32_t b = 0; b < m; ++b) {
      t.add[std::size_t{a} * m + b] = (a + b) % m;
      t.mul[std::size_t{a} * m + b] = static_cast<std::uint32_t>((std::uint64_t{a} * b) % m);
    }
  }
  check_ring_tables(t);
  FiniteRing::Layout layout;
  for (std::uint32_t a = 0; a < m; ++a) {
    layout.coords.push_back({a});
    layout.by_coords[{a}] = a;
  }
  return std::make_shared<FiniteRing>(d, std::move(t), std::move(layout));
}

FiniteRingPtr build_table(const RingDescriptor& d) {
  const std::size_t m = d.size;
  if (d.add_table.size() != m || d.mul_table.size() != m || d.neg_table.size() != m)
    throw InvalidTable("table rows do not match size " + std::to_string(m));
  for (std::size_t i = 0; i < m; ++i)
    if (d.add_table[i].size() != m || d.mul_table[i].size() != m)
      throw InvalidTable("table row " + std::to_string(i) + " has wrong length");
  if (d.zero_index >= m || d.one_index >= m) throw InvalidTable("zero-index or one-index out of range");
  if (d.zero_index == d.one_index) throw InvalidTable("zero-index equals one-index");
  // relabel so that zero -> 0 and one -> 1, others keep their relative order
  std::vector<std::uint32_t> perm(m), inv;
  inv.push_back(d.zero_index);
  inv.push_back(d.one_index);
  for (std::uint32_t i = 0; i < m; ++i)
    if (i != d.zero_index && i != d.one_index) inv.push_back(i);
  for (std::uint32_t k = 0; k < m; ++k) perm[inv[k]] = k;
  auto mapped = [&](std::uint32_t v) -> std::uint32_t {
    if (v >= m) throw InvalidTable("table entry " + std::to_string(v) + " out of range");
    return perm[v];
  };
  FiniteRing::Tables t;
  t.m = m;
  t.add.resize(m * m);
  t.mul.resize(m * m);
  t.neg.resize(m);
  for (std::size_t a = 0; a < m; ++a) {
    t.neg[a] = mapped(d.neg_table[inv[a]]);
    for (std::size_t b = 0; b < m; ++b) {
      t.add[a * m + b] = mapped(d.add_table[inv[a]][inv[b]]);
      t.mul[a * m + b] = mapped(d.mul_table[inv[a]][inv[b]]);
    }
  }
  check_ring_tables(t);
  return std::make_shared<FiniteRing>(d, std::move(t), FiniteRing::Layout{});
}

FiniteRingPtr build_finite(const RingDescriptor& d, const Limits& limits);

std::size_t predicted_size(const RingDescriptor& d) {
  auto capped = [](std::size_t a, std::size_t b) -> std::size_t {
    if (a != 0 && b > (std::size_t{1} << 40) / a) return std::size_t{1} << 40;
    return a * b;
  };
  switch (d.kind) {
    case RingKind::Modular: return d.modulus;
    case RingKind::FiniteTable: return d.size;
    case RingKind::DirectProduct: {
      std::size_t s = 1;
      for (auto& f : d.factors) s = capped(s, predicted_size(f));
      return s;
    }
    case RingKind::UpperTriangular2x2: {
      std::size_t b = predicted_size(d.factors.at(0));
      return capped(capped(b, b), b);
    }
    case RingKind::TruncatedPoly: {
      std::size_t b = predicted_size(d.factors.at(0)), s = 1;
      for (std::size_t i = 0; i + 1 < d.poly_modulus.size(); ++i) s = capped(s, b);
      return s;
    }
    default: return 0;
  }
}

FiniteRingPtr build_finite(const RingDescriptor& d, const Limits& limits) {
  const std::size_t predicted = predicted_size(d);
  if (predicted > limits.ring_size_cap)
    throw SizeCapExceeded(d.describe() + " has " + std::to_string(predicted) + " elements, cap is " +
                          std::to_string(limits.ring_size_cap));
  switch (d.kind) {
    case RingKind::Modular: return build_modular(d);
    case RingKind::FiniteTable: return build_table(d);
    case RingKind::DirectProduct: {
      if (d.factors.empty()) throw InvalidTable("direct product needs at least one factor");
      std::vector<FiniteRingPtr> comps;
      std::vector<std::size_t> radix;
      for (auto& f : d.factors) {
        comps.push_back(build_finite(f, limits));
        radix.push_back(comps.back()->size());
      }
      const std::size_t k = comps.size();
      auto add = [&](const Coords& a, const Coords& b) {
        Coords c(k);
        for (std::size_t i = 0; i < k; ++i) c[i] = comps[i]->add(a[i], b[i]);
        return c;
      };
      auto mul = [&](const Coords& a, const Coords& b) {
        Coords c(k);
        for (std::size_t i = 0; i < k; ++i) c[i] = comps[i]->mul(a[i], b[i]);
        return c;
      };
      auto neg = [&](const Coords& a) {
        Coords c(k);
        for (std::size_t i = 0; i < k; ++i) c[i] = comps[i]->neg(a[i]);
        return c;
      };
      return build_from_coords(d, comps, all_tuples(radix, true), Coords(k, 0), Coords(k, 1), add, mul, neg);
    }
    case RingKind::UpperTriangular2x2: {
      if (d.factors.size() != 1) throw InvalidTable("upper-triangular ring needs exactly one base");
      auto B = build_finite(d.factors[0], limits);
      const auto& b = *B;
      auto add = [&](const Coords& x, const Coords& y) {
        return Coords{b.add(x[0], y[0]), b.add(x[1], y[1]), b.add(x[2], y[2])};
      };
      // (a,b;0,d)(a',b';0,d') = (aa', ab'+bd'; 0, dd')
      auto mul = [&](const Coords& x, const Coords& y) {
        return Coords{b.mul(x[0], y[0]), b.add(b.mul(x[0], y[1]), b.mul(x[1], y[2])), b.mul(x[2], y[2])};
      };
      auto neg = [&](const Coords& x) { return Coords{b.neg(x[0]), b.neg(x[1]), b.neg(x[2])}; };
      const std::size_t m = b.size();
      return build_from_coords(d, {B}, all_tuples({m, m, m}, false), {0, 0, 0}, {1, 0, 1}, add, mul, neg);
    }
    case RingKind::TruncatedPoly: {
      if (d.factors.size() != 1) throw InvalidTable("truncated polynomial ring needs exactly one base");
      auto B = build_finite(d.factors[0], limits);
      const auto& b = *B;
      const auto& mod = d.poly_modulus;
      if (mod.size() < 2) throw InvalidTable("modulus polynomial must have degree at least 1");
      for (auto v : mod)
        if (v >= b.size()) throw InvalidTable("modulus coefficient out of range");
      if (mod.back() != 1) throw InvalidTable("modulus polynomial must be monic");
      const std::size_t k = mod.size() - 1;
      auto add = [&](const Coords& x, const Coords& y) {
        Coords c(k);
        for (std::size_t i = 0; i < k; ++i) c[i] = b.add(x[i], y[i]);
        return c;
      };
      auto mul = [&](const Coords& x, const Coords& y) {
        Coords full(2 * k - 1, 0);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) full[i + j] = b.add(full[i + j], b.mul(x[i], y[j]));
        // t^k = -(m_0 + ... + m_{k-1} t^{k-1})
        for (std::size_t deg = full.size(); deg-- > k;) {
          const std::uint32_t h = full[deg];
          if (h == 0) continue;
          full[deg] = 0;
          for (std::size_t l = 0; l < k; ++l)
            full[deg - k + l] = b.add(full[deg - k + l], b.neg(b.mul(h, mod[l])));
        }
        full.resize(k);
        return full;
      };
      auto neg = [&](const Coords& x) {
        Coords c(k);
        for (std::size_t i = 0; i < k; ++i) c[i] = b.neg(x[i]);
        return c;
      };
      Coords one(k, 0);
      one[0] = 1;
      return build_from_coords(d, {B}, all_tuples(std::vector<std::size_t>(k, b.size()), false), Coords(k, 0), one,
                               add, mul, neg);
    }
    default: throw UnsupportedInfinite(d.describe() + " is not a finite ring kind");
  }
}

}  // namespace

FiniteRingPtr validate_finite_ring(const RingDescriptor& d, const Limits& limits) { return build_finite(d, limits); }

RingPtr validate_ring(const RingDescriptor& d, const Limits& limits) {
  switch (d.kind) {
    case RingKind::StructuredMatrixZQ: return std::make_shared<MatrixZQRing>();
    case RingKind::PolyOverField: {
      const std::uint32_t p = d.modulus;
      if (p < 2) throw AxiomViolation("poly-zp needs a prime modulus");
      for (std::uint32_t q = 2; q * q <= p; ++q)
        if (p % q == 0) throw AxiomViolation("poly-zp modulus " + std::to_string(p) + " is not prime");
      return std::make_shared<PolyZpRing>(p);
    }
    case RingKind::Integers: return std::make_shared<IntegerRing>();
    default: return build_finite(d, limits);
  }
}

// ---------------------------------------------------------------- MatrixZQRing

namespace {

const MatZQ& as_mat(const Element& e) {
  if (auto* p = std::get_if<MatZQ>(&e.v)) return *p;
  throw RingMismatch("element is not a matrix-zq element");
}

const PolyZp& as_poly(const Element& e) {
  if (auto* p = std::get_if<PolyZp>(&e.v)) return *p;
  throw RingMismatch("element is not a poly-zp element");
}

const BigInt& as_int(const Element& e) {
  if (auto* p = std::get_if<BigInt>(&e.v)) return *p;
  throw RingMismatch("element is not an integer");
}

std::string rational_str(const Rational& q) {
  std::ostringstream os;
  os << numerator(q);
  if (denominator(q) != 1) os << "/" << denominator(q);
  return os.str();
}

}  // namespace

MatrixZQRing::MatrixZQRing() : Ring(RingDescriptor::matrix_zq()) {}

std::size_t MatrixZQRing::size() const { throw UnsupportedInfinite("matrix-zq ring is infinite"); }
Element MatrixZQRing::zero() const { return MatZQ{0, 0}; }
Element MatrixZQRing::one() const { return MatZQ{1, 0}; }

Element MatrixZQRing::add(const Element& x, const Element& y) const {
  const auto &a = as_mat(x), &b = as_mat(y);
  return MatZQ{a.a + b.a, a.t + b.t};
}

Element MatrixZQRing::neg(const Element& x) const {
  const auto& a = as_mat(x);
  return MatZQ{-a.a, -a.t};
}

// (a,t;0,a)(b,u;0,b) = (ab, au + tb; 0, ab)
Element MatrixZQRing::mul(const Element& x, const Element& y) const {
  const auto &a = as_mat(x), &b = as_mat(y);
  return MatZQ{a.a * b.a, Rational(a.a) * b.t + a.t * Rational(b.a)};
}

std::string MatrixZQRing::format(const Element& x) const {
  const auto& a = as_mat(x);
  std::ostringstream os;
  os << "[" << a.a << "," << rational_str(a.t) << "]";
  return os.str();
}

std::vector<Element> MatrixZQRing::sample() const {
  static const int as[] = {0, 1, -1, 2, 3};
  static const std::pair<int, int> ts[] = {{0, 1}, {1, 1}, {-1, 1}, {1, 2}, {2, 3}, {3, 1}};
  std::vector<Element> out;
  for (int a : as)
    for (auto [p, q] : ts) out.emplace_back(MatZQ{a, Rational(p, q)});
  return out;
}

Element MatrixZQRing::random(std::mt19937_64& rng) const {
  std::uniform_int_distribution<int> num(-20, 20), den(1, 10);
  return MatZQ{num(rng), Rational(num(rng), den(rng))};
}

std::optional<Element> MatrixZQRing::inverse(const Element& x) const {
  const auto& a = as_mat(x);
  if (a.a != 1 && a.a != -1) return std::nullopt;
  return MatZQ{a.a, -a.t};  // a^{-1} = a for a = +-1, and t' = -t/a^2 = -t
}

std::vector<Element> MatrixZQRing::closed_form_idempotents() const { return {zero(), one()}; }

void MatrixZQRing::check(const Element& x) const { (void)as_mat(x); }

// ---------------------------------------------------------------- PolyZpRing

PolyZpRing::PolyZpRing(std::uint32_t p) : Ring(RingDescriptor::poly_over_field(p)), p_(p) {}

PolyZp PolyZpRing::trim(PolyZp f) {
  while (!f.c.empty() && f.c.back() == 0) f.c.pop_back();
  return f;
}

std::uint32_t PolyZpRing::inv_mod(std::uint32_t a) const {
  for (std::uint32_t b = 1; b < p_; ++b)
    if (std::uint64_t{a} * b % p_ == 1) return b;
  throw AxiomViolation("no inverse of " + std::to_string(a) + " mod " + std::to_string(p_));
}

std::size_t PolyZpRing::size() const { throw UnsupportedInfinite("poly-zp ring is infinite"); }
Element PolyZpRing::zero() const { return PolyZp{}; }
Element PolyZpRing::one() const { return PolyZp{{1}}; }

Element PolyZpRing::add(const Element& x, const Element& y) const {
  const auto &a = as_poly(x).c, &b = as_poly(y).c;
  PolyZp r;
  r.c.resize(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.c.size(); ++i)
    r.c[i] = ((i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0)) % p_;
  return trim(std::move(r));
}

Element PolyZpRing::neg(const Element& x) const {
  PolyZp r = as_poly(x);
  for (auto& v : r.c) v = (p_ - v) % p_;
  return r;
}

Element PolyZpRing::mul(const Element& x, const Element& y) const {
  const auto &a = as_poly(x).c, &b = as_poly(y).c;
  if (a.empty() || b.empty()) return zero();
  std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] = (acc[i + j] + std::uint64_t{a[i]} * b[j]) % p_;
  PolyZp r;
  for (auto v : acc) r.c.push_back(static_cast<std::uint32_t>(v));
  return trim(std::move(r));
}

std::string PolyZpRing::format(const Element& x) const {
  const auto& c = as_poly(x).c;
  std::vector<std::string> cs;
  std::vector<bool> z, o, comp;
  for (auto v : c) {
    cs.push_back(std::to_string(v));
    z.push_back(v == 0);
    o.push_back(v == 1);
    comp.push_back(false);
  }
  return format_poly_in_t(cs, z, o, comp);
}

bool PolyZpRing::format_is_compound(const Element& x) const {
  const auto& c = as_poly(x).c;
  return std::count_if(c.begin(), c.end(), [](std::uint32_t v) { return v != 0; }) > 1;
}

std::vector<Element> PolyZpRing::sample() const {
  std::vector<Element> out;
  const std::uint32_t n = p_ * p_ * p_;
  for (std::uint32_t code = 0; code < n; ++code) {
    PolyZp f;
    f.c = {code % p_, (code / p_) % p_, code / (p_ * p_)};
    out.emplace_back(trim(std::move(f)));
  }
  return out;
}

Element PolyZpRing::random(std::mt19937_64& rng) const {
  std::uniform_int_distribution<std::uint32_t> coef(0, p_ - 1), deg(0, 4);
  PolyZp f;
  f.c.resize(deg(rng) + 1);
  for (auto& v : f.c) v = coef(rng);
  return trim(std::move(f));
}

std::optional<Element> PolyZpRing::inverse(const Element& x) const {
  const auto& c = as_poly(x).c;
  if (c.size() != 1) return std::nullopt;
  return PolyZp{{inv_mod(c[0])}};
}

std::vector<Element> PolyZpRing::closed_form_idempotents() const { return {zero(), one()}; }

void PolyZpRing::check(const Element& x) const {
  const auto& c = as_poly(x).c;
  if (!c.empty() && c.back() == 0) throw RingMismatch("poly-zp element not trimmed");
  for (auto v : c)
    if (v >= p_) throw RingMismatch("poly-zp coefficient out of range");
}

// ---------------------------------------------------------------- IntegerRing

IntegerRing::IntegerRing() : Ring(RingDescriptor::integers()) {}

std::size_t IntegerRing::size() const { throw UnsupportedInfinite("integer ring is infinite"); }
Element IntegerRing::zero() const { return BigInt(0); }
Element IntegerRing::one() const { return BigInt(1); }
Element IntegerRing::add(const Element& x, const Element& y) const { return BigInt(as_int(x) + as_int(y)); }
Element IntegerRing::neg(const Element& x) const { return BigInt(-as_int(x)); }
Element IntegerRing::mul(const Element& x, const Element& y) const { return BigInt(as_int(x) * as_int(y)); }

std::string IntegerRing::format(const Element& x) const { return as_int(x).str(); }
bool IntegerRing::format_is_compound(const Element& x) const { return as_int(x) < 0; }

std::vector<Element> IntegerRing::sample() const {
  std::vector<Element> out;
  for (int v : {0, 1, -1, 2, -2, 3, -3}) out.emplace_back(BigInt(v));
  return out;
}

Element IntegerRing::random(std::mt19937_64& rng) const {
  return BigInt(std::uniform_int_distribution<int>(-1000, 1000)(rng));
}

std::optional<Element> IntegerRing::inverse(const Element& x) const {
  const auto& a = as_int(x);
  if (a == 1 || a == -1) return Element(BigInt(a));
  return std::nullopt;
}

std::vector<Element> IntegerRing::closed_form_idempotents() const { return {zero(), one()}; }

void IntegerRing::check(const Element& x) const { (void)as_int(x); }

}  // namespace spbw
