#include "spbw/skew_poly.hpp"

#include <algorithm>
#include <vector>

namespace spbw {

std::string ExponentVector::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e[i]);
  }
  return s + ")";
}

const char* order_name(OrderKind k) {
  switch (k) {
    case OrderKind::DegLex: return "deglex";
    case OrderKind::Lex: return "lex";
    case OrderKind::DegRevLex: return "degrevlex";
  }
  return "?";
}

OrderKind order_from_name(const std::string& s) {
  if (s == "deglex") return OrderKind::DegLex;
  if (s == "lex") return OrderKind::Lex;
  if (s == "degrevlex") return OrderKind::DegRevLex;
  throw DefinitionError("unknown monomial order '" + s + "'");
}

int MonomialOrder::compare(const ExponentVector& a, const ExponentVector& b) const {
  const std::size_t n = a.size();
  auto from_top = [&]() {
    for (std::size_t k = n; k-- > 0;)
      if (a[k] != b[k]) return a[k] < b[k] ? -1 : 1;
    return 0;
  };
  if (kind == OrderKind::Lex) return from_top();
  const auto da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  if (kind == OrderKind::DegLex) return from_top();
  // degrevlex: the smaller exponent on the lowest variable wins
  for (std::size_t k = 0; k < n; ++k)
    if (a[k] != b[k]) return a[k] > b[k] ? -1 : 1;
  return 0;
}

SkewPoly SkewPoly::constant(const Ring& r, std::size_t n, const Element& c) {
  return term(r, c, ExponentVector(n));
}

SkewPoly SkewPoly::term(const Ring& r, const Element& c, const ExponentVector& a) {
  SkewPoly p;
  p.add_term(r, a, c);
  return p;
}

int SkewPoly::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.rbegin()->first.degree());
}

Element SkewPoly::coeff(const Ring& r, const ExponentVector& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? r.zero() : it->second;
}

void SkewPoly::add_term(const Ring& r, const ExponentVector& a, const Element& c) {
  if (r.is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(a, c);
  if (inserted) return;
  it->second = r.add(it->second, c);
  if (r.is_zero(it->second)) terms_.erase(it);
}

LeadingData leading_data(const Ring& r, const SkewPoly& f, const MonomialOrder& order) {
  LeadingData out;
  out.lc = r.zero();
  if (f.is_zero()) return out;
  auto best = f.terms().begin();
  for (auto it = f.terms().begin(); it != f.terms().end(); ++it)
    if (order.compare(it->first, best->first) > 0) best = it;
  out.exp = best->first;
  out.lc = best->second;
  out.lm = SkewPoly::term(r, r.one(), best->first);
  out.lt = SkewPoly::term(r, best->second, best->first);
  out.deg = static_cast<std::uint32_t>(f.degree());
  return out;
}

SkewPoly poly_add(const Ring& r, const SkewPoly& f, const SkewPoly& g) {
  SkewPoly out = f;
  for (const auto& [a, c] : g.terms()) out.add_term(r, a, c);
  return out;
}

SkewPoly poly_neg(const Ring& r, const SkewPoly& f) {
  SkewPoly out;
  for (const auto& [a, c] : f.terms()) out.add_term(r, a, r.neg(c));
  return out;
}

SkewPoly poly_sub(const Ring& r, const SkewPoly& f, const SkewPoly& g) { return poly_add(r, f, poly_neg(r, g)); }

SkewPoly poly_scale(const Ring& r, const Element& a, const SkewPoly& f) {
  SkewPoly out;
  for (const auto& [e, c] : f.terms()) out.add_term(r, e, r.mul(a, c));
  return out;
}

std::string monomial_str(const ExponentVector& a) {
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i + 1);
    if (a[i] > 1) s += "^" + std::to_string(a[i]);
  }
  return s;
}

std::string render(const Ring& r, const SkewPoly& f, const MonomialOrder& order) {
  if (f.is_zero()) return r.format(r.zero());
  std::vector<std::pair<ExponentVector, Element>> terms(f.terms().begin(), f.terms().end());
  std::sort(terms.begin(), terms.end(),
            [&](const auto& x, const auto& y) { return order.compare(x.first, y.first) > 0; });
  std::string s;
  for (const auto& [a, c] : terms) {
    if (!s.empty()) s += " + ";
    if (a.is_zero()) {
      s += r.format(c);
      continue;
    }
    if (!r.is_one(c)) {
      s += r.format_is_compound(c) ? "(" + r.format(c) + ")" : r.format(c);
      s += "*";
    }
    s += monomial_str(a);
  }
  return s;
}

}  // namespace spbw
