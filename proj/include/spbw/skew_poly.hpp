#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spbw/ring.hpp"

namespace spbw {

struct ExponentVector {
  std::vector<std::uint32_t> e;

  ExponentVector() = default;
  explicit ExponentVector(std::size_t n) : e(n, 0) {}
  explicit ExponentVector(std::vector<std::uint32_t> v) : e(std::move(v)) {}
  static ExponentVector unit(std::size_t n, std::size_t i) {
    ExponentVector a(n);
    a.e[i] = 1;
    return a;
  }

  std::size_t size() const { return e.size(); }
  std::uint32_t degree() const {
    std::uint32_t d = 0;
    for (auto v : e) d += v;
    return d;
  }
  bool is_zero() const { return degree() == 0; }
  std::uint32_t operator[](std::size_t i) const { return e[i]; }
  ExponentVector operator+(const ExponentVector& o) const {
    ExponentVector r = *this;
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
    return r;
  }
  bool operator==(const ExponentVector& o) const = default;
  // Plain lexicographic order on the raw vector; only for use as a map key.
  bool operator<(const ExponentVector& o) const { return e < o.e; }
  std::string str() const;
};

enum class OrderKind { DegLex, Lex, DegRevLex };

const char* order_name(OrderKind k);
OrderKind order_from_name(const std::string& s);

// Variable precedence x_n > ... > x_1; ties compare exponents from x_n downward.
struct MonomialOrder {
  OrderKind kind = OrderKind::DegLex;
  // Negative, zero, positive like a three-way comparison.
  int compare(const ExponentVector& a, const ExponentVector& b) const;
  bool less(const ExponentVector& a, const ExponentVector& b) const { return compare(a, b) < 0; }
};

struct DegLexLess {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const {
    return MonomialOrder{OrderKind::DegLex}.compare(a, b) < 0;
  }
};

// Element of A in normal form: left coefficients on standard monomials, no zero terms.
class SkewPoly {
 public:
  using Terms = std::map<ExponentVector, Element, DegLexLess>;

  SkewPoly() = default;
  static SkewPoly constant(const Ring& r, std::size_t n, const Element& c);
  static SkewPoly term(const Ring& r, const Element& c, const ExponentVector& a);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }
  // -1 for the zero polynomial
  int degree() const;
  Element coeff(const Ring& r, const ExponentVector& a) const;

  // Accumulates c·x^a, dropping the term when it cancels.
  void add_term(const Ring& r, const ExponentVector& a, const Element& c);
  bool operator==(const SkewPoly& o) const { return terms_ == o.terms_; }

 private:
  Terms terms_;
};

struct LeadingData {
  std::optional<ExponentVector> exp;  // empty for f = 0
  Element lc;
  SkewPoly lm, lt;
  std::optional<std::uint32_t> deg;
};

LeadingData leading_data(const Ring& r, const SkewPoly& f, const MonomialOrder& order);

SkewPoly poly_add(const Ring& r, const SkewPoly& f, const SkewPoly& g);
SkewPoly poly_neg(const Ring& r, const SkewPoly& f);
SkewPoly poly_sub(const Ring& r, const SkewPoly& f, const SkewPoly& g);
// a·f, multiplying every coefficient on the left
SkewPoly poly_scale(const Ring& r, const Element& a, const SkewPoly& f);

std::string monomial_str(const ExponentVector& a);
// Terms in decreasing order, coefficient 1 omitted, compound coefficients parenthesised.
std::string render(const Ring& r, const SkewPoly& f, const MonomialOrder& order = {});

}  // namespace spbw
