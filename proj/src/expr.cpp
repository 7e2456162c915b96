#include "spbw/expr.hpp"

#include <algorithm>
#include <cctype>

namespace spbw {

namespace {

bool has_t(const Ring& r) {
  return r.kind() == RingKind::PolyOverField ||
         (r.kind() == RingKind::TruncatedPoly && r.descriptor().poly_modulus.size() >= 3);
}

Element t_element(const Ring& r) {
  if (r.kind() == RingKind::PolyOverField) return PolyZp{{0, 1}};
  const auto& f = as_finite(r, "t");
  std::vector<std::uint32_t> c(r.descriptor().poly_modulus.size() - 1, 0);
  c[1] = 1;
  return *f.index_of_coords(c);
}

// Embeds a base-ring element as a constant of a truncated polynomial ring.
Element trunc_constant(const FiniteRing& r, const Element& b) {
  std::vector<std::uint32_t> c(r.descriptor().poly_modulus.size() - 1, 0);
  c[0] = b.index();
  return *r.index_of_coords(c);
}

// Splits "a,b,c" at top-level commas.
std::vector<std::string> split_top(const std::string& s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char ch : s) {
    if (ch == '(' || ch == '[') ++depth;
    if (ch == ')' || ch == ']') --depth;
    if (ch == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\n\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\n\r");
  return s.substr(b, e - b + 1);
}

BigInt parse_bigint(const std::string& raw) {
  std::string s = trim(raw);
  bool neg = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    neg = s[0] == '-';
    s = trim(s.substr(1));
  }
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw ParseError("expected an integer, got '" + raw + "'");
  BigInt v(s);
  return neg ? BigInt(-v) : v;
}

Rational parse_rational(const std::string& raw) {
  auto slash = raw.find('/');
  if (slash == std::string::npos) return Rational(parse_bigint(raw));
  BigInt p = parse_bigint(raw.substr(0, slash)), q = parse_bigint(raw.substr(slash + 1));
  if (q == 0) throw ParseError("zero denominator in '" + raw + "'");
  return Rational(p, q);
}

Element integer_element(const Ring& r, const BigInt& v) {
  if (r.kind() == RingKind::Integers) return v;
  if (r.kind() == RingKind::StructuredMatrixZQ) return MatZQ{v, 0};
  BigInt lim = BigInt(1) << 62;
  if (v >= lim || v <= -lim) throw ParseError("integer literal too large for " + r.descriptor().describe());
  return r.from_integer(static_cast<long long>(v));
}

class Parser {
 public:
  Parser(const Ring& ring, std::size_t n, const std::string& s) : r_(ring), n_(n), s_(s) {}

  ExprNode parse_all() {
    ExprNode e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  const Ring& r_;
  std::size_t n_;
  const std::string& s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + s_ + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool at_word(const char* w) const {
    std::size_t k = 0;
    while (w[k]) {
      if (pos_ + k >= s_.size() || s_[pos_ + k] != w[k]) return false;
      ++k;
    }
    return true;
  }
  // Text up to the bracket matching the one just consumed.
  std::string enclosed(char open, char close) {
    int depth = 1;
    std::size_t start = pos_;
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (c == open) ++depth;
      if (c == close && --depth == 0) {
        std::string out = s_.substr(start, pos_ - start);
        ++pos_;
        return out;
      }
      ++pos_;
    }
    fail(std::string("missing '") + close + "'");
  }
  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return s_.substr(start, pos_ - start);
  }

  static ExprNode lit(Element v) {
    ExprNode e;
    e.kind = ExprNode::Kind::Literal;
    e.value = std::move(v);
    return e;
  }
  static ExprNode bin(ExprNode::Kind k, ExprNode a, ExprNode b) {
    ExprNode e;
    e.kind = k;
    e.kids.push_back(std::move(a));
    e.kids.push_back(std::move(b));
    return e;
  }

  ExprNode expr() {
    ExprNode e = term();
    for (;;) {
      if (eat('+')) e = bin(ExprNode::Kind::Add, std::move(e), term());
      else if (eat('-')) e = bin(ExprNode::Kind::Sub, std::move(e), term());
      else return e;
    }
  }
  ExprNode term() {
    ExprNode e = factor();
    while (eat('*')) e = bin(ExprNode::Kind::Mul, std::move(e), factor());
    return e;
  }
  ExprNode factor() {
    if (eat('-')) {
      ExprNode inner = factor();
      if (inner.kind == ExprNode::Kind::Literal) return lit(r_.neg(inner.value));
      ExprNode e;
      e.kind = ExprNode::Kind::Neg;
      e.kids.push_back(std::move(inner));
      return e;
    }
    ExprNode a = atom();
    if (eat('^')) {
      skip();
      std::string d = digits();
      if (d.size() > 9) fail("exponent too large");
      ExprNode e;
      e.kind = ExprNode::Kind::Pow;
      e.power = static_cast<std::uint32_t>(std::stoul(d));
      e.kids.push_back(std::move(a));
      return e;
    }
    return a;
  }

  ExprNode atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return lit(integer_element(r_, BigInt(digits())));
    if (c == '#') {
      ++pos_;
      const auto& f = as_finite(r_, "#k literal");
      std::string d = digits();
      if (d.size() > 9 || std::stoul(d) >= f.size()) fail("element index out of range");
      return lit(Element(static_cast<std::uint32_t>(std::stoul(d))));
    }
    if (c == 'x') {
      ++pos_;
      if (n_ == 0) fail("variables are not allowed here");
      std::string d = digits();
      if (d.size() > 9 || std::stoul(d) < 1 || std::stoul(d) > n_) fail("variable x" + d + " out of range");
      ExprNode e;
      e.kind = ExprNode::Kind::Var;
      e.var = std::stoul(d) - 1;
      return e;
    }
    if (at_word("poly(")) {
      pos_ += 5;
      return lit(poly_literal(enclosed('(', ')')));
    }
    if (c == 't' && (pos_ + 1 >= s_.size() || !std::isalnum(static_cast<unsigned char>(s_[pos_ + 1])))) {
      if (!has_t(r_)) fail("'t' is not an element of " + r_.descriptor().describe());
      ++pos_;
      return lit(t_element(r_));
    }
    if (c == '[') {
      ++pos_;
      return lit(bracket_literal(enclosed('[', ']')));
    }
    if (c == '(') {
      ++pos_;
      std::size_t save = pos_;
      std::string inside = enclosed('(', ')');
      auto parts = split_top(inside);
      if (parts.size() > 1) return lit(tuple_literal(parts));
      pos_ = save;
      ExprNode e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Element tuple_literal(const std::vector<std::string>& parts) {
    if (r_.kind() != RingKind::DirectProduct) fail("tuple literal needs a product ring");
    const auto& f = as_finite(r_, "tuple");
    const auto& comps = f.layout().components;
    if (parts.size() != comps.size()) fail("tuple has the wrong number of components");
    std::vector<std::uint32_t> coords;
    for (std::size_t k = 0; k < parts.size(); ++k) coords.push_back(parse_element(*comps[k], parts[k]).index());
    return *f.index_of_coords(coords);
  }

  Element bracket_literal(const std::string& inside) {
    auto parts = split_top(inside);
    if (r_.kind() == RingKind::StructuredMatrixZQ) {
      if (parts.size() != 2) fail("matrix-zq literal is [a,p/q]");
      return MatZQ{parse_bigint(parts[0]), parse_rational(trim(parts[1]))};
    }
    if (r_.kind() == RingKind::UpperTriangular2x2) {
      const auto& f = as_finite(r_, "matrix literal");
      const auto& base = *f.layout().components[0];
      std::vector<std::string> cells;
      if (parts.size() == 2) {
        for (auto& row : parts) {
          std::string t = trim(row);
          if (t.size() < 2 || t.front() != '[' || t.back() != ']') fail("matrix rows are [a,b]");
          auto rc = split_top(t.substr(1, t.size() - 2));
          if (rc.size() != 2) fail("matrix rows have two entries");
          cells.insert(cells.end(), rc.begin(), rc.end());
        }
        if (!base.is_zero(parse_element(base, cells[2]))) fail("lower-left entry must be 0");
        cells.erase(cells.begin() + 2);
      } else if (parts.size() == 3) {
        cells = parts;
      } else {
        fail("upper-triangular literal is [[a,b],[0,d]]");
      }
      std::vector<std::uint32_t> coords;
      for (auto& cell : cells) coords.push_back(parse_element(base, cell).index());
      return *f.index_of_coords(coords);
    }
    fail("bracket literal is not valid in " + r_.descriptor().describe());
  }

  Element poly_literal(const std::string& inside) {
    if (r_.kind() != RingKind::PolyOverField && r_.kind() != RingKind::TruncatedPoly)
      fail("poly(...) needs a polynomial coefficient ring");
    auto parts = split_top(inside);
    Element acc = r_.zero(), pw = r_.one();
    const Element t = r_.kind() == RingKind::PolyOverField ? Element(PolyZp{{0, 1}})
                      : has_t(r_)                          ? t_element(r_)
                                                           : Element();
    for (std::size_t k = 0; k < parts.size(); ++k) {
      Element c;
      if (r_.kind() == RingKind::PolyOverField) {
        c = integer_element(r_, parse_bigint(parts[k]));
      } else {
        const auto& f = as_finite(r_, "poly literal");
        c = trunc_constant(f, parse_element(*f.layout().components[0], parts[k]));
      }
      if (k > 0 && !has_t(r_)) fail("poly(...) has too many coefficients");
      acc = r_.add(acc, r_.mul(c, pw));
      if (k + 1 < parts.size()) pw = r_.mul(pw, t);
    }
    return acc;
  }
};

// Literal text that re-parses to the same literal node.
std::string literal_text(const Ring& r, const Element& v) {
  switch (r.kind()) {
    case RingKind::Integers: {
      const auto& z = std::get<BigInt>(v.v);
      return z < 0 ? "(" + z.str() + ")" : z.str();
    }
    case RingKind::PolyOverField: {
      const auto& p = std::get<PolyZp>(v.v);
      if (p.c.size() <= 1) return r.format(v);
      if (p.c == std::vector<std::uint32_t>{0, 1}) return "t";
      std::string s = "poly(";
      for (std::size_t k = 0; k < p.c.size(); ++k) s += (k ? "," : "") + std::to_string(p.c[k]);
      return s + ")";
    }
    case RingKind::TruncatedPoly: {
      const auto& f = as_finite(r, "render");
      const auto& c = f.layout().coords[v.index()];
      const auto& base = *f.layout().components[0];
      std::size_t last = 0;
      for (std::size_t k = 0; k < c.size(); ++k)
        if (c[k] != 0) last = k;
      if (last == 0) return base.format(c[0]);
      if (has_t(r) && v == t_element(r)) return "t";
      std::string s = "poly(";
      for (std::size_t k = 0; k <= last; ++k) s += (k ? "," : "") + base.format(c[k]);
      return s + ")";
    }
    default: return r.format(v);
  }
}

std::string render_prec(const Ring& r, const ExprNode& e, int prec) {
  auto wrap = [&](int mine, std::string s) { return mine < prec ? "(" + s + ")" : s; };
  switch (e.kind) {
    case ExprNode::Kind::Literal: return literal_text(r, e.value);
    case ExprNode::Kind::Var: return "x" + std::to_string(e.var + 1);
    case ExprNode::Kind::Add: return wrap(1, render_prec(r, e.kids[0], 1) + " + " + render_prec(r, e.kids[1], 2));
    case ExprNode::Kind::Sub: return wrap(1, render_prec(r, e.kids[0], 1) + " - " + render_prec(r, e.kids[1], 2));
    case ExprNode::Kind::Mul: return wrap(2, render_prec(r, e.kids[0], 2) + "*" + render_prec(r, e.kids[1], 3));
    case ExprNode::Kind::Neg: return wrap(3, "-" + render_prec(r, e.kids[0], 3));
    case ExprNode::Kind::Pow: return wrap(3, render_prec(r, e.kids[0], 4) + "^" + std::to_string(e.power));
  }
  return {};
}

}  // namespace

ExprNode parse_expr(const Ring& ring, std::size_t n, const std::string& text) {
  return Parser(ring, n, text).parse_all();
}

std::string render_expr(const Ring& ring, const ExprNode& e) { return render_prec(ring, e, 0); }

Element evaluate_element(const Ring& r, const ExprNode& e) {
  switch (e.kind) {
    case ExprNode::Kind::Literal: return e.value;
    case ExprNode::Kind::Var: throw ParseError("variable in a ring-element expression");
    case ExprNode::Kind::Add: return r.add(evaluate_element(r, e.kids[0]), evaluate_element(r, e.kids[1]));
    case ExprNode::Kind::Sub: return r.sub(evaluate_element(r, e.kids[0]), evaluate_element(r, e.kids[1]));
    case ExprNode::Kind::Mul: return r.mul(evaluate_element(r, e.kids[0]), evaluate_element(r, e.kids[1]));
    case ExprNode::Kind::Neg: return r.neg(evaluate_element(r, e.kids[0]));
    case ExprNode::Kind::Pow: {
      Element base = evaluate_element(r, e.kids[0]), acc = r.one();
      for (std::uint32_t k = e.power; k; k >>= 1) {
        if (k & 1) acc = r.mul(acc, base);
        if (k > 1) base = r.mul(base, base);
      }
      return acc;
    }
  }
  return r.zero();
}

SkewPoly evaluate(const SkewExtension& a, const ExprNode& e) {
  switch (e.kind) {
    case ExprNode::Kind::Literal: return a.constant(e.value);
    case ExprNode::Kind::Var: return a.variable(e.var);
    case ExprNode::Kind::Add: return a.add(evaluate(a, e.kids[0]), evaluate(a, e.kids[1]));
    case ExprNode::Kind::Sub: return a.sub(evaluate(a, e.kids[0]), evaluate(a, e.kids[1]));
    case ExprNode::Kind::Mul: return a.poly_mul(evaluate(a, e.kids[0]), evaluate(a, e.kids[1]));
    case ExprNode::Kind::Neg: return poly_neg(a.ring(), evaluate(a, e.kids[0]));
    case ExprNode::Kind::Pow: {
      const SkewPoly base = evaluate(a, e.kids[0]);
      SkewPoly acc = a.constant(a.ring().one());
      for (std::uint32_t k = 0; k < e.power; ++k) acc = a.poly_mul(acc, base);
      return acc;
    }
  }
  return {};
}

Element parse_element(const Ring& ring, const std::string& text) {
  return evaluate_element(ring, parse_expr(ring, 0, text));
}

SkewPoly parse_poly(const SkewExtension& a, const std::string& text) {
  return evaluate(a, parse_expr(a.ring(), a.n(), text));
}

}  // namespace spbw
