// Brute-force reference implementations. Nothing here calls the library's search,
// ideal or normal-form code; rings are rebuilt from plain integer arithmetic.
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "spbw/algebra.hpp"

namespace oracle {

struct PlainRing {
  int m = 0;
  std::function<int(int, int)> add, mul;
  std::function<std::string(int)> fmt;
  int zero = 0, one = 1;
};

inline PlainRing zn(int n) {
  return {n, [n](int a, int b) { return (a + b) % n; }, [n](int a, int b) { return (a * b) % n; },
          [](int a) { return std::to_string(a); }, 0, 1};
}

// (a,b) stored as 2a+b
inline PlainRing z2xz2() {
  return {4, [](int x, int y) { return x ^ y; }, [](int x, int y) { return x & y; },
          [](int x) { return "(" + std::to_string(x >> 1) + "," + std::to_string(x & 1) + ")"; }, 0, 3};
}

// [[a,b],[0,c]] stored as 4a+2b+c
inline PlainRing ut2z2() {
  auto mul = [](int x, int y) {
    int a = x >> 2, b = (x >> 1) & 1, c = x & 1;
    int d = y >> 2, e = (y >> 1) & 1, f = y & 1;
    return ((a * d) % 2) << 2 | ((a * e + b * f) % 2) << 1 | (c * f) % 2;
  };
  auto fmt = [](int x) {
    return "[[" + std::to_string(x >> 2) + "," + std::to_string((x >> 1) & 1) + "],[0," + std::to_string(x & 1) + "]]";
  };
  return {8, [](int x, int y) { return x ^ y; }, mul, fmt, 0, 5};
}

using Set = std::set<int>;

inline std::set<std::string> names(const PlainRing& R, const Set& s) {
  std::set<std::string> out;
  for (int x : s) out.insert(R.fmt(x));
  return out;
}

inline Set idempotents(const PlainRing& R) {
  Set s;
  for (int e = 0; e < R.m; ++e)
    if (R.mul(e, e) == e) s.insert(e);
  return s;
}

inline Set right_annihilator(const PlainRing& R, const Set& S) {
  Set out;
  for (int r = 0; r < R.m; ++r) {
    bool ok = true;
    for (int s : S) ok = ok && R.mul(s, r) == R.zero;
    if (ok) out.insert(r);
  }
  return out;
}

inline Set principal_right(const PlainRing& R, int e) {
  Set out;
  for (int r = 0; r < R.m; ++r) out.insert(R.mul(e, r));
  return out;
}

inline bool generated_by_idempotent(const PlainRing& R, const Set& s) {
  for (int e : idempotents(R))
    if (principal_right(R, e) == s) return true;
  return false;
}

// Every subset S of R, not just the closure trick.
inline bool is_baer(const PlainRing& R) {
  for (int mask = 0; mask < (1 << R.m); ++mask) {
    Set S;
    for (int i = 0; i < R.m; ++i)
      if (mask >> i & 1) S.insert(i);
    if (!generated_by_idempotent(R, right_annihilator(R, S))) return false;
  }
  return true;
}

inline bool is_two_sided_ideal(const PlainRing& R, const Set& s) {
  if (!s.count(R.zero)) return false;
  for (int a : s) {
    for (int b : s)
      if (!s.count(R.add(a, b))) return false;
    for (int r = 0; r < R.m; ++r)
      if (!s.count(R.mul(a, r)) || !s.count(R.mul(r, a))) return false;
  }
  return true;
}

// Scan every subset and keep the ones that are ideals.
inline std::set<Set> two_sided_ideals(const PlainRing& R) {
  std::set<Set> out;
  for (int mask = 0; mask < (1 << R.m); ++mask) {
    Set s;
    for (int i = 0; i < R.m; ++i)
      if (mask >> i & 1) s.insert(i);
    if (is_two_sided_ideal(R, s)) out.insert(s);
  }
  return out;
}

inline bool is_abelian(const PlainRing& R) {
  for (int e : idempotents(R))
    for (int x = 0; x < R.m; ++x)
      if (R.mul(e, x) != R.mul(x, e)) return false;
  return true;
}

inline Set left_semicentral(const PlainRing& R) {
  Set out;
  for (int e : idempotents(R)) {
    bool ok = true;
    for (int x = 0; x < R.m; ++x) ok = ok && R.mul(R.mul(e, x), e) == R.mul(x, e);
    if (ok) out.insert(e);
  }
  return out;
}

inline Set regular(const PlainRing& R) {
  Set out;
  for (int a = 0; a < R.m; ++a) {
    bool ok = true;
    for (int b = 1; b < R.m; ++b) ok = ok && R.mul(a, b) != R.zero && R.mul(b, a) != R.zero;
    if (a != R.zero && ok) out.insert(a);
  }
  return out;
}

// Word rewriting in the free algebra on ring letters and variables, applying the
// commutation rules literally until the word is a standard monomial.
class NaiveRewriter {
 public:
  explicit NaiveRewriter(const spbw::SkewExtension& a) : a_(a), R_(a.ring()) {}

  struct Letter {
    bool is_var = false;
    std::size_t var = 0;
    spbw::Element r;
  };
  using Word = std::vector<Letter>;

  std::map<std::vector<std::uint32_t>, spbw::Element> product(const spbw::SkewPoly& f, const spbw::SkewPoly& g) const {
    std::map<std::vector<std::uint32_t>, spbw::Element> out;
    for (const auto& [alpha, c] : f.terms())
      for (const auto& [beta, d] : g.terms()) {
        Word w{{false, 0, c}};
        append_monomial(w, alpha);
        w.push_back({false, 0, d});
        append_monomial(w, beta);
        reduce(w, R_.one(), out);
      }
    for (auto it = out.begin(); it != out.end();) it = R_.is_zero(it->second) ? out.erase(it) : std::next(it);
    return out;
  }

  static std::map<std::vector<std::uint32_t>, spbw::Element> terms_of(const spbw::SkewPoly& f) {
    std::map<std::vector<std::uint32_t>, spbw::Element> out;
    for (const auto& [alpha, c] : f.terms()) out[alpha.e] = c;
    return out;
  }

 private:
  void append_monomial(Word& w, const spbw::ExponentVector& alpha) const {
    for (std::size_t i = 0; i < alpha.size(); ++i)
      for (std::uint32_t k = 0; k < alpha[i]; ++k) w.push_back({true, i, {}});
  }

  void reduce(Word w, spbw::Element coeff, std::map<std::vector<std::uint32_t>, spbw::Element>& out) const {
    // absorb leading ring letters
    while (!w.empty() && !w.front().is_var) {
      coeff = R_.mul(coeff, w.front().r);
      w.erase(w.begin());
    }
    if (R_.is_zero(coeff)) return;
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
      const Letter &u = w[k], &v = w[k + 1];
      if (!u.is_var && !v.is_var) {
        Word x = w;
        x[k].r = R_.mul(u.r, v.r);
        x.erase(x.begin() + static_cast<long>(k) + 1);
        return reduce(std::move(x), coeff, out);
      }
      if (u.is_var && !v.is_var) {
        // x_i r -> sigma_i(r) x_i + delta_i(r)
        Word x = w, y = w;
        x[k] = {false, 0, a_.sigma(u.var)(v.r)};
        x[k + 1] = u;
        y[k] = {false, 0, a_.delta(u.var)(v.r)};
        y.erase(y.begin() + static_cast<long>(k) + 1);
        reduce(std::move(x), coeff, out);
        return reduce(std::move(y), coeff, out);
      }
      if (u.is_var && v.is_var && u.var > v.var) {
        // x_j x_i -> c x_i x_j + r0 + sum r_l x_l
        const std::size_t i = v.var, j = u.var;
        const auto& rr = a_.r(i, j);
        auto splice = [&](Word mid) {
          Word x(w.begin(), w.begin() + static_cast<long>(k));
          x.insert(x.end(), mid.begin(), mid.end());
          x.insert(x.end(), w.begin() + static_cast<long>(k) + 2, w.end());
          reduce(std::move(x), coeff, out);
        };
        splice({{false, 0, a_.c(i, j)}, {true, i, {}}, {true, j, {}}});
        splice({{false, 0, rr[0]}});
        for (std::size_t l = 0; l < a_.n(); ++l) splice({{false, 0, rr[l + 1]}, {true, l, {}}});
        return;
      }
    }
    std::vector<std::uint32_t> e(a_.n(), 0);
    for (const auto& l : w) ++e[l.var];
    auto it = out.find(e);
    if (it == out.end())
      out.emplace(e, coeff);
    else
      it->second = R_.add(it->second, coeff);
  }

  const spbw::SkewExtension& a_;
  const spbw::Ring& R_;
};

}  // namespace oracle
