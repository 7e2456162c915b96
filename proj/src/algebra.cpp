#include "spbw/algebra.hpp"

namespace spbw {

SkewPresentation trivial_presentation(RingPtr ring, std::size_t n, std::string name) {
  SkewPresentation p;
  p.n = n;
  for (std::size_t i = 0; i < n; ++i) {
    p.sigma.push_back(EndoMap::identity(ring));
    p.delta.push_back(SigmaDerivation::zero(p.sigma.back()));
  }
  p.ring = std::move(ring);
  p.name = std::move(name);
  return p;
}

struct SkewExtension::Budget {
  explicit Budget(std::uint64_t l) : limit(l) {}
  std::uint64_t limit;
  std::uint64_t steps = 0;
  std::set<std::pair<std::size_t, ExponentVector>> active;
};

SkewExtension::SkewExtension(SkewPresentation p, PresentationFlags flags, std::uint64_t budget)
    : p_(std::move(p)), flags_(flags), budget_(budget) {
  const std::size_t n = p_.n;
  const auto& R = *p_.ring;
  c_.assign(n, std::vector<Element>(n, R.one()));
  r_.assign(n, std::vector<std::vector<Element>>(n, std::vector<Element>(n + 1, R.zero())));
  for (const auto& [ij, v] : p_.c) c_[ij.first][ij.second] = v;
  for (const auto& [ij, v] : p_.r) r_[ij.first][ij.second] = v;
}

const Element& SkewExtension::c(std::size_t i, std::size_t j) const { return c_.at(i).at(j); }
const std::vector<Element>& SkewExtension::r(std::size_t i, std::size_t j) const { return r_.at(i).at(j); }

void SkewExtension::check(const SkewPoly& f) const {
  for (const auto& [a, c] : f.terms()) {
    if (a.size() != n()) throw RingMismatch("polynomial has " + std::to_string(a.size()) + " variables, expected " +
                                            std::to_string(n()));
    ring().check(c);
  }
}

Element SkewExtension::sigma_alpha(const ExponentVector& alpha, const Element& a) const {
  Element x = a;
  for (std::size_t i = n(); i-- > 0;)
    for (std::uint32_t k = 0; k < alpha[i]; ++k) x = p_.sigma[i](x);
  return x;
}

SkewPoly SkewExtension::var_times_monomial(std::size_t i, const ExponentVector& g, Budget& b) const {
  const std::size_t nn = n();
  std::size_t j = 0;
  while (j < nn && g[j] == 0) ++j;
  const auto& R = ring();
  if (j >= i) return SkewPoly::term(R, R.one(), g + ExponentVector::unit(nn, i));
  auto key = std::make_pair(i, g);
  {
    std::lock_guard<std::mutex> lock(memo_mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  if (++b.steps > b.limit)
    throw RewriteBudgetExceeded("more than " + std::to_string(b.limit) + " rewrite steps in one product");
  if (!b.active.insert(key).second)
    throw RewriteBudgetExceeded("rewriting x" + std::to_string(i + 1) + "*" + monomial_str(g) + " loops");
  // x_i x^g = x_i x_j x^{g'} with j the lowest variable present and j < i
  ExponentVector gp = g;
  --gp.e[j];
  const SkewPoly inner = var_times_monomial(i, gp, b);
  SkewPoly res = poly_scale(R, c_[j][i], var_times_poly(j, inner, b));
  const auto& rv = r_[j][i];
  res.add_term(R, gp, rv[0]);
  for (std::size_t k = 0; k < nn; ++k) {
    if (R.is_zero(rv[k + 1])) continue;
    res = poly_add(R, res, poly_scale(R, rv[k + 1], var_times_monomial(k, gp, b)));
  }
  b.active.erase(key);
  std::lock_guard<std::mutex> lock(memo_mutex_);
  memo_.emplace(std::move(key), res);
  return res;
}

SkewPoly SkewExtension::var_times_poly(std::size_t i, const SkewPoly& g, Budget& b) const {
  const auto& R = ring();
  const auto& s = p_.sigma[i];
  const auto& d = p_.delta[i];
  SkewPoly out;
  for (const auto& [a, c] : g.terms()) {
    const Element sc = s(c);
    if (!R.is_zero(sc)) out = poly_add(R, out, poly_scale(R, sc, var_times_monomial(i, a, b)));
    out.add_term(R, a, d(c));
  }
  return out;
}

SkewPoly SkewExtension::var_times_poly(std::size_t i, const SkewPoly& g) const {
  check(g);
  Budget b(budget_);
  return var_times_poly(i, g, b);
}

SkewPoly SkewExtension::var_times_coeff(std::size_t i, const Element& a) const {
  ring().check(a);
  return var_times_poly(i, constant(a));
}

SkewPoly SkewExtension::swap_rewrite(std::size_t j, std::size_t i) const {
  if (!(j > i && j < n())) throw DefinitionError("swap_rewrite needs j > i");
  const auto& R = ring();
  ExponentVector ij = ExponentVector::unit(n(), i) + ExponentVector::unit(n(), j);
  SkewPoly out = SkewPoly::term(R, c_[i][j], ij);
  const auto& rv = r_[i][j];
  out.add_term(R, ExponentVector(n()), rv[0]);
  for (std::size_t k = 0; k < n(); ++k) out.add_term(R, ExponentVector::unit(n(), k), rv[k + 1]);
  return out;
}

SkewPoly SkewExtension::monomial_times_poly(const ExponentVector& alpha, const SkewPoly& g) const {
  check(g);
  Budget b(budget_);
  SkewPoly out = g;
  for (std::size_t i = n(); i-- > 0;)
    for (std::uint32_t k = 0; k < alpha[i]; ++k) out = var_times_poly(i, out, b);
  return out;
}

SkewPoly SkewExtension::monomial_times_coeff(const ExponentVector& alpha, const Element& a) const {
  ring().check(a);
  return monomial_times_poly(alpha, constant(a));
}

SkewPoly SkewExtension::poly_mul(const SkewPoly& f, const SkewPoly& g) const {
  check(f);
  check(g);
  const auto& R = ring();
  Budget b(budget_);
  SkewPoly out;
  for (const auto& [alpha, a] : f.terms()) {
    SkewPoly t = g;
    for (std::size_t i = n(); i-- > 0;)
      for (std::uint32_t k = 0; k < alpha[i]; ++k) t = var_times_poly(i, t, b);
    out = poly_add(R, out, poly_scale(R, a, t));
  }
  return out;
}

// ---------------------------------------------------------------- validation

namespace {

std::string var(std::size_t i) { return "x" + std::to_string(i + 1); }

bool same_action(const EndoMap& a, const EndoMap& b) { return a.signature() == b.signature(); }

}  // namespace

namespace {

// Rewriting x_jx_i and then x_ix_j back gives d*c_{i,j} = 1 for some d.
bool left_invertible(const Ring& R, const Element& c) {
  if (!R.is_finite()) return R.inverse(c).has_value();
  for (const auto& d : R.sample())
    if (R.is_one(R.mul(d, c))) return true;
  return false;
}

}  // namespace

ExtensionPtr validate_presentation(SkewPresentation p, const Limits& limits) {
  if (!p.ring) throw DefinitionError("presentation has no coefficient ring");
  const auto& R = *p.ring;
  const std::size_t n = p.n;
  if (n < 1) throw PresentationInconsistent("at least one variable is required");
  if (p.sigma.size() != n || p.delta.size() != n)
    throw PresentationInconsistent("expected " + std::to_string(n) + " sigmas and deltas");
  PresentationFlags flags;
  flags.exhaustive = R.is_finite();
  flags.sigma_injective = true;
  bool all_bijective = true;
  for (std::size_t i = 0; i < n; ++i) {
    require_same_ring(R, *p.sigma[i].ring());
    require_same_ring(R, *p.delta[i].sigma().ring());
    if (!same_action(p.sigma[i], p.delta[i].sigma()))
      throw PresentationInconsistent("delta_" + std::to_string(i + 1) + " is not paired with sigma_" +
                                     std::to_string(i + 1));
    const MapReport rep = validate_endomorphism(p.sigma[i], limits);
    validate_derivation(p.delta[i], limits);
    flags.sigma_injective = flags.sigma_injective && rep.injective;
    all_bijective = all_bijective && rep.injective && rep.surjective;
  }
  bool c_invertible = true;
  for (const auto& [ij, v] : p.c) {
    if (!(ij.first < ij.second && ij.second < n)) throw PresentationInconsistent("c entry needs i < j <= n");
    R.check(v);
    if (R.is_zero(v))
      throw PresentationInconsistent("c_{" + std::to_string(ij.first + 1) + "," + std::to_string(ij.second + 1) +
                                     "} is zero");
    if (!R.inverse(v)) c_invertible = false;
    if (!left_invertible(R, v))
      throw PresentationInconsistent("c_{" + std::to_string(ij.first + 1) + "," + std::to_string(ij.second + 1) +
                                     "} = " + R.format(v) + " is not left invertible");
  }
  bool r_zero = true;
  for (const auto& [ij, v] : p.r) {
    if (!(ij.first < ij.second && ij.second < n)) throw PresentationInconsistent("r entry needs i < j <= n");
    if (v.size() != n + 1) throw PresentationInconsistent("r entry needs n+1 constants");
    for (const auto& x : v) {
      R.check(x);
      if (!R.is_zero(x)) r_zero = false;
    }
  }
  bool delta_zero = true;
  for (const auto& d : p.delta) delta_zero = delta_zero && d.is_zero();
  if (!R.is_finite() && !delta_zero) {
    // structured derivations carry no zero flag; look at the sample
    delta_zero = true;
    for (const auto& d : p.delta)
      for (const auto& a : R.sample())
        if (!R.is_zero(d(a))) delta_zero = false;
  }
  flags.quasi_commutative = delta_zero && r_zero;
  flags.bijective = all_bijective && c_invertible;
  if (p.claim_quasi_commutative && *p.claim_quasi_commutative && !flags.quasi_commutative)
    throw PresentationInconsistent("quasi-commutative flag set but some delta or r constant is nonzero");
  if (p.claim_bijective && *p.claim_bijective && !flags.bijective)
    throw PresentationInconsistent("bijective flag set but some sigma is not bijective or some c is not invertible");

  auto ext = std::make_shared<SkewExtension>(std::move(p), flags, limits.rewrite_budget);
  const SkewExtension& A = *ext;
  const auto elems = R.sample();
  // (x_j x_i) r = x_j (x_i r)
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (const auto& a : elems) {
        const SkewPoly lhs = A.poly_mul(A.swap_rewrite(j, i), A.constant(a));
        const SkewPoly rhs = A.var_times_poly(j, A.var_times_coeff(i, a));
        if (!(lhs == rhs))
          throw PresentationInconsistent("(" + var(j) + "*" + var(i) + ")*r != " + var(j) + "*(" + var(i) +
                                         "*r) at r = " + R.format(a) + ": " + A.render(lhs) + " vs " + A.render(rhs));
      }
  // (x_k x_j) x_i = x_k (x_j x_i)
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const SkewPoly lhs = A.poly_mul(A.swap_rewrite(k, j), A.variable(i));
        const SkewPoly rhs = A.var_times_poly(k, A.swap_rewrite(j, i));
        if (!(lhs == rhs))
          throw PresentationInconsistent("(" + var(k) + "*" + var(j) + ")*" + var(i) + " != " + var(k) + "*(" +
                                         var(j) + "*" + var(i) + "): " + A.render(lhs) + " vs " + A.render(rhs));
      }
  // x_i (r s) = (x_i r) s
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& a : elems)
      for (const auto& b : elems) {
        const SkewPoly lhs = A.var_times_coeff(i, R.mul(a, b));
        const SkewPoly rhs = A.poly_mul(A.var_times_coeff(i, a), A.constant(b));
        if (!(lhs == rhs))
          throw PresentationInconsistent(var(i) + "*(r*s) != (" + var(i) + "*r)*s at r = " + R.format(a) +
                                         ", s = " + R.format(b));
      }
  return ext;
}

// ---------------------------------------------------------------- extended maps

ExtensionHypotheses check_extension_hypotheses(const SkewExtension& A, const Limits& limits) {
  (void)limits;
  const auto& R = A.ring();
  const auto elems = R.sample();
  const std::size_t n = A.n();
  auto fail = [](std::string why) { return ExtensionHypotheses{false, std::move(why)}; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& a : elems) {
        if (A.sigma(i)(A.delta(j)(a)) != A.delta(j)(A.sigma(i)(a)))
          return fail("sigma_" + std::to_string(i + 1) + " delta_" + std::to_string(j + 1) +
                      " != delta_" + std::to_string(j + 1) + " sigma_" + std::to_string(i + 1) + " at " + R.format(a));
        if (A.delta(i)(A.delta(j)(a)) != A.delta(j)(A.delta(i)(a)))
          return fail("delta_" + std::to_string(i + 1) + " delta_" + std::to_string(j + 1) + " != delta_" +
                      std::to_string(j + 1) + " delta_" + std::to_string(i + 1) + " at " + R.format(a));
      }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!R.is_zero(A.delta(k)(A.c(i, j))))
          return fail("delta_" + std::to_string(k + 1) + " does not kill c_{" + std::to_string(i + 1) + "," +
                      std::to_string(j + 1) + "}");
        for (const auto& x : A.r(i, j))
          if (!R.is_zero(A.delta(k)(x)))
            return fail("delta_" + std::to_string(k + 1) + " does not kill r constant " + R.format(x));
      }
  return {};
}

void require_extension_hypotheses(const SkewExtension& A, const Limits& limits) {
  const auto h = check_extension_hypotheses(A, limits);
  if (!h.ok) throw HypothesesFail(h.failure);
}

SkewPoly extend_sigma(const SkewExtension& A, std::size_t k, const SkewPoly& f) {
  A.check(f);
  SkewPoly out;
  for (const auto& [a, c] : f.terms()) out.add_term(A.ring(), a, A.sigma(k)(c));
  return out;
}

SkewPoly extend_delta(const SkewExtension& A, std::size_t k, const SkewPoly& f) {
  A.check(f);
  SkewPoly out;
  for (const auto& [a, c] : f.terms()) out.add_term(A.ring(), a, A.delta(k)(c));
  return out;
}

PolyMap extended_sigma(ExtensionPtr a, std::size_t k) {
  if (k >= a->n()) throw DefinitionError("no variable x" + std::to_string(k + 1));
  return [a, k](const SkewPoly& f) { return extend_sigma(*a, k, f); };
}

PolyMap extended_delta(ExtensionPtr a, std::size_t k, const Limits& limits) {
  if (k >= a->n()) throw DefinitionError("no variable x" + std::to_string(k + 1));
  require_extension_hypotheses(*a, limits);
  return [a, k](const SkewPoly& f) { return extend_delta(*a, k, f); };
}

}  // namespace spbw
