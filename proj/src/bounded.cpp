#include "spbw/bounded.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <mutex>
#include <thread>

namespace spbw {

std::vector<ExponentVector> monomials_up_to(std::size_t n, unsigned d) {
  std::vector<ExponentVector> out;
  ExponentVector cur(n);
  // depth-first over variables, then sort
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      cur.e[i] = k;
      self(self, i + 1, left - k);
    }
    cur.e[i] = 0;
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), DegLexLess{});
  return out;
}

std::uint64_t saturating_pow(std::uint64_t m, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    if (m != 0 && r > std::numeric_limits<std::uint64_t>::max() / m) return std::numeric_limits<std::uint64_t>::max();
    r *= m;
  }
  return r;
}

BoundedSpace::BoundedSpace(ExtensionPtr a, std::vector<ExponentVector> support)
    : a_(std::move(a)), support_(std::move(support)) {
  ring_ = &as_finite(a_->ring(), "bounded search");
  m_ = ring_->size();
  unsigned maxdeg = 0;
  for (const auto& s : support_) maxdeg = std::max(maxdeg, s.degree());
  product_ = monomials_up_to(a_->n(), 2 * maxdeg);
  std::map<ExponentVector, std::size_t> where;
  for (std::size_t k = 0; k < product_.size(); ++k) where[product_[k]] = k;
  count_ = saturating_pow(m_, support_.size());
  const std::size_t M = support_.size(), K = product_.size();
  table_.assign(M * m_ * M * K, 0);
  for (std::size_t x = 0; x < M; ++x)
    for (std::uint32_t b = 0; b < m_; ++b)
      for (std::size_t y = 0; y < M; ++y) {
        const SkewPoly p = a_->monomial_times_poly(support_[x], SkewPoly::term(*ring_, Element(b), support_[y]));
        std::uint32_t* dst = &table_[((x * m_ + b) * M + y) * K];
        for (const auto& [e, c] : p.terms()) {
          auto it = where.find(e);
          if (it == where.end())
            throw PresentationInconsistent("product " + monomial_str(support_[x]) + "*b*" + monomial_str(support_[y]) +
                                           " leaves the degree bound");
          dst[it->second] = c.index();
        }
      }
}

std::vector<std::uint32_t> BoundedSpace::decode(std::uint64_t rank) const {
  std::vector<std::uint32_t> d(M());
  for (auto& x : d) {
    x = static_cast<std::uint32_t>(rank % m_);
    rank /= m_;
  }
  return d;
}

SkewPoly BoundedSpace::to_poly(const std::vector<std::uint32_t>& digits) const {
  SkewPoly p;
  for (std::size_t k = 0; k < digits.size(); ++k) p.add_term(*ring_, support_[k], Element(digits[k]));
  return p;
}

SkewPoly BoundedSpace::dense_to_poly(const std::uint32_t* v) const {
  SkewPoly p;
  for (std::size_t k = 0; k < K(); ++k) p.add_term(*ring_, product_[k], Element(v[k]));
  return p;
}

std::optional<std::vector<std::uint32_t>> BoundedSpace::encode(const SkewPoly& f) const {
  std::vector<std::uint32_t> d(M(), 0);
  for (const auto& [e, c] : f.terms()) {
    auto it = std::find(support_.begin(), support_.end(), e);
    if (it == support_.end()) return std::nullopt;
    d[it - support_.begin()] = c.index();
  }
  return d;
}

namespace {

// Q[y][b] = Σ_x f_x · T[x][b][y], the dense product f · (b x^{support[y]}).
void fill_left_products(const BoundedSpace& s, const std::vector<std::uint32_t>& f, std::vector<std::uint32_t>& Q) {
  const auto& R = s.ring();
  const std::size_t M = s.M(), K = s.K(), m = s.m();
  Q.assign(M * m * K, 0);
  for (std::size_t x = 0; x < M; ++x) {
    const std::uint32_t a = f[x];
    if (a == 0) continue;
    for (std::size_t y = 0; y < M; ++y)
      for (std::uint32_t b = 0; b < m; ++b) {
        const std::uint32_t* t = s.entry(x, b, y);
        std::uint32_t* q = &Q[(y * m + b) * K];
        for (std::size_t k = 0; k < K; ++k)
          if (t[k]) q[k] = R.add(q[k], R.mul(a, t[k]));
      }
  }
}

struct SigmaTables {
  std::vector<std::vector<std::uint32_t>> by_monomial;  // σ^{support[x]} as an index table
};

SigmaTables sigma_tables(const BoundedSpace& s) {
  SigmaTables t;
  const auto& A = s.algebra();
  for (const auto& e : s.support()) {
    std::vector<std::uint32_t> tab(s.m());
    for (std::uint32_t b = 0; b < s.m(); ++b) tab[b] = A.sigma_alpha(e, Element(b)).index();
    t.by_monomial.push_back(std::move(tab));
  }
  return t;
}

std::optional<std::pair<std::size_t, std::size_t>> check_conclusion(const BoundedSpace& s, PairConclusion c,
                                                                    const SigmaTables& st,
                                                                    const std::vector<std::uint32_t>& f,
                                                                    const std::vector<std::uint32_t>& g) {
  const auto& R = s.ring();
  const std::size_t M = s.M(), K = s.K();
  switch (c) {
    case PairConclusion::ConstantTimesAll:
      for (std::size_t j = 0; j < M; ++j)
        if (R.mul(f[0], g[j]) != 0) return std::make_pair(std::size_t{0}, j);
      return std::nullopt;
    case PairConclusion::SigmaPowers:
      for (std::size_t i = 0; i < M; ++i) {
        if (f[i] == 0) continue;
        for (std::size_t j = 0; j < M; ++j)
          if (R.mul(f[i], st.by_monomial[i][g[j]]) != 0) return std::make_pair(i, j);
      }
      return std::nullopt;
    case PairConclusion::MonomialProducts:
      for (std::size_t i = 0; i < M; ++i) {
        if (f[i] == 0) continue;
        for (std::size_t j = 0; j < M; ++j) {
          if (g[j] == 0) continue;
          const std::uint32_t* t = s.entry(i, g[j], j);
          for (std::size_t k = 0; k < K; ++k)
            if (t[k] && R.mul(f[i], t[k]) != 0) return std::make_pair(i, j);
        }
      }
      return std::nullopt;
  }
  return std::nullopt;
}

constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

void atomic_min(std::atomic<std::uint64_t>& a, std::uint64_t v) {
  std::uint64_t cur = a.load();
  while (v < cur && !a.compare_exchange_weak(cur, v)) {
  }
}

// Runs body(f_rank) for f in [0, F) across threads in blocks; stops blocks whose start exceeds stop().
template <typename Body, typename Stop>
void parallel_blocks(std::uint64_t F, unsigned threads, Body&& body, Stop&& stop) {
  const std::uint64_t block = std::max<std::uint64_t>(1, F / (64 * std::max(1u, threads)));
  std::atomic<std::uint64_t> next{0};
  auto worker = [&]() {
    while (true) {
      const std::uint64_t start = next.fetch_add(block);
      if (start >= F || stop(start)) return;
      const std::uint64_t end = std::min(F, start + block);
      for (std::uint64_t f = start; f < end; ++f) {
        if (stop(f)) return;
        body(f);
      }
    }
  };
  if (threads <= 1) {
    worker();
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

}  // namespace

PairSearchResult search_pairs(const BoundedSpace& s, PairConclusion c, const Limits& limits) {
  const std::size_t M = s.M(), K = s.K(), m = s.m();
  const std::uint64_t G = s.count();
  const std::uint64_t total = saturating_pow(m, 2 * M);
  if (total > limits.multiplication_cap)
    throw SearchSpaceCapExceeded(std::to_string(m) + "^" + std::to_string(2 * M) + " pairs exceed the cap of " +
                                 std::to_string(limits.multiplication_cap));
  const SigmaTables st = sigma_tables(s);
  const auto& R = s.ring();
  std::atomic<std::uint64_t> best{kNone};
  std::mutex hit_mutex;
  std::map<std::uint64_t, PairHit> hits;

  auto body = [&](std::uint64_t fr) {
    const auto f = s.decode(fr);
    if (fr == 0) return;
    if (c == PairConclusion::ConstantTimesAll && f[0] == 0) return;  // conclusion is vacuous
    std::vector<std::uint32_t> Q;
    fill_left_products(s, f, Q);
    // partial[k] = Σ_{y >= k} Q[y][g_y]
    std::vector<std::uint32_t> partial((M + 1) * K, 0);
    std::vector<std::uint32_t> g(M, 0);
    auto recompute = [&](std::size_t top) {
      for (std::size_t y = top + 1; y-- > 0;) {
        const std::uint32_t* q = &Q[(y * m + g[y]) * K];
        const std::uint32_t* up = &partial[(y + 1) * K];
        std::uint32_t* dst = &partial[y * K];
        for (std::size_t k = 0; k < K; ++k) dst[k] = R.add(up[k], q[k]);
      }
    };
    recompute(M - 1);
    for (std::uint64_t gr = 0; gr < G; ++gr) {
      if (gr > 0) {
        std::size_t p = 0;
        while (++g[p] == m) {
          g[p] = 0;
          ++p;
        }
        recompute(p);
        const std::uint64_t rank = fr * G + gr;
        if (rank >= best.load()) return;
        bool zero = true;
        for (std::size_t k = 0; k < K && zero; ++k) zero = partial[k] == 0;
        if (!zero) continue;
        if (auto v = check_conclusion(s, c, st, f, g)) {
          atomic_min(best, rank);
          std::lock_guard<std::mutex> lock(hit_mutex);
          hits[rank] = PairHit{f, g, v->first, v->second};
          return;
        }
      }
    }
  };
  parallel_blocks(G, limits.threads, body, [&](std::uint64_t fr) { return fr * G >= best.load(); });
  PairSearchResult out;
  if (!hits.empty()) {
    out.hit = hits.begin()->second;
    out.examined = hits.begin()->first + 1;
  } else {
    out.examined = total;
  }
  return out;
}

namespace {

SingleSearchResult search_single(const BoundedSpace& s, bool first_only, const Limits& limits, bool idempotent) {
  const std::size_t M = s.M(), K = s.K(), m = s.m();
  const std::uint64_t F = s.count();
  if (F > limits.multiplication_cap)
    throw SearchSpaceCapExceeded(std::to_string(m) + "^" + std::to_string(M) + " polynomials exceed the cap");
  const auto& R = s.ring();
  // position of each support monomial inside the product space
  std::vector<std::size_t> pos(M);
  for (std::size_t x = 0; x < M; ++x)
    pos[x] = std::find(s.product_monomials().begin(), s.product_monomials().end(), s.support()[x]) -
             s.product_monomials().begin();
  std::atomic<std::uint64_t> best{kNone};
  std::mutex mu;
  std::vector<std::uint64_t> found;
  auto body = [&](std::uint64_t fr) {
    const auto f = s.decode(fr);
    if (!idempotent && fr == 0) return;
    std::vector<std::uint32_t> Q;
    fill_left_products(s, f, Q);
    std::vector<std::uint32_t> sq(K, 0);
    for (std::size_t y = 0; y < M; ++y) {
      const std::uint32_t* q = &Q[(y * m + f[y]) * K];
      for (std::size_t k = 0; k < K; ++k) sq[k] = R.add(sq[k], q[k]);
    }
    if (idempotent)
      for (std::size_t x = 0; x < M; ++x) sq[pos[x]] = R.add(sq[pos[x]], R.neg(f[x]));
    for (auto v : sq)
      if (v) return;
    if (first_only) atomic_min(best, fr);
    std::lock_guard<std::mutex> lock(mu);
    found.push_back(fr);
  };
  parallel_blocks(F, limits.threads, body, [&](std::uint64_t fr) { return first_only && fr >= best.load(); });
  std::sort(found.begin(), found.end());
  SingleSearchResult out;
  if (first_only && !found.empty()) found.resize(1);
  for (auto r : found) out.hits.push_back(s.decode(r));
  out.examined = (first_only && !found.empty()) ? found.front() + 1 : F;
  return out;
}

}  // namespace

SingleSearchResult search_square_zero(const BoundedSpace& s, bool first_only, const Limits& limits) {
  return search_single(s, first_only, limits, false);
}

SingleSearchResult search_idempotents(const BoundedSpace& s, const Limits& limits) {
  return search_single(s, false, limits, true);
}

namespace {

std::vector<SkewPoly> bounded_annihilator(ExtensionPtr a, const std::vector<SkewPoly>& F, unsigned D,
                                          const Limits& limits, bool right) {
  const auto& R = as_finite(a->ring(), "bounded annihilator");
  const auto support = monomials_up_to(a->n(), D);
  const std::size_t M = support.size(), m = R.size();
  const std::uint64_t count = saturating_pow(m, M);
  if (saturating_pow(m, M) > limits.multiplication_cap ||
      count * std::max<std::size_t>(1, F.size()) > limits.multiplication_cap)
    throw SearchSpaceCapExceeded("bounded annihilator search exceeds the cap");
  // P[f][y][b] = f·(b x^y) (right) or (b x^y)·f (left), as sparse term lists
  using Terms = std::vector<std::pair<ExponentVector, std::uint32_t>>;
  std::map<ExponentVector, std::size_t> where;
  std::vector<std::vector<Terms>> P(F.size(), std::vector<Terms>(M * m));
  for (std::size_t fi = 0; fi < F.size(); ++fi)
    for (std::size_t y = 0; y < M; ++y)
      for (std::uint32_t b = 0; b < m; ++b) {
        const SkewPoly t = SkewPoly::term(R, Element(b), support[y]);
        const SkewPoly p = right ? a->poly_mul(F[fi], t) : a->poly_mul(t, F[fi]);
        for (const auto& [e, c] : p.terms()) {
          where.emplace(e, where.size());
          P[fi][y * m + b].emplace_back(e, c.index());
        }
      }
  std::vector<SkewPoly> out;
  std::vector<std::uint32_t> acc(where.size());
  std::vector<std::uint32_t> g(M, 0);
  for (std::uint64_t gr = 0; gr < count; ++gr) {
    if (gr > 0) {
      std::size_t p = 0;
      while (++g[p] == m) {
        g[p] = 0;
        ++p;
      }
    }
    bool ok = true;
    for (std::size_t fi = 0; fi < F.size() && ok; ++fi) {
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t y = 0; y < M; ++y)
        for (const auto& [e, c] : P[fi][y * m + g[y]]) {
          auto& slot = acc[where.at(e)];
          slot = R.add(slot, c);
        }
      for (auto v : acc)
        if (v) {
          ok = false;
          break;
        }
    }
    if (!ok) continue;
    SkewPoly poly;
    for (std::size_t k = 0; k < M; ++k) poly.add_term(R, support[k], Element(g[k]));
    out.push_back(std::move(poly));
  }
  return out;
}

}  // namespace

std::vector<SkewPoly> bounded_right_annihilator(ExtensionPtr a, const std::vector<SkewPoly>& F, unsigned D,
                                                const Limits& limits) {
  return bounded_annihilator(std::move(a), F, D, limits, true);
}

std::vector<SkewPoly> bounded_left_annihilator(ExtensionPtr a, const std::vector<SkewPoly>& F, unsigned D,
                                               const Limits& limits) {
  return bounded_annihilator(std::move(a), F, D, limits, false);
}

std::vector<SkewPoly> idempotents_up_to(ExtensionPtr a, unsigned D, const Limits& limits) {
  BoundedSpace s(a, monomials_up_to(a->n(), D));
  std::vector<SkewPoly> out;
  for (const auto& d : search_idempotents(s, limits).hits) out.push_back(s.to_poly(d));
  return out;
}

std::vector<SkewPoly> all_polys_up_to(ExtensionPtr a, unsigned D, const Limits& limits) {
  const auto& R = as_finite(a->ring(), "all_polys_up_to");
  const auto support = monomials_up_to(a->n(), D);
  const std::uint64_t count = saturating_pow(R.size(), support.size());
  if (count > limits.multiplication_cap) throw SearchSpaceCapExceeded("too many polynomials to list");
  std::vector<SkewPoly> out;
  std::vector<std::uint32_t> g(support.size(), 0);
  for (std::uint64_t r = 0; r < count; ++r) {
    if (r > 0) {
      std::size_t p = 0;
      while (++g[p] == R.size()) {
        g[p] = 0;
        ++p;
      }
    }
    SkewPoly poly;
    for (std::size_t k = 0; k < support.size(); ++k) poly.add_term(R, support[k], Element(g[k]));
    out.push_back(std::move(poly));
  }
  return out;
}

}  // namespace spbw
