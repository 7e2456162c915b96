#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "spbw/algebra.hpp"

namespace spbw {

// Monomials of total degree <= d in n variables, ascending deglex.
std::vector<ExponentVector> monomials_up_to(std::size_t n, unsigned d);

// m^k, saturating at UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t m, std::uint64_t k);

// Table-driven products over a finite coefficient ring for polynomials supported on a
// fixed monomial list. Coefficient vectors are ranked as base-|R| numbers with the
// first (lowest) monomial as the least significant digit.
class BoundedSpace {
 public:
  BoundedSpace(ExtensionPtr a, std::vector<ExponentVector> support);

  const SkewExtension& algebra() const { return *a_; }
  const FiniteRing& ring() const { return *ring_; }
  std::size_t m() const { return m_; }
  const std::vector<ExponentVector>& support() const { return support_; }
  std::size_t M() const { return support_.size(); }
  const std::vector<ExponentVector>& product_monomials() const { return product_; }
  std::size_t K() const { return product_.size(); }
  std::uint64_t count() const { return count_; }  // m^M, saturating

  // Dense normal form of x^{support[a]} · b · x^{support[c]} over product_monomials().
  const std::uint32_t* entry(std::size_t a, std::uint32_t b, std::size_t c) const {
    return &table_[((a * m_ + b) * M() + c) * K()];
  }
  std::vector<std::uint32_t> decode(std::uint64_t rank) const;
  SkewPoly to_poly(const std::vector<std::uint32_t>& digits) const;
  SkewPoly dense_to_poly(const std::uint32_t* v) const;
  std::optional<std::vector<std::uint32_t>> encode(const SkewPoly& f) const;

 private:
  ExtensionPtr a_;
  const FiniteRing* ring_;
  std::size_t m_;
  std::vector<ExponentVector> support_, product_;
  std::vector<std::uint32_t> table_;
  std::uint64_t count_;
};

enum class PairConclusion {
  ConstantTimesAll,   // a_0 b_k = 0
  SigmaPowers,        // a_i σ^{α_i}(b_j) = 0
  MonomialProducts,   // a_i X_i b_j Y_j = 0
};

struct PairHit {
  std::vector<std::uint32_t> f, g;
  std::size_t i = 0, j = 0;
};

struct PairSearchResult {
  std::optional<PairHit> hit;
  std::uint64_t examined = 0;
};

// Finds the canonically smallest (f-major) pair with fg = 0 that violates the conclusion.
// Throws SearchSpaceCapExceeded when m^{2M} exceeds the cap.
PairSearchResult search_pairs(const BoundedSpace& space, PairConclusion c, const Limits& limits);

struct SingleSearchResult {
  std::vector<std::vector<std::uint32_t>> hits;  // ascending rank
  std::uint64_t examined = 0;
};

// f != 0 with f² = 0; stops at the first hit when first_only.
SingleSearchResult search_square_zero(const BoundedSpace& space, bool first_only, const Limits& limits);
// All e with e² = e.
SingleSearchResult search_idempotents(const BoundedSpace& space, const Limits& limits);

// {g supported on monomials of degree <= D : f g = 0 for all f in F}, ascending rank.
std::vector<SkewPoly> bounded_right_annihilator(ExtensionPtr a, const std::vector<SkewPoly>& F, unsigned D,
                                                const Limits& limits = {});
// {g : g f = 0 for all f in F}
std::vector<SkewPoly> bounded_left_annihilator(ExtensionPtr a, const std::vector<SkewPoly>& F, unsigned D,
                                               const Limits& limits = {});
std::vector<SkewPoly> idempotents_up_to(ExtensionPtr a, unsigned D, const Limits& limits = {});
// Every polynomial supported on monomials of degree <= D, ascending rank.
std::vector<SkewPoly> all_polys_up_to(ExtensionPtr a, unsigned D, const Limits& limits = {});

}  // namespace spbw
