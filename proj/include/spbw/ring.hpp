#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "spbw/error.hpp"

namespace spbw {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// (a,t;0,a) with a integer and t rational.
struct MatZQ {
  BigInt a;
  Rational t;
  bool operator==(const MatZQ& o) const { return a == o.a && t == o.t; }
  bool operator<(const MatZQ& o) const { return a != o.a ? a < o.a : t < o.t; }
};

// Coefficients c0, c1, ... in Z_p, trailing zeros trimmed.
struct PolyZp {
  std::vector<std::uint32_t> c;
  bool operator==(const PolyZp& o) const = default;
  bool operator<(const PolyZp& o) const { return c < o.c; }
};

struct Element {
  std::variant<std::uint32_t, MatZQ, PolyZp, BigInt> v;

  Element() : v(std::uint32_t{0}) {}
  Element(std::uint32_t idx) : v(idx) {}  // NOLINT: finite indices are the common case
  Element(MatZQ m) : v(std::move(m)) {}
  Element(PolyZp p) : v(std::move(p)) {}
  Element(BigInt z) : v(std::move(z)) {}

  bool is_index() const { return std::holds_alternative<std::uint32_t>(v); }
  std::uint32_t index() const { return std::get<std::uint32_t>(v); }
  bool operator==(const Element& o) const { return v == o.v; }
  bool operator<(const Element& o) const { return v < o.v; }
};

enum class RingKind {
  FiniteTable,
  Modular,
  DirectProduct,
  UpperTriangular2x2,
  TruncatedPoly,
  StructuredMatrixZQ,
  PolyOverField,
  Integers,
};

const char* ring_kind_name(RingKind kind);

struct RingDescriptor {
  RingKind kind = RingKind::Modular;
  std::uint32_t modulus = 0;                 // Modular m, PolyOverField p
  std::vector<RingDescriptor> factors;       // DirectProduct factors; base ring for UT2 / TruncatedPoly
  std::vector<std::uint32_t> poly_modulus;   // TruncatedPoly: monic modulus as base indices, low degree first
  std::size_t size = 0;                      // FiniteTable
  std::vector<std::vector<std::uint32_t>> add_table, mul_table;
  std::uint32_t zero_index = 0, one_index = 1;
  std::vector<std::uint32_t> neg_table;

  static RingDescriptor modular(std::uint32_t m);
  static RingDescriptor product(std::vector<RingDescriptor> fs);
  static RingDescriptor upper_triangular(RingDescriptor base);
  static RingDescriptor truncated(RingDescriptor base, std::vector<std::uint32_t> monic);
  static RingDescriptor matrix_zq();
  static RingDescriptor poly_over_field(std::uint32_t p);
  static RingDescriptor integers();

  std::string describe() const;
};

class Ring {
 public:
  virtual ~Ring() = default;

  RingKind kind() const { return desc_.kind; }
  const RingDescriptor& descriptor() const { return desc_; }
  std::uint64_t id() const { return id_; }

  virtual bool is_finite() const = 0;
  // Number of elements; UnsupportedInfinite for structured rings.
  virtual std::size_t size() const = 0;

  virtual Element zero() const = 0;
  virtual Element one() const = 0;
  virtual Element add(const Element& a, const Element& b) const = 0;
  virtual Element neg(const Element& a) const = 0;
  virtual Element mul(const Element& a, const Element& b) const = 0;
  Element sub(const Element& a, const Element& b) const { return add(a, neg(b)); }
  bool is_zero(const Element& a) const { return a == zero(); }
  bool is_one(const Element& a) const { return a == one(); }
  Element from_integer(long long n) const;

  virtual std::string format(const Element& a) const = 0;
  // True when the rendering has a top-level sum and needs parentheses as a coefficient.
  virtual bool format_is_compound(const Element& a) const { (void)a; return false; }

  // All elements for finite rings (ascending index); a documented generator sample otherwise.
  virtual std::vector<Element> sample() const = 0;
  virtual Element random(std::mt19937_64& rng) const = 0;
  virtual bool is_commutative() const = 0;
  virtual std::optional<Element> inverse(const Element& a) const = 0;
  // Closed-form idempotents of a structured ring.
  virtual std::vector<Element> closed_form_idempotents() const;
  // Throws RingMismatch when the payload does not belong to this ring.
  virtual void check(const Element& a) const = 0;

 protected:
  explicit Ring(RingDescriptor desc);

 private:
  RingDescriptor desc_;
  std::uint64_t id_;
};

using RingPtr = std::shared_ptr<const Ring>;

class FiniteRing;
using FiniteRingPtr = std::shared_ptr<const FiniteRing>;

// Cayley-table ring on indices 0..m-1 with 0 = zero and 1 = one.
class FiniteRing final : public Ring {
 public:
  struct Tables {
    std::size_t m = 0;
    std::vector<std::uint32_t> add, mul, neg;
  };

  // How indices map to the structure the ring was built from; drives literals.
  struct Layout {
    std::vector<FiniteRingPtr> components;
    std::vector<std::vector<std::uint32_t>> coords;  // per index
    std::map<std::vector<std::uint32_t>, std::uint32_t> by_coords;
  };

  FiniteRing(RingDescriptor desc, Tables t, Layout layout);

  bool is_finite() const override { return true; }
  std::size_t size() const override { return t_.m; }
  Element zero() const override { return std::uint32_t{0}; }
  Element one() const override { return std::uint32_t{1}; }
  Element add(const Element& a, const Element& b) const override;
  Element neg(const Element& a) const override;
  Element mul(const Element& a, const Element& b) const override;
  std::string format(const Element& a) const override;
  bool format_is_compound(const Element& a) const override;
  std::vector<Element> sample() const override;
  Element random(std::mt19937_64& rng) const override;
  bool is_commutative() const override { return commutative_; }
  std::optional<Element> inverse(const Element& a) const override;
  void check(const Element& a) const override;

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return t_.add[a * t_.m + b]; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return t_.mul[a * t_.m + b]; }
  std::uint32_t neg(std::uint32_t a) const { return t_.neg[a]; }
  const Tables& tables() const { return t_; }
  const Layout& layout() const { return layout_; }

  std::optional<std::uint32_t> index_of_coords(const std::vector<std::uint32_t>& c) const;

 private:
  Tables t_;
  Layout layout_;
  bool commutative_;
};

class MatrixZQRing final : public Ring {
 public:
  MatrixZQRing();
  bool is_finite() const override { return false; }
  std::size_t size() const override;
  Element zero() const override;
  Element one() const override;
  Element add(const Element& a, const Element& b) const override;
  Element neg(const Element& a) const override;
  Element mul(const Element& a, const Element& b) const override;
  std::string format(const Element& a) const override;
  std::vector<Element> sample() const override;
  Element random(std::mt19937_64& rng) const override;
  bool is_commutative() const override { return true; }
  std::optional<Element> inverse(const Element& a) const override;
  std::vector<Element> closed_form_idempotents() const override;
  void check(const Element& a) const override;
};

class PolyZpRing final : public Ring {
 public:
  explicit PolyZpRing(std::uint32_t p);
  std::uint32_t p() const { return p_; }
  bool is_finite() const override { return false; }
  std::size_t size() const override;
  Element zero() const override;
  Element one() const override;
  Element add(const Element& a, const Element& b) const override;
  Element neg(const Element& a) const override;
  Element mul(const Element& a, const Element& b) const override;
  std::string format(const Element& a) const override;
  bool format_is_compound(const Element& a) const override;
  std::vector<Element> sample() const override;
  Element random(std::mt19937_64& rng) const override;
  bool is_commutative() const override { return true; }
  std::optional<Element> inverse(const Element& a) const override;
  std::vector<Element> closed_form_idempotents() const override;
  void check(const Element& a) const override;

  static PolyZp trim(PolyZp f);
  std::uint32_t inv_mod(std::uint32_t a) const;

 private:
  std::uint32_t p_;
};

class IntegerRing final : public Ring {
 public:
  IntegerRing();
  bool is_finite() const override { return false; }
  std::size_t size() const override;
  Element zero() const override;
  Element one() const override;
  Element add(const Element& a, const Element& b) const override;
  Element neg(const Element& a) const override;
  Element mul(const Element& a, const Element& b) const override;
  std::string format(const Element& a) const override;
  bool format_is_compound(const Element& a) const override;
  std::vector<Element> sample() const override;
  Element random(std::mt19937_64& rng) const override;
  bool is_commutative() const override { return true; }
  std::optional<Element> inverse(const Element& a) const override;
  std::vector<Element> closed_form_idempotents() const override;
  void check(const Element& a) const override;
};

// Builds the ring and checks its axioms (exhaustively for finite kinds).
RingPtr validate_ring(const RingDescriptor& d, const Limits& limits = {});
FiniteRingPtr validate_finite_ring(const RingDescriptor& d, const Limits& limits = {});

// Exhaustive axiom check on raw tables; throws AxiomViolation / InvalidTable.
void check_ring_tables(const FiniteRing::Tables& t);

// Downcast helper: throws UnsupportedInfinite for structured rings.
const FiniteRing& as_finite(const Ring& r, const char* op);

void require_same_ring(const Ring& a, const Ring& b);

}  // namespace spbw
