#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "qclifford/form_context.hpp"

namespace qcl {

// Wedge-basis monomial e_{i1}^...^e_{ik} with ascending indices, stored as a
// bit set (bit i-1 <-> e_i). The empty set is the unit blade.
struct Blade {
  std::uint32_t bits = 0;

  constexpr Blade() = default;
  constexpr explicit Blade(std::uint32_t b) : bits(b) {}

  static constexpr Blade unit() { return Blade(0); }
  static constexpr Blade of(int i) { return Blade(std::uint32_t{1} << (i - 1)); }

  constexpr int grade() const { return std::popcount(bits); }
  constexpr bool contains(int i) const { return (bits >> (i - 1)) & 1U; }
  constexpr Blade without(int i) const { return Blade(bits & ~(std::uint32_t{1} << (i - 1))); }
  constexpr Blade with(int i) const { return Blade(bits | (std::uint32_t{1} << (i - 1))); }
  // Lowest generator index, 0 for the unit blade.
  constexpr int lowest() const { return bits == 0 ? 0 : std::countr_zero(bits) + 1; }

  std::vector<int> indices() const;

  friend constexpr auto operator<=>(Blade, Blade) = default;
};

// (-1)^(number of transpositions) needed to merge a and b into ascending
// order; 0 when they share an index.
int wedge_sign(Blade a, Blade b);

// Finite sum of blades with exact coefficients. Zero coefficients are never
// stored, so term-wise equality is algebraic equality. Terms iterate in
// ascending blade bit pattern.
class Multivector {
 public:
  using Terms = std::map<Blade, Scalar>;

  explicit Multivector(ContextPtr ctx);

  static Multivector scalar(ContextPtr ctx, const Scalar& s);
  static Multivector blade(ContextPtr ctx, Blade b, const Scalar& coeff = 1);
  static Multivector generator(ContextPtr ctx, int i);
  static Multivector vector(ContextPtr ctx, const std::vector<Scalar>& coords);

  const ContextPtr& context() const noexcept { return ctx_; }
  const FormContext& form() const noexcept { return *ctx_; }
  int dim() const noexcept { return ctx_->dim(); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Scalar coefficient(Blade b) const;
  Scalar scalar_part() const { return coefficient(Blade::unit()); }

  // Accumulates coeff onto blade b, erasing the entry if it cancels.
  void add_term(Blade b, const Scalar& coeff);

  Multivector grade_part(int k) const;
  bool is_homogeneous(int k) const;
  // -1 for zero.
  int max_grade() const;
  Multivector even_part() const;
  Multivector odd_part() const;

  Multivector& operator+=(const Multivector& o);
  Multivector& operator-=(const Multivector& o);
  Multivector& operator*=(const Scalar& s);

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(const Scalar& s, Multivector a) { return a *= s; }
  friend Multivector operator*(Multivector a, const Scalar& s) { return a *= s; }
  Multivector operator-() const;

  friend bool operator==(const Multivector& a, const Multivector& b);
  friend bool operator!=(const Multivector& a, const Multivector& b) { return !(a == b); }

  // Coordinates in the full 2^n wedge-blade basis (index = blade bits).
  std::vector<Scalar> dense() const;
  static Multivector from_dense(ContextPtr ctx, const std::vector<Scalar>& coords);

 private:
  ContextPtr ctx_;
  Terms terms_;
};

// Throws ContextMismatch unless u and v live in the same algebra.
void require_same_context(const Multivector& u, const Multivector& v);

}  // namespace qcl
