#pragma once

#include <optional>

#include "qclifford/clifford.hpp"
#include "qclifford/multivector.hpp"

namespace qcl {

// Same terms, re-homed into another context of equal dimension.
Multivector rehome(const Multivector& u, const ContextPtr& target);

// Outer exponential 1 + F + F^F/2! + ...; the series stops at grade n.
// Throws InputError unless F is purely grade 2.
Multivector outer_exp(const Multivector& f);

// x dotted-wedge u = x ^ u + x _|A u, for a vector x.
Multivector dotted_wedge(const Multivector& x, const Multivector& u);

// Basis of dotted blades e_{i1} .^ (e_{i2} .^ (... .^ e_{ik})) in wedge
// coordinates, with the inverse conversion. Needs only A, so it is available
// for degenerate g as well.
class DottedBasis {
 public:
  explicit DottedBasis(ContextPtr ctx);

  const ContextPtr& context() const noexcept { return ctx_; }
  const Multivector& dotted_blade(Blade b) const { return dotted_in_wedge_[b.bits]; }

  // Coordinates with respect to dotted blades (blade labels name dotted blades).
  Multivector to_dotted(const Multivector& u) const;
  Multivector from_dotted(const Multivector& coords) const;

  // Projection onto dotted grade r: <u>^A_r.
  Multivector project(const Multivector& u, int r) const;

  Matrix dotted_to_wedge() const;
  Matrix wedge_to_dotted() const;

 private:
  ContextPtr ctx_;
  std::vector<Multivector> dotted_in_wedge_;
  std::vector<Multivector> wedge_in_dotted_;
};

Multivector a_grade_project(const Multivector& u, int r);

// Bivector F, its outer exponentials and the dotted-basis tables.
struct WickData {
  Multivector f;
  Multivector exp_f;
  Multivector exp_neg_f;
  DottedBasis dotted;

  // Throws DegenerateFormError for singular g.
  static WickData build(const ContextPtr& ctx);
};

struct WickResiduals {
  Multivector unit;         // e^{-F} ^ e^F - 1
  Multivector wedge;        // e^{-F} ^ x ^ e^F ^ u - x ^ u
  Multivector contraction;  // e^{-F} ^ (x _|g (e^F ^ u)) - (x _|g u + (x _|g F) ^ u)

  bool all_zero() const { return unit.is_zero() && wedge.is_zero() && contraction.is_zero(); }
};

WickResiduals verify_wick_identities(const Multivector& f, const Multivector& x, const Multivector& u);

// Generator-to-generator algebra isomorphism between algebras with the same g:
// u is expanded in Clifford monomials of its own algebra and the same monomial
// expression is evaluated in the target algebra.
Multivector wick_transport(const Multivector& u, const ContextPtr& target);

// The same map computed as u -> e^{F} _|g u, where F is the Wick bivector of
// the difference of the antisymmetric parts (target minus source).
Multivector wick_transport_exponential(const Multivector& u, const ContextPtr& target);

struct GradingWitness {
  bool equal = true;
  Blade blade;
  int grade = 0;
  std::optional<Multivector> first_projection;
  std::optional<Multivector> second_projection;
};

// Compares the dotted gradings of two algebras with the same g. Throws
// InputError when the symmetric parts differ.
GradingWitness grading_witness(const ContextPtr& first, const ContextPtr& second);

}  // namespace qcl
