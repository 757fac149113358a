#pragma once

#include <vector>

#include "qclifford/multivector.hpp"

namespace qcl {

struct Signature {
  int p = 0;  // positive directions
  int q = 0;  // negative directions
  int r = 0;  // null directions

  int dim() const noexcept { return p + q + r; }
  bool nondegenerate() const noexcept { return r == 0; }
  friend bool operator==(const Signature&, const Signature&) = default;
};

// Splits B into g = (B + B^T)/2 and A = (B - B^T)/2 and wraps the result as
// an algebra context. Rejects non-square input, dimensions above max_dim and
// non-real entries in the rational ring.
ContextPtr split_form(const Matrix& b, Ring ring = Ring::Rational, int max_dim = kDefaultMaxDim);

// Context with the same g and A = 0, i.e. the classical algebra Cl(g).
ContextPtr symmetric_context(const FormContext& ctx);

// Context with the same g and the given antisymmetric part.
ContextPtr with_antisymmetric(const FormContext& ctx, const Matrix& a);

// Q(x) = x^T g x.
Scalar quadratic(const FormContext& ctx, const std::vector<Scalar>& x);

// Signature of the real symmetric matrix g by exact congruence reduction.
Signature signature(const Matrix& g);
Signature signature(const FormContext& ctx);

// The bivector F with F _|g (e_i ^ e_j) = A_ij for all i < j. Throws
// DegenerateFormError when g is singular.
Multivector bivector_from_antisym(const ContextPtr& ctx);

// A_ij recomputed from a bivector as F _|g (e_i ^ e_j).
Matrix antisym_from_bivector(const Multivector& f);

}  // namespace qcl
