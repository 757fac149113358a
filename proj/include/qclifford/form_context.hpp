#pragma once

#include <memory>

#include "qclifford/linalg.hpp"

namespace qcl {

enum class Ring { Rational, Gaussian };

enum class FormPart { Full, Symmetric, Antisymmetric };

inline constexpr int kDefaultMaxDim = 12;
// Blades are 32-bit sets; beyond this the 2^n tables are out of reach anyway.
inline constexpr int kHardMaxDim = 30;

// The algebra Cl(B,V): dimension plus B with its exact split B = g + A.
// Immutable after construction and shared between all multivectors of the
// algebra.
class FormContext {
 public:
  FormContext(Matrix b, Matrix g, Matrix a, Ring ring)
      : b_(std::move(b)), g_(std::move(g)), a_(std::move(a)), ring_(ring) {}

  int dim() const noexcept { return static_cast<int>(b_.rows()); }
  Ring ring() const noexcept { return ring_; }

  const Matrix& bilinear() const noexcept { return b_; }
  const Matrix& symmetric() const noexcept { return g_; }
  const Matrix& antisymmetric() const noexcept { return a_; }

  const Matrix& form(FormPart part) const noexcept {
    switch (part) {
      case FormPart::Symmetric: return g_;
      case FormPart::Antisymmetric: return a_;
      case FormPart::Full: break;
    }
    return b_;
  }

  // 1-based generator indices, matching the e1..en naming.
  const Scalar& b(int i, int j) const { return b_(i - 1, j - 1); }
  const Scalar& g(int i, int j) const { return g_(i - 1, j - 1); }
  const Scalar& a(int i, int j) const { return a_(i - 1, j - 1); }

  bool same_algebra(const FormContext& other) const {
    return this == &other || (ring_ == other.ring_ && b_ == other.b_);
  }

 private:
  Matrix b_;
  Matrix g_;
  Matrix a_;
  Ring ring_;
};

using ContextPtr = std::shared_ptr<const FormContext>;

}  // namespace qcl
