#include "qclifford/forms.hpp"

#include "qclifford/errors.hpp"
#include "qclifford/exterior.hpp"

namespace qcl {

ContextPtr split_form(const Matrix& b, Ring ring, int max_dim) {
  if (!b.square()) throw ShapeError("bilinear form must be a square matrix");
  const int n = static_cast<int>(b.rows());
  if (n < 1) throw ShapeError("bilinear form must have dimension at least 1");
  if (max_dim > kHardMaxDim) max_dim = kHardMaxDim;
  if (n > max_dim)
    throw DimensionLimitError("dimension " + std::to_string(n) + " exceeds the limit " + std::to_string(max_dim));
  Matrix g(n, n);
  Matrix a(n, n);
  const Scalar half(1, 2);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (ring == Ring::Rational && !b(i, j).is_real())
        throw InputError("complex entry in a rational-ring form at (" + std::to_string(i + 1) + "," +
                         std::to_string(j + 1) + ")");
      g(i, j) = (b(i, j) + b(j, i)) * half;
      a(i, j) = (b(i, j) - b(j, i)) * half;
    }
  }
  return std::make_shared<const FormContext>(b, std::move(g), std::move(a), ring);
}

ContextPtr symmetric_context(const FormContext& ctx) {
  return split_form(ctx.symmetric(), ctx.ring(), kHardMaxDim);
}

ContextPtr with_antisymmetric(const FormContext& ctx, const Matrix& a) {
  if (a.rows() != ctx.symmetric().rows() || !a.square()) throw ShapeError("antisymmetric part has wrong shape");
  if (!(a + a.transpose()).is_zero()) throw InputError("matrix is not antisymmetric");
  return split_form(ctx.symmetric() + a, ctx.ring(), kHardMaxDim);
}

Scalar quadratic(const FormContext& ctx, const std::vector<Scalar>& x) {
  if (static_cast<int>(x.size()) != ctx.dim()) throw ShapeError("vector length does not match dimension");
  const auto gx = ctx.symmetric().apply(x);
  Scalar q;
  for (std::size_t i = 0; i < x.size(); ++i) q += x[i] * gx[i];
  return q;
}

Signature signature(const Matrix& g_in) {
  if (!g_in.square()) throw ShapeError("signature of non-square matrix");
  Matrix g = g_in;
  const std::size_t n = g.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!g(i, j).is_real()) throw InputError("signature requires a real symmetric matrix");
      if (g(i, j) != g(j, i)) throw InputError("signature requires a symmetric matrix");
    }

  Signature sig;
  // Congruence x -> S x with elementary S applied on both sides keeps g symmetric.
  auto add_multiple = [&](std::size_t dst, std::size_t src, const Scalar& f) {
    for (std::size_t j = 0; j < n; ++j) g(dst, j) += f * g(src, j);
    for (std::size_t i = 0; i < n; ++i) g(i, dst) += f * g(i, src);
  };
  auto swap_index = [&](std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < n; ++j) std::swap(g(a, j), g(b, j));
    for (std::size_t i = 0; i < n; ++i) std::swap(g(i, a), g(i, b));
  };

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && g(pivot, pivot).is_zero()) ++pivot;
    if (pivot == n) {
      // All remaining diagonal entries vanish: use a hyperbolic pair (k, l)
      // and replace e_k by e_k + e_l, whose square is 2 g_kl != 0.
      std::size_t row = n;
      std::size_t col = n;
      for (std::size_t i = k; i < n && row == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (!g(i, j).is_zero()) {
            row = i;
            col = j;
            break;
          }
      if (row == n) break;  // remaining block is zero
      add_multiple(row, col, Scalar(1));
      pivot = row;
    }
    if (pivot != k) swap_index(pivot, k);
    const Scalar d = g(k, k);
    for (std::size_t i = k + 1; i < n; ++i)
      if (!g(i, k).is_zero()) add_multiple(i, k, -(g(i, k) / d));
  }
  for (std::size_t k = 0; k < n; ++k) {
    const int s = sgn(g(k, k).re());
    if (s > 0) ++sig.p;
    else if (s < 0) ++sig.q;
    else ++sig.r;
  }
  return sig;
}

Signature signature(const FormContext& ctx) {
  return signature(ctx.symmetric());
}

Multivector bivector_from_antisym(const ContextPtr& ctx) {
  const int n = ctx->dim();
  const auto g_inv = inverse(ctx->symmetric());
  if (!g_inv) throw DegenerateFormError("symmetric part g is degenerate; no Wick bivector exists");
  // With (e_k^e_l) _|g (e_i^e_j) = g_li g_kj - g_lj g_ki the defining equations
  // read -(g F g)_ij = A_ij, hence F = -g^{-1} A g^{-1} (as an antisymmetric matrix).
  const Matrix f = *g_inv * ctx->antisymmetric() * *g_inv;
  Multivector out(ctx);
  for (int k = 1; k <= n; ++k)
    for (int l = k + 1; l <= n; ++l) out.add_term(Blade::of(k).with(l), -f(k - 1, l - 1));

  if (antisym_from_bivector(out) != ctx->antisymmetric())
    throw ComputeError("internal error: Wick bivector does not reproduce A");
  return out;
}

Matrix antisym_from_bivector(const Multivector& f) {
  const auto& ctx = f.context();
  const int n = ctx->dim();
  Matrix a(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const auto eij = Multivector::blade(ctx, Blade::of(i).with(j));
      const Scalar v = contract_left(f, eij, FormPart::Symmetric).scalar_part();
      a(i - 1, j - 1) = v;
      a(j - 1, i - 1) = -v;
    }
  return a;
}

}  // namespace qcl
