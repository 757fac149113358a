#include "qclifford/exterior.hpp"

#include <algorithm>
#include <bit>

#include "qclifford/errors.hpp"

namespace qcl {

std::vector<int> Blade::indices() const {
  std::vector<int> out;
  out.reserve(grade());
  for (std::uint32_t b = bits; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
  return out;
}

int wedge_sign(Blade a, Blade b) {
  if ((a.bits & b.bits) != 0) return 0;
  // Count pairs (i in a, j in b) with i > j.
  int swaps = 0;
  for (std::uint32_t shifted = a.bits >> 1; shifted != 0; shifted >>= 1)
    swaps += std::popcount(shifted & b.bits);
  return (swaps & 1) ? -1 : 1;
}

Multivector::Multivector(ContextPtr ctx) : ctx_(std::move(ctx)) {
  if (!ctx_) throw ComputeError("multivector without algebra context");
}

Multivector Multivector::scalar(ContextPtr ctx, const Scalar& s) {
  return blade(std::move(ctx), Blade::unit(), s);
}

Multivector Multivector::blade(ContextPtr ctx, Blade b, const Scalar& coeff) {
  Multivector m(std::move(ctx));
  if (b.bits >> m.dim() != 0) throw InputError("blade index exceeds algebra dimension");
  m.add_term(b, coeff);
  return m;
}

Multivector Multivector::generator(ContextPtr ctx, int i) {
  if (i < 1 || i > ctx->dim()) throw InputError("generator index " + std::to_string(i) + " out of range");
  return blade(std::move(ctx), Blade::of(i));
}

Multivector Multivector::vector(ContextPtr ctx, const std::vector<Scalar>& coords) {
  if (static_cast<int>(coords.size()) != ctx->dim()) throw ShapeError("vector length does not match dimension");
  Multivector m(std::move(ctx));
  for (std::size_t k = 0; k < coords.size(); ++k) m.add_term(Blade::of(static_cast<int>(k) + 1), coords[k]);
  return m;
}

Scalar Multivector::coefficient(Blade b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? Scalar() : it->second;
}

void Multivector::add_term(Blade b, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(b, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

Multivector Multivector::grade_part(int k) const {
  Multivector out(ctx_);
  for (const auto& [b, c] : terms_)
    if (b.grade() == k) out.terms_.emplace_hint(out.terms_.end(), b, c);
  return out;
}

bool Multivector::is_homogeneous(int k) const {
  for (const auto& [b, c] : terms_)
    if (b.grade() != k) return false;
  return true;
}

int Multivector::max_grade() const {
  int g = -1;
  for (const auto& [b, c] : terms_) g = std::max(g, b.grade());
  return g;
}

Multivector Multivector::even_part() const {
  Multivector out(ctx_);
  for (const auto& [b, c] : terms_)
    if (b.grade() % 2 == 0) out.terms_.emplace_hint(out.terms_.end(), b, c);
  return out;
}

Multivector Multivector::odd_part() const {
  Multivector out(ctx_);
  for (const auto& [b, c] : terms_)
    if (b.grade() % 2 == 1) out.terms_.emplace_hint(out.terms_.end(), b, c);
  return out;
}

Multivector& Multivector::operator+=(const Multivector& o) {
  require_same_context(*this, o);
  for (const auto& [b, c] : o.terms_) add_term(b, c);
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) {
  require_same_context(*this, o);
  for (const auto& [b, c] : o.terms_) add_term(b, -c);
  return *this;
}

Multivector& Multivector::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [b, c] : terms_) c *= s;
  return *this;
}

Multivector Multivector::operator-() const {
  Multivector out = *this;
  for (auto& [b, c] : out.terms_) c = -c;
  return out;
}

bool operator==(const Multivector& a, const Multivector& b) {
  return a.ctx_->same_algebra(*b.ctx_) && a.terms_ == b.terms_;
}

std::vector<Scalar> Multivector::dense() const {
  std::vector<Scalar> out(std::size_t{1} << dim());
  for (const auto& [b, c] : terms_) out[b.bits] = c;
  return out;
}

Multivector Multivector::from_dense(ContextPtr ctx, const std::vector<Scalar>& coords) {
  Multivector m(std::move(ctx));
  if (coords.size() != (std::size_t{1} << m.dim())) throw ShapeError("dense coordinate vector has wrong length");
  for (std::size_t k = 0; k < coords.size(); ++k)
    if (!coords[k].is_zero()) m.terms_.emplace_hint(m.terms_.end(), Blade(static_cast<std::uint32_t>(k)), coords[k]);
  return m;
}

void require_same_context(const Multivector& u, const Multivector& v) {
  if (!u.context()->same_algebra(*v.context())) throw ContextMismatch();
}

Multivector wedge(const Multivector& u, const Multivector& v) {
  require_same_context(u, v);
  Multivector out(u.context());
  for (const auto& [a, ca] : u.terms()) {
    for (const auto& [b, cb] : v.terms()) {
      const int sign = wedge_sign(a, b);
      if (sign == 0) continue;
      Scalar c = ca * cb;
      if (sign < 0) c = -c;
      out.add_term(Blade(a.bits | b.bits), c);
    }
  }
  return out;
}

Multivector grade_involution(const Multivector& u) {
  Multivector out(u.context());
  for (const auto& [b, c] : u.terms()) out.add_term(b, b.grade() % 2 ? -c : c);
  return out;
}

Multivector reversion(const Multivector& u) {
  Multivector out(u.context());
  for (const auto& [b, c] : u.terms()) {
    const int k = b.grade();
    out.add_term(b, (k * (k - 1) / 2) % 2 ? -c : c);
  }
  return out;
}

Multivector conjugate_coefficients(const Multivector& u) {
  Multivector out(u.context());
  for (const auto& [b, c] : u.terms()) out.add_term(b, c.conj());
  return out;
}

void accumulate_generator_contraction(int i, const Multivector& u, FormPart part,
                                      const Scalar& factor, Multivector& out) {
  const Matrix& m = u.form().form(part);
  for (const auto& [b, c] : u.terms()) {
    int position = 0;
    for (std::uint32_t rest = b.bits; rest != 0; rest &= rest - 1, ++position) {
      const int j = std::countr_zero(rest) + 1;
      const Scalar& mij = m(i - 1, j - 1);
      if (mij.is_zero()) continue;
      Scalar term = factor * mij * c;
      if (position % 2) term = -term;
      out.add_term(b.without(j), term);
    }
  }
}

Multivector contract_left(const Multivector& x, const Multivector& u, FormPart part) {
  require_same_context(x, u);
  Multivector out(u.context());
  for (const auto& [a, ca] : x.terms()) {
    // (a1^...^am) _| u = a1 _| (a2 _| (... (am _| u)))
    Multivector acc = u;
    const auto idx = a.indices();
    for (auto it = idx.rbegin(); it != idx.rend() && !acc.is_zero(); ++it) {
      Multivector next(u.context());
      accumulate_generator_contraction(*it, acc, part, Scalar(1), next);
      acc = std::move(next);
    }
    acc *= ca;
    out += acc;
  }
  return out;
}

Scalar evaluate_form(const Multivector& x, const Multivector& y, FormPart part) {
  require_same_context(x, y);
  const Matrix& m = x.form().form(part);
  Scalar out;
  for (const auto& [a, ca] : x.terms()) {
    if (a.grade() != 1) continue;
    for (const auto& [b, cb] : y.terms()) {
      if (b.grade() != 1) continue;
      const Scalar& mij = m(a.lowest() - 1, b.lowest() - 1);
      if (!mij.is_zero()) out += ca * mij * cb;
    }
  }
  return out;
}

}  // namespace qcl
