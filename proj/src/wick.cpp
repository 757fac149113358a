#include "qclifford/wick.hpp"

#include <algorithm>

#include "qclifford/errors.hpp"
#include "qclifford/exterior.hpp"
#include "qclifford/forms.hpp"

namespace qcl {

Multivector rehome(const Multivector& u, const ContextPtr& target) {
  if (u.dim() != target->dim()) throw ShapeError("cannot move a multivector between dimensions");
  Multivector out(target);
  for (const auto& [b, c] : u.terms()) out.add_term(b, c);
  return out;
}

Multivector outer_exp(const Multivector& f) {
  if (!f.is_homogeneous(2)) throw InputError("outer exponential needs a pure bivector");
  Multivector sum = Multivector::scalar(f.context(), Scalar(1));
  Multivector power = sum;
  for (long k = 1; k <= f.dim() / 2; ++k) {
    power = wedge(power, f) * Scalar(1, k);  // F^k / k!
    if (power.is_zero()) break;
    sum += power;
  }
  return sum;
}

Multivector dotted_wedge(const Multivector& x, const Multivector& u) {
  if (!x.is_homogeneous(1)) throw InputError("dotted wedge needs a vector on the left");
  return wedge(x, u) + contract_left(x, u, FormPart::Antisymmetric);
}

DottedBasis::DottedBasis(ContextPtr ctx) : ctx_(std::move(ctx)) {
  const int n = ctx_->dim();
  const std::size_t size = std::size_t{1} << n;
  dotted_in_wedge_.assign(size, Multivector(ctx_));
  wedge_in_dotted_.assign(size, Multivector(ctx_));
  dotted_in_wedge_[0] = Multivector::scalar(ctx_, Scalar(1));
  for (std::uint32_t bits = 1; bits < size; ++bits) {
    const Blade b(bits);
    const int i = b.lowest();
    const Multivector& rest = dotted_in_wedge_[b.without(i).bits];
    dotted_in_wedge_[bits] = dotted_wedge(Multivector::generator(ctx_, i), rest);
  }
  std::vector<Blade> order;
  for (std::uint32_t bits = 0; bits < size; ++bits) order.emplace_back(bits);
  std::stable_sort(order.begin(), order.end(), [](Blade x, Blade y) { return x.grade() < y.grade(); });
  for (Blade b : order) {
    Multivector coords = Multivector::blade(ctx_, b);
    for (const auto& [c, coeff] : dotted_in_wedge_[b.bits].terms()) {
      if (c == b) continue;
      coords -= coeff * wedge_in_dotted_[c.bits];
    }
    wedge_in_dotted_[b.bits] = std::move(coords);
  }
}

Multivector DottedBasis::to_dotted(const Multivector& u) const {
  if (!u.context()->same_algebra(*ctx_)) throw ContextMismatch();
  Multivector out(ctx_);
  for (const auto& [b, c] : u.terms()) out += c * wedge_in_dotted_[b.bits];
  return out;
}

Multivector DottedBasis::from_dotted(const Multivector& coords) const {
  if (!coords.context()->same_algebra(*ctx_)) throw ContextMismatch();
  Multivector out(ctx_);
  for (const auto& [b, c] : coords.terms()) out += c * dotted_in_wedge_[b.bits];
  return out;
}

Multivector DottedBasis::project(const Multivector& u, int r) const {
  return from_dotted(to_dotted(u).grade_part(r));
}

namespace {
Matrix columns(const std::vector<Multivector>& cols) {
  Matrix m(cols.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (const auto& [b, v] : cols[c].terms()) m(b.bits, c) = v;
  return m;
}
}  // namespace

Matrix DottedBasis::dotted_to_wedge() const { return columns(dotted_in_wedge_); }
Matrix DottedBasis::wedge_to_dotted() const { return columns(wedge_in_dotted_); }

Multivector a_grade_project(const Multivector& u, int r) {
  if (r < 0 || r > u.dim()) throw InputError("grade " + std::to_string(r) + " out of range");
  return DottedBasis(u.context()).project(u, r);
}

WickData WickData::build(const ContextPtr& ctx) {
  Multivector f = bivector_from_antisym(ctx);
  Multivector exp_f = outer_exp(f);
  Multivector exp_neg_f = outer_exp(-f);
  return WickData{std::move(f), std::move(exp_f), std::move(exp_neg_f), DottedBasis(ctx)};
}

WickResiduals verify_wick_identities(const Multivector& f, const Multivector& x, const Multivector& u) {
  require_same_context(f, x);
  require_same_context(f, u);
  if (!x.is_homogeneous(1)) throw InputError("Wick identities need a vector x");
  const Multivector ef = outer_exp(f);
  const Multivector enf = outer_exp(-f);
  const Multivector one = Multivector::scalar(f.context(), Scalar(1));

  WickResiduals r{Multivector(f.context()), Multivector(f.context()), Multivector(f.context())};
  r.unit = wedge(enf, ef) - one;
  r.wedge = wedge(wedge(wedge(enf, x), ef), u) - wedge(x, u);
  const Multivector lhs = wedge(enf, contract_left(x, wedge(ef, u), FormPart::Symmetric));
  const Multivector rhs =
      contract_left(x, u, FormPart::Symmetric) + wedge(contract_left(x, f, FormPart::Symmetric), u);
  r.contraction = lhs - rhs;
  return r;
}

namespace {
void require_same_symmetric(const FormContext& a, const FormContext& b) {
  if (a.dim() != b.dim() || a.symmetric() != b.symmetric())
    throw InputError("algebras have different symmetric parts g and are not Wick-comparable");
}
}  // namespace

Multivector wick_transport(const Multivector& u, const ContextPtr& target) {
  require_same_symmetric(u.form(), *target);
  const Algebra source_alg(u.context());
  const Algebra target_alg(target);
  return target_alg.from_monomial_coordinates(rehome(source_alg.to_monomial_coordinates(u), target));
}

Multivector wick_transport_exponential(const Multivector& u, const ContextPtr& target) {
  require_same_symmetric(u.form(), *target);
  const Matrix delta = target->antisymmetric() - u.form().antisymmetric();
  const ContextPtr difference = split_form(target->symmetric() + delta, target->ring(), kHardMaxDim);
  const Multivector f = bivector_from_antisym(difference);
  // Only g enters the contraction, so the exponential can act in the target.
  return contract_left(rehome(outer_exp(f), target), rehome(u, target), FormPart::Symmetric);
}

GradingWitness grading_witness(const ContextPtr& first, const ContextPtr& second) {
  require_same_symmetric(*first, *second);
  GradingWitness w;
  const int n = first->dim();
  for (int i = 1; i <= n && w.equal; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (first->a(i, j) == second->a(i, j)) continue;
      const Blade b = Blade::of(i).with(j);
      Multivector p1 = DottedBasis(first).project(Multivector::blade(first, b), 0);
      Multivector p2 = DottedBasis(second).project(Multivector::blade(second, b), 0);
      if (p1.terms() == p2.terms()) throw ComputeError("internal error: differing A with equal scalar projections");
      w.equal = false;
      w.blade = b;
      w.grade = 0;
      w.first_projection = std::move(p1);
      w.second_projection = std::move(p2);
      break;
    }
  }
  return w;
}

}  // namespace qcl
