#include "qclifford/clifford.hpp"

#include <algorithm>
#include <mutex>

#include "qclifford/errors.hpp"
#include "qclifford/exterior.hpp"
#include "qclifford/text.hpp"

namespace qcl {

namespace {

Matrix columns_to_matrix(const std::vector<Multivector>& cols) {
  const std::size_t n = cols.size();
  Matrix m(n, n);
  for (std::size_t c = 0; c < n; ++c)
    for (const auto& [b, v] : cols[c].terms()) m(b.bits, c) = v;
  return m;
}

std::vector<Blade> blades_by_grade(int dim) {
  std::vector<Blade> order;
  order.reserve(std::size_t{1} << dim);
  for (std::uint32_t b = 0; b < (std::uint32_t{1} << dim); ++b) order.emplace_back(b);
  std::stable_sort(order.begin(), order.end(), [](Blade x, Blade y) { return x.grade() < y.grade(); });
  return order;
}

Multivector apply_generator_impl(int i, const Multivector& u) {
  Multivector out(u.context());
  accumulate_generator_contraction(i, u, FormPart::Full, Scalar(1), out);
  const Blade ei = Blade::of(i);
  for (const auto& [b, c] : u.terms()) {
    const int sign = wedge_sign(ei, b);
    if (sign != 0) out.add_term(b.with(i), sign > 0 ? c : -c);
  }
  return out;
}

}  // namespace

Matrix MonomialTable::monomial_to_wedge() const { return columns_to_matrix(monomial_in_wedge_); }
Matrix MonomialTable::wedge_to_monomial() const { return columns_to_matrix(wedge_in_monomials_); }

Multivector ProductTable::multiply(const Multivector& u, const Multivector& v) const {
  require_same_context(u, v);
  Multivector out(u.context());
  for (const auto& [a, ca] : u.terms())
    for (const auto& [b, cb] : v.terms()) {
      const Scalar c = ca * cb;
      for (const auto& [r, cr] : product(a, b).terms()) out.add_term(r, c * cr);
    }
  return out;
}

struct Algebra::Shared {
  explicit Shared(ContextPtr c) : ctx(std::move(c)) {}
  ContextPtr ctx;
  std::once_flag monomial_once;
  std::unique_ptr<MonomialTable> monomials;
  std::once_flag table_once;
  std::unique_ptr<ProductTable> table;
};

Algebra::Algebra(ContextPtr ctx) : shared_(std::make_shared<Shared>(std::move(ctx))) {
  if (!shared_->ctx) throw ComputeError("algebra without context");
}

const ContextPtr& Algebra::context() const noexcept { return shared_->ctx; }

Multivector Algebra::parse(std::string_view text) const { return parse_multivector(context(), text); }

Multivector Algebra::apply_generator(int i, const Multivector& u) const {
  if (i < 1 || i > dim()) throw InputError("generator index " + std::to_string(i) + " out of range");
  if (!u.context()->same_algebra(form())) throw ContextMismatch();
  return apply_generator_impl(i, u);
}

const MonomialTable& Algebra::monomials() const {
  std::call_once(shared_->monomial_once, [this] {
    const auto& ctx = context();
    const std::size_t size = basis_size();
    std::vector<Multivector> mono(size, Multivector(ctx));
    mono[0] = Multivector::scalar(ctx, Scalar(1));
    // Bits of b without its lowest index are numerically smaller than b.
    for (std::uint32_t bits = 1; bits < size; ++bits) {
      const Blade b(bits);
      const int i = b.lowest();
      mono[bits] = apply_generator_impl(i, mono[b.without(i).bits]);
    }
    // wedge(b) = mono(b) - sum_{c lower grade} mono(b)[c] wedge(c)
    std::vector<Multivector> inv(size, Multivector(ctx));
    for (Blade b : blades_by_grade(dim())) {
      Multivector coords = Multivector::blade(ctx, b);
      for (const auto& [c, coeff] : mono[b.bits].terms()) {
        if (c == b) continue;
        coords -= coeff * inv[c.bits];
      }
      inv[b.bits] = std::move(coords);
    }
    shared_->monomials = std::make_unique<MonomialTable>(std::move(mono), std::move(inv));
  });
  return *shared_->monomials;
}

const ProductTable& Algebra::table() const {
  if (dim() > ProductTable::kMaxDim)
    throw DimensionLimitError("product table limited to dimension " + std::to_string(ProductTable::kMaxDim));
  std::call_once(shared_->table_once, [this] {
    const auto& ctx = context();
    const std::size_t size = basis_size();
    const int n = dim();
    std::vector<Multivector> entries(size * size, Multivector(ctx));
    auto row = [&](Blade a) { return entries.begin() + static_cast<std::ptrdiff_t>(std::size_t{a.bits} << n); };
    for (std::uint32_t b = 0; b < size; ++b) row(Blade::unit())[b] = Multivector::blade(ctx, Blade(b));
    for (Blade a : blades_by_grade(n)) {
      if (a.bits == 0) continue;
      const int i = a.lowest();
      const Blade rest = a.without(i);
      Multivector lowered(ctx);
      accumulate_generator_contraction(i, Multivector::blade(ctx, rest), FormPart::Full, Scalar(1), lowered);
      auto dst = row(a);
      auto src = row(rest);
      for (std::uint32_t b = 0; b < size; ++b) {
        Multivector value = apply_generator_impl(i, src[b]);
        for (const auto& [c, cc] : lowered.terms()) value -= cc * row(c)[b];
        dst[b] = std::move(value);
      }
    }
    shared_->table = std::make_unique<ProductTable>(ctx, std::move(entries));
  });
  return *shared_->table;
}

Multivector Algebra::product(const Multivector& u, const Multivector& v) const {
  require_same_context(u, v);
  if (!u.context()->same_algebra(form())) throw ContextMismatch();
  const MonomialTable& table = monomials();
  Multivector out(context());
  for (const auto& [a, ca] : u.terms()) {
    for (const auto& [m, cm] : table.wedge_in_monomials(a).terms()) {
      // e_{i1} e_{i2} ... e_{ik} v = L_{i1}(L_{i2}(... L_{ik}(v)))
      Multivector acc = v;
      const auto idx = m.indices();
      for (auto it = idx.rbegin(); it != idx.rend() && !acc.is_zero(); ++it) acc = apply_generator_impl(*it, acc);
      acc *= ca * cm;
      out += acc;
    }
  }
  return out;
}

Multivector Algebra::product(const std::vector<Multivector>& factors) const {
  Multivector acc = one();
  for (const auto& f : factors) acc = product(acc, f);
  return acc;
}

Multivector Algebra::word(const std::vector<int>& indices) const {
  Multivector acc = one();
  for (auto it = indices.rbegin(); it != indices.rend(); ++it) acc = apply_generator(*it, acc);
  return acc;
}

Multivector Algebra::commutator(const Multivector& u, const Multivector& v) const {
  return product(u, v) - product(v, u);
}

Multivector Algebra::anticommutator(const Multivector& u, const Multivector& v) const {
  return product(u, v) + product(v, u);
}

Multivector Algebra::power(const Multivector& u, unsigned k) const {
  Multivector acc = one();
  for (unsigned j = 0; j < k; ++j) acc = product(acc, u);
  return acc;
}

std::optional<Multivector> Algebra::inverse(const Multivector& u) const {
  std::vector<Scalar> unit(basis_size());
  unit[0] = 1;
  auto x = solve(regular_representation(u), unit);
  if (!x) return std::nullopt;
  auto candidate = Multivector::from_dense(context(), *x);
  if (product(u, candidate) != one() || product(candidate, u) != one()) return std::nullopt;
  return candidate;
}

Multivector Algebra::to_monomial_coordinates(const Multivector& u) const {
  if (!u.context()->same_algebra(form())) throw ContextMismatch();
  const MonomialTable& table = monomials();
  Multivector out(context());
  for (const auto& [b, c] : u.terms()) out += c * table.wedge_in_monomials(b);
  return out;
}

Multivector Algebra::from_monomial_coordinates(const Multivector& coords) const {
  if (!coords.context()->same_algebra(form())) throw ContextMismatch();
  const MonomialTable& table = monomials();
  Multivector out(context());
  for (const auto& [m, c] : coords.terms()) out += c * table.monomial_in_wedge(m);
  return out;
}

Matrix Algebra::regular_representation(const Multivector& u) const {
  const std::size_t size = basis_size();
  Matrix r(size, size);
  const bool tabulated = dim() <= ProductTable::kMaxDim;
  for (std::uint32_t b = 0; b < size; ++b) {
    const Multivector col = tabulated ? table().multiply(u, blade(Blade(b))) : product(u, blade(Blade(b)));
    for (const auto& [c, v] : col.terms()) r(c.bits, b) = v;
  }
  return r;
}

GeneratorRelationReport Algebra::verify_generator_relations(const std::vector<Multivector>& gens,
                                                            const Matrix& target) const {
  if (target.rows() != gens.size() || target.cols() != gens.size())
    throw ShapeError("target form must be k x k for k generators");
  GeneratorRelationReport report;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i; j < gens.size(); ++j) {
      Multivector residual = anticommutator(gens[i], gens[j]) - one() * (Scalar(2) * target(i, j));
      if (!residual.is_zero()) {
        report.pass = false;
        report.first_violation = std::make_pair(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
        report.residual = std::move(residual);
        return report;
      }
    }
  }
  return report;
}

}  // namespace qcl
