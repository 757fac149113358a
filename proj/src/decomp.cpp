#include "qclifford/decomp.hpp"

#include <algorithm>

#include "qclifford/errors.hpp"
#include "qclifford/forms.hpp"
#include "qclifford/wick.hpp"

namespace qcl {

std::vector<int> WittSplit::m_indices() const {
  return {std::min(m_positive, m_negative), std::max(m_positive, m_negative)};
}

WittSplit witt_split(const FormContext& ctx) {
  WittSplit split;
  for (int i = 1; i <= ctx.dim(); ++i) {
    const Scalar& d = ctx.g(i, i);
    if (!d.is_real()) throw InputError("Witt split needs a real diagonal of g");
    if (d.re() > 0) split.m_positive = i;
    if (d.re() < 0) split.m_negative = i;
  }
  if (split.m_positive == 0 || split.m_negative == 0)
    throw InputError("no hyperbolic plane: g needs a positive and a negative diagonal entry");
  for (int i = 1; i <= ctx.dim(); ++i)
    if (i != split.m_positive && i != split.m_negative) split.n_indices.push_back(i);
  return split;
}

GeneratorMap periodicity_generators(const Algebra& alg, const WittSplit& split) {
  Multivector omega = alg.product(alg.e(split.m_positive), alg.e(split.m_negative));
  std::vector<Multivector> images;
  for (int i = 1; i <= alg.dim(); ++i) images.push_back(alg.e(i));
  for (int i : split.n_indices) images[i - 1] = alg.product(alg.e(i), omega);
  return GeneratorMap{split, std::move(omega), std::move(images)};
}

namespace {

Matrix restrict(const Matrix& m, const std::vector<int>& idx) {
  Matrix out(idx.size(), idx.size());
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t c = 0; c < idx.size(); ++c) out(r, c) = m(idx[r] - 1, idx[c] - 1);
  return out;
}

ContextPtr restricted_context(const FormContext& ctx, const std::vector<int>& idx) {
  return std::make_shared<const FormContext>(restrict(ctx.bilinear(), idx), restrict(ctx.symmetric(), idx),
                                             restrict(ctx.antisymmetric(), idx), ctx.ring());
}

// Evaluates the monomial expansion of u (in its own algebra) on the given
// generator images inside alg.
Multivector evaluate_on_images(const Algebra& alg, const Multivector& u, const std::vector<Multivector>& gens) {
  const Algebra source(u.context());
  Multivector out = alg.zero();
  const Multivector coords = source.to_monomial_coordinates(u);
  for (const auto& [m, c] : coords.terms()) {
    Multivector term = alg.one();
    for (int k : m.indices()) term = alg.product(term, gens[k - 1]);
    out += c * term;
  }
  return out;
}

}  // namespace

PeriodicityReport check_periodicity_map(const Algebra& alg, const WittSplit& split) {
  PeriodicityReport report{periodicity_generators(alg, split), restrict(alg.form().symmetric(), split.n_indices),
                           restrict(alg.form().symmetric(), split.m_indices()), {}, {}, true, std::nullopt, 0, false};
  std::vector<Multivector> left, right;
  for (int i : split.n_indices) left.push_back(report.map.images[i - 1]);
  for (int m : split.m_indices()) right.push_back(report.map.images[m - 1]);
  report.left_relations = alg.verify_generator_relations(left, report.left_target);
  report.right_relations = alg.verify_generator_relations(right, report.right_target);

  for (int i : split.n_indices) {
    for (int m : split.m_indices()) {
      if (!alg.commutator(report.map.images[i - 1], report.map.images[m - 1]).is_zero()) {
        report.cross_commute = false;
        report.first_noncommuting = std::make_pair(i, m);
        break;
      }
    }
    if (!report.cross_commute) break;
  }

  // Ordered monomials in the images must span the whole algebra.
  const std::size_t size = alg.basis_size();
  Matrix span(size, size);
  for (std::uint32_t bits = 0; bits < size; ++bits) {
    Multivector mono = alg.one();
    for (int k : Blade(bits).indices()) mono = alg.product(mono, report.map.images[k - 1]);
    for (const auto& [b, c] : mono.terms()) span(bits, b.bits) = c;
  }
  report.span_rank = rank(span);
  report.spans = report.span_rank == size;
  return report;
}

PeriodicityReport build_periodicity_map(int p, int q, int max_dim) {
  if (p < 1 || q < 1) throw InputError("periodicity needs p >= 1 and q >= 1");
  const int n = p + q;
  Matrix b(n, n);
  for (int i = 0; i < n; ++i) b(i, i) = Scalar(i < p ? 1 : -1);
  const Algebra alg(split_form(b, Ring::Rational, max_dim));
  return check_periodicity_map(alg, witt_split(alg.form()));
}

Multivector TensorEmbedding::embed_left(const Multivector& u) const {
  if (!u.context()->same_algebra(*left)) throw ContextMismatch();
  std::vector<Multivector> gens;
  for (int i : map.split.n_indices) gens.push_back(map.images[i - 1]);
  return evaluate_on_images(combined, u, gens);
}

Multivector TensorEmbedding::embed_right(const Multivector& v) const {
  if (!v.context()->same_algebra(*right)) throw ContextMismatch();
  std::vector<Multivector> gens;
  for (int m : map.split.m_indices()) gens.push_back(map.images[m - 1]);
  return evaluate_on_images(combined, v, gens);
}

Multivector TensorEmbedding::embed(const Multivector& u, const Multivector& v) const {
  return combined.product(embed_left(u), embed_right(v));
}

TensorEmbedding tensor_embedding(const Algebra& alg, const WittSplit& split) {
  return TensorEmbedding{restricted_context(alg.form(), split.n_indices),
                         restricted_context(alg.form(), split.m_indices()), alg,
                         periodicity_generators(alg, split)};
}

bool CommutatorWitnessReport::intact() const {
  return std::all_of(pairs.begin(), pairs.end(), [](const CrossPairWitness& w) {
    return w.anticommutator_residual.is_zero() && w.commutator_deviation.is_zero();
  });
}

CommutatorWitnessReport deformation_commutator_witness(const Algebra& alg, const WittSplit& split) {
  const Algebra reference(symmetric_context(alg.form()));
  CommutatorWitnessReport report;
  for (int i : split.n_indices) {
    for (int m : split.m_indices()) {
      const Multivector x = alg.e(i);
      const Multivector y = alg.e(m);
      Multivector residual = alg.anticommutator(x, y) - alg.one() * (Scalar(2) * alg.form().g(i, m));
      const Multivector deformed = alg.commutator(x, y);
      const Multivector classical = reference.commutator(reference.e(i), reference.e(m));
      Multivector deviation = deformed - rehome(classical, alg.context());
      report.pairs.push_back(CrossPairWitness{i, m, std::move(residual), std::move(deviation)});
    }
  }
  return report;
}

Decomposition decompose(const Algebra& alg) {
  const WittSplit split = witt_split(alg.form());
  Multivector f = bivector_from_antisym(alg.context());
  Multivector connecting = alg.zero();
  std::vector<std::pair<int, int>> coupling;
  const std::vector<int> m_idx = split.m_indices();
  auto in_m = [&](int k) { return std::find(m_idx.begin(), m_idx.end(), k) != m_idx.end(); };
  for (const auto& [b, c] : f.terms()) {
    const auto idx = b.indices();
    if (in_m(idx[0]) != in_m(idx[1])) connecting.add_term(b, c);
  }
  for (int i : split.n_indices)
    for (int m : m_idx)
      if (!alg.form().g(i, m).is_zero()) coupling.emplace_back(i, m);

  const Verdict verdict = connecting.is_zero() && coupling.empty() ? Verdict::Decomposable : Verdict::Deformed;
  return Decomposition{verdict,
                       split,
                       std::move(f),
                       std::move(connecting),
                       std::move(coupling),
                       deformation_commutator_witness(alg, split),
                       check_periodicity_map(alg, split)};
}

const char* verdict_name(Verdict v) { return v == Verdict::Decomposable ? "decomposable" : "deformed"; }

}  // namespace qcl
