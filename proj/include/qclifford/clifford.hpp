#pragma once

#include <memory>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "qclifford/multivector.hpp"

namespace qcl {

// Clifford monomials e_{i1}...e_{ik} (ascending indices) in the wedge basis and
// the inverse conversion. Both are unitriangular with respect to grade: the
// monomial of blade b is b itself plus strictly lower grades.
class MonomialTable {
 public:
  explicit MonomialTable(std::vector<Multivector> monomial_in_wedge, std::vector<Multivector> wedge_in_monomials)
      : monomial_in_wedge_(std::move(monomial_in_wedge)), wedge_in_monomials_(std::move(wedge_in_monomials)) {}

  const Multivector& monomial_in_wedge(Blade b) const { return monomial_in_wedge_[b.bits]; }
  // Coordinates of the wedge blade b in the monomial basis; blade labels of
  // the returned multivector name monomials, not wedge blades.
  const Multivector& wedge_in_monomials(Blade b) const { return wedge_in_monomials_[b.bits]; }

  std::size_t size() const noexcept { return monomial_in_wedge_.size(); }

  // Column b holds the coordinates of monomial b (resp. wedge blade b).
  Matrix monomial_to_wedge() const;
  Matrix wedge_to_monomial() const;

 private:
  std::vector<Multivector> monomial_in_wedge_;
  std::vector<Multivector> wedge_in_monomials_;
};

// Full blade-pair product table, built by recursion on the left blade:
// (e_i ^ a') v = e_i (a' v) - (e_i _|B a') v for i the lowest index.
class ProductTable {
 public:
  static constexpr int kMaxDim = 8;

  ProductTable(ContextPtr ctx, std::vector<Multivector> entries) : ctx_(std::move(ctx)), entries_(std::move(entries)) {}

  const Multivector& product(Blade a, Blade b) const {
    return entries_[(std::size_t{a.bits} << ctx_->dim()) | b.bits];
  }
  Multivector multiply(const Multivector& u, const Multivector& v) const;

 private:
  ContextPtr ctx_;
  std::vector<Multivector> entries_;
};

struct GeneratorRelationReport {
  bool pass = true;
  // 1-based pair (i, j), i <= j, of the first violated relation.
  std::optional<std::pair<int, int>> first_violation;
  std::optional<Multivector> residual;
};

// Cl(B,V) realized on the wedge-basis carrier space. Copies share the lazily
// built tables; construction of each table happens once, under call_once.
class Algebra {
 public:
  explicit Algebra(ContextPtr ctx);

  const ContextPtr& context() const noexcept;
  const FormContext& form() const noexcept { return *context(); }
  int dim() const noexcept { return form().dim(); }
  std::size_t basis_size() const noexcept { return std::size_t{1} << dim(); }

  Multivector zero() const { return Multivector(context()); }
  Multivector one() const { return Multivector::scalar(context(), Scalar(1)); }
  Multivector e(int i) const { return Multivector::generator(context(), i); }
  Multivector blade(Blade b, const Scalar& c = 1) const { return Multivector::blade(context(), b, c); }
  Multivector parse(std::string_view text) const;

  // L_i u = e_i _|B u + e_i ^ u.
  Multivector apply_generator(int i, const Multivector& u) const;

  // Clifford product: u is expanded in Clifford monomials and each monomial
  // acts on v as the composition of generator maps.
  Multivector product(const Multivector& u, const Multivector& v) const;
  Multivector product(const std::vector<Multivector>& factors) const;

  // Product of generators in the given (arbitrary) order.
  Multivector word(const std::vector<int>& indices) const;

  Multivector commutator(const Multivector& u, const Multivector& v) const;
  Multivector anticommutator(const Multivector& u, const Multivector& v) const;
  Multivector power(const Multivector& u, unsigned k) const;
  std::optional<Multivector> inverse(const Multivector& u) const;

  const MonomialTable& monomials() const;
  // Throws DimensionLimitError above ProductTable::kMaxDim.
  const ProductTable& table() const;

  // Monomial-basis coordinates (blade labels name monomials) and back.
  Multivector to_monomial_coordinates(const Multivector& u) const;
  Multivector from_monomial_coordinates(const Multivector& coords) const;

  // Matrix of v -> u v in the wedge-blade basis (index = blade bits).
  Matrix regular_representation(const Multivector& u) const;

  // Checks g_i g_j + g_j g_i = 2 (target)_ij 1 for all i <= j.
  GeneratorRelationReport verify_generator_relations(const std::vector<Multivector>& gens,
                                                     const Matrix& target) const;

 private:
  struct Shared;
  std::shared_ptr<Shared> shared_;
};

}  // namespace qcl
