#include "qclifford/car.hpp"

#include <array>

#include "qclifford/errors.hpp"
#include "qclifford/forms.hpp"
#include "qclifford/wick.hpp"

namespace qcl {

CarContext build_car(int n, const Matrix& a_extra, Ring ring) {
  if (n < 1) throw InputError("CAR needs n >= 1");
  const std::size_t d = 2 * static_cast<std::size_t>(n);
  if (a_extra.rows() != d || a_extra.cols() != d) throw ShapeError("A_extra must be 2n x 2n");
  if (a_extra.transpose() != Scalar(-1) * a_extra) throw InputError("A_extra must be antisymmetric");
  Matrix b = a_extra;
  for (int i = 0; i < n; ++i) {
    b(i, n + i) += Scalar(1, 2);
    b(n + i, i) += Scalar(1, 2);
  }
  return CarContext{n, Algebra(split_form(b, ring))};
}

Multivector dagger(const CarContext& car, const Multivector& u) {
  const Algebra& alg = car.algebra;
  auto swap = [&](int k) { return k <= car.n ? k + car.n : k - car.n; };
  Multivector out = alg.zero();
  const Multivector coords = alg.to_monomial_coordinates(u);
  for (const auto& [m, c] : coords.terms()) {
    const auto idx = m.indices();
    std::vector<int> word;
    for (auto it = idx.rbegin(); it != idx.rend(); ++it) word.push_back(swap(*it));
    out += c.conj() * alg.word(word);
  }
  return out;
}

Multivector fock_idempotent(const CarContext& car) {
  Multivector f = car.algebra.one();
  for (int i = 1; i <= car.n; ++i)
    f = car.algebra.product(f, car.algebra.product(car.annihilator(i), car.creator(i)));
  return f;
}

CarReport verify_car(const CarContext& car) {
  const Algebra& alg = car.algebra;
  CarReport report;
  auto expect = [&](const Multivector& value, const Scalar& target, const std::string& what) {
    if (value != alg.one() * target) {
      report.pass = false;
      report.failures.push_back(what);
    }
  };
  for (int i = 1; i <= car.n; ++i)
    for (int j = 1; j <= car.n; ++j) {
      const std::string ij = std::to_string(i) + "," + std::to_string(j);
      expect(alg.anticommutator(car.annihilator(i), car.annihilator(j)), 0, "{a_i,a_j} at " + ij);
      expect(alg.anticommutator(car.creator(i), car.creator(j)), 0, "{a_i^dagger,a_j^dagger} at " + ij);
      expect(alg.anticommutator(car.annihilator(i), car.creator(j)), Scalar(i == j ? 1 : 0),
             "{a_i,a_j^dagger} at " + ij);
    }
  return report;
}

bool U2Solution::all_pass() const {
  if (!solvable) return false;
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

using Pauli = std::array<std::array<Scalar, 2>, 2>;

std::array<Pauli, 3> pauli() {
  const Scalar i = Scalar::imaginary_unit();
  return {Pauli{{{0, 1}, {1, 0}}}, Pauli{{{0, -i}, {i, 0}}}, Pauli{{{1, 0}, {0, -1}}}};
}

// Solves [X, g] = rhs(g) for X in scalars (+) V^V over all generators g.
std::optional<Multivector> solve_commutators(const Algebra& alg, const std::vector<Multivector>& gens,
                                             const std::vector<Multivector>& rhs) {
  std::vector<Blade> unknowns{Blade::unit()};
  for (int i = 1; i <= alg.dim(); ++i)
    for (int j = i + 1; j <= alg.dim(); ++j) unknowns.push_back(Blade::of(i).with(j));
  const std::size_t size = alg.basis_size();
  Matrix m(gens.size() * size, unknowns.size());
  std::vector<Scalar> b(gens.size() * size);
  for (std::size_t g = 0; g < gens.size(); ++g) {
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
      const Multivector column = alg.commutator(alg.blade(unknowns[u]), gens[g]);
      for (const auto& [blade, c] : column.terms()) m(g * size + blade.bits, u) = c;
    }
    for (const auto& [blade, c] : rhs[g].terms()) b[g * size + blade.bits] = c;
  }
  const auto x = solve(m, b);
  if (!x) return std::nullopt;
  Multivector out = alg.zero();
  for (std::size_t u = 0; u < unknowns.size(); ++u) out.add_term(unknowns[u], (*x)[u]);
  return out;
}

}  // namespace

U2Solution solve_u2_generators(const CarContext& car) {
  if (car.n != 2) throw InputError("the U(2) relations need n = 2");
  if (car.algebra.form().ring() != Ring::Gaussian) throw InputError("the U(2) relations need the ring Q(i)");
  const Algebra& alg = car.algebra;
  const auto sigma = pauli();
  const Scalar half(1, 2);

  std::vector<Multivector> gens;
  for (int i = 1; i <= 2; ++i) gens.push_back(car.annihilator(i));
  for (int i = 1; i <= 2; ++i) gens.push_back(car.creator(i));

  auto spin_rhs = [&](int k) {
    std::vector<Multivector> rhs;
    for (int i = 0; i < 2; ++i) {
      Multivector r = alg.zero();
      for (int j = 0; j < 2; ++j) r += (-half * sigma[k][i][j]) * car.annihilator(j + 1);
      rhs.push_back(std::move(r));
    }
    for (int i = 0; i < 2; ++i) {
      Multivector r = alg.zero();
      for (int j = 0; j < 2; ++j) r += (half * sigma[k][j][i]) * car.creator(j + 1);
      rhs.push_back(std::move(r));
    }
    return rhs;
  };

  U2Solution sol;
  std::vector<Multivector> number_rhs{-gens[0], -gens[1], gens[2], gens[3]};
  sol.number = solve_commutators(alg, gens, number_rhs);
  std::array<std::optional<Multivector>, 3> spin0;
  for (int k = 0; k < 3; ++k) spin0[k] = solve_commutators(alg, gens, spin_rhs(k));
  sol.solvable = sol.number && spin0[0] && spin0[1] && spin0[2];
  if (!sol.solvable) return sol;

  // [S_k, S_l] = i S_m for cyclic (k,l,m) fixes the scalar parts.
  const Scalar i = Scalar::imaginary_unit();
  for (int m = 0; m < 3; ++m) {
    const int k = (m + 1) % 3, l = (m + 2) % 3;
    const Multivector c = alg.commutator(*spin0[k], *spin0[l]);
    const Scalar shift = (-i * c).scalar_part() - spin0[m]->scalar_part();
    sol.spin[m] = *spin0[m] + alg.one() * shift;
  }

  Multivector reference = alg.zero();
  for (int j = 1; j <= 2; ++j) reference += alg.product(car.creator(j), car.annihilator(j));
  sol.number_shift = *sol.number - reference;

  auto check = [&](std::string name, bool ok) { sol.checks.push_back(RelationCheck{std::move(name), ok}); };
  auto commutators_match = [&](const Multivector& x, const std::vector<Multivector>& rhs) {
    for (std::size_t g = 0; g < gens.size(); ++g)
      if (alg.commutator(x, gens[g]) != rhs[g]) return false;
    return true;
  };
  check("[N,a_i] = -a_i and [N,a_i^dagger] = a_i^dagger", commutators_match(*sol.number, number_rhs));
  for (int k = 0; k < 3; ++k)
    check("[S_" + std::to_string(k + 1) + ",a_i], [S_" + std::to_string(k + 1) + ",a_i^dagger]",
          commutators_match(*sol.spin[k], spin_rhs(k)));
  for (int k = 0; k < 3; ++k)
    check("[S_" + std::to_string(k + 1) + ",N] = 0", alg.commutator(*sol.spin[k], *sol.number).is_zero());
  for (int m = 0; m < 3; ++m) {
    const int k = (m + 1) % 3, l = (m + 2) % 3;
    check("[S_" + std::to_string(k + 1) + ",S_" + std::to_string(l + 1) + "] = i S_" + std::to_string(m + 1),
          alg.commutator(*sol.spin[k], *sol.spin[l]) == i * *sol.spin[m]);
  }
  sol.hermitian = dagger(car, *sol.number) == *sol.number;
  for (int k = 0; k < 3; ++k) sol.hermitian = sol.hermitian && dagger(car, *sol.spin[k]) == *sol.spin[k];
  return sol;
}

Scalar vacuum_functional(const Multivector& u) { return a_grade_project(u, 0).scalar_part(); }

}  // namespace qcl
