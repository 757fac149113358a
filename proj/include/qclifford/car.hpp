#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qclifford/clifford.hpp"

namespace qcl {

// Index-doubled algebra on V (+) V*: generators 1..n are creators a_i^dagger,
// n+1..2n are annihilators a_i. B = 1/2 [[0, I], [I, 0]] + A_extra.
struct CarContext {
  int n = 0;
  Algebra algebra;

  int creator_index(int i) const { return i; }
  int annihilator_index(int i) const { return n + i; }
  Multivector creator(int i) const { return algebra.e(creator_index(i)); }
  Multivector annihilator(int i) const { return algebra.e(annihilator_index(i)); }
};

// Throws InputError unless A_extra is 2n x 2n and antisymmetric.
CarContext build_car(int n, const Matrix& a_extra, Ring ring = Ring::Rational);

// Anti-linear anti-automorphism fixing the generator set up to a_i <-> a_i^dagger:
// dagger(u v) = dagger(v) dagger(u), coefficients conjugated.
Multivector dagger(const CarContext& car, const Multivector& u);

// Product of (a_i a_i^dagger) over i.
Multivector fock_idempotent(const CarContext& car);

struct CarReport {
  bool pass = true;
  std::vector<std::string> failures;
};

// {a_i, a_j} = 0, {a_i^dagger, a_j^dagger} = 0, {a_i, a_j^dagger} = delta_ij.
CarReport verify_car(const CarContext& car);

struct RelationCheck {
  std::string name;
  bool pass = false;
};

struct U2Solution {
  bool solvable = false;
  std::optional<Multivector> number;  // N
  std::optional<Multivector> spin[3];  // S_1, S_2, S_3
  // N minus sum_i a_i^dagger a_i; a scalar when A_extra = 0.
  std::optional<Multivector> number_shift;
  std::vector<RelationCheck> checks;
  bool hermitian = false;  // N and all S_k fixed by the dagger

  bool all_pass() const;
};

// Unknowns in scalars (+) V^V. Linear relations: [N, a_i] = -a_i,
// [N, a_i^dagger] = a_i^dagger, [S_k, a_i] = -1/2 sum_j (sigma_k)_ij a_j,
// [S_k, a_i^dagger] = 1/2 sum_j (sigma_k)_ji a_j^dagger. Free scalars are set
// to zero, then the scalars of S_k are fixed by [S_k, S_l] = i eps_klm S_m.
// All relations, including [S_k, N] = 0, are then checked exactly.
// Requires n = 2 and the Gaussian ring.
U2Solution solve_u2_generators(const CarContext& car);

// Scalar coefficient of the A-graded grade-0 projection.
Scalar vacuum_functional(const Multivector& u);

}  // namespace qcl
