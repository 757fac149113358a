#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qclifford/clifford.hpp"

namespace qcl {

// V = N (+) M with M a hyperbolic plane. Indices are 1-based and ascending.
struct WittSplit {
  std::vector<int> n_indices;
  int m_positive = 0;
  int m_negative = 0;

  std::vector<int> m_indices() const;
};

// Picks M = {last index with g_ii > 0, last index with g_ii < 0}. Only the
// diagonal of g is consulted; the split is g-orthogonal when g is diagonal.
// Throws InputError when either sign is missing.
WittSplit witt_split(const FormContext& ctx);

// Images of the generators under e_i -> e_i w (i in N), e_m -> e_m (m in M),
// where w = e_{m+} e_{m-} squares to 1.
struct GeneratorMap {
  WittSplit split;
  Multivector omega;
  std::vector<Multivector> images;  // indexed by generator, 0-based
};

GeneratorMap periodicity_generators(const Algebra& alg, const WittSplit& split);

// Relations are checked factor by factor: the N-images against g restricted
// to N, the M generators against g restricted to M. Across the factors the
// images commute (ungraded tensor product) instead of anticommuting.
struct PeriodicityReport {
  GeneratorMap map;
  Matrix left_target;
  Matrix right_target;
  GeneratorRelationReport left_relations;   // pairs numbered within N
  GeneratorRelationReport right_relations;  // pairs numbered within M
  bool cross_commute = true;                // every N-image commutes with every M-image
  std::optional<std::pair<int, int>> first_noncommuting;
  std::size_t span_rank = 0;          // rank of the 2^n ordered image monomials
  bool spans = false;

  bool all_pass() const { return left_relations.pass && right_relations.pass && cross_commute && spans; }
};

// Checks the generator map on the given algebra.
PeriodicityReport check_periodicity_map(const Algebra& alg, const WittSplit& split);

// Classical case: diagonal g with p entries +1 followed by q entries -1, A = 0.
PeriodicityReport build_periodicity_map(int p, int q, int max_dim = kDefaultMaxDim);

// The combined algebra viewed as left (x) right through the generator map.
// Left elements are evaluated as monomial expressions in the N-images, right
// elements as the same expressions in the M generators.
struct TensorEmbedding {
  ContextPtr left;
  ContextPtr right;
  Algebra combined;
  GeneratorMap map;

  Multivector embed_left(const Multivector& u) const;
  Multivector embed_right(const Multivector& v) const;
  // embed_left(u) * embed_right(v).
  Multivector embed(const Multivector& u, const Multivector& v) const;
};

// Restrictions of B to N and to M as factor contexts.
TensorEmbedding tensor_embedding(const Algebra& alg, const WittSplit& split);

struct CrossPairWitness {
  int n_index = 0;
  int m_index = 0;
  Multivector anticommutator_residual;  // x y + y x - 2 g(x,y), zero in any Cl(B)
  Multivector commutator_deviation;     // (x y - y x) minus the same in Cl(g)
};

struct CommutatorWitnessReport {
  std::vector<CrossPairWitness> pairs;  // all N x M pairs, N-major order
  bool intact() const;
};

CommutatorWitnessReport deformation_commutator_witness(const Algebra& alg, const WittSplit& split);

enum class Verdict { Decomposable, Deformed };

struct Decomposition {
  Verdict verdict = Verdict::Decomposable;
  WittSplit split;
  Multivector bivector;    // F
  Multivector connecting;  // N x M terms of F
  // N x M pairs with g_ij != 0; the split is then not g-orthogonal.
  std::vector<std::pair<int, int>> g_coupling;
  CommutatorWitnessReport witness;
  PeriodicityReport periodicity;
};

// Deformed when F has N x M terms or g couples N and M. Throws
// DegenerateFormError for singular g.
Decomposition decompose(const Algebra& alg);

const char* verdict_name(Verdict v);

}  // namespace qcl
