#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qclifford/clifford.hpp"

namespace qcl {

bool is_idempotent(const Algebra& alg, const Multivector& f);

// Basis of Cl f, extracted from {blade f} by exact elimination.
struct IdealBasis {
  Multivector idempotent;
  std::vector<Multivector> basis;
  std::size_t dimension() const noexcept { return basis.size(); }
};

// Throws NotIdempotentError unless f f = f.
IdealBasis left_ideal(const Algebra& alg, const Multivector& f);

// Basis of the corner f Cl f, extracted from {f blade f}.
struct CornerBasis {
  Multivector idempotent;
  std::vector<Multivector> basis;
  std::size_t dimension() const noexcept { return basis.size(); }
  bool primitive() const noexcept { return basis.size() == 1; }
};

CornerBasis peirce_corner(const Algebra& alg, const Multivector& f);

struct SplitOptions {
  std::uint32_t seed = 0;
  unsigned seeds = 32;             // random candidates after the corner basis
  double tolerance = 1e-9;         // root clustering and rationalization
  long max_denominator = 1000000;  // continued-fraction bound
};

enum class SplitOutcome { Primitive, Split, NoSplitFound };

const char* split_outcome_name(SplitOutcome o);

// Outcome of one corner splitting attempt. A Split certificate (f1, f2) has
// been verified exactly: f1 f1 = f1, f2 f2 = f2, f1 f2 = f2 f1 = 0,
// f1 + f2 = f, both nonzero.
struct SplitResult {
  SplitOutcome outcome = SplitOutcome::NoSplitFound;
  std::size_t corner_dimension = 0;
  unsigned candidates_tried = 0;
  std::optional<Multivector> f1;
  std::optional<Multivector> f2;
  std::optional<Multivector> witness;               // corner element z used
  std::vector<Scalar> minimal_polynomial;           // of z, low degree first
  std::vector<Scalar> factor;                       // factor of it selecting f1
  // Some candidate had two or more distinct real eigenvalues but no rational
  // factorization of its minimal polynomial: f splits over R, not over Q(i).
  bool real_split_only = false;
  std::optional<Multivector> real_witness;
  std::vector<Scalar> real_witness_polynomial;
  std::vector<std::string> transcript;
};

// Candidates z in f Cl f are the corner basis elements, then seeded random
// small-integer combinations of them. For each, the exact minimal polynomial
// m of z is split into coprime rational factors located from floating-point
// roots; the corresponding spectral idempotent is built and checked exactly.
// Throws NotIdempotentError unless f f = f.
SplitResult corner_split_search(const Algebra& alg, const Multivector& f, const SplitOptions& options = {});

struct PrimitiveDecomposition {
  std::vector<Multivector> pieces;  // pairwise orthogonal, summing to f
  // Whether every piece has a one-dimensional corner.
  bool certified = true;
};

// Repeated corner splitting until every piece is primitive or the search
// gives up on it.
PrimitiveDecomposition primitive_decomposition(const Algebra& alg, const Multivector& f,
                                               const SplitOptions& options = {});

// Polynomials with exact coefficients, lowest degree first. Exposed for tests.
namespace poly {
using Poly = std::vector<Scalar>;
void trim(Poly& p);
int degree(const Poly& p);  // -1 for zero
Poly multiply(const Poly& a, const Poly& b);
// a = q b + r; b must be nonzero.
void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
Poly monic_gcd(Poly a, Poly b);
Poly derivative(const Poly& p);
Scalar evaluate(const Poly& p, const Scalar& x);
// "t^2 - 3/4" style text in the variable t.
std::string to_text(const Poly& p);
}  // namespace poly

// Best rational approximation with denominator at most max_den.
mpq_class rationalize(double x, long max_den);

}  // namespace qcl
