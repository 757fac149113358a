#pragma once

#include "qclifford/multivector.hpp"

namespace qcl {

Multivector wedge(const Multivector& u, const Multivector& v);

// Grade-k terms times (-1)^k.
Multivector grade_involution(const Multivector& u);
// Grade-k terms times (-1)^(k(k-1)/2).
Multivector reversion(const Multivector& u);
// Complex conjugation of coefficients; identity in the rational ring.
Multivector conjugate_coefficients(const Multivector& u);

// e_i _| u with respect to the chosen part of B, accumulated into out with
// the given factor. One Leibniz pass over the blades of u.
void accumulate_generator_contraction(int i, const Multivector& u, FormPart part,
                                      const Scalar& factor, Multivector& out);

// Left contraction x _|_M u, M in {B, g, A}. Vector left arguments use the
// graded Leibniz rule; wedges on the left nest as (a^b)_|w = a_|(b_|w); a
// scalar left argument acts by multiplication.
Multivector contract_left(const Multivector& x, const Multivector& u, FormPart part = FormPart::Full);

// Bilinear form evaluated on two vectors (grade-1 parts only).
Scalar evaluate_form(const Multivector& x, const Multivector& y, FormPart part = FormPart::Full);

}  // namespace qcl
