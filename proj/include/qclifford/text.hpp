#pragma once

#include <string>
#include <string_view>

#include "qclifford/multivector.hpp"

namespace qcl {

// Multivector text syntax.
//
//   expr   := [+|-] term { (+|-) term }
//   term   := factor { '*' factor }          at most one non-scalar factor
//   factor := rational | 'i' | 'Id' | blade | '(' expr ')'
//   blade  := 'e'<k> { '^' 'e'<k> }           1 <= k <= dim, any order
//
// "Id" is the unit blade. Blades written out of order pick up the permutation
// sign and repeated indices give zero. Whitespace between tokens is ignored.
Multivector parse_multivector(const ContextPtr& ctx, std::string_view text);

// Canonical rendering: terms in ascending blade bit order, scalar terms as a
// bare coefficient, unit coefficients elided ("1 + e1^e2", "-1/2",
// "3/2*e1^e3 - e2"). parse_multivector(to_text(u)) == u.
std::string to_text(const Multivector& u);

std::string blade_to_text(Blade b);

}  // namespace qcl
