#pragma once

// Textbook λ-calculus on pure terms: capture-avoiding substitution,
// normal-order β-reduction and α-congruence. Shares nothing with the
// explicit-substitution machinery apart from the Term type.

#include <cstddef>
#include <optional>
#include <set>

#include "lalpha/term.hpp"

namespace lalpha {

std::set<Var> classical_fv(const Term& t);

/// t[x := n], renaming binders that would capture.
Term classical_subst(const Term& t, const Var& x, const Term& n);

/// Leftmost-outermost β-normal form, or nullopt once `fuel` contractions are spent.
std::optional<Term> classical_normalize(const Term& t, std::size_t fuel);

/// α-congruence: bound names may differ, free names must agree.
bool classical_alpha_eq(const Term& a, const Term& b);

}  // namespace lalpha
