#pragma once

#include <span>

#include "lambda/term.hpp"

namespace lambda {

// Alpha-equivalence of variables x and y under their binder contexts.
// Both contexts empty: the names must match exactly (globals). Both
// non-empty: a simultaneous hit on the rightmost entries succeeds, a
// simultaneous miss recurses on the shortened contexts, and a one-sided
// hit fails (the rightmost occurrence shadows everything to its left).
// Mixed emptiness fails.
bool alpha_eq_var(std::span<const VarName> xs, std::span<const VarName> ys,
                  const VarName& x, const VarName& y);

// Alpha-equivalence of t under xs and u under ys: variables via
// alpha_eq_var, applications componentwise, abstractions by extending
// both contexts with the respective binders. Contexts of unequal length
// are legal inputs; the variable rule fails where it must.
bool alpha_eq_ctx(std::span<const VarName> xs, std::span<const VarName> ys,
                  const TermPtr& t, const TermPtr& u);

// Alpha-equivalence in the empty context.
bool alpha_eq(const TermPtr& t, const TermPtr& u);

}  // namespace lambda
