#pragma once

#include <span>

#include "lambda/subst.hpp"
#include "lambda/term.hpp"

namespace lambda {

// Names that must not be used as abstraction variables. Duplicates are
// harmless; membership is what matters.
using AvoidSet = std::vector<VarName>;

// True iff no Abs binder anywhere in t is a member of avoid. Var and App
// nodes impose nothing.
bool check_bvc(std::span<const VarName> avoid, const Term& t);

// Renames offending binders to drawn fresh names, recursing with the
// substitution machinery at the same fuel. Absent result = fuel ran out.
Fresh<TermPtr> bvc_refresh_fueled(std::uint64_t fuel, const TermPtr& t,
                                  std::span<const VarName> avoid,
                                  FreshCounter c);

// Total refresh: fuel height(t), counter seeded above both avoid and all
// variables of t. The result is alpha-equivalent to t and satisfies
// check_bvc(avoid, ·). Fuel exhaustion here is a program bug and throws.
TermPtr bvc_refresh(const TermPtr& t, std::span<const VarName> avoid);

}  // namespace lambda
