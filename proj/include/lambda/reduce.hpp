#pragma once

#include <cstdint>
#include <optional>

#include "lambda/term.hpp"

namespace lambda {

enum class Strategy { NormalOrder, CallByName };

// How a redex is contracted: capture-avoiding substitution directly, or
// a refresh of the function body against the argument's free variables
// followed by simple substitution.
enum class SubstMode { CaptureAvoiding, BvcRefreshThenSimple };

struct ReductionConfig {
    Strategy strategy = Strategy::NormalOrder;
    std::uint64_t max_steps = 1000;
    SubstMode subst_mode = SubstMode::CaptureAvoiding;
};

// Contracts the leftmost-outermost redex, descending under binders.
// Absent when t is in normal form.
std::optional<TermPtr> step_beta(const TermPtr& t,
                                 SubstMode mode = SubstMode::CaptureAvoiding);

struct NormalizeResult {
    TermPtr term;
    std::uint64_t steps = 0;
    // True iff a step came back absent before the budget ran out.
    bool normal = false;
};

NormalizeResult normalize(const TermPtr& t, const ReductionConfig& cfg = {});

}  // namespace lambda
