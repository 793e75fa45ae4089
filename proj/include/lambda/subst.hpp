#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "lambda/term.hpp"

namespace lambda {

// Fresh-name state: every from_index(k) with k >= next is fresh for all
// terms currently in play. Counters are seeded from max-var scans and
// only ever incremented.
struct FreshCounter {
    std::uint64_t next = 0;
    friend bool operator==(const FreshCounter&, const FreshCounter&) = default;
};

// Outcome of a fuel-bounded computation threading a FreshCounter. An
// absent result means the fuel ran out; there is no other failure mode.
// A failing inner call propagates absence together with the counter it
// reached.
template <typename R>
struct Fresh {
    std::optional<R> result;
    FreshCounter counter;
};

// Draws the next generated name and advances the counter.
std::pair<VarName, FreshCounter> fresh_name(FreshCounter c);

// Textual replacement of free occurrences of x by u. A binder equal to x
// shields its body; nothing is renamed, so capture is possible.
TermPtr simple_subst(const TermPtr& t, const VarName& x, const TermPtr& u);

// The claim "substituting `replacement` for `var` in `subject` may yield
// `claimed`", where renaming an abstraction binder to any globally fresh
// name is admissible.
struct SubstJudgment {
    TermPtr subject;
    VarName var;
    TermPtr replacement;
    TermPtr claimed;
};

bool check_subst(const TermPtr& subject, const VarName& var,
                 const TermPtr& replacement, const TermPtr& claimed);
inline bool check_subst(const SubstJudgment& j) {
    return check_subst(j.subject, j.var, j.replacement, j.claimed);
}

// Capture-avoiding substitution with an explicit recursion budget. A
// binder that occurs free in u is renamed to a drawn fresh name before
// descending; the counter threads left to right through the recursion.
Fresh<TermPtr> subst_fueled(std::uint64_t fuel, const TermPtr& t,
                            const VarName& x, const TermPtr& u,
                            FreshCounter c);

// Counter strictly above every variable of t, u and x itself.
FreshCounter subst_start_counter(const Term& t, const VarName& x, const Term& u);

// Total capture-avoiding substitution: subst_fueled with fuel height(t)
// and the start counter above, which provably cannot run dry. Running
// dry anyway is a program bug and throws std::logic_error.
TermPtr subst(const TermPtr& t, const VarName& x, const TermPtr& u);

}  // namespace lambda
