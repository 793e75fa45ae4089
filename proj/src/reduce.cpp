#include "lambda/reduce.hpp"

#include "lambda/bvc.hpp"
#include "lambda/subst.hpp"

namespace lambda {

namespace {

TermPtr contract(const Term& redex, SubstMode mode) {
    const Term& abs = *redex.fn();
    const TermPtr& arg = redex.arg();
    const VarName& param = abs.binder();
    const TermPtr& body = abs.body();
    if (mode == SubstMode::CaptureAvoiding) return subst(body, param, arg);
    // Refresh against exactly the names simple substitution must not
    // capture: the argument's free variables and the parameter itself.
    AvoidSet avoid = free_vars(*arg);
    avoid.push_back(param);
    return simple_subst(bvc_refresh(body, avoid), param, arg);
}

std::optional<TermPtr> step_normal(const TermPtr& t, SubstMode mode) {
    switch (t->kind()) {
    case Term::Kind::Var:
        return std::nullopt;
    case Term::Kind::App:
        if (t->fn()->kind() == Term::Kind::Abs) return contract(*t, mode);
        if (auto fn = step_normal(t->fn(), mode)) return mk_app(*fn, t->arg());
        if (auto arg = step_normal(t->arg(), mode)) return mk_app(t->fn(), *arg);
        return std::nullopt;
    case Term::Kind::Abs:
        if (auto body = step_normal(t->body(), mode))
            return mk_abs(t->binder(), *body);
        return std::nullopt;
    }
    return std::nullopt;
}

// Call-by-name: only the head function position is reduced; no descent
// under binders or into arguments.
std::optional<TermPtr> step_cbn(const TermPtr& t, SubstMode mode) {
    if (t->kind() != Term::Kind::App) return std::nullopt;
    if (t->fn()->kind() == Term::Kind::Abs) return contract(*t, mode);
    if (auto fn = step_cbn(t->fn(), mode)) return mk_app(*fn, t->arg());
    return std::nullopt;
}

}  // namespace

std::optional<TermPtr> step_beta(const TermPtr& t, SubstMode mode) {
    return step_normal(t, mode);
}

NormalizeResult normalize(const TermPtr& t, const ReductionConfig& cfg) {
    TermPtr cur = t;
    for (std::uint64_t i = 0; i < cfg.max_steps; ++i) {
        const auto next = cfg.strategy == Strategy::NormalOrder
                              ? step_normal(cur, cfg.subst_mode)
                              : step_cbn(cur, cfg.subst_mode);
        if (!next) return {cur, i, true};
        cur = *next;
    }
    return {cur, cfg.max_steps, false};
}

}  // namespace lambda
