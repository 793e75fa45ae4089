#include "lambda/subst.hpp"

#include <stdexcept>

namespace lambda {

std::pair<VarName, FreshCounter> fresh_name(FreshCounter c) {
    return {VarName::from_index(c.next), FreshCounter{c.next + 1}};
}

TermPtr simple_subst(const TermPtr& t, const VarName& x, const TermPtr& u) {
    switch (t->kind()) {
    case Term::Kind::Var:
        return t->var_name() == x ? u : t;
    case Term::Kind::App:
        return mk_app(simple_subst(t->fn(), x, u), simple_subst(t->arg(), x, u));
    case Term::Kind::Abs:
        if (t->binder() == x) return t;
        return mk_abs(t->binder(), simple_subst(t->body(), x, u));
    }
    return t;
}

bool check_subst(const TermPtr& subject, const VarName& y,
                 const TermPtr& u, const TermPtr& claimed) {
    switch (subject->kind()) {
    case Term::Kind::Var:
        if (subject->var_name() == y) return term_eq(claimed, u);
        return term_eq(claimed, subject);
    case Term::Kind::App:
        if (claimed->kind() != Term::Kind::App) return false;
        return check_subst(subject->fn(), y, u, claimed->fn()) &&
               check_subst(subject->arg(), y, u, claimed->arg());
    case Term::Kind::Abs: {
        const VarName& x = subject->binder();
        const TermPtr& body = subject->body();
        if (x == y) return term_eq(claimed, subject);  // binder shields y
        if (claimed->kind() != Term::Kind::Abs) return false;
        if (!contains(free_vars(*u), x)) {
            // No capture possible; the binder must stay put.
            return claimed->binder() == x &&
                   check_subst(body, y, u, claimed->body());
        }
        // The binder occurs free in u, so the claimed binder z must be a
        // globally fresh rename. Freshness of z in the body makes the
        // intermediate rename unique: it is exactly simple_subst.
        const VarName& z = claimed->binder();
        if (z == x || z == y) return false;
        if (contains(all_vars(*u), z) || contains(all_vars(*body), z)) return false;
        const TermPtr renamed = simple_subst(body, x, mk_var(z));
        return check_subst(renamed, y, u, claimed->body());
    }
    }
    return false;
}

Fresh<TermPtr> subst_fueled(std::uint64_t fuel, const TermPtr& t,
                            const VarName& x, const TermPtr& u,
                            FreshCounter c) {
    if (fuel == 0) return {std::nullopt, c};
    switch (t->kind()) {
    case Term::Kind::Var:
        return {t->var_name() == x ? u : t, c};
    case Term::Kind::App: {
        Fresh<TermPtr> fn = subst_fueled(fuel - 1, t->fn(), x, u, c);
        if (!fn.result) return {std::nullopt, fn.counter};
        Fresh<TermPtr> arg = subst_fueled(fuel - 1, t->arg(), x, u, fn.counter);
        if (!arg.result) return {std::nullopt, arg.counter};
        return {mk_app(*fn.result, *arg.result), arg.counter};
    }
    case Term::Kind::Abs: {
        const VarName& y = t->binder();
        const TermPtr& body = t->body();
        if (y == x) return {t, c};
        if (contains(free_vars(*u), y)) {
            // Capture risk: rename the binder to a drawn fresh name
            // before substituting in the body.
            auto [z, c1] = fresh_name(c);
            Fresh<TermPtr> renamed =
                subst_fueled(fuel - 1, body, y, mk_var(z), c1);
            if (!renamed.result) return {std::nullopt, renamed.counter};
            Fresh<TermPtr> done =
                subst_fueled(fuel - 1, *renamed.result, x, u, renamed.counter);
            if (!done.result) return {std::nullopt, done.counter};
            return {mk_abs(z, *done.result), done.counter};
        }
        Fresh<TermPtr> done = subst_fueled(fuel - 1, body, x, u, c);
        if (!done.result) return {std::nullopt, done.counter};
        return {mk_abs(y, *done.result), done.counter};
    }
    }
    return {std::nullopt, c};
}

FreshCounter subst_start_counter(const Term& t, const VarName& x, const Term& u) {
    const std::uint64_t high =
        std::max({max_var_index(t), max_var_index(u), index_or_zero(x)});
    return FreshCounter{1 + high};
}

TermPtr subst(const TermPtr& t, const VarName& x, const TermPtr& u) {
    Fresh<TermPtr> r =
        subst_fueled(height(*t), t, x, u, subst_start_counter(*t, x, *u));
    if (!r.result)
        throw std::logic_error("subst: fuel exhausted despite height bound");
    return *r.result;
}

}  // namespace lambda
