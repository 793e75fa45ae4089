#include "lambda/bvc.hpp"

#include <algorithm>
#include <stdexcept>

namespace lambda {

bool check_bvc(std::span<const VarName> avoid, const Term& t) {
    switch (t.kind()) {
    case Term::Kind::Var:
        return true;
    case Term::Kind::App:
        return check_bvc(avoid, *t.fn()) && check_bvc(avoid, *t.arg());
    case Term::Kind::Abs:
        return !contains(avoid, t.binder()) && check_bvc(avoid, *t.body());
    }
    return true;
}

Fresh<TermPtr> bvc_refresh_fueled(std::uint64_t fuel, const TermPtr& t,
                                  std::span<const VarName> avoid,
                                  FreshCounter c) {
    if (fuel == 0) return {std::nullopt, c};
    switch (t->kind()) {
    case Term::Kind::Var:
        return {t, c};
    case Term::Kind::App: {
        Fresh<TermPtr> fn = bvc_refresh_fueled(fuel - 1, t->fn(), avoid, c);
        if (!fn.result) return {std::nullopt, fn.counter};
        Fresh<TermPtr> arg = bvc_refresh_fueled(fuel - 1, t->arg(), avoid, fn.counter);
        if (!arg.result) return {std::nullopt, arg.counter};
        return {mk_app(*fn.result, *arg.result), arg.counter};
    }
    case Term::Kind::Abs: {
        const VarName& y = t->binder();
        const TermPtr& body = t->body();
        if (contains(avoid, y)) {
            // Offending binder: rename it to a drawn fresh name, then
            // refresh the renamed body under the same fuel.
            auto [y2, c1] = fresh_name(c);
            Fresh<TermPtr> renamed = subst_fueled(fuel - 1, body, y, mk_var(y2), c1);
            if (!renamed.result) return {std::nullopt, renamed.counter};
            Fresh<TermPtr> done =
                bvc_refresh_fueled(fuel - 1, *renamed.result, avoid, renamed.counter);
            if (!done.result) return {std::nullopt, done.counter};
            return {mk_abs(y2, *done.result), done.counter};
        }
        Fresh<TermPtr> done = bvc_refresh_fueled(fuel - 1, body, avoid, c);
        if (!done.result) return {std::nullopt, done.counter};
        return {mk_abs(y, *done.result), done.counter};
    }
    }
    return {std::nullopt, c};
}

TermPtr bvc_refresh(const TermPtr& t, std::span<const VarName> avoid) {
    const FreshCounter start{1 + std::max(max_var_index(avoid), max_var_index(*t))};
    Fresh<TermPtr> r = bvc_refresh_fueled(height(*t), t, avoid, start);
    if (!r.result)
        throw std::logic_error("bvc_refresh: fuel exhausted despite height bound");
    return *r.result;
}

}  // namespace lambda
