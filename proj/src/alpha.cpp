#include "lambda/alpha.hpp"

#include <vector>

namespace lambda {

bool alpha_eq_var(std::span<const VarName> xs, std::span<const VarName> ys,
                  const VarName& x, const VarName& y) {
    std::size_t i = xs.size();
    std::size_t j = ys.size();
    while (i > 0 && j > 0) {
        const bool hit_left = xs[i - 1] == x;
        const bool hit_right = ys[j - 1] == y;
        if (hit_left && hit_right) return true;
        if (hit_left != hit_right) return false;
        --i;
        --j;
    }
    if (i == 0 && j == 0) return x == y;
    return false;  // exactly one context ran out
}

bool alpha_eq_ctx(std::span<const VarName> xs, std::span<const VarName> ys,
                  const TermPtr& t, const TermPtr& u) {
    // Explicit work stack instead of recursion: depth is bounded only by
    // heap, so adversarially deep inputs cannot overflow the call stack.
    // A null entry pops the binders pushed by the matching Abs pair.
    std::vector<VarName> ctx_l(xs.begin(), xs.end());
    std::vector<VarName> ctx_r(ys.begin(), ys.end());
    struct Item {
        const Term* t;
        const Term* u;
    };
    std::vector<Item> work{{t.get(), u.get()}};
    while (!work.empty()) {
        const auto [a, b] = work.back();
        work.pop_back();
        if (a == nullptr) {
            ctx_l.pop_back();
            ctx_r.pop_back();
            continue;
        }
        if (a->kind() != b->kind()) return false;
        switch (a->kind()) {
        case Term::Kind::Var:
            if (!alpha_eq_var(ctx_l, ctx_r, a->var_name(), b->var_name()))
                return false;
            break;
        case Term::Kind::App:
            work.push_back({a->arg().get(), b->arg().get()});
            work.push_back({a->fn().get(), b->fn().get()});
            break;
        case Term::Kind::Abs:
            ctx_l.push_back(a->binder());
            ctx_r.push_back(b->binder());
            work.push_back({nullptr, nullptr});
            work.push_back({a->body().get(), b->body().get()});
            break;
        }
    }
    return true;
}

bool alpha_eq(const TermPtr& t, const TermPtr& u) {
    return alpha_eq_ctx({}, {}, t, u);
}

}  // namespace lambda
