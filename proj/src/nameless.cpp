#include "lambda/nameless.hpp"

namespace lambda {

NamelessPtr nl_bound(std::uint64_t index) {
    return std::make_shared<const NamelessTerm>(NamelessTerm::BoundNode{index});
}
NamelessPtr nl_free(VarName name) {
    return std::make_shared<const NamelessTerm>(NamelessTerm::FreeNode{std::move(name)});
}
NamelessPtr nl_app(NamelessPtr fn, NamelessPtr arg) {
    return std::make_shared<const NamelessTerm>(
        NamelessTerm::AppNode{std::move(fn), std::move(arg)});
}
NamelessPtr nl_abs(NamelessPtr body) {
    return std::make_shared<const NamelessTerm>(NamelessTerm::AbsNode{std::move(body)});
}

bool nameless_eq(const NamelessTerm& a, const NamelessTerm& b) {
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
    case NamelessTerm::Kind::Bound:
        return a.index() == b.index();
    case NamelessTerm::Kind::Free:
        return a.name() == b.name();
    case NamelessTerm::Kind::App:
        return nameless_eq(*a.fn(), *b.fn()) && nameless_eq(*a.arg(), *b.arg());
    case NamelessTerm::Kind::Abs:
        return nameless_eq(*a.body(), *b.body());
    }
    return false;
}

namespace {

NamelessPtr convert(const Term& t, std::vector<VarName>& stack) {
    switch (t.kind()) {
    case Term::Kind::Var: {
        const VarName& v = t.var_name();
        for (std::size_t d = 0; d < stack.size(); ++d) {
            if (stack[stack.size() - 1 - d] == v) return nl_bound(d);
        }
        return nl_free(v);
    }
    case Term::Kind::App:
        return nl_app(convert(*t.fn(), stack), convert(*t.arg(), stack));
    case Term::Kind::Abs: {
        stack.push_back(t.binder());
        NamelessPtr body = convert(*t.body(), stack);
        stack.pop_back();
        return nl_abs(std::move(body));
    }
    }
    return nullptr;
}

}  // namespace

NamelessPtr to_nameless(std::span<const VarName> ctx, const Term& t) {
    std::vector<VarName> stack(ctx.begin(), ctx.end());
    return convert(t, stack);
}

bool oracle_var_alpha(std::span<const VarName> xs, std::span<const VarName> ys,
                      const VarName& x, const VarName& y) {
    const auto rightmost = [](std::span<const VarName> ctx, const VarName& v)
        -> std::optional<std::size_t> {
        for (std::size_t d = 0; d < ctx.size(); ++d) {
            if (ctx[ctx.size() - 1 - d] == v) return d;
        }
        return std::nullopt;
    };
    const auto i = rightmost(xs, x);
    const auto j = rightmost(ys, y);
    if (i && j) return *i == *j;
    if (!i && !j) return xs.size() == ys.size() && x == y;
    return false;
}

bool oracle_alpha_closed(const Term& t, const Term& u) {
    return nameless_eq(*to_nameless({}, t), *to_nameless({}, u));
}

namespace {

// Emits every term with exactly n nodes, lazily and in the documented
// order. Work is proportional to the output size; nothing is memoized.
void emit_exact(std::uint64_t n, std::span<const VarName> names,
                const std::function<void(const TermPtr&)>& emit) {
    if (n == 0) return;
    if (n == 1) {
        for (const VarName& v : names) emit(mk_var(v));
        return;
    }
    for (std::uint64_t fn_size = 1; fn_size + 1 < n; ++fn_size) {
        emit_exact(fn_size, names, [&](const TermPtr& fn) {
            emit_exact(n - 1 - fn_size, names,
                       [&](const TermPtr& arg) { emit(mk_app(fn, arg)); });
        });
    }
    for (const VarName& binder : names) {
        emit_exact(n - 1, names,
                   [&](const TermPtr& body) { emit(mk_abs(binder, body)); });
    }
}

}  // namespace

void for_each_term(std::uint64_t max_nodes, std::span<const VarName> names,
                   const std::function<void(const TermPtr&)>& emit) {
    for (std::uint64_t n = 1; n <= max_nodes; ++n) emit_exact(n, names, emit);
}

std::vector<TermPtr> enumerate_terms(std::uint64_t max_nodes,
                                     std::span<const VarName> names) {
    std::vector<TermPtr> out;
    for_each_term(max_nodes, names, [&](const TermPtr& t) { out.push_back(t); });
    return out;
}

namespace {

enum class Slot { Top, Fn, Arg };

void print_nameless_into(const NamelessTerm& t, Slot slot, std::string& out) {
    switch (t.kind()) {
    case NamelessTerm::Kind::Bound:
        out += std::to_string(t.index());
        return;
    case NamelessTerm::Kind::Free:
        out += t.name().text;
        return;
    case NamelessTerm::Kind::App: {
        const bool paren = slot == Slot::Arg;
        if (paren) out += '(';
        print_nameless_into(*t.fn(), Slot::Fn, out);
        out += ' ';
        print_nameless_into(*t.arg(), Slot::Arg, out);
        if (paren) out += ')';
        return;
    }
    case NamelessTerm::Kind::Abs: {
        const bool paren = slot != Slot::Top;
        if (paren) out += '(';
        out += "\\. ";
        print_nameless_into(*t.body(), Slot::Top, out);
        if (paren) out += ')';
        return;
    }
    }
}

}  // namespace

std::string print_nameless(const NamelessTerm& t) {
    std::string out;
    print_nameless_into(t, Slot::Top, out);
    return out;
}

}  // namespace lambda
