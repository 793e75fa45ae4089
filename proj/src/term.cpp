#include "lambda/term.hpp"

#include <algorithm>
#include <charconv>

namespace lambda {

VarName VarName::from_index(std::uint64_t n) {
    return VarName{"#" + std::to_string(n)};
}

std::optional<std::uint64_t> VarName::to_index() const {
    if (text.size() < 2 || text[0] != '#') return std::nullopt;
    const std::string_view digits = std::string_view(text).substr(1);
    if (digits.size() > 1 && digits[0] == '0') return std::nullopt;  // non-canonical
    std::uint64_t value = 0;
    const auto* end = digits.data() + digits.size();
    const auto [ptr, ec] = std::from_chars(digits.data(), end, value);
    if (ec != std::errc{} || ptr != end) return std::nullopt;
    return value;
}

bool contains(std::span<const VarName> names, const VarName& v) {
    return std::find(names.begin(), names.end(), v) != names.end();
}

TermPtr mk_var(VarName name) {
    return std::make_shared<const Term>(Term::VarNode{std::move(name)});
}

TermPtr mk_app(TermPtr fn, TermPtr arg) {
    return std::make_shared<const Term>(Term::AppNode{std::move(fn), std::move(arg)});
}

TermPtr mk_abs(VarName binder, TermPtr body) {
    return std::make_shared<const Term>(Term::AbsNode{std::move(binder), std::move(body)});
}

bool term_eq(const Term& a, const Term& b) {
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
    case Term::Kind::Var:
        return a.var_name() == b.var_name();
    case Term::Kind::App:
        return term_eq(*a.fn(), *b.fn()) && term_eq(*a.arg(), *b.arg());
    case Term::Kind::Abs:
        return a.binder() == b.binder() && term_eq(*a.body(), *b.body());
    }
    return false;
}

std::vector<VarName> free_vars(const Term& t) {
    switch (t.kind()) {
    case Term::Kind::Var:
        return {t.var_name()};
    case Term::Kind::App: {
        std::vector<VarName> out = free_vars(*t.fn());
        std::vector<VarName> rhs = free_vars(*t.arg());
        out.insert(out.end(), rhs.begin(), rhs.end());
        return out;
    }
    case Term::Kind::Abs: {
        std::vector<VarName> out = free_vars(*t.body());
        std::erase(out, t.binder());
        return out;
    }
    }
    return {};
}

std::vector<VarName> all_vars(const Term& t) {
    switch (t.kind()) {
    case Term::Kind::Var:
        return {t.var_name()};
    case Term::Kind::App: {
        std::vector<VarName> out = all_vars(*t.fn());
        std::vector<VarName> rhs = all_vars(*t.arg());
        out.insert(out.end(), rhs.begin(), rhs.end());
        return out;
    }
    case Term::Kind::Abs: {
        std::vector<VarName> out = all_vars(*t.body());
        out.push_back(t.binder());
        return out;
    }
    }
    return {};
}

std::vector<VarName> unique_free_vars(const Term& t) {
    std::vector<VarName> out;
    for (VarName& v : free_vars(t)) {
        if (!contains(out, v)) out.push_back(std::move(v));
    }
    return out;
}

std::uint64_t height(const Term& t) {
    switch (t.kind()) {
    case Term::Kind::Var:
        return 1;
    case Term::Kind::App:
        return 1 + std::max(height(*t.fn()), height(*t.arg()));
    case Term::Kind::Abs:
        return 1 + height(*t.body());
    }
    return 0;
}

std::uint64_t index_or_zero(const VarName& v) {
    return v.to_index().value_or(0);
}

std::uint64_t max_var_index(const Term& t) {
    switch (t.kind()) {
    case Term::Kind::Var:
        return index_or_zero(t.var_name());
    case Term::Kind::App:
        return std::max(max_var_index(*t.fn()), max_var_index(*t.arg()));
    case Term::Kind::Abs:
        return std::max(index_or_zero(t.binder()), max_var_index(*t.body()));
    }
    return 0;
}

std::uint64_t max_var_index(std::span<const TermPtr> ts) {
    std::uint64_t best = 0;
    for (const TermPtr& t : ts) best = std::max(best, max_var_index(*t));
    return best;
}

std::uint64_t max_var_index(std::span<const VarName> vs) {
    std::uint64_t best = 0;
    for (const VarName& v : vs) best = std::max(best, index_or_zero(v));
    return best;
}

}  // namespace lambda
