#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace lambda {

// A variable is identified by its exact text. Names of the form "#<n>"
// are reserved for mechanically generated variables: from_index(n) is
// injective, to_index recovers n, and no user-written identifier lives
// in that namespace.
struct VarName {
    std::string text;

    static VarName from_index(std::uint64_t n);
    std::optional<std::uint64_t> to_index() const;

    friend bool operator==(const VarName&, const VarName&) = default;
    friend auto operator<=>(const VarName&, const VarName&) = default;
};

// Binder contexts are snoc-ordered: entries are appended at the back, so
// back() is the innermost (most recently entered) abstraction variable.
// Duplicates are allowed; the rightmost occurrence shadows earlier ones.
using Context = std::vector<VarName>;

bool contains(std::span<const VarName> names, const VarName& v);

class Term;
using TermPtr = std::shared_ptr<const Term>;

// Immutable syntax tree of the untyped lambda calculus. Nodes are shared
// freely; builders never mutate existing terms.
class Term {
public:
    enum class Kind { Var, App, Abs };

    struct VarNode { VarName name; };
    struct AppNode { TermPtr fn; TermPtr arg; };
    struct AbsNode { VarName binder; TermPtr body; };

    explicit Term(VarNode n) : node_(std::move(n)) {}
    explicit Term(AppNode n) : node_(std::move(n)) {}
    explicit Term(AbsNode n) : node_(std::move(n)) {}

    Kind kind() const { return static_cast<Kind>(node_.index()); }

    const VarName& var_name() const { return std::get<VarNode>(node_).name; }
    const TermPtr& fn() const { return std::get<AppNode>(node_).fn; }
    const TermPtr& arg() const { return std::get<AppNode>(node_).arg; }
    const VarName& binder() const { return std::get<AbsNode>(node_).binder; }
    const TermPtr& body() const { return std::get<AbsNode>(node_).body; }

private:
    std::variant<VarNode, AppNode, AbsNode> node_;
};

TermPtr mk_var(VarName name);
TermPtr mk_app(TermPtr fn, TermPtr arg);
TermPtr mk_abs(VarName binder, TermPtr body);

bool term_eq(const Term& a, const Term& b);
inline bool term_eq(const TermPtr& a, const TermPtr& b) { return term_eq(*a, *b); }

// Free variables in occurrence order, duplicates preserved: a Var yields
// itself, App concatenates, Abs filters its binder out of the body list.
std::vector<VarName> free_vars(const Term& t);

// Every variable occurrence: as free_vars, except Abs appends its binder
// after the body's list.
std::vector<VarName> all_vars(const Term& t);

// free_vars with later duplicates dropped (set view, first-seen order).
std::vector<VarName> unique_free_vars(const Term& t);

std::uint64_t height(const Term& t);

// Index of a generated variable, 0 for user names.
std::uint64_t index_or_zero(const VarName& v);
std::uint64_t max_var_index(const Term& t);
std::uint64_t max_var_index(std::span<const TermPtr> ts);
std::uint64_t max_var_index(std::span<const VarName> vs);

}  // namespace lambda
