#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>

#include "lambda/term.hpp"

namespace lambda {

class NamelessTerm;
using NamelessPtr = std::shared_ptr<const NamelessTerm>;

// Binder-free term representation used only as an independent testing
// oracle: a bound variable is the distance to its binder (0 = innermost),
// a free variable keeps its name.
class NamelessTerm {
public:
    enum class Kind { Bound, Free, App, Abs };

    struct BoundNode { std::uint64_t index; };
    struct FreeNode { VarName name; };
    struct AppNode { NamelessPtr fn; NamelessPtr arg; };
    struct AbsNode { NamelessPtr body; };

    explicit NamelessTerm(BoundNode n) : node_(n) {}
    explicit NamelessTerm(FreeNode n) : node_(std::move(n)) {}
    explicit NamelessTerm(AppNode n) : node_(std::move(n)) {}
    explicit NamelessTerm(AbsNode n) : node_(std::move(n)) {}

    Kind kind() const { return static_cast<Kind>(node_.index()); }

    std::uint64_t index() const { return std::get<BoundNode>(node_).index; }
    const VarName& name() const { return std::get<FreeNode>(node_).name; }
    const NamelessPtr& fn() const { return std::get<AppNode>(node_).fn; }
    const NamelessPtr& arg() const { return std::get<AppNode>(node_).arg; }
    const NamelessPtr& body() const { return std::get<AbsNode>(node_).body; }

private:
    std::variant<BoundNode, FreeNode, AppNode, AbsNode> node_;
};

NamelessPtr nl_bound(std::uint64_t index);
NamelessPtr nl_free(VarName name);
NamelessPtr nl_app(NamelessPtr fn, NamelessPtr arg);
NamelessPtr nl_abs(NamelessPtr body);

bool nameless_eq(const NamelessTerm& a, const NamelessTerm& b);
inline bool nameless_eq(const NamelessPtr& a, const NamelessPtr& b) {
    return nameless_eq(*a, *b);
}

// Standard conversion. A variable resolves to the distance-from-right of
// its rightmost occurrence in the binder stack (ctx extended by the
// binders passed on the way down), or stays free if absent.
NamelessPtr to_nameless(std::span<const VarName> ctx, const Term& t);

// Variable-level oracle, by index arithmetic rather than rule recursion:
// equal rightmost distances, or absent from both sides of equally long
// contexts with identical names.
bool oracle_var_alpha(std::span<const VarName> xs, std::span<const VarName> ys,
                      const VarName& x, const VarName& y);

// Closed-judgment oracle: structural equality of the nameless forms.
bool oracle_alpha_closed(const Term& t, const Term& u);

// Every term of at most max_nodes AST nodes over the given names, in a
// fixed deterministic order: by node count; within a count all
// applications (left size ascending) before all abstractions (binder in
// names order), subterms in enumeration order. No duplicates.
void for_each_term(std::uint64_t max_nodes, std::span<const VarName> names,
                   const std::function<void(const TermPtr&)>& emit);
std::vector<TermPtr> enumerate_terms(std::uint64_t max_nodes,
                                     std::span<const VarName> names);

// Rendering with the term conventions; a bound variable prints as its
// index, an abstraction as "\." (it binds no name).
std::string print_nameless(const NamelessTerm& t);
inline std::string print_nameless(const NamelessPtr& t) { return print_nameless(*t); }

}  // namespace lambda
