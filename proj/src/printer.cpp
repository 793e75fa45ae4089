#include "lambda/printer.hpp"

namespace lambda {

namespace {

// Where a subterm sits, for parenthesization: Top (whole term or an
// abstraction body), the function slot of an application, or the
// argument slot.
enum class Slot { Top, Fn, Arg };

void print_into(const Term& t, Slot slot, std::string& out) {
    switch (t.kind()) {
    case Term::Kind::Var:
        out += t.var_name().text;
        return;
    case Term::Kind::App: {
        const bool paren = slot == Slot::Arg;  // application is left-associative
        if (paren) out += '(';
        print_into(*t.fn(), Slot::Fn, out);
        out += ' ';
        print_into(*t.arg(), Slot::Arg, out);
        if (paren) out += ')';
        return;
    }
    case Term::Kind::Abs: {
        const bool paren = slot != Slot::Top;  // a body extends maximally right
        if (paren) out += '(';
        out += '\\';
        out += t.binder().text;
        out += ". ";
        print_into(*t.body(), Slot::Top, out);
        if (paren) out += ')';
        return;
    }
    }
}

}  // namespace

std::string print_term(const Term& t) {
    std::string out;
    print_into(t, Slot::Top, out);
    return out;
}

}  // namespace lambda
