#pragma once

#include <string>

#include "lambda/term.hpp"

namespace lambda {

// Minimal-parentheses rendering: application is left-associative, an
// abstraction body extends maximally right, '\' introduces a binder.
// parse_term(print_term(t)) reproduces t exactly.
std::string print_term(const Term& t);
inline std::string print_term(const TermPtr& t) { return print_term(*t); }

}  // namespace lambda
