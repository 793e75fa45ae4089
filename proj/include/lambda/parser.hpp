#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "lambda/term.hpp"

namespace lambda {

// Raised on malformed input. pos() is the 1-based byte offset of the
// offending token; what() already includes it.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t pos, const std::string& message);
    std::size_t pos() const { return pos_; }

private:
    std::size_t pos_;
};

// Grammar:
//   term   := abs | app
//   abs    := ("\" | "λ") ident "." term
//   app    := atom { atom }
//   atom   := ident | "(" term ")"
//   ident  := letter { letter | digit | "_" }
// plus "#<decimal>" (canonical, no leading zeros) for generated
// variables, so printed terms always parse back. Application is
// left-associative and an abstraction body extends as far right as
// possible.
TermPtr parse_term(std::string_view input);

// A single variable name, as used for CLI name arguments and
// comma-separated context lists. Accepts idents and canonical "#<n>".
VarName parse_var_name(std::string_view input);

}  // namespace lambda
