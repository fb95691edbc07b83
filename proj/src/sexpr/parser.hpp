#pragma once

#include <string>
#include <string_view>

#include "sexpr/syntax.hpp"
#include "util/error.hpp"

namespace recipe::sexpr {

// Parses a whole program. Comment runs directly above a definition (no blank
// line in between) become that definition's CommentBlock; a comment on the
// same line after a top-level form becomes its trailing comment; comments
// inside forms are dropped. Node ids are assigned in pre-order from 1.
//
// Throws ParseError.
Program parse_program(std::string_view source);

// Parses exactly one expression (no definitions).
Expr parse_expr(std::string_view source);

// Special-form keywords that cannot name variables or functions.
bool is_reserved_word(std::string_view name);

}  // namespace recipe::sexpr
