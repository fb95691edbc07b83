#pragma once

#include <string>

#include "sexpr/syntax.hpp"

namespace recipe::sexpr {

// Single-line rendering. Holes render as <h1>, <h2>, ...
std::string to_string(const Expr& e);

// Rendering that breaks lines once a form exceeds `width` columns.
std::string pretty(const Expr& e, std::size_t indent = 0, std::size_t width = 80);

std::string print_definition(const Definition& d);

// Deterministic program text; parse_program(print_program(p)) == p.
std::string print_program(const Program& p);

std::string quote_string(const std::string& s);

}  // namespace recipe::sexpr
