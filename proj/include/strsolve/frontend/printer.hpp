#pragma once

#include <string>

#include "strsolve/frontend/term.hpp"

namespace strsolve::frontend {

std::string print_term(const Term& t);
std::string print_command(const Command& c);
/// One command per line; parse(print_script(s)) is structurally equal to s.
std::string print_script(const Script& s);
/// SMT-LIB integer literal; negatives use the `(- n)` form.
std::string print_int(std::int64_t v);

}  // namespace strsolve::frontend
