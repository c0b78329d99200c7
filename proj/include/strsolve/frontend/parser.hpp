#pragma once

#include <string>
#include <string_view>

#include "strsolve/frontend/term.hpp"

namespace strsolve::frontend {

/// Parses an SMT-LIB 2.6 script (UTF-8). Throws SyntaxError, SortError or
/// UnknownSymbol with a line/column position.
Script parse_script(std::string_view text);

/// Decodes the body of a string literal (between the quotes, with `""`
/// already collapsed): `\u{d..ddddd}` and `\udddd` escapes become code points.
/// Throws SortError for code points above the alphabet.
Word decode_string_literal(std::string_view body, SourcePos pos = {});

}  // namespace strsolve::frontend
