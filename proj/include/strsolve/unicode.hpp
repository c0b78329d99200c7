#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace strsolve {

/// A code point of the SMT-LIB string alphabet.
using CodePoint = char32_t;

/// A word over the SMT-LIB alphabet.
using Word = std::u32string;

/// Largest code point of the SMT-LIB 2.6 string alphabet.
inline constexpr CodePoint kMaxCodePoint = 0x2FFFF;

/// Decodes UTF-8; malformed sequences are decoded byte-wise (one code point per byte).
Word utf8_decode(std::string_view text);

/// Encodes to UTF-8. Code points must be valid scalar values or surrogates.
std::string utf8_encode(const Word& word);
std::string utf8_encode(CodePoint c);

/// Renders a word as an SMT-LIB string literal including the enclosing quotes.
/// Printable ASCII stays verbatim, `"` is doubled, everything else (and `\`)
/// becomes a `\u{...}` escape.
std::string to_smtlib_literal(const Word& word);

/// Readable rendering for diagnostics and traces (no quotes, escapes non-ASCII).
std::string to_display(const Word& word);

}  // namespace strsolve
